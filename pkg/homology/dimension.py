"""Capped homological dimensions.

Every dimension that could be infinite is computed up to a cap. A value that
was not reached within the cap is reported as ``at_least(cap + 1)`` and never
as infinity.
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional

EXACT = "exact"
AT_LEAST = "at_least"


@dataclass(frozen=True)
class DimensionValue:
    """An exact value, or a lower bound reached by running into the cap."""

    kind: str
    value: int
    cap: Optional[int] = None

    @classmethod
    def exact(cls, n: int, cap: Optional[int] = None) -> 'DimensionValue':
        return cls(EXACT, int(n), cap)

    @classmethod
    def at_least(cls, n: int, cap: Optional[int] = None) -> 'DimensionValue':
        return cls(AT_LEAST, int(n), cap)

    @property
    def is_exact(self) -> bool:
        return self.kind == EXACT

    def at_least_n(self, n: int) -> Optional[bool]:
        """Whether the dimension is >= n; None when the cap hides the answer."""
        if self.is_exact:
            return self.value >= n
        return True if n <= self.value else None

    def compatible_with(self, other: 'DimensionValue') -> bool:
        """Whether both values can describe the same number."""
        if self.is_exact and other.is_exact:
            return self.value == other.value
        if self.is_exact:
            return self.value >= other.value
        if other.is_exact:
            return other.value >= self.value
        return True

    def __le__(self, other: 'DimensionValue') -> bool:
        # used for maxima: an open bound dominates every exact value at or below it
        return (self.value, self.kind == AT_LEAST) <= (other.value, other.kind == AT_LEAST)

    def __lt__(self, other: 'DimensionValue') -> bool:
        return self <= other and self != other

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"kind": self.kind, "value": self.value}
        if self.cap is not None:
            out["cap"] = self.cap
        return out

    def __str__(self) -> str:
        if self.is_exact:
            return str(self.value)
        return f">= {self.value} (cap {self.cap})"


def dimension_max(*values: DimensionValue) -> DimensionValue:
    """Maximum of capped dimensions; exact(0) for an empty family."""
    if not values:
        return DimensionValue.exact(0)
    return max(values)
