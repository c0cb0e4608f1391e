"""Exact ground fields: the rationals and prime fields F_p.

Scalars are sympy domain elements of ``FieldSpec.domain``; conversion to
plain Python values (``int`` residues or ``Fraction``) happens only at the
JSON and reporting boundary.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Optional, Union

from sympy import isprime
from sympy.polys.domains import GF, QQ

from utils.utils import FieldMismatch, SchemaError

PythonScalar = Union[int, Fraction]


@lru_cache(maxsize=None)
def _domain_for(characteristic: int):
    if characteristic == 0:
        return QQ
    return GF(characteristic, symmetric=False)


@dataclass(frozen=True)
class FieldSpec:
    """A ground field named by its characteristic (0 means QQ)."""

    characteristic: int

    def __post_init__(self):
        c = self.characteristic
        if not isinstance(c, int) or c < 0:
            raise SchemaError(f"field characteristic must be a non-negative integer, got {c!r}")
        if c != 0 and (c >= 2 ** 31 or not isprime(c)):
            raise SchemaError(f"field characteristic must be 0 or a prime < 2^31, got {c}")

    @property
    def domain(self):
        return _domain_for(self.characteristic)

    @property
    def order(self) -> Optional[int]:
        """Number of elements, or None for the rationals."""
        return self.characteristic or None

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    def scalar(self, value: Any):
        """Convert an int, Fraction or "p/q" string to a field element."""
        if isinstance(value, str):
            value = parse_rational(value)
        K = self.domain
        if isinstance(value, Fraction):
            num, den = value.numerator, value.denominator
        elif isinstance(value, int):
            num, den = value, 1
        else:
            # already a domain element (or a sympy number)
            return K.convert(value)
        if self.characteristic == 0:
            return K(num, den)
        if den % self.characteristic == 0:
            raise SchemaError(f"denominator {den} vanishes in characteristic {self.characteristic}")
        return K.quo(K(num), K(den))

    def to_python(self, element) -> PythonScalar:
        """Canonical Python value: residue 0..p-1 or an exact Fraction."""
        K = self.domain
        if self.characteristic == 0:
            return Fraction(int(K.numer(element)), int(K.denom(element)))
        return int(K.to_int(element)) % self.characteristic

    def to_json(self, element) -> Union[int, str]:
        value = self.to_python(element)
        if isinstance(value, Fraction):
            if value.denominator == 1:
                return int(value.numerator)
            return f"{value.numerator}/{value.denominator}"
        return value

    def check_same(self, other: "FieldSpec") -> None:
        if self != other:
            raise FieldMismatch(
                f"characteristic {self.characteristic} vs {other.characteristic}"
            )

    def __str__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"F_{self.characteristic}"


def parse_rational(text: str) -> Fraction:
    """Parse "a", "-a" or "a/b" into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise SchemaError(f"not a rational number: {text!r}")


def default_field(characteristic: Optional[int] = None) -> FieldSpec:
    """Field from an explicit characteristic or the configured default."""
    if characteristic is None:
        from config.config_loader import get_config
        characteristic = int(get_config().get('field.characteristic', 101))
    return FieldSpec(int(characteristic))
