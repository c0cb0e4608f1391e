"""Capped homological invariants of modules and algebras."""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from algebras.algebra import Algebra, opposite
from config.config_loader import default_cap
from modrep.hom import is_reflexive_by_evaluation, is_torsionless_by_evaluation
from modrep.module import Module, dual, regular_module, simple_modules
from homology.derived import ext_dims, transpose
from homology.dimension import DimensionValue, dimension_max
from homology.resolutions import inj_coresolution, proj_resolution
from utils.utils import DisagreementDetected

logger = logging.getLogger(__name__)


def dominant_dimension(m: Module, cap: Optional[int] = None) -> DimensionValue:
    """Least n <= cap such that I_n in the minimal injective coresolution is not projective."""
    cap = default_cap(cap)
    if m.dim == 0:
        return DimensionValue.at_least(cap + 1, cap)
    cores = inj_coresolution(m, cap)
    n = cores.first_nonprojective()
    if n is None:
        return DimensionValue.at_least(cap + 1, cap)
    return DimensionValue.exact(n, cap)


def algebra_dominant_dimension(a: Algebra, cap: Optional[int] = None) -> DimensionValue:
    return dominant_dimension(regular_module(a), cap)


def projective_dimension(m: Module, cap: Optional[int] = None) -> DimensionValue:
    """Least n <= cap with Omega^{n+1}(M) = 0."""
    cap = default_cap(cap)
    if m.dim == 0:
        return DimensionValue.exact(0, cap)
    res = proj_resolution(m, cap)
    for n in range(cap + 1):
        if res.syzygy(n + 1).dim == 0:
            return DimensionValue.exact(n, cap)
    return DimensionValue.at_least(cap + 1, cap)


def injective_dimension(m: Module, cap: Optional[int] = None) -> DimensionValue:
    return projective_dimension(dual(m), cap)


def global_dimension(a: Algebra, cap: Optional[int] = None) -> DimensionValue:
    """Maximum projective dimension of the simple modules."""
    cap = default_cap(cap)
    values = [projective_dimension(s, cap) for s in simple_modules(a)]
    result = dimension_max(*values)
    return DimensionValue(result.kind, result.value, cap)


pd = projective_dimension
gldim = global_dimension


def n_torsionfree(m: Module, n: int) -> bool:
    """Ext^i(Tr M, A) = 0 for i = 1..n."""
    if n <= 0:
        return True
    tr = transpose(m)
    if tr.dim == 0:
        return True
    dims = ext_dims(tr, regular_module(opposite(m.algebra)), n)
    return not any(dims[1:])


def torsionfree_degree(m: Module, cap: Optional[int] = None) -> DimensionValue:
    """Largest n <= cap such that M is n-torsionfree."""
    cap = default_cap(cap)
    tr = transpose(m)
    if tr.dim == 0:
        return DimensionValue.at_least(cap + 1, cap)
    dims = ext_dims(tr, regular_module(opposite(m.algebra)), cap)
    for i in range(1, cap + 1):
        if dims[i]:
            return DimensionValue.exact(i - 1, cap)
    return DimensionValue.at_least(cap + 1, cap)


def torsionless(m: Module) -> bool:
    """1-torsionfree, cross-checked against injectivity of the evaluation map.

    Raises:
        DisagreementDetected: the two characterizations differ
    """
    by_ext = n_torsionfree(m, 1)
    by_ev = is_torsionless_by_evaluation(m)
    if by_ext != by_ev:
        raise DisagreementDetected("torsionless: Ext criterion and evaluation map disagree",
                                   {"ext": by_ext, "evaluation": by_ev})
    return by_ext


def reflexive(m: Module) -> bool:
    """2-torsionfree, cross-checked against bijectivity of the evaluation map.

    Raises:
        DisagreementDetected: the two characterizations differ
    """
    by_ext = n_torsionfree(m, 2)
    by_ev = is_reflexive_by_evaluation(m)
    if by_ext != by_ev:
        raise DisagreementDetected("reflexive: Ext criterion and evaluation map disagree",
                                   {"ext": by_ext, "evaluation": by_ev})
    return by_ext


@dataclass
class GorensteinVerdict:
    """Result of the bounded Gorenstein projectivity test."""

    holds: bool
    bound: int
    ext_dims: List[int]
    transpose_ext_dims: List[int]
    first_failure: Optional[Dict[str, int]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "holds_up_to_bound": self.holds,
            "bound": self.bound,
            "ext_M_A": self.ext_dims,
            "ext_TrM_A": self.transpose_ext_dims,
            "first_failure": self.first_failure,
        }


def gorenstein_projective_up_to(m: Module, bound: Optional[int] = None) -> GorensteinVerdict:
    """Ext^i(M, A) = 0 = Ext^i(Tr M, A) for i = 1..bound."""
    bound = default_cap(bound)
    a = m.algebra
    left = ext_dims(m, regular_module(a), bound)[1:]
    tr = transpose(m)
    if tr.dim:
        right = ext_dims(tr, regular_module(opposite(a)), bound)[1:]
    else:
        right = [0] * bound
    failure = None
    for i in range(bound):
        if left[i] or right[i]:
            failure = {"degree": i + 1, "ext_M_A": left[i], "ext_TrM_A": right[i]}
            break
    return GorensteinVerdict(failure is None, bound, left, right, failure)
