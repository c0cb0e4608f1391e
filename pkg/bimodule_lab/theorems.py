"""Checkers for the characterizations of dominant dimension through bimodules.

Every checker computes the same property along independent routes and
reports whether the routes agree. A disagreement is an implementation bug
and is raised as DisagreementDetected when ``strict`` is set.
"""

import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Any, Dict, List, Optional, Sequence

from algebras.algebra import Algebra, corner_algebra
from config.config_loader import default_cap
from exactlin import matrix as ml
from modrep.bimodule import restrict_first, swap_factors
from modrep.hom import evaluation_map
from modrep.isomorphism import IsoVerdict, find_monomorphism
from modrep.module import Module, coregular_module, regular_module
from modrep.projectives import ProjectiveModule, projective_injective_vertices
from modrep.tensor import tensor_over
from homology.derived import ext_dims, higher_transpose
from homology.dimension import DimensionValue
from homology.invariants import algebra_dominant_dimension, n_torsionfree, torsionless
from homology.mho import strip_projective_summands
from homology.resolutions import syzygy
from bimodule_lab.bimodules import (canonical_module, coregular_bimodule, double_dual_side,
                                    escalated_verdict, regular_bimodule)
from utils.utils import DisagreementDetected, PreconditionError

logger = logging.getLogger(__name__)


def _agree(values: Sequence[Optional[bool]]) -> bool:
    """Decided values coincide; None means undecided within the cap."""
    decided = {v for v in values if v is not None}
    return len(decided) <= 1


@dataclass
class TheoremReport:
    """Verdicts of the equivalent conditions for domdim(A) >= n."""

    algebra: str
    n: int
    cap: int
    domdim: Optional[bool]
    torsionfree: bool
    syzygy: bool
    witness: Optional[IsoVerdict] = None
    agreement: bool = True

    def to_dict(self) -> Dict[str, Any]:
        if self.witness is not None:
            syzygy_entry: Any = self.witness.to_dict()
        else:
            syzygy_entry = {"torsionless": self.syzygy}
        return {
            "algebra": self.algebra,
            "theorem": "main-theorem",
            "n": self.n,
            "conditions": {
                "domdim": self.domdim,
                "torsionfree": self.torsionfree,
                "nth_syzygy": self.syzygy,
                "syzygy_iso": syzygy_entry,
            },
            "cap": self.cap,
            "agreement": self.agreement,
        }


def syzygy_of_translate(a: Algebra, n: int) -> Module:
    """Omega^n(Tr Omega^{n-2}(V)) for V read as a right A^e-module, a bimodule again."""
    if n < 2:
        raise PreconditionError(f"need n >= 2, got {n}")
    v_right = swap_factors(canonical_module(a))
    j = higher_transpose(syzygy(v_right, n - 2), 0)
    result = syzygy(j, n)
    result.name = f"Omega^{n}(J_{n - 2}(V))"
    return result


def check_main_theorem(a: Algebra, n_max: int, cap: Optional[int] = None, strict: bool = True,
                       trials: Optional[int] = None, seed: Optional[int] = None) -> List[TheoremReport]:
    """For n = 1..n_max: domdim(A) >= n, A is n-torsionfree as a bimodule, A = Omega^n(J_{n-2}(V)).

    For n = 1 the last condition is replaced by torsionlessness of the
    regular bimodule, and "A is an n-th syzygy" is witnessed by the same
    isomorphism. Projective bimodule summands, which only semisimple blocks
    have, are split off before the comparison.

    Raises:
        PreconditionError: n_max < 1
        DisagreementDetected: some n has conditions that disagree, when strict
    """
    if n_max < 1:
        raise PreconditionError(f"n_max must be at least 1, got {n_max}")
    cap = default_cap(cap)
    domdim = algebra_dominant_dimension(a, cap)
    reg = regular_bimodule(a)
    core, _ = strip_projective_summands(reg)
    reports: List[TheoremReport] = []
    for n in range(1, n_max + 1):
        dd = domdim.at_least_n(n)
        tf = n_torsionfree(reg, n)
        if n == 1:
            report = TheoremReport(a.fingerprint, n, cap, dd, tf, torsionless(reg))
        else:
            witness = escalated_verdict(core, syzygy_of_translate(a, n), trials, seed)
            report = TheoremReport(a.fingerprint, n, cap, dd, tf, witness.holds, witness)
        report.agreement = _agree([report.domdim, report.torsionfree, report.syzygy])
        logger.debug(f"Main theorem on {a!r}, n = {n}: domdim {dd}, torsionfree {tf}, "
                     f"syzygy {report.syzygy}")
        reports.append(report)
    failed = [r.n for r in reports if not r.agreement]
    if failed:
        logger.error(f"Main theorem conditions disagree on {a!r} for n in {failed}")
        if strict:
            raise DisagreementDetected(f"main theorem conditions disagree for n in {failed}",
                                       {"reports": [r.to_dict() for r in reports]})
    return reports


@dataclass
class FkyReport:
    """Mono and iso from A into Hom_A(D(A), Hom_A(V, A)) against domdim >= 1, >= 2."""

    domdim: DimensionValue
    target_dim: int
    mono: IsoVerdict
    iso: IsoVerdict
    evaluation_injective: bool
    evaluation_bijective: bool
    agreement: bool = True
    notes: List[str] = dataclass_field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "domdim": self.domdim.to_dict(),
            "target_dim": self.target_dim,
            "mono": self.mono.to_dict(include_witness=False),
            "iso": self.iso.to_dict(include_witness=False),
            "evaluation_injective": self.evaluation_injective,
            "evaluation_bijective": self.evaluation_bijective,
            "agreement": self.agreement,
            "notes": self.notes,
        }


def fky_characterization(a: Algebra) -> Dict[str, bool]:
    """Injectivity and bijectivity of the canonical map A -> A** over A^e."""
    ev = evaluation_map(regular_bimodule(a))
    return {"injective": ev.is_injective(), "bijective": ev.is_isomorphism()}


def fky_check(a: Algebra, cap: Optional[int] = None, strict: bool = True,
              trials: Optional[int] = None, seed: Optional[int] = None) -> FkyReport:
    """A bimodule mono A -> Hom_A(D(A), Hom_A(V, A)) exists iff domdim >= 1; an iso iff domdim >= 2.

    The randomized mono and iso searches are backed by the canonical map
    A -> A**, since the double A^e-dual of A is that bimodule.

    Raises:
        DisagreementDetected: when strict and the routes disagree
    """
    cap = default_cap(cap)
    domdim = algebra_dominant_dimension(a, cap)
    reg = regular_bimodule(a)
    target = double_dual_side(a)
    mono = escalated_verdict(reg, target, trials, seed, search=find_monomorphism)
    iso = escalated_verdict(reg, target, trials, seed)
    ev = fky_characterization(a)
    report = FkyReport(domdim, target.dim, mono, iso, ev["injective"], ev["bijective"])
    report.agreement = (
        _agree([domdim.at_least_n(1), mono.holds, ev["injective"]])
        and _agree([domdim.at_least_n(2), iso.holds, ev["bijective"]])
    )
    if not report.agreement:
        report.notes.append("mono/iso search, evaluation map and domdim disagree")
        if strict:
            raise DisagreementDetected("bimodule embedding criteria disagree", report.to_dict())
    return report


def _first_nonzero(dims: Sequence[int]) -> Optional[int]:
    for i in range(1, len(dims)):
        if dims[i]:
            return i
    return None


def _last_nonzero(dims: Sequence[int]) -> Optional[int]:
    for i in range(len(dims) - 1, 0, -1):
        if dims[i]:
            return i
    return None


def _ext_formula_dims(a: Algebra, cap: int) -> List[int]:
    """dim Ext_A^i(D(A) (x)_A V, A) for i = 0..cap."""
    x = tensor_over(coregular_bimodule(a), canonical_module(a), a)
    return ext_dims(restrict_first(x), regular_module(a), cap)


def _inf_reading(dims: Sequence[int], cap: int) -> DimensionValue:
    i = _first_nonzero(dims)
    if i is None:
        return DimensionValue.at_least(cap + 1, cap)
    return DimensionValue.exact(i + 1, cap)


def domdim_via_ext_formula(a: Algebra, cap: Optional[int] = None) -> DimensionValue:
    """inf{i >= 1 : Ext_A^i(D(A) (x)_A V, A) != 0} + 1.

    Raises:
        PreconditionError: A has dominant dimension below two
    """
    cap = default_cap(cap)
    domdim = algebra_dominant_dimension(a, cap)
    if domdim.at_least_n(2) is not True:
        raise PreconditionError(f"Ext formula needs dominant dimension at least 2, got {domdim}")
    return _inf_reading(_ext_formula_dims(a, cap), cap)


def ext_formula_report(a: Algebra, cap: Optional[int] = None, strict: bool = False) -> Dict[str, Any]:
    """Both readings of the Ext-vanishing formula against the coresolution.

    The inf reading is the value returned by ``domdim_via_ext_formula``; the
    sup reading (largest nonvanishing degree within the cap, plus one) is
    reported next to it. A mismatch of the inf reading is a disagreement, a
    mismatch of the sup reading only a diagnostic.
    """
    cap = default_cap(cap)
    domdim = algebra_dominant_dimension(a, cap)
    report: Dict[str, Any] = {"algebra": a.fingerprint, "cap": cap, "coresolution": domdim.to_dict()}
    if domdim.at_least_n(2) is not True:
        report.update({"applicable": False, "agreement": True,
                       "reason": f"dominant dimension {domdim} is below 2"})
        return report
    dims = _ext_formula_dims(a, cap)
    inf_value = _inf_reading(dims, cap)
    last = _last_nonzero(dims)
    sup_value = (DimensionValue.at_least(cap + 1, cap) if last is None
                 else DimensionValue.exact(last + 1, cap))
    report.update({
        "applicable": True,
        "ext_dims": dims[1:],
        "inf_reading": inf_value.to_dict(),
        "sup_reading": sup_value.to_dict(),
        "inf_matches": inf_value.compatible_with(domdim),
        "sup_matches": sup_value.compatible_with(domdim),
    })
    report["agreement"] = report["inf_matches"]
    if not report["sup_matches"]:
        report["diagnostic"] = "the sup reading differs from the coresolution value"
        logger.warning(f"Ext formula sup reading {sup_value} differs from domdim {domdim} on {a!r}")
    if strict and not report["agreement"]:
        raise DisagreementDetected("Ext formula and coresolution disagree", report)
    return report


def is_faithful(a: Algebra, vertices: Sequence[int]) -> bool:
    """The sum of the A e_v, v in ``vertices``, has zero annihilator."""
    if not vertices:
        return False
    m = ProjectiveModule(a, vertices).module
    d = m.dim
    cols: Dict[int, Dict[int, Any]] = {}
    for i, mat in enumerate(m.action):
        for r, row in ml.entries(mat).items():
            for c, v in row.items():
                cols.setdefault(r * d + c, {})[i] = v
    return ml.rank(ml.from_entries(a.field, cols, d * d, a.dim)) == a.dim


def minimal_faithful_projective_injective(a: Algebra) -> Optional[List[int]]:
    """Vertices of a minimal faithful projective-injective sum of A e_v, or None when A is not QF-3."""
    vertices = list(projective_injective_vertices(a))
    if not is_faithful(a, vertices):
        return None
    for v in list(vertices):
        rest = [w for w in vertices if w != v]
        if is_faithful(a, rest):
            vertices = rest
    return vertices


def gendo_symmetric_report(a: Algebra, cap: Optional[int] = None, strict: bool = True,
                           trials: Optional[int] = None, seed: Optional[int] = None) -> Dict[str, Any]:
    """V = A as bimodules, against domdim >= 2 with eAe symmetric.

    e A is the minimal faithful projective-injective module; eAe is symmetric
    when it is isomorphic to D(eAe) as a bimodule. When A is gendo-symmetric,
    inf{i >= 1 : Ext^i(D(A), A) != 0} + 1 is compared with the coresolution.

    Raises:
        DisagreementDetected: when strict and the two routes disagree
    """
    cap = default_cap(cap)
    domdim = algebra_dominant_dimension(a, cap)
    v_iso = escalated_verdict(canonical_module(a), regular_bimodule(a), trials, seed)
    report: Dict[str, Any] = {
        "algebra": a.fingerprint,
        "cap": cap,
        "domdim": domdim.to_dict(),
        "v_iso_a": v_iso.to_dict(include_witness=False),
    }
    vertices = minimal_faithful_projective_injective(a)
    report["faithful_projective_injective"] = vertices
    if vertices is None:
        corner_route = False
        report["corner_reason"] = "no faithful projective-injective module"
    elif domdim.at_least_n(2) is not True:
        corner_route = False
        report["corner_reason"] = f"dominant dimension {domdim} is below 2"
    else:
        base = corner_algebra(a, vertices)
        symmetric = escalated_verdict(regular_bimodule(base), coregular_bimodule(base), trials, seed)
        corner_route = symmetric.holds
        report["base_dim"] = base.dim
        report["base_symmetric"] = symmetric.to_dict(include_witness=False)
    report["gendo_symmetric"] = {"by_v": v_iso.holds, "by_corner": corner_route}
    report["agreement"] = v_iso.holds == corner_route
    if v_iso.holds and corner_route:
        dims = ext_dims(coregular_module(a), regular_module(a), cap)
        formula = _inf_reading(dims, cap)
        report["ext_DA_A"] = dims[1:]
        report["domdim_by_ext"] = formula.to_dict()
        report["domdim_by_ext_matches"] = formula.compatible_with(domdim)
        report["agreement"] = report["agreement"] and report["domdim_by_ext_matches"]
    logger.info(f"Gendo-symmetric report on {a!r}: V = A {v_iso.holds}, corner route {corner_route}")
    if strict and not report["agreement"]:
        raise DisagreementDetected("gendo-symmetric criteria disagree", report)
    return report


def is_gendo_symmetric(a: Algebra, cap: Optional[int] = None) -> bool:
    return bool(gendo_symmetric_report(a, cap)["gendo_symmetric"]["by_v"])
