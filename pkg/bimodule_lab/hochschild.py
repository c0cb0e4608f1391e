"""Hochschild homology and cohomology, directly and through tau_{n-1}(V).

The direct route resolves the regular bimodule over A^e:
HH^l = Ext^l_{A^e}(A, A) and HH_l = Tor_l^{A^e}(A, A). For A of finite
dominant dimension n >= 2 and l >= 1 the same dimensions are
dim Ext^{l+n}_{A^e}(A, tau) and dim Ext^{l+n}_{A^e}(D(A), tau) with
tau = tau_{n-1}(V).
"""

import logging
from typing import Any, Dict, List, Optional

from algebras.algebra import Algebra, center_dim
from config.config_loader import default_cap
from modrep.bimodule import swap_factors
from modrep.module import Module
from homology.derived import ext_dims, higher_ar_translate, tor_dims
from homology.dimension import DimensionValue
from homology.invariants import algebra_dominant_dimension, global_dimension, projective_dimension
from bimodule_lab.bimodules import canonical_module, coregular_bimodule, regular_bimodule
from utils.utils import DisagreementDetected

logger = logging.getLogger(__name__)


def hochschild_cohomology_dims(a: Algebra, l_max: int) -> List[int]:
    """dim HH^l(A) for l = 0..l_max."""
    reg = regular_bimodule(a)
    return ext_dims(reg, reg, l_max)


def hochschild_homology_dims(a: Algebra, l_max: int, cross_check: bool = True) -> List[int]:
    """dim HH_l(A) for l = 0..l_max, as Tor over A^e of A read as a right module."""
    reg = regular_bimodule(a)
    return tor_dims(swap_factors(reg), reg, l_max, cross_check=cross_check)


def formula_dims(a: Algebra, tau: Module, n: int, l_max: int) -> Dict[str, List[int]]:
    """dim Ext^{l+n}_{A^e}(A, tau) and dim Ext^{l+n}_{A^e}(D(A), tau) for l = 1..l_max."""
    homology = ext_dims(regular_bimodule(a), tau, l_max + n)
    cohomology = ext_dims(coregular_bimodule(a), tau, l_max + n)
    return {
        "homology": [homology[l + n] for l in range(1, l_max + 1)],
        "cohomology": [cohomology[l + n] for l in range(1, l_max + 1)],
    }


def _vanishing(dims: List[int], pd: DimensionValue, n: int) -> Optional[Dict[str, Any]]:
    """HH = 0 above pd - n, checked on the computed degrees when pd is exact."""
    if not pd.is_exact:
        return None
    bound = pd.value - n
    offenders = [l for l in range(max(1, bound + 1), len(dims)) if dims[l]]
    return {"above": bound, "holds": not offenders, "offenders": offenders}


def hochschild_report(a: Algebra, l_max: int, cap: Optional[int] = None, strict: bool = True,
                      gendo_symmetric: Optional[bool] = None) -> Dict[str, Any]:
    """HH_l and HH^l for l = 0..l_max by both routes, with the vanishing bounds.

    The formula route runs when the dominant dimension n is finite and at
    least two. ``gendo_symmetric`` set to True also evaluates the formulas with
    tau_{n-1}(A) in place of tau_{n-1}(V).

    Raises:
        DisagreementDetected: when strict and a hard check fails
    """
    cap = default_cap(cap)
    domdim = algebra_dominant_dimension(a, cap)
    cohomology = hochschild_cohomology_dims(a, l_max)
    homology = hochschild_homology_dims(a, l_max)
    center = center_dim(a)
    report: Dict[str, Any] = {
        "algebra": a.fingerprint,
        "l_max": l_max,
        "cap": cap,
        "domdim": domdim.to_dict(),
        "direct": {"homology": homology, "cohomology": cohomology},
        "center_dim": center,
        "hh0_is_center": cohomology[0] == center,
        "diagnostics": [],
    }
    failures: List[str] = []
    if cohomology[0] != center:
        failures.append(f"HH^0 = {cohomology[0]} but the center has dimension {center}")

    pd_a = projective_dimension(regular_bimodule(a), cap)
    pd_da = projective_dimension(coregular_bimodule(a), cap)
    report["pd_regular"] = pd_a.to_dict()
    report["pd_coregular"] = pd_da.to_dict()

    if domdim.is_exact and domdim.value >= 2 and l_max >= 1:
        n = domdim.value
        tau = higher_ar_translate(canonical_module(a), n)
        by_formula = formula_dims(a, tau, n, l_max)
        report["formula"] = by_formula
        report["formula_matches"] = (by_formula["homology"] == homology[1:]
                                     and by_formula["cohomology"] == cohomology[1:])
        if not report["formula_matches"]:
            failures.append("formula dimensions differ from the direct route")
        if gendo_symmetric:
            by_a = formula_dims(a, higher_ar_translate(regular_bimodule(a), n), n, l_max)
            report["formula_with_A"] = by_a
            if by_a != by_formula:
                failures.append("formulas with tau(A) and tau(V) differ on a gendo-symmetric algebra")
        homology_bound = _vanishing(homology, pd_a, n)
        cohomology_bound = _vanishing(cohomology, pd_da, n)
        report["homology_vanishing"] = homology_bound
        report["cohomology_vanishing"] = cohomology_bound
        for name, bound in (("HH_l", homology_bound), ("HH^l", cohomology_bound)):
            if bound is not None and not bound["holds"]:
                failures.append(f"{name} nonzero above {bound['above']} in degrees {bound['offenders']}")
    else:
        report["formula"] = None
        report["formula_reason"] = f"dominant dimension {domdim} is not finite and at least 2"

    gldim = global_dimension(a, cap)
    report["gldim"] = gldim.to_dict()
    if gldim.is_exact and pd_a.is_exact:
        if gldim.value != pd_a.value:
            # only expected over algebraically closed fields
            report["diagnostics"].append(
                f"pd over A^e of A is {pd_a.value} while gldim is {gldim.value}")
            logger.warning(f"pd_Ae(A) = {pd_a.value} differs from gldim {gldim.value} on {a!r}")
        elif domdim.at_least_n(gldim.value) and gldim.value >= 1:
            nonzero = [l for l in range(1, len(homology)) if homology[l]]
            report["higher_auslander_homology_vanishes"] = not nonzero
            if nonzero:
                report["diagnostics"].append(f"gldim <= domdim but HH_l != 0 for l in {nonzero}")

    report["failures"] = failures
    report["agreement"] = not failures
    logger.info(f"Hochschild report on {a!r}: HH^* {cohomology}, HH_* {homology}, "
                f"{len(failures)} failures")
    if strict and failures:
        raise DisagreementDetected("Hochschild routes disagree: " + "; ".join(failures), report)
    return report
