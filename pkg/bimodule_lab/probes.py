"""Bounded probes around the Gorenstein bimodule, Nakayama and Tachikawa conjectures.

Nothing here decides a conjecture. Each probe evaluates a statement up to a
cap and cross-checks the implications that are theorems at the bounded
level; a violated implication is a contradiction and points at a bug.
"""

import logging
from typing import Any, Dict, List, Optional, Tuple

from algebras.algebra import Algebra, enveloping, is_selfinjective, opposite
from config.config_loader import default_cap, get_config
from modrep.module import coregular_module, regular_module
from homology.derived import ext_dims
from homology.dimension import DimensionValue
from homology.invariants import (algebra_dominant_dimension, global_dimension, gorenstein_projective_up_to,
                                 injective_dimension, projective_dimension)
from homology.mho import is_mho_vertex, mho_path_ending_at
from bimodule_lab.bimodules import coregular_bimodule, escalated_verdict, regular_bimodule
from bimodule_lab.theorems import gendo_symmetric_report
from utils.utils import DisagreementDetected

logger = logging.getLogger(__name__)


def tachikawa_dims(a: Algebra, cap: int) -> List[int]:
    """dim Ext_A^i(D(A), A) for i = 1..cap."""
    if cap < 1:
        return []
    return ext_dims(coregular_module(a), regular_module(a), cap)[1:]


def bimodule_ext_dims(a: Algebra, cap: int) -> List[int]:
    """dim Ext_{A^e}^i(A, A^e) for i = 1..cap."""
    if cap < 1:
        return []
    return ext_dims(regular_bimodule(a), regular_module(enveloping(a)), cap)[1:]


def bimodule_dual_ext_bridge(a: Algebra, cap: Optional[int] = None, strict: bool = True) -> Dict[str, Any]:
    """Ext_{A^e}^i(A, A^e) and Ext_A^i(D(A), A) have equal dimensions for i = 1..cap.

    Raises:
        DisagreementDetected: when strict and some degree differs
    """
    cap = default_cap(cap)
    left = tachikawa_dims(a, cap)
    right = bimodule_ext_dims(a, cap)
    report = {
        "algebra": a.fingerprint,
        "cap": cap,
        "ext_DA_A": left,
        "ext_Ae_A_Ae": right,
        "agreement": left == right,
    }
    if strict and left != right:
        raise DisagreementDetected("Ext over A^e and Ext of D(A) differ", report)
    return report


def pd_bimodule_report(a: Algebra, cap: Optional[int] = None) -> Tuple[DimensionValue, DimensionValue]:
    """(pd_{A^e}(A), pd_{A^e}(D(A)))."""
    cap = default_cap(cap)
    return (projective_dimension(regular_bimodule(a), cap),
            projective_dimension(coregular_bimodule(a), cap))


def gorenstein_probe(a: Algebra, cap: int) -> Dict[str, Any]:
    """Injective dimension of A on both sides, up to the cap."""
    left = injective_dimension(regular_module(a), cap)
    right = injective_dimension(regular_module(opposite(a)), cap)
    return {
        "id_left": left.to_dict(),
        "id_right": right.to_dict(),
        "gorenstein_up_to_cap": left.is_exact and right.is_exact and left.value == right.value,
    }


def _mho_probe(a: Algebra, domdim: DimensionValue, length: int) -> Dict[str, Any]:
    reg = regular_bimodule(a)
    reason = is_mho_vertex(reg)
    if reason:
        return {"skipped": f"regular bimodule: {reason}", "paths": []}
    paths = []
    for t in range(1, length + 1):
        path = mho_path_ending_at(reg, t)
        paths.append({"length": t, "exists": path.exists, "domdim_at_least": domdim.at_least_n(t),
                      "reason": path.reason})
    return {"paths": paths}


def conjecture_probe(a: Algebra, cap: Optional[int] = None, strict: bool = True,
                     trials: Optional[int] = None, seed: Optional[int] = None) -> Dict[str, Any]:
    """Selfinjectivity, Nakayama, Tachikawa and Gorenstein-bimodule probes up to the cap.

    Raises:
        DisagreementDetected: when strict and a bounded implication is violated
    """
    cap = default_cap(cap)
    domdim = algebra_dominant_dimension(a, cap)
    selfinjective = is_selfinjective(a)
    frobenius = escalated_verdict(regular_module(a), coregular_module(a), trials, seed)
    tachikawa = tachikawa_dims(a, cap)
    bridge = bimodule_ext_dims(a, cap)
    gp = gorenstein_projective_up_to(regular_bimodule(a), cap)
    gorenstein = gorenstein_probe(a, cap)
    gldim = global_dimension(a, cap)
    contradictions: List[str] = []

    report: Dict[str, Any] = {
        "algebra": a.fingerprint,
        "cap": cap,
        "selfinjective": selfinjective,
        "a_iso_DA": frobenius.to_dict(include_witness=False),
        "domdim": domdim.to_dict(),
        "nakayama_probe": domdim.at_least_n(cap),
        "tachikawa_dims": tachikawa,
        "tachikawa_probe": not any(tachikawa),
        "bimodule_ext_dims": bridge,
        "gorenstein_bimodule": gp.to_dict(),
        "gorenstein": gorenstein,
        "gldim": gldim.to_dict(),
    }

    if selfinjective != frobenius.holds:
        contradictions.append("selfinjectivity test and A = D(A) certification differ")
    if tachikawa != bridge:
        contradictions.append("Ext_A(D(A), A) and Ext_{A^e}(A, A^e) dimensions differ")
    expected_gp = report["tachikawa_probe"] and domdim.at_least_n(cap) is True
    if gp.holds != expected_gp:
        contradictions.append(f"GP up to {cap} is {gp.holds} but Tachikawa and domdim give {expected_gp}")
    if selfinjective and not gp.holds:
        contradictions.append("selfinjective algebra fails the Gorenstein bimodule probe")
    if selfinjective and gorenstein["id_left"]["value"] + gorenstein["id_right"]["value"] != 0:
        contradictions.append("selfinjective algebra with nonzero injective dimension")

    known = gldim.is_exact or a.vertex_count == 1 or gorenstein["gorenstein_up_to_cap"]
    report["finitistic_dimension_finite"] = known
    if known and gp.holds and not selfinjective:
        contradictions.append("GP probe passes on a non-selfinjective algebra of finite finitistic dimension")

    gendo = gendo_symmetric_report(a, cap, strict=False, trials=trials, seed=seed)
    report["gendo_symmetric"] = gendo["gendo_symmetric"]["by_v"] and gendo["gendo_symmetric"]["by_corner"]
    if report["gendo_symmetric"] and domdim.is_exact and gp.holds:
        contradictions.append("gendo-symmetric algebra of finite domdim passes the GP probe")

    length = int(get_config().get('probes.mho_path_length', 2))
    mho = _mho_probe(a, domdim, min(length, cap))
    report["mho_paths"] = mho
    for entry in mho["paths"]:
        if entry["domdim_at_least"] is not None and entry["exists"] != entry["domdim_at_least"]:
            contradictions.append(f"mho-path of length {entry['length']} and domdim disagree")

    report["contradictions"] = contradictions
    report["agreement"] = not contradictions
    logger.info(f"Conjecture probe on {a!r}: GP {gp.holds}, Tachikawa {report['tachikawa_probe']}, "
                f"{len(contradictions)} contradictions")
    if strict and contradictions:
        raise DisagreementDetected("conjecture probe found a contradiction: " + "; ".join(contradictions),
                                   report)
    return report
