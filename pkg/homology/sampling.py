"""Deterministic module samples and the syzygy filtration check.

Samples are built from the algebra alone, without randomness: simples,
their first syzygies and cosyzygies, radicals of indecomposable projectives,
projectives modulo their socle and a few direct sums.
"""

import logging
from typing import Any, Dict, List, Optional, Tuple

from algebras.algebra import Algebra
from config.config_loader import default_cap
from modrep.module import Module, direct_sum, quotient, rad_module, simple_modules, socle_space
from modrep.projectives import indecomposable_projective
from homology.invariants import algebra_dominant_dimension, dominant_dimension, n_torsionfree
from homology.resolutions import cosyzygy, syzygy
from utils.utils import PreconditionError

logger = logging.getLogger(__name__)


def _labelled(label: str, m: Module) -> Tuple[str, Module]:
    m.name = m.name or label
    return label, m


def sample_modules(a: Algebra, with_sums: bool = True) -> List[Tuple[str, Module]]:
    """Labelled nonzero sample modules, deduplicated by fingerprint."""
    out: List[Tuple[str, Module]] = []
    seen = set()

    def add(label: str, m: Module) -> None:
        if m.dim == 0 or m.fingerprint in seen:
            return
        seen.add(m.fingerprint)
        out.append(_labelled(label, m))

    simples = simple_modules(a)
    for v, s in enumerate(simples):
        name = a.vertex_labels[v]
        add(f"S({name})", s)
        add(f"Omega(S({name}))", syzygy(s, 1))
        add(f"Omega^-1(S({name}))", cosyzygy(s, 1))
    for v in range(a.vertex_count):
        name = a.vertex_labels[v]
        p = indecomposable_projective(a, v).module
        add(f"rad P({name})", rad_module(p)[0])
        add(f"P({name})/soc", quotient(p, socle_space(p))[0])
    if with_sums and len(simples) > 1:
        first, second = a.vertex_labels[0], a.vertex_labels[1]
        add(f"S({first})+S({second})", direct_sum(simples[0], simples[1]).module)
    if with_sums and out:
        add(f"{out[0][0]}+{out[-1][0]}", direct_sum(out[0][1], out[-1][1]).module)
    return out


def sample_pairs(a: Algebra, count: int) -> List[Tuple[Module, Module]]:
    """The first ``count`` pairs of sample modules in a fixed order."""
    modules = [m for _, m in sample_modules(a, with_sums=False)]
    pairs = [(x, y) for x in modules for y in modules]
    return pairs[:count]


def syzygy_filtration_check(a: Algebra, n: int, cap: Optional[int] = None) -> Dict[str, Any]:
    """Compare module dominant dimension, torsionfreeness and syzygies for i = 1..n.

    For every sample M: domdim(M) >= i and M i-torsionfree must agree. Every
    constructed syzygy Omega^i(N) of a sample N must be i-torsionfree and
    have dominant dimension at least i.

    Raises:
        PreconditionError: the algebra has dominant dimension below n
    """
    cap = default_cap(cap)
    domdim = algebra_dominant_dimension(a, cap)
    if domdim.at_least_n(n) is not True:
        raise PreconditionError(f"algebra has dominant dimension {domdim}, need at least {n}")
    samples = sample_modules(a)
    failures: List[Dict[str, Any]] = []
    checked = 0
    for label, m in samples:
        dm = dominant_dimension(m, cap)
        for i in range(1, n + 1):
            by_domdim = dm.at_least_n(i)
            by_tf = n_torsionfree(m, i)
            checked += 1
            if by_domdim != by_tf:
                failures.append({"module": label, "i": i, "domdim": str(dm), "torsionfree": by_tf})
    for label, m in samples:
        for i in range(1, n + 1):
            z = syzygy(m, i)
            if z.dim == 0:
                continue
            checked += 1
            ok_tf = n_torsionfree(z, i)
            ok_dd = dominant_dimension(z, cap).at_least_n(i)
            if not (ok_tf and ok_dd):
                failures.append({"module": f"Omega^{i}({label})", "i": i,
                                 "torsionfree": ok_tf, "domdim_at_least": ok_dd})
    report = {
        "algebra": a.fingerprint,
        "n": n,
        "cap": cap,
        "samples": [label for label, _ in samples],
        "checks": checked,
        "failures": failures,
        "agreement": not failures,
    }
    logger.info(f"Syzygy filtration check on {a!r}: {checked} checks, {len(failures)} failures")
    return report
