"""Randomized isomorphism, monomorphism and indecomposability tests.

A "yes" always comes with a witness. A "no" is only returned for exact
obstructions (dimensions, Hom dimensions); otherwise an unsuccessful search
reports "probably-no" with the number of trials and the size of the field
the random points were drawn from. Fields smaller than the degree bound of
the determinant are replaced by an extension GF(p^k).
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

import galois
import numpy as np
from sympy import Poly, Symbol

from config.config_loader import default_seed, get_config
from exactlin import matrix as ml
from exactlin.matrix import Mat
from modrep.hom import HomSpace, hom_space
from modrep.module import Module, Morphism, check_same_algebra, socle_space, top
from utils.utils import CertificationFailed, certify_with_retry

logger = logging.getLogger(__name__)

YES = "yes"
NO = "no"
PROBABLY_NO = "probably-no"


@dataclass
class IsoVerdict:
    """Outcome of a randomized search for an invertible (or injective) map."""

    verdict: str
    witness: Optional[Morphism] = None
    trials: int = 0
    field_size: Optional[int] = None
    reason: str = ""
    extension_witness: Optional[List[List[int]]] = None

    @property
    def holds(self) -> bool:
        return self.verdict == YES

    def to_dict(self, include_witness: bool = True) -> Dict[str, Any]:
        out: Dict[str, Any] = {"verdict": self.verdict}
        if self.reason:
            out["reason"] = self.reason
        if self.verdict != NO:
            out["trials"] = self.trials
            out["field_size"] = self.field_size
        if include_witness and self.witness is not None:
            out["witness"] = ml.to_python_rows(self.witness.field, self.witness.matrix)
        if include_witness and self.extension_witness is not None:
            out["extension_witness"] = self.extension_witness
        return out


def _default_trials(trials: Optional[int]) -> int:
    if trials is not None:
        return int(trials)
    return int(get_config().get('isomorphism.trials', 40))


def _char0_range() -> int:
    return int(get_config().get('isomorphism.char0_sample_range', 1000))


def _search(hom: HomSpace, target_rank: int, trials: int, seed: int) -> IsoVerdict:
    """Look for a combination of the Hom basis of the given rank."""
    f = hom.source.field
    p = f.characteristic
    rng = np.random.default_rng(seed)
    bound = 2 * target_rank + 1
    if hom.dim == 1:
        # a single basis element spans Hom up to scalars
        trials = 1
    if p == 0 or p >= bound:
        size = p or _char0_range()
        for t in range(trials):
            values = rng.integers(0, size, size=hom.dim)
            if hom.dim == 1:
                values[0] = 1
            coeffs = {k: f.scalar(int(x)) for k, x in enumerate(values) if x}
            candidate = hom.combination(coeffs)
            if ml.rank(candidate) == target_rank:
                witness = Morphism(hom.source, hom.target, candidate, checked=True)
                return IsoVerdict(YES, witness, t + 1, p or None)
        return IsoVerdict(PROBABLY_NO, None, trials, p or size, "no full-rank combination found")
    return _search_extension(hom, target_rank, trials, rng, bound)


def _search_extension(hom: HomSpace, target_rank: int, trials: int,
                      rng: np.random.Generator, bound: int) -> IsoVerdict:
    """Search over GF(p^k) with p^k >= bound, trying the base field points first."""
    f = hom.source.field
    p = f.characteristic
    for t in range(trials):
        values = rng.integers(0, p, size=hom.dim)
        coeffs = {k: f.scalar(int(x)) for k, x in enumerate(values) if x}
        candidate = hom.combination(coeffs)
        if ml.rank(candidate) == target_rank:
            witness = Morphism(hom.source, hom.target, candidate, checked=True)
            return IsoVerdict(YES, witness, t + 1, p)
    k = 1
    while p ** k < bound:
        k += 1
    GF = galois.GF(p ** k)
    shape = (hom.target.dim, hom.source.dim)
    basis = [GF(np.array(ml.to_python_rows(f, F), dtype=int).reshape(shape)) for F in hom.basis]
    for t in range(trials):
        coeffs = GF.Random(hom.dim, seed=rng)
        candidate = GF.Zeros(shape)
        for c, F in zip(coeffs, basis):
            candidate = candidate + c * F
        if np.linalg.matrix_rank(candidate) == target_rank:
            logger.debug(f"Full-rank combination found over GF({p}^{k})")
            return IsoVerdict(YES, None, trials + t + 1, p ** k,
                              "witness lives in an extension field",
                              extension_witness=np.asarray(candidate).astype(int).tolist())
    return IsoVerdict(PROBABLY_NO, None, 2 * trials, p ** k, "no full-rank combination found")


def is_isomorphic(m: Module, n: Module, trials: Optional[int] = None,
                  seed: Optional[int] = None) -> IsoVerdict:
    """Decide M = N with a certified "yes", an exact "no" or a "probably-no"."""
    check_same_algebra(m, n)
    trials = _default_trials(trials)
    seed = default_seed(seed)
    if m.dim != n.dim:
        return IsoVerdict(NO, reason=f"dimensions {m.dim} and {n.dim} differ")
    if m.dimension_vector != n.dimension_vector:
        return IsoVerdict(NO, reason="dimension vectors differ")
    if m.dim == 0:
        return IsoVerdict(YES, Morphism(m, n, ml.zeros(m.field, 0, 0), checked=True), 0)
    hom = hom_space(m, n)
    if hom.dim == 0:
        return IsoVerdict(NO, reason="Hom(M, N) = 0")
    end_dim = hom_space(m, m).dim
    if hom.dim != end_dim:
        return IsoVerdict(NO, reason=f"dim Hom(M, N) = {hom.dim} but dim End(M) = {end_dim}")
    verdict = _search(hom, m.dim, trials, seed)
    logger.debug(f"Isomorphism test dim {m.dim}: {verdict.verdict} after {verdict.trials} trials")
    return verdict


def certify_isomorphism(m: Module, n: Module, trials: Optional[int] = None,
                        seed: Optional[int] = None) -> IsoVerdict:
    """is_isomorphic that escalates trials and never settles for "probably-no".

    Raises:
        CertificationFailed: no witness after the configured number of attempts,
            or an exact "no"
    """
    trials = _default_trials(trials)
    seed = default_seed(seed)
    verdict = is_isomorphic(m, n, trials, seed)
    if verdict.verdict == YES:
        return verdict
    if verdict.verdict == NO:
        raise CertificationFailed(f"modules are not isomorphic: {verdict.reason}")
    max_attempts = int(get_config().get('isomorphism.max_attempts', 3))

    def attempt(t: int, s: int) -> IsoVerdict:
        retry = is_isomorphic(m, n, t, s)
        if retry.verdict != YES:
            raise CertificationFailed(f"no isomorphism found in {t} trials")
        return retry

    return certify_with_retry(attempt, 2 * trials, seed + 7919, max(1, max_attempts - 1))


def find_monomorphism(m: Module, n: Module, trials: Optional[int] = None,
                      seed: Optional[int] = None) -> IsoVerdict:
    """Search Hom(M, N) for an injective map."""
    check_same_algebra(m, n)
    trials = _default_trials(trials)
    seed = default_seed(seed)
    if m.dim > n.dim:
        return IsoVerdict(NO, reason="source is larger than target")
    if any(x > y for x, y in zip(m.dimension_vector, n.dimension_vector)):
        return IsoVerdict(NO, reason="dimension vector of the source exceeds the target")
    if m.dim == 0:
        return IsoVerdict(YES, Morphism(m, n, ml.zeros(m.field, n.dim, 0), checked=True), 0)
    hom = hom_space(m, n)
    if hom.dim == 0:
        return IsoVerdict(NO, reason="Hom(M, N) = 0")
    return _search(hom, m.dim, trials, seed)


def _charpoly_is_primary(mat: Mat, field) -> bool:
    """Whether the characteristic polynomial is a power of one irreducible polynomial."""
    coeffs = ml.charpoly(mat)
    t = Symbol("t")
    poly = Poly.from_list(coeffs, t, domain=field.domain)
    return poly.sqf_part().is_irreducible


def is_indecomposable(m: Module, trials: Optional[int] = None, seed: Optional[int] = None) -> bool:
    """End(M) local, tested on random endomorphisms.

    A module with simple top or simple socle is indecomposable. Otherwise a
    random endomorphism whose characteristic polynomial is not a power of a
    single irreducible factor splits M by Fitting's lemma; if no trial finds one,
    M is reported indecomposable.
    """
    if m.dim == 0:
        return False
    if m.dim == 1 or top(m)[0].dim == 1 or socle_space(m).dim == 1:
        return True
    end = hom_space(m, m)
    if end.dim == 1:
        return True
    f = m.field
    rng = np.random.default_rng(default_seed(seed))
    size = f.characteristic or _char0_range()
    for _ in range(_default_trials(trials)):
        values = rng.integers(0, size, size=end.dim)
        coeffs = {k: f.scalar(int(x)) for k, x in enumerate(values) if x}
        phi = end.combination(coeffs)
        if not _charpoly_is_primary(phi, f):
            return False
    return True
