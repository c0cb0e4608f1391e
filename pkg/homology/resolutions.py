"""Minimal projective resolutions and minimal injective coresolutions.

A projective resolution is built by iterating projective covers: P_i is the
cover of the i-th syzygy and the differential P_i -> P_{i-1} is stored as a
z-matrix, the k-th generator of Omega^i read in the summands of P_{i-1}.
Injective coresolutions are the K-duals of projective resolutions of D(M)
over the opposite algebra.
"""

import logging
from dataclasses import dataclass, field as dataclass_field
from typing import List, Optional, Tuple

from algebras.algebra import Algebra
from config.config_loader import get_config
from exactlin import matrix as ml
from modrep.module import Module, Morphism, dual, zero_module
from modrep.projectives import (
    ProjectiveMap,
    ProjectiveModule,
    projective_cover,
    projective_injective_vertices,
    zero_projective,
)
from homology.cache import resolution_cache
from utils.utils import ResolutionError

logger = logging.getLogger(__name__)

COMPLETE = 10 ** 9


def _assert_resolutions() -> bool:
    return bool(get_config().get('checks.assert_resolutions', True))


@dataclass
class ProjResolution:
    """P_L -> ... -> P_1 -> P_0 -> M -> 0.

    ``terms[i]`` is P_i, ``differentials[i - 1]`` is P_i -> P_{i-1},
    ``syzygies[i]`` is Omega^i(M) with ``inclusions[i - 1]`` its embedding
    into P_{i-1}. The last syzygy is the kernel at the last computed term;
    ``complete`` is set once a syzygy vanished.
    """

    target: Module
    terms: List[ProjectiveModule]
    differentials: List[ProjectiveMap]
    augmentation: Morphism
    syzygies: List[Module]
    inclusions: List[Morphism] = dataclass_field(default_factory=list)
    complete: bool = False
    minimal: bool = True

    @property
    def algebra(self) -> Algebra:
        return self.target.algebra

    @property
    def length(self) -> int:
        """Index of the last computed term."""
        return len(self.terms) - 1

    @property
    def covered_length(self) -> int:
        return COMPLETE if self.complete else self.length

    def term(self, i: int) -> ProjectiveModule:
        if i < len(self.terms):
            return self.terms[i]
        if self.complete:
            return zero_projective(self.algebra)
        raise ResolutionError(f"term {i} beyond computed length {self.length}")

    def differential(self, i: int) -> ProjectiveMap:
        """d_i: P_i -> P_{i-1} for i >= 1."""
        if i - 1 < len(self.differentials):
            return self.differentials[i - 1]
        return ProjectiveMap(self.term(i), self.term(i - 1),
                             [[{} for _ in self.term(i - 1).vertices] for _ in self.term(i).vertices])

    def syzygy(self, i: int) -> Module:
        if i < len(self.syzygies):
            return self.syzygies[i]
        if self.complete:
            return zero_module(self.algebra)
        raise ResolutionError(f"syzygy {i} beyond computed length {self.length + 1}")

    def truncate(self, length: int) -> 'ProjResolution':
        if length >= self.length:
            return self
        return ProjResolution(
            self.target, self.terms[:length + 1], self.differentials[:length],
            self.augmentation, self.syzygies[:length + 2], self.inclusions[:length + 1],
            complete=self.syzygies[length + 1].dim == 0, minimal=self.minimal,
        )

    def vertex_lists(self) -> List[Tuple[int, ...]]:
        return [p.vertices for p in self.terms]


def _differential(cover_gens: ml.Mat, incl: Morphism, source: ProjectiveModule,
                  target: ProjectiveModule) -> ProjectiveMap:
    """z-matrix of P_i -> P_{i-1} from the generators of Omega^i."""
    images = incl.matrix.matmul(cover_gens)
    rows = []
    for k in range(len(source.vertices)):
        col = ml.extract(images, range(images.shape[0]), [k])
        rows.append([target.component(col, l) for l in range(len(target.vertices))])
    return ProjectiveMap(source, target, rows)


def _compute_resolution(m: Module, length: int) -> ProjResolution:
    check = _assert_resolutions()
    cover = projective_cover(m)
    syz, incl = cover.map.kernel()
    res = ProjResolution(m, [cover.projective], [], cover.map, [m, syz], [incl])
    if check and cover.projective.dim != m.dim + syz.dim:
        raise ResolutionError("augmentation is not surjective")
    for i in range(1, length + 1):
        if syz.dim == 0:
            res.complete = True
            break
        cover_i = projective_cover(syz)
        d = _differential(cover_i.generators, incl, cover_i.projective, res.terms[i - 1])
        next_syz, next_incl = cover_i.map.kernel()
        if check:
            if cover_i.projective.dim != syz.dim + next_syz.dim:
                raise ResolutionError(f"resolution is not exact at degree {i}")
            if not d.lands_in_radical():
                raise ResolutionError(f"differential {i} does not land in the radical")
        logger.debug(f"Resolution step {i}: {cover_i.projective!r}, syzygy dim {next_syz.dim}")
        res.terms.append(cover_i.projective)
        res.differentials.append(d)
        res.syzygies.append(next_syz)
        res.inclusions.append(next_incl)
        syz, incl = next_syz, next_incl
    if syz.dim == 0:
        res.complete = True
    return res


def proj_resolution(m: Module, length: int) -> ProjResolution:
    """Minimal projective resolution with terms P_0..P_length.

    The resolution also records Omega^{length + 1}(M). It stops early, marked
    complete, once a syzygy vanishes.
    """
    if length < 0:
        raise ResolutionError("resolution length must be non-negative")
    return resolution_cache.get_or_compute(
        m.fingerprint, length,
        lambda: _compute_resolution(m, length),
        lambda r: r.covered_length,
        lambda r, n: r.truncate(n),
    )


def syzygy(m: Module, n: int) -> Module:
    """Omega^n(M); Omega^0(M) = M."""
    if n <= 0:
        return m
    return proj_resolution(m, n - 1).syzygy(n)


@dataclass
class InjCoresolution:
    """0 -> M -> I_0 -> I_1 -> ... -> I_L.

    Built from the projective resolution of D(M) over the opposite algebra:
    I_i = D(P_i) and the i-th cosyzygy is D(Omega^i D(M)). ``vertices[i]``
    lists the injective indecomposables I(v) = D(e_v A) that make up I_i.
    """

    target: Module
    dual_resolution: ProjResolution

    @property
    def length(self) -> int:
        return self.dual_resolution.length

    @property
    def complete(self) -> bool:
        return self.dual_resolution.complete

    def term(self, i: int) -> Module:
        return dual(self.dual_resolution.term(i).module)

    def vertices(self, i: int) -> Tuple[int, ...]:
        return self.dual_resolution.term(i).vertices

    def cosyzygy(self, i: int) -> Module:
        return dual(self.dual_resolution.syzygy(i))

    def coaugmentation(self) -> Morphism:
        aug = self.dual_resolution.augmentation
        return Morphism(self.target, self.term(0), aug.matrix.transpose())

    def codifferential(self, i: int) -> Morphism:
        """I_{i-1} -> I_i."""
        d = self.dual_resolution.differential(i)
        return Morphism(self.term(i - 1), self.term(i), d.matrix.transpose())

    def is_projective_term(self, i: int) -> bool:
        """Whether I_i is projective: every D(e_v A) in it is projective-injective."""
        op = self.dual_resolution.algebra
        pi = set(projective_injective_vertices(op))
        return all(v in pi for v in self.vertices(i))

    def first_nonprojective(self) -> Optional[int]:
        for i in range(self.length + 1):
            if not self.is_projective_term(i):
                return i
        return None


def inj_coresolution(m: Module, length: int) -> InjCoresolution:
    """Minimal injective coresolution with terms I_0..I_length."""
    return InjCoresolution(m, proj_resolution(dual(m), length))


def cosyzygy(m: Module, n: int) -> Module:
    """Omega^{-n}(M), the cokernel at the n-th step of the injective coresolution."""
    if n <= 0:
        return m
    return dual(syzygy(dual(m), n))
