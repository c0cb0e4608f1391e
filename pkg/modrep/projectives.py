"""Projective modules as sums of indecomposables, maps between them, covers and envelopes.

A map between sums of indecomposable projectives ``P = (+) B e_{v_k}`` and
``Q = (+) B e_{w_l}`` is stored by the elements ``z[k][l]`` of
``e_{v_k} B e_{w_l}`` with ``phi(a e_{v_k}) = (a z[k][l])_l``. Composition is
then matrix multiplication of z-matrices over B, and the B-dual map is the
transposed z-matrix read over B^op.
"""

import logging
import threading
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Sequence, Tuple

from algebras.algebra import Algebra, Vector, column_to_vec, opposite, vec_add
from exactlin import matrix as ml
from exactlin.matrix import Mat, Subspace
from modrep.module import (
    Module,
    Morphism,
    direct_sum,
    dual,
    radical_space,
    zero_module,
)
from utils.utils import AlgebraMismatch, MorphismError

logger = logging.getLogger(__name__)


@dataclass
class IndecomposableProjective:
    vertex: int
    space: Subspace      # B e_v inside B
    module: Module


_projective_cache: Dict[Tuple[str, int], IndecomposableProjective] = {}
_projective_lock = threading.Lock()


def indecomposable_projective(algebra: Algebra, v: int) -> IndecomposableProjective:
    """B e_v, spanned inside B by the image of right multiplication by e_v."""
    key = (algebra.fingerprint, v)
    with _projective_lock:
        cached = _projective_cache.get(key)
    if cached is not None and cached.module.algebra is algebra:
        return cached
    f = algebra.field
    space = Subspace.span(f, algebra.dim, algebra.right_mult_elem(algebra.idempotents[v]))
    action = [space.coords(algebra.left_mult(i).matmul(space.basis)) for i in range(algebra.dim)]
    module = Module(algebra, space.dim, action, name=f"P({algebra.vertex_labels[v]})")
    result = IndecomposableProjective(v, space, module)
    with _projective_lock:
        _projective_cache[key] = result
    return result


class ProjectiveModule:
    """(+)_k B e_{vertices[k]}."""

    def __init__(self, algebra: Algebra, vertices: Sequence[int]):
        self.algebra = algebra
        self.vertices: Tuple[int, ...] = tuple(vertices)
        self.summands = [indecomposable_projective(algebra, v) for v in self.vertices]
        self.sizes = [s.space.dim for s in self.summands]
        self.offsets = []
        total = 0
        for s in self.sizes:
            self.offsets.append(total)
            total += s
        self.dim = total

    @cached_property
    def module(self) -> Module:
        if not self.vertices:
            return zero_module(self.algebra)
        if len(self.vertices) == 1:
            return self.summands[0].module
        return direct_sum(*[s.module for s in self.summands]).module

    def is_zero(self) -> bool:
        return not self.vertices

    def multiplicities(self) -> List[int]:
        counts = [0] * self.algebra.vertex_count
        for v in self.vertices:
            counts[v] += 1
        return counts

    def component(self, x: Mat, k: int) -> Vector:
        """The k-th component of a vector of P, as an element of B."""
        s = self.summands[k]
        part = ml.extract(x, range(self.offsets[k], self.offsets[k] + self.sizes[k]), [0])
        return column_to_vec(s.space.basis.matmul(part))

    def dual(self) -> 'ProjectiveModule':
        """Hom_B(P, B) as the projective B^op-module on the same vertices."""
        return ProjectiveModule(opposite(self.algebra), self.vertices)

    def __repr__(self) -> str:
        labels = [self.algebra.vertex_labels[v] for v in self.vertices]
        return f"ProjectiveModule({'+'.join(f'P{x}' for x in labels) or '0'}, dim={self.dim})"


class ProjectiveMap:
    """A map P -> Q given by its z-matrix (len(P.vertices) x len(Q.vertices))."""

    def __init__(self, source: ProjectiveModule, target: ProjectiveModule,
                 z: Sequence[Sequence[Vector]]):
        if source.algebra != target.algebra:
            raise AlgebraMismatch("projective map between modules over different algebras")
        if len(z) != len(source.vertices) or any(len(row) != len(target.vertices) for row in z):
            raise MorphismError("z-matrix shape does not match the summands")
        self.source = source
        self.target = target
        self.z: List[List[Vector]] = [[dict(x) for x in row] for row in z]

    @cached_property
    def matrix(self) -> Mat:
        a = self.source.algebra
        f = a.field
        blocks = {}
        for k, src in enumerate(self.source.summands):
            for l, tgt in enumerate(self.target.summands):
                zkl = self.z[k][l]
                if not zkl:
                    continue
                image = a.right_mult_elem(zkl).matmul(src.space.basis)
                blocks[(l, k)] = tgt.space.coords(image)
        return ml.block_matrix(f, blocks, self.target.sizes, self.source.sizes)

    def morphism(self) -> Morphism:
        return Morphism(self.source.module, self.target.module, self.matrix)

    def then(self, after: 'ProjectiveMap') -> 'ProjectiveMap':
        """after o self, as the z-matrix product."""
        a = self.source.algebra
        rows = []
        for k in range(len(self.source.vertices)):
            row = []
            for m in range(len(after.target.vertices)):
                terms = [a.multiply(self.z[k][l], after.z[l][m])
                         for l in range(len(self.target.vertices))]
                row.append(vec_add(a.field, *terms))
            rows.append(row)
        return ProjectiveMap(self.source, after.target, rows)

    def dual(self) -> 'ProjectiveMap':
        """Hom_B(-, B) of this map: Q* -> P* over B^op."""
        zt = [[self.z[k][l] for k in range(len(self.source.vertices))]
              for l in range(len(self.target.vertices))]
        return ProjectiveMap(self.target.dual(), self.source.dual(), zt)

    def lands_in_radical(self) -> bool:
        rad = self.source.algebra.rad_space
        a = self.source.algebra
        return all(rad.contains(a.column(x)) for row in self.z for x in row if x)


@dataclass
class ProjectiveCover:
    projective: ProjectiveModule
    map: Morphism            # projective.module -> target
    generators: Mat          # columns: top lifts m_k, one per summand

    @property
    def target(self) -> Module:
        return self.map.target


def top_generators(m: Module) -> Tuple[List[int], Mat]:
    """Vertices and homogeneous lifts of a basis of top(M)."""
    f = m.field
    rad = radical_space(m)
    vertices: List[int] = []
    cols: List[Mat] = []
    for v in range(m.algebra.vertex_count):
        vspace = m.vertex_space(v)
        if not vspace.dim:
            continue
        ev = m.act(m.algebra.idempotents[v])
        base = Subspace.span(f, m.dim, ev.matmul(rad.basis)) if rad.dim else Subspace.zero(f, m.dim)
        _, chosen = base.extend_by(vspace.basis)
        for j in chosen:
            vertices.append(v)
            cols.append(ml.extract(vspace.basis, range(m.dim), [j]))
    return vertices, ml.hstack(f, m.dim, cols)


def cover_from_generators(m: Module, vertices: Sequence[int], gens: Mat) -> ProjectiveCover:
    """The map (+) B e_{v_k} -> M sending e_{v_k} to the k-th generator."""
    a = m.algebra
    f = m.field
    proj = ProjectiveModule(a, vertices)
    blocks = []
    for k, s in enumerate(proj.summands):
        mk = ml.extract(gens, range(m.dim), [k])
        y = ml.hstack(f, m.dim, [mat.matmul(mk) for mat in m.action])
        blocks.append(y.matmul(s.space.basis))
    matrix = ml.hstack(f, m.dim, blocks)
    return ProjectiveCover(proj, Morphism(proj.module, m, matrix), gens)


def projective_cover(m: Module) -> ProjectiveCover:
    """P(M) -> M lifting a basis of the top; its kernel is Omega(M)."""
    vertices, gens = top_generators(m)
    cover = cover_from_generators(m, vertices, gens)
    logger.debug(f"Projective cover {cover.projective!r} of a module of dim {m.dim}")
    return cover


def is_projective(m: Module) -> bool:
    return projective_cover(m).projective.dim == m.dim


def is_injective(m: Module) -> bool:
    return is_projective(dual(m))


def injective_envelope(m: Module) -> Morphism:
    """M -> I(M), the B-dual of the projective cover of D(M)."""
    cover = projective_cover(dual(m))
    injective = dual(cover.projective.module)
    return Morphism(m, injective, cover.map.matrix.transpose())



_proj_inj_cache: Dict[str, Tuple[int, ...]] = {}


def clear_projective_cache() -> None:
    with _projective_lock:
        _projective_cache.clear()
        _proj_inj_cache.clear()


def projective_injective_vertices(algebra: Algebra) -> Tuple[int, ...]:
    """Vertices v with B e_v injective."""
    key = algebra.fingerprint
    with _projective_lock:
        cached = _proj_inj_cache.get(key)
    if cached is None:
        cached = tuple(v for v in range(algebra.vertex_count)
                       if is_injective(indecomposable_projective(algebra, v).module))
        with _projective_lock:
            _proj_inj_cache[key] = cached
    return cached


def injective_indecomposable(algebra: Algebra, v: int) -> Module:
    """I(v) = D(e_v B)."""
    return dual(indecomposable_projective(opposite(algebra), v).module)


def projective_from_multiplicities(algebra: Algebra, mult: Sequence[int]) -> ProjectiveModule:
    vertices: List[int] = []
    for v, k in enumerate(mult):
        vertices.extend([v] * k)
    return ProjectiveModule(algebra, vertices)


def zero_projective(algebra: Algebra) -> ProjectiveModule:
    return ProjectiveModule(algebra, ())
