"""Hom spaces, the A-dual and the evaluation map.

A homomorphism M -> N is determined by its restrictions e_v M -> e_v N, so
the unknowns are one block per vertex and every arrow x: s -> t contributes
the equations ``X_t x_M = x_N X_s``.
"""

import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Any, Dict, List, Mapping

from algebras.algebra import opposite
from exactlin import matrix as ml
from exactlin.matrix import Mat, Subspace
from modrep.module import Module, Morphism, check_same_algebra, regular_module

logger = logging.getLogger(__name__)


@dataclass
class HomSpace:
    """A basis of Hom_B(source, target) with exact coordinates."""

    source: Module
    target: Module
    basis: List[Mat]
    _solutions: Subspace
    _offsets: List[int] = dataclass_field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def morphisms(self) -> List[Morphism]:
        return [Morphism(self.source, self.target, f, checked=True) for f in self.basis]

    def combination(self, coeffs: Mapping[int, Any]) -> Mat:
        shape = (self.target.dim, self.source.dim)
        return ml.lin_comb(self.source.field, self.basis, coeffs, shape)

    def unknowns(self, f: Mat) -> Mat:
        """The vertex blocks of f flattened into a column."""
        m, n = self.source, self.target
        entries: Dict[int, Dict[int, Any]] = {}
        for v in range(m.algebra.vertex_count):
            sv, tv = m.vertex_space(v), n.vertex_space(v)
            if not sv.dim or not tv.dim:
                continue
            block = ml.entries(tv.coords(f.matmul(sv.basis)))
            off = self._offsets[v]
            for r, row in block.items():
                for c, val in row.items():
                    entries[off + r * sv.dim + c] = {0: val}
        return ml.from_entries(m.field, entries, self._solutions.ambient, 1)

    def coords(self, f: Mat) -> Mat:
        """Coordinates of a homomorphism in ``basis`` (a dim x 1 column)."""
        return self._solutions.coords(self.unknowns(f))

    def contains(self, f: Mat) -> bool:
        return self._solutions.contains(self.unknowns(f))


def hom_space(m: Module, n: Module) -> HomSpace:
    """Basis of Hom_B(m, n) from the vertex-block linear system."""
    check_same_algebra(m, n)
    a = m.algebra
    f = m.field
    nv = a.vertex_count
    src_dims = [m.vertex_space(v).dim for v in range(nv)]
    tgt_dims = [n.vertex_space(v).dim for v in range(nv)]
    offsets = []
    total = 0
    for v in range(nv):
        offsets.append(total)
        total += src_dims[v] * tgt_dims[v]

    def unknown(v: int, r: int, c: int) -> int:
        return offsets[v] + r * src_dims[v] + c

    rows: Dict[int, Dict[int, Any]] = {}
    eq = 0
    for idx, arrow in enumerate(a.arrows):
        s, t = arrow.source, arrow.target
        if not (src_dims[s] and tgt_dims[t]):
            continue
        am = ml.entries(m.arrow_matrix(idx))        # src_dims[t] x src_dims[s]
        an = ml.entries(n.arrow_matrix(idx))        # tgt_dims[t] x tgt_dims[s]
        for i in range(tgt_dims[t]):
            for j in range(src_dims[s]):
                row: Dict[int, Any] = {}
                # (X_t A^M)[i, j]
                for k in range(src_dims[t]):
                    val = am.get(k, {}).get(j)
                    if val:
                        key = unknown(t, i, k)
                        row[key] = row.get(key, f.zero) + val
                # -(A^N X_s)[i, j]
                for k, val in an.get(i, {}).items():
                    key = unknown(s, k, j)
                    row[key] = row.get(key, f.zero) - val
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows[eq] = row
                    eq += 1
    system = ml.from_entries(f, rows, eq, total)
    solutions = Subspace.kernel(f, system)

    basis: List[Mat] = []
    sol_rows = ml.entries(solutions.rows)
    for k in range(solutions.dim):
        vec = sol_rows.get(k, {})
        fmat = ml.zeros(f, n.dim, m.dim)
        for v in range(nv):
            if not (src_dims[v] and tgt_dims[v]):
                continue
            block = {}
            for r in range(tgt_dims[v]):
                for c in range(src_dims[v]):
                    val = vec.get(unknown(v, r, c))
                    if val:
                        block.setdefault(r, {})[c] = val
            if not block:
                continue
            xv = ml.from_entries(f, block, tgt_dims[v], src_dims[v])
            fmat = fmat.add(n.vertex_space(v).basis.matmul(xv).matmul(m.vertex_projection(v)))
        basis.append(fmat)
    logger.debug(f"Hom space of dimension {len(basis)} between modules of dims {m.dim}, {n.dim}")
    return HomSpace(m, n, basis, solutions, offsets)


def hom_dim(m: Module, n: Module) -> int:
    return hom_space(m, n).dim


def end_space(m: Module) -> HomSpace:
    return hom_space(m, m)


@dataclass
class ADual:
    """M* = Hom_B(M, B) as a module over B^op, with the Hom basis it is built on."""

    module: Module
    hom: HomSpace


def a_dual_with_basis(m: Module) -> ADual:
    b = m.algebra
    f = m.field
    reg = regular_module(b)
    hom = hom_space(m, reg)
    action = []
    for i in range(b.dim):
        cols = [hom.coords(b.right_mult(i).matmul(F)) for F in hom.basis]
        action.append(ml.hstack(f, hom.dim, cols))
    name = f"{m.name}*" if m.name else None
    return ADual(Module(opposite(b), hom.dim, action, name=name), hom)


def a_dual(m: Module) -> Module:
    """M* = Hom_B(M, B); (F.b)(x) = F(x) b makes it a left B^op-module."""
    return a_dual_with_basis(m).module


def evaluation_map(m: Module) -> Morphism:
    """ev_M: M -> M**, ev(x)(F) = F(x)."""
    f = m.field
    first = a_dual_with_basis(m)
    second = a_dual_with_basis(first.module)
    double = second.module
    cols = []
    for j in range(m.dim):
        # ev(e_j): M* -> B, column k is F_k(e_j)
        evj = ml.hstack(f, m.algebra.dim,
                        [ml.extract(F, range(F.shape[0]), [j]) for F in first.hom.basis])
        cols.append(second.hom.coords(evj))
    matrix = ml.hstack(f, double.dim, cols)
    return Morphism(m, double, matrix)


def is_torsionless_by_evaluation(m: Module) -> bool:
    return evaluation_map(m).is_injective()


def is_reflexive_by_evaluation(m: Module) -> bool:
    return evaluation_map(m).is_isomorphism()

