"""Left modules given by action matrices, morphisms and basic constructions."""

import hashlib
import logging
import threading
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from algebras.algebra import Algebra, Arrow, opposite
from config.config_loader import get_config
from exactlin import matrix as ml
from exactlin.matrix import Mat, Subspace
from utils.utils import AlgebraMismatch, MorphismError, ValidationError

logger = logging.getLogger(__name__)


def _assert_morphisms() -> bool:
    return bool(get_config().get('checks.assert_morphisms', True))


class Module:
    """A left module: one ``dim x dim`` matrix per basis element of the algebra."""

    def __init__(self, algebra: Algebra, dim: int, action: Sequence[Mat],
                 check: bool = False, name: Optional[str] = None):
        if len(action) != algebra.dim:
            raise ValidationError(
                f"module needs {algebra.dim} action matrices, got {len(action)}"
            )
        self.algebra = algebra
        self.field = algebra.field
        self.dim = dim
        self.action: Tuple[Mat, ...] = tuple(action)
        self.name = name
        self._vertex_spaces: Dict[int, Subspace] = {}
        self._arrow_mats: Dict[int, Mat] = {}
        self._coord_proj: Dict[int, Mat] = {}
        self._fingerprint: Optional[str] = None
        self._lock = threading.Lock()
        if check:
            self.check()

    def check(self) -> None:
        """Raise ValidationError unless the matrices define an action."""
        a = self.algebra
        for mat in self.action:
            if mat.shape != (self.dim, self.dim):
                raise ValidationError(f"action matrix of shape {mat.shape}, expected {self.dim}x{self.dim}")
        if not ml.equal(self.act(a.one), ml.identity(self.field, self.dim)):
            raise ValidationError("the unit does not act as the identity")
        for i in range(a.dim):
            for j in range(a.dim):
                lhs = self.action[i].matmul(self.action[j])
                if not ml.equal(lhs, self.act(a.product(i, j))):
                    raise ValidationError(
                        f"action is not multiplicative at ({a.labels[i]}, {a.labels[j]})"
                    )

    def act(self, u: Mapping[int, Any]) -> Mat:
        return ml.lin_comb(self.field, self.action, u, (self.dim, self.dim))

    def vertex_space(self, v: int) -> Subspace:
        """e_v M as a subspace of M."""
        if v not in self._vertex_spaces:
            space = Subspace.span(self.field, self.dim, self.act(self.algebra.idempotents[v]))
            with self._lock:
                self._vertex_spaces.setdefault(v, space)
        return self._vertex_spaces[v]

    def vertex_projection(self, v: int) -> Mat:
        """Coordinates of e_v x in the basis of e_v M, as a matrix in x."""
        if v not in self._coord_proj:
            space = self.vertex_space(v)
            proj = ml.extract(self.act(self.algebra.idempotents[v]), space.pivots, range(self.dim))
            with self._lock:
                self._coord_proj.setdefault(v, proj)
        return self._coord_proj[v]

    def arrow_matrix(self, index: int) -> Mat:
        """The arrow's action as a map e_source M -> e_target M in vertex coordinates."""
        if index not in self._arrow_mats:
            arrow: Arrow = self.algebra.arrows[index]
            src = self.vertex_space(arrow.source)
            tgt = self.vertex_space(arrow.target)
            mat = ml.extract(self.act(arrow.vector).matmul(src.basis), tgt.pivots, range(src.dim))
            with self._lock:
                self._arrow_mats.setdefault(index, mat)
        return self._arrow_mats[index]

    def generator_actions(self) -> List[Mat]:
        """Actions of the idempotents and arrows, which generate the algebra."""
        a = self.algebra
        return [self.act(e) for e in a.idempotents] + [self.act(x.vector) for x in a.arrows]

    @property
    def dimension_vector(self) -> Tuple[int, ...]:
        return tuple(self.vertex_space(v).dim for v in range(self.algebra.vertex_count))

    def is_zero(self) -> bool:
        return self.dim == 0

    @property
    def fingerprint(self) -> str:
        if self._fingerprint is None:
            f = self.field
            h = hashlib.sha256()
            h.update(f"{self.algebra.fingerprint};{self.dim};".encode())
            for mat in self.action:
                terms = sorted((i, j, f.to_json(v)) for i, row in ml.entries(mat).items()
                               for j, v in row.items())
                h.update(repr(terms).encode())
                h.update(b";")
            self._fingerprint = h.hexdigest()[:16]
        return self._fingerprint

    def __repr__(self) -> str:
        label = f"{self.name}, " if self.name else ""
        return f"Module({label}dim={self.dim}, dimvec={self.dimension_vector}, over {self.algebra!r})"


def check_same_algebra(m: Module, n: Module) -> None:
    if m.algebra != n.algebra:
        raise AlgebraMismatch(f"modules live over {m.algebra!r} and {n.algebra!r}")


@dataclass
class Morphism:
    """A module map; ``matrix`` is ``target.dim x source.dim``."""

    source: Module
    target: Module
    matrix: Mat
    checked: bool = False

    def __post_init__(self):
        check_same_algebra(self.source, self.target)
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise MorphismError(
                f"matrix of shape {self.matrix.shape} for a map {self.source.dim} -> {self.target.dim}"
            )
        if not self.checked and _assert_morphisms():
            self.verify()
            self.checked = True

    def verify(self) -> None:
        """Raise MorphismError unless the matrix intertwines the actions."""
        for gs, gt in zip(self.source.generator_actions(), self.target.generator_actions()):
            if not ml.equal(self.matrix.matmul(gs), gt.matmul(self.matrix)):
                raise MorphismError("matrix does not commute with the module actions")

    def compose(self, first: 'Morphism') -> 'Morphism':
        """self after first."""
        return Morphism(first.source, self.target, self.matrix.matmul(first.matrix), checked=True)

    @property
    def rank(self) -> int:
        return ml.rank(self.matrix)

    def is_injective(self) -> bool:
        return self.rank == self.source.dim

    def is_surjective(self) -> bool:
        return self.rank == self.target.dim

    def is_isomorphism(self) -> bool:
        return self.source.dim == self.target.dim and self.is_injective()

    def kernel(self) -> Tuple[Module, 'Morphism']:
        return submodule(self.source, Subspace.kernel(self.field, self.matrix))

    def image(self) -> Tuple[Module, 'Morphism']:
        return submodule(self.target, Subspace.span(self.field, self.target.dim, self.matrix))

    def cokernel(self) -> Tuple[Module, 'Morphism']:
        return quotient(self.target, Subspace.span(self.field, self.target.dim, self.matrix))

    @property
    def field(self):
        return self.source.field


def identity_morphism(m: Module) -> Morphism:
    return Morphism(m, m, ml.identity(m.field, m.dim), checked=True)


def zero_module(algebra: Algebra) -> Module:
    f = algebra.field
    return Module(algebra, 0, [ml.zeros(f, 0, 0)] * algebra.dim, name="0")


# -- sub, quotient, sums ---------------------------------------------------

def submodule(m: Module, space: Subspace) -> Tuple[Module, Morphism]:
    """The submodule on an invariant subspace, with its inclusion."""
    basis = space.basis
    action = [space.coords(mat.matmul(basis)) for mat in m.action]
    sub = Module(m.algebra, space.dim, action)
    return sub, Morphism(sub, m, basis)


def quotient(m: Module, space: Subspace) -> Tuple[Module, Morphism]:
    """M / W for an invariant subspace W, with the projection."""
    proj = space.quotient_projection()
    emb = space.complement_embedding()
    action = [proj.matmul(mat).matmul(emb) for mat in m.action]
    q = Module(m.algebra, m.dim - space.dim, action)
    return q, Morphism(m, q, proj)


def submodule_from_generators(m: Module, vectors: Mat) -> Tuple[Module, Morphism]:
    """Smallest submodule containing the columns of ``vectors``."""
    cols = [mat.matmul(vectors) for mat in m.action]
    space = Subspace.spanned_by(m.field, m.dim, cols) if cols else Subspace.zero(m.field, m.dim)
    return submodule(m, space)


@dataclass
class DirectSum:
    module: Module
    injections: List[Morphism]
    projections: List[Morphism]


def direct_sum(*modules: Module) -> DirectSum:
    if not modules:
        raise ValidationError("direct_sum needs at least one module")
    algebra = modules[0].algebra
    for m in modules[1:]:
        check_same_algebra(modules[0], m)
    f = algebra.field
    sizes = [m.dim for m in modules]
    total = sum(sizes)
    action = []
    for i in range(algebra.dim):
        blocks = {(k, k): m.action[i] for k, m in enumerate(modules)}
        action.append(ml.block_matrix(f, blocks, sizes, sizes))
    s = Module(algebra, total, action)
    injections, projections = [], []
    offset = 0
    for m in modules:
        inj = ml.from_entries(f, {offset + r: {r: f.one} for r in range(m.dim)}, total, m.dim)
        injections.append(Morphism(m, s, inj, checked=True))
        projections.append(Morphism(s, m, inj.transpose(), checked=True))
        offset += m.dim
    return DirectSum(s, injections, projections)


def direct_power(m: Module, k: int) -> Module:
    if k == 0:
        return zero_module(m.algebra)
    return direct_sum(*([m] * k)).module


# -- radical, top, socle ---------------------------------------------------

def radical_space(m: Module) -> Subspace:
    mats = [m.act(x.vector) for x in m.algebra.arrows]
    if not mats or m.dim == 0:
        return Subspace.zero(m.field, m.dim)
    return Subspace.spanned_by(m.field, m.dim, mats)


def rad_module(m: Module) -> Tuple[Module, Morphism]:
    """rad(A) M with its inclusion."""
    return submodule(m, radical_space(m))


def top(m: Module) -> Tuple[Module, Morphism]:
    """M / rad M with the projection."""
    return quotient(m, radical_space(m))


def socle_space(m: Module) -> Subspace:
    mats = [m.act(x.vector) for x in m.algebra.arrows]
    if not mats:
        return Subspace.whole(m.field, m.dim)
    return Subspace.kernel(m.field, ml.vstack(m.field, m.dim, mats))


def socle(m: Module) -> Tuple[Module, Morphism]:
    """Annihilator of rad(A) in M, with its inclusion."""
    return submodule(m, socle_space(m))


def top_dimension_vector(m: Module) -> Tuple[int, ...]:
    return top(m)[0].dimension_vector


# -- standard modules ------------------------------------------------------

def simple_module(algebra: Algebra, v: int) -> Module:
    f = algebra.field
    chars = algebra.simple_characters()[v]
    action = [ml.from_entries(f, {0: {0: c}}, 1, 1) for c in chars]
    return Module(algebra, 1, action, name=f"S({algebra.vertex_labels[v]})")


def simple_modules(algebra: Algebra) -> List[Module]:
    return [simple_module(algebra, v) for v in range(algebra.vertex_count)]


def regular_module(algebra: Algebra) -> Module:
    """A as a left module over itself."""
    return Module(algebra, algebra.dim, [algebra.left_mult(i) for i in range(algebra.dim)],
                  name="A")


def coregular_module(algebra: Algebra) -> Module:
    """D(A) = Hom_K(A_A, K) as a left module."""
    return Module(algebra, algebra.dim,
                  [algebra.right_mult(i).transpose() for i in range(algebra.dim)], name="D(A)")


def dual(m: Module) -> Module:
    """D(M) = Hom_K(M, K) over the opposite algebra."""
    name = f"D({m.name})" if m.name else None
    return Module(opposite(m.algebra), m.dim, [mat.transpose() for mat in m.action], name=name)


def dual_morphism(f: Morphism) -> Morphism:
    """D(f): D(target) -> D(source)."""
    return Morphism(dual(f.target), dual(f.source), f.matrix.transpose(), checked=True)


def module_from_matrices(algebra: Algebra, matrices: Sequence[Sequence[Sequence[Any]]],
                         name: Optional[str] = None) -> Module:
    """Module from dense Python matrices, one per basis element; validated."""
    f = algebra.field
    dim = len(matrices[0]) if matrices else 0
    mats = [ml.from_rows(f, mat, cols=dim) for mat in matrices]
    return Module(algebra, dim, mats, check=True, name=name)
