"""Finite-dimensional split basic algebras given by structure constants.

Elements are sparse coordinate vectors ``{basis index: scalar}``. Every
algebra carries a complete set of primitive orthogonal idempotents (the
vertices), a radical basis, and a set of homogeneous generators of the
radical modulo its square (the arrows); the arrows and idempotents generate
the algebra, which is what the module code relies on.
"""

import hashlib
import logging
import threading
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from exactlin import matrix as ml
from exactlin.field import FieldSpec
from exactlin.matrix import Mat, Subspace
from utils.utils import (
    BadIdempotents,
    BadRadical,
    BadUnit,
    NotAssociative,
)

logger = logging.getLogger(__name__)

Vector = Dict[int, Any]
Products = Dict[Tuple[int, int], Vector]


def vec_add(field: FieldSpec, *vectors: Mapping[int, Any]) -> Vector:
    out: Vector = {}
    for v in vectors:
        for k, c in v.items():
            out[k] = out.get(k, field.zero) + c
    return {k: c for k, c in out.items() if c}


def vec_scale(c, v: Mapping[int, Any]) -> Vector:
    return {k: c * x for k, x in v.items() if c * x}


def vec_to_column(field: FieldSpec, v: Mapping[int, Any], dim: int) -> Mat:
    return ml.from_entries(field, {k: {0: c} for k, c in v.items()}, dim, 1)


def column_to_vec(m: Mat, col: int = 0) -> Vector:
    return ml.column_entries(m, col)


@dataclass
class Arrow:
    """A homogeneous radical generator ``x = e_target * x * e_source``."""

    name: str
    vector: Vector
    source: int
    target: int


@dataclass
class AlgebraReport:
    """Structural flags computed by ``validate``."""

    connected: bool
    semisimple: bool
    selfinjective: bool
    dims: Tuple[int, int]
    radical_dim: int = 0
    loewy_length: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'connected': self.connected,
            'semisimple': self.semisimple,
            'selfinjective': self.selfinjective,
            'dims': list(self.dims),
            'radical_dim': self.radical_dim,
            'loewy_length': self.loewy_length,
        }


class Algebra:
    """An associative unital algebra with designated idempotents and radical."""

    def __init__(
        self,
        field: FieldSpec,
        labels: Sequence[str],
        products: Products,
        one: Vector,
        idempotents: Sequence[Vector],
        rad_basis: Optional[Mat] = None,
        arrows: Optional[Sequence[Arrow]] = None,
        vertex_labels: Optional[Sequence[str]] = None,
        name: Optional[str] = None,
        factors: Optional[Tuple['Algebra', 'Algebra']] = None,
    ):
        self.field = field
        self.dim = len(labels)
        self.labels = list(labels)
        self.products: Products = {k: dict(v) for k, v in products.items() if v}
        self.one: Vector = dict(one)
        self.idempotents: List[Vector] = [dict(e) for e in idempotents]
        self.vertex_labels = list(vertex_labels) if vertex_labels else [
            str(i) for i in range(len(self.idempotents))
        ]
        self.name = name
        self.factors = factors
        self._left: Dict[int, Mat] = {}
        self._right: Dict[int, Mat] = {}
        self._lock = threading.Lock()
        self._opposite: Optional['Algebra'] = None
        self._fingerprint: Optional[str] = None
        self._characters: Optional[List[List[Any]]] = None
        if rad_basis is None:
            rad_basis = self._trace_form_radical()
        self.rad_basis = rad_basis
        self._rad_space: Optional[Subspace] = None
        self._arrows = list(arrows) if arrows is not None else None

    # -- basic arithmetic -------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self.idempotents)

    def product(self, i: int, j: int) -> Vector:
        return self.products.get((i, j), {})

    def multiply(self, u: Mapping[int, Any], v: Mapping[int, Any]) -> Vector:
        acc: Vector = {}
        zero = self.field.zero
        for i, ci in u.items():
            for j, cj in v.items():
                c = ci * cj
                if not c:
                    continue
                for k, x in self.product(i, j).items():
                    acc[k] = acc.get(k, zero) + c * x
        return {k: c for k, c in acc.items() if c}

    def basis_vector(self, i: int) -> Vector:
        return {i: self.field.one}

    def column(self, v: Mapping[int, Any]) -> Mat:
        return vec_to_column(self.field, v, self.dim)

    def left_mult(self, i: int) -> Mat:
        """Matrix of x -> b_i x."""
        if i not in self._left:
            data: Dict[int, Dict[int, Any]] = {}
            for j in range(self.dim):
                for k, c in self.product(i, j).items():
                    data.setdefault(k, {})[j] = c
            self._left[i] = ml.from_entries(self.field, data, self.dim, self.dim)
        return self._left[i]

    def right_mult(self, i: int) -> Mat:
        """Matrix of x -> x b_i."""
        if i not in self._right:
            data: Dict[int, Dict[int, Any]] = {}
            for j in range(self.dim):
                for k, c in self.product(j, i).items():
                    data.setdefault(k, {})[j] = c
            self._right[i] = ml.from_entries(self.field, data, self.dim, self.dim)
        return self._right[i]

    def left_mult_elem(self, u: Mapping[int, Any]) -> Mat:
        return ml.lin_comb(self.field, [self.left_mult(i) for i in range(self.dim)],
                           u, (self.dim, self.dim))

    def right_mult_elem(self, u: Mapping[int, Any]) -> Mat:
        return ml.lin_comb(self.field, [self.right_mult(i) for i in range(self.dim)],
                           u, (self.dim, self.dim))

    # -- radical and generators -------------------------------------------

    def _trace_form_radical(self) -> Mat:
        if self.field.characteristic != 0:
            raise BadRadical(
                "a radical basis is required over a field of positive characteristic; "
                "supply rad_basis or describe the algebra as a quiver with relations"
            )
        # trace of L_{b_k}
        traces = [sum((ml.get(self.left_mult(k), j, j) for j in range(self.dim)), self.field.zero)
                  for k in range(self.dim)]
        gram: Dict[int, Dict[int, Any]] = {}
        for (i, j), prod in self.products.items():
            value = sum((c * traces[k] for k, c in prod.items()), self.field.zero)
            if value:
                gram.setdefault(i, {})[j] = value
        form = ml.from_entries(self.field, gram, self.dim, self.dim)
        return ml.kernel_basis(form)

    @property
    def rad_space(self) -> Subspace:
        if self._rad_space is None:
            self._rad_space = Subspace.from_rows(self.field, self.dim, self.rad_basis)
        return self._rad_space

    @property
    def arrows(self) -> List[Arrow]:
        if self._arrows is None:
            with self._lock:
                if self._arrows is None:
                    self._arrows = self._generate_arrows()
        return self._arrows

    def _generate_arrows(self) -> List[Arrow]:
        """Lift a basis of rad/rad^2 to elements of the pieces e_t rad e_s."""
        rad = self.rad_space
        rad_cols = rad.basis
        products = []
        for i in range(rad.dim):
            ri = column_to_vec(rad_cols, i)
            for j in range(rad.dim):
                rj = column_to_vec(rad_cols, j)
                p = self.multiply(ri, rj)
                if p:
                    products.append(self.column(p))
        current = Subspace.spanned_by(self.field, self.dim, products) if products \
            else Subspace.zero(self.field, self.dim)
        arrows: List[Arrow] = []
        for s in range(self.vertex_count):
            right = self.right_mult_elem(self.idempotents[s])
            for t in range(self.vertex_count):
                piece = self.left_mult_elem(self.idempotents[t]).matmul(right).matmul(rad_cols)
                if ml.is_zero(piece):
                    continue
                current, chosen = current.extend_by(piece)
                for j in chosen:
                    vec = column_to_vec(piece, j)
                    name = f"a{len(arrows)}"
                    arrows.append(Arrow(name, vec, s, t))
        return arrows

    def vertex_of(self, v: Mapping[int, Any]) -> Optional[Tuple[int, int]]:
        """(source, target) of a homogeneous element, or None."""
        for s, es in enumerate(self.idempotents):
            for t, et in enumerate(self.idempotents):
                if self.multiply(self.multiply(et, v), es) == {k: c for k, c in v.items() if c}:
                    return s, t
        return None

    def simple_characters(self) -> List[List[Any]]:
        """chi[v][i]: the scalar by which b_i acts on the simple at vertex v."""
        if self._characters is None:
            rad = self.rad_space
            chars = []
            for v, ev in enumerate(self.idempotents):
                ev_red = rad.reduce(self.column(ev))
                nz = ml.entries(ev_red)
                pos = next(iter(nz))
                denom = nz[pos][0]
                row = []
                for i in range(self.dim):
                    w = self.multiply(self.multiply(ev, {i: self.field.one}), ev)
                    red = rad.reduce(self.column(w))
                    row.append(ml.get(red, pos, 0) / denom)
                chars.append(row)
            self._characters = chars
        return self._characters

    # -- identity ---------------------------------------------------------

    @property
    def fingerprint(self) -> str:
        if self._fingerprint is None:
            f = self.field
            h = hashlib.sha256()
            h.update(f"char={f.characteristic};dim={self.dim};".encode())
            for (i, j) in sorted(self.products):
                terms = sorted((k, f.to_json(c)) for k, c in self.products[(i, j)].items())
                h.update(f"{i},{j}:{terms};".encode())
            h.update(f"one={sorted((k, f.to_json(c)) for k, c in self.one.items())};".encode())
            for e in self.idempotents:
                h.update(f"e={sorted((k, f.to_json(c)) for k, c in e.items())};".encode())
            self._fingerprint = h.hexdigest()[:16]
        return self._fingerprint

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Algebra) and self.fingerprint == other.fingerprint

    def __hash__(self) -> int:
        return hash(self.fingerprint)

    def __repr__(self) -> str:
        label = self.name or self.fingerprint
        return f"Algebra({label}, dim={self.dim}, vertices={self.vertex_count}, {self.field})"


# -- constructions --------------------------------------------------------

_tensor_cache: Dict[Tuple[str, str], Algebra] = {}
_tensor_lock = threading.Lock()
_ground_cache: Dict[int, Algebra] = {}


def clear_tensor_cache() -> None:
    with _tensor_lock:
        _tensor_cache.clear()


def ground_algebra(field: FieldSpec) -> Algebra:
    """The one-dimensional algebra K."""
    with _tensor_lock:
        if field.characteristic not in _ground_cache:
            one = {0: field.one}
            _ground_cache[field.characteristic] = Algebra(
                field, ["1"], {(0, 0): one}, one, [one],
                rad_basis=ml.zeros(field, 0, 1), arrows=[], vertex_labels=["*"], name="K",
            )
        return _ground_cache[field.characteristic]


def opposite(a: Algebra) -> Algebra:
    """Same basis with the multiplication reversed; arrows change direction."""
    if a._opposite is not None:
        return a._opposite
    if a.factors is not None:
        left, right = a.factors
        op = tensor_algebra(opposite(left), opposite(right))
    else:
        products = {(j, i): v for (i, j), v in a.products.items()}
        arrows = [Arrow(x.name, dict(x.vector), x.target, x.source) for x in a.arrows]
        name = f"{a.name}^op" if a.name else None
        op = Algebra(a.field, a.labels, products, a.one, a.idempotents,
                     rad_basis=a.rad_basis, arrows=arrows,
                     vertex_labels=a.vertex_labels, name=name)
    with a._lock:
        a._opposite = op
        op._opposite = a
    return op


def tensor_algebra(a: Algebra, b: Algebra) -> Algebra:
    """a ⊗_K b with basis index i*dim(b)+j and vertex index i*n_b+j."""
    a.field.check_same(b.field)
    key = (a.fingerprint, b.fingerprint)
    with _tensor_lock:
        cached = _tensor_cache.get(key)
    if cached is not None:
        return cached

    field = a.field
    db, nb = b.dim, b.vertex_count

    def pair(u: Mapping[int, Any], v: Mapping[int, Any]) -> Vector:
        return {i * db + j: x * y for i, x in u.items() for j, y in v.items() if x * y}

    products: Products = {}
    for (i1, i2), pa in a.products.items():
        for (j1, j2), pb in b.products.items():
            products[(i1 * db + j1, i2 * db + j2)] = pair(pa, pb)

    labels = [f"{x}⊗{y}" for x in a.labels for y in b.labels]
    idempotents = [pair(e, f) for e in a.idempotents for f in b.idempotents]
    vertex_labels = [f"{x}⊗{y}" for x in a.vertex_labels for y in b.vertex_labels]

    rows: List[Mat] = []
    rad_a = a.rad_space.rows
    rad_b = b.rad_space.rows
    if rad_a.shape[0]:
        rows.append(ml.kron(field, rad_a, ml.identity(field, db)))
    if rad_b.shape[0]:
        rows.append(ml.kron(field, ml.identity(field, a.dim), rad_b))
    stacked = ml.vstack(field, a.dim * db, rows)
    rad_basis = Subspace.from_rows(field, a.dim * db, stacked).rows

    arrows: List[Arrow] = []
    for x in a.arrows:
        for j, f in enumerate(b.idempotents):
            arrows.append(Arrow(f"{x.name}⊗{b.vertex_labels[j]}", pair(x.vector, f),
                                x.source * nb + j, x.target * nb + j))
    for i, e in enumerate(a.idempotents):
        for y in b.arrows:
            arrows.append(Arrow(f"{a.vertex_labels[i]}⊗{y.name}", pair(e, y.vector),
                                i * nb + y.source, i * nb + y.target))

    name = f"{a.name or a.fingerprint}⊗{b.name or b.fingerprint}"
    result = Algebra(field, labels, products, pair(a.one, b.one), idempotents,
                     rad_basis=rad_basis, arrows=arrows, vertex_labels=vertex_labels,
                     name=name, factors=(a, b))
    with _tensor_lock:
        cached = _tensor_cache.setdefault(key, result)
    logger.debug(f"Built tensor algebra {name} of dimension {result.dim}")
    return cached


def enveloping(a: Algebra) -> Algebra:
    """A^e = A ⊗ A^op; its modules are the A-bimodules."""
    return tensor_algebra(a, opposite(a))


def center_dim(a: Algebra) -> int:
    """Dimension of {z : z b_i = b_i z for all i}."""
    blocks = [a.left_mult(i).sub(a.right_mult(i)) for i in range(a.dim)]
    system = ml.vstack(a.field, a.dim, blocks)
    return a.dim - ml.rank(system)


def corner_algebra(a: Algebra, vertices: Sequence[int], name: Optional[str] = None) -> Algebra:
    """e A e for e the sum of the idempotents at ``vertices``."""
    field = a.field
    e = vec_add(field, *[a.idempotents[v] for v in vertices])
    proj = a.left_mult_elem(e).matmul(a.right_mult_elem(e))
    space = Subspace.span(field, a.dim, proj)
    basis = [column_to_vec(space.basis, k) for k in range(space.dim)]

    def coords(v: Mapping[int, Any]) -> Vector:
        return column_to_vec(space.coords(a.column(v)))

    products: Products = {}
    for i, u in enumerate(basis):
        for j, w in enumerate(basis):
            p = a.multiply(u, w)
            if p:
                products[(i, j)] = coords(p)
    rad_cols = proj.matmul(a.rad_space.basis)
    rad_coords = space.coords(rad_cols)
    rad_basis = Subspace.span(field, space.dim, rad_coords).rows
    labels = [a.labels[p] for p in space.pivots]
    return Algebra(field, labels, products, coords(e),
                   [coords(a.idempotents[v]) for v in vertices],
                   rad_basis=rad_basis,
                   vertex_labels=[a.vertex_labels[v] for v in vertices],
                   name=name or f"corner({a.name or a.fingerprint};{','.join(map(str, vertices))})")


def radical_power_dims(a: Algebra) -> List[int]:
    """Dimensions of rad^1, rad^2, ... down to the first zero power.

    Raises BadRadical when the powers stop decreasing before reaching zero.
    """
    field = a.field
    rad = a.rad_space
    dims = []
    current = rad
    while current.dim:
        dims.append(current.dim)
        cols = []
        for i in range(current.dim):
            u = column_to_vec(current.basis, i)
            for j in range(rad.dim):
                p = a.multiply(u, column_to_vec(rad.basis, j))
                if p:
                    cols.append(a.column(p))
        nxt = Subspace.spanned_by(field, a.dim, cols) if cols else Subspace.zero(field, a.dim)
        if nxt.dim >= current.dim:
            raise BadRadical(f"radical is not nilpotent: power of dimension {current.dim} is stable")
        current = nxt
    return dims


def validate(a: Algebra) -> AlgebraReport:
    """Check the algebra axioms and compute the structural report.

    Raises:
        NotAssociative, BadUnit, BadIdempotents, BadRadical
    """
    field = a.field
    d = a.dim
    left = [a.left_mult(i) for i in range(d)]
    for i in range(d):
        for j in range(d):
            expected = ml.lin_comb(field, left, a.product(i, j), (d, d))
            if not ml.equal(left[i].matmul(left[j]), expected):
                bad = _first_nonassociative(a, i, j)
                raise NotAssociative(
                    f"(b{i} b{j}) b{bad} != b{i} (b{j} b{bad}) "
                    f"for {a.labels[i]}, {a.labels[j]}, {a.labels[bad]}"
                )

    ident = ml.identity(field, d)
    if not ml.equal(a.left_mult_elem(a.one), ident):
        raise BadUnit("unit fails as a left identity")
    if not ml.equal(a.right_mult_elem(a.one), ident):
        raise BadUnit("unit fails as a right identity")

    n = a.vertex_count
    if n == 0:
        raise BadIdempotents("no idempotents given")
    for i, e in enumerate(a.idempotents):
        for j, f in enumerate(a.idempotents):
            p = a.multiply(e, f)
            if i == j and p != {k: c for k, c in e.items() if c}:
                raise BadIdempotents(f"idempotent {i} is not idempotent")
            if i != j and p:
                raise BadIdempotents(f"idempotents {i} and {j} are not orthogonal")
    if vec_add(field, *a.idempotents) != {k: c for k, c in a.one.items() if c}:
        raise BadIdempotents("idempotents do not sum to the unit")

    rad = a.rad_space
    for k in range(rad.dim):
        r = column_to_vec(rad.basis, k)
        for i in range(d):
            bi = a.basis_vector(i)
            if not rad.contains(a.column(a.multiply(bi, r))) or \
                    not rad.contains(a.column(a.multiply(r, bi))):
                raise BadRadical(f"radical is not a two-sided ideal (fails at basis element {a.labels[i]})")
    powers = radical_power_dims(a)
    if d - rad.dim != n:
        raise BadRadical(
            f"quotient by the radical has dimension {d - rad.dim}, expected {n} (one per idempotent)"
        )
    for i, e in enumerate(a.idempotents):
        if rad.contains(a.column(e)):
            raise BadRadical(f"idempotent {i} lies in the radical")

    report = AlgebraReport(
        connected=is_connected(a),
        semisimple=rad.dim == 0,
        selfinjective=is_selfinjective(a),
        dims=(d, n),
        radical_dim=rad.dim,
        loewy_length=len(powers) + 1 if d else 0,
    )
    logger.debug(f"Validated {a!r}: {report.to_dict()}")
    return report


def _first_nonassociative(a: Algebra, i: int, j: int) -> int:
    bi, bj = a.basis_vector(i), a.basis_vector(j)
    for k in range(a.dim):
        bk = a.basis_vector(k)
        if a.multiply(a.multiply(bi, bj), bk) != a.multiply(bi, a.multiply(bj, bk)):
            return k
    return 0


def link_graph(a: Algebra) -> Dict[int, List[int]]:
    """Undirected adjacency of vertices i, j with e_i A e_j != 0."""
    adj: Dict[int, List[int]] = {v: [] for v in range(a.vertex_count)}
    for i, ei in enumerate(a.idempotents):
        li = a.left_mult_elem(ei)
        for j, ej in enumerate(a.idempotents):
            if i == j:
                continue
            if not ml.is_zero(li.matmul(a.right_mult_elem(ej))):
                adj[i].append(j)
                adj[j].append(i)
    return adj


def is_connected(a: Algebra) -> bool:
    adj = link_graph(a)
    if not adj:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == a.vertex_count


def is_selfinjective(a: Algebra) -> bool:
    """The regular module is injective."""
    from modrep.module import regular_module
    from modrep.projectives import is_injective
    return is_injective(regular_module(a))

