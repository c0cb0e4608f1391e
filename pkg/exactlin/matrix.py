"""Exact matrices over a FieldSpec.

``Mat`` is sympy's ``DomainMatrix`` kept in its sparse (SDM) storage so that
every arithmetic operation stays in one format. Row reduction comes from
sympy; kernels, solutions and subspace bookkeeping are read off the reduced
row echelon form.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from exactlin.field import FieldSpec

Mat = DomainMatrix
Entries = Dict[int, Dict[int, object]]


def from_entries(field: FieldSpec, entries: Mapping[int, Mapping[int, object]],
                 rows: int, cols: int) -> Mat:
    """Build a matrix from a sparse dict of domain elements, dropping zeros."""
    clean: Entries = {}
    for i, row in entries.items():
        kept = {j: v for j, v in row.items() if v}
        if kept:
            clean[i] = kept
    return DomainMatrix(clean, (rows, cols), field.domain)


def zeros(field: FieldSpec, rows: int, cols: int) -> Mat:
    return DomainMatrix({}, (rows, cols), field.domain)


def identity(field: FieldSpec, n: int) -> Mat:
    one = field.one
    return DomainMatrix({i: {i: one} for i in range(n)}, (n, n), field.domain)


def from_rows(field: FieldSpec, rows: Sequence[Sequence[object]], cols: Optional[int] = None) -> Mat:
    """Matrix from Python values (ints, Fractions, "p/q" strings)."""
    ncols = cols if cols is not None else (len(rows[0]) if rows else 0)
    entries: Entries = {}
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            x = field.scalar(value)
            if x:
                entries.setdefault(i, {})[j] = x
    return DomainMatrix(entries, (len(rows), ncols), field.domain)


def column(field: FieldSpec, values: Sequence[object]) -> Mat:
    return from_rows(field, [[v] for v in values], cols=1)


def unit_column(field: FieldSpec, n: int, index: int) -> Mat:
    return DomainMatrix({index: {0: field.one}}, (n, 1), field.domain)


def entries(m: Mat) -> Entries:
    """Nonzero entries as a fresh dict of dicts."""
    rep = m.to_sparse().rep
    return {i: {j: v for j, v in row.items() if v} for i, row in rep.items() if row}


def get(m: Mat, i: int, j: int):
    row = m.to_sparse().rep.get(i)
    if row and j in row:
        return row[j]
    return m.domain.zero


def column_entries(v: Mat, col: int = 0) -> Dict[int, object]:
    """Nonzero entries of one column as index -> scalar."""
    out = {}
    for i, row in entries(v).items():
        if col in row:
            out[i] = row[col]
    return out


def to_python_rows(field: FieldSpec, m: Mat) -> List[List[object]]:
    rows, cols = m.shape
    data = entries(m)
    return [[field.to_json(data[i][j]) if i in data and j in data[i] else 0
             for j in range(cols)] for i in range(rows)]


def is_zero(m: Mat) -> bool:
    return not entries(m)


def equal(a: Mat, b: Mat) -> bool:
    return a.shape == b.shape and is_zero(a.sub(b))


def lin_comb(field: FieldSpec, mats: Sequence[Mat], coeffs: Mapping[int, object],
             shape: Tuple[int, int]) -> Mat:
    """Sum of coeffs[i] * mats[i]."""
    acc: Entries = {}
    for idx, c in coeffs.items():
        if not c:
            continue
        for i, row in entries(mats[idx]).items():
            target = acc.setdefault(i, {})
            for j, v in row.items():
                target[j] = target.get(j, field.zero) + c * v
    return from_entries(field, acc, *shape)


def scale(field: FieldSpec, m: Mat, c) -> Mat:
    return from_entries(field, {i: {j: c * v for j, v in row.items()}
                                for i, row in entries(m).items()}, *m.shape)


def kron(field: FieldSpec, a: Mat, b: Mat) -> Mat:
    ar, ac = a.shape
    br, bc = b.shape
    out: Entries = {}
    eb = entries(b)
    for i, row in entries(a).items():
        for j, x in row.items():
            for k, brow in eb.items():
                target = out.setdefault(i * br + k, {})
                for l, y in brow.items():
                    target[j * bc + l] = x * y
    return from_entries(field, out, ar * br, ac * bc)


def hstack(field: FieldSpec, rows: int, blocks: Sequence[Mat]) -> Mat:
    """Horizontal concatenation, tolerating an empty block list."""
    out: Entries = {}
    offset = 0
    for blk in blocks:
        for i, row in entries(blk).items():
            target = out.setdefault(i, {})
            for j, v in row.items():
                target[offset + j] = v
        offset += blk.shape[1]
    return from_entries(field, out, rows, offset)


def vstack(field: FieldSpec, cols: int, blocks: Sequence[Mat]) -> Mat:
    out: Entries = {}
    offset = 0
    for blk in blocks:
        for i, row in entries(blk).items():
            out[offset + i] = dict(row)
        offset += blk.shape[0]
    return from_entries(field, out, offset, cols)


def block_matrix(field: FieldSpec, blocks: Mapping[Tuple[int, int], Mat],
                 row_sizes: Sequence[int], col_sizes: Sequence[int]) -> Mat:
    """Assemble a block matrix; missing blocks are zero."""
    row_off = [0]
    for s in row_sizes:
        row_off.append(row_off[-1] + s)
    col_off = [0]
    for s in col_sizes:
        col_off.append(col_off[-1] + s)
    out: Entries = {}
    for (bi, bj), blk in blocks.items():
        for i, row in entries(blk).items():
            target = out.setdefault(row_off[bi] + i, {})
            for j, v in row.items():
                key = col_off[bj] + j
                target[key] = target.get(key, field.zero) + v
    return from_entries(field, out, row_off[-1], col_off[-1])


def extract(m: Mat, rows: Sequence[int], cols: Sequence[int]) -> Mat:
    """Submatrix; indices may repeat or be empty."""
    src = entries(m)
    col_pos: Dict[int, List[int]] = {}
    for new_j, j in enumerate(cols):
        col_pos.setdefault(j, []).append(new_j)
    out: Entries = {}
    for new_i, i in enumerate(rows):
        row = src.get(i)
        if not row:
            continue
        target = {}
        for j, v in row.items():
            for new_j in col_pos.get(j, ()):
                target[new_j] = v
        if target:
            out[new_i] = target
    return DomainMatrix(out, (len(rows), len(cols)), m.domain)


def rref(m: Mat) -> Tuple[Mat, Tuple[int, ...], int]:
    """Reduced row echelon form, pivot columns and rank."""
    rows, cols = m.shape
    if rows == 0 or cols == 0 or is_zero(m):
        return m.to_sparse(), (), 0
    reduced, pivots = m.to_sparse().rref()
    pivots = tuple(int(p) for p in pivots)
    return reduced.to_sparse(), pivots, len(pivots)


def rank(m: Mat) -> int:
    return rref(m)[2]


def _reduced_rows(m: Mat) -> Tuple[List[Dict[int, object]], Tuple[int, ...]]:
    reduced, pivots, r = rref(m)
    data = entries(reduced)
    return [data.get(i, {}) for i in range(r)], pivots


def kernel_basis(m: Mat) -> Mat:
    """Rows spanning the right null space {v : m v^T = 0}.

    Row k has a 1 in the k-th free column and 0 in the other free columns.
    """
    rows, cols = m.shape
    K = m.domain
    red_rows, pivots = _reduced_rows(m)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    out: Entries = {}
    for k, f in enumerate(free):
        vec = {f: K.one}
        for r, p in enumerate(pivots):
            val = red_rows[r].get(f)
            if val:
                vec[p] = -val
        out[k] = vec
    return DomainMatrix(out, (len(free), cols), K)


def kernel_free_columns(m: Mat) -> Tuple[int, ...]:
    """Columns at which the rows of ``kernel_basis(m)`` form an identity."""
    _, pivots, _ = rref(m)
    pivot_set = set(pivots)
    return tuple(c for c in range(m.shape[1]) if c not in pivot_set)


def solve(m: Mat, b: Mat) -> Optional[Mat]:
    """Some x with m x = b, or None when the system is inconsistent."""
    rows, n = m.shape
    K = m.domain
    k = b.shape[1]
    if rows == 0:
        return DomainMatrix({}, (n, k), K) if is_zero(b) else None
    aug = DomainMatrix.hstack(m.to_sparse(), b.to_sparse())
    red_rows, pivots = _reduced_rows(aug)
    if any(p >= n for p in pivots):
        return None
    out: Entries = {}
    for r, p in enumerate(pivots):
        sol = {j - n: v for j, v in red_rows[r].items() if j >= n}
        if sol:
            out[p] = sol
    return DomainMatrix(out, (n, k), K)


def is_invertible(m: Mat) -> bool:
    r, c = m.shape
    return r == c and rank(m) == r


def inverse(m: Mat) -> Mat:
    n = m.shape[0]
    field_domain = m.domain
    ident = DomainMatrix({i: {i: field_domain.one} for i in range(n)}, (n, n), field_domain)
    x = solve(m, ident)
    if x is None:
        raise ZeroDivisionError("matrix is singular")
    return x


def charpoly(m: Mat) -> List[object]:
    """Characteristic polynomial coefficients, leading coefficient first."""
    if m.shape[0] == 0:
        return [m.domain.one]
    return list(m.to_dense().charpoly())


def power(field: FieldSpec, m: Mat, k: int) -> Mat:
    result = identity(field, m.shape[0])
    base = m
    while k > 0:
        if k & 1:
            result = result.matmul(base)
        base = base.matmul(base)
        k >>= 1
    return result


@dataclass(frozen=True)
class Subspace:
    """A subspace of K^n stored by a basis in reduced form.

    ``rows`` is k x n and its columns at ``pivots`` form the identity, so the
    coordinates of a vector of the subspace are its entries at the pivots.
    """

    field: FieldSpec
    ambient: int
    rows: Mat
    pivots: Tuple[int, ...]

    @classmethod
    def from_rows(cls, field: FieldSpec, ambient: int, rows: Mat) -> "Subspace":
        red_rows, pivots = _reduced_rows(rows) if rows.shape[0] else ([], ())
        data = {i: r for i, r in enumerate(red_rows) if r}
        basis = from_entries(field, data, len(pivots), ambient)
        return cls(field, ambient, basis, pivots)

    @classmethod
    def span(cls, field: FieldSpec, ambient: int, columns: Mat) -> "Subspace":
        """Span of the columns of an ambient x t matrix."""
        return cls.from_rows(field, ambient, columns.transpose())

    @classmethod
    def spanned_by(cls, field: FieldSpec, ambient: int, blocks: Iterable[Mat]) -> "Subspace":
        blocks = list(blocks)
        return cls.span(field, ambient, hstack(field, ambient, blocks))

    @classmethod
    def kernel(cls, field: FieldSpec, m: Mat) -> "Subspace":
        """Null space {v : m v = 0}."""
        return cls(field, m.shape[1], kernel_basis(m), kernel_free_columns(m))

    @classmethod
    def whole(cls, field: FieldSpec, n: int) -> "Subspace":
        return cls(field, n, identity(field, n), tuple(range(n)))

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> "Subspace":
        return cls(field, n, zeros(field, 0, n), ())

    @property
    def dim(self) -> int:
        return len(self.pivots)

    @property
    def basis(self) -> Mat:
        """Basis vectors as the columns of an ambient x dim matrix."""
        return self.rows.transpose()

    def coords(self, v: Mat) -> Mat:
        """Coordinates of the columns of v, assumed to lie in the subspace."""
        return extract(v, self.pivots, range(v.shape[1]))

    def reduce(self, v: Mat) -> Mat:
        if not self.pivots:
            return v
        return v.sub(self.basis.matmul(self.coords(v)))

    def contains(self, v: Mat) -> bool:
        return is_zero(self.reduce(v))

    def contains_space(self, other: "Subspace") -> bool:
        return other.dim == 0 or self.contains(other.basis)

    def add(self, columns: Mat) -> "Subspace":
        stacked = vstack(self.field, self.ambient, [self.rows, columns.transpose()])
        return Subspace.from_rows(self.field, self.ambient, stacked)

    def __add__(self, other: "Subspace") -> "Subspace":
        return self.add(other.basis)

    @property
    def complement(self) -> Tuple[int, ...]:
        pivot_set = set(self.pivots)
        return tuple(c for c in range(self.ambient) if c not in pivot_set)

    def quotient_projection(self) -> Mat:
        """Matrix of K^n -> K^n / W in the coordinates of ``complement``."""
        comp = self.complement
        data = entries(self.rows)
        out: Entries = {}
        for idx, c in enumerate(comp):
            row = {c: self.field.one}
            for r, p in enumerate(self.pivots):
                val = data.get(r, {}).get(c)
                if val:
                    row[p] = -val
            out[idx] = row
        return from_entries(self.field, out, len(comp), self.ambient)

    def complement_embedding(self) -> Mat:
        comp = self.complement
        return from_entries(self.field, {c: {idx: self.field.one} for idx, c in enumerate(comp)},
                            self.ambient, len(comp))

    def extend_by(self, candidates: Mat) -> Tuple["Subspace", List[int]]:
        """Greedily add candidate columns that are independent modulo self."""
        current = self
        chosen: List[int] = []
        for j in range(candidates.shape[1]):
            col = extract(candidates, range(self.ambient), [j])
            if not current.contains(col):
                current = current.add(col)
                chosen.append(j)
        return current, chosen
