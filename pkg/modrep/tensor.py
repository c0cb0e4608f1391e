"""M (x)_B N as a quotient of M (x)_K N."""

import logging
from typing import Any, Callable, Mapping, Optional, Tuple

from algebras.algebra import Algebra, Vector, ground_algebra, opposite, tensor_algebra
from exactlin import matrix as ml
from exactlin.matrix import Mat, Subspace
from modrep.module import Module
from utils.utils import AlgebraMismatch

logger = logging.getLogger(__name__)

ActionFn = Callable[[Mapping[int, Any]], Mat]


def embed_first(t: Algebra, u: Mapping[int, Any]) -> Vector:
    """u (x) 1 in t = C (x) D."""
    c, d = t.factors
    return {i * d.dim + j: x * y for i, x in u.items() for j, y in d.one.items() if x * y}


def embed_second(t: Algebra, u: Mapping[int, Any]) -> Vector:
    """1 (x) u in t = C (x) D."""
    c, d = t.factors
    return {i * d.dim + j: x * y for i, x in c.one.items() for j, y in u.items() if x * y}


def split_right(m: Module, over: Algebra) -> Tuple[Optional[Algebra], ActionFn]:
    """For a module over B^op or C (x) B^op: (C or None, b -> right action of b)."""
    op = opposite(over)
    a = m.algebra
    if a == op:
        return None, m.act
    if a.factors is not None and a.factors[1] == op:
        return a.factors[0], lambda u: m.act(embed_second(a, u))
    raise AlgebraMismatch(f"{a!r} has no right {over!r} structure")


def split_left(n: Module, over: Algebra) -> Tuple[Optional[Algebra], ActionFn]:
    """For a module over B or B (x) E: (E or None, b -> left action of b)."""
    a = n.algebra
    if a == over:
        return None, n.act
    if a.factors is not None and a.factors[0] == over:
        return a.factors[1], lambda u: n.act(embed_first(a, u))
    raise AlgebraMismatch(f"{a!r} has no left {over!r} structure")


def tensor_over(m: Module, n: Module, over: Algebra) -> Module:
    """M (x)_B N.

    ``m`` is a right B-module (a module over B^op, or over C (x) B^op for a
    C-B-bimodule) and ``n`` a left B-module (over B, or B (x) E). The result is
    a module over C (x) E, C, E or the ground field, whichever structure is left.
    """
    f = m.field
    left_alg, right_act = split_right(m, over)
    right_alg, left_act = split_left(n, over)
    dm, dn = m.dim, n.dim
    total = dm * dn
    id_m = ml.identity(f, dm)
    id_n = ml.identity(f, dn)

    relations = []
    generators = list(over.idempotents) + [x.vector for x in over.arrows]
    for g in generators:
        rel = ml.kron(f, right_act(g), id_n).sub(ml.kron(f, id_m, left_act(g)))
        if not ml.is_zero(rel):
            relations.append(rel)
    space = Subspace.spanned_by(f, total, relations) if relations else Subspace.zero(f, total)
    proj = space.quotient_projection()
    emb = space.complement_embedding()
    qdim = total - space.dim

    def induced(mat: Mat) -> Mat:
        return proj.matmul(mat).matmul(emb)

    if left_alg is not None and right_alg is not None:
        result_alg = tensor_algebra(left_alg, right_alg)
        lm = [m.act(embed_first(m.algebra, {i: f.one})) for i in range(left_alg.dim)]
        rn = [n.act(embed_second(n.algebra, {j: f.one})) for j in range(right_alg.dim)]
        action = [induced(ml.kron(f, lm[i], rn[j]))
                  for i in range(left_alg.dim) for j in range(right_alg.dim)]
    elif left_alg is not None:
        result_alg = left_alg
        action = [induced(ml.kron(f, m.act(embed_first(m.algebra, {i: f.one})), id_n))
                  for i in range(left_alg.dim)]
    elif right_alg is not None:
        result_alg = right_alg
        action = [induced(ml.kron(f, id_m, n.act(embed_second(n.algebra, {j: f.one}))))
                  for j in range(right_alg.dim)]
    else:
        result_alg = ground_algebra(f)
        action = [ml.identity(f, qdim)]
    logger.debug(f"Tensor product over {over!r}: {dm} x {dn} -> {qdim}")
    return Module(result_alg, qdim, action)
