"""Bimodules as modules over tensor algebras.

An A-B-bimodule is a left module over A (x) B^op. A right module over
C (x) D is a left module over C^op (x) D^op; ``swap_factors`` reorders the
two tensor factors so that such modules can be read as bimodules again.
"""

import logging
from typing import Any, List, Mapping, Optional, Sequence, Tuple

from algebras.algebra import Algebra, ground_algebra, opposite, tensor_algebra
from exactlin import matrix as ml
from exactlin.matrix import Mat
from modrep.hom import HomSpace, hom_space
from modrep.module import Module, dual
from modrep.tensor import embed_first, embed_second
from utils.utils import AlgebraMismatch, ValidationError

logger = logging.getLogger(__name__)


def _factors(m: Module) -> Tuple[Algebra, Algebra]:
    if m.algebra.factors is None:
        raise AlgebraMismatch(f"{m.algebra!r} is not a tensor product of two algebras")
    return m.algebra.factors


def restrict_first(m: Module) -> Module:
    """Restriction along c -> c (x) 1."""
    c, _ = _factors(m)
    f = m.field
    return Module(c, m.dim, [m.act(embed_first(m.algebra, {i: f.one})) for i in range(c.dim)])


def restrict_second(m: Module) -> Module:
    """Restriction along d -> 1 (x) d."""
    _, d = _factors(m)
    f = m.field
    return Module(d, m.dim, [m.act(embed_second(m.algebra, {j: f.one})) for j in range(d.dim)])


def swap_factors(m: Module) -> Module:
    """A module over C (x) D read as a module over D (x) C."""
    c, d = _factors(m)
    target = tensor_algebra(d, c)
    action = [m.action[i * d.dim + j] for j in range(d.dim) for i in range(c.dim)]
    name = f"swap({m.name})" if m.name else None
    return Module(target, m.dim, action, name=name)


def bimodule_dual(m: Module) -> Module:
    """D(X) of an A-B-bimodule as a B-A-bimodule."""
    return swap_factors(dual(m))


def bimodule_from_actions(a: Algebra, left: Sequence[Mat], right: Sequence[Mat],
                          b: Optional[Algebra] = None) -> Module:
    """Assemble an A-B-bimodule from a left A-action and a commuting right B-action.

    ``right[j]`` is the matrix of x -> x b_j.

    Raises:
        ValidationError: the two actions do not commute
    """
    b = b or a
    f = a.field
    dim = left[0].shape[0] if left else 0
    for i, li in enumerate(left):
        for j, rj in enumerate(right):
            if not ml.equal(li.matmul(rj), rj.matmul(li)):
                raise ValidationError(f"left action of {a.labels[i]} and right action of "
                                      f"{b.labels[j]} do not commute")
    env = tensor_algebra(a, opposite(b))
    action = [left[i].matmul(right[j]) for i in range(a.dim) for j in range(b.dim)]
    return Module(env, dim, action)


def bimodule_actions(m: Module) -> Tuple[List[Mat], List[Mat]]:
    """(left actions of A, right actions of B) of an A-B-bimodule."""
    return restrict_first(m).action, restrict_second(m).action


def _second_action(x: Module, first: Algebra):
    """(second factor or None, u -> action of 1 (x) u) for a module over first or first (x) P."""
    if x.algebra == first:
        return None, None
    if x.algebra.factors is not None and x.algebra.factors[0] == first:
        return x.algebra.factors[1], (lambda u: x.act(embed_second(x.algebra, u)))
    raise AlgebraMismatch(f"{x.algebra!r} is not a module over {first!r} in the first factor")


def hom_bimodule(x: Module, y: Module, over: Algebra) -> Module:
    """Hom_over(X, Y) with the structure left over from the second factors.

    For X over ``over`` (x) P and Y over ``over`` (x) Q the result is a module over
    P^op (x) Q with (p (x) q) F = y(1 (x) q) F x(1 (x) p).
    """
    return hom_bimodule_with_basis(x, y, over)[0]


def hom_bimodule_with_basis(x: Module, y: Module, over: Algebra) -> Tuple[Module, HomSpace]:
    f = x.field
    p_alg, p_act = _second_action(x, over)
    q_alg, q_act = _second_action(y, over)
    xr = x if p_alg is None else restrict_first(x)
    yr = y if q_alg is None else restrict_first(y)
    hom = hom_space(xr, yr)

    def induced(left: Optional[Mat], right: Optional[Mat]) -> Mat:
        cols = []
        for F in hom.basis:
            g = F
            if right is not None:
                g = g.matmul(right)
            if left is not None:
                g = left.matmul(g)
            cols.append(hom.coords(g))
        return ml.hstack(f, hom.dim, cols)

    def unit(i: int) -> Mapping[int, Any]:
        return {i: f.one}

    if p_alg is not None and q_alg is not None:
        alg = tensor_algebra(opposite(p_alg), q_alg)
        q_mats = [q_act(unit(j)) for j in range(q_alg.dim)]
        p_mats = [p_act(unit(i)) for i in range(p_alg.dim)]
        action = [induced(q_mats[j], p_mats[i]) for i in range(p_alg.dim) for j in range(q_alg.dim)]
    elif p_alg is not None:
        alg = opposite(p_alg)
        action = [induced(None, p_act(unit(i))) for i in range(p_alg.dim)]
    elif q_alg is not None:
        alg = q_alg
        action = [induced(q_act(unit(j)), None) for j in range(q_alg.dim)]
    else:
        alg = ground_algebra(f)
        action = [ml.identity(f, hom.dim)]
    return Module(alg, hom.dim, action), hom
