"""Ext, Tor and the Auslander-Bridger transposes.

Ext^i(M, N) is the cohomology of Hom(P_., N) for the minimal resolution P_.
of M. Hom(B e_v, N) is e_v N, so the cochain spaces are sums of vertex
spaces of N and the coboundaries are read off the z-matrices of the
differentials. Tor is computed the same way from P_. (x) N and, as a
cross-check, through Tor_i(M, N) = D Ext^i(M, D N).
"""

import logging
from typing import List, Optional

from exactlin import matrix as ml
from exactlin.matrix import Mat
from modrep.module import Module, check_same_algebra, dual, zero_module
from algebras.algebra import opposite
from homology.resolutions import ProjResolution, proj_resolution, syzygy
from utils.utils import AlgebraMismatch, DisagreementDetected, PreconditionError

logger = logging.getLogger(__name__)


def _vertex_sizes(n: Module, vertices) -> List[int]:
    return [n.vertex_space(v).dim for v in vertices]


def _hom_coboundary(res: ProjResolution, n: Module, i: int) -> Mat:
    """Hom(P_i, N) -> Hom(P_{i+1}, N), f -> f o d_{i+1}.

    A map out of B e_w is its value in e_w N. The block from summand l of
    P_i to summand k of P_{i+1} sends x in e_{w_l} N to z_{kl} x in e_{v_k} N.
    """
    f = n.field
    src = res.term(i)
    tgt = res.term(i + 1)
    d = res.differential(i + 1)
    blocks = {}
    for k, v in enumerate(tgt.vertices):
        vk = n.vertex_space(v)
        for l, w in enumerate(src.vertices):
            z = d.z[k][l]
            wl = n.vertex_space(w)
            if not z or not vk.dim or not wl.dim:
                continue
            blocks[(k, l)] = vk.coords(n.act(z).matmul(wl.basis))
    return ml.block_matrix(f, blocks, _vertex_sizes(n, tgt.vertices), _vertex_sizes(n, src.vertices))


def _tensor_boundary(res: ProjResolution, n: Module, i: int) -> Mat:
    """P_i (x) N -> P_{i-1} (x) N for a resolution over B^op and N over B.

    e_v B (x)_B N is e_v N; the block from summand k of P_i to summand l of
    P_{i-1} is x -> z_{kl} x with z_{kl} acting through N.
    """
    f = n.field
    src = res.term(i)
    tgt = res.term(i - 1)
    d = res.differential(i)
    blocks = {}
    for k, v in enumerate(src.vertices):
        vk = n.vertex_space(v)
        for l, w in enumerate(tgt.vertices):
            z = d.z[k][l]
            wl = n.vertex_space(w)
            if not z or not vk.dim or not wl.dim:
                continue
            blocks[(l, k)] = wl.coords(n.act(z).matmul(vk.basis))
    return ml.block_matrix(f, blocks, _vertex_sizes(n, tgt.vertices), _vertex_sizes(n, src.vertices))


def ext_dims(m: Module, n: Module, length: int) -> List[int]:
    """dim Ext^i(M, N) for i = 0..length."""
    check_same_algebra(m, n)
    res = proj_resolution(m, length + 1)
    chain = [sum(_vertex_sizes(n, res.term(i).vertices)) for i in range(length + 2)]
    ranks = [ml.rank(_hom_coboundary(res, n, i)) if chain[i] and chain[i + 1] else 0
             for i in range(length + 1)]
    dims = []
    for i in range(length + 1):
        previous = ranks[i - 1] if i > 0 else 0
        dims.append(chain[i] - ranks[i] - previous)
    logger.debug(f"Ext dims {dims} for modules of dims {m.dim}, {n.dim}")
    return dims


def ext_vanishes(m: Module, n: Module, start: int, stop: int) -> Optional[int]:
    """First i in [start, stop] with Ext^i(M, N) != 0, or None."""
    if stop < start:
        return None
    dims = ext_dims(m, n, stop)
    for i in range(start, stop + 1):
        if dims[i]:
            return i
    return None


def _check_tor_pair(m: Module, n: Module) -> None:
    if opposite(n.algebra) != m.algebra:
        raise AlgebraMismatch(f"Tor needs a right module over {n.algebra!r}, got a module over {m.algebra!r}")


def tor_dims_direct(m: Module, n: Module, length: int) -> List[int]:
    """dim Tor_i(M, N), i = 0..length, from P_. (x)_B N.

    ``m`` is a right B-module (a module over B^op) and ``n`` a left B-module.
    """
    _check_tor_pair(m, n)
    res = proj_resolution(m, length + 1)
    chain = [sum(_vertex_sizes(n, res.term(i).vertices)) for i in range(length + 2)]
    # ranks[i] is the rank of P_i (x) N -> P_{i-1} (x) N
    ranks = [0] + [ml.rank(_tensor_boundary(res, n, i)) if chain[i] and chain[i - 1] else 0
                   for i in range(1, length + 2)]
    return [chain[i] - ranks[i] - ranks[i + 1] for i in range(length + 1)]


def tor_dims_via_ext(m: Module, n: Module, length: int) -> List[int]:
    """dim D Ext^i_{B^op}(M, D N)."""
    _check_tor_pair(m, n)
    return ext_dims(m, dual(n), length)


def tor_dims(m: Module, n: Module, length: int, cross_check: bool = True) -> List[int]:
    """dim Tor_i(M, N) for i = 0..length.

    Raises:
        DisagreementDetected: the direct and the Ext-based computation differ
    """
    direct = tor_dims_direct(m, n, length)
    if cross_check:
        via_ext = tor_dims_via_ext(m, n, length)
        if direct != via_ext:
            raise DisagreementDetected(
                f"Tor dims {direct} differ from D Ext dims {via_ext}",
                {"direct": direct, "via_ext": via_ext},
            )
    return direct


def transpose(m: Module) -> Module:
    """Tr(M), the cokernel of P_0* -> P_1* for the minimal presentation of M."""
    op = opposite(m.algebra)
    if m.dim == 0:
        return zero_module(op)
    res = proj_resolution(m, 1)
    d1 = res.differential(1)
    dualized = d1.dual()
    if dualized.target.is_zero():
        return zero_module(op)
    tr, _ = dualized.morphism().cokernel()
    tr.name = f"Tr({m.name})" if m.name else None
    return tr


def higher_transpose(m: Module, n: int) -> Module:
    """J_n(M) = Tr(Omega^n(M)); J_0 = Tr."""
    if n < 0:
        raise PreconditionError("J_n needs n >= 0")
    return transpose(syzygy(m, n))


def higher_ar_translate(m: Module, n: int) -> Module:
    """tau_{n-1}(M) = D Tr Omega^{n-2}(M) for n >= 2."""
    if n < 2:
        raise PreconditionError("tau_{n-1} is defined for n >= 2")
    return dual(transpose(syzygy(m, n - 2)))
