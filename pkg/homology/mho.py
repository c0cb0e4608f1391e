"""The cokernel of a minimal left add(A)-approximation and paths it defines.

A map M -> P into a projective is a left add(A)-approximation exactly when
the induced P* -> M* is onto, and it is minimal exactly when P* -> M* is a
projective cover. The approximation is therefore read off a homogeneous top
basis F_1..F_r of M* = Hom(M, A): x -> (F_k(x))_k lands in the sum of the
A e_{v_k} with F_k in Hom(M, A e_{v_k}).
"""

import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Any, Dict, List, Optional, Tuple

from exactlin import matrix as ml
from modrep.hom import a_dual_with_basis, hom_space
from modrep.isomorphism import certify_isomorphism, is_indecomposable
from modrep.module import Module, Morphism, regular_module, zero_module
from modrep.projectives import ProjectiveModule, indecomposable_projective, top_generators
from homology.derived import ext_dims
from homology.invariants import torsionless
from homology.resolutions import syzygy
from utils.utils import CertificationFailed

logger = logging.getLogger(__name__)


@dataclass
class Approximation:
    """M -> P, a minimal left add(A)-approximation."""

    projective: ProjectiveModule
    map: Morphism


def minimal_approximation(m: Module) -> Approximation:
    a = m.algebra
    f = m.field
    star = a_dual_with_basis(m)
    vertices, gens = top_generators(star.module)
    proj = ProjectiveModule(a, vertices)
    blocks = []
    for k, s in enumerate(proj.summands):
        col = ml.extract(gens, range(gens.shape[0]), [k])
        coeffs = {i: v for i, v in ml.column_entries(col).items()}
        fk = star.hom.combination(coeffs)
        blocks.append(s.space.coords(fk))
    matrix = ml.vstack(f, m.dim, blocks)
    return Approximation(proj, Morphism(m, proj.module, matrix))


def mho(m: Module) -> Module:
    """Cokernel of the minimal left add(A)-approximation."""
    if m.dim == 0:
        return zero_module(m.algebra)
    approx = minimal_approximation(m)
    result, _ = approx.map.cokernel()
    result.name = f"mho({m.name})" if m.name else None
    logger.debug(f"mho of a module of dim {m.dim}: {approx.projective!r} -> dim {result.dim}")
    return result


def mho_power(m: Module, k: int) -> Module:
    current = m
    for _ in range(k):
        current = mho(current)
    return current


def strip_projective_summands(m: Module) -> Tuple[Module, List[int]]:
    """Split off indecomposable projective summands, one at a time.

    A e_v is a summand of M exactly when some basis map M -> A e_v is onto,
    since A e_v is local and projective. Returns the complement and the
    vertices of the removed summands.
    """
    a = m.algebra
    removed: List[int] = []
    current = m
    progress = True
    while progress and current.dim:
        progress = False
        for v in range(a.vertex_count):
            target = indecomposable_projective(a, v).module
            for F in hom_space(current, target).basis:
                if ml.rank(F) == target.dim:
                    current, _ = Morphism(current, target, F, checked=True).kernel()
                    removed.append(v)
                    progress = True
                    break
            if progress:
                break
    return current, removed


@dataclass
class MhoPath:
    """A path of given length in the mho-quiver starting or ending at M."""

    direction: str
    length: int
    exists: bool
    modules: List[Module] = dataclass_field(default_factory=list)
    reason: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "direction": self.direction,
            "length": self.length,
            "exists": self.exists,
            "dims": [x.dim for x in self.modules],
            "reason": self.reason,
        }


def is_mho_vertex(m: Module) -> Optional[str]:
    """None when M is indecomposable and not projective, else the reason."""
    if m.dim == 0:
        return "zero module"
    _, removed = strip_projective_summands(m)
    if removed:
        return "has a projective summand"
    if not is_indecomposable(m):
        return "decomposable"
    return None


def mho_path_ending_at(m: Module, length: int) -> MhoPath:
    """mho^t(M) -> ... -> mho(M) -> M.

    Each step needs the end point to be torsionless; mho of a torsionless
    indecomposable non-projective module is again indecomposable and not
    projective, so only M itself is tested for that.
    """
    reason = is_mho_vertex(m)
    if reason:
        return MhoPath("end", length, False, [m], reason)
    chain = [m]
    current = m
    for step in range(length):
        if not torsionless(current):
            return MhoPath("end", length, False, chain, f"mho^{step}(M) is not torsionless")
        current = mho(current)
        chain.append(current)
    return MhoPath("end", length, True, list(reversed(chain)))


def mho_path_starting_at(m: Module, length: int) -> MhoPath:
    """M -> Omega(M) -> ... -> Omega^t(M), each arrow certified by mho(Omega^{i}M) = Omega^{i-1}M."""
    reason = is_mho_vertex(m)
    if reason:
        return MhoPath("start", length, False, [m], reason)
    chain = [m]
    previous = m
    for step in range(1, length + 1):
        current = syzygy(m, step)
        reason = is_mho_vertex(current)
        if reason:
            return MhoPath("start", length, False, chain, f"Omega^{step}(M): {reason}")
        back = mho(current)
        try:
            certify_isomorphism(back, previous)
        except CertificationFailed as e:
            return MhoPath("start", length, False, chain, f"mho(Omega^{step}(M)) != Omega^{step - 1}(M): {e}")
        chain.append(current)
        previous = current
    return MhoPath("start", length, True, chain)


def ext_to_regular_vanishes(m: Module, length: int) -> bool:
    """Ext^i(M, A) = 0 for i = 1..length."""
    if length <= 0:
        return True
    return not any(ext_dims(m, regular_module(m.algebra), length)[1:])
