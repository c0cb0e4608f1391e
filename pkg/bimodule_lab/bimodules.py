"""The regular, coregular and canonical bimodules and their comparison isomorphisms.

Bimodules are modules over A (x) A^op. A right A^e-module N is read as a
bimodule through x.n.y = n.(y (x) x), which is what ``swap_factors`` does to a
module over (A^e)^op = A^op (x) A. In particular the A^e-dual
Hom_{A^e}(X, A^e), a right A^e-module, becomes a bimodule after a swap.
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional

from algebras.algebra import Algebra, enveloping
from config.config_loader import default_seed, get_config
from exactlin import matrix as ml
from modrep.bimodule import bimodule_from_actions, hom_bimodule, swap_factors
from modrep.hom import a_dual
from modrep.isomorphism import PROBABLY_NO, IsoVerdict, certify_isomorphism, is_isomorphic
from modrep.module import Module, regular_module
from modrep.tensor import tensor_over
from utils.utils import CertificationFailed, certify_with_retry

logger = logging.getLogger(__name__)


def regular_bimodule(a: Algebra) -> Module:
    """A with (x (x) y).m = x m y."""
    left = [a.left_mult(i) for i in range(a.dim)]
    right = [a.right_mult(j) for j in range(a.dim)]
    m = bimodule_from_actions(a, left, right)
    m.name = "A"
    return m


def coregular_bimodule(a: Algebra) -> Module:
    """D(A) with (x.f.y)(m) = f(y m x)."""
    left = [a.right_mult(i).transpose() for i in range(a.dim)]
    right = [a.left_mult(j).transpose() for j in range(a.dim)]
    m = bimodule_from_actions(a, left, right)
    m.name = "D(A)"
    return m


def enveloping_dual(x: Module) -> Module:
    """Hom_{A^e}(X, A^e) as a bimodule."""
    return swap_factors(a_dual(x))


def hom_k_bimodule(a: Algebra) -> Module:
    """Hom_K(D(A), A) with (x.F.y)(f) = x F(y f)."""
    f = a.field
    d = a.dim
    ident = ml.identity(f, d)
    # row-major vec: vec(L F M) = (L (x) M^T) vec(F); the left action of y on D(A) is R_y^T
    left = [ml.kron(f, a.left_mult(i), ident) for i in range(d)]
    right = [ml.kron(f, ident, a.right_mult(j)) for j in range(d)]
    m = bimodule_from_actions(a, left, right)
    m.name = "Hom_K(D(A),A)"
    return m


@dataclass
class CanonicalBimodule:
    """V = Hom_A(D(A), A) with a certified isomorphism to Hom_{A^e}(A, A^e)."""

    module: Module
    enveloping_dual: Module
    witness: IsoVerdict

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dim": self.module.dim,
            "dimension_vector": list(self.module.dimension_vector),
            "iso_to_enveloping_dual": self.witness.to_dict(),
        }


def canonical_module(a: Algebra) -> Module:
    """Hom_A(D(A), A) with its bimodule structure, without certification."""
    v = hom_bimodule(coregular_bimodule(a), regular_bimodule(a), a)
    v.name = "V"
    return v


def canonical_bimodule(a: Algebra, trials: Optional[int] = None,
                       seed: Optional[int] = None) -> CanonicalBimodule:
    """V computed as Hom_A(D(A), A) and certified isomorphic to Hom_{A^e}(A, A^e).

    Raises:
        CertificationFailed: no isomorphism was found
    """
    v = canonical_module(a)
    other = enveloping_dual(regular_bimodule(a))
    witness = certify_isomorphism(v, other, trials, seed)
    logger.debug(f"Canonical bimodule of {a!r}: dim {v.dim}, certified after {witness.trials} trials")
    return CanonicalBimodule(v, other, witness)


Search = Callable[[Module, Module, Optional[int], Optional[int]], IsoVerdict]


def escalated_verdict(m: Module, n: Module, trials: Optional[int] = None,
                      seed: Optional[int] = None, search: Search = is_isomorphic) -> IsoVerdict:
    """Certified yes, exact no, or the first probably-no once escalation also fails.

    ``search`` is ``is_isomorphic`` or ``find_monomorphism``.
    """
    first = search(m, n, trials, seed)
    if first.verdict != PROBABLY_NO:
        return first
    max_attempts = int(get_config().get('isomorphism.max_attempts', 3))

    def attempt(t: int, s: int) -> IsoVerdict:
        retry = search(m, n, t, s)
        if not retry.holds:
            raise CertificationFailed(f"no witness in {t} trials")
        return retry

    try:
        return certify_with_retry(attempt, 2 * first.trials or 2, default_seed(seed) + 7919,
                                  max(1, max_attempts - 1))
    except CertificationFailed:
        return first


def iso_check_1(a: Algebra, trials: Optional[int] = None, seed: Optional[int] = None) -> IsoVerdict:
    """A^e = Hom_K(D(A), A) as bimodules."""
    env = regular_module(enveloping(a))
    return escalated_verdict(env, hom_k_bimodule(a), trials, seed)


def iso_check_2(a: Algebra, x: Module, trials: Optional[int] = None,
                seed: Optional[int] = None) -> IsoVerdict:
    """Hom_{A^e}(X, A^e) = Hom_A(D(A) (x)_A X, A) as bimodules."""
    lhs = enveloping_dual(x)
    rhs = hom_bimodule(tensor_over(coregular_bimodule(a), x, a), regular_bimodule(a), a)
    return escalated_verdict(lhs, rhs, trials, seed)


def double_dual_side(a: Algebra) -> Module:
    """Hom_A(D(A), Hom_A(Hom_A(D(A), A), A))."""
    reg = regular_bimodule(a)
    w = hom_bimodule(canonical_module(a), reg, a)
    return hom_bimodule(coregular_bimodule(a), w, a)


def iso_check_3(a: Algebra, trials: Optional[int] = None, seed: Optional[int] = None) -> IsoVerdict:
    """Hom_{A^e}(Hom_{A^e}(A, A^e), A^e) = Hom_A(D(A), Hom_A(Hom_A(D(A), A), A))."""
    lhs = a_dual(a_dual(regular_bimodule(a)))
    return escalated_verdict(lhs, double_dual_side(a), trials, seed)
