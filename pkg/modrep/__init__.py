"""Modules over algebras: morphisms, Hom, projectives, tensor products, bimodules."""

from .bimodule import (
    bimodule_actions,
    bimodule_dual,
    bimodule_from_actions,
    hom_bimodule,
    restrict_first,
    restrict_second,
    swap_factors,
)
from .hom import HomSpace, a_dual, end_space, evaluation_map, hom_dim, hom_space
from .isomorphism import (
    IsoVerdict,
    certify_isomorphism,
    find_monomorphism,
    is_indecomposable,
    is_isomorphic,
)
from .module import (
    DirectSum,
    Module,
    Morphism,
    coregular_module,
    direct_power,
    direct_sum,
    dual,
    quotient,
    rad_module,
    regular_module,
    simple_module,
    simple_modules,
    socle,
    submodule,
    top,
    zero_module,
)
from .projectives import (
    ProjectiveCover,
    ProjectiveMap,
    ProjectiveModule,
    injective_envelope,
    is_injective,
    is_projective,
    projective_cover,
    projective_injective_vertices,
)
from .tensor import tensor_over

__all__ = [
    'bimodule_actions',
    'bimodule_dual',
    'bimodule_from_actions',
    'hom_bimodule',
    'restrict_first',
    'restrict_second',
    'swap_factors',
    'HomSpace',
    'a_dual',
    'end_space',
    'evaluation_map',
    'hom_dim',
    'hom_space',
    'IsoVerdict',
    'certify_isomorphism',
    'find_monomorphism',
    'is_indecomposable',
    'is_isomorphic',
    'DirectSum',
    'Module',
    'Morphism',
    'coregular_module',
    'direct_power',
    'direct_sum',
    'dual',
    'quotient',
    'rad_module',
    'regular_module',
    'simple_module',
    'simple_modules',
    'socle',
    'submodule',
    'top',
    'zero_module',
    'ProjectiveCover',
    'ProjectiveMap',
    'ProjectiveModule',
    'injective_envelope',
    'is_injective',
    'is_projective',
    'projective_cover',
    'projective_injective_vertices',
    'tensor_over',
]
