"""Resolutions, derived functors and capped homological invariants."""

from .cache import ResolutionCache, clear_caches, resolution_cache
from .derived import (
    ext_dims,
    higher_ar_translate,
    higher_transpose,
    tor_dims,
    tor_dims_direct,
    tor_dims_via_ext,
    transpose,
)
from .dimension import DimensionValue, dimension_max
from .invariants import (
    GorensteinVerdict,
    algebra_dominant_dimension,
    dominant_dimension,
    global_dimension,
    gorenstein_projective_up_to,
    injective_dimension,
    n_torsionfree,
    projective_dimension,
    reflexive,
    torsionfree_degree,
    torsionless,
)
from .mho import (
    MhoPath,
    minimal_approximation,
    mho,
    mho_path_ending_at,
    mho_path_starting_at,
    mho_power,
    strip_projective_summands,
)
from .resolutions import (
    InjCoresolution,
    ProjResolution,
    cosyzygy,
    inj_coresolution,
    proj_resolution,
    syzygy,
)
from .sampling import sample_modules, sample_pairs, syzygy_filtration_check

__all__ = [
    'ResolutionCache',
    'resolution_cache',
    'clear_caches',
    'ext_dims',
    'higher_ar_translate',
    'higher_transpose',
    'tor_dims',
    'tor_dims_direct',
    'tor_dims_via_ext',
    'transpose',
    'DimensionValue',
    'dimension_max',
    'GorensteinVerdict',
    'algebra_dominant_dimension',
    'dominant_dimension',
    'global_dimension',
    'gorenstein_projective_up_to',
    'injective_dimension',
    'n_torsionfree',
    'projective_dimension',
    'reflexive',
    'torsionfree_degree',
    'torsionless',
    'MhoPath',
    'minimal_approximation',
    'mho',
    'mho_path_ending_at',
    'mho_path_starting_at',
    'mho_power',
    'strip_projective_summands',
    'InjCoresolution',
    'ProjResolution',
    'cosyzygy',
    'inj_coresolution',
    'proj_resolution',
    'syzygy',
    'sample_modules',
    'sample_pairs',
    'syzygy_filtration_check',
]
