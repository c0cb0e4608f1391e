"""Algebras: structure constants, constructions, presentations and JSON."""

from .algebra import (
    Algebra,
    AlgebraReport,
    Arrow,
    center_dim,
    corner_algebra,
    enveloping,
    ground_algebra,
    is_connected,
    opposite,
    tensor_algebra,
    validate,
)
from .presentation import (
    KupischSeries,
    Quiver,
    RelationSet,
    compile_dsl,
    compile_presentation,
    format_quiver_dsl,
    nakayama,
    parse_kupisch,
    parse_quiver_dsl,
)
from .serialization import (
    algebra_from_dict,
    algebra_to_dict,
    read_algebra_json,
    read_module_json,
    write_algebra_json,
    write_module_json,
)

__all__ = [
    'Algebra',
    'AlgebraReport',
    'Arrow',
    'center_dim',
    'corner_algebra',
    'enveloping',
    'ground_algebra',
    'is_connected',
    'opposite',
    'tensor_algebra',
    'validate',
    'KupischSeries',
    'Quiver',
    'RelationSet',
    'compile_dsl',
    'compile_presentation',
    'format_quiver_dsl',
    'nakayama',
    'parse_kupisch',
    'parse_quiver_dsl',
    'algebra_from_dict',
    'algebra_to_dict',
    'read_algebra_json',
    'read_module_json',
    'write_algebra_json',
    'write_module_json',
]
