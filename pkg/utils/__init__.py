"""Utils package for the dominant dimension workbench.

This package provides:
- Logging setup
- Certification with escalating retries
- Error handling with custom exceptions
"""

from .utils import (
    setup_logging,
    certify_with_retry,
    JsonFormatter,

    # Custom exceptions
    DomDimLabError,
    ConfigurationError,
    ValidationError,
    NotAssociative,
    BadUnit,
    BadIdempotents,
    BadRadical,
    SchemaError,
    InvalidKupischSeries,
    FieldMismatch,
    AlgebraMismatch,
    DslSyntaxError,
    UnknownName,
    NonParallelRelation,
    NotAdmissible,
    MorphismError,
    ResolutionError,
    PreconditionError,
    CertificationFailed,
    DisagreementDetected,
)

__all__ = [
    'setup_logging',
    'certify_with_retry',
    'JsonFormatter',

    # Exceptions
    'DomDimLabError',
    'ConfigurationError',
    'ValidationError',
    'NotAssociative',
    'BadUnit',
    'BadIdempotents',
    'BadRadical',
    'SchemaError',
    'InvalidKupischSeries',
    'FieldMismatch',
    'AlgebraMismatch',
    'DslSyntaxError',
    'UnknownName',
    'NonParallelRelation',
    'NotAdmissible',
    'MorphismError',
    'ResolutionError',
    'PreconditionError',
    'CertificationFailed',
    'DisagreementDetected',
]
