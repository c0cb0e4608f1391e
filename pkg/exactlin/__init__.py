"""Exact linear algebra kernel: fields, matrices and subspaces."""

from .field import FieldSpec, default_field, parse_rational
from .matrix import (
    Mat,
    Subspace,
    block_matrix,
    charpoly,
    column,
    entries,
    equal,
    extract,
    from_entries,
    from_rows,
    hstack,
    identity,
    inverse,
    is_invertible,
    is_zero,
    kernel_basis,
    kron,
    lin_comb,
    rank,
    rref,
    solve,
    to_python_rows,
    vstack,
    zeros,
)

__all__ = [
    'FieldSpec',
    'default_field',
    'parse_rational',
    'Mat',
    'Subspace',
    'block_matrix',
    'charpoly',
    'column',
    'entries',
    'equal',
    'extract',
    'from_entries',
    'from_rows',
    'hstack',
    'identity',
    'inverse',
    'is_invertible',
    'is_zero',
    'kernel_basis',
    'kron',
    'lin_comb',
    'rank',
    'rref',
    'solve',
    'to_python_rows',
    'vstack',
    'zeros',
]
