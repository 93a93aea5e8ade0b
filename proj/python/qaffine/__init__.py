"""Quantum affine algebra data, R-matrix truncations and identity checks."""

from ._core import (
    InvalidType,
    NotReduced,
    ParseError,
    QRat,
    betas,
    cartan,
    catalog_ids,
    det,
    h_matrix,
    imag_checks,
    inversions,
    level_index,
    normalize_rmatrix,
    pairing_bar,
    partition_count,
    q_binom,
    q_int,
    rmatrix,
    verify_rank2,
    z_matrix,
)

__all__ = [
    "InvalidType",
    "NotReduced",
    "ParseError",
    "QRat",
    "betas",
    "cartan",
    "catalog_ids",
    "det",
    "h_matrix",
    "imag_checks",
    "inversions",
    "level_index",
    "normalize_rmatrix",
    "pairing_bar",
    "partition_count",
    "q_binom",
    "q_int",
    "rmatrix",
    "verify_rank2",
    "z_matrix",
]
