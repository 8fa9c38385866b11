"""Compression module - E_k operators, extendability, lower-bound certificates."""

from .operators import (
    compress_op,
    dual_compress_op,
    epsilon_k,
    extendable_coordinates,
    is_extendable,
)
from .certificate import (
    CompressionCertificate,
    CompressionPolicy,
    CompressionStep,
    check_non_extendable_characterization,
    compress,
    final_face,
    is_full_simplex,
    reachable_final_faces,
)

__all__ = [
    "compress_op",
    "dual_compress_op",
    "epsilon_k",
    "extendable_coordinates",
    "is_extendable",
    "CompressionCertificate",
    "CompressionPolicy",
    "CompressionStep",
    "check_non_extendable_characterization",
    "compress",
    "final_face",
    "is_full_simplex",
    "reachable_final_faces",
]
