"""Exact unramified computations: characters, Pieri rules and the zeta series."""
from .characters import complete_homogeneous, schur_char, symplectic_char
from .partitions import Partition, partitions_up_to
from .poly import FormalSeries, LaurentPoly
from .series import euler_product_series, unramified_zeta_series

__all__ = [
    "FormalSeries", "LaurentPoly", "Partition", "complete_homogeneous",
    "euler_product_series", "partitions_up_to", "schur_char", "symplectic_char",
    "unramified_zeta_series",
]
