"""Spectrum, mixing bounds and brute-force oracles for the random-to-random shuffle."""

__version__ = "0.1.0"

from .partitions import Partition, enumerate_partitions, parse_partition, syt_count
from .spectrum import Spectrum, SpectrumEntry, eigenvalue, full_spectrum, spectrum_with_evaluation
from .tableaux import StandardTableau, desarrangement_count, kostka_number, rsw_forward, rsw_inverse

__all__ = [
    "Partition",
    "Spectrum",
    "SpectrumEntry",
    "StandardTableau",
    "__version__",
    "desarrangement_count",
    "eigenvalue",
    "enumerate_partitions",
    "full_spectrum",
    "kostka_number",
    "parse_partition",
    "rsw_forward",
    "rsw_inverse",
    "spectrum_with_evaluation",
    "syt_count",
]
