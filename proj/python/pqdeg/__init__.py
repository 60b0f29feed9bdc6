"""Degrees of parabolic quantum groups at roots of unity.

Thin wrapper over the C++ extension. Simple-root indices and word letters
are 1-based (Bourbaki numbering), matching the CLI and the JSON schema.
"""

from ._pqdeg import (
    beta_sequence,
    degree_report,
    degree_value,
    highest_root,
    is_good,
    positive_roots,
    probe_kernel_vectors,
    rank_invariance,
    report_json,
    sweep_table,
    torus_degree,
    verify_kernel_dimension,
    verify_wdeco,
)

__all__ = [
    "beta_sequence",
    "degree_report",
    "degree_value",
    "highest_root",
    "is_good",
    "positive_roots",
    "probe_kernel_vectors",
    "rank_invariance",
    "report_json",
    "sweep_table",
    "torus_degree",
    "verify_kernel_dimension",
    "verify_wdeco",
]

__version__ = "0.1.0"
