"""Microlocal V-filtrations and Hodge ideals of weighted homogeneous isolated singularities."""

from ._hodgevf import (
    Singularity,
    __version__,
    bp_spectrum,
    bp_v_member,
    counterexample_remark_ii,
    run_cli,
)

__all__ = [
    "Singularity",
    "__version__",
    "bp_spectrum",
    "bp_v_member",
    "counterexample_remark_ii",
    "run_cli",
]
