"""Cohomology, Beilinson tables and Ulrich types on rational normal scrolls."""

from ._core import (
    Error,
    Indeterminate,
    InvalidInput,
    NotUlrich,
    Scroll,
    beilinson_table,
    classify_type,
    describe_type,
    enumerate_types,
    from_pair,
    hom_bounds,
    line_cohomology,
    omega_cohomology,
    pn_omega_cohomology,
    run_cli,
    segre_ext1,
    verify,
    veronese_table,
)

__all__ = [
    "Error",
    "Indeterminate",
    "InvalidInput",
    "NotUlrich",
    "Scroll",
    "beilinson_table",
    "classify_type",
    "describe_type",
    "enumerate_types",
    "from_pair",
    "hom_bounds",
    "line_cohomology",
    "omega_cohomology",
    "pn_omega_cohomology",
    "run_cli",
    "segre_ext1",
    "verify",
    "veronese_table",
]
