"""Ramification jumps, genera and series-level checks for Artin-Schreier and
Artin-Schreier-Witt extensions of local fields of characteristic p."""

from ._core import (
    AssertionFailure,
    ContextMismatch,
    Error,
    InsufficientPrecision,
    InvalidInput,
    ParseError,
    Report,
    RootNotInField,
    Series,
    Status,
    compositum_as,
    compositum_witt2,
    jumps_as,
    jumps_witt2,
    lower_to_upper,
    oracle_p2_second_jump,
    oracle_p_cyclic_jump,
    reduce_as,
    reduce_witt2,
    run_job,
    upper_to_lower,
    verification_suite,
    witt_add,
)

__all__ = [
    "AssertionFailure",
    "ContextMismatch",
    "Error",
    "InsufficientPrecision",
    "InvalidInput",
    "ParseError",
    "Report",
    "RootNotInField",
    "Series",
    "Status",
    "compositum_as",
    "compositum_witt2",
    "jumps_as",
    "jumps_witt2",
    "lower_to_upper",
    "oracle_p2_second_jump",
    "oracle_p_cyclic_jump",
    "reduce_as",
    "reduce_witt2",
    "run_job",
    "upper_to_lower",
    "verification_suite",
    "witt_add",
]
