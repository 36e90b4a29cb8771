"""Exact computations in Block-type and super-Virasoro Lie superalgebras."""

from ._core import (
    Algebra,
    ConfigError,
    Element,
    Error,
    IndexGroup,
    InputError,
    OutOfWindow,
    Scalar,
    Window,
    adjust_inner,
    aut_apply,
    aut_check_hom,
    aut_compose,
    aut_validate,
    central_cocycle_value,
    check_d_phi,
    check_inner,
    command_names,
    is_cocycle,
    leibniz_check,
    run_command,
    trivialize,
)

__all__ = [
    "Algebra",
    "ConfigError",
    "Element",
    "Error",
    "IndexGroup",
    "InputError",
    "OutOfWindow",
    "Scalar",
    "Window",
    "adjust_inner",
    "aut_apply",
    "aut_check_hom",
    "aut_compose",
    "aut_validate",
    "central_cocycle_value",
    "check_d_phi",
    "check_inner",
    "command_names",
    "is_cocycle",
    "leibniz_check",
    "run_command",
    "trivialize",
]
