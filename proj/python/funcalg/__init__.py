"""Pointwise arithmetic on functions."""

from ._core import (
    Function,
    FuncalgError,
    Program,
    Quaternion,
    Session,
    bench,
    builtin,
    compile,
    const,
    format_value,
    lift,
    parse,
)

__all__ = [
    "Function",
    "FuncalgError",
    "Program",
    "Quaternion",
    "Session",
    "bench",
    "builtin",
    "compile",
    "const",
    "format_value",
    "lift",
    "parse",
]
