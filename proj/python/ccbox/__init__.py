"""Box-calculus capture checker: parser, type checker, and abstract machine.

Thin wrapper around the native extension; see the project README for the
source language and CLI.
"""

from ._ccbox import (  # noqa: F401
    __version__,
    check,
    check_pure,
    check_type,
    eval_program,
    fuzz,
    infer_type,
    pretty,
    subtype,
)

__all__ = [
    "check",
    "check_pure",
    "check_type",
    "eval_program",
    "fuzz",
    "infer_type",
    "pretty",
    "subtype",
]
