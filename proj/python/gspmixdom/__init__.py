"""Minimum mixed dominating sets of generalized series-parallel graphs."""

from ._core import (
    DecomposeError,
    ParseError,
    ParseTree,
    SizeLimitExceeded,
    __version__,
    brute_force,
    decompose,
    format,
    generate,
    is_mixed_dominating,
    parse,
    solve,
)

__all__ = [
    "DecomposeError",
    "ParseError",
    "ParseTree",
    "SizeLimitExceeded",
    "__version__",
    "brute_force",
    "decompose",
    "format",
    "generate",
    "is_mixed_dominating",
    "parse",
    "solve",
]
