"""Colored Jones, Alexander and Kashaev invariants of braid closures."""

from ._qjones import (
    DomainError,
    Error,
    NotAKnotError,
    ParseError,
    UnterminatedError,
    alexander,
    colored_jones,
    is_knot,
    kashaev,
    kashaev_exact,
    mahler_measure,
    state_sum_jones,
    volume_rate,
)

__all__ = [
    "DomainError",
    "Error",
    "NotAKnotError",
    "ParseError",
    "UnterminatedError",
    "alexander",
    "colored_jones",
    "is_knot",
    "kashaev",
    "kashaev_exact",
    "mahler_measure",
    "state_sum_jones",
    "volume_rate",
]
