"""Signed permutations: Bruhat order, diagrams, essential sets and verification suites."""

from ._signedperm import (
    BasicTriple,
    BudgetExceeded,
    Flavor,
    InvalidTriple,
    NoSupremum,
    ParseError,
    RangeError,
    SignedPermutation,
    basic_inverse,
    basic_signed,
    cli,
    count_basic,
    dissecting_u,
    enumerate_basic,
    enumerate_W,
    essential_set,
    leq,
    maximal_basic_below,
    minimal_not_below,
    n_min,
    rank,
    render,
    suite_names,
    supremum,
    verify,
)

__all__ = [
    "BasicTriple",
    "BudgetExceeded",
    "Flavor",
    "InvalidTriple",
    "NoSupremum",
    "ParseError",
    "RangeError",
    "SignedPermutation",
    "basic_inverse",
    "basic_signed",
    "cli",
    "count_basic",
    "dissecting_u",
    "enumerate_basic",
    "enumerate_W",
    "essential_set",
    "leq",
    "maximal_basic_below",
    "minimal_not_below",
    "n_min",
    "rank",
    "render",
    "suite_names",
    "supremum",
    "verify",
]
