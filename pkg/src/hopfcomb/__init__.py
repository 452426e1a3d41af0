"""Exact-arithmetic combinatorial Hopf algebras.

Commutative and cocommutative Hopf algebras on endofunctions, permutations,
set partitions, parking functions and rooted forests, together with their
dualities, stalactic quotients and one-parameter twisted deformations.
Every structure constant is an integer or an integer polynomial in q, and
every product rule ships with an independent brute-force oracle.
"""

from . import (
    axioms,
    coeffs,
    eqsym,
    limits,
    lincomb,
    parkfunc,
    phisym,
    qdeform,
    realize,
    sgqsym,
    stalactic,
    symfunc,
    words,
)

__all__ = [
    "axioms",
    "coeffs",
    "eqsym",
    "limits",
    "lincomb",
    "parkfunc",
    "phisym",
    "qdeform",
    "realize",
    "sgqsym",
    "stalactic",
    "symfunc",
    "words",
]

__version__ = "0.1.0"
