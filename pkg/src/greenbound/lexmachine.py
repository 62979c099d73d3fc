"""Lex-segment ideals with a prescribed Hilbert function.

Variables are ordered ``x_1 > ... > x_n``; ``x_n`` is the variable the
restriction identity quotients by.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .macaulay import binom, is_o_sequence, macaulay_upper
from .polykernel import FieldSpec, GradedQuotient, Ideal, Polynomial, QQ, ideal_sum, monomials_of_degree
from .polykernel.monomial import mono_divides


@dataclass(frozen=True)
class HilbertFunction:
    """Values ``hf[0..D]`` of a Hilbert function of a quotient of ``K[x_1..x_n]``."""

    values: tuple
    num_vars: int

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if self.num_vars < 1:
            raise ValueError("num_vars must be positive")
        if not self.values or self.values[0] != 1:
            raise ValueError("a Hilbert function starts with 1")
        for d, v in enumerate(self.values):
            if v > binom(self.num_vars - 1 + d, d):
                raise ValueError(f"hf[{d}] = {v} exceeds the number of degree-{d} monomials")
        if not is_o_sequence(self.values):
            raise ValueError(f"{self.values} violates Macaulay's growth condition")

    @property
    def horizon(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, d):
        return self.values[d]


def random_hilbert_function(num_vars: int, horizon: int, rng: random.Random) -> HilbertFunction:
    """Uniformly pick each value in the range allowed by Macaulay's bound."""
    values = [1]
    if horizon >= 1:
        values.append(rng.randint(0, num_vars))
    for d in range(1, horizon):
        cap = min(macaulay_upper(values[d], d), binom(num_vars + d, d + 1))
        values.append(rng.randint(0, cap))
    return HilbertFunction(tuple(values), num_vars)


def lex_segment_ideal(hf: HilbertFunction | Sequence[int], num_vars: int | None = None, field: FieldSpec = QQ) -> Ideal:
    """The lex-segment ideal whose quotient has Hilbert function ``hf`` up to its horizon.

    In each degree the excluded monomials are the lex-largest ones; only those
    not already divisible by an earlier generator are kept as generators.
    """
    if not isinstance(hf, HilbertFunction):
        if num_vars is None:
            raise ValueError("num_vars is required for a plain sequence")
        hf = HilbertFunction(tuple(hf), num_vars)
    n = hf.num_vars
    gens = []
    for d in range(1, hf.horizon + 1):
        mons = list(monomials_of_degree(n, d))  # lex-descending
        for m in mons[: len(mons) - hf[d]]:
            if not any(mono_divides(g, m) for g in gens):
                gens.append(m)
    return Ideal([Polynomial.monomial(g, n, field) for g in gens], n, field)


def is_lex_segment(I: Ideal, top: int) -> bool:
    """Check that the degree-``d`` monomials of the monomial ideal ``I`` form an
    initial segment of the lex order, for every ``d <= top``."""
    lms = I.leading_monomials()
    for d in range(top + 1):
        inside = [any(mono_divides(l, m) for l in lms) for m in monomials_of_degree(I.nvars, d)]
        # True values must precede every False value
        if any(inside[i + 1] and not inside[i] for i in range(len(inside) - 1)):
            return False
    return True


def lex_restricted_dim(I: Ideal, d: int) -> int:
    """``dim_K (A/(I + (x_n)))_d`` for a lex-segment ideal ``I``.

    Agrees with ``macaulay_lower(dim_K (A/I)_d, d)``.
    """
    n = I.nvars
    last = Polynomial.variable(n - 1, n, I.field)
    Q = GradedQuotient(n, ideal_sum(I, Ideal([last], n, I.field)), I.field)
    return Q.hilbert_dim(d)
