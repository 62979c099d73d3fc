"""Reproducible random instances: homogeneous ideals and binomial extensions of
toric presentations.  Used by the CLI and the test suite."""

from __future__ import annotations

import random

from .polykernel import FieldSpec, GradedQuotient, Polynomial, monomials_of_degree
from .toric import ToricPresentation


def random_quotient(
    rng: random.Random,
    field: FieldSpec,
    max_vars: int = 4,
    max_gens: int = 3,
    max_gen_degree: int = 3,
    min_vars: int = 1,
) -> GradedQuotient:
    """``K[x_1..x_n]/I`` with ``n``, the number of generators and each generator
    degree drawn uniformly from their ranges; generators have dense random
    coefficients."""
    n = rng.randint(min_vars, max_vars)
    k = rng.randint(0, max_gens)
    gens = [Polynomial.random_homogeneous(n, rng.randint(1, max_gen_degree), field, rng) for _ in range(k)]
    return GradedQuotient.from_generators(gens, n, field)


def random_binomial(nvars: int, degree: int, field: FieldSpec, rng: random.Random) -> Polynomial:
    """``a*m1 - b*m2`` for two distinct random monomials of the given degree."""
    mons = list(monomials_of_degree(nvars, degree))
    if len(mons) == 1:
        return Polynomial.monomial(mons[0], nvars, field, field.random_nonzero(rng))
    m1, m2 = rng.sample(mons, 2)
    return Polynomial(nvars, field, {m1: field.random_nonzero(rng), m2: -field.random_nonzero(rng)})


def random_toric_quotient(T: ToricPresentation, rng: random.Random, max_binomials: int = 2, max_degree: int = 3) -> GradedQuotient:
    """The presentation ring of ``T`` modulo up to ``max_binomials`` random binomials."""
    k = rng.randint(1, max_binomials)
    extra = [random_binomial(T.presentation_vars, rng.randint(2, max_degree), T.field, rng) for _ in range(k)]
    return T.quotient(extra)
