"""Reduction search at the level of graded algebras.

For a standard graded algebra ``R`` (typically a fiber cone) with
``dim_K R_i < binom(i + p, i)``, ``p`` suitable linear forms kill ``R_i``.
The search samples plain or structured forms and verifies the vanishing
exactly.
"""

from __future__ import annotations

import itertools
import random
import warnings
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .macaulay import binom
from .polykernel import GradedQuotient
from .polykernel.monomial import mono_divides, mono_mul
from .restriction import LinearForm, quotient_dim, sample_linear_form
from .toric import STRUCTURED_VARIANTS, ToricPresentation, sample_structured_form

VARIANTS = ("general",) + STRUCTURED_VARIANTS
CHAR_ZERO_VARIANTS = ("veronese-power", "segre-veronese", "chain-partial-sums")
DEFAULT_MAX_TRIALS = 32
# largest prime below 2^16; smaller characteristics trigger a warning
SAFE_CHARACTERISTIC = 65521


class CriterionError(ValueError):
    """The numerical hypothesis ``dim R_i < binom(i + p, i)`` fails."""


class SmallCharacteristicWarning(UserWarning):
    pass


@dataclass
class ReductionProblem:
    algebra: GradedQuotient
    i: int
    p: int
    variant: str = "general"
    toric: ToricPresentation | None = None
    safe_characteristic: int = SAFE_CHARACTERISTIC

    def __post_init__(self):
        if self.i < 1 or self.p < 1:
            raise ValueError("i and p must be positive")
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}; expected one of {VARIANTS}")
        if self.variant != "general":
            if self.toric is None:
                raise ValueError(f"variant {self.variant!r} needs a toric presentation")
            if self.toric.presentation_vars != self.algebra.nvars:
                raise ValueError("algebra is not a quotient of the toric presentation ring")


@dataclass
class ReductionResult:
    forms: list
    trials_used: int
    verified: bool
    underlying: list = dc_field(default_factory=list)

    def to_json(self):
        return {
            "forms": [f.to_json() for f in self.forms],
            "underlying": [[u.to_json() for u in us] for us in self.underlying],
            "trials_used": self.trials_used,
            "verified": self.verified,
        }


def criterion_holds(algebra: GradedQuotient, i: int, p: int) -> bool:
    """``dim_K R_i < binom(i + p, i)``."""
    if i < 1 or p < 1:
        raise ValueError("i and p must be positive")
    return algebra.hilbert_dim(i) < binom(i + p, i)


def verify_reduction(algebra: GradedQuotient, forms: Sequence, i: int) -> bool:
    """True iff ``(R/(forms))_i = 0``."""
    return quotient_dim(algebra, [f.to_polynomial() if isinstance(f, LinearForm) else f for f in forms], i) == 0


def trial_rng(master: int, trial: int) -> random.Random:
    return random.Random(f"{master}:{trial}")


def search_reduction(
    problem: ReductionProblem,
    rng: random.Random,
    max_trials: int = DEFAULT_MAX_TRIALS,
    exploratory: bool = False,
) -> ReductionResult:
    """Sample ``p`` forms per trial until ``(R/(forms))_i`` vanishes.

    Trial ``t`` draws from a generator seeded by one master value taken from
    ``rng`` and ``t``, so any trial can be replayed on its own.  Refuses to
    run when the numerical criterion fails unless ``exploratory`` is set.
    """
    R = problem.algebra
    if not exploratory and not criterion_holds(R, problem.i, problem.p):
        raise CriterionError(
            f"dim R_{problem.i} = {R.hilbert_dim(problem.i)} is not below binom({problem.i + problem.p}, {problem.i})"
        )
    char = R.field.characteristic
    if problem.variant in CHAR_ZERO_VARIANTS and char and char < problem.safe_characteristic:
        warnings.warn(
            f"variant {problem.variant!r} assumes characteristic 0; running over GF({char})",
            SmallCharacteristicWarning,
            stacklevel=2,
        )
    master = rng.getrandbits(64)
    forms: list = []
    underlying: list = []
    for t in range(max_trials):
        trng = trial_rng(master, t)
        forms, underlying = [], []
        for _ in range(problem.p):
            if problem.variant == "general":
                forms.append(sample_linear_form(R.nvars, R.field, trng))
            else:
                f, u = sample_structured_form(problem.toric, trng, problem.variant)
                forms.append(f)
                underlying.append(u)
        if verify_reduction(R, forms, problem.i):
            return ReductionResult(forms, t + 1, True, underlying)
    return ReductionResult(forms, max_trials, False, underlying)


def power_generator_count(generators: Sequence, i: int) -> int:
    """Number of minimal generators of ``I^i`` for a monomial ideal ``I``."""
    gens = [tuple(g) for g in generators]
    if i < 0:
        raise ValueError("power must be non-negative")
    if not gens:
        return 0
    products = set()
    for combo in itertools.combinations_with_replacement(range(len(gens)), i):
        m = (0,) * len(gens[0])
        for k in combo:
            m = mono_mul(m, gens[k])
        products.add(m)
    return sum(1 for m in products if not any(o != m and mono_divides(o, m) for o in products))
