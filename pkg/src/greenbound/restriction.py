"""Colon/sum ideal ladders, the (Gr,d) verifier and hyperplane-restriction bound checks.

Ideals of ``R = A/J`` are handled through their pre-images in ``A``, so every
ladder ideal contains ``J`` and ``dim_K (I/J)_t = dim_K R_t - dim_K (A/I)_t``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .lexmachine import HilbertFunction, lex_segment_ideal
from .macaulay import macaulay_lower, shifted_bound
from .polykernel import (
    FieldSpec,
    GradedQuotient,
    Ideal,
    Polynomial,
    contains_maximal_ideal,
    ideal_colon_element,
    ideal_sum,
    standard_monomial_count,
)

MAX_LADDER_FORMS = 12
PERMUTATION_SAMPLES = 50
PERMUTATION_SEED = 20240611


class BudgetError(ValueError):
    """Raised when a (Gr,d) enumeration would exceed the supported size."""


@dataclass(frozen=True)
class LinearForm:
    """Coefficient vector of a linear form (the zero form is allowed)."""

    coefficients: tuple
    field: FieldSpec

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(self.field(c) for c in self.coefficients))

    @property
    def nvars(self):
        return len(self.coefficients)

    def is_zero(self):
        return not any(self.coefficients)

    def to_polynomial(self) -> Polynomial:
        return Polynomial.linear(self.coefficients, self.field)

    def __add__(self, other):
        return LinearForm(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)), self.field)

    def scale(self, c):
        return LinearForm(tuple(c * a for a in self.coefficients), self.field)

    def to_str(self, names=None):
        return self.to_polynomial().to_str(names)

    def to_json(self):
        return [str(self.field.signed(c)) for c in self.coefficients]

    @classmethod
    def from_polynomial(cls, f: Polynomial):
        from .polykernel import linear_form_coefficients

        return cls(tuple(linear_form_coefficients(f)), f.field)


def sample_linear_form(n: int, field: FieldSpec, rng: random.Random, bound: int = 100) -> LinearForm:
    """Coefficients drawn independently and uniformly (from ``[-bound, bound]`` over QQ)."""
    return LinearForm(tuple(field.random_element(rng, bound) for _ in range(n)), field)


def _as_poly(form) -> Polynomial:
    return form if isinstance(form, Polynomial) else form.to_polynomial()


def count_c(word: str) -> int:
    return word.count("c")


def words_up_to(r: int):
    """All words over {c, s} of length 0..r: by length, then lexicographically."""
    for length in range(r + 1):
        for letters in itertools.product("cs", repeat=length):
            yield "".join(letters)


# ---------------------------------------------------------------------------
# ladders


class Ladder:
    """Memoised ladder ideals ``I_o`` for one algebra and one sequence of forms."""

    def __init__(self, R: GradedQuotient, forms: Sequence):
        self.R = R
        self.forms = [_as_poly(l) for l in forms]
        for l in self.forms:
            if l.nvars != R.nvars or l.field != R.field:
                raise ValueError("linear form lives in a different ring")
        self._ideals = {"": R.ideal}

    def ideal(self, word: str) -> Ideal:
        if len(word) > len(self.forms):
            raise ValueError(f"word {word!r} is longer than the {len(self.forms)} forms")
        found = self._ideals.get(word)
        if found is None:
            prev = self.ideal(word[:-1])
            found = step(prev, self.forms[len(word) - 1], word[-1])
            self._ideals[word] = found
        return found

    def quotient_dim(self, word: str, t: int) -> int:
        """``dim_K (A/I_o)_t``."""
        return standard_monomial_count(self.ideal(word), t)

    def ideal_dim(self, word: str, t: int) -> int:
        """``dim_K (I_o)_t`` as an ideal of ``R``; zero in negative degrees."""
        if t < 0:
            return 0
        return self.R.hilbert_dim(t) - self.quotient_dim(word, t)


def step(I: Ideal, l: Polynomial, letter: str) -> Ideal:
    """One ladder step: ``I : l`` for ``c``, ``I + (l)`` for ``s``."""
    if letter == "s":
        return ideal_sum(I, Ideal([l], I.nvars, I.field))
    if letter == "c":
        if not l:
            return Ideal.unit(I.nvars, I.field)
        return ideal_colon_element(I, l)
    raise ValueError(f"unknown ladder letter {letter!r}")


def ladder_ideal(R: GradedQuotient, forms: Sequence, word: str) -> Ideal:
    """The ideal ``I_{l,o}``, as a pre-image in the ambient polynomial ring."""
    return Ladder(R, forms).ideal(word)


def ladder_dim(R: GradedQuotient, forms: Sequence, word: str, t: int) -> int:
    return Ladder(R, forms).ideal_dim(word, t)


# ---------------------------------------------------------------------------
# (Gr,d)


@dataclass
class Violation:
    condition: int
    word: str
    detail: str

    def to_json(self):
        return {"condition": self.condition, "word": self.word, "detail": self.detail}


@dataclass
class GrdReport:
    passed: bool
    violations: list = dc_field(default_factory=list)
    ladder_dims: dict = dc_field(default_factory=dict)
    stronger_holds: bool | None = None

    def conditions_violated(self) -> set:
        return {v.condition for v in self.violations}

    def to_json(self):
        return {
            "passed": self.passed,
            "stronger_holds": self.stronger_holds,
            "violations": [v.to_json() for v in self.violations],
            "ladder_dims": {f"{w}@{t}": v for (w, t), v in sorted(self.ladder_dims.items())},
        }


def verify_grd(R: GradedQuotient, forms: Sequence, d: int, check_stronger: bool = False) -> GrdReport:
    """Check conditions (1)-(3) of property (Gr,d), and optionally (4).

    Every word of length ``0..r`` is examined and every failure is reported
    with its witness word.  Dimensions in negative degrees count as zero, so
    conditions (3) and (4) are vacuous there.
    """
    if d < 1:
        raise ValueError("degree d must be positive")
    r = len(forms)
    if r == 0:
        raise ValueError("need at least one linear form")
    if r > MAX_LADDER_FORMS:
        raise BudgetError(f"(Gr,d) enumeration is capped at r <= {MAX_LADDER_FORMS}, got r = {r}")
    lad = Ladder(R, forms)
    violations = []
    dims = {}
    stronger_ok = True if check_stronger else None

    for word in words_up_to(r):
        i = len(word)
        I = lad.ideal(word)
        has_m = contains_maximal_ideal(I)
        nc = count_c(word)
        t = d - nc - 1
        if t >= 0:
            for j in range(t + 1):
                dims[(word, j)] = lad.ideal_dim(word, j)
        if i < r and not has_m and I.contains(lad.forms[i]):
            violations.append(Violation(1, word, f"l_{i + 1} lies in I_o although m is not contained in I_o"))
        if i == r and nc < d and not has_m:
            violations.append(Violation(2, word, f"|o|_c = {nc} < d but m is not contained in I_o"))
        if i <= r - 2 and t >= 0:
            lhs = lad.ideal_dim(word + "cs", t)
            rhs = lad.ideal_dim(word + "sc", t)
            if lhs > rhs:
                violations.append(Violation(3, word, f"dim(I_ocs)_{t} = {lhs} > dim(I_osc)_{t} = {rhs}"))
            if check_stronger:
                mixed = ideal_sum(step(I, lad.forms[i + 1], "c"), Ideal([lad.forms[i]], R.nvars, R.field))
                mixed_dim = R.hilbert_dim(t) - standard_monomial_count(mixed, t)
                if lhs != mixed_dim:
                    stronger_ok = False
                    violations.append(
                        Violation(4, word, f"dim(I_ocs)_{t} = {lhs} != dim((I_o:l_{i + 2}) + l_{i + 1})_{t} = {mixed_dim}")
                    )

    passed = not any(v.condition in (1, 2, 3) for v in violations)
    return GrdReport(passed, violations, dims, stronger_ok)


# ---------------------------------------------------------------------------
# bound checks


@dataclass(frozen=True)
class BoundCheck:
    lhs: int
    rhs: int
    holds: bool

    def to_json(self):
        return {"lhs": self.lhs, "rhs": self.rhs, "holds": self.holds}


def quotient_dim(R: GradedQuotient, polys, d: int) -> int:
    return standard_monomial_count(ideal_sum(R.ideal, Ideal(list(polys), R.nvars, R.field)), d)


def check_green_bound(R: GradedQuotient, l, d: int) -> BoundCheck:
    """``dim (R/lR)_d <= (dim R_d)_<d>``."""
    lhs = quotient_dim(R, [_as_poly(l)], d)
    rhs = macaulay_lower(R.hilbert_dim(d), d)
    return BoundCheck(lhs, rhs, lhs <= rhs)


def check_iterated_bound(R: GradedQuotient, forms: Sequence, d: int) -> BoundCheck:
    """``dim (R/(l_1..l_p))_d <= sum_j binom(k_j - p, j)`` with ``p = len(forms)``."""
    p = len(forms)
    lhs = quotient_dim(R, [_as_poly(l) for l in forms], d)
    rhs = shifted_bound(R.hilbert_dim(d), d, p)
    return BoundCheck(lhs, rhs, lhs <= rhs)


def check_gasharov_bound(R: GradedQuotient, f: Polynomial, d: int, degree: int | None = None) -> BoundCheck:
    """``dim (A/(I + (f)))_d <= dim (A/(I^lex + (x_n^c)))_d`` for a form ``f`` of degree ``c``.

    ``degree`` must be given when ``f`` is the zero polynomial.
    """
    if f:
        if not f.is_homogeneous():
            raise ValueError("f must be homogeneous")
        c = f.degree()
        if degree is not None and degree != c:
            raise ValueError(f"f has degree {c}, not {degree}")
    elif degree is None:
        raise ValueError("the degree of a zero form must be given explicitly")
    else:
        c = degree
    if c < 1:
        raise ValueError("f must have positive degree")
    n = R.nvars
    lhs = quotient_dim(R, [f], d)
    hf = HilbertFunction(tuple(R.hilbert_function(d)), n)
    lex = lex_segment_ideal(hf, field=R.field)
    xn_power = Polynomial.monomial((0,) * (n - 1) + (c,), n, R.field)
    rhs = standard_monomial_count(ideal_sum(lex, Ideal([xn_power], n, R.field)), d)
    return BoundCheck(lhs, rhs, lhs <= rhs)


def _permutations(r: int):
    if r <= 6:
        return list(itertools.permutations(range(r)))
    rng = random.Random(PERMUTATION_SEED)
    perms = [tuple(range(r))]
    for _ in range(PERMUTATION_SAMPLES - 1):
        p = list(range(r))
        rng.shuffle(p)
        perms.append(tuple(p))
    return perms


def check_order_independence(R: GradedQuotient, forms: Sequence, d: int) -> bool:
    """True iff ``dim_K (I_o)_j`` is unchanged under reordering the forms, for every
    word ``o`` and every ``0 <= j <= d - |o|_c - 1``.

    All permutations are tried for up to six forms, otherwise a fixed-seed
    sample of 50.
    """
    r = len(forms)
    if r == 0:
        raise ValueError("need at least one linear form")
    reference = None
    for perm in _permutations(r):
        lad = Ladder(R, [forms[k] for k in perm])
        dims = {}
        for word in words_up_to(r):
            for j in range(d - count_c(word)):
                dims[(word, j)] = lad.ideal_dim(word, j)
        if reference is None:
            reference = dims
        elif dims != reference:
            return False
    return True
