"""Ideals with cached Groebner bases, graded quotients, and the ideal operations
built on elimination (intersection, colon, kernels of monomial maps)."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from ..macaulay import binom
from .field import FieldSpec
from .groebner import buchberger, divide_exact, normal_form
from .monomial import GREVLEX, LEX, MonomialOrder, mono_divides, monomials_of_degree
from .polynomial import Polynomial


class Ideal:
    """An ideal of ``K[x_1, ..., x_n]`` given by generators.

    Zero generators are dropped.  Reduced Groebner bases are memoised per
    monomial order; filling the memo twice yields the same value, so
    concurrent readers need no locking.
    """

    def __init__(self, generators: Iterable[Polynomial] = (), nvars: int | None = None, field: FieldSpec | None = None):
        gens = list(generators)
        if gens:
            nvars = gens[0].nvars if nvars is None else nvars
            field = gens[0].field if field is None else field
        if nvars is None or field is None:
            raise ValueError("an ideal without generators needs nvars and field")
        for g in gens:
            if g.nvars != nvars or g.field != field:
                raise ValueError("generators live in different rings")
        self.nvars = nvars
        self.field = field
        self.generators = [g for g in gens if g]
        self._gb: dict = {}

    @classmethod
    def zero(cls, nvars, field):
        return cls((), nvars, field)

    @classmethod
    def unit(cls, nvars, field):
        return cls([Polynomial.constant(1, nvars, field)])

    @classmethod
    def maximal(cls, nvars, field):
        return cls([Polynomial.variable(i, nvars, field) for i in range(nvars)], nvars, field)

    def same_ring(self, other) -> bool:
        return self.nvars == other.nvars and self.field == other.field

    def _check(self, other):
        if not self.same_ring(other):
            raise ValueError("ideals live in different rings")

    def gb(self, order: MonomialOrder = GREVLEX) -> list[Polynomial]:
        basis = self._gb.get(order)
        if basis is None:
            basis = buchberger(self.generators, order)
            self._gb[order] = basis
        return basis

    def leading_monomials(self, order: MonomialOrder = GREVLEX):
        return [g.leading_monomial(order) for g in self.gb(order)]

    def reduce(self, f: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
        return normal_form(f, self.gb(order), order)

    def contains(self, f: Polynomial) -> bool:
        return not self.reduce(f)

    def __contains__(self, f):
        return self.contains(f)

    def contains_ideal(self, other: "Ideal") -> bool:
        self._check(other)
        return all(self.contains(g) for g in other.generators)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.same_ring(other) and self.gb() == other.gb()

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        gb = self.gb()
        return len(gb) == 1 and gb[0].is_constant()

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def __add__(self, other):
        return ideal_sum(self, other)

    def verify_gb(self, order: MonomialOrder = GREVLEX) -> bool:
        """Check that the cached basis is reduced and generates this ideal."""
        basis = self.gb(order)
        lms = [g.leading_monomial(order) for g in basis]
        for i, g in enumerate(basis):
            if g.terms[lms[i]] != self.field.one:
                return False
            others = lms[:i] + lms[i + 1 :]
            if any(mono_divides(l, m) for m in g.terms for l in others):
                return False
        if any(normal_form(f, basis, order) for f in self.generators):
            return False
        # reverse containment through a basis computed under a different order
        other = LEX if order != LEX else GREVLEX
        alt = buchberger(self.generators, other)
        return all(not normal_form(g, alt, other) for g in basis)

    def to_strs(self, names=None) -> list[str]:
        return [g.to_str(names) for g in self.gb()]

    def __repr__(self):
        return f"Ideal({[str(g) for g in self.generators]}, nvars={self.nvars}, field={self.field})"


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    I._check(J)
    return Ideal(I.generators + J.generators, I.nvars, I.field)


def principal(f: Polynomial) -> Ideal:
    return Ideal([f], f.nvars, f.field)


def eliminate(I: Ideal, k: int) -> Ideal:
    """Intersection of ``I`` with the subring in the last ``nvars - k`` variables."""
    order = MonomialOrder.block(k)
    keep = [g.restrict(k, I.nvars) for g in I.gb(order) if not any(any(m[:k]) for m in g.terms)]
    return Ideal(keep, I.nvars - k, I.field)


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    """``I ∩ J`` as the ``t``-free part of ``t*I + (1 - t)*J``."""
    I._check(J)
    n, field = I.nvars, I.field
    if I.is_zero() or J.is_zero():
        return Ideal.zero(n, field)
    t = Polynomial.variable(0, n + 1, field)
    one_minus_t = 1 - t
    gens = [t * g.embed(n + 1, 1) for g in I.gb()]
    gens += [one_minus_t * g.embed(n + 1, 1) for g in J.gb()]
    return eliminate(Ideal(gens, n + 1, field), 1)


def ideal_colon_element(I: Ideal, f: Polynomial) -> Ideal:
    """``(I : f) = {g : g*f in I}``, via ``(I ∩ (f)) / f``."""
    if not f:
        raise ValueError("colon by the zero polynomial")
    if f.nvars != I.nvars or f.field != I.field:
        raise ValueError("polynomial and ideal live in different rings")
    if I.contains(f):
        return Ideal.unit(I.nvars, I.field)
    inter = ideal_intersection(I, principal(f))
    return Ideal([divide_exact(g, f) for g in inter.gb()], I.nvars, I.field)


def kernel_of_monomial_map(target_vars: int, images: Sequence, field: FieldSpec) -> Ideal:
    """Kernel of ``K[T_1..T_k] -> K[X_1..X_m]``, ``T_i -> X^images[i]``.

    Computed by eliminating the ``X`` variables from ``(T_i - X^images[i])``.
    All images must have the same total degree so the presentation is
    standard graded.
    """
    images = [tuple(a) for a in images]
    k, m = len(images), target_vars
    if any(len(a) != m for a in images):
        raise ValueError(f"images must be exponent vectors of length {m}")
    if len({sum(a) for a in images}) > 1:
        raise ValueError("monomial images have unequal degrees")
    n = m + k
    gens = []
    for i, a in enumerate(images):
        t = Polynomial.variable(m + i, n, field)
        gens.append(t - Polynomial.monomial(tuple(a) + (0,) * k, n, field))
    return eliminate(Ideal(gens, n, field), m)


def contains_maximal_ideal(I: Ideal) -> bool:
    """True iff every variable lies in ``I``."""
    return all(I.contains(Polynomial.variable(i, I.nvars, I.field)) for i in range(I.nvars))


@dataclass
class GradedQuotient:
    """A standard graded algebra ``A/I`` with ``A = K[x_1, ..., x_n]`` and ``I`` homogeneous."""

    nvars: int
    ideal: Ideal
    field: FieldSpec
    names: list = dc_field(default=None)

    def __post_init__(self):
        if self.ideal.nvars != self.nvars or self.ideal.field != self.field:
            raise ValueError("defining ideal lives in a different ring")
        if not self.ideal.is_homogeneous():
            raise ValueError("defining ideal is not homogeneous")

    @classmethod
    def polynomial_ring(cls, nvars, field, names=None):
        return cls(nvars, Ideal.zero(nvars, field), field, names)

    @classmethod
    def from_generators(cls, gens, nvars, field, names=None):
        return cls(nvars, Ideal(gens, nvars, field), field, names)

    def quotient(self, extra: Iterable[Polynomial]) -> "GradedQuotient":
        return GradedQuotient(self.nvars, ideal_sum(self.ideal, Ideal(list(extra), self.nvars, self.field)), self.field, self.names)

    def hilbert_dim(self, d: int) -> int:
        return hilbert_dim(self, d)

    def hilbert_function(self, top: int) -> list[int]:
        return [hilbert_dim(self, d) for d in range(top + 1)]


def standard_monomial_count(I: Ideal, d: int, order: MonomialOrder = GREVLEX) -> int:
    """Number of degree-``d`` monomials outside the initial ideal of ``I``."""
    if d < 0:
        return 0
    lms = I.leading_monomials(order)
    if not lms:
        return binom(I.nvars - 1 + d, d)
    return sum(1 for m in monomials_of_degree(I.nvars, d) if not any(mono_divides(l, m) for l in lms))


def hilbert_dim(Q: GradedQuotient, d: int) -> int:
    """``dim_K (A/I)_d``; zero in negative degrees."""
    return standard_monomial_count(Q.ideal, d)
