"""Sparse multivariate polynomials over a :class:`FieldSpec`."""

from __future__ import annotations

import random
from typing import Iterable, Mapping, Sequence

from .field import FieldSpec
from .monomial import GREVLEX, MonomialOrder, mono_mul, monomials_of_degree


def default_names(n: int) -> list[str]:
    return [f"x{i + 1}" for i in range(n)]


class Polynomial:
    """An element of ``K[x_1, ..., x_n]`` stored as ``{exponents: coefficient}``.

    Instances are treated as immutable; arithmetic returns new objects and no
    zero coefficient is ever stored.
    """

    __slots__ = ("nvars", "field", "terms", "_hash")

    def __init__(self, nvars: int, field: FieldSpec, terms: Mapping | None = None, *, _clean=False):
        self.nvars = nvars
        self.field = field
        self._hash = None
        if terms is None:
            self.terms = {}
        elif _clean:
            self.terms = terms
        else:
            clean = {}
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != nvars:
                    raise ValueError(f"monomial {m} does not have {nvars} exponents")
                c = field(c)
                if c:
                    clean[m] = c
            self.terms = clean

    # construction -----------------------------------------------------------

    @classmethod
    def zero(cls, nvars, field):
        return cls(nvars, field)

    @classmethod
    def constant(cls, value, nvars, field):
        return cls(nvars, field, {(0,) * nvars: value})

    @classmethod
    def monomial(cls, exps, nvars, field, coeff=1):
        return cls(nvars, field, {tuple(exps): coeff})

    @classmethod
    def variable(cls, i, nvars, field):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, field, {tuple(e): 1})

    @classmethod
    def linear(cls, coeffs: Sequence, field: FieldSpec):
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(n, field, terms)

    @classmethod
    def random_homogeneous(cls, nvars, degree, field, rng: random.Random, density: float = 1.0):
        """Random form of the given degree; every monomial kept with probability ``density``."""
        terms = {}
        for m in monomials_of_degree(nvars, degree):
            if density >= 1.0 or rng.random() < density:
                terms[m] = field.random_element(rng)
        return cls(nvars, field, terms)

    @classmethod
    def parse(cls, text: str, names: Sequence[str], field: FieldSpec):
        """Parse an expression such as ``"x1^2 - 3*x1*x2 + 1/2"``."""
        import sympy as sp
        from sympy.parsing.sympy_parser import (
            convert_xor,
            parse_expr,
            standard_transformations,
        )

        syms = sp.symbols(list(names))
        local = {str(s): s for s in syms}
        expr = parse_expr(
            text, local_dict=local, transformations=standard_transformations + (convert_xor,)
        )
        free = {str(s) for s in expr.free_symbols}
        unknown = free - set(names)
        if unknown:
            raise ValueError(f"unknown variables {sorted(unknown)} in {text!r}")
        poly = sp.Poly(expr, *syms, domain="QQ")
        terms = {}
        for m, c in poly.terms():
            terms[m] = field(sp_rational(c))
        return cls(len(names), field, terms)

    # basic queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def leading_monomial(self, order: MonomialOrder = GREVLEX):
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = GREVLEX):
        return self.terms[self.leading_monomial(order)]

    def coefficient(self, m):
        return self.terms.get(tuple(m), self.field.zero)

    def sorted_terms(self, order: MonomialOrder = GREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError(f"variable-count mismatch: {self.nvars} vs {other.nvars}")
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(other, self.nvars, self.field)

    # arithmetic ---------------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        p = self.field.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = v + c
                if p:
                    v %= p
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Polynomial(self.nvars, self.field, out, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        if p:
            out = {m: (p - c) for m, c in self.terms.items()}
        else:
            out = {m: -c for m, c in self.terms.items()}
        return Polynomial(self.nvars, self.field, out, _clean=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        c = self.field(c)
        if not c:
            return Polynomial(self.nvars, self.field)
        p = self.field.p
        if p:
            out = {m: v * c % p for m, v in self.terms.items()}
        else:
            out = {m: v * c for m, v in self.terms.items()}
        return Polynomial(self.nvars, self.field, out, _clean=True)

    def mul_term(self, mono, c):
        """Multiply by the single term ``c * x^mono`` (``c`` already in the field)."""
        p = self.field.p
        if p:
            out = {mono_mul(m, mono): v * c % p for m, v in self.terms.items()}
        else:
            out = {mono_mul(m, mono): v * c for m, v in self.terms.items()}
        return Polynomial(self.nvars, self.field, out, _clean=True)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        p = self.field.p
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        if p:
            out = {m: c % p for m, c in out.items() if c % p}
        else:
            out = {m: c for m, c in out.items() if c}
        return Polynomial(self.nvars, self.field, out, _clean=True)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1, self.nvars, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def monic(self, order: MonomialOrder = GREVLEX):
        if not self.terms:
            return self
        return self.scale(self.field.inv(self.leading_coefficient(order)))

    def substitute(self, images: Sequence["Polynomial"]):
        """Evaluate at ``x_i -> images[i]`` (all images in one common ring)."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        ring = images[0]
        total = Polynomial(ring.nvars, ring.field)
        for m, c in self.terms.items():
            t = Polynomial.constant(c, ring.nvars, ring.field)
            for img, e in zip(images, m):
                if e:
                    t = t * img**e
            total = total + t
        return total

    def embed(self, nvars: int, offset: int = 0):
        """Same polynomial in a ring with ``nvars`` variables, shifted by ``offset``."""
        out = {}
        for m, c in self.terms.items():
            e = [0] * nvars
            e[offset : offset + self.nvars] = m
            out[tuple(e)] = c
        return Polynomial(nvars, self.field, out, _clean=True)

    def restrict(self, start: int, stop: int):
        """Drop the variables outside ``[start, stop)``; they must not occur."""
        out = {}
        for m, c in self.terms.items():
            if any(m[:start]) or any(m[stop:]):
                raise ValueError("polynomial involves a dropped variable")
            out[m[start:stop]] = c
        return Polynomial(stop - start, self.field, out, _clean=True)

    # comparison / display -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.field == other.field and self.terms == other.terms
        if not self.terms:
            return other == 0
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, self.field, frozenset(self.terms.items())))
        return self._hash

    def to_str(self, names: Sequence[str] | None = None, order: MonomialOrder = GREVLEX) -> str:
        names = list(names) if names is not None else default_names(self.nvars)
        if not self.terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms(order):
            c = self.field.signed(c)
            factors = []
            for name, e in zip(names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            neg = c < 0
            a = -c if neg else c
            if not factors:
                body = str(a)
            elif a == 1:
                body = "*".join(factors)
            else:
                body = f"{a}*" + "*".join(factors)
            pieces.append(("- " if neg else "+ ") + body)
        s = " ".join(pieces)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Polynomial({self.to_str()!r}, {self.field})"


def sp_rational(c):
    """sympy Rational -> fractions.Fraction."""
    from fractions import Fraction

    return Fraction(int(c.p), int(c.q))


def linear_form_coefficients(f: Polynomial) -> list:
    """Coefficient vector of a linear form (raises on other polynomials)."""
    coeffs = [f.field.zero] * f.nvars
    for m, c in f.terms.items():
        if sum(m) != 1:
            raise ValueError(f"{f} is not a linear form")
        coeffs[m.index(1)] = c
    return coeffs


def as_polynomials(items: Iterable, nvars: int, field: FieldSpec) -> list[Polynomial]:
    out = []
    for f in items:
        if not isinstance(f, Polynomial):
            f = Polynomial.constant(f, nvars, field)
        out.append(f)
    return out
