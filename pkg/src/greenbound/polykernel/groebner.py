"""Division algorithm and Buchberger's algorithm for reduced Groebner bases."""

from __future__ import annotations

import heapq
from typing import Sequence

from .monomial import GREVLEX, MonomialOrder, mono_coprime, mono_div, mono_divides, mono_lcm, mono_mul
from .polynomial import Polynomial


def _neg(key):
    return tuple(-k for k in key)


def normal_form(f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> Polynomial:
    """Fully reduced remainder of ``f`` on division by ``basis``.

    No term of the result is divisible by a leading monomial of ``basis``.
    Divisors are tried in the given order, so the result is deterministic.
    """
    key = order.key
    field = f.field
    p = field.p
    divisors = []
    for g in basis:
        if g.nvars != f.nvars:
            raise ValueError(f"variable-count mismatch: {f.nvars} vs {g.nvars}")
        if not g:
            raise ValueError("zero polynomial in division basis")
        lm = g.leading_monomial(order)
        inv = field.inv(g.terms[lm])
        tail = [(m, c) for m, c in g.terms.items() if m != lm]
        divisors.append((lm, inv, tail))

    work = dict(f.terms)
    heap = [(_neg(key(m)), m) for m in work]
    heapq.heapify(heap)
    rem = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, None)
        if c is None:
            continue
        for lm, inv, tail in divisors:
            if mono_divides(lm, m):
                q = mono_div(m, lm)
                factor = c * inv % p if p else c * inv
                for tm, tc in tail:
                    mm = mono_mul(tm, q)
                    v = work.get(mm)
                    delta = factor * tc
                    if v is None:
                        v = -delta % p if p else -delta
                        if v:
                            work[mm] = v
                            heapq.heappush(heap, (_neg(key(mm)), mm))
                    else:
                        v = (v - delta) % p if p else v - delta
                        if v:
                            work[mm] = v
                        else:
                            del work[mm]
                break
        else:
            rem[m] = c
    return Polynomial(f.nvars, field, rem, _clean=True)


def divide_exact(g: Polynomial, f: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    """Return ``q`` with ``g == q * f``; raise ``ArithmeticError`` if ``f`` does not divide ``g``."""
    if not f:
        raise ZeroDivisionError("division by the zero polynomial")
    field = g.field
    lm_f = f.leading_monomial(order)
    inv = field.inv(f.terms[lm_f])
    rest = g
    quotient = {}
    while rest:
        lm = rest.leading_monomial(order)
        if not mono_divides(lm_f, lm):
            raise ArithmeticError(f"{f} does not divide {g}")
        q = mono_div(lm, lm_f)
        c = field(rest.terms[lm] * inv)
        quotient[q] = c
        rest = rest - f.mul_term(q, c)
    return Polynomial(g.nvars, field, quotient, _clean=True)


def spoly(f: Polynomial, g: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    """S-polynomial of two monic polynomials."""
    lf = f.leading_monomial(order)
    lg = g.leading_monomial(order)
    lcm = mono_lcm(lf, lg)
    one = f.field.one
    return f.mul_term(mono_div(lcm, lf), one) - g.mul_term(mono_div(lcm, lg), one)


def _minimalize(G, order):
    key = order.key
    out = []
    lms = []
    for g in sorted(G, key=lambda h: key(h.leading_monomial(order))):
        lm = g.leading_monomial(order)
        if not any(mono_divides(l, lm) for l in lms):
            out.append(g)
            lms.append(lm)
    return out


def _interreduce(G, order):
    out = []
    for i, g in enumerate(G):
        r = normal_form(g, G[:i] + G[i + 1 :], order)
        out.append(r.monic(order))
    out.sort(key=lambda h: order.key(h.leading_monomial(order)), reverse=True)
    return out


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> list[Polynomial]:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pairs are processed by the normal strategy (smallest lcm first) and pairs
    with coprime leading monomials are skipped.  The output is monic, sorted by
    decreasing leading monomial, and independent of the order of ``gens``.
    """
    gens = [g for g in gens if g]
    if not gens:
        return []
    key = order.key
    G: list[Polynomial] = []
    lms: list = []
    pairs: list = []

    def add(h):
        h = h.monic(order)
        lm = h.leading_monomial(order)
        j = len(G)
        for i, lmi in enumerate(lms):
            if mono_coprime(lmi, lm):
                continue
            lcm = mono_lcm(lmi, lm)
            heapq.heappush(pairs, (sum(lcm), key(lcm), i, j))
        G.append(h)
        lms.append(lm)

    for g in gens:
        if g.is_constant():
            return [Polynomial.constant(1, g.nvars, g.field)]
    for g in sorted(gens, key=lambda h: key(h.leading_monomial(order))):
        r = normal_form(g, G, order) if G else g
        if r:
            if r.is_constant():
                return [Polynomial.constant(1, g.nvars, g.field)]
            add(r)

    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        r = normal_form(spoly(G[i], G[j], order), G, order)
        if r:
            if r.is_constant():
                return [Polynomial.constant(1, r.nvars, r.field)]
            add(r)

    return _interreduce(_minimalize(G, order), order)
