"""Shared oracles and fixtures.

The linear-algebra oracles below never touch Groebner bases: graded pieces of
an ideal are spanned explicitly by monomial multiples of the generators and
ranked by Gaussian elimination.
"""

from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

import pytest

from greenbound.polykernel import GF65521, QQ, FieldSpec, Polynomial


def monomials(n, d):
    if d < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def rank(rows, p):
    """Rank of sparse rows ({column: value}) over GF(p), or QQ when p == 0."""
    pivots = {}
    r = 0
    for row in rows:
        row = {k: (v % p if p else Fraction(v)) for k, v in row.items()}
        row = {k: v for k, v in row.items() if v}
        while row:
            col = min(row)
            if col not in pivots:
                inv = pow(row[col], -1, p) if p else 1 / row[col]
                pivots[col] = {k: (v * inv % p if p else v * inv) for k, v in row.items()}
                r += 1
                break
            piv = pivots[col]
            c = row[col]
            for k, v in piv.items():
                nv = row.get(k, 0) - c * v
                if p:
                    nv %= p
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return r


def span_rows(gens, n, d):
    """Rows spanning the degree-d piece of the ideal generated by homogeneous gens."""
    rows = []
    for g in gens:
        e = g.degree()
        if g.is_zero() or e > d:
            continue
        for m in monomials(n, d - e):
            rows.append({tuple(a + b for a, b in zip(mono, m)): c for mono, c in g.terms.items()})
    return rows


def quotient_dim_la(gens, n, d, p):
    """dim_K (A/(gens))_d by linear algebra."""
    if d < 0:
        return 0
    return comb(n - 1 + d, d) - rank(span_rows(gens, n, d), p)


def colon_dim_la(gens, f, n, t, p):
    """dim_K ((gens) : f)_t = dim A_t - rank of multiplication by f into (A/I)_{t+e}."""
    if t < 0:
        return 0
    e = f.degree()
    base = span_rows(gens, n, t + e)
    fa = [{tuple(a + b for a, b in zip(mono, m)): c for mono, c in f.terms.items()} for m in monomials(n, t)]
    return comb(n - 1 + t, t) - (rank(base + fa, p) - rank(base, p))


def var(i, n, field=GF65521):
    return Polynomial.variable(i, n, field)


@pytest.fixture
def xy():
    return var(0, 2, QQ), var(1, 2, QQ)


@pytest.fixture
def xyz():
    return var(0, 3, QQ), var(1, 3, QQ), var(2, 3, QQ)


# ---------------------------------------------------------------------------
# one summary line per acceptance criterion


def pytest_terminal_summary(terminalreporter):
    lines = []
    for status in ("passed", "failed"):
        for rep in terminalreporter.stats.get(status, []):
            if getattr(rep, "when", "call") != "call":
                continue
            props = dict(getattr(rep, "user_properties", []))
            if "criterion" in props:
                lines.append((props["criterion"], status.upper(), props.get("detail", "")))
    if lines:
        terminalreporter.section("acceptance criteria")
        for crit, status, detail in sorted(lines):
            terminalreporter.write_line(f"{status:6s} {crit} {detail}")
