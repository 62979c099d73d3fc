"""Macaulay representations and the integer operators built on them.

Every non-negative integer ``c`` has a ``d``'th Macaulay representation

    c = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_1, 1),   k_d > ... > k_1 >= 0.

Trailing terms that contribute zero are filled in greedily (each ``k_j`` is the
largest value below ``k_{j+1}`` whose binomial fits), so a representation
always carries exactly ``d`` coefficients and ``macaulay_rep(0, 2) == (1, 0)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

__all__ = [
    "MacaulayRep",
    "binom",
    "macaulay_rep",
    "macaulay_lower",
    "macaulay_upper",
    "shifted_bound",
    "lemma_green_inequality",
    "is_o_sequence",
]


def binom(a: int, b: int) -> int:
    """Binomial coefficient with ``binom(a, b) == 0`` whenever ``a < b`` or ``a < 0``."""
    if b < 0:
        raise ValueError("binom: lower index must be non-negative")
    if a < 0 or a < b:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class MacaulayRep:
    """The ``d``'th Macaulay representation of ``c``.

    ``coeffs`` is ordered from the top index down: ``(k_d, k_{d-1}, ..., k_1)``.
    """

    c: int
    d: int
    coeffs: tuple[int, ...]

    def terms(self):
        """Yield ``(k_j, j)`` pairs, top index first."""
        return zip(self.coeffs, range(self.d, 0, -1))

    def value(self) -> int:
        return sum(binom(k, j) for k, j in self.terms())

    def shifted(self, shift: int) -> int:
        """Re-sum the representation with every top moved by ``shift``."""
        return sum(binom(k + shift, j) for k, j in self.terms())

    def is_strictly_decreasing(self) -> bool:
        return all(a > b for a, b in zip(self.coeffs, self.coeffs[1:])) and self.coeffs[-1] >= 0


def _largest_top(rest: int, j: int, cap: int | None) -> int:
    """Largest ``k`` (``< cap`` when given) with ``binom(k, j) <= rest``."""
    # binom(k, j) >= k for k > j >= 1, so k <= max(rest, j) + 1 bounds the search
    hi = max(rest, j) + 1 if cap is None else cap - 1
    lo = j - 1
    if binom(hi, j) <= rest:
        return hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if binom(mid, j) <= rest:
            lo = mid
        else:
            hi = mid
    return lo


def macaulay_rep(c: int, d: int) -> MacaulayRep:
    """Return the greedy ``d``'th Macaulay representation of ``c``.

    >>> macaulay_rep(7, 3).coeffs
    (4, 3, 0)
    >>> macaulay_rep(0, 2).coeffs
    (1, 0)
    """
    if c < 0 or d < 1:
        raise ValueError(f"macaulay_rep needs c >= 0 and d >= 1, got c={c}, d={d}")
    coeffs = []
    rest = c
    cap = None
    for j in range(d, 0, -1):
        k = _largest_top(rest, j, cap)
        coeffs.append(k)
        rest -= binom(k, j)
        cap = k
    assert rest == 0
    return MacaulayRep(c, d, tuple(coeffs))


def macaulay_lower(c: int, d: int) -> int:
    """The operator ``c -> c_<d>``: lower every Macaulay top by one and re-sum."""
    return macaulay_rep(c, d).shifted(-1)


def macaulay_upper(c: int, d: int) -> int:
    """Macaulay's growth bound ``c^<d>``: raise every top and every bottom by one."""
    return sum(binom(k + 1, j + 1) for k, j in macaulay_rep(c, d).terms())


def shifted_bound(c: int, d: int, p: int) -> int:
    """``binom(k_d - p, d) + ... + binom(k_1 - p, 1)`` for the representation of ``c``.

    This is the bound on ``dim (R/(l_1, ..., l_p))_d`` when ``dim R_d = c``.
    ``p = 0`` returns ``c`` and ``p = 1`` agrees with :func:`macaulay_lower`.
    """
    if p < 0:
        raise ValueError("shifted_bound: p must be non-negative")
    return macaulay_rep(c, d).shifted(-p)


def _lower_or_identity(c: int, d: int) -> int:
    # the degree-0 operator is taken to be the identity
    return c if d == 0 else macaulay_lower(c, d)


def lemma_green_inequality(c: int, c_H: int, d: int) -> bool:
    """Truth of the implication at the heart of the restriction argument.

    If ``c_H <= (c_H)_<d> + (c - c_H)_<d-1>`` then ``c_H <= c_<d>``.
    Returns ``True`` when the implication holds (vacuously or not).
    """
    if not (0 <= c_H <= c) or d < 1:
        raise ValueError(f"need 0 <= c_H <= c and d >= 1, got c={c}, c_H={c_H}, d={d}")
    premise = c_H <= macaulay_lower(c_H, d) + _lower_or_identity(c - c_H, d - 1)
    return (not premise) or c_H <= macaulay_lower(c, d)


def is_o_sequence(hf: Sequence[int]) -> bool:
    """Check Macaulay's growth condition ``hf[d+1] <= hf[d]^<d>`` for ``d >= 1``.

    >>> is_o_sequence((1, 2, 1, 1, 1))
    True
    >>> is_o_sequence((1, 2, 4))
    False
    """
    if not hf or hf[0] != 1 or any(v < 0 for v in hf):
        return False
    return all(hf[d + 1] <= macaulay_upper(hf[d], d) for d in range(1, len(hf) - 1))
