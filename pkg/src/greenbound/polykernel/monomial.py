"""Monomials as exponent tuples, and monomial orders.

Orders are exposed through sort keys: ``order.key(m1) > order.key(m2)`` iff
``m1 > m2``.  Keys are flat integer tuples so they can be negated for heaps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Callable, Iterator

Monomial = tuple  # tuple[int, ...], one exponent per variable


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a, b) -> bool:
    """True when ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_coprime(a, b) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def monomials_of_degree(n: int, d: int) -> Iterator[Monomial]:
    """All exponent tuples of total degree ``d`` in ``n`` variables, lex-descending."""
    if d < 0:
        return
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        yield tuple(e)


def _grevlex(m):
    return (sum(m),) + tuple(-e for e in reversed(m))


def _lex(m):
    return tuple(m)


@dataclass(frozen=True)
class MonomialOrder:
    """``grevlex``, ``lex``, or ``block`` (grevlex on the first ``split``
    variables, ties broken by grevlex on the rest; eliminates the first block)."""

    kind: str = "grevlex"
    split: int = 0
    key: Callable = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.kind == "grevlex":
            k = _grevlex
        elif self.kind == "lex":
            k = _lex
        elif self.kind == "block":
            s = self.split
            if s < 1:
                raise ValueError("block order needs split >= 1")

            def k(m, s=s):
                return _grevlex(m[:s]) + _grevlex(m[s:])

        else:
            raise ValueError(f"unknown monomial order {self.kind!r}")
        object.__setattr__(self, "key", k)

    @classmethod
    def block(cls, split: int) -> "MonomialOrder":
        return cls("block", split)


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")
