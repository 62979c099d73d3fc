"""Exact coefficient fields: prime fields GF(p) and the rationals."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

DEFAULT_PRIME = 65521


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A coefficient field.

    ``p`` is the characteristic: a prime for GF(p), 0 for the rationals.
    Prime-field elements are canonical ints in ``[0, p)``; rational elements
    are :class:`fractions.Fraction`.
    """

    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if self.p != 0 and not _is_prime(self.p):
            raise ValueError(f"field modulus {self.p} is not prime")

    @classmethod
    def prime(cls, p: int = DEFAULT_PRIME) -> "FieldSpec":
        return cls(p)

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    @classmethod
    def parse(cls, text) -> "FieldSpec":
        """Parse ``"Q"`` or a prime such as ``"65521"``."""
        s = str(text).strip()
        if s.upper() in ("Q", "QQ", "0"):
            return cls.rationals()
        return cls(int(s))

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def is_prime_field(self) -> bool:
        return self.p != 0

    def __str__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"

    @property
    def zero(self):
        return 0 if self.p else Fraction(0)

    @property
    def one(self):
        return 1 if self.p else Fraction(1)

    def __call__(self, value):
        """Coerce an int or rational into the field."""
        if self.p:
            if isinstance(value, int):
                return value % self.p
            if isinstance(value, Rational):
                num, den = value.numerator, value.denominator
                if den % self.p == 0:
                    raise ZeroDivisionError(f"{value} has no image in {self}")
                return num * pow(den, -1, self.p) % self.p
            raise TypeError(f"cannot coerce {value!r} into {self}")
        return Fraction(value)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.p:
            return pow(a, -1, self.p)
        return 1 / a

    def signed(self, a):
        """Symmetric representative, used only for printing."""
        if self.p and a > self.p // 2:
            return a - self.p
        return a

    def random_element(self, rng: random.Random, bound: int = 100):
        """Uniform element of GF(p), or an integer in ``[-bound, bound]`` over QQ."""
        if self.p:
            return rng.randrange(self.p)
        return Fraction(rng.randint(-bound, bound))

    def random_nonzero(self, rng: random.Random, bound: int = 100):
        while True:
            a = self.random_element(rng, bound)
            if a:
                return a


QQ = FieldSpec.rationals()
GF65521 = FieldSpec.prime(DEFAULT_PRIME)
