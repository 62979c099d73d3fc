"""Toric presentations of Segre, Veronese, Segre-Veronese and chain rings, the
structured linear forms living on them, and fiber cones of monomial ideals.

Presentation variables follow the generating monomials in decreasing lex order
of their exponent vectors, so ``veronese(2, 2)`` has ``Z1 = X1^2``,
``Z2 = X1*X2``, ``Z3 = X2^2``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from .polykernel import GF65521, FieldSpec, GradedQuotient, Ideal, Polynomial, kernel_of_monomial_map, monomials_of_degree
from .restriction import LinearForm, sample_linear_form

VARIANT_OF_KIND = {
    "segre": "segre-product",
    "veronese": "veronese-power",
    "segre-veronese": "segre-veronese",
    "chain": "chain-partial-sums",
}
STRUCTURED_VARIANTS = tuple(VARIANT_OF_KIND.values())


@dataclass
class ToricPresentation:
    """``K[T_1..T_k]/kernel`` for the monomial subalgebra generated by ``images``.

    ``blocks`` are the sizes of the groups of source variables, laid out one
    after the other; ``degrees`` holds ``b`` / ``b_i`` where they apply and,
    for chain rings, the bounds ``n_1 <= ... <= n_s``.
    """

    kind: str
    blocks: tuple
    degrees: tuple
    images: tuple
    presentation_ideal: Ideal
    field: FieldSpec
    names: tuple

    @property
    def source_vars(self) -> int:
        return sum(self.blocks)

    @property
    def presentation_vars(self) -> int:
        return len(self.images)

    @property
    def variant(self) -> str | None:
        return VARIANT_OF_KIND.get(self.kind)

    def ring(self) -> GradedQuotient:
        return GradedQuotient(self.presentation_vars, self.presentation_ideal, self.field, list(self.names))

    def quotient(self, extra: Sequence[Polynomial]) -> GradedQuotient:
        return self.ring().quotient(extra)

    def image_polynomials(self) -> list[Polynomial]:
        return [Polynomial.monomial(a, self.source_vars, self.field) for a in self.images]

    def kernel_vanishes(self) -> bool:
        """Substitute the monomial images into every kernel generator."""
        imgs = self.image_polynomials()
        return all(not g.substitute(imgs) for g in self.presentation_ideal.gb())

    def kernel_strs(self) -> list[str]:
        return self.presentation_ideal.to_strs(self.names)

    def to_json(self):
        return {
            "kind": self.kind,
            "blocks": list(self.blocks),
            "degrees": list(self.degrees),
            "field": str(self.field),
            "variables": list(self.names),
            "images": [list(a) for a in self.images],
            "kernel": self.kernel_strs(),
        }


def _present(kind, blocks, degrees, images, field, names=None) -> ToricPresentation:
    images = tuple(sorted(set(tuple(a) for a in images), reverse=True))
    m = sum(blocks)
    if names is None:
        names = tuple(f"Z{i + 1}" for i in range(len(images)))
    kernel = kernel_of_monomial_map(m, images, field)
    return ToricPresentation(kind, tuple(blocks), tuple(degrees), images, kernel, field, tuple(names))


def _block_monomials(n: Sequence[int], b: Sequence[int]):
    per_block = [list(monomials_of_degree(ni, bi)) for ni, bi in zip(n, b)]
    for combo in itertools.product(*per_block):
        yield tuple(e for part in combo for e in part)


def segre_veronese(n: Sequence[int], b: Sequence[int], field: FieldSpec = GF65521) -> ToricPresentation:
    """``K[prod_ij X_ij^a_ij : sum_j a_ij = b_i]``."""
    n, b = tuple(n), tuple(b)
    if len(n) != len(b) or not n:
        raise ValueError("n and b must be nonempty and of equal length")
    if min(n) < 1 or min(b) < 1:
        raise ValueError("block sizes and degrees must be positive")
    return _present("segre-veronese", n, b, _block_monomials(n, b), field)


def segre(n: Sequence[int], field: FieldSpec = GF65521) -> ToricPresentation:
    """``K[X_{1,i_1} ... X_{s,i_s}]``; variables are named ``T`` plus the index tuple."""
    n = tuple(n)
    if not n or min(n) < 1:
        raise ValueError("segre needs at least one positive block size")
    images = sorted(_block_monomials(n, (1,) * len(n)), reverse=True)
    sep = "" if max(n) < 10 else "_"
    names = tuple("T" + sep.join(str(i + 1) for i in idx) for idx in itertools.product(*(range(k) for k in n)))
    return _present("segre", n, (1,) * len(n), images, field, names)


def veronese(s: int, b: int, field: FieldSpec = GF65521) -> ToricPresentation:
    """``K[X_1^a_1 ... X_s^a_s : sum a_i = b]``."""
    if s < 1 or b < 1:
        raise ValueError("veronese needs s, b >= 1")
    return _present("veronese", (s,), (b,), monomials_of_degree(s, b), field)


def chain_toric(n: Sequence[int], field: FieldSpec = GF65521) -> ToricPresentation:
    """``K[X_{i_1} ... X_{i_s} : i_j <= n_j]`` with ``n_1 <= ... <= n_s``.

    Distinct index tuples giving the same monomial share one presentation
    variable.  Factor ``j`` of a structured form is supported on ``X_1..X_{n_j}``.
    """
    n = tuple(n)
    if not n or min(n) < 1:
        raise ValueError("chain ring needs positive bounds")
    if any(a > b for a, b in zip(n, n[1:])):
        raise ValueError(f"chain bounds {n} are not nondecreasing")
    top = n[-1]
    images = set()
    for idx in itertools.product(*(range(k) for k in n)):
        e = [0] * top
        for i in idx:
            e[i] += 1
        images.add(tuple(e))
    return _present("chain", (top,), n, images, field)


def fiber_cone(generators: Sequence, field: FieldSpec = GF65521) -> ToricPresentation:
    """Presentation of ``K[generators]``, the fiber cone of an equigenerated monomial ideal."""
    gens = [tuple(g) for g in generators]
    if not gens:
        raise ValueError("need at least one generator")
    if len({len(g) for g in gens}) != 1:
        raise ValueError("generators have different numbers of variables")
    if len({sum(g) for g in gens}) != 1:
        raise ValueError("fiber_cone needs an equigenerated monomial ideal")
    if len(set(gens)) != len(gens):
        raise ValueError("generators are not a minimal generating set")
    return _present("fiber-cone", (len(gens[0]),), (sum(gens[0]),), gens, field)


# ---------------------------------------------------------------------------
# structured forms


def _coeffs(form):
    return tuple(form.coefficients) if isinstance(form, LinearForm) else tuple(form)


def _source_linear(coeffs, total, offset, field):
    terms = {}
    for i, c in enumerate(coeffs):
        e = [0] * total
        e[offset + i] = 1
        terms[tuple(e)] = c
    return Polynomial(total, field, terms)


def structured_product(T: ToricPresentation, underlying: Sequence, variant: str | None = None) -> Polynomial:
    """The product/power of the underlying forms, expanded in the source variables."""
    variant = variant or T.variant
    field = T.field
    m = T.source_vars
    forms = [_coeffs(u) for u in underlying]
    if variant == "veronese-power":
        if len(T.blocks) != 1 or len(forms) != 1 or len(forms[0]) != T.blocks[0]:
            raise ValueError("veronese-power needs one form on the single block")
        return _source_linear(forms[0], m, 0, field) ** T.degrees[0]
    if variant in ("segre-product", "segre-veronese"):
        if len(forms) != len(T.blocks) or any(len(f) != k for f, k in zip(forms, T.blocks)):
            raise ValueError(f"{variant} needs one form per block with sizes {T.blocks}")
        powers = (1,) * len(forms) if variant == "segre-product" else T.degrees
        out = Polynomial.constant(1, m, field)
        offset = 0
        for f, k, b in zip(forms, T.blocks, powers):
            out = out * _source_linear(f, m, offset, field) ** b
            offset += k
        return out
    if variant == "chain-partial-sums":
        bounds = T.degrees
        if T.kind != "chain" or len(forms) != len(bounds) or any(len(f) != k for f, k in zip(forms, bounds)):
            raise ValueError(f"chain-partial-sums needs forms with sizes {bounds}")
        out = Polynomial.constant(1, m, field)
        partial = Polynomial.zero(m, field)
        for f in forms:
            partial = partial + _source_linear(f, m, 0, field)
            out = out * partial
        return out
    raise ValueError(f"unknown structured variant {variant!r}")


def structured_form(T: ToricPresentation, underlying: Sequence, variant: str | None = None) -> LinearForm:
    """Read the expanded product off as a linear form in the presentation variables."""
    prod = structured_product(T, underlying, variant)
    index = {a: k for k, a in enumerate(T.images)}
    coeffs = [T.field.zero] * T.presentation_vars
    for mono, c in prod.terms.items():
        k = index.get(mono)
        if k is None:
            raise ValueError(f"monomial {mono} is not a generator of the presentation")
        coeffs[k] = c
    return LinearForm(tuple(coeffs), T.field)


def underlying_sizes(T: ToricPresentation, variant: str | None = None) -> tuple:
    variant = variant or T.variant
    if variant == "chain-partial-sums":
        return tuple(T.degrees)
    if variant == "veronese-power":
        return (T.blocks[0],)
    return tuple(T.blocks)


def sample_structured_form(T: ToricPresentation, rng: random.Random, variant: str | None = None):
    """Sample underlying forms uniformly and return ``(structured form, underlying forms)``."""
    underlying = [sample_linear_form(k, T.field, rng) for k in underlying_sizes(T, variant)]
    return structured_form(T, underlying, variant), underlying
