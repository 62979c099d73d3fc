import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from conftest import colon_dim_la, quotient_dim_la
from greenbound.corpus import random_quotient
from greenbound.polykernel import GF65521, QQ, FieldSpec, GradedQuotient, Ideal, Polynomial
from greenbound.restriction import (
    MAX_LADDER_FORMS,
    BudgetError,
    GrdReport,
    Ladder,
    LinearForm,
    Violation,
    check_gasharov_bound,
    check_green_bound,
    check_iterated_bound,
    check_order_independence,
    count_c,
    ladder_dim,
    ladder_ideal,
    sample_linear_form,
    verify_grd,
    words_up_to,
)
from greenbound.toric import sample_structured_form, veronese

P = 65521


def lf(*coeffs, field=QQ):
    return LinearForm(tuple(coeffs), field)


def poly_ring(n, field=QQ):
    return GradedQuotient.polynomial_ring(n, field)


def char2_quotient():
    T = veronese(2, 2, FieldSpec(2))
    z = [Polynomial.variable(i, 3, T.field) for i in range(3)]
    return T, T.quotient([z[0], z[2]])


class TestWords:
    def test_order(self):
        assert list(words_up_to(2)) == ["", "c", "s", "cc", "cs", "sc", "ss"]
        assert len(list(words_up_to(5))) == 2**6 - 1

    def test_counts(self):
        for w in words_up_to(6):
            assert count_c(w) + w.count("s") == len(w)


class TestLinearForm:
    def test_zero_form_is_allowed(self):
        z = lf(0, 0)
        assert z.is_zero()
        assert z.to_polynomial().is_zero()

    def test_arithmetic(self):
        a = lf(1, 2, field=GF65521)
        assert (a + a).coefficients == a.scale(2).coefficients
        assert a.scale(-1).to_json() == ["-1", "-2"]

    def test_polynomial_round_trip(self):
        a = lf(3, 0, -1)
        assert LinearForm.from_polynomial(a.to_polynomial()) == a


class TestSampling:
    def test_seed_42_is_fixed(self):
        a = sample_linear_form(3, GF65521, random.Random(42))
        assert a == sample_linear_form(3, GF65521, random.Random(42))
        assert a.coefficients == (41905, 7296, 1639)

    def test_collisions(self):
        seen = {sample_linear_form(3, GF65521, random.Random(seed)).coefficients for seed in range(1000)}
        assert len(seen) == 1000

    def test_rationals_respect_bound(self):
        rng = random.Random(1)
        for _ in range(50):
            assert all(abs(c) <= 5 for c in sample_linear_form(4, QQ, rng, bound=5).coefficients)


class TestLadder:
    def test_examples(self):
        R = poly_ring(2)
        x, y = (Polynomial.variable(i, 2, QQ) for i in range(2))
        forms = [lf(1, 0), lf(0, 1)]
        assert ladder_ideal(R, forms, "").is_zero()
        assert ladder_ideal(R, forms, "s") == Ideal([x], 2, QQ)
        assert ladder_ideal(R, forms, "sc") == Ideal([x], 2, QQ)

    def test_word_too_long(self):
        with pytest.raises(ValueError):
            ladder_ideal(poly_ring(2), [lf(1, 0)], "cs")

    def test_foreign_form(self):
        with pytest.raises(ValueError):
            Ladder(poly_ring(2), [lf(1, 0, 0)])

    def test_contains_defining_ideal(self):
        rng = random.Random(4)
        R = random_quotient(rng, GF65521, min_vars=2, max_vars=3)
        forms = [sample_linear_form(R.nvars, GF65521, rng) for _ in range(3)]
        lad = Ladder(R, forms)
        for w in words_up_to(3):
            assert lad.ideal(w).contains_ideal(R.ideal)

    def test_negative_degree(self):
        R = poly_ring(2)
        assert ladder_dim(R, [lf(1, 0)], "c", -1) == 0
        assert ladder_dim(R, [lf(1, 0)], "s", -5) == 0

    def test_zero_form_colon_is_unit(self):
        lad = Ladder(poly_ring(2), [lf(0, 0)])
        assert lad.ideal("c").is_unit()

    @pytest.mark.parametrize("seed", range(10))
    def test_two_steps_against_linear_algebra(self, seed):
        rng = random.Random(seed)
        R = random_quotient(rng, GF65521, min_vars=2, max_vars=3, max_gens=2, max_gen_degree=2)
        n = R.nvars
        l1, l2 = (sample_linear_form(n, GF65521, rng) for _ in range(2))
        lad = Ladder(R, [l1, l2])
        gens = R.ideal.generators
        p1, p2 = l1.to_polynomial(), l2.to_polynomial()
        for t in range(4):
            full = comb(n - 1 + t, t)
            assert lad.quotient_dim("s", t) == quotient_dim_la(gens + [p1], n, t, P)
            assert lad.quotient_dim("c", t) == full - colon_dim_la(gens, p1, n, t, P)
            assert lad.quotient_dim("sc", t) == full - colon_dim_la(gens + [p1], p2, n, t, P)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 2**32), st.sampled_from(["", "c", "s", "cs", "sc"]))
    def test_exactness(self, seed, word):
        """dim(A/I)_t = dim(A/(I:l))_{t-1} + dim(A/(I+l))_t."""
        rng = random.Random(seed)
        R = random_quotient(rng, GF65521, min_vars=1, max_vars=3, max_gens=2, max_gen_degree=2)
        forms = [sample_linear_form(R.nvars, GF65521, rng, bound=3) for _ in range(3)]
        if rng.random() < 0.3:
            forms[len(word)] = lf(*([0] * R.nvars), field=GF65521)
        lad = Ladder(R, forms)
        for t in range(5):
            assert lad.quotient_dim(word, t) == lad.quotient_dim(word + "c", t - 1) + lad.quotient_dim(word + "s", t)


class TestVerifyGrd:
    def test_plane(self):
        rep = verify_grd(poly_ring(2), [lf(1, 0), lf(0, 1)], 1)
        assert rep.passed and not rep.violations

    def test_too_few_forms(self):
        rep = verify_grd(poly_ring(3), [lf(1, 0, 0), lf(0, 1, 0)], 2)
        assert not rep.passed
        assert 2 in rep.conditions_violated()
        assert any(v.condition == 2 and v.word == "ss" for v in rep.violations)

    def test_char_two(self):
        T, R = char2_quotient()
        rng = random.Random(0)
        for _ in range(10):
            forms = [sample_structured_form(T, rng)[0] for _ in range(2)]
            assert all(f.coefficients[1] == 0 for f in forms)
            rep = verify_grd(R, forms, 1)
            assert not rep.passed
            assert {1, 2} <= rep.conditions_violated()
            assert any(v.condition == 1 and v.word == "" for v in rep.violations)

    def test_budget(self):
        forms = [lf(1, 0)] * (MAX_LADDER_FORMS + 1)
        with pytest.raises(BudgetError):
            verify_grd(poly_ring(2), forms, 1)

    def test_bad_inputs(self):
        with pytest.raises(ValueError):
            verify_grd(poly_ring(2), [], 1)
        with pytest.raises(ValueError):
            verify_grd(poly_ring(2), [lf(1, 0)], 0)

    @pytest.mark.parametrize("seed", range(8))
    def test_general_forms_pass(self, seed):
        rng = random.Random(seed)
        R = random_quotient(rng, GF65521, min_vars=1, max_vars=3, max_gens=2, max_gen_degree=2)
        d = rng.randint(1, 2)
        forms = [sample_linear_form(R.nvars, GF65521, rng) for _ in range(R.nvars + d - 1)]
        rep = verify_grd(R, forms, d, check_stronger=True)
        assert rep.passed, [v.to_json() for v in rep.violations]
        assert rep.stronger_holds

    def test_passed_iff_no_core_violation(self):
        rng = random.Random(9)
        for _ in range(15):
            R = random_quotient(rng, GF65521, min_vars=1, max_vars=3, max_gens=2, max_gen_degree=2)
            forms = [
                sample_linear_form(R.nvars, GF65521, rng) if rng.random() < 0.6 else lf(*[rng.randint(0, 1) for _ in range(R.nvars)], field=GF65521)
                for _ in range(rng.randint(1, 4))
            ]
            rep = verify_grd(R, forms, rng.randint(1, 3), check_stronger=rng.random() < 0.5)
            assert rep.passed == (not any(v.condition in (1, 2, 3) for v in rep.violations))

    def test_report_json(self):
        rep = GrdReport(False, [Violation(2, "ss", "x")], {("", 0): 0})
        assert rep.to_json() == {
            "passed": False,
            "stronger_holds": None,
            "violations": [{"condition": 2, "word": "ss", "detail": "x"}],
            "ladder_dims": {"@0": 0},
        }


class TestBounds:
    def test_green_examples(self):
        c = check_green_bound(poly_ring(3), lf(1, 0, 0), 2)
        assert (c.lhs, c.rhs, c.holds) == (3, 3, True)
        c = check_green_bound(poly_ring(2), lf(0, 0), 1)
        assert (c.lhs, c.rhs, c.holds) == (2, 1, False)

    def test_green_char_two(self):
        T, R = char2_quotient()
        rng = random.Random(1)
        for _ in range(10):
            assert not check_green_bound(R, sample_structured_form(T, rng)[0], 1).holds

    def test_iterated_examples(self):
        c = check_iterated_bound(poly_ring(3), [lf(1, 0, 0), lf(0, 1, 0)], 2)
        assert (c.lhs, c.rhs, c.holds) == (1, 1, True)
        c = check_iterated_bound(poly_ring(3), [], 2)
        assert (c.lhs, c.rhs, c.holds) == (6, 6, True)

    def test_iterated_quadric(self):
        rng = random.Random(3)
        R = GradedQuotient.from_generators([Polynomial.random_homogeneous(3, 2, GF65521, rng)], 3, GF65521)
        forms = [sample_linear_form(3, GF65521, rng) for _ in range(2)]
        c = check_iterated_bound(R, forms, 2)
        assert (c.lhs, c.rhs, c.holds) == (0, 0, True)

    def test_gasharov_examples(self):
        rng = random.Random(2)
        f = Polynomial.random_homogeneous(2, 2, QQ, rng)
        c = check_gasharov_bound(poly_ring(2), f, 2)
        assert (c.lhs, c.rhs, c.holds) == (2, 2, True)
        z = Polynomial.zero(3, QQ)
        c = check_gasharov_bound(poly_ring(3), z, 2, degree=1)
        assert not c.holds and c.lhs == 6

    def test_gasharov_errors(self):
        x, y = (Polynomial.variable(i, 2, QQ) for i in range(2))
        with pytest.raises(ValueError):
            check_gasharov_bound(poly_ring(2), x * x + y, 2)
        with pytest.raises(ValueError):
            check_gasharov_bound(poly_ring(2), Polynomial.zero(2, QQ), 2)

    def test_gasharov_linear_agrees_with_green(self):
        rng = random.Random(20)
        for _ in range(20):
            R = random_quotient(rng, GF65521, max_vars=4, max_gens=3, max_gen_degree=3)
            l = sample_linear_form(R.nvars, GF65521, rng)
            d = rng.randint(1, 3)
            g = check_green_bound(R, l, d)
            h = check_gasharov_bound(R, l.to_polynomial(), d)
            assert (g.lhs, g.rhs, g.holds) == (h.lhs, h.rhs, h.holds)

    def test_gasharov_random_forms(self):
        rng = random.Random(21)
        for _ in range(10):
            R = random_quotient(rng, GF65521, max_vars=3, max_gens=2, max_gen_degree=2)
            f = Polynomial.random_homogeneous(R.nvars, rng.randint(1, 3), GF65521, rng)
            assert check_gasharov_bound(R, f, rng.randint(1, 4)).holds

    def test_green_random(self):
        rng = random.Random(22)
        for _ in range(20):
            R = random_quotient(rng, GF65521)
            l = sample_linear_form(R.nvars, GF65521, rng)
            for d in range(1, 5):
                assert check_green_bound(R, l, d).holds

    def test_bound_json(self):
        assert check_green_bound(poly_ring(2), lf(1, 0), 1).to_json() == {"lhs": 1, "rhs": 1, "holds": True}


class TestOrderIndependence:
    def test_examples(self):
        assert check_order_independence(poly_ring(2), [lf(1, 0), lf(0, 1)], 1)
        assert check_order_independence(poly_ring(3), [lf(1, 2, 3)], 3)

    def test_repeated_forms_is_deterministic(self):
        forms = [lf(1, 0, 0), lf(1, 0, 0), lf(0, 1, 0)]
        a = check_order_independence(poly_ring(3), forms, 2)
        assert isinstance(a, bool)
        assert a == check_order_independence(poly_ring(3), forms, 2)

    def test_general_forms(self):
        rng = random.Random(3)
        R = random_quotient(rng, GF65521, min_vars=2, max_vars=3, max_gens=1, max_gen_degree=2)
        forms = [sample_linear_form(R.nvars, GF65521, rng) for _ in range(R.nvars + 1)]
        assert check_order_independence(R, forms, 2)

    def test_detects_dependence(self):
        # in K[x,y] the ladder of (x, x) differs from that of (x, y) at word "s", so
        # a tuple mixing a repeated form with a new one is order dependent
        forms = [lf(1, 0), lf(1, 0), lf(0, 1)]
        assert not check_order_independence(poly_ring(2), forms, 2)

    def test_empty(self):
        with pytest.raises(ValueError):
            check_order_independence(poly_ring(2), [], 1)
