import math

import pytest
from hypothesis import given, settings, strategies as st

from invk.catalog import make
from invk.core import (
    EvalPoint,
    affine_transform,
    evaluate,
    frac_compose,
    from_fourier,
    from_tail_series,
    is_lattice,
    linear_combination,
    reflect,
    step_difference,
    x_derivative,
)
from invk.errors import ConvergenceError, RejectedInputError
from invk.verify import check_invariance

from conftest import SMALL_GRID, scale_sum


class TestEvalPoint:
    def test_positive_y_required(self):
        with pytest.raises(RejectedInputError):
            EvalPoint(1.0, 0.0)
        with pytest.raises(RejectedInputError):
            EvalPoint(1.0, -2.0)
        with pytest.raises(RejectedInputError):
            EvalPoint(math.nan, 1.0)

    def test_evaluate_enforces_domain(self):
        f = make("E13", s=2.0)
        with pytest.raises(RejectedInputError):
            evaluate(f, EvalPoint(-1.0, 1.0))
        assert evaluate(f, EvalPoint(1.0, 1.0)) == pytest.approx(math.pi ** 2 / 6, abs=1e-10)

    def test_descriptor_immutable(self):
        f = make("E5", a=2.0)
        with pytest.raises(Exception):
            f.name = "other"
        with pytest.raises(Exception):
            f.params["a"] = 3.0


class TestLatticeDetection:
    def test_binary_exact_ratios(self):
        assert is_lattice(3.0 * 0.25, 0.25)
        assert is_lattice(-8.0, 2.0)
        assert not is_lattice(0.2500001, 0.25)

    def test_relative_rule_at_large_ratio(self):
        y = 1.0
        x = 1e6 * y * (1.0 + 1e-12)  # within 1e-9 relative of the lattice
        assert is_lattice(x, y)


class TestAffineTransform:
    def test_scaled_reciprocal(self):
        F = affine_transform(make("E1"), 2.0, 0.0, 3.0)
        assert F.value(1.0, 1.0) == pytest.approx(2.0 / 3.0, abs=1e-15)

    def test_shifted_floor_identity_sum(self):
        F = affine_transform(make("E3a"), 1.0, 0.5, 1.0)
        assert F.value(0.0, 2.0) + F.value(1.0, 2.0) == pytest.approx(F.value(0.0, 1.0), abs=0)

    def test_identity_transform(self):
        f = make("E9", r=0.5)
        F = affine_transform(f, 1.0, 0.0, 1.0)
        for x, y in ((0.0, 1.0), (-1.3, 0.7), (2.4, 3.1)):
            assert F.value(x, y) == pytest.approx(f.value(x, y), abs=0)

    def test_rejects_nonpositive_scale(self):
        with pytest.raises(RejectedInputError):
            affine_transform(make("E1"), 1.0, 0.0, 0.0)

    @settings(max_examples=40, deadline=None)
    @given(
        a=st.floats(-3.0, 3.0),
        b=st.floats(-2.0, 2.0),
        c=st.floats(0.1, 4.0),
        n=st.integers(1, 6),
    )
    def test_preserves_invariance(self, a, b, c, n):
        F = affine_transform(make("E2", m=2), a, b, c)
        x, y = 0.37, 1.21
        assert scale_sum(F, x, y, n) == pytest.approx(F.value(x, y), abs=1e-9 * (1 + abs(a)))


class TestXDerivative:
    def test_constant_in_x(self):
        d = x_derivative(make("E1"))
        assert d.value(0.3, 2.0) == 0.0

    def test_bernoulli_degree_drop(self):
        d = x_derivative(make("E2", m=2))
        assert d.value(0.3, 1.0) == pytest.approx(2 * (0.3 - 0.5), abs=1e-12)

    def test_log_quotient_chain_rule(self):
        d = x_derivative(make("E7", r=0.5))
        e8 = make("E8", r=0.5)
        assert d.value(0.2, 1.0) == pytest.approx(4 * math.pi * e8.value(0.2, 1.0), abs=1e-8)

    def test_fd_fallback_flagged(self):
        d = x_derivative(make("E10"))
        assert "fd-dx" in d.flags
        assert d.value(0.3, 1.0) == pytest.approx(math.pi / math.tan(0.3 * math.pi), abs=1e-6)


class TestReflect:
    def test_negates_odd_entry(self):
        f = make("E2", m=1)
        R = reflect(f)
        for x, y in ((0.3, 1.0), (-1.7, 2.5)):
            assert R.value(x, y) == pytest.approx(-f.value(x, y), abs=1e-14)

    def test_fixes_x_free_entry(self):
        f = make("E1")
        R = reflect(f)
        assert R.value(0.9, 0.4) == f.value(0.9, 0.4)

    def test_floor_reflection_sum(self):
        R = reflect(make("E3a"))
        assert R.value(0.3, 2.0) + R.value(1.3, 2.0) == pytest.approx(R.value(0.3, 1.0), abs=0)


class TestFracCompose:
    def test_wraps_linear_entry(self):
        F = frac_compose(make("E2", m=1), 0.0, "plus")
        assert F.value(1.7, 1.0) == pytest.approx(0.2, abs=1e-14)

    def test_x_free_entry_unchanged(self):
        F = frac_compose(make("E1"), 0.37, "plus")
        assert F.value(5.3, 2.0) == pytest.approx(0.5, abs=0)

    def test_minus_is_reflected_plus(self):
        f = make("E2", m=1)
        minus = frac_compose(f, 0.37, "minus")
        plus_reflected = reflect(frac_compose(f, 0.37, "plus"))
        for x, y in ((0.4, 1.3), (-0.9, 0.8)):
            assert minus.value(x, y) == pytest.approx(plus_reflected.value(x, y), abs=1e-12)

    def test_rejects_unknown_sign(self):
        with pytest.raises(RejectedInputError):
            frac_compose(make("E1"), 0.0, "both")


class TestLinearCombination:
    def test_cancellation(self):
        f = make("E1")
        z = linear_combination([(1.0, f), (-1.0, f)])
        assert z.value(0.4, 2.0) == 0.0

    def test_scaling(self):
        g = linear_combination([(2.0, make("E1"))])
        assert g.value(0.0, 0.5) == pytest.approx(4.0, abs=0)

    def test_floor_plus_wrapped_fraction_is_linear(self):
        parts = linear_combination(
            [(1.0, make("E3a")), (1.0, frac_compose(make("E2", m=1), 0.0, "plus"))]
        )
        whole = make("E2", m=1)
        for x, y in ((1.7, 1.0), (-0.4, 0.9), (3.3, 2.2)):
            assert parts.value(x, y) == pytest.approx(whole.value(x, y), abs=1e-12)

    def test_rejects_empty(self):
        with pytest.raises(RejectedInputError):
            linear_combination([])


class TestStepDifference:
    def test_linear_entry(self):
        d = step_difference(make("E2", m=1))
        for x, y in ((0.3, 1.0), (-2.4, 0.6)):
            assert d(x, y) == pytest.approx(1.0, abs=1e-13)

    def test_x_free_entry(self):
        assert step_difference(make("E1"))(0.4, 1.7) == 0.0

    def test_floor_entry(self):
        assert step_difference(make("E3a"))(0.3, 1.0) == 1.0

    @pytest.mark.parametrize("eid,params", [("E3a", {}), ("E5", {"a": 2.0}), ("E10", {})])
    def test_scale_free(self, eid, params):
        f = make(eid, **params)
        d = step_difference(f)
        base = d(0.37, 0.8)
        for n in range(1, 9):
            assert d(0.37, 0.8 * n) == pytest.approx(base, abs=1e-10 * (1 + abs(base)))


class TestFourierConstructor:
    def test_geometric_closed_form(self):
        f = from_fourier(lambda t: 0.5 ** t, "cos", 1e-10)
        assert f.value(0.0, 1.0) == pytest.approx(1.0, abs=1e-9)

    def test_sine_series_matches_catalog_quotient(self):
        f = from_fourier(lambda t: 0.5 ** t, "sin", 1e-10)
        e8 = make("E8", r=0.5)
        assert f.value(0.2, 1.0) == pytest.approx(e8.value(0.2, 1.0), abs=1e-9)

    def test_zero_coefficients(self):
        f = from_fourier(lambda t: 0.0, "cos", 1e-10)
        assert f.value(0.3, 2.0) == 0.0

    def test_nonconvergence_raises(self):
        f = from_fourier(lambda t: t ** -1.05, "cos", 1e-10)
        with pytest.raises(ConvergenceError):
            f.value(0.3, 1.0)

    def test_rejects_bad_mode(self):
        with pytest.raises(RejectedInputError):
            from_fourier(lambda t: 0.5 ** t, "tan", 1e-10)


class TestTailSeriesConstructor:
    def test_exponential_closed_form(self):
        f = from_tail_series(lambda t: math.exp(-t), 1e-10)
        assert f.value(1.0, 1.0) == pytest.approx(1.0 / (math.e - 1.0), abs=1e-9)

    def test_inverse_square_matches_zeta(self):
        f = from_tail_series(lambda t: t ** -2.0, 1e-6)
        assert f.value(0.5, 1.0) == pytest.approx(math.pi ** 2 / 2, abs=2e-6)

    def test_inverse_square_tight_tolerance_unreachable(self):
        f = from_tail_series(lambda t: t ** -2.0, 1e-9)
        with pytest.raises(ConvergenceError):
            f.value(0.5, 1.0)

    def test_zero_function(self):
        f = from_tail_series(lambda t: 0.0, 1e-10)
        assert f.value(0.3, 0.7) == 0.0


class TestCombinatorsStayInvariant:
    """Every constructor output re-enters the defining-identity suite."""

    @pytest.mark.parametrize(
        "build",
        [
            lambda: affine_transform(make("E5", a=2.0), 1.5, 0.25, 2.0),
            lambda: reflect(make("E10")),
            lambda: frac_compose(make("E2", m=2), 0.3, "plus"),
            lambda: frac_compose(make("E2", m=2), 0.3, "minus"),
            lambda: linear_combination([(0.5, make("E1")), (2.0, make("E2", m=1))]),
            lambda: x_derivative(make("E7", r=2.0)),
            lambda: from_fourier(lambda t: 0.5 ** t, "cos", 1e-9),
            lambda: from_fourier(lambda t: 0.25 ** t, "sin", 1e-9),
        ],
    )
    def test_invariance(self, build):
        rep = check_invariance(build(), SMALL_GRID, 1e-7)
        assert rep.passed, (rep.function, rep.max_abs_error, rep.worst_witness)

    def test_tail_series_invariance(self):
        # positive-x window: at x = -3y the terms reach ~1e10 and an absolute
        # error measurement would only see float rounding
        from dataclasses import replace

        f = from_tail_series(lambda t: math.exp(-2.0 * t), 1e-9)
        grid = replace(SMALL_GRID, x_range=(0.05, 3.0))
        rep = check_invariance(f, grid, 1e-7)
        assert rep.passed, (rep.max_abs_error, rep.worst_witness)
