import json
import math
from dataclasses import replace

import pytest

from invk.catalog import make
from invk.covering import parse_system
from invk.errors import RejectedInputError
from invk.quadrature import integrate
from invk.special import bernoulli_poly
from invk.verify import (
    DEFAULT_GRID,
    GridSpec,
    check_bernoulli_convolution,
    check_bernoulli_integral_identity,
    check_covering_certificates,
    check_exchange,
    check_integral_limit,
    check_invariance,
    check_known_integrals,
    check_parity,
    check_product_integral,
    check_step_limit,
    check_y_derivative_identities,
    check_zeta_convolution,
    golden_integral,
    zeta_power_kernel,
)

from conftest import SMALL_GRID, scale_sum

PROBE_GRID = replace(SMALL_GRID, samples=9)


class TestGridSpec:
    def test_validation(self):
        with pytest.raises(RejectedInputError):
            GridSpec(samples=0)
        with pytest.raises(RejectedInputError):
            GridSpec(n_max=0)
        with pytest.raises(RejectedInputError):
            GridSpec(x_range=(2.0, 2.0))
        with pytest.raises(RejectedInputError):
            GridSpec(y_range=(0.0, 1.0))
        with pytest.raises(RejectedInputError):
            GridSpec(eps_sing=0.0)


class TestInvariance:
    def test_floor_single_probe_by_hand(self):
        f = make("E3a")
        assert scale_sum(f, 1.0, 0.7, 3) == 1.0 == f.value(1.0, 0.7)

    def test_reciprocal_near_machine(self):
        rep = check_invariance(make("E1"), SMALL_GRID, 1e-8)
        assert rep.passed and rep.max_abs_error <= 1e-15

    def test_cubic_bernoulli_tight(self):
        rep = check_invariance(make("E2", m=3), DEFAULT_GRID, 1e-9)
        assert rep.passed

    def test_report_shape(self):
        rep = check_invariance(make("E5", a=2.0), SMALL_GRID, 1e-8)
        d = rep.to_json_dict()
        assert set(d) == {
            "property", "function", "params", "samples", "max_abs_error",
            "tolerance", "pass", "worst_witness", "flags",
        }
        assert set(d["worst_witness"]) == {"x", "y", "n", "lhs", "rhs"}
        assert d["pass"] is True and d["samples"] == SMALL_GRID.samples
        json.dumps(d)  # serializable

    def test_deterministic_bytes(self):
        a = check_invariance(make("E10"), SMALL_GRID, 1e-8).to_json_dict()
        b = check_invariance(make("E10"), SMALL_GRID, 1e-8).to_json_dict()
        assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)

    def test_truncation_flag_for_series_entries(self):
        # flagged once n_max * series_tolerance exceeds the requested tol
        rep = check_invariance(make("E13", s=-2.0), SMALL_GRID, 1e-10)
        assert "truncation-dominated" in rep.flags
        rep = check_invariance(make("E13", s=-2.0), SMALL_GRID, 1e-6)
        assert "truncation-dominated" not in rep.flags


class TestExchange:
    def test_floor_by_hand(self):
        f = make("E3a")
        lhs = math.fsum(f.value(0.4 + r * 2 * 0.5, 3 * 0.5) for r in range(3))
        rhs = math.fsum(f.value(0.4 + r * 3 * 0.5, 2 * 0.5) for r in range(2))
        assert lhs == rhs == 1.0

    def test_equal_orders_are_identical(self):
        rep = check_exchange(make("E5", a=2.0), 3, 3, SMALL_GRID, 1e-12)
        assert rep.passed and rep.max_abs_error == 0.0

    @pytest.mark.parametrize("m,n", [(1, 2), (2, 3), (4, 5)])
    def test_entries(self, m, n):
        for eid, params in (("E3a", {}), ("E5", {"a": 2.0}), ("E9", {"r": 0.5})):
            rep = check_exchange(make(eid, **params), m, n, SMALL_GRID, 1e-8)
            assert rep.passed, (eid, m, n, rep.max_abs_error)


class TestLimits:
    def test_integral_limit_reciprocal_both_sides_one(self):
        rep = check_integral_limit(make("E1"), PROBE_GRID, 1e-6)
        assert rep.passed
        assert rep.worst_witness["lhs"] == pytest.approx(1.0, abs=1e-10)

    def test_integral_limit_floor(self):
        quad = integrate(lambda t: make("E3a").value(t, 1.0), 0.7, 1.7,
                         tol=1e-12, interior_singularities=(1.0,))
        assert quad.value == pytest.approx(0.7, abs=1e-12)
        rep = check_integral_limit(make("E3a"), PROBE_GRID, 1e-6)
        assert rep.passed

    def test_step_limit_linear_exact(self):
        rep = check_step_limit(make("E2", m=1), PROBE_GRID, 1e-8)
        assert rep.passed

    def test_step_limit_floor(self):
        rep = check_step_limit(make("E3a"), PROBE_GRID, 1e-6)
        assert rep.passed


class TestYDerivative:
    def test_scaled_quadratic_by_hand(self):
        # f = y B_2(x/y): int_1^{-1} (-t^2/4 + 1/6) dt = -1/6 = f(1, 2)
        f = make("E2", m=2)
        got = integrate(lambda t: f.dy(t, 2.0), 1.0, -1.0, tol=1e-12).value
        assert got == pytest.approx(f.value(1.0, 2.0), abs=1e-11)
        assert f.value(1.0, 2.0) == pytest.approx(-1.0 / 6.0, abs=1e-14)

    @pytest.mark.parametrize("eid,params", [
        ("E1", {}), ("E2", {"m": 2}), ("E5", {"a": 2.0}), ("E9", {"r": 0.5}),
    ])
    def test_analytic_and_fd_modes(self, eid, params):
        f = make(eid, **params)
        rep = check_y_derivative_identities(f, PROBE_GRID, 1e-6)
        assert rep.passed and "fd-fallback" not in rep.flags
        rep_fd = check_y_derivative_identities(f, PROBE_GRID, 1e-4, use_fd=True)
        assert rep_fd.passed and "fd-fallback" in rep_fd.flags


class TestParity:
    def test_even_kernel(self):
        rep = check_parity(make("E9", r=0.5), "even", PROBE_GRID, 1e-7)
        assert rep.passed

    def test_even_half_period_integral_value(self):
        got = integrate(lambda t: make("E9", r=0.5).value(t, 1.0), 0.0, 0.5, tol=1e-11).value
        assert got == pytest.approx(0.5, abs=1e-9)

    def test_odd_entries(self):
        for eid, params in (("E2", {"m": 1}), ("E8", {"r": 0.5})):
            rep = check_parity(make(eid, **params), "odd", PROBE_GRID, 1e-7)
            assert rep.passed, (eid, rep.max_abs_error)

    def test_rejects_unknown_parity(self):
        with pytest.raises(RejectedInputError):
            check_parity(make("E1"), "sideways", PROBE_GRID)


class TestConvolutionChecks:
    def test_product_integral_reciprocal(self):
        rep = check_product_integral(make("E1"), make("E1"), (1.0,), 1e-9)
        assert rep.passed
        assert rep.worst_witness["lhs"] == pytest.approx(1.0, abs=1e-9)

    def test_product_integral_exponential(self):
        rep = check_product_integral(make("E5", a=2.0), make("E1"), (1.0,), 1e-7)
        assert rep.passed
        assert rep.worst_witness["rhs"] == pytest.approx(1.0 / math.log(2.0), abs=1e-9)

    def test_bernoulli_convolution_orders(self):
        for m, n in ((1, 1), (2, 2), (1, 3)):
            rep = check_bernoulli_convolution(m, n, (1.0, 0.7), 7, 1e-8)
            assert rep.passed, (m, n, rep.max_abs_error)

    def test_bernoulli_integral_identity_vanishing_odd_order(self):
        # at x = 0 the order-3 value is B_3(0) = 0
        rep = check_bernoulli_integral_identity(1, 2, 5, 1e-8)
        assert rep.passed
        assert bernoulli_poly(3, 0.0) == 0.0

    def test_zeta_kernel_matches_bernoulli_for_integer_order(self):
        fa = zeta_power_kernel(2.0)
        for u in (0.3, 0.7):
            want = -bernoulli_poly(2, u) / 2.0
            assert fa.value(u, 1.0) == pytest.approx(want, abs=1e-9)

    def test_zeta_convolution_integer_orders(self):
        rep = check_zeta_convolution(2.0, 2.0, 1.0, tol=1e-8)
        assert rep.passed
        rep = check_zeta_convolution(2.0, 3.0, 1.0, tol=1e-8)
        assert rep.passed

    def test_zeta_convolution_fractional_orders(self):
        rep = check_zeta_convolution(1.5, 2.5, 1.0, tol=1e-5)
        assert rep.passed

    def test_zeta_kernel_rejects_small_order(self):
        with pytest.raises(RejectedInputError):
            zeta_power_kernel(1.0)


class TestGoldenIntegrals:
    def test_euler(self):
        value, expected = golden_integral("euler")
        assert expected == pytest.approx(-math.pi / 2 * math.log(2.0), abs=0)
        assert value == pytest.approx(expected, abs=1e-8)

    def test_poisson_both_regimes(self):
        value, expected = golden_integral("poisson", r=2.0)
        assert expected == pytest.approx(2 * math.pi * math.log(2.0), abs=0)
        assert value == pytest.approx(expected, abs=1e-7)
        value, expected = golden_integral("poisson", r=0.5)
        assert expected == 0.0 and value == pytest.approx(0.0, abs=1e-7)

    @pytest.mark.parametrize("a", [1.0, 2.0, 0.5])
    def test_raabe(self, a):
        value, expected = golden_integral("raabe", a=a)
        assert expected == pytest.approx(a * (math.log(a) - 1.0) + 0.5 * math.log(2 * math.pi), abs=0)
        assert value == pytest.approx(expected, abs=1e-8)

    def test_reference_decimals(self):
        assert golden_integral("euler")[1] == pytest.approx(-1.0887930, abs=5e-8)
        assert golden_integral("poisson", r=2.0)[1] == pytest.approx(4.3551722, abs=5e-8)
        assert golden_integral("raabe", a=1.0)[1] == pytest.approx(-0.0810615, abs=5e-8)
        assert golden_integral("raabe", a=2.0)[1] == pytest.approx(0.3052329, abs=5e-8)

    def test_rejects_unknown(self):
        with pytest.raises(RejectedInputError):
            golden_integral("gauss")
        with pytest.raises(RejectedInputError):
            golden_integral("poisson", r=1.0)

    def test_aggregate_report(self):
        rep = check_known_integrals(1e-7)
        assert rep.passed and rep.samples == 6


class TestCoveringCertificates:
    def test_seeded_certificates(self):
        sys_ = parse_system("0/2,1/4,3/4")
        for eid, params in (("E2", {"m": 2}), ("E10", {}), ("E11", {})):
            rep = check_covering_certificates(sys_, make(eid, **params), PROBE_GRID, 1e-8)
            assert rep.passed, (eid, rep.max_abs_error)

    def test_rejected_system_refused(self):
        with pytest.raises(RejectedInputError):
            check_covering_certificates(parse_system("0/2,0/3"), make("E1"), PROBE_GRID)
