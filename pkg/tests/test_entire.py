import math
import random

import numpy as np
import pytest
from numpy.polynomial import polynomial as npoly
from hypothesis import given
from hypothesis import strategies as st

from hyperpoly.entire import (
    PRODUCT_KINDS,
    TrigPoly,
    abs_convergence_report,
    default_window,
    funny_extrema,
    funny_order,
    hadamard_reconstruct,
    partial_product,
    product_factors,
    scan_extrema,
    trig_derivative,
)
from hyperpoly.errors import WindowTooCoarse
from hyperpoly.poly import Poly, is_squarefree

from corpus import random_poly


class TestTrigDerivative:
    def test_cosine(self):
        d = trig_derivative(TrigPoly([1.0], [0.0], 3.0))
        assert np.allclose(d.p * d.norm, [0.0]) and np.allclose(d.q * d.norm, [-3.0])

    def test_cosine_twice(self):
        d = trig_derivative(trig_derivative(TrigPoly([1.0], [0.0], 3.0)))
        assert np.allclose(d.q, [0.0])
        assert d.p[0] < 0  # proportional to -a^2 cos

    def test_family_unnormalised(self):
        d = trig_derivative(TrigPoly.family(1.0), normalize=False)
        assert np.allclose(d.p, [0.0, 2.0]) and np.allclose(d.q, [-0.25, 0.0, -1.0])

    @given(st.integers(0, 10**6))
    def test_against_finite_differences(self, seed):
        rng = np.random.default_rng(seed)
        T = TrigPoly(rng.uniform(-1, 1, rng.integers(1, 6)), rng.uniform(-1, 1, rng.integers(1, 6)),
                     float(rng.uniform(0.1, 8)))
        d = trig_derivative(T)
        xs = rng.uniform(-5, 5, 100)
        exact = d(xs) * d.norm

        def fd(h):
            return (T(xs + h) - T(xs - h)) / (2 * h)

        # truncation constant fitted from two coarse step sizes
        h1, h2 = 1e-2, 5e-3
        C = 2 * max(np.max(np.abs(fd(h1) - exact)) / h1**2, np.max(np.abs(fd(h2) - exact)) / h2**2)
        h = 1e-5
        # evaluation error scales with the summed term magnitudes, not |T|
        size = npoly.polyval(np.abs(xs) + h, np.abs(T.p)) + npoly.polyval(np.abs(xs) + h, np.abs(T.q))
        roundoff = 10 * (len(T.p) + len(T.q)) * np.finfo(float).eps * size / h
        assert np.all(np.abs(fd(h) - exact) <= C * h**2 + roundoff)


class TestScan:
    def test_cosine(self):
        ext = scan_extrema(TrigPoly([1.0], [0.0], 1.0), (-4, 4))
        kinds = [(round(e.x, 6), e.kind) for e in ext]
        assert kinds == [(round(-math.pi, 6), "local_min"), (0.0, "local_max"),
                         (round(math.pi, 6), "local_min")]
        assert all(abs(abs(e.value) - 1) < 1e-12 for e in ext)

    def test_small_frequency_has_positive_minimum(self):
        ext = scan_extrema(TrigPoly.family(1.0), (-2, 2))
        (centre,) = [e for e in ext if abs(e.x) < 1e-8]
        assert centre.kind == "local_min" and abs(centre.value - 0.25) < 1e-12
        assert centre in funny_extrema(ext)

    def test_large_frequency_has_maximum_at_origin(self):
        ext = scan_extrema(TrigPoly.family(4.0), (-1, 1))
        (centre,) = [e for e in ext if abs(e.x) < 1e-8]
        assert centre.kind == "local_max"

    def test_coarse_grid_detected(self):
        with pytest.raises(WindowTooCoarse):
            scan_extrema(TrigPoly([1.0], [0.0], 300.0), (-50, 50), samples=256)

    def test_sample_floor(self):
        with pytest.raises(ValueError):
            scan_extrema(TrigPoly.family(1.0), (-1, 1), samples=10)


class TestFunnyOrder:
    def test_small_a_is_immediate(self):
        assert funny_order(1.0) == 0

    def test_a_four_needs_derivatives(self):
        assert funny_order(4.0, samples=2**14) >= 1

    def test_nondecreasing_and_bounded(self):
        orders = [funny_order(float(a)) for a in range(1, 7)]
        assert all(d is not None and d <= 64 for d in orders)
        assert orders == sorted(orders)

    def test_window_covers_sixteen_gaps(self):
        lo, hi = default_window(2.0)
        assert hi - lo >= 16 * math.pi / 2.0

    def test_parameter_checks(self):
        with pytest.raises(ValueError):
            funny_order(0.0)
        with pytest.raises(ValueError):
            funny_order(1.0, max_order=65)


class TestProducts:
    @pytest.mark.parametrize("kind", PRODUCT_KINDS)
    def test_zero_argument(self, kind):
        assert partial_product(kind, 0.0, 5000).value == 1.0
        assert partial_product(kind, 0.0, 10).value == 1.0

    def test_quadratic_quarter(self):
        assert abs(partial_product("quadratic", 0.25, 10**4).value - 2 / math.pi) < 1e-3

    def test_linear_half_decays(self):
        assert abs(partial_product("linear", 0.5, 10**4).value) < 0.01

    def test_vanishing_factor(self):
        p = partial_product("linear", 3.0, 10)
        assert p.value == 0.0 and p.zero_at == 3

    @given(st.sampled_from(PRODUCT_KINDS), st.floats(-0.9, 0.9), st.integers(1001, 5000))
    def test_log_matches_sum_of_logs(self, kind, z, N):
        j = np.arange(1, N + 1, dtype=float)
        factors = product_factors(kind, z, j)
        if np.all(factors > 0):
            expected = math.fsum(np.log(factors))
            got = math.log(partial_product(kind, z, N).value)
            assert abs(got - expected) <= 1e-9 * max(1.0, abs(expected))

    def test_sine_product_converges_from_above(self):
        Ns = [2**k for k in range(4, 16)]
        vals = [partial_product("sine", 0.5, N).value for N in Ns]
        errs = [v - 2 / math.pi for v in vals]
        assert all(e > 0 for e in errs)
        assert all(a > b for a, b in zip(vals, vals[1:]))
        # tail bound z^2 sum_{j>N} 1/j^2 ~ z^2 / N, so doubling N halves the gap
        ratios = [a / b for a, b in zip(errs, errs[1:])]
        assert all(1.8 < r < 2.2 for r in ratios)


class TestAbsConvergence:
    def test_quadratic_bounded(self):
        r = abs_convergence_report("quadratic", 1.0, 10**4)
        assert r.verdict == "convergent" and r.partial_abs_sum < math.pi**2 / 6

    def test_linear_logarithmic(self):
        r = abs_convergence_report("linear", 1.0, 10**4)
        assert r.verdict == "divergent" and r.growth_class == "logarithmic"
        s1, s2, s3 = r.partial_abs_sums
        assert abs((s3 - s2) - math.log(2)) < 1e-3

    def test_weierstrass_decay_exponent(self):
        r = abs_convergence_report("weierstrass", 1.0, 10**4)
        assert r.verdict == "convergent" and abs(r.decay_exponent - 2) < 0.05

    def test_minimum_terms(self):
        with pytest.raises(ValueError):
            abs_convergence_report("linear", 1.0, 10)


class TestHadamard:
    def test_two_factors(self):
        r = hadamard_reconstruct(Poly([-1, 0, 1]))
        assert r.exact and r.max_rel_error == 0.0 and r.leading == -1

    def test_root_at_origin(self):
        r = hadamard_reconstruct(Poly([0, -1, 0, 1]))
        assert r.zero_multiplicity == 1 and r.leading == -1 and r.max_rel_error == 0.0

    def test_supplied_rational_roots(self):
        f = Poly.from_roots([1, -2, 3], leading=5)
        r = hadamard_reconstruct(f, roots=[1, -2, 3])
        assert r.exact and r.max_rel_error == 0.0

    def test_random_degree_six(self):
        rng = random.Random(6)
        done = 0
        while done < 20:
            f = random_poly(rng, 6)
            if f.coeffs[0] == 0 or not is_squarefree(f):
                continue
            assert hadamard_reconstruct(f).max_rel_error < 1e-8
            done += 1
