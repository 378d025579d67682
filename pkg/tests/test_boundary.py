import cmath
import math

import numpy as np
import pytest

from korder import (
    DomainError,
    Order,
    SingularInputError,
    asymptote,
    boundary_point,
    boundary_uv,
    contains,
    h_alpha,
    k_alpha,
    sample_boundary,
    turning_angle,
    v_half,
)

NONHALF_ALPHAS = [0.1, 0.2, 0.3, 0.4, 0.6, 0.7, 0.8, 0.9]


class TestBoundaryUV:
    def test_matches_complex_evaluation(self):
        # explicit real parametrization vs h at e^{i theta}, 720 angles
        thetas = [(j + 0.5) * math.pi / 720 for j in range(720)]
        for a in NONHALF_ALPHAS:
            o = Order(a)
            worst = 0.0
            for th in thetas:
                u, v = boundary_uv(o, th)
                w = h_alpha(o, cmath.exp(1j * th))
                worst = max(worst, abs(complex(u, v) - w))
            assert worst < 1e-10

    def test_rejects_gamma_zero(self):
        with pytest.raises(DomainError):
            boundary_uv(Order(0.5), 1.0)

    def test_rejects_theta_zero(self):
        with pytest.raises(SingularInputError):
            boundary_uv(Order(0.3), 0.0)

    def test_reflection_symmetry(self):
        for a in (0.2, 0.7):
            o = Order(a)
            for th in (0.3, 1.1, 2.9):
                u1, v1 = boundary_uv(o, th)
                u2, v2 = boundary_uv(o, 2 * math.pi - th)
                assert abs(u1 - u2) < 1e-12
                assert abs(v1 + v2) < 1e-12


class TestBoundaryPoint:
    def test_real_at_pi(self):
        for a in (0.1, 0.5, 0.9):
            o = Order(a)
            s = boundary_point(o, math.pi)
            assert abs(s.point.imag) < 1e-14
            assert s.point.real == pytest.approx(-k_alpha(o, -1.0).real, abs=1e-12)

    def test_upper_half_nonnegative_v(self):
        for a in (0.25, 0.5, 0.75):
            o = Order(a)
            for th in (1e-4, 0.5, 1.5, 3.0, math.pi):
                assert boundary_point(o, th).point.imag >= -1e-15

    def test_point_matches_h(self):
        for a in (0.3, 0.5, 0.8):
            o = Order(a)
            for th in (0.2, 1.0, 2.5):
                s = boundary_point(o, th)
                assert abs(s.point - h_alpha(o, cmath.exp(1j * th))) < 1e-10

    def test_ratio_limit_quarter(self):
        # v/u tends to tan(pi (1 - gamma... ) /..) = cot(pi/4) = 1 at alpha = 1/4
        s = boundary_point(Order(0.25), 1e-8)
        assert s.point.imag / s.point.real == pytest.approx(1.0, abs=1e-3)

    def test_theta_zero_closes_only_above_half(self):
        o = Order(0.75)
        s = boundary_point(o, 0.0)
        assert s.point == pytest.approx(1 / o.gamma, abs=1e-15)
        for a in (0.2, 0.5):
            with pytest.raises(SingularInputError):
                boundary_point(Order(a), 0.0)


class TestVHalf:
    def test_zero_at_pi(self):
        assert v_half(math.pi) == pytest.approx(0.0, abs=1e-15)

    def test_limit_at_zero(self):
        assert v_half(1e-9) == pytest.approx(math.pi / 2, abs=1e-7)

    def test_quarter_turn_value(self):
        assert v_half(math.pi / 2) == pytest.approx(math.log(math.sqrt(2.0)), abs=1e-14)

    def test_matches_imag_part(self):
        o = Order(0.5)
        for th in (0.1, 0.7, 1.9, 3.0):
            assert abs(v_half(th) - h_alpha(o, cmath.exp(1j * th)).imag) < 1e-12

    def test_bounded_by_center_limit(self):
        # the sup is approached at theta -> 0+ and never exceeded
        for j in range(1, 2000):
            th = math.pi * j / 2000
            assert v_half(th) <= math.pi / 2 + 1e-12


class TestTurningAngle:
    def test_pi_maps_to_pi(self):
        for a in (0.1, 0.5, 0.9):
            assert turning_angle(Order(a), math.pi) == pytest.approx(math.pi, abs=1e-12)

    def test_strictly_increasing(self):
        for a in (0.3, 0.5, 0.7):
            o = Order(a)
            prev = -math.inf
            for j in range(1, 401):
                cur = turning_angle(o, math.pi * j / 400)
                assert cur > prev - 1e-12
                prev = cur

    def test_range(self):
        for a in (0.2, 0.5, 0.8):
            o = Order(a)
            lo = (1 - a) * math.pi
            for th in (1e-6, 0.5, 2.0, math.pi):
                val = turning_angle(o, th)
                assert lo < val <= math.pi + 1e-12

    def test_left_endpoint(self):
        # convergence toward (1-alpha) pi is like theta^min(beta,1), so the
        # probe angle must shrink as alpha grows
        for a in (0.25, 0.5, 0.75, 0.9):
            o = Order(a)
            probe = 10.0 ** (-8.0 / min(o.beta, 1.0))
            assert abs(turning_angle(o, probe) - (1 - a) * math.pi) < 2e-7

    def test_rejects_bad_theta(self):
        with pytest.raises(DomainError):
            turning_angle(Order(0.3), 0.0)
        with pytest.raises(DomainError):
            turning_angle(Order(0.3), 3.2)


class TestAsymptote:
    def test_quarter_values(self):
        spec = asymptote(Order(0.25))
        assert spec.slope == pytest.approx(1.0, abs=1e-12)
        assert spec.anchor == pytest.approx(-2.0, abs=1e-12)

    def test_slope_vanishes_toward_half(self):
        assert asymptote(Order(0.4999)).slope == pytest.approx(0.0, abs=1e-3)

    def test_sign_invariants(self):
        for a in (0.1, 0.25, 0.45):
            spec = asymptote(Order(a))
            assert spec.slope > 0
            assert spec.anchor < 0

    def test_domain(self):
        for a in (0.0, 0.5, 0.7):
            with pytest.raises(DomainError):
                asymptote(Order(a))

    def test_boundary_approaches_line(self):
        # distance decays like theta^(2 alpha): at 1e-4 the gap can exceed
        # 1e-2 for small alpha, at 1e-5 it is inside for all tested orders
        for a in (0.25, 0.3, 0.45):
            o = Order(a)
            spec = asymptote(o)
            scale = math.hypot(1.0, spec.slope)
            gaps = []
            for th in (1e-4, 1e-5):
                u, v = boundary_uv(o, th)
                gaps.append(abs(v - spec.slope * (u - spec.anchor)) / scale)
            assert gaps[1] < 1e-2
            assert gaps[1] < gaps[0]

    def test_sector_contains_samples(self):
        o = Order(0.25)
        spec = asymptote(o)
        for s in sample_boundary(o, 100, theta_min=1e-3):
            assert abs(s.point.imag) < spec.slope * (s.point.real - spec.anchor)


class TestSampleBoundary:
    def test_increasing_theta(self):
        samples = sample_boundary(Order(0.6), 3, theta_min=0.1)
        assert samples[0].theta < samples[1].theta < samples[2].theta
        assert samples[-1].theta == pytest.approx(math.pi, abs=1e-15)

    def test_count(self):
        assert len(sample_boundary(Order(0.3), 64, theta_min=1e-3)) == 64

    def test_half_height_bound(self):
        samples = sample_boundary(Order(0.5), 100, theta_min=1e-3)
        assert max(s.point.imag for s in samples) <= math.pi / 2

    def test_closed_curve_above_half(self):
        samples = sample_boundary(Order(0.75), 16, theta_min=0.0)
        assert samples[0].theta == 0.0
        assert samples[0].point.real == pytest.approx(2.0, abs=1e-12)

    def test_theta_zero_rejected_at_or_below_half(self):
        with pytest.raises(DomainError):
            sample_boundary(Order(0.5), 16, theta_min=0.0)

    def test_validation(self):
        with pytest.raises(DomainError):
            sample_boundary(Order(0.6), 1, theta_min=0.1)
        with pytest.raises(DomainError):
            sample_boundary(Order(0.6), 8, theta_min=2.0)


class TestContains:
    def test_center_inside(self):
        for a in (0.0, 0.25, 0.5, 0.75):
            assert contains(Order(a), 1 + 0j) == "inside"

    def test_left_of_leftmost_point(self):
        assert contains(Order(0.5), 0.5 + 0j) == "outside"

    def test_image_point_inside(self):
        o = Order(0.6)
        assert contains(o, h_alpha(o, 0.9)) == "inside"

    def test_half_plane_cases(self):
        o = Order(0.0)
        assert contains(o, 2 + 5j) == "inside"
        assert contains(o, 0.4 + 5j) == "outside"
        assert contains(o, 0.5 + 1j) == "boundary-band"

    def test_interior_images_inside(self):
        rng = np.random.default_rng(12345)
        zs = 0.99 * np.sqrt(rng.uniform(size=1000)) * np.exp(
            2j * np.pi * rng.uniform(size=1000)
        )
        for a in (0.2, 0.5, 0.8):
            o = Order(a)
            for z in zs[:333]:
                assert contains(o, h_alpha(o, complex(z))) == "inside"

    def test_pushed_out_samples_outside(self):
        for a in (0.25, 0.5, 0.75):
            o = Order(a)
            for s in sample_boundary(o, 40, theta_min=1e-2):
                w = s.point
                out = 1 + (w - 1) * (1 + 1e-3 / abs(w - 1))
                assert contains(o, out) == "outside"

    def test_boundary_band(self):
        o = Order(0.7)
        s = boundary_point(o, 1.3)
        assert contains(o, s.point) == "boundary-band"

    def test_strip_far_field_at_half(self):
        o = Order(0.5)
        assert contains(o, 50 + 1.0j) == "inside"
        assert contains(o, 50 + 1.6j) == "outside"

    def test_sector_far_field_below_half(self):
        o = Order(0.25)
        assert contains(o, 100 + 50j) == "inside"
        assert contains(o, 100 + 103j) == "outside"

    def test_closing_disk_above_half(self):
        o = Order(0.75)
        assert contains(o, 1.99 + 0j) == "inside"
        assert contains(o, 2.01 + 0j) == "outside"

    def test_conjugate_symmetry(self):
        o = Order(0.4)
        for w in (1.5 + 0.8j, 0.9 - 0.3j, 3.0 + 2.0j):
            assert contains(o, w) == contains(o, w.conjugate())

    def test_validation(self):
        with pytest.raises(DomainError):
            contains(Order(0.3), 1.0, tol=0.0)
        with pytest.raises(DomainError):
            contains(Order(0.3), complex("inf"))


class TestDomainNesting:
    def test_larger_order_nested_inside_smaller(self):
        for hi, lo in ((0.7, 0.4), (0.5, 0.3), (0.9, 0.6)):
            inner, outer = Order(hi), Order(lo)
            for s in sample_boundary(inner, 50, theta_min=1e-2):
                assert contains(outer, s.point) in ("inside", "boundary-band")
