import math

import numpy as np
import pytest

from nephroid_radii.errors import AmbiguousMembership, DomainError
from nephroid_radii.geometry import (
    CUSP_LEFT,
    CUSP_RIGHT,
    DEFAULT_DOMAIN,
    Membership,
    NephroidDomain,
    boundary_distance,
    boundary_point,
    contains,
    critical_x0,
    critical_x1,
    h_poly,
    implicit_value,
    inscribed_radius,
    phi_ne,
)
from oracles import dense_distance, ray_cast_inside


def test_phi_ne_cusps_and_centre():
    assert phi_ne(0.0) == 1.0
    assert phi_ne(1.0) == pytest.approx(CUSP_RIGHT, abs=1e-15)
    assert phi_ne(-1.0) == pytest.approx(CUSP_LEFT, abs=1e-15)


def test_boundary_point_matches_phi_on_circle():
    t = np.linspace(-np.pi, np.pi, 257)
    u, v = boundary_point(t)
    w = phi_ne(np.exp(1j * t))
    assert np.allclose(u, w.real, atol=1e-14)
    assert np.allclose(v, w.imag, atol=1e-14)


def test_boundary_satisfies_sextic():
    u, v = boundary_point(np.linspace(0, 2 * np.pi, 1001))
    assert np.abs(implicit_value(u, v)).max() < 1e-13


def test_implicit_value_examples():
    assert implicit_value(1.0, 0.0) == pytest.approx(-((4 / 9) ** 3))
    # (4 - 4/9)^3 = (32/9)^3
    assert implicit_value(3.0, 0.0) == pytest.approx((32 / 9) ** 3)
    assert implicit_value(CUSP_RIGHT, 0.0) == pytest.approx(0.0, abs=1e-15)


def test_top_of_domain():
    u, v = boundary_point(np.pi / 2)
    assert (u, v) == pytest.approx((1.0, 4.0 / 3.0))


def test_inscribed_radius_piecewise():
    assert inscribed_radius(1.0) == pytest.approx(2 / 3)
    assert inscribed_radius(0.5) == pytest.approx(0.5 - 1 / 3)
    assert inscribed_radius(1.5) == pytest.approx(5 / 3 - 1.5)
    a = np.array([0.4, 1.0, 1.6])
    assert np.allclose(inscribed_radius(a), [0.4 - 1 / 3, 2 / 3, 5 / 3 - 1.6])


@pytest.mark.parametrize("a", [CUSP_LEFT, CUSP_RIGHT, 0.0, 2.0])
def test_centre_outside_interval_rejected(a):
    with pytest.raises(DomainError):
        inscribed_radius(a)
    with pytest.raises(DomainError):
        h_poly(0.0, a)


@pytest.mark.parametrize("a", [0.34, 0.7, 0.999, 1.0, 1.001, 1.3, 1.66])
def test_h_poly_is_squared_distance(a):
    t = np.linspace(0, np.pi, 401)
    u, v = boundary_point(t)
    assert np.allclose(h_poly(np.cos(t), a), (u - a) ** 2 + v**2, atol=1e-13)


@pytest.mark.parametrize("a", [0.34, 0.7, 0.999, 1.001, 1.3, 1.66])
def test_critical_points(a):
    x0, x1 = critical_x0(a), critical_x1(a)
    assert -1 < x0 < 1
    assert abs(x1) > 1
    d = a - 1
    for x in (x0, x1):
        # derivative of h_poly in x
        assert -4 * d - 8 / 3 * x + 8 * d * x**2 == pytest.approx(0.0, abs=1e-12)
    # x0 is a maximum, so the minimum over [-1, 1] sits at an endpoint
    assert h_poly(x0, a) >= max(h_poly(-1.0, a), h_poly(1.0, a))


def test_critical_x0_continuous_at_one():
    assert critical_x0(1.0) == 0.0
    assert critical_x0(1.0 + 1e-12) == pytest.approx(0.0, abs=1e-11)
    assert critical_x1(1.0) == math.inf


@pytest.mark.parametrize(
    "w, expected",
    [
        (1.0, Membership.INSIDE),
        (1 + 1.3j, Membership.INSIDE),
        (1 + 1.34j, Membership.OUTSIDE),
        (0.4, Membership.INSIDE),
        (CUSP_LEFT, Membership.BOUNDARY),
        (CUSP_RIGHT, Membership.BOUNDARY),
        # just past a cusp lies in the thin exterior notch
        (CUSP_LEFT - 1e-3, Membership.OUTSIDE),
        (CUSP_RIGHT + 1e-3, Membership.OUTSIDE),
        # the notch has half-width about (4/3) s**1.5 at distance s past the cusp
        (CUSP_RIGHT + 1e-3 + 1e-5j, Membership.OUTSIDE),
        (CUSP_RIGHT + 1e-3 + 1e-3j, Membership.INSIDE),
        (3.0, Membership.OUTSIDE),
    ],
)
def test_contains_examples(w, expected):
    assert contains(w) is expected


def test_smooth_boundary_point_is_ambiguous():
    u, v = boundary_point(np.pi / 2)
    with pytest.raises(AmbiguousMembership):
        contains(complex(u, v))


def test_cusp_vertex_winding_is_nearly_whole():
    # a vertex contributes nothing; the sampled cusp angle is tiny
    total = DEFAULT_DOMAIN.winding_sum(CUSP_LEFT)
    assert total == pytest.approx(1.0, abs=1e-2)
    assert contains(CUSP_LEFT) is Membership.BOUNDARY


def test_boundary_distance_against_dense_sampling():
    rng = np.random.default_rng(7)
    w = rng.uniform(0, 2, 60) + 1j * rng.uniform(-1.5, 1.5, 60)
    d, t = boundary_distance(w)
    assert np.allclose(d, dense_distance(w, 1 << 18), atol=1e-9)
    u, v = boundary_point(t)
    assert np.allclose(np.abs(w - (u + 1j * v)), d, atol=1e-12)


def test_boundary_distance_scalar():
    d, t = boundary_distance(1.0)
    assert isinstance(d, float)
    assert d == pytest.approx(2 / 3, abs=1e-12)
    assert abs(t) == pytest.approx(np.pi, abs=1e-6) or abs(t) < 1e-6


def test_classify_matches_ray_cast():
    rng = np.random.default_rng(11)
    w = rng.uniform(-0.2, 2.2, 500) + 1j * rng.uniform(-1.5, 1.5, 500)
    keep = dense_distance(w, 1 << 14) > 1e-4
    codes = DEFAULT_DOMAIN.classify(w[keep])
    assert np.array_equal(codes == Membership.INSIDE, ray_cast_inside(w[keep]))


def test_classify_with_distance_shape():
    w = np.array([[1.0, 3.0], [0.5, 1.5]])
    codes, dist = DEFAULT_DOMAIN.classify_with_distance(w)
    assert codes.shape == dist.shape == (2, 2)
    assert codes[0, 1] == Membership.OUTSIDE


def test_small_domain_agrees_far_from_boundary():
    small = NephroidDomain(boundary_samples=256)
    w = np.array([1.0, 0.6 + 0.3j, 2.5, 1 + 1.5j])
    assert np.array_equal(small.classify(w), DEFAULT_DOMAIN.classify(w))


@pytest.mark.parametrize("n", [8, 15, 101])
def test_bad_sample_counts(n):
    with pytest.raises(ValueError):
        NephroidDomain(boundary_samples=n)


def test_nonpositive_tolerance():
    with pytest.raises(ValueError):
        DEFAULT_DOMAIN.classify(1.0, tol=0.0)


def test_boundary_samples_read_only():
    with pytest.raises(ValueError):
        DEFAULT_DOMAIN.boundary[0] = 0
