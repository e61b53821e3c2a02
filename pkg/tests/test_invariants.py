"""Grid-wide invariants of the catalogue, the oracle and the sharpness checks."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from nephroid_radii.classes import ClassId, Tag, class_spec, target_function
from nephroid_radii.geometry import (
    CUSP_LEFT,
    CUSP_RIGHT,
    Membership,
    boundary_point,
    contains,
    critical_x0,
    h_poly,
    implicit_value,
    inscribed_radius,
    DEFAULT_DOMAIN,
)
from nephroid_radii.solver import margin, oracle_radius, parameter_grid
from nephroid_radii.verify import check_sharpness, image_sweep
from oracles import dense_distance

GRID = parameter_grid()
A_GRID = np.linspace(CUSP_LEFT + 1e-3, CUSP_RIGHT - 1e-3, 200)


def random_class(tag, data):
    """Draw admissible parameters for ``tag``."""
    names = dict(ClassId.make(tag).params)
    kw = {}
    if tag is Tag.JANOWSKI:
        a, b = data.draw(st.floats(-1, 1)), data.draw(st.floats(-1, 1))
        if a == b:
            b = -1.0 if a > -1 else 1.0
        kw = {"A": max(a, b), "B": min(a, b)}
    if "alpha" in names:
        kw["alpha"] = data.draw(st.floats(0.0, 0.999))
    if "n" in names:
        kw["n"] = data.draw(st.integers(1, 6))
    if "beta" in names:
        kw["beta"] = data.draw(st.floats(1.01, 6.0))
    return ClassId.make(tag, **kw)


@given(st.data())
def test_disk_bound_sound_below_radius(data):
    tag = data.draw(st.sampled_from([t for t in Tag if t is not Tag.G4]))
    cid = random_class(tag, data)
    rho = class_spec(cid).radius
    r = np.linspace(0.0, min(rho, 1.0 - 1e-9), 51)[1:]
    assert margin(cid, r).min() >= -1e-12


@pytest.mark.parametrize("cid", GRID, ids=str)
def test_margin_stays_negative_after_oracle(cid):
    rho = oracle_radius(cid)
    if rho >= 1.0:
        return
    r = np.linspace(rho, min(1.0 - 1e-9, 1.1 * rho), 40)[1:]
    assert margin(cid, r).max() < 0
    below = np.linspace(0.0, rho, 40)[1:-1]
    assert np.all(np.isfinite(margin(cid, below)))


@pytest.mark.parametrize("name", ["lemniscate", "exp", "rl"])
def test_q_equals_target_where_only_q_is_stated(name):
    for cid in [c for c in GRID if c.tag.value == name]:
        z = 0.8 * np.exp(1j * np.linspace(0, 2 * np.pi, 50)) * np.linspace(0.05, 1, 50)
        assert np.allclose(class_spec(cid).extremal.q(z), target_function(cid)(z), atol=1e-15)


@pytest.mark.parametrize("cid", GRID[::7], ids=str)
def test_image_sweep_conjugate_symmetry(cid):
    w = image_sweep(cid, 0.5 * min(class_spec(cid).radius, 0.999), 512)
    assert np.allclose(w[1:], np.conj(w[1:][::-1]), atol=1e-13)


def test_boundary_conjugate_symmetry():
    t = np.linspace(0, np.pi, 101)
    assert np.allclose(boundary_point(-t)[1], -boundary_point(t)[1])
    assert np.allclose(boundary_point(-t)[0], boundary_point(t)[0])


def test_stationary_point_is_maximum_on_grid():
    x = np.linspace(-1, 1, 1000)
    for a in A_GRID:
        if abs(a - 1.0) < 1e-12:
            continue
        assert h_poly(critical_x0(a), a) >= h_poly(x, a).max() - 1e-12


def test_lemma_reduction_on_fine_grid():
    t = 2 * np.pi * np.arange(10_000) / 10_000  # contains 0 and pi
    for a in A_GRID:
        xi = h_poly(np.cos(t), a)
        assert abs(xi.min() - min(h_poly(-1.0, a), h_poly(1.0, a))) < 1e-10


def test_sextic_sign_far_from_boundary():
    rng = np.random.default_rng(2024)
    w = rng.uniform(-0.5, 2.5, 4000) + 1j * rng.uniform(-1.7, 1.7, 4000)
    w = w[dense_distance(w, 1 << 12) > 0.05][:1000]
    assert w.size == 1000
    inside = DEFAULT_DOMAIN.classify(w) == Membership.INSIDE
    assert np.array_equal(inside, implicit_value(w.real, w.imag) < 0)


def test_inscribed_disk_is_maximal():
    theta = 2 * np.pi * np.arange(16) / 16
    for a in A_GRID[::10]:
        ra = inscribed_radius(a)
        for s in (0.25, 0.5, 1.0):
            pts = a + s * 0.999 * ra * np.exp(1j * theta)
            assert all(contains(p) is Membership.INSIDE for p in pts)
        if abs(a - 1.0) > 1e-9:
            ring = DEFAULT_DOMAIN.classify(a + 1.01 * ra * np.exp(1j * theta))
            assert np.any(ring == Membership.OUTSIDE)


@pytest.mark.slow
@pytest.mark.parametrize("cid", [c for c in GRID if class_spec(c).extremal.sharp and class_spec(c).radius < 1][::5], ids=str)
def test_witness_at_first_step(cid):
    rep = check_sharpness(cid)
    assert rep.outside_witness[0] == pytest.approx(1.001 * rep.rho, rel=1e-15)
    assert rep.clearance_at_0_99rho > 0


@pytest.mark.parametrize("name", ["lune", "sine"])
def test_non_sharp_clearance_range(name):
    rep = check_sharpness(name)
    assert 1e-3 < rep.min_clearance_at_rho < 2 / 3
