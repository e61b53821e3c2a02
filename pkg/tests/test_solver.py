import logging

import numpy as np
import pytest

from nephroid_radii.classes import ClassId, DiskBound, Tag, class_spec
from nephroid_radii.errors import DomainError, NoRootBracket
from nephroid_radii.solver import (
    R_MAX,
    RadiusResult,
    _margin_values,
    margin,
    oracle_radius,
    parameter_grid,
    reconcile,
)
import nephroid_radii.solver as solver

GRID = parameter_grid()
NON_G4 = [c for c in GRID if c.tag is not Tag.G4]


def test_grid_is_sorted_unique_and_covers_every_class():
    assert GRID == sorted(GRID)
    assert len(set(GRID)) == len(GRID)
    assert {c.tag for c in GRID} == set(Tag)


@pytest.mark.parametrize("cid", NON_G4, ids=str)
def test_oracle_matches_closed_form(cid):
    result = reconcile(cid)
    assert result.agree, (result.closed_form, result.oracle)
    assert abs(result.oracle - result.closed_form) < 1e-8


def test_g4_oracle_smaller_than_stated():
    for n in (1, 2, 3, 5):
        result = reconcile(ClassId.make("g4", n=n))
        assert not result.agree
        assert result.oracle < result.closed_form
    assert oracle_radius(ClassId.make("g4", n=1)) == pytest.approx(0.25, abs=1e-10)


def test_inclusion_returns_exactly_one():
    assert oracle_radius(ClassId.make("lemniscate", alpha=0.5)) == 1.0
    assert oracle_radius(ClassId.make("janowski", A=0.5, B=0.5)) == 1.0


def test_margin_scalar_and_array():
    cid = ClassId.make("cardioid")
    g = margin(cid, 0.2)
    assert isinstance(g, float)
    assert g == pytest.approx(2 / 3 - 2 * (0.04 + 0.4) / 3)
    arr = margin(cid, np.array([0.1, 0.2]))
    assert arr.shape == (2,) and arr[1] == pytest.approx(g)


@pytest.mark.parametrize("r", [-0.1, 1.0, 1.5])
def test_margin_domain(r):
    with pytest.raises(DomainError):
        margin("cardioid", r)


def test_margin_minus_inf_when_centre_leaves_interval():
    disk = DiskBound(center=lambda r: 1.0 + 2.0 * r, radius=lambda r: 0.0 * r)
    assert _margin_values(disk, np.array([0.5]))[0] == -np.inf


def test_no_root_bracket(monkeypatch):
    bad = DiskBound(center=lambda r: 1.0 + 0.0 * r, radius=lambda r: 1.0 + 0.0 * r)
    spec = class_spec("cardioid")
    monkeypatch.setattr(solver, "class_spec", lambda cid: type(spec)(spec.class_id, bad, 0.5, spec.extremal))
    with pytest.raises(NoRootBracket):
        oracle_radius("cardioid")


def test_second_sign_change_is_refined(monkeypatch, caplog):
    # the coarse scan sees the dip on (0.3, 0.31) and the margin recovering after
    # it; the refined scan then finds the earlier, narrower dip on (0.1003, 0.1009)
    def radius(r):
        r = np.asarray(r, dtype=float)
        dip = ((r > 0.1003) & (r < 0.1009)) | ((r > 0.3) & (r < 0.31))
        return 0.5 + 0.0 * r + np.where(dip, 0.5, 0.0)

    disk = DiskBound(center=lambda r: 1.0 + 0.0 * r, radius=radius)
    spec = class_spec("cardioid")
    monkeypatch.setattr(solver, "class_spec", lambda cid: type(spec)(spec.class_id, disk, 0.5, spec.extremal))
    with caplog.at_level(logging.WARNING):
        value = oracle_radius("cardioid")
    assert "more than once" in caplog.text
    assert value == pytest.approx(0.1003, abs=1e-9)


def test_oracle_tolerance_positive():
    with pytest.raises(ValueError):
        oracle_radius("cardioid", tol=0)


def test_reconcile_fields():
    result = reconcile("sine")
    assert isinstance(result, RadiusResult)
    assert result.closed_form == class_spec("sine").radius
    assert all(0 < r < 1 for r, _ in result.margin_at)
    for r, g in result.margin_at:
        if abs(r - result.oracle) > 1e-9:
            assert (g > 0) == (r < result.oracle)


def test_r_max_below_one():
    assert 0 < 1 - R_MAX < 1e-8
