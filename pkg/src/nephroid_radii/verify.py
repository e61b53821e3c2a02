"""Sharpness checks: push circles ``|z| = r`` through an extremal Q-function.

For a sharp class the image of ``|z| = rho`` must touch the nephroid
boundary (at ``1/3`` and/or ``5/3``), the image of ``|z| = 0.99 rho`` must
be strictly inside, and some image point just beyond ``rho`` must be
outside.  For the two non-sharp classes the image at ``rho`` keeps a
measurable clearance instead.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .classes import ClassId, class_spec
from .errors import AmbiguousMembership, PoleProximity
from .geometry import CUSP_LEFT, CUSP_RIGHT, DEFAULT_DOMAIN, MEMBERSHIP_TOL, Membership
from .numerics import golden_section_min
from .solver import R_MAX

TOL_TOUCH = 1e-6
NOT_SHARP_FLOOR = 1e-3
SWEEP_SAMPLES = 2048
POLE_TOL = 1e-12
WITNESS_STEPS = 12


def _wrap(t):
    t = float(np.mod(t + np.pi, 2.0 * np.pi) - np.pi)
    return np.pi if t == -np.pi else t


def _angle_gap(a, b):
    return abs(_wrap(a - b))


def _covers(found, declared, tol=1e-6):
    """True when every declared ``(angle, value)`` touch appears in ``found``."""
    return all(
        any(v == fv and _angle_gap(t, ft) < tol for ft, fv in found) for t, v in declared
    )


def _evaluate(extremal, z):
    if extremal.denominator is not None:
        den = np.min(extremal.denominator(z))
        if den < POLE_TOL:
            raise PoleProximity(f"|denominator| = {den:.3g} on the sampled circle")
    return extremal.q(z)


def image_sweep(class_id, r, samples=SWEEP_SAMPLES):
    """Values of the extremal Q at ``r * exp(2*pi*i*k/samples)``, ``k = 0..samples-1``."""
    if not 0.0 < r < 1.0:
        raise ValueError("r must lie in (0, 1)")
    if samples < 64:
        raise ValueError("samples must be at least 64")
    t = 2.0 * np.pi * np.arange(samples) / samples
    return _evaluate(class_spec(class_id).extremal, r * np.exp(1j * t))


@dataclass(frozen=True)
class SharpnessReport:
    class_id: ClassId
    rho: float
    expected: str  # "sharp", "not_sharp" or "inclusion"
    min_clearance_at_rho: float
    touch_found: tuple
    declared_touch_error: float
    inside_at_0_99rho: bool
    clearance_at_0_99rho: float
    outside_witness: Optional[tuple]
    sharp_confirmed: bool
    passed: bool


def _local_minima(values):
    prev, nxt = np.roll(values, 1), np.roll(values, -1)
    return np.flatnonzero((values <= prev) & (values <= nxt))


def _refine_touches(extremal, r, t_grid, clearance, extra_angles, domain, tol_touch, limit=8):
    """Golden-section refinement of the clearance around candidate angles."""
    step = t_grid[1] - t_grid[0]
    minima = _local_minima(clearance)
    minima = minima[np.argsort(clearance[minima])][:limit]
    centers = np.concatenate([t_grid[minima], np.asarray(extra_angles, dtype=float)])

    def f(ts):
        return domain.boundary_distance(_evaluate(extremal, r * np.exp(1j * ts)))[0]

    t_ref, c_ref = golden_section_min(f, centers - step, centers + step, iterations=40)
    found = set()
    for t, c in zip(np.atleast_1d(t_ref), np.atleast_1d(c_ref)):
        if c >= tol_touch:
            continue
        w = complex(_evaluate(extremal, r * np.exp(1j * t)))
        for cusp in (CUSP_LEFT, CUSP_RIGHT):
            if abs(w - cusp) < tol_touch:
                angle = round(_wrap(t), 9) + 0.0
                found.add((-angle if angle == -round(np.pi, 9) else angle, cusp))
    best = float(np.min(c_ref)) if np.size(c_ref) else np.inf
    return tuple(sorted(found)), best


def _find_witness(extremal, rho, samples, domain, tol, angles):
    r_hi = min(R_MAX, rho + 0.05)
    r_lo = min(1.001 * rho, R_MAX)
    radii = [r_lo] + list(np.linspace(r_lo, r_hi, WITNESS_STEPS)[1:])
    t_grid = 2.0 * np.pi * np.arange(samples) / samples
    for r in radii:
        if r <= rho:
            continue
        for ts in (np.asarray(angles, dtype=float), t_grid):
            if ts.size == 0:
                continue
            try:
                codes = domain.classify(_evaluate(extremal, r * np.exp(1j * ts)), tol)
            except (AmbiguousMembership, PoleProximity):
                continue
            out = np.flatnonzero(codes == Membership.OUTSIDE)
            if out.size:
                return (float(r), _wrap(ts[out[0]]))
    return None


def check_sharpness(
    class_id,
    samples=SWEEP_SAMPLES,
    tol_touch=TOL_TOUCH,
    tol=MEMBERSHIP_TOL,
    domain=DEFAULT_DOMAIN,
):
    """Run the sharpness checks for one class at its closed-form radius.

    When the radius is 1 (class inclusion) the sweep is taken at
    ``1 - 1e-9`` and the class passes if no image point there is outside.
    """
    spec = class_spec(class_id)
    extremal = spec.extremal
    rho = spec.radius
    if rho >= 1.0:
        expected = "inclusion"
    else:
        expected = "sharp" if extremal.sharp else "not_sharp"
    r_eval = min(rho, R_MAX)

    t_grid = 2.0 * np.pi * np.arange(samples) / samples
    w_rho = _evaluate(extremal, r_eval * np.exp(1j * t_grid))
    clearance, _ = domain.boundary_distance(w_rho)
    declared_angles = [t.angle for t in extremal.touches]
    touch_found, refined = _refine_touches(
        extremal, r_eval, t_grid, clearance, declared_angles, domain, tol_touch
    )
    min_clearance = float(min(clearance.min(), refined))

    declared_error = 0.0
    for touch in extremal.touches:
        w = complex(_evaluate(extremal, np.array([rho * np.exp(1j * touch.angle)]))[0])
        declared_error = max(declared_error, abs(w - touch.value))

    w_in = _evaluate(extremal, 0.99 * r_eval * np.exp(1j * t_grid))
    codes_in, dist_in = domain.classify_with_distance(w_in, tol)
    inside = bool(np.all(codes_in == Membership.INSIDE) and dist_in.min() > 0.0)

    witness = None
    if rho < 1.0:
        witness = _find_witness(extremal, rho, samples, domain, tol, declared_angles)

    sharp_confirmed = bool(
        min_clearance < tol_touch and inside and (witness is not None or rho >= 1.0)
    )
    if expected == "sharp":
        declared = [(t.angle, t.value) for t in extremal.touches]
        passed = (
            sharp_confirmed
            and declared_error < tol_touch
            and _covers(touch_found, declared)
            and witness is not None
        )
    elif expected == "not_sharp":
        passed = (not sharp_confirmed) and inside and min_clearance > NOT_SHARP_FLOOR
    else:
        try:
            at_edge = domain.classify(w_rho, tol)
            passed = inside and not np.any(at_edge == Membership.OUTSIDE)
        except AmbiguousMembership:
            passed = False

    return SharpnessReport(
        class_id=spec.class_id,
        rho=rho,
        expected=expected,
        min_clearance_at_rho=min_clearance,
        touch_found=touch_found,
        declared_touch_error=declared_error,
        inside_at_0_99rho=inside,
        clearance_at_0_99rho=float(dist_in.min()),
        outside_witness=witness,
        sharp_confirmed=sharp_confirmed,
        passed=bool(passed),
    )
