"""Numeric radius oracle built from the disk bounds and the inscribed-disk radius.

The oracle never looks at a closed-form radius: it finds the first ``r`` at
which the class's disk bound stops fitting inside the largest real-centred
disk of the nephroid domain, which makes the comparison with the closed
form in :func:`reconcile` an independent two-route check.
"""

import logging
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import bisect

from .classes import ClassId, Tag, class_spec
from .errors import DomainError, NoRootBracket
from .geometry import CUSP_LEFT, CUSP_RIGHT

log = logging.getLogger(__name__)

TOL_RADIUS = 1e-8
SCAN_POINTS = 1000
R_MAX = 1.0 - 1e-9

ALPHA_GRID = tuple(round(0.1 * k, 1) for k in range(10))
N_GRID = (1, 2, 3, 5)
BETA_GRID = (1.1, 1.5, 2.0, 5.0)
JANOWSKI_GRID = ((1.0, -1.0), (1.0, 0.0), (0.5, -0.5), (1.0, 0.5), (0.25, -1.0))


def _margin_values(disk, r):
    r = np.asarray(r, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        c = np.asarray(disk.center(r), dtype=float) * np.ones_like(r)
        rad = np.asarray(disk.radius(r), dtype=float) * np.ones_like(r)
    inside = (c > CUSP_LEFT) & (c < CUSP_RIGHT)
    budget = np.where(c <= 1.0, c - CUSP_LEFT, CUSP_RIGHT - c)
    return np.where(inside, budget - rad, -np.inf)


def margin(class_id, r):
    """Inscribed radius at the disk centre minus the disk radius, at ``|z| = r``.

    Non-negative exactly when the disk bound fits in the nephroid domain by
    the inscribed-disk lemma; ``-inf`` when the centre leaves ``(1/3, 5/3)``.
    Accepts a scalar or an array of radii.
    """
    disk = class_spec(class_id).disk
    lo, hi = disk.valid_r
    if np.any((np.asarray(r) < lo) | (np.asarray(r) >= hi)):
        raise DomainError(f"r={r!r} outside valid range [{lo}, {hi})")
    g = _margin_values(disk, r)
    return float(g) if np.ndim(r) == 0 else g


def _scan_grid(points):
    grid = np.linspace(0.0, 1.0, points + 1)[1:]
    grid[-1] = R_MAX
    return grid


def oracle_radius(class_id, tol=1e-13, scan_points=SCAN_POINTS):
    """Largest ``r`` such that the margin is non-negative on all of ``(0, r]``.

    A coarse scan brackets the first sign change and bisection refines it to
    ``tol``.  Returns exactly ``1.0`` when the margin never goes negative.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    disk = class_spec(class_id).disk
    grid = _scan_grid(scan_points)
    g = _margin_values(disk, grid)
    negative = np.flatnonzero(g < 0)
    if negative.size == 0:
        return 1.0
    first = negative[0]
    if first == 0:
        raise NoRootBracket(f"{class_id}: margin already negative at r={grid[0]:g}")
    if np.any(g[first:] >= 0):
        log.warning("%s: margin changes sign more than once; refining scan", class_id)
        fine = np.linspace(0.0, grid[first], 10 * scan_points + 1)[1:]
        g_fine = _margin_values(disk, fine)
        neg_fine = np.flatnonzero(g_fine < 0)
        if neg_fine.size and neg_fine[0] == 0:
            raise NoRootBracket(f"{class_id}: margin already negative at r={fine[0]:g}")
        if neg_fine.size:
            grid, g, first = fine, g_fine, neg_fine[0]
    a, b = grid[first - 1], grid[first]
    if g[first - 1] == 0.0:
        return float(a)

    def f(r):
        return float(_margin_values(disk, r))

    return float(bisect(f, a, b, xtol=tol, rtol=4 * np.finfo(float).eps, maxiter=200))


@dataclass(frozen=True)
class RadiusResult:
    class_id: ClassId
    closed_form: float
    oracle: float
    agree: bool
    margin_at: tuple = field(default=(), compare=False)


def reconcile(class_id, tol_radius=TOL_RADIUS):
    """Closed form and oracle side by side, with the margin on a few radii."""
    spec = class_spec(class_id)
    oracle = oracle_radius(spec.class_id)
    diag_r = np.linspace(0.0, min(1.0, 1.25 * oracle), 11)[1:]
    diag_r = diag_r[diag_r < 1.0]
    diag = tuple((float(r), float(g)) for r, g in zip(diag_r, _margin_values(spec.disk, diag_r)))
    return RadiusResult(
        class_id=spec.class_id,
        closed_form=spec.radius,
        oracle=oracle,
        agree=abs(spec.radius - oracle) < tol_radius,
        margin_at=diag,
    )


def parameter_grid():
    """The standard class instances: every class over the fixed parameter grid."""
    out = []
    for A, B in JANOWSKI_GRID:
        out.append(ClassId.make(Tag.JANOWSKI, A=A, B=B))
    for tag in (Tag.STARLIKE, Tag.BOOTH, Tag.LEMNISCATE, Tag.EXP):
        out.extend(ClassId.make(tag, alpha=a) for a in ALPHA_GRID)
    for tag in (Tag.CONVEX, Tag.SHIFTED_LEMNISCATE, Tag.CARDIOID, Tag.RATIONAL, Tag.LUNE, Tag.SINE):
        out.append(ClassId.make(tag))
    for tag in (Tag.G1, Tag.G2, Tag.G3, Tag.G4, Tag.MACGREGOR):
        out.extend(ClassId.make(tag, n=n) for n in N_GRID)
    out.extend(ClassId.make(Tag.CLOSE_TO_STAR, n=n, alpha=a) for n in N_GRID for a in ALPHA_GRID)
    out.extend(ClassId.make(Tag.URALEGADDI, n=n, beta=b) for n in N_GRID for b in BETA_GRID)
    return sorted(out)
