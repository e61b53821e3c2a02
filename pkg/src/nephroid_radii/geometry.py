"""The nephroid domain ``phi_ne(D)`` and the queries the radius code needs.

The domain is the image of the unit disk under ``phi_ne(z) = 1 + z - z**3/3``.
Its boundary is a two-cusped nephroid with cusps at ``1/3`` and ``5/3`` on
the real axis; both cusps point into the domain, so the real segment
``(1/3, 5/3)`` is exactly the part of the real axis inside it.

Membership is decided by the winding number of the sampled boundary, not by
the sign of the implicit sextic (which is kept for residual checks only).
"""

from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache

import numpy as np
from scipy.spatial import cKDTree

from .errors import AmbiguousMembership, DomainError
from .numerics import golden_section_min

CUSP_LEFT = 1.0 / 3.0
CUSP_RIGHT = 5.0 / 3.0

DEFAULT_SAMPLES = 4096
MEMBERSHIP_TOL = 1e-9
# sampled distance overestimates the true one by at most half a chord
_REFINE_SLACK = 4e-3
_CHUNK = 512
_COARSEN = 16


class Membership(IntEnum):
    OUTSIDE = 0
    INSIDE = 1
    BOUNDARY = 2


def phi_ne(z):
    """Return ``1 + z - z**3/3``; works elementwise on arrays."""
    return 1.0 + z - z**3 / 3.0


def boundary_point(t):
    """Return ``(u, v)`` of the nephroid boundary at angle ``t``."""
    u = 1.0 + np.cos(t) - np.cos(3.0 * t) / 3.0
    v = np.sin(t) - np.sin(3.0 * t) / 3.0
    return u, v


def _boundary_complex(t):
    u, v = boundary_point(t)
    return u + 1j * v


def implicit_value(u, v):
    """Left-hand side of the nephroid sextic ``((u-1)^2+v^2-4/9)^3 - 4v^2/3``."""
    return ((u - 1.0) ** 2 + v**2 - 4.0 / 9.0) ** 3 - 4.0 * v**2 / 3.0


def _check_center(a):
    if not np.all((CUSP_LEFT < np.asarray(a)) & (np.asarray(a) < CUSP_RIGHT)):
        raise DomainError(f"center a={a!r} must lie in (1/3, 5/3)")


def h_poly(x, a):
    """Squared distance from ``(a, 0)`` to the boundary point with ``cos t = x``."""
    _check_center(a)
    d = a - 1.0
    return 16.0 / 9.0 + d**2 - 4.0 * d * x - 4.0 / 3.0 * x**2 + 8.0 / 3.0 * d * x**3


def critical_x0(a):
    """The stationary point of ``h_poly(., a)`` inside ``(-1, 1)``.

    It is a maximum of ``h_poly``.  At ``a = 1`` the closed form is 0/0 and
    the analytic limit ``0`` is returned.
    """
    _check_center(a)
    d = a - 1.0
    if d == 0.0:
        return 0.0
    # rationalised form of (1 - sqrt(1 + 18 d^2)) / (6 d); no cancellation near a = 1
    return -3.0 * d / (1.0 + np.sqrt(1.0 + 18.0 * d * d))


def critical_x1(a):
    """The other stationary point of ``h_poly``; it lies outside ``[-1, 1]``."""
    _check_center(a)
    d = a - 1.0
    if d == 0.0:
        return np.inf
    return (1.0 + np.sqrt(1.0 + 18.0 * d * d)) / (6.0 * d)


def inscribed_radius(a):
    """Radius of the largest disk centred at real ``a`` inside the domain.

    Equal to ``a - 1/3`` for ``a <= 1`` and ``5/3 - a`` for ``a >= 1``.
    """
    _check_center(a)
    if np.ndim(a) == 0:
        return a - CUSP_LEFT if a <= 1.0 else CUSP_RIGHT - a
    a = np.asarray(a, dtype=float)
    return np.where(a <= 1.0, a - CUSP_LEFT, CUSP_RIGHT - a)


@lru_cache(maxsize=8)
def _samples(n):
    t = 2.0 * np.pi * np.arange(n) / n
    b = _boundary_complex(t)
    b.setflags(write=False)
    return t, b


@dataclass(frozen=True)
class _Levels:
    tree: cKDTree
    coarse: np.ndarray
    # max parameter-matched gap between the coarse and the full polygon
    deviation: float
    half_edge: float


@lru_cache(maxsize=8)
def _levels(n):
    _, b = _samples(n)
    tree = cKDTree(np.column_stack([b.real, b.imag]))
    stride = _COARSEN if n % _COARSEN == 0 and n // _COARSEN >= 64 else 1
    coarse = b[::stride]
    nxt = np.roll(coarse, -1)
    frac = (np.arange(n) % stride) / stride
    interp = np.repeat(coarse, stride) * (1 - frac) + np.repeat(nxt, stride) * frac
    deviation = float(np.abs(interp - b).max())
    half_edge = float(np.abs(np.roll(b, -1) - b).max()) / 2.0
    return _Levels(tree, coarse, deviation, half_edge)


def _winding(poly, w):
    """Accumulated argument of ``poly - w`` (in turns), one value per point."""
    out = np.empty(w.shape)
    for i in range(0, w.size, _CHUNK):
        diff = poly[None, :] - w[i : i + _CHUNK, None]
        prod = np.roll(diff, -1, axis=1) * np.conj(diff)
        # a vertex at w: signed zeros would otherwise yield +-pi
        angle = np.where(prod == 0, 0.0, np.angle(prod))
        out[i : i + _CHUNK] = angle.sum(axis=1)
    return out / (2.0 * np.pi)


def _wrap(t):
    """Map angles into ``(-pi, pi]``."""
    t = np.mod(t + np.pi, 2.0 * np.pi) - np.pi
    return np.where(t == -np.pi, np.pi, t)


@dataclass(frozen=True)
class NephroidDomain:
    """The target region together with its discretisation parameters."""

    boundary_samples: int = DEFAULT_SAMPLES
    cusp_left: float = CUSP_LEFT
    cusp_right: float = CUSP_RIGHT

    def __post_init__(self):
        if self.boundary_samples < 16 or self.boundary_samples % 2:
            raise ValueError("boundary_samples must be an even integer >= 16")

    @property
    def angles(self):
        return _samples(self.boundary_samples)[0]

    @property
    def boundary(self):
        """Sampled boundary as a read-only complex array, ``t = 2*pi*k/N``."""
        return _samples(self.boundary_samples)[1]

    def nearest_sample(self, w):
        """Distance to, and index of, the nearest boundary sample."""
        w = np.asarray(w, dtype=complex)
        d, k = _levels(self.boundary_samples).tree.query(np.column_stack([w.real, w.imag]))
        return d, k

    def boundary_distance(self, w):
        """Distance from ``w`` to the boundary and the angle where it is attained.

        The nearest boundary sample is refined by golden-section search
        between its two neighbours.  Accepts scalars or arrays; returns
        ``(d, t_star)`` of matching shape with ``t_star`` in ``(-pi, pi]``.
        """
        w_arr = np.asarray(w, dtype=complex)
        flat = w_arr.reshape(-1)
        t = self.angles
        grid_d, k = self.nearest_sample(flat)
        step = 2.0 * np.pi / self.boundary_samples

        def sq(ts):
            return np.abs(flat - _boundary_complex(ts)) ** 2

        tk = t[k]
        t_ref, sq_ref = golden_section_min(sq, tk - step, tk + step)
        ref_d = np.sqrt(sq_ref)
        better = ref_d < grid_d
        d = np.where(better, ref_d, grid_d)
        t_star = _wrap(np.where(better, t_ref, tk))
        if w_arr.ndim == 0:
            return float(d[0]), float(t_star[0])
        return d.reshape(w_arr.shape), t_star.reshape(w_arr.shape)

    def winding_sum(self, w):
        """Accumulated argument of ``boundary - w`` over the full sample polygon, in turns."""
        w_arr = np.asarray(w, dtype=complex)
        winding = _winding(self.boundary, w_arr.reshape(-1))
        return float(winding[0]) if w_arr.ndim == 0 else winding.reshape(w_arr.shape)

    def _fast_winding(self, w, coarse_d):
        # far points cannot be separated from the full polygon by the coarse one
        lv = _levels(self.boundary_samples)
        far = coarse_d - lv.half_edge > 2.0 * lv.deviation + 1e-12
        winding = np.empty(w.shape)
        winding[far] = _winding(lv.coarse, w[far])
        winding[~far] = _winding(self.boundary, w[~far])
        return winding

    def classify(self, w, tol=MEMBERSHIP_TOL):
        """Vectorised membership; returns an integer array of ``Membership`` codes."""
        return self.classify_with_distance(w, tol)[0]

    def classify_with_distance(self, w, tol=MEMBERSHIP_TOL):
        """Membership codes plus a boundary-distance estimate for each point.

        The distance is refined for points near the boundary and is the
        nearest-sample distance elsewhere.
        """
        if tol <= 0:
            raise ValueError("tol must be positive")
        w_arr = np.atleast_1d(np.asarray(w, dtype=complex))
        shape = w_arr.shape
        w_arr = w_arr.reshape(-1)
        coarse, _ = self.nearest_sample(w_arr)
        winding = self._fast_winding(w_arr, coarse)
        turns = np.rint(winding)
        codes = np.where(turns == 1, Membership.INSIDE, Membership.OUTSIDE).astype(int)
        dist = coarse.copy()

        near = coarse < tol + _REFINE_SLACK
        if np.any(near):
            d_near, _ = self.boundary_distance(w_arr[near])
            dist[near] = d_near
            on_boundary = np.zeros(w_arr.shape, dtype=bool)
            on_boundary[near] = d_near < tol
            bad = on_boundary & (np.abs(winding - turns) * 2.0 * np.pi > 0.1)
            if np.any(bad):
                raise AmbiguousMembership(
                    f"winding sum {winding[bad][0]:.6f} at boundary point "
                    f"{w_arr[bad][0]!r} is not a whole number of turns"
                )
            codes[on_boundary] = Membership.BOUNDARY
        return codes.reshape(shape), dist.reshape(shape)

    def contains(self, w, tol=MEMBERSHIP_TOL):
        """Classify a single point as inside, on the boundary, or outside.

        A point within ``tol`` of the boundary is ``BOUNDARY``.  Such a point
        raises :class:`AmbiguousMembership` when the winding sum is not within
        0.1 rad of a whole turn, which is what happens on a smooth stretch
        of boundary (the sum there is half a turn).  The cusps are fine.
        """
        return Membership(int(self.classify(w, tol)[0]))


DEFAULT_DOMAIN = NephroidDomain()


def contains(w, tol=MEMBERSHIP_TOL):
    return DEFAULT_DOMAIN.contains(w, tol)


def boundary_distance(w):
    return DEFAULT_DOMAIN.boundary_distance(w)
