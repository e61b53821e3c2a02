"""Catalogue of the source function classes.

Each class contributes three things:

* a disk bound ``|Q_f(z) - center(r)| <= radius(r)`` valid on ``|z| = r``
  for every member ``f`` of the class, where ``Q_f = z f'/f``;
* the closed-form radius of the largest disk ``|z| < rho`` on which
  ``Q_f`` stays inside the nephroid domain;
* the Q-function of an extremal member, with the boundary points
  (``1/3`` and/or ``5/3``) and the angles on ``|z| = rho`` where it touches.

Classes built from the ``A_n`` families (``g1``-``g4``, ``cs``, ``macgregor``
and ``uralegaddi``) take an integer ``n >= 1``; their disk bounds depend on
``r`` only through ``x = r**n``.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional

import numpy as np

from .errors import ParameterError
from .geometry import CUSP_LEFT, CUSP_RIGHT

SQRT2 = math.sqrt(2.0)
RL_SHIFT = SQRT2 - 1.0
K_RATIONAL = SQRT2 + 1.0
# below this alpha the exponential class is not contained in the target
EXP_ALPHA_INCLUSION = (3.0 * math.e - 5.0) / (3.0 * math.e - 3.0)
LEMNISCATE_ALPHA_INCLUSION = 1.0 / 3.0


class Tag(str, Enum):
    JANOWSKI = "janowski"
    STARLIKE = "starlike"
    CONVEX = "convex"
    BOOTH = "booth"
    LEMNISCATE = "lemniscate"
    EXP = "exp"
    SHIFTED_LEMNISCATE = "rl"
    CARDIOID = "cardioid"
    RATIONAL = "rational"
    LUNE = "lune"
    SINE = "sine"
    G1 = "g1"
    G2 = "g2"
    G3 = "g3"
    G4 = "g4"
    CLOSE_TO_STAR = "cs"
    MACGREGOR = "macgregor"
    URALEGADDI = "uralegaddi"


PARAMETERS = {
    Tag.JANOWSKI: ("A", "B"),
    Tag.STARLIKE: ("alpha",),
    Tag.CONVEX: (),
    Tag.BOOTH: ("alpha",),
    Tag.LEMNISCATE: ("alpha",),
    Tag.EXP: ("alpha",),
    Tag.SHIFTED_LEMNISCATE: (),
    Tag.CARDIOID: (),
    Tag.RATIONAL: (),
    Tag.LUNE: (),
    Tag.SINE: (),
    Tag.G1: ("n",),
    Tag.G2: ("n",),
    Tag.G3: ("n",),
    Tag.G4: ("n",),
    Tag.CLOSE_TO_STAR: ("n", "alpha"),
    Tag.MACGREGOR: ("n",),
    Tag.URALEGADDI: ("n", "beta"),
}

DEFAULTS = {"A": 1.0, "B": -1.0, "alpha": 0.0, "n": 1, "beta": 2.0}

ALIASES = {
    "s*": Tag.STARLIKE,
    "starlike_alpha": Tag.STARLIKE,
    "c": Tag.CONVEX,
    "bs": Tag.BOOTH,
    "l": Tag.LEMNISCATE,
    "e": Tag.EXP,
    "c_cardioid": Tag.CARDIOID,
    "r": Tag.RATIONAL,
    "moon": Tag.LUNE,
    "s": Tag.SINE,
    "w": Tag.MACGREGOR,
    "m": Tag.URALEGADDI,
}


@dataclass(frozen=True, order=True)
class ClassId:
    """A class tag together with its (validated) parameters.

    Build instances with :meth:`make`, which fills defaults and checks the
    parameter constraints; ``params`` is a sorted tuple of ``(name, value)``.
    """

    tag: Tag
    params: tuple = ()

    @classmethod
    def make(cls, tag, **params):
        tag = parse_tag(tag) if not isinstance(tag, Tag) else tag
        names = PARAMETERS[tag]
        unknown = set(params) - set(names)
        if unknown:
            raise ParameterError(f"{tag.value} takes no parameter(s) {sorted(unknown)}")
        values = {}
        for name in names:
            value = params.get(name)
            if value is None:
                value = DEFAULTS[name]
            values[name] = _coerce(name, value)
        _validate(tag, values)
        return cls(tag, tuple(sorted(values.items())))

    def __getitem__(self, name):
        return dict(self.params)[name]

    @property
    def label(self):
        """Stable, filesystem-friendly description such as ``g1_n3``."""
        parts = [self.tag.value] + [f"{k}{_fmt(v)}" for k, v in self.params]
        return "_".join(parts)

    def __str__(self):
        if not self.params:
            return self.tag.value
        inner = ", ".join(f"{k}={_fmt(v)}" for k, v in self.params)
        return f"{self.tag.value}({inner})"


def _fmt(value):
    return str(value) if isinstance(value, int) else f"{value:.9g}"


def _coerce(name, value):
    if name == "n":
        if isinstance(value, float) and not value.is_integer():
            raise ParameterError(f"n must be an integer, got {value!r}")
        return int(value)
    return float(value)


def _validate(tag, p):
    def need(ok, message):
        if not ok:
            raise ParameterError(f"{tag.value}: {message}")

    if tag is Tag.JANOWSKI:
        # A == B is admitted as the degenerate class {z}, with Q identically 1
        need(-1.0 <= p["B"] <= p["A"] <= 1.0, "requires -1 <= B < A <= 1")
    if "alpha" in p:
        need(0.0 <= p["alpha"] < 1.0, "requires 0 <= alpha < 1")
    if "n" in p:
        need(p["n"] >= 1, "requires integer n >= 1")
    if "beta" in p:
        need(p["beta"] > 1.0, "requires beta > 1")


def parse_tag(name):
    key = str(name).strip().lower()
    if key in ALIASES:
        return ALIASES[key]
    try:
        return Tag(key)
    except ValueError:
        known = ", ".join(t.value for t in Tag)
        raise ParameterError(f"unknown class {name!r}; known classes: {known}") from None


@dataclass(frozen=True)
class DiskBound:
    """``|Q_f(z) - center(r)| <= radius(r)`` on ``|z| = r`` for ``r`` in ``valid_r``."""

    center: Callable
    radius: Callable
    valid_r: tuple = (0.0, 1.0)


@dataclass(frozen=True)
class Touch:
    value: float
    angle: float


@dataclass(frozen=True)
class ExtremalQ:
    """Closed-form Q-function of an extremal member of the class.

    ``denominator`` returns the magnitudes that must stay away from zero
    while ``q`` is evaluated (``None`` when ``q`` is entire on the disk).
    """

    q: Callable
    touches: tuple = ()
    sharp: bool = True
    denominator: Optional[Callable] = None

    @property
    def touch_points(self):
        return tuple(sorted({t.value for t in self.touches}))

    @property
    def touch_angles(self):
        return {v: tuple(t.angle for t in self.touches if t.value == v) for v in self.touch_points}


@dataclass(frozen=True)
class ClassSpec:
    class_id: ClassId
    disk: DiskBound
    radius: float
    extremal: ExtremalQ
    # extremal f_0 itself, when it has a closed form (used to validate q)
    f0: Optional[Callable] = field(default=None, compare=False)


LEFT_AT_PI = Touch(CUSP_LEFT, math.pi)
RIGHT_AT_0 = Touch(CUSP_RIGHT, 0.0)


def _one(r):
    return np.ones_like(np.asarray(r, dtype=float)) if np.ndim(r) else 1.0


def _janowski_disk(A, B):
    return DiskBound(
        center=lambda r: (1.0 - A * B * r**2) / (1.0 - B**2 * r**2),
        radius=lambda r: (A - B) * r / (1.0 - B**2 * r**2),
    )


def _janowski_radius(A, B):
    if A == B:
        return 1.0
    if B >= 0.0:
        value = 2.0 / (3.0 * A - B)
    else:
        value = 2.0 / (3.0 * A - 5.0 * B)
    return min(1.0, value)


def _janowski_f0(A, B):
    if B == 0.0:
        return lambda z: z * np.exp(A * z)
    return lambda z: z * (1.0 + B * z) ** ((A - B) / B)


def _janowski(p):
    A, B = p["A"], p["B"]
    rho = _janowski_radius(A, B)
    touches = ()
    if rho < 1.0:
        # part (i) binds at 1/3 for B >= 0, part (ii) at 5/3 for B <= 0
        touches = (LEFT_AT_PI,) * (B >= 0) + (RIGHT_AT_0,) * (B <= 0)
    extremal = ExtremalQ(
        q=lambda z: (1.0 + A * z) / (1.0 + B * z),
        touches=touches,
        denominator=lambda z: np.abs(1.0 + B * z),
    )
    return _janowski_disk(A, B), rho, extremal, _janowski_f0(A, B)


def _starlike(p):
    alpha = p["alpha"]
    A = 1.0 - 2.0 * alpha
    extremal = ExtremalQ(
        q=lambda z: (1.0 + A * z) / (1.0 - z),
        touches=(RIGHT_AT_0,),
        denominator=lambda z: np.abs(1.0 - z),
    )
    rho = 2.0 / (3.0 * (1.0 - 2.0 * alpha) + 5.0)
    return _janowski_disk(A, -1.0), rho, extremal, lambda z: z * (1.0 - z) ** (2.0 * alpha - 2.0)


def _convex(p):
    # convex functions are starlike of order 1/2, i.e. Janowski(0, -1)
    extremal = ExtremalQ(
        q=lambda z: 1.0 / (1.0 - z),
        touches=(RIGHT_AT_0,),
        denominator=lambda z: np.abs(1.0 - z),
    )
    return _janowski_disk(0.0, -1.0), 2.0 / 5.0, extremal, lambda z: z / (1.0 - z)


def _centered(radius):
    return DiskBound(center=_one, radius=radius)


def _booth(p):
    alpha = p["alpha"]
    disk = _centered(lambda r: r / (1.0 - alpha * r**2))
    rho = 4.0 / (3.0 + math.sqrt(9.0 + 16.0 * alpha))
    extremal = ExtremalQ(
        q=lambda z: 1.0 + z / (1.0 - alpha * z**2),
        touches=(LEFT_AT_PI, RIGHT_AT_0),
        denominator=lambda z: np.abs(1.0 - alpha * z**2),
    )
    if alpha == 0.0:
        f0 = lambda z: z * np.exp(z)  # noqa: E731
    else:
        s = math.sqrt(alpha)
        f0 = lambda z: z * ((1.0 + s * z) / (1.0 - s * z)) ** (1.0 / (2.0 * s))  # noqa: E731
    return disk, rho, extremal, f0


def _lemniscate(p):
    alpha = p["alpha"]
    disk = _centered(lambda r: (1.0 - alpha) * (1.0 - np.sqrt(1.0 - r)))
    if alpha >= LEMNISCATE_ALPHA_INCLUSION:
        rho = 1.0
    else:
        rho = min(1.0, 4.0 * (2.0 - 3.0 * alpha) / (9.0 * (1.0 - alpha) ** 2))
    extremal = ExtremalQ(
        q=lambda z: alpha + (1.0 - alpha) * np.sqrt(1.0 + z),
        touches=(LEFT_AT_PI,) if rho < 1.0 else (),
    )
    return disk, rho, extremal, None


def _exp(p):
    alpha = p["alpha"]
    disk = _centered(lambda r: (1.0 - alpha) * (np.exp(r) - 1.0))
    if alpha >= EXP_ALPHA_INCLUSION:
        rho = 1.0
    else:
        rho = min(1.0, math.log((5.0 - 3.0 * alpha) / (3.0 - 3.0 * alpha)))
    extremal = ExtremalQ(
        q=lambda z: alpha + (1.0 - alpha) * np.exp(z),
        touches=(RIGHT_AT_0,) if rho < 1.0 else (),
    )
    return disk, rho, extremal, None


def phi_rl(z):
    """Map of the disk onto the left loop of the shifted lemniscate."""
    return SQRT2 - RL_SHIFT * np.sqrt((1.0 - z) / (1.0 + 2.0 * RL_SHIFT * z))


def _shifted_lemniscate(p):
    # the bound is 1 - phi_rl(-r); the source display writes z for r inside the root
    disk = _centered(
        lambda r: 1.0 - (SQRT2 - RL_SHIFT * np.sqrt((1.0 + r) / (1.0 - 2.0 * RL_SHIFT * r)))
    )
    extremal = ExtremalQ(
        q=phi_rl,
        touches=(LEFT_AT_PI,),
        denominator=lambda z: np.abs(1.0 + 2.0 * RL_SHIFT * z),
    )
    return disk, 56.0 / (122.0 - 41.0 * SQRT2), extremal, None


def _cardioid(p):
    disk = _centered(lambda r: 2.0 * (r**2 + 2.0 * r) / 3.0)
    extremal = ExtremalQ(q=lambda z: 1.0 + 4.0 * z / 3.0 + 2.0 * z**2 / 3.0, touches=(RIGHT_AT_0,))
    f0 = lambda z: z * np.exp(4.0 * z / 3.0 + z**2 / 3.0)  # noqa: E731
    return disk, SQRT2 - 1.0, extremal, f0


def _rational(p):
    k = K_RATIONAL
    disk = _centered(lambda r: r * (k + r) / (k * (k - r)))
    extremal = ExtremalQ(
        q=lambda z: (k**2 + z**2) / (k * (k - z)),
        touches=(RIGHT_AT_0,),
        denominator=lambda z: np.abs(k - z),
    )
    f0 = lambda z: k**2 * z / (k - z) ** 2 * np.exp(-z / k)  # noqa: E731
    return disk, 1.0 / (3.0 * SQRT2 - 3.0), extremal, f0


def _lune(p):
    disk = _centered(lambda r: 1.0 + r - np.sqrt(1.0 - r**2))
    extremal = ExtremalQ(q=lambda z: z + np.sqrt(1.0 + z**2), sharp=False)
    return disk, (math.sqrt(17.0) - 1.0) / 6.0, extremal, None


def _sine(p):
    disk = _centered(np.sinh)
    extremal = ExtremalQ(q=lambda z: 1.0 + np.sin(z), sharp=False)
    return disk, math.asinh(2.0 / 3.0), extremal, None


def _g1(p):
    n = p["n"]
    disk = _centered(lambda r: 4.0 * n * r**n / (1.0 - r ** (2 * n)))
    rho = (3.0 * n + math.sqrt(9.0 * n**2 + 1.0)) ** (-1.0 / n)
    extremal = ExtremalQ(
        q=lambda z: 1.0 + 4.0 * n * z**n / (1.0 - z ** (2 * n)),
        touches=(RIGHT_AT_0, Touch(CUSP_LEFT, math.pi / n)),
        denominator=lambda z: np.abs(1.0 - z ** (2 * n)),
    )
    f0 = lambda z: z * ((1.0 + z**n) / (1.0 - z**n)) ** 2  # noqa: E731
    return disk, rho, extremal, f0


def _g2_g3_radius(r, n):
    x = r**n
    return (3.0 * n * x + n * x**2) / (1.0 - x**2)


def _g2(p):
    n = p["n"]
    disk = _centered(lambda r: _g2_g3_radius(r, n))
    rho = 4.0 ** (1.0 / n) * (9.0 * n + math.sqrt(81.0 * n**2 + 24.0 * n + 16.0)) ** (-1.0 / n)
    extremal = ExtremalQ(
        q=lambda z: (1.0 + 3.0 * n * z**n + (n - 1.0) * z ** (2 * n)) / (1.0 - z ** (2 * n)),
        touches=(RIGHT_AT_0,),
        denominator=lambda z: np.abs(1.0 - z ** (2 * n)),
    )
    f0 = lambda z: z * (1.0 + z**n) / (1.0 - z**n) ** 2  # noqa: E731
    return disk, rho, extremal, f0


def _g3(p):
    n = p["n"]
    disk = _centered(lambda r: _g2_g3_radius(r, n))
    rho = 4.0 ** (1.0 / n) * (9.0 * n + math.sqrt((4.0 + 9.0 * n) ** 2 - 48.0 * n)) ** (-1.0 / n)
    # logarithmic derivative of z (1 + z^n)^2 / (1 - z^n)
    extremal = ExtremalQ(
        q=lambda z: 1.0 + 2.0 * n * z**n / (1.0 + z**n) + n * z**n / (1.0 - z**n),
        touches=(Touch(CUSP_LEFT, math.pi / n),),
        denominator=lambda z: np.abs(1.0 - z ** (2 * n)),
    )
    f0 = lambda z: z * (1.0 + z**n) ** 2 / (1.0 - z**n)  # noqa: E731
    return disk, rho, extremal, f0


def _g4(p):
    n = p["n"]
    disk = DiskBound(
        center=lambda r: 1.0 / (1.0 - r ** (2 * n)),
        radius=lambda r: ((n + 1.0) * r**n + n * r ** (2 * n)) / (1.0 - r ** (2 * n)),
    )
    rho = 4.0 ** (1.0 / n) * (
        3.0 * (n + 1.0) + math.sqrt((1.0 + 3.0 * n) ** 2 + 36.0 * n)
    ) ** (-1.0 / n)
    touches = (Touch(CUSP_LEFT, math.pi / n),)
    if n == 1:
        # Q is odd in z only for n = 1; otherwise Q(rho) < 5/3
        touches = touches + (RIGHT_AT_0,)
    # logarithmic derivative of z (1 + z^n) / (1 - z^n)^(1/n)
    extremal = ExtremalQ(
        q=lambda z: 1.0 + n * z**n / (1.0 + z**n) + z**n / (1.0 - z**n),
        touches=touches,
        denominator=lambda z: np.abs(1.0 - z ** (2 * n)),
    )
    f0 = lambda z: z * (1.0 + z**n) / (1.0 - z**n) ** (1.0 / n)  # noqa: E731
    return disk, rho, extremal, f0


def _close_to_star(p):
    n, alpha = p["n"], p["alpha"]
    disk = DiskBound(
        center=lambda r: (1.0 + (1.0 - 2.0 * alpha) * r ** (2 * n)) / (1.0 - r ** (2 * n)),
        radius=lambda r: 2.0 * (1.0 + n - alpha) * r**n / (1.0 - r ** (2 * n)),
    )
    c = 1.0 + n - alpha
    rho = (2.0 / (3.0 * c + math.sqrt(9.0 * c**2 + 4.0 * (4.0 - 3.0 * alpha)))) ** (1.0 / n)
    power = (n + 2.0 - 2.0 * alpha) / n
    # logarithmic derivative of z (1 + z^n) / (1 - z^n)^power
    extremal = ExtremalQ(
        q=lambda z: 1.0 + n * z**n / (1.0 + z**n) + n * power * z**n / (1.0 - z**n),
        touches=(RIGHT_AT_0,),
        denominator=lambda z: np.abs(1.0 - z ** (2 * n)),
    )
    f0 = lambda z: z * (1.0 + z**n) / (1.0 - z**n) ** power  # noqa: E731
    return disk, rho, extremal, f0


def _macgregor(p):
    n = p["n"]
    disk = _centered(lambda r: 2.0 * n * r**n / (1.0 - r ** (2 * n)))
    rho = (2.0 / (3.0 * n + math.sqrt(9.0 * n**2 + 4.0))) ** (1.0 / n)
    extremal = ExtremalQ(
        q=lambda z: 1.0 + 2.0 * n * z**n / (1.0 - z ** (2 * n)),
        touches=(RIGHT_AT_0, Touch(CUSP_LEFT, math.pi / n)),
        denominator=lambda z: np.abs(1.0 - z ** (2 * n)),
    )
    f0 = lambda z: z * (1.0 + z**n) / (1.0 - z**n)  # noqa: E731
    return disk, rho, extremal, f0


def _uralegaddi(p):
    n, beta = p["n"], p["beta"]
    # Janowski-type disk with A = 1 - 2 beta, B = -1 in the variable z^n
    disk = DiskBound(
        center=lambda r: (1.0 + (1.0 - 2.0 * beta) * r ** (2 * n)) / (1.0 - r ** (2 * n)),
        radius=lambda r: 2.0 * (beta - 1.0) * r**n / (1.0 - r ** (2 * n)),
    )
    rho = (3.0 * beta - 2.0) ** (-1.0 / n)
    extremal = ExtremalQ(
        q=lambda z: 1.0 - 2.0 * (beta - 1.0) * z**n / (1.0 - z**n),
        touches=(Touch(CUSP_LEFT, 0.0),),
        denominator=lambda z: np.abs(1.0 - z**n),
    )
    f0 = lambda z: z * (1.0 - z**n) ** (2.0 * (beta - 1.0) / n)  # noqa: E731
    return disk, rho, extremal, f0


_BUILDERS = {
    Tag.JANOWSKI: _janowski,
    Tag.STARLIKE: _starlike,
    Tag.CONVEX: _convex,
    Tag.BOOTH: _booth,
    Tag.LEMNISCATE: _lemniscate,
    Tag.EXP: _exp,
    Tag.SHIFTED_LEMNISCATE: _shifted_lemniscate,
    Tag.CARDIOID: _cardioid,
    Tag.RATIONAL: _rational,
    Tag.LUNE: _lune,
    Tag.SINE: _sine,
    Tag.G1: _g1,
    Tag.G2: _g2,
    Tag.G3: _g3,
    Tag.G4: _g4,
    Tag.CLOSE_TO_STAR: _close_to_star,
    Tag.MACGREGOR: _macgregor,
    Tag.URALEGADDI: _uralegaddi,
}


def _as_id(class_id):
    if isinstance(class_id, ClassId):
        return class_id
    return ClassId.make(class_id)


def class_spec(class_id):
    """Assemble the full :class:`ClassSpec` for a class."""
    cid = _as_id(class_id)
    disk, rho, extremal, f0 = _BUILDERS[cid.tag](dict(cid.params))
    return ClassSpec(cid, disk, rho, extremal, f0)


def disk_bound(class_id):
    return class_spec(class_id).disk


def closed_form_radius(class_id):
    return class_spec(class_id).radius


def extremal_q(class_id):
    return class_spec(class_id).extremal


def extremal_f(class_id):
    """Closed-form extremal function, or ``None`` where only its Q is known."""
    return class_spec(class_id).f0


def janowski_part_radii(A, B):
    """Both Janowski branch formulas (uncapped); they must agree at ``B = 0``."""
    return 2.0 / (3.0 * A - B), 2.0 / (3.0 * A - 5.0 * B)


def target_function(class_id):
    """The subordinating function ``phi`` of a Ma-Minda class, if the class is one."""
    cid = _as_id(class_id)
    p = dict(cid.params)
    table = {
        Tag.LEMNISCATE: lambda z: p["alpha"] + (1.0 - p["alpha"]) * np.sqrt(1.0 + z),
        Tag.EXP: lambda z: p["alpha"] + (1.0 - p["alpha"]) * np.exp(z),
        Tag.SHIFTED_LEMNISCATE: phi_rl,
        Tag.LUNE: lambda z: z + np.sqrt(1.0 + z**2),
        Tag.SINE: lambda z: 1.0 + np.sin(z),
        Tag.CARDIOID: lambda z: 1.0 + 4.0 * z / 3.0 + 2.0 * z**2 / 3.0,
        Tag.RATIONAL: lambda z: 1.0 + z / K_RATIONAL * (K_RATIONAL + z) / (K_RATIONAL - z),
        Tag.BOOTH: lambda z: 1.0 + z / (1.0 - p["alpha"] * z**2),
    }
    return table.get(cid.tag)
