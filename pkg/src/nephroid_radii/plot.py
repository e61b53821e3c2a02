"""Deterministic SVG figures: the nephroid, extremal image curves, margins.

The markup is written by hand (paths, circles and text only) so that the
output is a stable, diff-able artifact with no plotting dependency.  Every
coordinate is printed with a fixed number of decimals and the document
carries no timestamp, so identical inputs give identical bytes.
"""

from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

import numpy as np

from .classes import ClassId, class_spec
from .errors import IoError
from .geometry import CUSP_LEFT, CUSP_RIGHT, boundary_point
from .solver import R_MAX, margin

CURVE_SAMPLES = 1024
# square viewport holding the whole domain (|Im| <= 4/3, Re in [0.057, 1.943])
DEFAULT_REAL = (-0.35, 2.35)
DEFAULT_IMAG = (-1.35, 1.35)
_PAD = 0.04
_BOUNDARY_CHECK = 4096


@dataclass(frozen=True)
class Curve:
    """A polyline in the complex plane."""

    points: tuple
    stroke: str = "#1f4e9c"
    width: float = 1.5
    label: str = ""
    dash: str = ""
    closed: bool = True


@dataclass(frozen=True)
class PlotSpec:
    width: int = 800
    height: int = 800
    real: tuple = DEFAULT_REAL
    imag: tuple = DEFAULT_IMAG
    curves: tuple = ()
    output: Optional[Path] = None

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError("width and height must be positive")
        (x0, x1), (y0, y1) = self.real, self.imag
        if not (x0 < x1 and y0 < y1):
            raise ValueError("viewport bounds must be increasing")
        u, v = boundary_point(2.0 * np.pi * np.arange(_BOUNDARY_CHECK) / _BOUNDARY_CHECK)
        if u.min() < x0 or u.max() > x1 or v.min() < y0 or v.max() > y1:
            raise ValueError("viewport must contain the whole nephroid boundary")


@dataclass(frozen=True)
class Transform:
    """Uniform-scale map from the complex plane to SVG pixel coordinates."""

    scale: float
    x_off: float
    y_off: float

    def __call__(self, w):
        w = np.asarray(w, dtype=complex)
        return self.x_off + self.scale * w.real, self.y_off - self.scale * w.imag


def _viewport(spec):
    """Spec viewport grown (never shrunk) to hold every curve point."""
    x0, x1 = spec.real
    y0, y1 = spec.imag
    for curve in spec.curves:
        pts = np.asarray(curve.points, dtype=complex)
        if pts.size == 0:
            continue
        x0, x1 = min(x0, pts.real.min()), max(x1, pts.real.max())
        y0, y1 = min(y0, pts.imag.min()), max(y1, pts.imag.max())
    return (x0, x1), (y0, y1)


def make_transform(spec):
    """Fit the (grown) viewport into the canvas, centred, keeping aspect ratio."""
    (x0, x1), (y0, y1) = _viewport(spec)
    pad_x, pad_y = _PAD * spec.width, _PAD * spec.height
    scale = min((spec.width - 2 * pad_x) / (x1 - x0), (spec.height - 2 * pad_y) / (y1 - y0))
    x_off = spec.width / 2.0 - scale * (x0 + x1) / 2.0
    y_off = spec.height / 2.0 + scale * (y0 + y1) / 2.0
    return Transform(float(scale), float(x_off), float(y_off))


def _num(x):
    s = f"{x:.3f}"
    return "0.000" if s == "-0.000" else s


def _path(xs, ys, closed):
    head = f"M{_num(xs[0])},{_num(ys[0])}"
    body = "".join(f"L{_num(x)},{_num(y)}" for x, y in zip(xs[1:], ys[1:]))
    return head + body + ("Z" if closed else "")


def _escape(text):
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def render(spec, marks=(), title=""):
    """SVG document for ``spec``; ``marks`` is a sequence of ``(point, label)``."""
    tf = make_transform(spec)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.width}" '
        f'height="{spec.height}" viewBox="0 0 {spec.width} {spec.height}">',
        f'<rect width="{spec.width}" height="{spec.height}" fill="#ffffff"/>',
    ]
    (x0, x1), (y0, y1) = _viewport(spec)
    ax, ay = tf(np.array([x0 + 0j, x1 + 0j]))
    bx, by = tf(np.array([1j * y0 + 0.0, 1j * y1 + 0.0]))
    lines.append(
        f'<path d="M{_num(ax[0])},{_num(ay[0])}L{_num(ax[1])},{_num(ay[1])}'
        f'M{_num(bx[0])},{_num(by[0])}L{_num(bx[1])},{_num(by[1])}" '
        'stroke="#bbbbbb" stroke-width="0.75" fill="none"/>'
    )
    for curve in spec.curves:
        pts = np.asarray(curve.points, dtype=complex)
        if pts.size < 2:
            continue
        xs, ys = tf(pts)
        dash = f' stroke-dasharray="{curve.dash}"' if curve.dash else ""
        label = f' data-label="{_escape(curve.label)}"' if curve.label else ""
        lines.append(
            f'<path d="{_path(xs, ys, curve.closed)}" stroke="{curve.stroke}" '
            f'stroke-width="{curve.width:g}" fill="none"{dash}{label}/>'
        )
    for point, text in marks:
        x, y = tf(np.array([complex(point)]))
        lines.append(f'<circle cx="{_num(x[0])}" cy="{_num(y[0])}" r="4" fill="#c0392b"/>')
        lines.append(
            f'<text x="{_num(x[0] + 6)}" y="{_num(y[0] - 6)}" font-family="sans-serif" '
            f'font-size="14">{_escape(text)}</text>'
        )
    if title:
        lines.append(
            f'<text x="{_num(spec.width / 2)}" y="22" text-anchor="middle" '
            f'font-family="sans-serif" font-size="16">{_escape(title)}</text>'
        )
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")


def nephroid_curve(samples=CURVE_SAMPLES):
    t = 2.0 * np.pi * np.arange(samples) / samples
    u, v = boundary_point(t)
    return Curve(tuple(u + 1j * v), stroke="#000000", width=2.0, label="nephroid boundary")


def image_curve(class_id, r, samples=CURVE_SAMPLES):
    """Polyline of ``Q(r e^{it})`` for the extremal Q of the class.

    The declared touch angles are added to the uniform samples so the curve
    passes exactly through the touch points.
    """
    if not 0.0 < r < 1.0:
        raise ValueError("r must lie in (0, 1)")
    spec = class_spec(class_id)
    t = 2.0 * np.pi * np.arange(samples) / samples
    extra = np.mod([touch.angle for touch in spec.extremal.touches], 2.0 * np.pi)
    t = np.unique(np.concatenate([t, extra]))
    w = spec.extremal.q(r * np.exp(1j * t))
    return Curve(tuple(w), stroke="#c0392b", width=1.5, label=f"{spec.class_id} at r={r:.9g}")


_CUSP_MARKS = ((CUSP_LEFT, "1/3"), (CUSP_RIGHT, "5/3"))


def render_nephroid(spec=None):
    spec = spec or PlotSpec()
    spec = replace(spec, curves=(nephroid_curve(),) + tuple(spec.curves))
    return render(spec, marks=_CUSP_MARKS, title="nephroid domain")


def render_sharpness(class_id, r, spec=None):
    """The nephroid boundary with the extremal image of ``|z| = r`` drawn inside it."""
    cid = class_id if isinstance(class_id, ClassId) else ClassId.make(class_id)
    r = min(float(r), R_MAX)
    spec = spec or PlotSpec()
    curves = (nephroid_curve(), image_curve(cid, r)) + tuple(spec.curves)
    spec = replace(spec, curves=curves)
    return render(spec, marks=_CUSP_MARKS, title=f"{cid}, r = {r:.9g}")


def render_margin(class_id, width=800, height=500, samples=CURVE_SAMPLES):
    """Line chart of the containment margin ``g(r)`` over ``0 < r < 1``.

    Radii where the disk centre leaves ``(1/3, 5/3)`` (margin ``-inf``) are
    left out of the polyline.
    """
    cid = class_id if isinstance(class_id, ClassId) else ClassId.make(class_id)
    lo, hi = class_spec(cid).disk.valid_r
    r = np.linspace(lo, min(hi, R_MAX), samples + 1)[1:]
    g = margin(cid, r)
    ok = np.isfinite(g)
    rs, gs = r[ok], g[ok]
    g_lo = min(0.0, gs.min()) if gs.size else -1.0
    g_hi = max(0.0, gs.max()) if gs.size else 1.0
    if g_hi - g_lo < 1e-12:
        g_hi = g_lo + 1.0
    pad = 40.0

    def px(rr, gg):
        x = pad + (width - 2 * pad) * (rr - 0.0) / 1.0
        y = height - pad - (height - 2 * pad) * (gg - g_lo) / (g_hi - g_lo)
        return x, y

    zx, zy = px(np.array([0.0, 1.0]), np.array([0.0, 0.0]))
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="#ffffff"/>',
        f'<path d="M{_num(zx[0])},{_num(zy[0])}L{_num(zx[1])},{_num(zy[1])}" '
        'stroke="#888888" stroke-width="1" fill="none"/>',
    ]
    if rs.size >= 2:
        xs, ys = px(rs, gs)
        lines.append(
            f'<path d="{_path(xs, ys, False)}" stroke="#1f4e9c" stroke-width="1.5" fill="none"/>'
        )
    lines.append(
        f'<text x="{_num(width / 2)}" y="22" text-anchor="middle" font-family="sans-serif" '
        f'font-size="16">{_escape(f"margin g(r) for {cid}")}</text>'
    )
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")


def _fmt_r(r):
    return f"{r:.9g}"


def plot_path(out_dir, class_id, r):
    """``<out_dir>/plots/<class>/<params>_<r>.svg``."""
    cid = class_id if isinstance(class_id, ClassId) else ClassId.make(class_id)
    params = "_".join(f"{k}{v:.9g}" if isinstance(v, float) else f"{k}{v}" for k, v in cid.params)
    return Path(out_dir) / "plots" / cid.tag.value / f"{params or 'default'}_{_fmt_r(r)}.svg"


def write_svg(data, path):
    """Write ``data`` to ``path``, creating parent directories."""
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(data)
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc
    return path
