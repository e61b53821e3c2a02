"""Small numerical helpers shared by the geometry and verification code."""

import numpy as np

INV_PHI = (np.sqrt(5.0) - 1.0) / 2.0


def golden_section_min(f, lo, hi, iterations=48):
    """Minimise ``f`` on ``[lo, hi]`` by golden-section search.

    ``lo`` and ``hi`` may be arrays, in which case one independent search is
    run per element and ``f`` must accept and return arrays of that shape.
    The searches run for a fixed number of iterations so that every element
    shrinks its bracket by the same factor (``0.618**iterations``).

    Returns ``(x_min, f_min)``.  The bracket endpoints are included in the
    final comparison so a minimum sitting on an endpoint is not lost.
    """
    a = np.array(lo, dtype=float)
    b = np.array(hi, dtype=float)
    fa0, fb0 = f(a), f(b)
    x1 = b - INV_PHI * (b - a)
    x2 = a + INV_PHI * (b - a)
    f1, f2 = f(x1), f(x2)
    a_end, b_end = a.copy(), b.copy()
    for _ in range(iterations):
        left = f1 <= f2
        # keep [a, x2] where f1 wins, [x1, b] otherwise
        b = np.where(left, x2, b)
        a = np.where(left, a, x1)
        new_x = np.where(left, b - INV_PHI * (b - a), a + INV_PHI * (b - a))
        f_new = f(new_x)
        x2, f2, x1, f1 = (
            np.where(left, x1, new_x),
            np.where(left, f1, f_new),
            np.where(left, new_x, x2),
            np.where(left, f_new, f2),
        )
    x = np.where(f1 <= f2, x1, x2)
    fx = np.minimum(f1, f2)
    x = np.where(fa0 < fx, a_end, x)
    fx = np.minimum(fx, fa0)
    x = np.where(fb0 < fx, b_end, x)
    fx = np.minimum(fx, fb0)
    if x.ndim == 0:
        return float(x), float(fx)
    return x, fx
