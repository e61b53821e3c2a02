# # Sharpness: pushing circles through an extremal function
#
# At the radius the extremal image of |z| = rho touches a cusp, slightly
# inside it the image is strictly interior, and just past it some image
# point falls outside.  The two non-sharp classes keep a visible gap.

# +
import sys
from pathlib import Path

from nephroid_radii import ClassId, check_sharpness, class_spec
from nephroid_radii.plot import plot_path, render_nephroid, render_sharpness, write_svg

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("demo_output")

# -
for cid in ("cardioid", ClassId.make("booth", alpha=0.9), ClassId.make("g3", n=3), "lune", "sine"):
    rep = check_sharpness(cid)
    touches = ", ".join(f"{v:.6f} at t = {t:+.6f}" for t, v in rep.touch_found) or "none"
    print(f"{str(rep.class_id):16s} {rep.expected:9s} clearance {rep.min_clearance_at_rho:.3e}  "
          f"touches: {touches}  passed {rep.passed}")

# -
# The figures are plain SVG; the same inputs always give the same bytes.
write_svg(render_nephroid(), out / "plots" / "nephroid" / "boundary.svg")
for cid in ("cardioid", ClassId.make("booth", alpha=0.9), "lune"):
    rho = class_spec(cid).radius
    print(write_svg(render_sharpness(cid, rho), plot_path(out, cid, rho)))
