# # Closed-form radii against the disk-bound oracle
#
# Every class comes with a disk |Q_f(z) - c(r)| <= R(r) that holds on
# |z| = r.  The oracle finds the first r where that disk stops fitting in
# the largest real-centred disk of the nephroid domain, without looking at
# the closed form.

# +
from nephroid_radii import ClassId, class_spec, margin, reconcile
from nephroid_radii.solver import parameter_grid

# -
for name in ("starlike", "convex", "cardioid", "rational", "rl", "lune", "sine"):
    res = reconcile(name)
    print(f"{name:10s} closed form {res.closed_form:.9f}  oracle {res.oracle:.9f}  agree {res.agree}")

# -
# The margin g(r) crosses zero exactly at the radius.
cid = ClassId.make("booth", alpha=0.5)
rho = class_spec(cid).radius
for r in (0.5 * rho, 0.9 * rho, rho, 1.1 * rho):
    print(f"r = {r:.6f}   g(r) = {margin(cid, r):+.3e}")

# -
# Over the whole grid only one family disagrees.  For G4 the disk centre
# 1/(1 - r^(2n)) is above 1, so the binding side is 5/3, yet the stated
# radius balances the disk against 1/3.
disagree = [res for res in map(reconcile, parameter_grid()) if not res.agree]
for res in disagree:
    print(f"{str(res.class_id):10s} stated {res.closed_form:.6f}  oracle {res.oracle:.6f}")
