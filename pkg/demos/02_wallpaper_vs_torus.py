# Crystallographic groups: R^2/p_n against T^2/(Z/n).
#
# p_n = Z^2 x| Z/n acts on the plane with infinitely many rotation centers,
# but only finitely many classes.  Its quotient is the same orbifold as the
# torus with the point group acting, so the indices must agree.

from orbindex import WallpaperGroup, index_by_cyclic, torusrot, wallpaper
from orbindex.groups import irreducible_representations

for name in ("p2", "p3", "p4", "p6"):
    g = WallpaperGroup(name)
    print(f"{name}: {len(g.finite_order_classes())} finite-order classes, "
          f"{len(g.cyclic_subgroup_classes())} cyclic-subgroup classes, "
          f"rotation centers {g.rotation_signature()}")

p4 = WallpaperGroup("p4")
print()
for c in p4.cyclic_subgroup_classes():
    print(f"  {c.label:<18} |C| = {c.order}  centralizer order {c.centralizer_order}")

print()
print("model      op         rho      wallpaper  torus")
for n, name in ((2, "p2"), (3, "p3"), (4, "p4"), (6, "p6")):
    wp, tr = wallpaper(name), torusrot(n)
    for op in ("deRham", "dolbeault"):
        for rw, rt in zip(irreducible_representations(wp.group), irreducible_representations(tr.group)):
            a = index_by_cyclic(wp, op, "O:0", rw).total
            b = index_by_cyclic(tr, op, "O:0", rt).total
            print(f"{name:<10} {op:<10} {rw.name:<8} {str(a):>9}  {str(b):>5}")

# the p4 deRham contributions, one per rotation-center class
r = index_by_cyclic(wallpaper("p4"), "deRham")
print()
for label, v in r.contributions:
    print(f"  {label:<18} {v.to_rational()}")
print("  total", r.total)
