# The football S^2/(Z/n): fixed-point sums against the kernel character.
#
# Z/n rotates the sphere about its poles.  Every non-trivial rotation fixes
# the two poles, so the index of the quotient is a sum of a smooth term
# (the identity, weighted 1/n) and pole terms.

from orbindex import compute, football, index_by_cyclic, index_by_elements, kernel_character
from orbindex.groups import irreducible_representations

m = football(3)
print(m.label)
for c in m.classes():
    print("  class", c.label, "order", c.order, "strata:", [Y.name for Y in m.components[c.index]])

# dolbeault twisted by O(4): H^0 has weights 1, l, ..., l^4 under l = zeta_3
report = compute(m, "dolbeault", "O:4")
print()
print(report.render_table())

# the same number from the two groupings, per representation
print()
print("rho        byElements  byCyclic")
ch = kernel_character(m, "dolbeault", "O:4")
for rho in irreducible_representations(m.group):
    a = index_by_elements(m, "dolbeault", "O:4", rho).total
    b = index_by_cyclic(m, "dolbeault", "O:4", rho).total
    print(f"{rho.name:<10} {str(a):>10}  {str(b):>8}")
print("character of the kernel at g:", ch(1))

# spin: S^2 has no harmonic spinors, and neither lift changes that
for lift in "+-":
    mm = football(5, lift)
    vals = [int(index_by_cyclic(mm, "spin", "O:0", rho).total) for rho in irreducible_representations(mm.group)]
    print(f"football(5), lift {lift}: spin indices {vals}")
