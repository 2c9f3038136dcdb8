# Twisting by bundles: pairing ch(g, E) with the localized classes U^(g).
#
# The untwisted fixed-point data determine a class [U^(g)] for every
# generator of every cyclic class.  Twisted indices are then pairings,
# with no further geometry needed.

from orbindex import decompose, football, fourier_inversion, pair_twist, symprod_s2, uhat_classes

m = football(2)
for c in m.classes():
    u = uhat_classes(m, "dolbeault", c)
    print(c.label, {a: [{m: str(v.to_rational()) for m, v in phi.items()} for phi in per] for a, per in u.functionals.items()})

for k in range(-2, 3):
    r = pair_twist(m, "dolbeault", f"O:{k}")
    print(f"O({k}):", r.total, dict(r.checks))

# reconstruction over a family of twists, for every irreducible rho
d = decompose(symprod_s2(), "dolbeault")
print()
print("symprod_s2:", sum(ok for _, ok in d.checks), "of", len(d.checks), "checks pass;",
      "family rank", d.rank, "of", d.target_dim)

# Fourier inversion: the Lefschetz numbers come back from the indices
print()
for x, lhs, L in fourier_inversion(football(3), "dolbeault", "O:4"):
    print(f"g^{x}: sum_rho index_rho chi_rho(g^-1) = {lhs}   L(g^{x}) = {L}")
