"""Fixed-point profiles and the Chern number c1*c(n-1)[M].

A circle action on a 2n-dimensional compact almost complex manifold with
isolated fixed points assigns to each fixed point the number of negative
weights of its isotropy representation.  Collecting counts N_i gives the
fixed-point profile, and

    c1*c(n-1)[M] = sum_i N_i * (6i(i-1) + (5n - 3n^2)/2).

Two classical examples have vanishing Chern number: the 9-point blow-up
of the projective plane (12 fixed points, dim 4) and the 6-sphere with
its standard action (2 fixed points).  Products preserve the vanishing,
which generates examples in every even dimension >= 4.
"""

from fpbounds import (
    ChernPair,
    FixedPointProfile,
    chern_c1cn1,
    dim6_hamiltonian_classifier,
    product_chern,
)

print("dim 4, the 9-point blow-up: profile (1, 10, 1)")
blowup = FixedPointProfile(2, (1, 10, 1))
print(f"  c1^2[M] = {chern_c1cn1(blowup)}, fixed points = {blowup.total()}")

print()
print("dim 6, the sphere action: profile (0, 1, 1, 0)")
sphere = FixedPointProfile(3, (0, 1, 1, 0))
value = chern_c1cn1(sphere)
print(f"  c1*c2[M] = {value}, fixed points = {sphere.total()}")
print(f"  dim-6 classification: {dim6_hamiltonian_classifier(value).value}")
print("  (a symplectic action on a compact 6-manifold is Hamiltonian iff c1*c2 != 0)")

print()
print("products: c1*c(n-1) stays zero, fixed points multiply")
blowup_pair = ChernPair(0, 12)
sphere_pair = ChernPair(0, 2)
for k, l in [(1, 1), (0, 2), (0, 3), (2, 1)]:
    pair = ChernPair(0, 1)
    for _ in range(k):
        pair = product_chern(pair, blowup_pair)
    for _ in range(l):
        pair = product_chern(pair, sphere_pair)
    dim = 4 * k + 6 * l
    print(f"  {k} blow-up factor(s) x {l} sphere factor(s): dim {dim}, "
          f"c1*c(n-1) = {pair.c1cn1}, fixed points = {pair.euler}")
