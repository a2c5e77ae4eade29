"""Lower bounds for the number of fixed points when c1*c(n-1)[M] = 0.

The minimal fixed-point count in half-dimension n depends on
r = gcd(m, 12) (n = 2m) or r = gcd(m-1, 12) (n = 2m+1), refined by
square, two-square, three-square and triangularity tests.  The count is
moreover always divisible by 12/r resp. 24/r, so the possible counts
form an arithmetic progression.
"""

from fpbounds import (
    closed_form_bound,
    conjecture_comparison,
    divisibility_modulus,
    divisibility_refined,
    min_fixed_points,
)

print("dim   possible counts      branch")
for dim in range(4, 32, 2):
    n = dim // 2
    res = closed_form_bound(n)
    mod = divisibility_modulus(n)
    values = ", ".join(str(res.value + i * mod) for i in range(3))
    print(f"{dim:>3}   {values + ', ...':<20} {res.branch}")

print()
print("the c1 = 0 refinement (dims 4 and 20): at least 24 fixed points")
for n in (2, 10):
    low = min_fixed_points(n, c1_zero=True)
    mod = divisibility_refined(n, c1_zero=True).modulus_refined
    print(f"  dim {2 * n}: counts {low}, {low + mod}, {low + 2 * mod}, ...")

print()
print("dimensions where the bound reaches floor(n/2)+1 (the conjectured")
print("linear bound) and n+1 (the Hamiltonian bound):")
rows = conjecture_comparison(41)
kos = [2 * r.n for r in rows if r.beats_kosniowski]
ham = [2 * r.n for r in rows if r.beats_hamiltonian]
print(f"  >= floor(n/2)+1 in dims {kos}")
print(f"  >= n+1 in dims {ham}")
