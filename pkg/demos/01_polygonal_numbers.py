"""Tour of the square / triangular number machinery.

Every positive integer is a sum of at most four squares and at most
three triangular numbers.  The interesting questions are when fewer
parts suffice, and the classical criteria answer them exactly:

* one square        iff n is a perfect square,
* two squares       iff every prime factor of n congruent to 3 mod 4
                    occurs with even exponent (Euler),
* three squares     iff n is not of the form 4^k(8t+7) (Legendre),
* two triangulars   iff the same even-exponent condition holds
                    for 4n+1 (Ewell).

This demo reproduces the classical worked examples and cross-checks the
criteria against the brute-force search.
"""

import math

from fpbounds import (
    factorize,
    min_squares,
    min_squares_bruteforce,
    min_triangulars,
    min_triangulars_bruteforce,
)


def show_squares(n):
    count, witness = min_squares(n)
    terms = " + ".join(f"{k}^2" * mult if mult == 1 else f"{mult}*{k}^2"
                       for k, mult in reversed(witness.parts))
    factors = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in factorize(n).factors)
    print(f"  {n} = {factors:<14} needs {count} squares: {n} = {terms}")


def show_triangulars(n):
    count, witness = min_triangulars(n)
    terms = " + ".join(
        f"{k * (k + 1) // 2}" for k, mult in reversed(witness.parts) for _ in range(mult)
    )
    print(f"  {n} needs {count} triangular numbers: {n} = {terms}")


print("minimal numbers of squares")
for n in (245, 105, 60):
    show_squares(n)

print()
print("minimal numbers of triangular numbers")
for n in (106, 59):
    show_triangulars(n)

print()
print("cross-check against exhaustive search (n <= 3000)")
for n in range(3001):
    assert min_squares(n)[0] == min_squares_bruteforce(n, math.isqrt(n) + 1)[0]
    assert min_triangulars(n)[0] == min_triangulars_bruteforce(n, math.isqrt(2 * n) + 1)[0]
print("  criteria and brute force agree everywhere")
