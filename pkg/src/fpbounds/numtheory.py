"""Exact integer arithmetic: factorization, squares and triangular numbers,
and minimal representations as sums of polygonal parts.

The fast paths are the classical criteria (Lagrange, Legendre, Euler,
Gauss, Ewell); bounded breadth-first searches provide independent
brute-force counterparts so every criterion can be cross-checked.
All functions are pure and deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

__all__ = [
    "Unrepresentable",
    "Factorization",
    "DecompositionKind",
    "Decomposition",
    "is_prime",
    "factorize",
    "is_square",
    "is_triangular",
    "triangular",
    "two_squares_criterion",
    "two_triangulars_criterion",
    "is_legendre_form",
    "min_squares",
    "min_triangulars",
    "min_squares_bruteforce",
    "min_triangulars_bruteforce",
]


class Unrepresentable(ValueError):
    """No representation exists under the requested part bound."""


def _sieve_primes(limit: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * limit
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit - 1) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit, p)))
    return tuple(i for i in range(limit) if sieve[i])


# Trial division handles everything below this bound; Pollard rho takes over
# only for cofactors with no prime factor under it.
_TRIAL_PRIMES = _sieve_primes(1000)

# Witness set making Miller-Rabin deterministic for n < 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (exact well past 64 bits)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """Nontrivial factor of composite odd n, Brent's cycle variant.

    Deterministic: the polynomial offset c walks 1, 2, 3, ... until a
    factor splits off, so repeated runs always agree.
    """
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        y, r, q = 2, 1, 1
        g, ys = 1, y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as an ordered tuple of (prime, exponent) pairs."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise ValueError("factor primes must be strictly increasing")
        if any(e < 1 for _, e in self.factors):
            raise ValueError("factor exponents must be positive")

    @property
    def n(self) -> int:
        """The factored integer, reconstructed as the product of prime powers."""
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def exponent(self, prime: int) -> int:
        for p, e in self.factors:
            if p == prime:
                return e
        return 0

    def validate(self) -> None:
        """Full invariant check: every listed prime really is prime."""
        for p, _ in self.factors:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")


def factorize(n: int) -> Factorization:
    """Prime factorization of n >= 1; factorize(1) has an empty factor list."""
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    counts: dict[int, int] = {}
    rem = n
    for p in _TRIAL_PRIMES:
        if p * p > rem:
            break
        while rem % p == 0:
            counts[p] = counts.get(p, 0) + 1
            rem //= p
    if rem > 1:
        stack = [rem]
        while stack:
            a = stack.pop()
            if a == 1:
                continue
            if is_prime(a):
                counts[a] = counts.get(a, 0) + 1
                continue
            d = _pollard_rho(a)
            stack.append(d)
            stack.append(a // d)
    return Factorization(tuple(sorted(counts.items())))


def is_square(n: int) -> bool:
    """True iff n = k*k for some k >= 0."""
    if n < 0:
        raise ValueError("is_square requires n >= 0")
    r = math.isqrt(n)
    return r * r == n


def triangular(k: int) -> int:
    """The k-th triangular number k(k+1)/2."""
    return k * (k + 1) // 2


def is_triangular(n: int) -> bool:
    """True iff n = k(k+1)/2 for some k >= 0."""
    if n < 0:
        raise ValueError("is_triangular requires n >= 0")
    return is_square(8 * n + 1)


def _tri_index(n: int) -> int:
    """Largest k with k(k+1)/2 <= n."""
    return (math.isqrt(8 * n + 1) - 1) // 2


def _free_of_odd_3mod4(f: Factorization) -> bool:
    return all(e % 2 == 0 for p, e in f.factors if p % 4 == 3)


def two_squares_criterion(n: int) -> bool:
    """Euler: n >= 1 is a sum of two squares (zero parts allowed) iff every
    prime factor congruent to 3 mod 4 occurs with even exponent."""
    if n < 1:
        raise ValueError("two_squares_criterion requires n >= 1")
    return _free_of_odd_3mod4(factorize(n))


def two_triangulars_criterion(n: int) -> bool:
    """Ewell: n >= 0 is a sum of two triangular numbers (zero parts allowed)
    iff every prime factor of 4n+1 congruent to 3 mod 4 has even exponent."""
    if n < 0:
        raise ValueError("two_triangulars_criterion requires n >= 0")
    return _free_of_odd_3mod4(factorize(4 * n + 1))


def is_legendre_form(n: int) -> bool:
    """True iff n = 4^k (8t+7), the integers that are not sums of three
    or fewer squares."""
    if n < 0:
        raise ValueError("is_legendre_form requires n >= 0")
    if n == 0:
        return False
    while n % 4 == 0:
        n //= 4
    return n % 8 == 7


class DecompositionKind(Enum):
    SQUARES = "squares"
    TRIANGULARS = "triangulars"

    def part_value(self, k: int) -> int:
        if self is DecompositionKind.SQUARES:
            return k * k
        return k * (k + 1) // 2


@dataclass(frozen=True)
class Decomposition:
    """A representation of `target` as a sum of squares or triangular numbers.

    `parts` lists (generator k, multiplicity) with generators strictly
    increasing; the part contributed by generator k is k^2 or k(k+1)/2.
    """

    kind: DecompositionKind
    parts: tuple[tuple[int, int], ...]
    target: int

    @property
    def count(self) -> int:
        """Total number of parts, multiplicities included."""
        return sum(mult for _, mult in self.parts)

    def validate(self) -> None:
        gens = [k for k, _ in self.parts]
        if gens != sorted(set(gens)):
            raise ValueError("generators must be strictly increasing")
        if any(k < 1 or mult < 1 for k, mult in self.parts):
            raise ValueError("generators and multiplicities must be positive")
        total = sum(mult * self.kind.part_value(k) for k, mult in self.parts)
        if total != self.target:
            raise ValueError(f"parts sum to {total}, expected {self.target}")


def _make_decomposition(kind: DecompositionKind, generators: list[int], target: int) -> Decomposition:
    counts: dict[int, int] = {}
    for k in generators:
        counts[k] = counts.get(k, 0) + 1
    return Decomposition(kind, tuple(sorted(counts.items())), target)


def _greedy_parts(target: int, count: int, hi: int, kind: DecompositionKind) -> list[int] | None:
    """Largest-first search with backtracking for exactly `count` parts
    with generators in 1..hi summing to target."""
    if count == 0:
        return [] if target == 0 else None
    if kind is DecompositionKind.SQUARES:
        top = math.isqrt(target)
    else:
        top = _tri_index(target)
    for k in range(min(hi, top), 0, -1):
        v = kind.part_value(k)
        if v * count < target:
            break
        rest = _greedy_parts(target - v, count - 1, k, kind)
        if rest is not None:
            return [k] + rest
    return None


def min_squares(n: int) -> tuple[int, Decomposition]:
    """Minimal number of positive squares summing to n, with a witness.

    The count comes from the classical criteria: 0 for n=0, 1 for squares,
    2 when the two-squares criterion holds, 4 exactly on 4^k(8t+7), and 3
    otherwise.  The witness is found by bounded largest-first search.
    """
    if n < 0:
        raise ValueError("min_squares requires n >= 0")
    if n == 0:
        return 0, Decomposition(DecompositionKind.SQUARES, (), 0)
    if is_square(n):
        count = 1
    elif two_squares_criterion(n):
        count = 2
    elif is_legendre_form(n):
        count = 4
    else:
        count = 3
    parts = _greedy_parts(n, count, math.isqrt(n), DecompositionKind.SQUARES)
    if parts is None:  # criteria guarantee existence
        raise AssertionError(f"no {count}-square witness for {n}")
    return count, _make_decomposition(DecompositionKind.SQUARES, parts, n)


def min_triangulars(n: int) -> tuple[int, Decomposition]:
    """Minimal number of positive triangular numbers summing to n, with a
    witness: 0 for n=0, 1 for triangular n, 2 under the criterion on 4n+1,
    and 3 otherwise."""
    if n < 0:
        raise ValueError("min_triangulars requires n >= 0")
    if n == 0:
        return 0, Decomposition(DecompositionKind.TRIANGULARS, (), 0)
    if is_triangular(n):
        count = 1
    elif two_triangulars_criterion(n):
        count = 2
    else:
        count = 3
    parts = _greedy_parts(n, count, _tri_index(n), DecompositionKind.TRIANGULARS)
    if parts is None:
        raise AssertionError(f"no {count}-triangular witness for {n}")
    return count, _make_decomposition(DecompositionKind.TRIANGULARS, parts, n)


def _bruteforce_min(n: int, max_generator: int, kind: DecompositionKind) -> tuple[int, Decomposition]:
    """Exact minimal part count with generators bounded by max_generator,
    by breadth-first reachability on bitmasks, plus a greedy witness."""
    if n < 0:
        raise ValueError("target must be >= 0")
    if max_generator < 1:
        raise ValueError("max_generator must be >= 1")
    if n == 0:
        return 0, Decomposition(kind, (), 0)
    values = [(k, kind.part_value(k)) for k in range(1, max_generator + 1)
              if kind.part_value(k) <= n]
    if not values:
        raise Unrepresentable(f"no parts <= {n} with generator bound {max_generator}")
    if len(values) == 1:
        # Only the unit part is available; the count is forced.
        k, v = values[0]
        if n % v:
            raise Unrepresentable(f"{n} is not a multiple of the single part {v}")
        return n // v, _make_decomposition(kind, [k] * (n // v), n)

    full = (1 << (n + 1)) - 1
    levels = [1]
    reach = 1
    while not (reach >> n) & 1:
        nxt = reach
        for _, v in values:
            nxt |= reach << v
        nxt &= full
        if nxt == reach:
            raise Unrepresentable(f"{n} has no representation with generator bound {max_generator}")
        levels.append(nxt)
        reach = nxt
    count = len(levels) - 1

    generators = []
    cur = n
    for level in range(count, 0, -1):
        for k, v in reversed(values):  # largest part first
            if v <= cur and (levels[level - 1] >> (cur - v)) & 1:
                generators.append(k)
                cur -= v
                break
    assert cur == 0
    return count, _make_decomposition(kind, generators, n)


def min_squares_bruteforce(n: int, max_generator: int) -> tuple[int, Decomposition]:
    """Independent oracle for min_squares with parts k^2, 1 <= k <= max_generator."""
    return _bruteforce_min(n, max_generator, DecompositionKind.SQUARES)


def min_triangulars_bruteforce(n: int, max_generator: int) -> tuple[int, Decomposition]:
    """Independent oracle for min_triangulars with parts k(k+1)/2, 1 <= k <= max_generator."""
    return _bruteforce_min(n, max_generator, DecompositionKind.TRIANGULARS)
