"""Acceptance suite: every criterion runs at its stated tolerance (all
exact) and prints one pass/fail line.  Run with `pytest -s` to see the
lines for passing criteria too."""

import contextlib
import math
import random
import time

from fpbounds.bounds import (
    closed_form_bound,
    divisibility_hirzebruch,
    divisibility_modulus,
    divisibility_refined,
    min_fixed_points,
)
from fpbounds.chern import (
    ChernPair,
    FixedPointProfile,
    Parity,
    ReducedProfile,
    chern_c1cn1,
    expand,
    g1,
    g2,
    product_chern,
)
from fpbounds.minimizer import enumerate_feasible, minimize_even, minimize_odd
from fpbounds.numtheory import (
    min_squares,
    min_squares_bruteforce,
    min_triangulars,
    min_triangulars_bruteforce,
)


@contextlib.contextmanager
def criterion(num, description, budget_s):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"FAIL criterion {num}: {description}")
        raise
    elapsed = time.perf_counter() - start
    ok = elapsed < budget_s
    print(
        f"{'PASS' if ok else 'FAIL'} criterion {num}: {description} "
        f"({elapsed:.2f}s, budget {budget_s}s)"
    )
    assert ok, f"criterion {num} exceeded its {budget_s}s budget ({elapsed:.2f}s)"


# Summary table, dims 4..30: (min count, modulus, Kosniowski, Hamiltonian).
SUMMARY_TABLE = {
    4: (12, 12, 2, 3),
    6: (2, 2, 2, 4),
    8: (6, 6, 3, 5),
    10: (24, 24, 3, 6),
    12: (4, 4, 4, 7),
    14: (12, 12, 4, 8),
    16: (3, 3, 5, 9),
    18: (8, 8, 5, 10),
    20: (12, 12, 6, 11),
    22: (6, 6, 6, 12),
    24: (2, 2, 7, 13),
    26: (24, 24, 7, 14),
    28: (12, 12, 8, 15),
    30: (4, 4, 8, 16),
}

STARRED_DIMS = {4, 20}  # the c1 = 0 variant applies: values 24, 48, 72


def test_criterion_1_summary_table():
    with criterion(1, "summary table dims 4..30 incl. starred c1=0 variants", 1):
        for dim, (low, mod, kos, ham) in SUMMARY_TABLE.items():
            n = dim // 2
            assert min_fixed_points(n) == low, dim
            assert divisibility_modulus(n) == mod, dim
            assert n // 2 + 1 == kos, dim
            assert n + 1 == ham, dim
        for dim in STARRED_DIMS:
            n = dim // 2
            low = min_fixed_points(n, c1_zero=True)
            mod = divisibility_refined(n, c1_zero=True).modulus_refined
            assert (low, low + mod, low + 2 * mod) == (24, 48, 72), dim


# Even-case examples: n -> (m, r, value, branch).
EVEN_TABLE = {
    26: (13, 1, 12, "even/r=1"),
    20: (10, 2, 6, "even/r=2/not-28-mod-32"),
    28: (14, 2, 12, "even/r=2/28-mod-32"),
    54: (27, 3, 4, "even/r=3/Euler"),
    18: (9, 3, 8, "even/r=3/non-Euler"),
    32: (16, 4, 3, "even/r=4/n-2-square"),
    40: (20, 4, 6, "even/r=4/legendre-ok"),
    112: (56, 4, 9, "even/r=4/legendre-fails"),
    108: (54, 6, 2, "even/r=6/n-12-square"),
    60: (30, 6, 4, "even/r=6/Euler"),
    180: (90, 6, 6, "even/r=6/not-28-mod-32"),
    252: (126, 6, 8, "even/r=6/28-mod-32"),
    48: (24, 12, 2, "even/r=12/n-12-square"),
    72: (36, 12, 3, "even/r=12/n-2-square"),
    24: (12, 12, 4, "even/r=12/Euler"),
    144: (72, 12, 6, "even/r=12/legendre-ok"),
    1008: (504, 12, 7, "even/r=12/legendre-fails"),
}


def test_criterion_2_even_case_table():
    with criterion(2, "even-case table (17 rows, values and branches)", 5):
        assert len(EVEN_TABLE) == 17
        for n, (m, r, value, branch) in EVEN_TABLE.items():
            res = closed_form_bound(n)
            assert (res.m, res.r, res.value, res.branch) == (m, r, value, branch), n


ODD_TABLE = {
    39: (19, 6, 4),
    63: (31, 6, 8),
    75: (37, 12, 2),
    51: (25, 12, 4),
    99: (49, 12, 6),
}


def test_criterion_3_odd_case_table():
    with criterion(3, "odd-case table (5 rows, values and r)", 1):
        for n, (m, r, value) in ODD_TABLE.items():
            res = closed_form_bound(n)
            assert (res.m, res.r, res.value) == (m, r, value), n
        assert sorted(v for _, _, v in ODD_TABLE.values()) == [2, 4, 4, 6, 8]


def test_criterion_4_l_search_agreement():
    with criterion(4, "closed form vs l-search for all m <= 200, both parities", 60):
        for m in range(1, 201):
            assert minimize_even(m).minimum == closed_form_bound(2 * m).value, m
            assert minimize_odd(m).minimum == closed_form_bound(2 * m + 1).value, m


def test_criterion_5_lattice_agreement():
    with criterion(5, "lattice enumeration vs closed form for n <= 30 (cap 48)", 120):
        for n in range(2, 31):
            feasible = enumerate_feasible(n, value_cap=48)
            assert feasible, n
            assert feasible[0].minimum == closed_form_bound(n).value, n
            modulus = divisibility_modulus(n)
            for o in feasible:
                assert o.minimum % modulus == 0, (n, o.minimum)


def _reach_levels(values, limit, max_level):
    """Breadth-first reachability of sums of `values`: bit i of level c is
    set iff i is a sum of at most c parts."""
    full = (1 << (limit + 1)) - 1
    levels = [1]
    reach = 1
    for _ in range(max_level):
        nxt = reach
        for v in values:
            nxt |= reach << v
        nxt &= full
        levels.append(nxt)
        reach = nxt
    return levels


def _oracle_count(levels, n):
    for c, mask in enumerate(levels):
        if (mask >> n) & 1:
            return c
    raise AssertionError(f"{n} unreachable within {len(levels) - 1} parts")


def test_criterion_6_polygonal_minima():
    with criterion(6, "square/triangular minima vs brute force for n <= 10^5", 60):
        limit = 10**5
        squares = [k * k for k in range(1, math.isqrt(limit) + 1)]
        tris = [k * (k + 1) // 2 for k in range(1, limit) if k * (k + 1) // 2 <= limit]
        sq_levels = _reach_levels(squares, limit, 4)
        tri_levels = _reach_levels(tris, limit, 3)
        for n in range(limit + 1):
            assert min_squares(n)[0] == _oracle_count(sq_levels, n), n
            assert min_triangulars(n)[0] == _oracle_count(tri_levels, n), n
        # Worked examples reproduce exactly.
        assert min_squares(245)[0] == 2
        assert min_squares(105)[0] == 3
        assert min_squares(60)[0] == 4
        assert min_triangulars(106)[0] == 2
        assert min_triangulars(59)[0] == 3
        # The per-value bounded oracle agrees on a dense prefix.
        for n in range(0, 2001):
            assert min_squares(n)[0] == min_squares_bruteforce(n, math.isqrt(n) + 1)[0]
            assert (
                min_triangulars(n)[0]
                == min_triangulars_bruteforce(n, math.isqrt(2 * n) + 1)[0]
            )
        # Four squares are needed exactly on 4^k(8t+7), generated directly.
        legendre = set()
        power = 1
        while power <= limit:
            t = 0
            while power * (8 * t + 7) <= limit:
                legendre.add(power * (8 * t + 7))
                t += 1
            power *= 4
        for n in range(limit + 1):
            assert ((sq_levels[3] >> n) & 1 == 0) == (n in legendre), n


def test_criterion_7_chern_identity():
    with criterion(7, "Chern identity on 10^4 random reduced profiles", 10):
        rng = random.Random(20260811)
        checked = 0
        while checked < 10**4:
            parity = rng.choice([Parity.EVEN, Parity.ODD])
            m = rng.randint(1 if parity is Parity.EVEN else 0, 20)
            counts = tuple(rng.randint(0, 50) for _ in range(m + 1))
            if sum(counts) == 0:
                continue
            rp = ReducedProfile(m, counts, parity)
            full = expand(rp)
            if parity is Parity.EVEN:
                assert chern_c1cn1(full) == g1(rp)
            else:
                assert chern_c1cn1(full) == 2 * g2(rp)
            checked += 1
        for a in range(51):
            for b in range(51):
                if a == 0 and b == 0:
                    continue
                assert chern_c1cn1(FixedPointProfile(2, (a, b, a))) == 10 * a - b


def test_criterion_8_example_fixtures():
    with criterion(8, "example fixtures and product totals", 1):
        assert chern_c1cn1(FixedPointProfile(2, (1, 10, 1))) == 0
        assert FixedPointProfile(2, (1, 10, 1)).total() == 12
        assert chern_c1cn1(FixedPointProfile(3, (0, 1, 1, 0))) == 0
        assert FixedPointProfile(3, (0, 1, 1, 0)).total() == 2

        dim4 = ChernPair(0, 12)   # the 12-point blow-up surface
        dim6 = ChernPair(0, 2)    # the 2-point sphere action
        for k in range(5):
            for l in range(5):
                if k + l == 0 or k + l > 4:
                    continue
                pair = ChernPair(0, 1)
                for _ in range(k):
                    pair = product_chern(pair, dim4)
                for _ in range(l):
                    pair = product_chern(pair, dim6)
                assert pair.c1cn1 == 0
                assert pair.euler == 2**l * 12**k

        def iterated(k, l):
            pair = ChernPair(0, 1)
            for _ in range(k):
                pair = product_chern(pair, dim4)
            for _ in range(l):
                pair = product_chern(pair, dim6)
            return pair.euler

        assert iterated(1, 1) == closed_form_bound(5).value == 24
        assert iterated(0, 2) == closed_form_bound(6).value == 4
        assert iterated(0, 3) == closed_form_bound(9).value == 8


# Residue-based moduli when 3 does not divide n: n mod 8 -> modulus.
RESIDUE_TABLE = {0: 3, 1: 24, 2: 12, 3: 6, 4: 6, 5: 24, 6: 12, 7: 12}


def test_criterion_9_refined_divisibility():
    with criterion(9, "refined divisibility table for n <= 10^4", 5):
        for n in range(2, 10001):
            got = divisibility_refined(n).modulus_refined
            if n % 3 != 0:
                assert got == RESIDUE_TABLE[n % 8], n
            else:
                assert got == divisibility_hirzebruch(n), n
