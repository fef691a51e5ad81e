"""Tests for the partition polynomials b_l and the moment polynomials P_s.

The closed forms for b_1..b_7 used here were re-derived from the
partition-sum definition; two terms that are sometimes misquoted are
worth flagging: the alpha(3)-term of b_4 carries u^2 (both parts of the
partition 4 = 3 + 1 are odd), and the alpha(7)-term of the odd-only b_7
carries a factor u (from the partition with the single part 7).
"""

import random
from math import comb, factorial

import pytest

from lambdaeq import (
    BContext,
    alpha_context,
    b_eval,
    b_series,
    binomial_moment,
    c_coeff,
    p_poly,
    partitions_of,
)
from lambdaeq._backend import rational

PRIMES_WITH_N = [(3, 2), (5, 4), (7, 1), (11, 2), (13, 4), (23, 1)]


def closed_forms(ctx, n):
    """b_0..b_5 plus the odd-only b_6*, b_7* as explicit polynomials."""
    a2, a3, a4 = ctx.alpha(2), ctx.alpha(3), ctx.alpha(4)
    a5, a7 = ctx.alpha(5), ctx.alpha(7)
    return {
        0: lambda u, v: rational(1),
        1: lambda u, v: -n * u,
        2: lambda u, v: rational(n ** 2 * u ** 2, 2) - n * v * a2,
        3: lambda u, v: -rational(n ** 3 * u ** 3, 6) + n ** 2 * u * v * a2 - n * u * a3,
        4: lambda u, v: (
            rational(n ** 4 * u ** 4, 24)
            - rational(n ** 3 * u ** 2 * v, 2) * a2
            + n ** 2 * u ** 2 * a3
            + rational(n ** 2 * v ** 2, 2) * a2 ** 2
            - n * v * a4
        ),
        5: lambda u, v: (
            -rational(n ** 5 * u ** 5, 120)
            + rational(n ** 4 * u ** 3 * v, 6) * a2
            - rational(n ** 3 * u ** 3, 2) * a3
            - rational(n ** 3 * u * v ** 2, 2) * a2 ** 2
            + n ** 2 * u * v * a4
            + n ** 2 * u * v * a3 * a2
            - n * u * a5
        ),
        # odd-only (v = 0) closed forms
        6: lambda u, v: (
            rational(n ** 6 * u ** 6, 720)
            + rational(n ** 4 * u ** 4, 6) * a3
            + rational(n ** 2 * u ** 2, 2) * a3 ** 2
            + n ** 2 * u ** 2 * a5
        ),
        7: lambda u, v: (
            -rational(n ** 7 * u ** 7, 5040)
            - rational(n ** 5 * u ** 5, 24) * a3
            - rational(n ** 3 * u ** 3, 2) * a5
            - rational(n ** 3 * u ** 3, 2) * a3 ** 2
            - n * u * a7
        ),
    }


def test_b0_is_one():
    for p, n in PRIMES_WITH_N:
        bc = BContext(alpha_context(p), n)
        assert b_eval(bc, 0, 17, -2) == 1
        assert b_series(bc, 0, 17, -2) == [1]


def test_b1_example():
    bc = BContext(alpha_context(3), 2)
    assert b_eval(bc, 1, 5, 1) == -10


def test_b2_hand_value():
    bc = BContext(alpha_context(5), 4)
    assert b_eval(bc, 2, 1, 1) == 14  # 16/2 - 4*(-3/2)


def test_closed_form_table_at_random_rational_points():
    rng = random.Random(1887)
    for p in (5, 11, 23):
        n = {5: 4, 11: 2, 23: 1}[p]
        ctx = alpha_context(p)
        bc = BContext(ctx, n)
        table = closed_forms(ctx, n)
        for _ in range(10):
            u = rational(rng.randint(-9, 9), rng.randint(1, 5))
            v = rational(rng.randint(-9, 9), rng.randint(1, 5))
            for l in range(6):
                assert b_eval(bc, l, u, v) == table[l](u, v), (p, l, u, v)
            for l in (6, 7):  # odd-only forms: second variable zero
                assert b_eval(bc, l, u, 0) == table[l](u, 0), (p, l, u)


def _partition_terms(p, l):
    ctx = alpha_context(p)
    return [
        (j.norm, j.odd_count, j.even_count, ctx.partition_weight(j))
        for j in partitions_of(l)
    ]


def test_recurrence_matches_partition_sum_full_grid():
    # same grid the module contract names: l <= 25, u,v in {0,1,3,5,-2}^2,
    # p in {3,5,7,11,13}, every legal n
    points = (0, 1, 3, 5, -2)
    for p in (3, 5, 7, 11, 13):
        terms = {l: _partition_terms(p, l) for l in range(26)}
        for n in (1, 2, 4):
            bc = BContext(alpha_context(p), n)
            for u in points:
                for v in points:
                    got = b_series(bc, 25, u, v)
                    for l in range(26):
                        expected = sum(
                            ((-n) ** norm) * (u ** jo) * (v ** je) * w
                            for norm, jo, je, w in terms[l]
                        )
                        assert got[l] == expected, (p, n, u, v, l)


def test_recurrence_matches_b_eval_directly():
    for p, n in ((3, 1), (5, 4), (13, 2)):
        bc = BContext(alpha_context(p), n)
        for u, v in ((0, 0), (1, 1), (3, 1), (rational(5, 2), rational(-1, 3))):
            series = b_series(bc, 12, u, v)
            for l in range(13):
                assert series[l] == b_eval(bc, l, u, v)


def test_leading_term_by_divided_differences():
    # b_l(u, 0) is degree l in u with top coefficient (-n)^l / l!; the l-th
    # finite difference over u = 0..l therefore equals (-n)^l exactly.
    for p in (5, 11):
        for n in (1, 2, 4):
            bc = BContext(alpha_context(p), n)
            for l in range(9):
                diff = sum(
                    (-1) ** (l - j) * comb(l, j) * b_eval(bc, l, j, 0)
                    for j in range(l + 1)
                )
                assert diff == (-n) ** l, (p, n, l)


def test_series_exp_zero_input():
    bc = BContext(alpha_context(5), 4)
    assert b_series(bc, 2, 0, 0) == [1, 0, 0]


def test_enumeration_threshold_enforced():
    bc = BContext(alpha_context(5), 4)
    with pytest.raises(ValueError):
        b_eval(bc, 31, 1, 1)
    assert b_eval(bc, 8, 1, 1, threshold=10) == b_series(bc, 8, 1, 1)[8]


def test_bcontext_rejects_bad_n():
    for bad in (0, 3, 8, -1):
        with pytest.raises(ValueError):
            BContext(alpha_context(5), bad)


def test_p_poly_base_cases():
    for m in range(11):
        assert p_poly(0, m) == 1
    assert p_poly(1, 3) == rational(3, 2)
    assert p_poly(2, 3) == rational(5, 4)


def test_p_poly_closed_form_table():
    for m in range(1, 11):
        assert p_poly(1, m) == rational(m, 2)
        assert p_poly(2, m) == rational(m * (3 * m + 1), 24)
        assert p_poly(3, m) == rational(m ** 2 * (m + 1), 48)
        assert p_poly(4, m) == rational(
            m * (-2 + 5 * m + 30 * m ** 2 + 15 * m ** 3), 8 * factorial(6)
        )


def test_c_coeff_values():
    assert c_coeff(0, 0) == 1
    assert c_coeff(1, 1) == rational(1, 2)
    assert c_coeff(1, 0) == 0
    assert c_coeff(2, 3) == 0


def test_c_expansion_reproduces_p_poly():
    for s in range(5):
        for m in range(11):
            total = sum(c_coeff(s, r) * comb(m, r) for r in range(s + 1))
            assert total == p_poly(s, m), (s, m)


def test_binomial_moment_examples():
    assert binomial_moment(2, 3) == 0  # 3 - 12 + 9
    assert binomial_moment(3, 3) == 6  # 3 - 24 + 27
    assert binomial_moment(0, 1) == 0  # 0^0 = 1 makes it -1 + 1


def test_binomial_moment_vanishes_below_degree():
    for m in range(1, 13):
        for N in range(m):
            assert binomial_moment(N, m) == 0, (N, m)


def test_binomial_moment_matches_p_poly():
    for m in range(1, 11):
        for N in range(m, m + 5):
            expected = (-1) ** (m - 1) * p_poly(N - m, m) * factorial(N)
            assert binomial_moment(N, m) == expected, (N, m)
