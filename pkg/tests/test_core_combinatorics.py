from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest
import sympy
from hypothesis import given, strategies as st

from bcchroma import core_combinatorics as cc


def _p(n):
    # partition numbers by Euler's pentagonal recurrence, an outside count
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k = 1
        while True:
            g1, g2 = k * (3 * k - 1) // 2, k * (3 * k + 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            p[m] += sign * p[m - g1]
            if g2 <= m:
                p[m] += sign * p[m - g2]
            k += 1
    return p[n]


def test_partitions_of_small():
    assert cc.partitions_of(0) == ((),)
    assert cc.partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert len(cc.partitions_of(6)) == 11


@pytest.mark.parametrize("n", range(0, 11))
def test_partition_counts(n):
    parts = cc.partitions_of(n)
    assert len(parts) == len(set(parts)) == _p(n)
    assert all(sum(lam) == n and cc.is_partition(lam) for lam in parts)
    assert list(parts) == sorted(parts, reverse=True)


def test_bipartition_order():
    bips = cc.bipartitions_of(2)
    assert bips[0] == ((2,), ()) and bips[-1] == ((), (1, 1))
    assert len(cc.bipartitions_of(3)) == 10
    sizes = [sum(l) for l, _ in cc.bipartitions_of(4)]
    assert sizes == sorted(sizes, reverse=True)


def test_transpose_examples():
    assert cc.transpose((5,)) == (1,) * 5
    assert cc.transpose(()) == ()
    assert cc.transpose((3, 1)) == (2, 1, 1)


@given(st.integers(0, 8).flatmap(lambda n: st.sampled_from(cc.partitions_of(n))))
def test_transpose_involution(lam):
    assert cc.transpose(cc.transpose(lam)) == lam
    assert sum(cc.transpose(lam)) == sum(lam)


def test_z_values():
    assert cc.z_value((1, 1, 1, 1)) == 24
    assert cc.z_value((3,)) == 3
    assert cc.z_value((2, 2, 1)) == 8


@pytest.mark.parametrize("n", range(1, 9))
def test_class_sizes_sum(n):
    assert sum(Fraction(factorial(n), cc.z_value(lam)) for lam in cc.partitions_of(n)) == factorial(n)


def test_kostka_examples():
    assert cc.kostka_matrix(1) == ((1,),)
    parts = cc.partitions_of(3)
    K = cc.kostka_matrix(3)
    assert K[parts.index((2, 1))][parts.index((1, 1, 1))] == 2
    Ki = cc.inverse_kostka_matrix(3)
    assert cc.mat_mul(Ki, K) == cc.identity_matrix(3)


def _ssyt_brute(shape, content):
    # fill cells with the multiset of letters in every order, keep the semistandard ones
    letters = [i + 1 for i, c in enumerate(content) for _ in range(c)]
    cells = [(r, c) for r, p in enumerate(shape) for c in range(p)]
    seen = set()
    for perm in permutations(letters):
        T = dict(zip(cells, perm))
        ok = all(T[(r, c)] <= T[(r, c + 1)] for r, c in cells if (r, c + 1) in T)
        ok = ok and all(T[(r, c)] < T[(r + 1, c)] for r, c in cells if (r + 1, c) in T)
        if ok:
            seen.add(perm)
    return len(seen)


@pytest.mark.parametrize("n", range(1, 6))
def test_kostka_against_brute_force(n):
    parts = cc.partitions_of(n)
    K = cc.kostka_matrix(n)
    for i, lam in enumerate(parts):
        for j, mu in enumerate(parts):
            assert K[i][j] == _ssyt_brute(lam, mu)


@pytest.mark.parametrize("n", range(1, 8))
def test_kostka_unitriangular_and_inverse(n):
    K = cc.kostka_matrix(n)
    N = len(K)
    assert all(K[i][i] == 1 for i in range(N))
    assert all(K[i][j] == 0 for i in range(N) for j in range(i))
    Ki = cc.inverse_kostka_matrix(n)
    assert all(isinstance(x, int) for row in Ki for x in row)
    assert cc.mat_mul(K, Ki) == cc.identity_matrix(N)


def test_character_examples():
    for mu in cc.partitions_of(5):
        assert cc.sn_character((5,), mu) == 1
        assert cc.sn_character((1,) * 5, mu) == (-1) ** (5 - len(mu))
    assert cc.sn_character((2, 1), (1, 1, 1)) == 2


def _cycle_type(w):
    seen, out = set(), []
    for i in range(len(w)):
        if i in seen:
            continue
        k, j = 0, i
        while j not in seen:
            seen.add(j)
            j = w[j]
            k += 1
        out.append(k)
    return tuple(sorted(out, reverse=True))


@pytest.mark.parametrize("n", range(1, 6))
def test_characters_are_orthonormal_class_functions(n):
    # row orthogonality over the group itself, an oracle independent of the MN recursion
    parts = cc.partitions_of(n)
    perms = list(permutations(range(n)))
    types = [_cycle_type(w) for w in perms]
    for a in parts:
        for b in parts:
            s = sum(cc.sn_character(a, t) * cc.sn_character(b, t) for t in types)
            assert s == (factorial(n) if a == b else 0)


@pytest.mark.parametrize("n", range(1, 7))
def test_column_orthogonality(n):
    parts = cc.partitions_of(n)
    for mu in parts:
        for nu in parts:
            s = sum(cc.sn_character(lam, mu) * cc.sn_character(lam, nu) for lam in parts)
            assert s == (cc.z_value(mu) if mu == nu else 0)


def test_ordered_set_partitions():
    assert cc.ordered_set_partitions({1}, (1,)) == [(frozenset({1}),)]
    assert len(cc.ordered_set_partitions({1, 2, 3}, (2, 1))) == 3
    assert len(cc.ordered_set_partitions({1, 2, 3, 4}, (2, 2))) == 6


@given(st.lists(st.integers(1, 3), min_size=1, max_size=4))
def test_ordered_set_partitions_multinomial(alpha):
    n = sum(alpha)
    out = cc.ordered_set_partitions(range(n), alpha)
    expect = factorial(n)
    for a in alpha:
        expect //= factorial(a)
    assert len(out) == len(set(out)) == expect
    for blocks in out:
        assert frozenset().union(*blocks) == frozenset(range(n))
        assert [len(b) for b in blocks] == alpha


@given(st.lists(st.lists(st.integers(-4, 4), min_size=4, max_size=4), min_size=4, max_size=4))
def test_det_and_permanent_match_sympy(rows):
    M = sympy.Matrix(rows)
    assert cc.determinant(rows) == M.det()
    assert cc.permanent(rows) == M.per()


def test_bipartition_text_round_trip():
    for bp in cc.bipartitions_of(4):
        assert cc.parse_bipartition(cc.format_bipartition(bp)) == bp
    assert cc.parse_bipartition("∅|2,1") == ((), (2, 1))
    with pytest.raises(ValueError):
        cc.parse_bipartition("21")
