"""Partitions, bipartitions, Kostka numbers and symmetric group characters.

Partitions are plain tuples of positive integers in weakly decreasing order,
bipartitions are pairs of such tuples.  Everything is exact: integers and
``fractions.Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial, prod
from collections import Counter

Partition = tuple
Bipartition = tuple


def is_partition(parts) -> bool:
    return all(isinstance(p, int) and p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def make_partition(parts) -> Partition:
    lam = tuple(int(p) for p in parts)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {parts!r}")
    return lam


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple:
    """All partitions of ``n`` in reverse-lexicographic order, e.g. 4, 31, 22, 211, 1111."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(m, cap):
        if m == 0:
            yield ()
            return
        for first in range(min(m, cap), 0, -1):
            for rest in gen(m - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


@lru_cache(maxsize=None)
def bipartitions_of(n: int) -> tuple:
    """All bipartitions (lam, mu) with |lam| + |mu| = n.

    Ordered lexicographically on (lam, mu), each side in the partition order;
    pairs with larger |lam| come first.
    """
    out = []
    for k in range(n, -1, -1):
        for lam in partitions_of(k):
            for mu in partitions_of(n - k):
                out.append((lam, mu))
    return tuple(out)


def transpose(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def multiplicities(lam: Partition) -> Counter:
    return Counter(lam)


def z_value(lam: Partition) -> int:
    """Order of the centralizer of a permutation with cycle type ``lam``."""
    return prod(k**a * factorial(a) for k, a in Counter(lam).items())


def bz_value(lam: Partition, mu: Partition) -> int:
    """Centralizer order of a signed permutation of signed cycle type (lam, mu)."""
    return z_value(lam) * z_value(mu) * 2 ** (len(lam) + len(mu))


def dominates(lam: Partition, mu: Partition) -> bool:
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def compositions_of(n: int):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions_of(n - first):
            yield (first,) + rest


def ordered_set_partitions(S, alpha):
    """All tuples (J_1, ..., J_r) of disjoint sets with union S and |J_i| = alpha_i."""
    S = tuple(sorted(S))
    if sum(alpha) != len(S):
        raise ValueError("composition size does not match the set")

    def rec(rest, parts):
        if not parts:
            yield ()
            return
        for block in combinations(rest, parts[0]):
            left = tuple(x for x in rest if x not in block)
            for tail in rec(left, parts[1:]):
                yield (frozenset(block),) + tail

    return list(rec(S, tuple(alpha)))


# --- semistandard tableaux and Kostka numbers -------------------------------


def _horizontal_strips(inner, outer_cap, k):
    """Partitions nu containing ``inner`` with nu/inner a horizontal strip of size k, nu inside outer_cap."""
    m = len(outer_cap)
    inner = tuple(inner) + (0,) * (m - len(inner))

    def rec(i, left, acc):
        if i == m:
            if left == 0:
                yield tuple(acc)
            return
        hi = outer_cap[i] if i == 0 else min(outer_cap[i], inner[i - 1])
        for v in range(min(hi, inner[i] + left), inner[i] - 1, -1):
            acc.append(v)
            yield from rec(i + 1, left - (v - inner[i]), acc)
            acc.pop()

    yield from rec(0, k, [])


def ssyt(shape: Partition, content):
    """Semistandard tableaux of ``shape`` with the given content, as tuples of rows."""
    shape = tuple(shape)
    content = tuple(content)
    if sum(shape) != sum(content):
        return

    def rec(letter, cur, rows):
        if letter > len(content):
            if cur == shape:
                yield tuple(tuple(r) for r in rows)
            return
        for nu in _horizontal_strips(cur, shape, content[letter - 1]):
            new_rows = [list(r) for r in rows]
            for i, v in enumerate(nu):
                new_rows[i].extend([letter] * (v - cur[i]))
            yield from rec(letter + 1, nu, new_rows)

    yield from rec(1, (0,) * len(shape), [[] for _ in shape])


@lru_cache(maxsize=None)
def kostka_number(lam: Partition, mu) -> int:
    return sum(1 for _ in ssyt(lam, mu))


@lru_cache(maxsize=None)
def kostka_matrix(n: int) -> tuple:
    """K[i][j] = K_{lam_i, mu_j}, indexed by ``partitions_of(n)``."""
    parts = partitions_of(n)
    return tuple(tuple(kostka_number(lam, mu) for mu in parts) for lam in parts)


@lru_cache(maxsize=None)
def inverse_kostka_matrix(n: int) -> tuple:
    K = [[Fraction(x) for x in row] for row in kostka_matrix(n)]
    inv = mat_inverse(K)
    if any(x.denominator != 1 for row in inv for x in row):
        raise ArithmeticError("inverse Kostka matrix is not integral")
    return tuple(tuple(int(x) for x in row) for row in inv)


# --- exact matrices ----------------------------------------------------------


def identity_matrix(n: int):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    if not A:
        return []
    cols = list(zip(*B)) if B else []
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols] for row in A]


def mat_vec(A, v):
    return [sum((a * x for a, x in zip(row, v)), Fraction(0)) for row in A]


def vec_mat(v, A):
    """Row vector times matrix."""
    if not A:
        return []
    return [sum((x * A[i][j] for i, x in enumerate(v)), Fraction(0)) for j in range(len(A[0]))]


def mat_transpose(A):
    return [list(r) for r in zip(*A)]


def mat_inverse(A):
    """Gauss-Jordan inverse over the rationals."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(A)]
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        M[c], M[piv] = M[piv], M[c]
        p = M[c][c]
        M[c] = [x / p for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [row[n:] for row in M]


def kron(A, B):
    """Kronecker product of two matrices given as nested lists."""
    return [
        [a * b for a in ra for b in rb]
        for ra in A
        for rb in B
    ]


def determinant(M):
    """Exact determinant by fraction-valued elimination."""
    n = len(M)
    A = [[Fraction(x) for x in row] for row in M]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        det *= A[c][c]
        for r in range(c + 1, n):
            if A[r][c] != 0:
                f = A[r][c] / A[c][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return det


def permanent(M):
    """Permanent by row expansion, memoized on the set of used columns."""
    n = len(M)
    if n == 0:
        return 1

    @lru_cache(maxsize=None)
    def rec(i, used):
        if i == n:
            return 1
        total = 0
        for j in range(n):
            if not used >> j & 1 and M[i][j] != 0:
                total += M[i][j] * rec(i + 1, used | 1 << j)
        return total

    return rec(0, 0)


# --- characters ----------------------------------------------------------------


def _rim_hooks(lam: Partition, k: int):
    """Yield (smaller partition, height) for each border strip of size k removable from lam."""
    # beta-numbers: removing a k-rim hook is moving a bead from b to b-k
    m = len(lam)
    beta = [lam[i] + (m - 1 - i) for i in range(m)]
    bset = set(beta)
    for b in beta:
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new = sorted((bset - {b}) | {nb}, reverse=True)
        parts = tuple(x - (m - 1 - i) for i, x in enumerate(new))
        yield tuple(p for p in parts if p > 0), height


@lru_cache(maxsize=None)
def sn_character(lam: Partition, mu: Partition) -> int:
    """chi^lam evaluated at cycle type mu (Murnaghan-Nakayama)."""
    if sum(lam) != sum(mu):
        raise ValueError("size mismatch")
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    return sum((-1) ** h * sn_character(nu, rest) for nu, h in _rim_hooks(lam, k))


@lru_cache(maxsize=None)
def character_table(n: int) -> tuple:
    parts = partitions_of(n)
    return tuple(tuple(sn_character(lam, mu) for mu in parts) for lam in parts)


def format_partition(lam) -> str:
    return ",".join(str(p) for p in lam)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "∅", "0", "()"):
        return ()
    return make_partition(int(t) for t in text.split(","))


def format_bipartition(bp) -> str:
    return f"{format_partition(bp[0])}|{format_partition(bp[1])}"


def parse_bipartition(text: str) -> Bipartition:
    if "|" not in text:
        raise ValueError(f"bipartition needs '|': {text!r}")
    a, b = text.split("|", 1)
    return parse_partition(a), parse_partition(b)
