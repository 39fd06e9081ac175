"""Signed permutations: the hyperoctahedral group B_n inside S_[-n,n].

An element is stored by its short one-line word w_1 ... w_n; the long word
w_{-n} ... w_{-1} w_1 ... w_n follows from w_{-i} = -w_i.  Unsigned
permutations are ordinary tuples with entries 1..n.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product

from .core_combinatorics import Bipartition


class SignedPermutation(tuple):
    """Short one-line word of an element of B_n.

    Behaves as a tuple, so hashing and equality are those of the word.
    """

    def __new__(cls, word):
        word = tuple(int(x) for x in word)
        n = len(word)
        if 0 in word:
            raise ValueError("zero is not a valid letter")
        if any(abs(x) > n for x in word):
            raise ValueError(f"letter out of range for B_{n}: {word}")
        if len({abs(x) for x in word}) != n:
            raise ValueError(f"duplicate absolute value in {word}")
        return super().__new__(cls, word)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return apply(self, i)

    def __mul__(self, other):
        return multiply(self, other)

    def long_word(self) -> tuple:
        return long_word(self)

    def __repr__(self):
        return f"SignedPermutation({format_perm(self)!r})"


def identity(n: int) -> SignedPermutation:
    return SignedPermutation(range(1, n + 1))


def parse(text: str) -> SignedPermutation:
    """Parse '-3 1 2 4' (or 'ol3 1 2 4'); commas are accepted as separators."""
    toks = text.replace(",", " ").split()
    word = []
    for tok in toks:
        if tok.startswith("ol"):
            tok = "-" + tok[2:]
        try:
            word.append(int(tok))
        except ValueError:
            raise ValueError(f"bad token {tok!r}") from None
    return SignedPermutation(word)


def format_perm(w) -> str:
    return " ".join(str(x) for x in w)


def apply(w, i: int) -> int:
    """w(i) for nonzero i, with w(-i) = -w(i)."""
    if i > 0:
        return w[i - 1]
    if i < 0:
        return -w[-i - 1]
    raise ValueError("0 is not in the domain")


def long_word(w) -> tuple:
    n = len(w)
    return tuple(-w[i - 1] for i in range(n, 0, -1)) + tuple(w)


def multiply(u, v):
    """Product u*v of words: letter i of u*v is v applied to letter i of u.

    With this rule a word w = s_1 s_2 ... s_m built from generators acting on
    the right reproduces the one-line notation obtained by applying the
    generators to positions from left to right.
    """
    if len(u) != len(v):
        raise ValueError("mismatched n")
    out = tuple(apply(v, x) for x in u)
    if isinstance(u, SignedPermutation) or isinstance(v, SignedPermutation):
        return SignedPermutation(out)
    return out


def product_of(words, n: int):
    w = tuple(range(1, n + 1))
    for s in words:
        w = tuple(apply(s, x) for x in w)
    return w


def inverse(w):
    n = len(w)
    out = [0] * n
    for i, x in enumerate(w, start=1):
        out[abs(x) - 1] = i if x > 0 else -i
    if isinstance(w, SignedPermutation):
        return SignedPermutation(out)
    return tuple(out)


def phi(w) -> tuple:
    """Forget signs: the homomorphism B_n -> S_n."""
    return tuple(abs(x) for x in w)


def inversions(word) -> int:
    return sum(1 for i, j in combinations(range(len(word)), 2) if word[i] > word[j])


def lengths(w) -> tuple:
    """(ell, ell_t, ell_s) with ell = inv(w_1..w_n) + sum of |w_i| over negative letters."""
    neg = [x for x in w if x < 0]
    ell = inversions(w) + sum(-x for x in neg)
    ell_t = len(neg)
    return ell, ell_t, ell - ell_t


def length(w) -> int:
    return lengths(w)[0]


def sign_A(w) -> int:
    return -1 if inversions(w) % 2 else 1


def cycle_type(w) -> tuple:
    """Cycle type of an unsigned permutation, as a partition."""
    n = len(w)
    seen = [False] * (n + 1)
    out = []
    for i in range(1, n + 1):
        if not seen[i]:
            k, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = w[j - 1]
                k += 1
            out.append(k)
    return tuple(sorted(out, reverse=True))


def signed_cycle_type(w) -> Bipartition:
    """(lam, mu): sizes of positive and negative cycles of phi(w).

    A cycle is negative when it carries an odd number of negative letters.
    """
    n = len(w)
    seen = [False] * (n + 1)
    pos, neg = [], []
    for i in range(1, n + 1):
        if seen[i]:
            continue
        k, signs, j = 0, 0, i
        while not seen[j]:
            seen[j] = True
            x = w[j - 1]
            signs += x < 0
            j = abs(x)
            k += 1
        (neg if signs % 2 else pos).append(k)
    return tuple(sorted(pos, reverse=True)), tuple(sorted(neg, reverse=True))


# --- generators and reversals ------------------------------------------------


def generator_t(n: int) -> SignedPermutation:
    return SignedPermutation((-1,) + tuple(range(2, n + 1)))


def generator_s(i: int, n: int) -> SignedPermutation:
    """s'_i swapping i and i+1 (and -i, -i-1), 1 <= i < n."""
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return SignedPermutation(w)


def generators(n: int) -> list:
    return [generator_t(n)] + [generator_s(i, n) for i in range(1, n)]


def nonzero_range(a: int, b: int) -> list:
    return [x for x in range(a, b + 1) if x != 0]


def reversal_A(a: int, b: int, n: int) -> tuple:
    """Type-A reversal s_[a,b] in S_n, 1 <= a <= b <= n."""
    w = list(range(1, n + 1))
    w[a - 1 : b] = w[a - 1 : b][::-1]
    return tuple(w)


def reversal_BC(a: int, b: int, n: int) -> SignedPermutation:
    """Type-BC reversal s'_[a,b]: 1 <= a <= b <= n, or a = -b.

    For a >= 1 it reverses [a,b] and [-b,-a] simultaneously; for a = -b it
    reverses the whole of [-b,b] with 0 skipped, so i is sent to -i there.
    """
    if 1 <= a <= b <= n:
        return SignedPermutation(reversal_A(a, b, n))
    if a == -b and 1 <= b <= n:
        return SignedPermutation([-i if i <= b else i for i in range(1, n + 1)])
    raise ValueError(f"[{a},{b}] is not a type-BC reversal interval")


def reversal_on(index_set, a: int, b: int) -> dict:
    """Reversal of the nonzero integers of [a,b] inside a sorted ordered index set, as a map."""
    block = [x for x in index_set if a <= x <= b]
    m = {x: x for x in index_set}
    for x, y in zip(block, reversed(block)):
        m[x] = y
    return m


# --- enumeration -------------------------------------------------------------


@lru_cache(maxsize=None)
def all_signed_permutations(n: int) -> tuple:
    out = []
    for p in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            out.append(SignedPermutation(s * x for s, x in zip(signs, p)))
    out.sort(key=lambda w: (length(w), tuple(w)))
    return tuple(out)


@lru_cache(maxsize=None)
def all_permutations(n: int) -> tuple:
    return tuple(sorted(permutations(range(1, n + 1)), key=lambda w: (inversions(w), w)))


# --- patterns ----------------------------------------------------------------


def _standardize(seq) -> tuple:
    order = sorted(seq)
    return tuple(order.index(x) + 1 for x in seq)


def contains_pattern(word, pattern) -> bool:
    p = _standardize(pattern)
    k = len(p)
    return any(_standardize(sub) == p for sub in combinations(word, k))


def avoids_pattern(w, pattern) -> bool:
    """Unsigned pattern avoidance.

    Signed permutations are tested on their long word, unsigned ones directly.
    """
    word = long_word(w) if isinstance(w, SignedPermutation) else tuple(w)
    return not contains_pattern(word, pattern)


def parse_signed_pattern(text: str) -> tuple:
    """Read '3ol12' style or '3 -1 2' style signed patterns."""
    t = text.strip()
    if " " in t or "-" in t or "," in t:
        return tuple(int(x) for x in t.replace(",", " ").split())
    out, neg, i = [], False, 0
    while i < len(t):
        if t.startswith("ol", i):
            neg = True
            i += 2
            continue
        out.append(-int(t[i]) if neg else int(t[i]))
        neg = False
        i += 1
    return tuple(out)


def matches_signed(sub, pattern) -> bool:
    if any((x < 0) != (p < 0) for x, p in zip(sub, pattern)):
        return False
    return _standardize([abs(x) for x in sub]) == _standardize([abs(p) for p in pattern])


def avoids_signed_pattern(w, pattern) -> bool:
    """Signed pattern avoidance on the short word."""
    k = len(pattern)
    return not any(matches_signed(sub, pattern) for sub in combinations(tuple(w), k))


CODOMINANT_PATTERNS = ((1, -2), (-2, 1), (-2, -1), (3, 1, 2), (3, -1, 2))


def is_pavoiding(w) -> bool:
    """Smoothness: the (long) word avoids 3412 and 4231."""
    return avoids_pattern(w, (3, 4, 1, 2)) and avoids_pattern(w, (4, 2, 3, 1))


def is_codominant_A(w) -> bool:
    return avoids_pattern(tuple(w), (3, 1, 2))


def is_codominant_BC(w) -> bool:
    return all(avoids_signed_pattern(w, p) for p in CODOMINANT_PATTERNS)


@lru_cache(maxsize=None)
def pavoiding(n: int, group: str = "B") -> tuple:
    elems = all_signed_permutations(n) if group == "B" else all_permutations(n)
    return tuple(w for w in elems if is_pavoiding(w))


@lru_cache(maxsize=None)
def codominant(n: int, group: str = "B") -> tuple:
    if group == "B":
        return tuple(w for w in all_signed_permutations(n) if is_codominant_BC(w))
    return tuple(w for w in all_permutations(n) if is_codominant_A(w))


# --- Bruhat order ------------------------------------------------------------


def staircase_tableau(w) -> tuple:
    """Rows i = 1..n: increasing rearrangement of w_i ... w_n."""
    return tuple(tuple(sorted(w[i:])) for i in range(len(w)))


def ehresmann_tableau(w) -> tuple:
    """Rows over the whole long word, used for B_n viewed inside S_[-n,n]."""
    return staircase_tableau(long_word(w))


def _dominates_rows(A, B) -> bool:
    return all(a >= b for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def bruhat_leq(v, w, group: str | None = None) -> bool:
    """v <= w in Bruhat order.

    ``group`` is 'A' for S_n (unsigned words) or 'B' for B_n; by default it is
    'B' for SignedPermutation arguments and 'A' otherwise.  Both use the
    componentwise comparison of staircase tableaux.
    """
    if len(v) != len(w):
        raise ValueError("mismatched group")
    if group is None:
        group = "B" if isinstance(w, SignedPermutation) or isinstance(v, SignedPermutation) else "A"
    if group not in ("A", "B"):
        raise ValueError(f"unknown group {group!r}")
    return _dominates_rows(staircase_tableau(v), staircase_tableau(w))


def bruhat_interval(w) -> tuple:
    """All v <= w, sorted by length then word."""
    # signed and unsigned words hash alike, so the group is part of the cache key
    group = "B" if isinstance(w, SignedPermutation) else "A"
    return _bruhat_interval(group, tuple(w))


@lru_cache(maxsize=None)
def _bruhat_interval(group: str, w: tuple) -> tuple:
    if group == "B":
        w = SignedPermutation(w)
        return tuple(v for v in all_signed_permutations(len(w)) if bruhat_leq(v, w, "B"))
    return tuple(v for v in all_permutations(len(w)) if bruhat_leq(v, w, "A"))


# --- direct sum and Hessenberg functions -------------------------------------


def oplus(u, v) -> SignedPermutation:
    """u in B_k followed by v in S_(n-k) shifted up by k."""
    k = len(u)
    return SignedPermutation(tuple(u) + tuple(x + k for x in v))


def hessenberg_function(w) -> tuple:
    """Running maxima m_i = max(w_1..w_i) of a 312-avoiding permutation."""
    w = tuple(w)
    if not avoids_pattern(w, (3, 1, 2)):
        raise ValueError("permutation contains 312")
    out, m = [], 0
    for x in w:
        m = max(m, x)
        out.append(m)
    return tuple(out)


def hessenberg_functions(n: int) -> list:
    """Weakly increasing sequences with i <= m_i <= n."""
    out = []

    def rec(i, prev, acc):
        if i > n:
            out.append(tuple(acc))
            return
        for m in range(max(i, prev), n + 1):
            rec(i + 1, m, acc + [m])

    rec(1, 1, [])
    return out
