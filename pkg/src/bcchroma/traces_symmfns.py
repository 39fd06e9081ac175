"""Traces of Z[S_n] and Z[B_n] at q = 1, immanants, and symmetric functions.

Class functions are stored as exact vectors over conjugacy classes: partitions
of n for S_n, bipartitions (positive cycles | negative cycles) for B_n, both in
the canonical order of :mod:`core_combinatorics`.

Symmetric functions are coefficient vectors in a named basis.  Every basis
change passes through the Schur basis (``s`` in one set of variables,
``ss`` in two).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import factorial, prod

from .core_combinatorics import (
    bipartitions_of,
    bz_value,
    compositions_of,
    determinant,
    format_bipartition,
    format_partition,
    inverse_kostka_matrix,
    kostka_matrix,
    mat_inverse,
    ordered_set_partitions,
    parse_bipartition,
    parse_partition,
    partitions_of,
    permanent,
    sn_character,
    transpose,
    z_value,
)
from .signed_permutations import (
    SignedPermutation,
    all_permutations,
    all_signed_permutations,
    bruhat_interval,
    cycle_type,
    is_pavoiding,
    long_word,
    signed_cycle_type,
)

# --- trace vectors ---------------------------------------------------------------

A_FAMILIES = ("epsilon", "eta", "chi", "psi", "phi", "gamma")
BC_PAIRS = (
    ("epsilon", "epsilon"),
    ("epsilon", "eta"),
    ("eta", "epsilon"),
    ("eta", "eta"),
    ("chi", "chi"),
    ("psi", "psi"),
    ("phi", "phi"),
    ("phi", "gamma"),
    ("gamma", "phi"),
    ("gamma", "gamma"),
)

# each family is also named by the letter of its Frobenius image
_ALIASES = {
    "epsilon": "epsilon", "eps": "epsilon", "ε": "epsilon", "e": "epsilon",
    "eta": "eta", "η": "eta", "h": "eta",
    "chi": "chi", "χ": "chi", "s": "chi",
    "psi": "psi", "ψ": "psi", "p": "psi",
    "phi": "phi", "φ": "phi", "m": "phi",
    "gamma": "gamma", "γ": "gamma", "f": "gamma",
}


def family_name(token: str) -> str:
    try:
        return _ALIASES[token]
    except KeyError:
        raise ValueError(f"unknown trace family {token!r}") from None


def classes(group: str, n: int) -> tuple:
    if group == "A":
        return partitions_of(n)
    if group == "B":
        return bipartitions_of(n)
    raise ValueError(f"unknown group {group!r}")


def class_of(w):
    """Conjugacy class of a group element: cycle type or signed cycle type."""
    if isinstance(w, SignedPermutation):
        return signed_cycle_type(w)
    return cycle_type(tuple(w))


def class_size(group: str, c) -> int:
    if group == "A":
        return factorial(sum(c)) // z_value(c)
    n = sum(c[0]) + sum(c[1])
    return 2**n * factorial(n) // bz_value(*c)


@dataclass(frozen=True)
class TraceVector:
    group: str  # "A" for S_n, "B" for B_n
    n: int
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        if len(self.values) != len(classes(self.group, self.n)):
            raise ValueError("wrong number of class values")

    @classmethod
    def from_function(cls, group, n, f):
        return cls(group, n, tuple(f(c) for c in classes(group, n)))

    def at(self, c) -> Fraction:
        return self.values[_class_index(self.group, self.n)[c]]

    def __call__(self, w) -> Fraction:
        return self.at(class_of(w))

    def __add__(self, other):
        self._check(other)
        return TraceVector(self.group, self.n, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        self._check(other)
        return TraceVector(self.group, self.n, tuple(a - b for a, b in zip(self.values, other.values)))

    def __rmul__(self, c):
        return TraceVector(self.group, self.n, tuple(c * v for v in self.values))

    def _check(self, other):
        if (self.group, self.n) != (other.group, other.n):
            raise ValueError("traces on different groups")

    def as_dict(self) -> dict:
        return dict(zip(classes(self.group, self.n), self.values))

    def to_json(self) -> str:
        fmt = format_partition if self.group == "A" else format_bipartition
        return json.dumps(
            {
                "group": "S" if self.group == "A" else "B",
                "n": self.n,
                "values": {fmt(c): str(v) for c, v in self.as_dict().items()},
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "TraceVector":
        d = json.loads(text)
        group = "A" if d["group"] == "S" else "B"
        parse = parse_partition if group == "A" else parse_bipartition
        vals = {parse(k): Fraction(v) for k, v in d["values"].items()}
        return cls(group, d["n"], tuple(vals[c] for c in classes(group, d["n"])))


@lru_cache(maxsize=None)
def _class_index(group, n) -> dict:
    return {c: i for i, c in enumerate(classes(group, n))}


# --- S_n traces ------------------------------------------------------------------


def _distributions(cycles, lam) -> int:
    """Ways to send each cycle to a block so that block i receives total size lam_i."""

    @lru_cache(maxsize=None)
    def rec(t, caps):
        if t == len(cycles):
            return int(all(c == 0 for c in caps))
        total = 0
        for i, c in enumerate(caps):
            if c >= cycles[t]:
                total += rec(t + 1, caps[:i] + (c - cycles[t],) + caps[i + 1 :])
        return total

    return rec(0, tuple(lam))


def sn_trace_value(name: str, lam, mu) -> Fraction:
    """Value of the named S_n trace indexed by lam at cycle type mu."""
    name = family_name(name)
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError("size mismatch")
    n = sum(mu)
    if name == "eta":
        return Fraction(_distributions(mu, lam))
    if name == "epsilon":
        return Fraction((-1) ** (n - len(mu)) * _distributions(mu, lam))
    if name == "chi":
        return Fraction(sn_character(lam, mu))
    if name == "psi":
        return Fraction(z_value(lam) if lam == mu else 0)
    parts = partitions_of(n)
    Kinv = inverse_kostka_matrix(n)
    row = Kinv[parts.index(lam)]
    if name == "phi":
        return Fraction(sum(row[j] * sn_character(nu, mu) for j, nu in enumerate(parts)))
    # gamma^lam = sum_nu Kinv[lam, nu^T] chi^nu
    return Fraction(sum(row[parts.index(transpose(nu))] * sn_character(nu, mu) for nu in parts))


@lru_cache(maxsize=None)
def sn_trace_basis(name: str, lam) -> TraceVector:
    lam = tuple(lam)
    n = sum(lam)
    return TraceVector.from_function("A", n, lambda mu: sn_trace_value(name, lam, mu))


def eta_via_kostka(lam) -> TraceVector:
    """eta^lam = sum_mu K_{mu,lam} chi^mu (second route, used as a check)."""
    n = sum(lam)
    parts = partitions_of(n)
    K = kostka_matrix(n)
    j = parts.index(tuple(lam))
    return TraceVector.from_function(
        "A", n, lambda c: sum(K[i][j] * sn_character(mu, c) for i, mu in enumerate(parts))
    )


def epsilon_via_kostka(lam) -> TraceVector:
    n = sum(lam)
    parts = partitions_of(n)
    K = kostka_matrix(n)
    j = parts.index(tuple(lam))
    return TraceVector.from_function(
        "A", n, lambda c: sum(K[i][j] * sn_character(transpose(mu), c) for i, mu in enumerate(parts))
    )


# --- B_n traces ------------------------------------------------------------------


def _merge(a, b):
    return tuple(sorted(a + b, reverse=True))


@lru_cache(maxsize=None)
def _induced_pair(zeta: str, xi: str, lam, mu) -> tuple:
    """Class values of (zeta^lam (x) delta xi^mu) induced from B_k x B_(n-k).

    Ind(c) = |C_G(c)| * sum over subgroup classes inside c of base / |C_H|.
    """
    k, m = sum(lam), sum(mu)
    n = k + m
    vals = {c: Fraction(0) for c in bipartitions_of(n)}
    for a, b in bipartitions_of(k):
        left = sn_trace_value(zeta, lam, _merge(a, b)) if k else Fraction(1)
        if left == 0:
            continue
        for c, d in bipartitions_of(m):
            right = sn_trace_value(xi, mu, _merge(c, d)) if m else Fraction(1)
            if right == 0:
                continue
            base = left * right * (-1) ** len(d)
            vals[(_merge(a, c), _merge(b, d))] += base / (bz_value(a, b) * bz_value(c, d))
    return tuple(vals[c] * bz_value(*c) for c in bipartitions_of(n))


def bn_trace_basis(pair, bip) -> TraceVector:
    """(zeta xi)^{lam,mu} for a pair of family names, or iota^{lam,mu} for pair 'iota'."""
    lam, mu = tuple(bip[0]), tuple(bip[1])
    n = sum(lam) + sum(mu)
    if pair in ("iota", "ι"):
        return TraceVector.from_function("B", n, lambda c: bz_value(lam, mu) if c == (lam, mu) else 0)
    zeta, xi = parse_pair(pair)
    return TraceVector("B", n, _induced_pair(zeta, xi, lam, mu))


def parse_pair(pair):
    """('eta','eta'), 'hh', 'ηη' or 'eta,eta' -> ('eta', 'eta')."""
    if isinstance(pair, tuple):
        return family_name(pair[0]), family_name(pair[1])
    text = pair.strip("()")
    if "," in text:
        a, b = text.split(",", 1)
        return family_name(a.strip()), family_name(b.strip())
    if len(text) == 2:
        return family_name(text[0]), family_name(text[1])
    raise ValueError(f"cannot read trace pair {pair!r}")


def induced_pair_by_group(zeta: str, xi: str, lam, mu, w) -> Fraction:
    """Brute-force induction (1/|H|) sum_{g: g^-1 w g in H} base(g^-1 w g) over all of B_n."""
    lam, mu = tuple(lam), tuple(mu)
    k = sum(lam)
    n = k + sum(mu)
    w = SignedPermutation(w)
    total = Fraction(0)
    from .signed_permutations import inverse, multiply

    for g in all_signed_permutations(n):
        h = multiply(multiply(inverse(g), w), g)
        if any(abs(h[i]) > k for i in range(k)):
            continue
        u = SignedPermutation(h[:k])
        v = SignedPermutation(x - k if x > 0 else x + k for x in h[k:])
        a = sn_trace_value(zeta, lam, cycle_type(tuple(abs(x) for x in u))) if k else 1
        b = sn_trace_value(xi, mu, cycle_type(tuple(abs(x) for x in v))) if n - k else 1
        total += Fraction(a) * b * (-1) ** sum(1 for x in v if x < 0)
    return total / (2**k * factorial(k) * 2 ** (n - k) * factorial(n - k))


def class_representative(group: str, c):
    """A group element of the given class; negative cycles carry one minus sign."""
    if group == "A":
        w, start = [], 1
        for k in c:
            w.extend(range(start + 1, start + k))
            w.append(start)
            start += k
        return tuple(w)
    lam, mu = c
    w, start = [], 1
    for k, negative in [(k, False) for k in lam] + [(k, True) for k in mu]:
        cyc = list(range(start + 1, start + k)) + [start]
        if negative:
            cyc[-1] = -cyc[-1]
        w.extend(cyc)
        start += k
    return SignedPermutation(w)


# --- group algebra -----------------------------------------------------------------


def kl_element(w) -> dict:
    """C'_w(1) at a smooth w: the sum of all v <= w in Bruhat order."""
    if not is_pavoiding(w):
        raise ValueError("w contains 3412 or 4231; the interval sum is not a KL element")
    return {v: Fraction(1) for v in bruhat_interval(w)}


def evaluate(theta: TraceVector, D: dict) -> Fraction:
    return sum((Fraction(c) * theta(v) for v, c in D.items()), Fraction(0))


def algebra_identity(group: str, n: int) -> dict:
    e = tuple(range(1, n + 1))
    return {SignedPermutation(e) if group == "B" else e: Fraction(1)}


# --- immanants --------------------------------------------------------------------


def _as_trace_fn(theta):
    return theta if callable(theta) else (lambda w: theta[w])


def immanant_A(theta, M) -> Fraction:
    """sum over w in S_n of theta(w) * prod_i M[i][w_i] (0-based rows)."""
    n = len(M)
    if any(len(r) != n for r in M):
        raise ValueError("matrix is not square")
    th = _as_trace_fn(theta)
    total = Fraction(0)
    for w in permutations(range(1, n + 1)):
        p = prod(M[i][w[i] - 1] for i in range(n))
        if p:
            total += th(w) * p
    return total


def _bc_index(i: int, n: int) -> int:
    return i + n if i < 0 else i + n - 1


def bc_matrix(M, n=None):
    """Normalize a [-n,n] matrix: nested dict keyed by indices, or 2n x 2n rows ordered -n..-1,1..n."""
    if isinstance(M, dict):
        keys = sorted(M)
        return [[M[i][j] for j in keys] for i in keys]
    return [list(r) for r in M]


def immanant_BC(theta, M) -> Fraction:
    """sum over w in B_n of theta(w) * prod_{i in [-n,n]} a_{i, w_i}."""
    M = bc_matrix(M)
    if len(M) % 2 or any(len(r) != len(M) for r in M):
        raise ValueError("type-BC immanant needs a 2n x 2n matrix")
    n = len(M) // 2
    th = _as_trace_fn(theta)
    idx = [i for i in range(-n, n + 1) if i != 0]
    total = Fraction(0)
    for w in all_signed_permutations(n):
        lw = long_word(w)
        p = 1
        for i, x in zip(idx, lw):
            p *= M[_bc_index(i, n)][_bc_index(x, n)]
            if not p:
                break
        if p:
            total += th(w) * p
    return total


def x_plus_minus(M) -> tuple:
    """(M+, M-) with entries a_{i,j}a_{-i,-j} +- a_{i,-j}a_{-i,j}, i, j in [n]."""
    M = bc_matrix(M)
    n = len(M) // 2

    def a(i, j):
        return M[_bc_index(i, n)][_bc_index(j, n)]

    plus = [[a(i, j) * a(-i, -j) + a(i, -j) * a(-i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    minus = [[a(i, j) * a(-i, -j) - a(i, -j) * a(-i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    return plus, minus


def submatrix(M, rows, cols):
    return [[M[i - 1][j - 1] for j in cols] for i in rows]


def tensor_immanant(zeta_trace: TraceVector, xi_trace: TraceVector, M) -> Fraction:
    """sum over |I| = k of Imm_zeta(M+_{I,I}) Imm_xi(M-_{J,J}), J the complement."""
    plus, minus = x_plus_minus(M)
    n, k = len(plus), zeta_trace.n
    total = Fraction(0)
    for I in combinations(range(1, n + 1), k):
        J = [j for j in range(1, n + 1) if j not in I]
        total += immanant_A(zeta_trace, submatrix(plus, I, I)) * immanant_A(xi_trace, submatrix(minus, J, J))
    return total


def lmw_evaluate(kind: str, lam, M) -> Fraction:
    """Sum over ordered set partitions of type lam of products of principal dets or perms."""
    kind = family_name(kind)
    if kind not in ("epsilon", "eta"):
        raise ValueError("only epsilon and eta have product formulas")
    f = determinant if kind == "epsilon" else permanent
    n = len(M)
    total = Fraction(0)
    for blocks in ordered_set_partitions(range(1, n + 1), tuple(lam)):
        total += prod((Fraction(f(submatrix(M, sorted(J), sorted(J)))) for J in blocks), start=Fraction(1))
    return total


def psi_immanant(lam, M) -> Fraction:
    lam = tuple(lam)
    n = len(M)
    total = Fraction(0)
    for w in permutations(range(1, n + 1)):
        if cycle_type(w) == lam:
            total += prod(M[i][w[i] - 1] for i in range(n))
    return z_value(lam) * total


# --- symmetric functions ----------------------------------------------------------

A_BASES = ("s", "e", "h", "p", "m", "f")
BC_BASES = ("ss", "ee", "hh", "eh", "he", "mm", "ff", "mf", "fm", "pp", "p+p-")


def _normalize_basis(space: str, basis: str) -> str:
    b = basis.strip().strip("()").replace("⁺", "+").replace("⁻", "-")
    if space == "BC" and b in ("p+p-", "pp+-", "pm", "p+", "plethystic"):
        return "p+p-"
    valid = A_BASES if space == "A" else BC_BASES
    if b not in valid:
        raise ValueError(f"unknown basis {basis!r} for space {space}")
    return b


@dataclass(frozen=True)
class SymFn:
    space: str  # "A": Lambda_n(x); "BC": Lambda_n(x, y)
    n: int
    basis: str
    coeffs: tuple  # aligned with the canonical (bi)partition order

    def __post_init__(self):
        object.__setattr__(self, "basis", _normalize_basis(self.space, self.basis))
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if len(self.coeffs) != len(self.index()):
            raise ValueError("wrong number of coefficients")

    def index(self) -> tuple:
        return partitions_of(self.n) if self.space == "A" else bipartitions_of(self.n)

    @classmethod
    def from_dict(cls, space, n, basis, d):
        idx = partitions_of(n) if space == "A" else bipartitions_of(n)
        for k in d:
            if k not in idx:
                raise ValueError(f"index {k!r} is not a (bi)partition of {n}")
        return cls(space, n, basis, tuple(d.get(k, 0) for k in idx))

    @classmethod
    def zero(cls, space, n, basis):
        return cls.from_dict(space, n, basis, {})

    def as_dict(self) -> dict:
        return {k: c for k, c in zip(self.index(), self.coeffs) if c}

    def convert(self, basis: str) -> "SymFn":
        return symfn_convert(self, basis)

    def __add__(self, other):
        other = symfn_convert(other, self.basis)
        return SymFn(self.space, self.n, self.basis, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        other = symfn_convert(other, self.basis)
        return SymFn(self.space, self.n, self.basis, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rmul__(self, c):
        return SymFn(self.space, self.n, self.basis, tuple(c * a for a in self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, SymFn):
            return NotImplemented
        if (self.space, self.n) != (other.space, other.n):
            return False
        return symfn_convert(other, self.basis).coeffs == self.coeffs

    def __hash__(self):
        return hash((self.space, self.n, symfn_convert(self, "s" if self.space == "A" else "ss").coeffs))

    def __str__(self):
        fmt = format_partition if self.space == "A" else format_bipartition
        b = self.basis if self.space == "A" else f"({self.basis})"
        terms = [f"{c}·{b}_{{{fmt(k)}}}" for k, c in self.as_dict().items()]
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> str:
        fmt = format_partition if self.space == "A" else format_bipartition
        return json.dumps(
            {
                "space": self.space,
                "n": self.n,
                "basis": self.basis,
                "coeffs": {fmt(k): str(c) for k, c in self.as_dict().items()},
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "SymFn":
        d = json.loads(text)
        parse = parse_partition if d["space"] == "A" else parse_bipartition
        return cls.from_dict(d["space"], d["n"], d["basis"], {parse(k): Fraction(v) for k, v in d["coeffs"].items()})


@lru_cache(maxsize=None)
def a_to_schur(basis: str, n: int) -> tuple:
    """T with b_lam = sum_mu T[lam][mu] s_mu over partitions of n."""
    parts = partitions_of(n)
    pos = {lam: i for i, lam in enumerate(parts)}
    N = len(parts)
    T = [[Fraction(0)] * N for _ in range(N)]
    K, Kinv = kostka_matrix(n), inverse_kostka_matrix(n)
    for i, lam in enumerate(parts):
        for j, mu in enumerate(parts):
            if basis == "s":
                T[i][j] = Fraction(int(i == j))
            elif basis == "h":  # h_lam = sum_mu K_{mu,lam} s_mu
                T[i][j] = Fraction(K[j][i])
            elif basis == "e":  # e_lam = sum_mu K_{mu,lam} s_{mu^T}
                T[i][pos[transpose(mu)]] = Fraction(K[j][i])
            elif basis == "m":
                T[i][j] = Fraction(Kinv[i][j])
            elif basis == "f":
                T[i][pos[transpose(mu)]] = Fraction(Kinv[i][j])
            elif basis == "p":
                T[i][j] = Fraction(sn_character(mu, lam))
            else:
                raise ValueError(f"unknown basis {basis!r}")
    return tuple(tuple(r) for r in T)


@lru_cache(maxsize=None)
def bc_to_schur(basis: str, n: int) -> tuple:
    """T with b_{lam,mu} = sum T[(lam,mu)][(a,b)] (ss)_{a,b} over bipartitions of n."""
    bips = bipartitions_of(n)
    N = len(bips)
    T = [[Fraction(0)] * N for _ in range(N)]
    if basis == "p+p-":
        # p+_lam p-_mu = sum (chi chi)^{a,b}(lam,mu) (ss)_{a,b}
        for j, ab in enumerate(bips):
            col = bn_trace_basis(("chi", "chi"), ab)
            for i, lm in enumerate(bips):
                T[i][j] = col.at(lm)
        return tuple(tuple(r) for r in T)
    o, g = basis[0], basis[1]
    for i, (lam, mu) in enumerate(bips):
        To = a_to_schur(o, sum(lam))
        Tg = a_to_schur(g, sum(mu))
        pl, pm = partitions_of(sum(lam)), partitions_of(sum(mu))
        for j, (a, b) in enumerate(bips):
            if sum(a) != sum(lam):
                continue
            T[i][j] = To[pl.index(lam)][pl.index(a)] * Tg[pm.index(mu)][pm.index(b)]
    return tuple(tuple(r) for r in T)


@lru_cache(maxsize=None)
def _to_schur(space, basis, n):
    return a_to_schur(basis, n) if space == "A" else bc_to_schur(basis, n)


@lru_cache(maxsize=None)
def _from_schur(space, basis, n):
    return tuple(tuple(r) for r in mat_inverse([list(r) for r in _to_schur(space, basis, n)]))


def _row_times(v, T):
    N = len(T)
    return tuple(sum((v[i] * T[i][j] for i in range(N) if v[i]), Fraction(0)) for j in range(N))


def symfn_convert(f: SymFn, basis: str) -> SymFn:
    basis = _normalize_basis(f.space, basis)
    if basis == f.basis:
        return f
    schur = _row_times(f.coeffs, _to_schur(f.space, f.basis, f.n))
    return SymFn(f.space, f.n, basis, _row_times(schur, _from_schur(f.space, basis, f.n)))


def omega(f: SymFn) -> SymFn:
    """s_lam -> s_{lam^T}, applied to each set of variables separately."""
    hub = "s" if f.space == "A" else "ss"
    g = symfn_convert(f, hub)
    d = g.as_dict()
    if f.space == "A":
        out = {transpose(k): c for k, c in d.items()}
    else:
        out = {(transpose(k[0]), transpose(k[1])): c for k, c in d.items()}
    return symfn_convert(SymFn.from_dict(f.space, f.n, hub, out), f.basis)


def plethystic_power_in_pp(lam, mu) -> SymFn:
    """p+_lam p-_mu expanded directly into (pp): each p_k(x) +- p_k(y) is split by hand."""
    lam, mu = tuple(lam), tuple(mu)
    n = sum(lam) + sum(mu)
    out = {}
    factors = [(k, 1) for k in lam] + [(k, -1) for k in mu]
    for choice in product((0, 1), repeat=len(factors)):
        xs, ys, sign = [], [], 1
        for (k, s), c in zip(factors, choice):
            if c == 0:
                xs.append(k)
            else:
                ys.append(k)
                sign *= s
        key = (tuple(sorted(xs, reverse=True)), tuple(sorted(ys, reverse=True)))
        out[key] = out.get(key, 0) + sign
    return SymFn.from_dict("BC", n, "pp", out)


# --- Frobenius maps -------------------------------------------------------------------


def frobenius(theta: TraceVector, which: str = "A") -> SymFn:
    """'A': sum theta(mu)/z_mu p_mu; 'plethysticBC': sum theta/(z z 2^l) p+p-;
    'nonplethysticBC': sum theta/(z z) (pp)."""
    if which == "A":
        if theta.group != "A":
            raise ValueError("type-A Frobenius map needs an S_n trace")
        return SymFn.from_dict("A", theta.n, "p", {mu: v / z_value(mu) for mu, v in theta.as_dict().items()})
    if theta.group != "B":
        raise ValueError("type-BC Frobenius maps need a B_n trace")
    if which == "plethysticBC":
        return SymFn.from_dict("BC", theta.n, "p+p-", {c: v / bz_value(*c) for c, v in theta.as_dict().items()})
    if which == "nonplethysticBC":
        return SymFn.from_dict(
            "BC", theta.n, "pp", {c: v / (z_value(c[0]) * z_value(c[1])) for c, v in theta.as_dict().items()}
        )
    raise ValueError(f"unknown Frobenius map {which!r}")


# --- generating functions ---------------------------------------------------------------


def _group_of(D: dict, default="A"):
    for v in D:
        return ("B" if isinstance(v, SignedPermutation) else "A"), len(v)
    return default, 0


def Y_A(D: dict, n: int | None = None) -> SymFn:
    """sum_lam epsilon^lam(D) m_lam."""
    g, m = _group_of(D)
    n = m if n is None or D else n
    return SymFn.from_dict("A", n, "m", {lam: evaluate(sn_trace_basis("epsilon", lam), D) for lam in partitions_of(n)})


def Y_BC(D: dict, n: int | None = None) -> SymFn:
    """sum_{lam,mu} (epsilon epsilon)^{lam,mu}(D) (mm)_{lam,mu}."""
    g, m = _group_of(D, "B")
    n = m if n is None or D else n
    return SymFn.from_dict(
        "BC", n, "mm", {bp: evaluate(bn_trace_basis(("epsilon", "epsilon"), bp), D) for bp in bipartitions_of(n)}
    )


def _sign(bp, n):
    return (-1) ** (n - len(bp[0]) - len(bp[1]))


def Y_BC_expansions(D: dict, n: int, dual: bool = False) -> dict:
    """The eleven expansions of Y^BC(D) (or of omega Y^BC(D) when ``dual``).

    Keys are 'trace pair -> basis'.  All values describe one symmetric function.
    The power sum lines carry the sign (-1)^(n - l(lam) - l(mu)) on Y and none
    on omega Y, and the iota line is normalized by z_lam z_mu 2^(l(lam)+l(mu)).
    """
    bips = bipartitions_of(n)
    swap = {"m": "f", "f": "m", "e": "h", "h": "e"}

    def line(pair, basis, scale=lambda bp: 1, index=lambda bp: bp):
        return SymFn.from_dict(
            "BC", n, basis, {index(bp): scale(bp) * evaluate(bn_trace_basis(pair, bp), D) for bp in bips}
        )

    def b(x):
        return "".join(swap.get(c, c) for c in x) if dual else x

    out = {
        "εε->" + b("mm"): line("ee", b("mm")),
        "εη->" + b("mf"): line("eh", b("mf")),
        "ηε->" + b("fm"): line("he", b("fm")),
        "ηη->" + b("ff"): line("hh", b("ff")),
        "φφ->" + b("ee"): line("mm", b("ee")),
        "φγ->" + b("eh"): line("mf", b("eh")),
        "γφ->" + b("he"): line("fm", b("he")),
        "γγ->" + b("hh"): line("ff", b("hh")),
    }
    if dual:
        out["χχ->ss"] = line("ss", "ss")
        out["ψψ->pp"] = line("pp", "pp", lambda bp: Fraction(1, z_value(bp[0]) * z_value(bp[1])))
        out["ι->p+p-"] = line("iota", "p+p-", lambda bp: Fraction(1, bz_value(*bp)))
    else:
        out["χχ->ss"] = line("ss", "ss", index=lambda bp: (transpose(bp[0]), transpose(bp[1])))
        out["ψψ->pp"] = line("pp", "pp", lambda bp: Fraction(_sign(bp, n), z_value(bp[0]) * z_value(bp[1])))
        out["ι->p+p-"] = line("iota", "p+p-", lambda bp: Fraction(_sign(bp, n), bz_value(*bp)))
    return out


def Y_BC_expansions_as_printed(D: dict, n: int) -> dict:
    """The power sum and iota lines of Y^BC(D) taken literally: sign (-1)^(l(lam)+l(mu)), no iota scaling."""
    bips = bipartitions_of(n)

    def sgn(bp):
        return (-1) ** (len(bp[0]) + len(bp[1]))

    return {
        "ψψ->pp": SymFn.from_dict(
            "BC", n, "pp",
            {bp: Fraction(sgn(bp), z_value(bp[0]) * z_value(bp[1])) * evaluate(bn_trace_basis("pp", bp), D) for bp in bips},
        ),
        "ι->p+p-": SymFn.from_dict(
            "BC", n, "p+p-", {bp: sgn(bp) * evaluate(bn_trace_basis("iota", bp), D) for bp in bips}
        ),
    }


def Y_A_expansions(D: dict, n: int) -> dict:
    """Expansions of Y(D) over S_n in all six trace bases."""
    parts = partitions_of(n)

    def line(fam, basis, scale=lambda lam: 1, index=lambda lam: lam):
        return SymFn.from_dict(
            "A", n, basis, {index(lam): scale(lam) * evaluate(sn_trace_basis(fam, lam), D) for lam in parts}
        )

    return {
        "ε->m": line("epsilon", "m"),
        "η->f": line("eta", "f"),
        "ψ->p": line("psi", "p", lambda lam: Fraction((-1) ** (n - len(lam)), z_value(lam))),
        "χ->s": line("chi", "s", index=transpose),
        "φ->e": line("phi", "e"),
        "γ->h": line("gamma", "h"),
    }


def inverse_Y(f: SymFn) -> dict:
    """Some D in Q[B_n] with Y^BC(D) = f, supported on class representatives."""
    if f.space != "BC":
        raise ValueError("inverse_Y works in Lambda_n(x, y)")
    g = symfn_convert(f, "p+p-")
    return {
        class_representative("B", bp): Fraction(_sign(bp, f.n)) * c for bp, c in g.as_dict().items()
    }


def inverse_Y_A(f: SymFn) -> dict:
    if f.space != "A":
        raise ValueError("inverse_Y_A works in Lambda_n(x)")
    g = symfn_convert(f, "p")
    return {class_representative("A", lam): Fraction((-1) ** (f.n - len(lam))) * c for lam, c in g.as_dict().items()}


# --- chromatic symmetric functions ---------------------------------------------------------


def chromatic_A(G) -> SymFn:
    """X_G = sum_lam c_{G,lam} m_lam, c counting proper colorings of type lam."""
    from .posets_graphs import IncGraph, proper_colorings_of_type

    if G.grounded:
        G = IncGraph(G.vertices, G.edges)
    n = len(G.vertices)
    return SymFn.from_dict(
        "A", n, "m", {lam: sum(1 for _ in proper_colorings_of_type(G, lam)) for lam in partitions_of(n)}
    )


@dataclass(frozen=True)
class QSymFnA:
    """sum_alpha c_alpha(q) M_alpha, each c_alpha a tuple of integer coefficients in q."""

    n: int
    coeffs: dict

    def at_q(self, q) -> dict:
        return {a: sum(c * q**i for i, c in enumerate(p)) for a, p in self.coeffs.items()}

    def is_symmetric(self) -> bool:
        by_sort = {}
        for a in compositions_of(self.n):
            p = self.coeffs.get(a, (0,))
            if by_sort.setdefault(tuple(sorted(a, reverse=True)), p) != p:
                return False
        return True

    def __str__(self):
        def poly(p):
            def mono(i, c):
                if i == 0:
                    return str(c)
                lead = "" if c == 1 else "-" if c == -1 else str(c)
                return f"{lead}q" if i == 1 else f"{lead}q^{i}"

            terms = [mono(i, c) for i, c in enumerate(p) if c]
            return "(" + " + ".join(terms) + ")" if len(terms) > 1 else terms[0]

        terms = [f"{poly(p)}·M_{{{format_partition(a)}}}" for a, p in sorted(self.coeffs.items(), reverse=True)]
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> str:
        return json.dumps(
            {"space": "QSym", "n": self.n, "basis": "M", "coeffs": {format_partition(a): list(p) for a, p in sorted(self.coeffs.items())}}
        )

    @classmethod
    def from_json(cls, text: str) -> "QSymFnA":
        d = json.loads(text)
        return cls(d["n"], {tuple(int(x) for x in k.split(",")): tuple(v) for k, v in d["coeffs"].items()})

    def to_symfn_at_1(self) -> SymFn:
        out = {}
        for a, p in self.coeffs.items():
            key = tuple(sorted(a, reverse=True))
            out[key] = sum(p)
        return SymFn.from_dict("A", self.n, "m", out)


def chromatic_A_q(G, order=None) -> QSymFnA:
    """Shareshian-Wachs X_{G,q} in monomial quasisymmetric functions.

    inv counts edges {i, j} with i before j in ``order`` and kappa(i) > kappa(j).
    """
    verts = list(order) if order is not None else sorted(G.vertices)
    pos = {v: t for t, v in enumerate(verts)}
    n = len(verts)
    edges = [tuple(sorted(e, key=pos.get)) for e in G.edges]
    out = {}
    for alpha in compositions_of(n):
        poly = [0] * (len(edges) + 1)
        need = list(alpha)
        kappa = {}

        def rec(t):
            if t == n:
                poly[sum(1 for a, b in edges if kappa[a] > kappa[b])] += 1
                return
            v = verts[t]
            for c in range(1, len(alpha) + 1):
                if need[c - 1] == 0:
                    continue
                if any(kappa.get(u) == c for u in verts[:t] if frozenset((u, v)) in G.edges):
                    continue
                kappa[v] = c
                need[c - 1] -= 1
                rec(t + 1)
                need[c - 1] += 1
                del kappa[v]

        rec(0)
        while len(poly) > 1 and poly[-1] == 0:
            poly.pop()
        if any(poly):
            out[alpha] = tuple(poly)
    return QSymFnA(n, out)


def chromatic_BC(G) -> SymFn:
    """X^BC = sum c_{lam,mu} (mm)_{lam,mu}, c counting marked BC-colorings of type (lam, mu)."""
    from .posets_graphs import count_marked_colorings

    n = len(G.vertices)
    return SymFn.from_dict(
        "BC", n, "mm", {(lam, mu): count_marked_colorings(G, lam, mu) for lam, mu in bipartitions_of(n)}
    )


# --- convenience ------------------------------------------------------------------------------


def trace_vector_at(w) -> dict:
    """All basis traces of the ambient group evaluated at C'_w(1)."""
    D = kl_element(w)
    if isinstance(w, SignedPermutation):
        return {
            (pair, bp): evaluate(bn_trace_basis(pair, bp), D)
            for pair in BC_PAIRS + ("iota",)
            for bp in bipartitions_of(len(w))
        }
    return {(fam, lam): evaluate(sn_trace_basis(fam, lam), D) for fam in A_FAMILIES for lam in partitions_of(len(w))}


def all_elements(group: str, n: int) -> tuple:
    return all_signed_permutations(n) if group == "B" else all_permutations(n)


def verify_theorem(name: str, n: int, **options):
    """Check a named identity exhaustively at size n; see :mod:`bcchroma.verification`."""
    from .verification import verify_theorem as run

    return run(name, n, **options)
