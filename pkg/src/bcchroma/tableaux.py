"""Poset tableaux, path tableaux and bitableaux, with the property predicates
used to interpret trace evaluations.

Rows are stored bottom-up (French convention): ``rows[0]`` is row 1, the
longest.  ``U[i][j]`` in the docstrings means row i+1, column j+1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations, product

from .core_combinatorics import transpose
from .networks import covering_families
from .posets_graphs import Poset


@dataclass(frozen=True)
class Tableau:
    rows: tuple
    stars: frozenset = field(default_factory=frozenset)

    @property
    def shape(self) -> tuple:
        return tuple(len(r) for r in self.rows)

    def entries(self) -> list:
        return [x for r in self.rows for x in r]

    def column(self, j: int) -> list:
        return [r[j] for r in self.rows if len(r) > j]

    def __str__(self):
        def cell(x):
            return f"{x}*" if x in self.stars else str(x)

        return "[" + " / ".join(",".join(cell(x) for x in r) for r in reversed(self.rows)) + "]"


PosetTableau = Tableau
PathTableau = Tableau


def format_bitableau(U: Tableau, V: Tableau) -> str:
    return f"({U} | {V})"


def parse_tableau(text: str) -> Tableau:
    """Read '[5 / 1*,4,2]' (top row first)."""
    body = text.strip().strip("[]").strip()
    if not body:
        return Tableau(())
    rows, stars = [], set()
    for chunk in reversed(body.split("/")):
        row = []
        for tok in chunk.split(","):
            tok = tok.strip()
            if tok.endswith("*"):
                tok = tok[:-1]
                stars.add(int(tok))
            row.append(int(tok))
        rows.append(tuple(row))
    return Tableau(tuple(rows), frozenset(stars))


# --- poset-tableau statistics --------------------------------------------------


def column_strict(U: Tableau, P: Poset) -> bool:
    return all(
        P.lt(U.rows[i][j], U.rows[i + 1][j]) for i in range(len(U.rows) - 1) for j in range(len(U.rows[i + 1]))
    )


def descents(U: Tableau, P: Poset) -> int:
    return sum(1 for r in U.rows for a, b in zip(r, r[1:]) if P.gt(a, b))


def row_semistrict(U: Tableau, P: Poset) -> bool:
    return descents(U, P) == 0


def cyclically_row_semistrict(U: Tableau, P: Poset) -> bool:
    return row_semistrict(U, P) and all(not P.gt(r[-1], r[0]) for r in U.rows if r)


def standard(U: Tableau, P: Poset) -> bool:
    return column_strict(U, P) and row_semistrict(U, P)


def excedances(U: Tableau, P: Poset) -> int:
    return sum(1 for r in U.rows for a, b in zip(r, sorted(r)) if P.gt(a, b))


def excedance_free(U: Tableau, P: Poset) -> bool:
    return excedances(U, P) == 0


def records(U: Tableau, P: Poset) -> list:
    """Positions (i, j) whose entry is greater in P than every earlier entry of its row."""
    out = []
    for i, r in enumerate(U.rows):
        for j, x in enumerate(r):
            if all(P.gt(x, y) for y in r[:j]):
                out.append((i, j))
    return out


def record_free(U: Tableau, P: Poset) -> bool:
    return all(j == 0 for _, j in records(U, P))


def left_anchored(U: Tableau) -> bool:
    return all(r[0] == min(r) for r in U.rows if r)


def right_anchored(U: Tableau) -> bool:
    return all(r[-1] == min(r) for r in U.rows if r)


def inversions(U: Tableau, P: Poset) -> int:
    """Incomparable pairs a < b with b in an earlier column than a."""
    col = {}
    for r in U.rows:
        for j, x in enumerate(r):
            col[x] = j
    return sum(1 for a, b in combinations(sorted(col), 2) if not P.comparable(a, b) and col[b] < col[a])


POSET_PREDICATES = {
    "column-strict": column_strict,
    "row-semistrict": row_semistrict,
    "cyclically-row-semistrict": cyclically_row_semistrict,
    "standard": standard,
    "excedance-free": excedance_free,
    "record-free": record_free,
    "left-anchored": lambda U, P: left_anchored(U),
    "right-anchored": lambda U, P: right_anchored(U),
}


def predicates(U: Tableau, P: Poset) -> dict:
    """Every poset-tableau property plus des_P, inv_P and exc_P."""
    out = {name: f(U, P) for name, f in POSET_PREDICATES.items()}
    out.update(des=descents(U, P), inv=inversions(U, P), exc=excedances(U, P))
    return out


# --- path tableaux ---------------------------------------------------------------


def _src_snk(U: Tableau, pi):
    return [[(i, abs(pi.sink(i))) for i in r] for r in U.rows]


def row_closed(U: Tableau, pi) -> bool:
    return all(sorted(s for s, _ in r) == sorted(t for _, t in r) for r in _src_snk(U, pi))


def left_row_strict(U: Tableau, pi=None) -> bool:
    return all(all(a < b for a, b in zip(r, r[1:])) for r in U.rows)


def cylindrical(U: Tableau, pi) -> bool:
    for r in _src_snk(U, pi):
        m = len(r)
        if any(r[j][1] != r[(j + 1) % m][0] for j in range(m)):
            return False
    return True


PATH_PREDICATES = {
    "row-closed": row_closed,
    "left-row-strict": left_row_strict,
    "cylindrical": cylindrical,
}


def path_predicates(U: Tableau, pi) -> dict:
    return {name: f(U, pi) for name, f in PATH_PREDICATES.items()}


# --- enumeration ----------------------------------------------------------------


def fillings(elements, shape):
    """All tableaux of ``shape`` using each element once."""
    elements = list(elements)
    if sum(shape) != len(elements):
        raise ValueError("shape size does not match the number of elements")
    cuts = [0]
    for p in shape:
        cuts.append(cuts[-1] + p)
    for perm in permutations(elements):
        yield Tableau(tuple(tuple(perm[cuts[i] : cuts[i + 1]]) for i in range(len(shape))))


def _holds(U, P, props) -> bool:
    return all(POSET_PREDICATES[p](U, P) for p in props)


def count_tableaux(P: Poset, shape, props=(), elements=None) -> int:
    els = P.elements if elements is None else elements
    return sum(1 for U in fillings(els, shape) if _holds(U, P, props))


def enumerate_bitableaux(Q: Poset, lam, mu, left=(), right=(), marked=True):
    """Marked Q-bitableaux (U, V) of shape (lam, mu) whose sides satisfy the given properties.

    Grounded elements must sit in U; each may carry a star.
    """
    n = len(Q)
    if sum(lam) + sum(mu) != n:
        raise ValueError("bipartition size does not match the poset")
    grounded = Q.grounded
    free = [x for x in Q.elements if x not in grounded]
    need = sum(lam) - len(grounded)
    if need < 0:
        return
    gl = sorted(grounded)
    for extra in combinations(free, need):
        I = set(grounded) | set(extra)
        Ielems = [x for x in Q.elements if x in I]
        Jelems = [x for x in Q.elements if x not in I]
        lefts = [U for U in fillings(Ielems, lam) if _holds(U, Q, left)]
        if not lefts:
            continue
        rights = [V for V in fillings(Jelems, mu) if _holds(V, Q, right)]
        for U, V in product(lefts, rights):
            if not marked:
                yield U, V
                continue
            for bits in product((0, 1), repeat=len(gl)):
                st = frozenset(g for g, b in zip(gl, bits) if b)
                yield Tableau(U.rows, st), V


def count_bitableaux(Q: Poset, lam, mu, left=(), right=(), marked=True) -> int:
    return sum(1 for _ in enumerate_bitableaux(Q, lam, mu, left, right, marked))


def enumerate_path_bitableaux(F, lam, mu, left=(), right=(), families=None):
    """F-bitableaux (pi, U, V) filled with paths pi_1..pi_n, grounded paths on the left.

    Tableau entries are path indices.  Properties name path predicates.
    """
    fams = families if families is not None else list(covering_families(F))
    n = F.n
    for pi in fams:
        grounded = pi.grounded_set() if F.flavor == "BC" else frozenset()
        free = [i for i in range(1, n + 1) if i not in grounded]
        need = sum(lam) - len(grounded)
        if need < 0:
            continue
        for extra in combinations(free, need):
            I = sorted(set(grounded) | set(extra))
            J = [i for i in range(1, n + 1) if i not in I]
            lefts = [U for U in fillings(I, lam) if all(PATH_PREDICATES[p](U, pi) for p in left)]
            if not lefts:
                continue
            rights = [V for V in fillings(J, mu) if all(PATH_PREDICATES[p](V, pi) for p in right)]
            for U, V in product(lefts, rights):
                yield pi, U, V


def count_path_bitableaux(F, lam, mu, left=(), right=(), families=None) -> int:
    return sum(1 for _ in enumerate_path_bitableaux(F, lam, mu, left, right, families))


def count_path_tableaux(F, shape, props=(), families=None) -> int:
    """Type-A F-tableaux: all families, all fillings with pi_1..pi_n."""
    fams = families if families is not None else list(covering_families(F))
    total = 0
    for pi in fams:
        for U in fillings(range(1, F.n + 1), shape):
            if all(PATH_PREDICATES[p](U, pi) for p in props):
                total += 1
    return total


# --- (tau, K) decomposition -------------------------------------------------------


def taupair_decompose(pi, families=None):
    """pi -> (tau, K): tau the family with the same unsigned type and all sinks of
    pi_1..pi_n positive; K the positive sinks reached by pi_{-1}..pi_{-n}."""
    F = pi.network
    fams = families if families is not None else list(covering_families(F))
    target = tuple(abs(x) for x in pi.type())
    taus = [t for t in fams if tuple(t.type()) == target]
    if len(taus) != 1:
        raise ValueError("no unique sign-free family in the class")
    K = frozenset(pi.sink(-i) for i in range(1, F.n + 1) if pi.sink(-i) > 0)
    return taus[0], K


def transpose_shape(lam):
    return transpose(tuple(lam))
