"""Star networks given by interval factorizations, and the path families covering them.

A type-A network lives on the nonzero integers of a boundary interval
``[h, l]``; a type-BC network lives on ``[-n, n]`` and each factor is either
``(a, b)`` with ``1 <= a <= b <= n`` (the pair of stars on ``[a,b]`` and
``[-b,-a]``) or ``(-a, a)``.

Networks are materialised as explicit acyclic graphs.  Concatenation is
condensed by default: parallel edges between two centers are merged and
remember the set of heights they replace.  With ``condensed=False`` every
height keeps its own edge.
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product

from .signed_permutations import (
    SignedPermutation,
    bruhat_leq,
    codominant,
    is_codominant_A,
    is_codominant_BC,
    is_pavoiding,
    length,
    nonzero_range,
    reversal_on,
)

A, BC = "A", "BC"


def interval_set(c: int, d: int) -> frozenset:
    return frozenset(nonzero_range(c, d))


@dataclass(frozen=True)
class StarFactorization:
    flavor: str
    boundary: tuple
    factors: tuple
    condensed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple((int(c), int(d)) for c, d in self.factors))
        object.__setattr__(self, "boundary", (int(self.boundary[0]), int(self.boundary[1])))
        h, l = self.boundary
        if self.flavor not in (A, BC):
            raise ValueError(f"unknown flavor {self.flavor!r}")
        if h > l:
            raise ValueError("empty boundary")
        if self.flavor == BC and h != -l:
            raise ValueError("type-BC boundary must be [-n,n]")
        for c, d in self.factors:
            if not (h <= c <= d <= l):
                raise ValueError(f"factor [{c},{d}] outside boundary [{h},{l}]")
            if self.flavor == BC and not (c >= 1 or c == -d):
                raise ValueError(f"[{c},{d}] is not a type-BC factor")

    @property
    def n(self) -> int:
        """Number of positive indices (BC) or of indices (A)."""
        return self.boundary[1] if self.flavor == BC else len(self.indices)

    @cached_property
    def indices(self) -> tuple:
        return tuple(nonzero_range(*self.boundary))

    def stars(self, k: int) -> tuple:
        """Type-A intervals making up factor k."""
        c, d = self.factors[k]
        if self.flavor == BC and c >= 1:
            return ((c, d), (-d, -c))
        return ((c, d),)

    def factor_set(self, k: int) -> frozenset:
        return frozenset().union(*(interval_set(*s) for s in self.stars(k)))

    def with_factors(self, factors) -> "StarFactorization":
        return StarFactorization(self.flavor, self.boundary, tuple(factors), self.condensed)

    def uncondensed(self) -> "StarFactorization":
        return StarFactorization(self.flavor, self.boundary, self.factors, False)

    def __str__(self):
        return format_network(self)

    @cached_property
    def graph(self) -> "NetworkGraph":
        return NetworkGraph(self)


def network(flavor, boundary, factors, condensed=True) -> StarFactorization:
    return StarFactorization(flavor, tuple(boundary), tuple(factors), condensed)


def bc_network(n: int, factors, condensed=True) -> StarFactorization:
    return StarFactorization(BC, (-n, n), tuple(factors), condensed)


def a_network(n: int, factors, condensed=True) -> StarFactorization:
    return StarFactorization(A, (1, n), tuple(factors), condensed)


def format_network(F: StarFactorization) -> str:
    tag = "" if F.condensed else " plain"
    body = ";".join(f"[{c},{d}]" for c, d in F.factors)
    return f"{F.flavor}[{F.boundary[0]},{F.boundary[1]}]{tag}: {body}"


def parse_network(text: str) -> StarFactorization:
    """Inverse of :func:`format_network`, e.g. 'BC[-3,3]: [2,3];[-1,1]'."""
    head, _, body = text.partition(":")
    head = head.strip()
    condensed = True
    if head.endswith("plain"):
        condensed = False
        head = head[: -len("plain")].strip()
    flavor, _, rest = head.partition("[")
    flavor = flavor.strip().upper()
    h, l = (int(x) for x in rest.rstrip("]").split(","))
    factors = []
    for tok in body.split(";"):
        tok = tok.strip()
        if not tok:
            continue
        c, d = (int(x) for x in tok.strip("[]").split(","))
        factors.append((c, d))
    return StarFactorization(flavor, (h, l), tuple(factors), condensed)


# --- explicit graph -----------------------------------------------------------


@dataclass(frozen=True)
class Edge:
    tail: tuple
    head: tuple
    heights: frozenset

    @property
    def low(self) -> int:
        return min(self.heights)


class NetworkGraph:
    """Sources ('src', i), centers ('c', k, (c, d)) and sinks ('snk', i)."""

    def __init__(self, F: StarFactorization):
        self.F = F
        keyed = {}
        order = []
        cur = {h: ("src", h) for h in F.indices}
        self.centers = []
        for k in range(len(F.factors)):
            for star in F.stars(k):
                center = ("c", k, star)
                self.centers.append(center)
                for h in nonzero_range(*star):
                    key = (cur[h], center) if F.condensed else (cur[h], center, h)
                    if key not in keyed:
                        keyed[key] = set()
                        order.append(key)
                    keyed[key].add(h)
                    cur[h] = center
        for h in F.indices:
            key = (cur[h], ("snk", h)) if F.condensed else (cur[h], ("snk", h), h)
            keyed.setdefault(key, set()).add(h)
            order.append(key)
        self.edges = [Edge(key[0], key[1], frozenset(keyed[key])) for key in order]
        self.out_edges = defaultdict(list)
        self.in_edges = defaultdict(list)
        for e_id, e in enumerate(self.edges):
            self.out_edges[e.tail].append(e_id)
            self.in_edges[e.head].append(e_id)
        self._index = {(e.tail, e.head, e.heights): i for i, e in enumerate(self.edges)}

    def mirror_vertex(self, v):
        if v[0] == "c":
            c, d = v[2]
            return ("c", v[1], (-d, -c))
        return (v[0], -v[1])

    @cached_property
    def mirror_edge(self) -> list:
        out = []
        for e in self.edges:
            key = (self.mirror_vertex(e.tail), self.mirror_vertex(e.head), frozenset(-h for h in e.heights))
            out.append(self._index[key])
        return out

    def paths_from(self, v):
        """All edge sequences from v to a sink."""
        if v[0] == "snk":
            return [()]
        out = []
        for e_id in self.out_edges[v]:
            for rest in self.paths_from(self.edges[e_id].head):
                out.append((e_id,) + rest)
        return out


def path_matrix(F: StarFactorization) -> dict:
    """a[i][j] = number of paths from source i to sink j, as a nested dict over F.indices."""
    G = F.graph
    counts = {v: Counter() for v in [("snk", h) for h in F.indices]}
    for v in counts:
        counts[v][v[1]] = 1
    order = [("src", h) for h in F.indices] + list(G.centers)
    for v in reversed(order):
        acc = Counter()
        for e_id in G.out_edges[v]:
            acc.update(counts[G.edges[e_id].head])
        counts[v] = acc
    return {i: {j: counts[("src", i)][j] for j in F.indices} for i in F.indices}


def path_matrix_rows(F: StarFactorization) -> list:
    M = path_matrix(F)
    return [[M[i][j] for j in F.indices] for i in F.indices]


def path_matrix_json(F: StarFactorization) -> str:
    return json.dumps({"network": format_network(F), "index": list(F.indices), "rows": path_matrix_rows(F)})


# --- path families -------------------------------------------------------------


@dataclass(frozen=True)
class PathFamily:
    network: StarFactorization = field(repr=False)
    paths: tuple  # ((source, edge ids), ...) sorted by source

    @cached_property
    def by_source(self) -> dict:
        return dict(self.paths)

    def sink(self, i: int) -> int:
        last = self.network.graph.edges[self.by_source[i][-1]]
        return last.head[1]

    def vertices(self, i: int) -> list:
        G = self.network.graph
        return [("src", i)] + [G.edges[e].head for e in self.by_source[i]]

    def type(self):
        """type(pi)_i = snk(pi_i) over positive sources (BC) or all sources (A)."""
        F = self.network
        if F.flavor == BC:
            return SignedPermutation(self.sink(i) for i in range(1, F.n + 1))
        return tuple(self.sink(i) for i in F.indices)

    def grounded(self, i: int) -> bool:
        """pi_i meets its mirror pi_{-i}."""
        return bool(set(self.vertices(i)[1:-1]) & set(self.vertices(-i)[1:-1]))

    def grounded_set(self) -> frozenset:
        return frozenset(i for i in range(1, self.network.n + 1) if self.grounded(i))

    def trajectory(self, i: int) -> list:
        """Heights of pi_i at each factor cut; a set when the edge is a condensed bundle."""
        F = self.network
        G = F.graph
        out = []
        path = self.by_source[i]
        for cut in range(len(F.factors) + 1):
            # edge in use just after factor cut-1
            for e_id in path:
                e = G.edges[e_id]
                tail_k = -1 if e.tail[0] == "src" else e.tail[1]
                head_k = len(F.factors) if e.head[0] == "snk" else e.head[1]
                if tail_k < cut <= head_k or (cut == 0 and tail_k == -1):
                    hs = e.heights
                    out.append(next(iter(hs)) if len(hs) == 1 else hs)
                    break
        return out

    def intersect(self, i: int, j: int) -> bool:
        return bool(set(self.vertices(i)[1:-1]) & set(self.vertices(j)[1:-1]))


def _surjections(items, targets):
    """All maps items -> targets hitting every target."""
    targets = list(targets)
    for choice in product(targets, repeat=len(items)):
        if len(set(choice)) == len(targets):
            yield dict(zip(items, choice))


def covering_families(F: StarFactorization):
    """Path families covering every edge of F, one path per source, sinks distinct.

    For type BC only families with pi_{-i} the mirror of pi_i are produced.
    """
    G = F.graph
    srcs = list(F.indices)
    start = {i: (G.out_edges[("src", i)][0],) for i in srcs}
    bc = F.flavor == BC

    def at_center(center, state):
        """Paths whose current edge ends at center."""
        return [i for i in srcs if G.edges[state[i][-1]].head == center]

    def check_in(center, entering, state):
        used = {state[i][-1] for i in entering}
        return used == set(G.in_edges[center])

    def rec(k, state):
        if k == len(F.factors):
            sinks = [G.edges[state[i][-1]].head for i in srcs]
            if len(set(sinks)) == len(sinks):
                yield PathFamily(F, tuple((i, state[i]) for i in srcs))
            return
        stars = F.stars(k)
        primary = ("c", k, stars[0])
        entering = at_center(primary, state)
        if not check_in(primary, entering, state):
            return
        outs = G.out_edges[primary]
        if bc and len(stars) == 1:
            # symmetric star: choose for positive paths, mirror the rest
            pos = [i for i in entering if i > 0]
            for choice in product(outs, repeat=len(pos)):
                assign = {}
                for i, e in zip(pos, choice):
                    assign[i] = e
                    assign[-i] = G.mirror_edge[e]
                if set(assign.values()) != set(outs):
                    continue
                new = dict(state)
                for i, e in assign.items():
                    new[i] = state[i] + (e,)
                yield from rec(k + 1, new)
            return
        for assign in _surjections(entering, outs):
            new = dict(state)
            for i, e in assign.items():
                new[i] = state[i] + (e,)
            if bc:
                mirror_center = ("c", k, stars[1])
                other = at_center(mirror_center, state)
                if sorted(other) != sorted(-i for i in entering):
                    return
                for i, e in assign.items():
                    new[-i] = state[-i] + (G.mirror_edge[e],)
            elif len(stars) > 1:  # pragma: no cover - type A factors are single stars
                raise AssertionError
            yield from rec(k + 1, new)

    if bc:
        yield from rec(0, start)
    else:
        yield from rec(0, start)


def family_type(pi: PathFamily):
    return pi.type()


def grounded(pi: PathFamily, i: int) -> bool:
    return pi.grounded(i)


# --- defects ---------------------------------------------------------------------


def defect_triples(pi: PathFamily) -> list:
    """Triples (i, j, k): paths i, j meet at a center of factor k, entering on
    different edges in the order opposite to their source order.

    Pairs are i < j (type A) or |i| <= j, i != j (type BC).  Paths entering a
    center on one shared condensed edge do not form a defect.
    """
    F = pi.network
    G = F.graph
    entry = defaultdict(dict)  # center -> {source: edge id}
    for i, path in pi.paths:
        for e_id in path:
            head = G.edges[e_id].head
            if head[0] == "c":
                entry[head][i] = e_id
    out = []
    for center, ent in entry.items():
        k = center[1]
        srcs = sorted(ent)
        for a in srcs:
            for b in srcs:
                if F.flavor == BC:
                    ok = b > 0 and abs(a) <= b and a != b
                else:
                    ok = a < b
                if not ok:
                    continue
                ea, eb = ent[a], ent[b]
                if ea == eb:
                    continue
                if G.edges[ea].low > G.edges[eb].low:
                    out.append((a, b, k + 1))
    return sorted(out, key=lambda t: (t[2], t[0], t[1]))


def defect_count(F_or_pi, pi: PathFamily | None = None) -> int:
    if pi is None:
        pi = F_or_pi
    return len(defect_triples(pi))


def graphical_representation(F: StarFactorization) -> dict:
    """type -> polynomial in q (tuple of coefficients) summing q^dfct over covering families."""
    acc = defaultdict(Counter)
    for pi in covering_families(F):
        acc[pi.type()][defect_count(pi)] += 1
    out = {}
    for v, c in acc.items():
        deg = max(c)
        out[v] = tuple(c.get(d, 0) for d in range(deg + 1))
    return out


def at_q_equals_1(rep: dict) -> dict:
    return {v: sum(p) for v, p in rep.items()}


# --- classification --------------------------------------------------------------


def _listed_sets(F: StarFactorization) -> list:
    return [interval_set(c, d) for c, d in F.factors]


def is_zigzag(F: StarFactorization) -> bool:
    """Distinct pairwise nonnesting intervals of size >= 2, monotone along overlapping triples."""
    sets = _listed_sets(F)
    if any(len(s) < 2 for s in sets):
        return False
    m = len(sets)
    for i in range(m):
        for j in range(m):
            if i != j and sets[i] <= sets[j]:
                return False
    cs = [min(s) for s in sets]
    ds = [max(s) for s in sets]
    for j in range(m):
        for i in range(j):
            if not sets[i] & sets[j]:
                continue
            for k in range(j + 1, m):
                if not sets[j] & sets[k]:
                    continue
                up = cs[i] < cs[j] < cs[k] and ds[i] < ds[j] < ds[k]
                down = cs[i] > cs[j] > cs[k] and ds[i] > ds[j] > ds[k]
                if not (up or down):
                    return False
    return True


def is_descending(F: StarFactorization) -> bool:
    if not is_zigzag(F):
        return False
    sets = _listed_sets(F)
    for j in range(len(sets)):
        for i in range(j):
            if sets[i] & sets[j] and not (min(sets[i]) > min(sets[j]) and max(sets[i]) > max(sets[j])):
                return False
    return True


def classify(F: StarFactorization) -> str:
    if is_descending(F):
        return "descending"
    if is_zigzag(F):
        return "zigzag"
    return "star"


def canonical(F: StarFactorization) -> StarFactorization:
    """Lexicographically least reordering reachable by swapping adjacent commuting factors."""
    m = len(F.factors)
    sets = [F.factor_set(k) for k in range(m)]
    preds = [{i for i in range(j) if sets[i] & sets[j]} for j in range(m)]
    done, order = set(), []
    while len(order) < m:
        avail = [j for j in range(m) if j not in done and preds[j] <= done]
        j = min(avail, key=lambda x: F.factors[x])
        done.add(j)
        order.append(j)
    return F.with_factors(F.factors[j] for j in order)


# --- w(F) via augmented reversals ------------------------------------------------


def _expanded(F: StarFactorization) -> list:
    out = []
    for k in range(len(F.factors)):
        out.extend(interval_set(*s) for s in F.stars(k))
    return out


def augmented_reversals(F: StarFactorization) -> list:
    """The reversal sequence with intersections of covering pairs inserted, as index sets."""
    sets = _expanded(F)
    m = len(sets)
    seq = [[s] for s in sets]
    for j in range(m):
        for i in range(j):
            between = frozenset().union(*sets[i + 1 : j]) if j > i + 1 else frozenset()
            if (sets[i] & sets[j]) - between:
                inter = sets[i] & sets[j]
                if len(inter) > 1:
                    seq[i].insert(1, inter)
    return [s for block in seq for s in block]


def w_of_network(F: StarFactorization):
    """The permutation w(F) of a zig-zag network, as a product of reversals."""
    if not is_zigzag(F):
        raise ValueError("w(F) is defined here for zig-zag networks only")
    idx = F.indices
    w = {i: i for i in idx}
    for s in augmented_reversals(F):
        lo, hi = min(s), max(s)
        rev = reversal_on(idx, lo, hi)
        w = {i: rev[w[i]] for i in idx}
    if F.flavor == BC:
        return SignedPermutation(w[i] for i in range(1, F.n + 1))
    if F.boundary[0] == 1:
        return tuple(w[i] for i in idx)
    return tuple(w[i] for i in idx)


# --- F_w --------------------------------------------------------------------------


def _records_network(positions, values) -> list:
    """Records w_j > all earlier letters, turned into intervals [position, value] in reverse order."""
    out, best = [], None
    for p, x in zip(positions, values):
        if best is None or x > best:
            best = x
            if p != x:
                out.append((p, x))
    return out[::-1]


def network_of_codominant_A(w, boundary=None) -> StarFactorization:
    w = tuple(w)
    if not is_codominant_A(w):
        raise ValueError("not 312-avoiding")
    n = len(w)
    return a_network(n, _records_network(range(1, n + 1), w))


def network_of_codominant_BC(w) -> StarFactorization:
    w = SignedPermutation(w)
    if not is_codominant_BC(w):
        raise ValueError("not codominant")
    b = sum(1 for x in w if x < 0)
    positions = list(range(-b, 0)) + list(range(1, len(w) + 1))
    values = list(range(b, 0, -1)) + list(w)
    factors = []
    for c, d in _records_network(positions, values):
        if c < 0:
            if c != -d:
                raise AssertionError(f"asymmetric record interval [{c},{d}]")
        factors.append((c, d))
    return bc_network(len(w), factors)


@lru_cache(maxsize=None)
def _zigzag_index(n: int, flavor: str) -> dict:
    return {w_of_network(F): F for F in enumerate_networks(n, flavor, "zigzag")}


def network_of_w(w) -> StarFactorization:
    """F_w: descending for codominant w, otherwise the zig-zag network found by search."""
    if isinstance(w, SignedPermutation):
        if is_codominant_BC(w):
            return network_of_codominant_BC(w)
        if not is_pavoiding(w):
            raise ValueError("w contains 3412 or 4231")
        return _zigzag_index(len(w), BC)[w]
    w = tuple(w)
    if is_codominant_A(w):
        return network_of_codominant_A(w)
    if not is_pavoiding(w):
        raise ValueError("w contains 3412 or 4231")
    return _zigzag_index(len(w), A)[w]


# --- enumeration -----------------------------------------------------------------


def candidate_factors(n: int, flavor: str) -> list:
    if flavor == BC:
        return [(-a, a) for a in range(1, n + 1)] + [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    return [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]


def default_max_n() -> int:
    import os

    return int(os.environ.get("BCCHROMA_MAX_N", "6"))


@lru_cache(maxsize=None)
def enumerate_networks(n: int, flavor: str = BC, cls: str = "zigzag") -> tuple:
    """Canonical representatives of zig-zag or descending networks over [-n,n] (BC) or [1,n] (A)."""
    if n > default_max_n():
        raise ValueError(f"n={n} exceeds the enumeration bound {default_max_n()}")
    if cls not in ("zigzag", "descending"):
        raise ValueError(f"unknown class {cls!r}")
    test = is_zigzag if cls == "zigzag" else is_descending
    empty = bc_network(n, ()) if flavor == BC else a_network(n, ())
    cands = candidate_factors(n, flavor)
    seen = {empty.factors}
    frontier = [empty]
    while frontier:
        nxt = []
        for F in frontier:
            for f in cands:
                if f in F.factors:
                    continue
                G = F.with_factors(F.factors + (f,))
                if not test(G):
                    continue
                G = canonical(G)
                if G.factors not in seen:
                    seen.add(G.factors)
                    nxt.append(G)
        frontier = nxt
    out = [empty.with_factors(f) for f in seen]
    out.sort(key=lambda F: (len(F.factors), F.factors))
    return tuple(out)


def upsilon(F: StarFactorization) -> StarFactorization:
    """Endpoint map from BC networks on [-n,n] to type-A networks on [1,n+1]."""
    fac = [(1, a + 1) if c == -a else (c + 1, a + 1) for c, a in F.factors]
    return a_network(F.n + 1, fac)


def oplus_net(E: StarFactorization, F: StarFactorization) -> StarFactorization:
    """E on [-k,k] followed by F on [1,n-k] shifted up by k."""
    k = E.n
    n = k + F.n
    return bc_network(n, tuple(E.factors) + tuple((c + k, d + k) for c, d in F.factors), E.condensed)


def bruhat_indicator(w) -> dict:
    from .signed_permutations import bruhat_interval

    return {v: 1 for v in bruhat_interval(w)}
