"""Unit interval orders, their type-BC decorations, indifference graphs,
colorings and acyclic orientations."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations, product

import networkx as nx

from .networks import BC, covering_families, network_of_w
from .signed_permutations import (
    SignedPermutation,
    is_codominant_A,
    is_codominant_BC,
)


@dataclass(frozen=True)
class Poset:
    """A finite strict order on ``elements``; ``grounded`` marks circled elements."""

    elements: tuple
    less: frozenset
    grounded: frozenset = field(default_factory=frozenset)

    def lt(self, a, b) -> bool:
        return (a, b) in self.less

    def gt(self, a, b) -> bool:
        return (b, a) in self.less

    def comparable(self, a, b) -> bool:
        return a == b or (a, b) in self.less or (b, a) in self.less

    def __len__(self):
        return len(self.elements)

    @cached_property
    def is_partial_order(self) -> bool:
        el = set(self.elements)
        if any(a == b or a not in el or b not in el for a, b in self.less):
            return False
        if any((b, a) in self.less for a, b in self.less):
            return False
        for a, b in self.less:
            for c in self.elements:
                if (b, c) in self.less and (a, c) not in self.less:
                    return False
        return True

    def relabel(self, mapping) -> "Poset":
        return Poset(
            tuple(mapping[x] for x in self.elements),
            frozenset((mapping[a], mapping[b]) for a, b in self.less),
            frozenset(mapping[x] for x in self.grounded),
        )

    def subposet(self, subset) -> "Poset":
        s = set(subset)
        return Poset(
            tuple(x for x in self.elements if x in s),
            frozenset((a, b) for a, b in self.less if a in s and b in s),
            frozenset(x for x in self.grounded if x in s),
        )

    def relations(self) -> list:
        return sorted(self.less)

    def to_json(self) -> str:
        return json.dumps(
            {"n": len(self), "relations": [list(r) for r in self.relations()], "grounded": sorted(self.grounded)}
        )


UnitIntervalOrder = Poset
BCUnitIntervalOrder = Poset


def poset_from_relations(elements, relations, grounded=()) -> Poset:
    """Transitive closure of the given relations."""
    less = set(relations)
    changed = True
    while changed:
        changed = False
        for a, b in list(less):
            for c, d in list(less):
                if b == c and (a, d) not in less:
                    less.add((a, d))
                    changed = True
    return Poset(tuple(elements), frozenset(less), frozenset(grounded))


def chain(n: int) -> Poset:
    return Poset(tuple(range(1, n + 1)), frozenset((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))


def antichain(n: int) -> Poset:
    return Poset(tuple(range(1, n + 1)), frozenset())


def beta(P: Poset, y) -> int:
    below = sum(1 for x in P.elements if x == y or P.lt(x, y))
    above = sum(1 for z in P.elements if z == y or P.lt(y, z))
    return below - above


def has_induced(P: Poset, kind: str) -> bool:
    """Detect an induced 2+2 or 3+1."""
    el = P.elements
    if kind == "2+2":
        pairs = list(P.less)
        for (a, b), (c, d) in combinations(pairs, 2):
            if len({a, b, c, d}) == 4 and all(not P.comparable(x, y) for x in (a, b) for y in (c, d)):
                return True
        return False
    if kind == "3+1":
        for a, b, c in permutations(el, 3):
            if P.lt(a, b) and P.lt(b, c):
                for d in el:
                    if d not in (a, b, c) and all(not P.comparable(d, x) for x in (a, b, c)):
                        return True
        return False
    raise ValueError(kind)


def is_unit_interval_order(P: Poset) -> bool:
    return P.is_partial_order and not has_induced(P, "2+2") and not has_induced(P, "3+1")


def is_bc_unit_interval_order(P: Poset) -> bool:
    """Unit interval order whose circled elements are minimal."""
    if not is_unit_interval_order(P):
        return False
    return all(not P.lt(x, g) for g in P.grounded for x in P.elements)


# --- the four labeling algorithms -----------------------------------------------


def p_of_w(w) -> Poset:
    """i < j iff j > max(w_1..w_i) for 312-avoiding w on [1,n].

    Other smooth w are read off the type-e family of F_w.
    """
    w = tuple(w)
    if not is_codominant_A(w):
        return p_of_w_network(w)
    n = len(w)
    rel, m = set(), 0
    for i in range(1, n + 1):
        m = max(m, w[i - 1])
        rel.update((i, j) for j in range(m + 1, n + 1))
    return Poset(tuple(range(1, n + 1)), frozenset(rel))


def _tiebreak_key(P: Poset, x):
    return (beta(P, x), 0 if x in P.grounded else 1, sum(1 for y in P.elements if P.comparable(x, y)), x)


def canonical_labeling(P: Poset, grounded_first: bool = False) -> dict:
    """Map elements to 1..n so that beta is weakly increasing.

    With ``grounded_first`` the circled elements take labels 1..p instead.
    """
    if grounded_first:
        key = lambda x: (0 if x in P.grounded else 1,) + _tiebreak_key(P, x)
    else:
        key = lambda x: _tiebreak_key(P, x)
    order = sorted(P.elements, key=key)
    return {x: i for i, x in enumerate(order, start=1)}


def w_of_p(P: Poset, labeling: dict | None = None) -> tuple:
    """Inverse of :func:`p_of_w`: w_j = max({i : i not > j} minus earlier letters)."""
    if not is_unit_interval_order(P):
        raise ValueError("not a unit interval order")
    lab = labeling or canonical_labeling(P)
    Q = P.relabel(lab)
    n = len(Q)
    w = []
    for j in range(1, n + 1):
        cands = {i for i in range(1, n + 1) if not Q.gt(i, j)} - set(w)
        w.append(max(cands))
    return tuple(w)


def q_of_w(w) -> Poset:
    """Q(w) by the running-maximum rule for codominant w, else from the network F_w."""
    w = SignedPermutation(w)
    if not is_codominant_BC(w):
        return q_of_w_network(w)
    n = len(w)
    b = min([x for x in w if x > 0] + [n + 1])
    rel, m = set(), b - 1
    for j in range(1, n + 1):
        m = max(m, w[j - 1])
        if j < n:
            rel.update((j, k) for k in range(m + 1, n + 1))
    grounded = frozenset(-x for x in w if x < 0)
    return Poset(tuple(range(1, n + 1)), frozenset(rel), grounded)


def w_of_q(Q: Poset, labeling: dict | None = None) -> SignedPermutation:
    if not is_bc_unit_interval_order(Q):
        raise ValueError("not a type-BC unit interval order")
    lab = labeling or canonical_labeling(Q, grounded_first=True)
    R = Q.relabel(lab)
    n, p = len(R), len(R.grounded)
    if R.grounded != frozenset(range(1, p + 1)):
        raise ValueError("circled elements do not form an initial interval")
    a = [-i for i in range(1, p + 1)] + list(range(p + 1, n + 1))
    w = []
    for j in range(1, n + 1):
        cands = {a[i - 1] for i in range(1, n + 1) if not R.gt(i, j)} - set(w)
        w.append(max(cands))
    return SignedPermutation(w)


def labelings_with_monotone_beta(P: Poset, grounded_first: bool = False):
    """Every labeling allowed by the labeling step, for tie-break invariance checks."""
    key = (lambda x: (0 if x in P.grounded else 1, beta(P, x))) if grounded_first else (lambda x: beta(P, x))
    groups = {}
    for x in P.elements:
        groups.setdefault(key(x), []).append(x)
    keys = sorted(groups)
    for perms in product(*(permutations(groups[k]) for k in keys)):
        order = [x for blk in perms for x in blk]
        yield {x: i for i, x in enumerate(order, start=1)}


# --- posets from path families ---------------------------------------------------


def type_e_family(F):
    e = tuple(range(1, F.n + 1)) if F.flavor != BC else SignedPermutation(range(1, F.n + 1))
    fams = [pi for pi in covering_families(F) if pi.type() == e]
    if len(fams) != 1:
        raise ValueError(f"expected one type-e family, found {len(fams)}")
    return fams[0]


def p_of_family(F, pi=None) -> Poset:
    """pi_i < pi_j iff i < j and the paths do not meet; circled: grounded positive paths."""
    pi = pi or type_e_family(F)
    idx = F.indices
    rel = {(i, j) for i, j in combinations(idx, 2) if not pi.intersect(i, j)}
    grounded = pi.grounded_set() if F.flavor == BC else frozenset()
    return Poset(tuple(idx), frozenset(rel), grounded)


def q_from_p(P: Poset) -> Poset:
    return P.subposet([x for x in P.elements if x > 0])


def p_of_w_network(w) -> Poset:
    """P(w) read off the type-e family of F_w (on [-n,n] for signed w)."""
    return p_of_family(network_of_w(w))


def q_of_w_network(w) -> Poset:
    return q_from_p(p_of_w_network(w))


# --- graphs --------------------------------------------------------------------


@dataclass(frozen=True)
class IncGraph:
    vertices: tuple
    edges: frozenset  # frozensets {a, b}
    grounded: frozenset = field(default_factory=frozenset)

    def adjacent(self, a, b) -> bool:
        return frozenset((a, b)) in self.edges

    def edge_list(self) -> list:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        for v in self.vertices:
            G.add_node(v, grounded=v in self.grounded)
        G.add_edges_from(tuple(e) for e in self.edges)
        return G

    def to_dot(self) -> str:
        lines = ["graph G {"]
        for v in self.vertices:
            shape = "doublecircle" if v in self.grounded else "circle"
            lines.append(f'  {v} [shape={shape}];')
        for a, b in self.edge_list():
            lines.append(f"  {a} -- {b};")
        lines.append("}")
        return "\n".join(lines)


def inc(P: Poset) -> IncGraph:
    edges = frozenset(frozenset((a, b)) for a, b in combinations(P.elements, 2) if not P.comparable(a, b))
    return IncGraph(P.elements, edges, P.grounded)


def gamma_of_w(w) -> IncGraph:
    if isinstance(w, SignedPermutation):
        return inc(q_of_w(w))
    return inc(p_of_w(w))


def graph_iso(G1: IncGraph, G2: IncGraph) -> bool:
    """Isomorphism respecting circled vertices."""
    if len(G1.vertices) != len(G2.vertices) or len(G1.edges) != len(G2.edges):
        return False
    return nx.is_isomorphic(
        G1.to_networkx(), G2.to_networkx(), node_match=lambda a, b: a["grounded"] == b["grounded"]
    )


def decorated_iso(Q1: Poset, Q2: Poset) -> bool:
    """Order isomorphism respecting circled elements."""
    if len(Q1) != len(Q2) or len(Q1.less) != len(Q2.less):
        return False

    def dig(Q):
        D = nx.DiGraph()
        for v in Q.elements:
            D.add_node(v, grounded=v in Q.grounded)
        D.add_edges_from(Q.less)
        return D

    return nx.is_isomorphic(dig(Q1), dig(Q2), node_match=lambda a, b: a["grounded"] == b["grounded"])


# --- colorings -----------------------------------------------------------------


def proper_colorings_of_type(G: IncGraph, lam, mu=()):
    """Proper colorings with lam_i vertices of color i and mu_i of color -i.

    Circled vertices only receive positive colors.
    """
    colors = [i + 1 for i in range(len(lam))] + [-(i + 1) for i in range(len(mu))]
    need = {i + 1: lam[i] for i in range(len(lam))}
    need.update({-(i + 1): mu[i] for i in range(len(mu))})
    verts = list(G.vertices)
    if sum(need.values()) != len(verts):
        raise ValueError("type size does not match the graph")
    kappa = {}

    def rec(t):
        if t == len(verts):
            yield dict(kappa)
            return
        v = verts[t]
        for c in colors:
            if need[c] == 0 or (c < 0 and v in G.grounded):
                continue
            if any(kappa.get(u) == c for u in verts[:t] if G.adjacent(u, v)):
                continue
            kappa[v] = c
            need[c] -= 1
            yield from rec(t + 1)
            need[c] += 1
            del kappa[v]

    yield from rec(0)


def enumerate_marked_colorings(G: IncGraph, lam, mu=()):
    """Pairs (kappa1, starred set) over proper colorings of type (lam, mu)."""
    grounded = sorted(G.grounded)
    for kappa in proper_colorings_of_type(G, lam, mu):
        for bits in product((0, 1), repeat=len(grounded)):
            yield kappa, frozenset(g for g, b in zip(grounded, bits) if b)


def count_marked_colorings(G: IncGraph, lam, mu=()) -> int:
    return sum(1 for _ in proper_colorings_of_type(G, lam, mu)) * 2 ** len(G.grounded)


def coloring_as_bitableau(kappa: dict, stars=frozenset(), lam=(), mu=()):
    """Columns of the two tableaux: color i gives column i of the left one, -i of the right one."""
    left = [sorted(v for v, c in kappa.items() if c == i + 1) for i in range(len(lam))]
    right = [sorted(v for v, c in kappa.items() if c == -(i + 1)) for i in range(len(mu))]
    return left, right, stars


# --- orientations --------------------------------------------------------------


@dataclass(frozen=True)
class MarkedOrientation:
    arcs: frozenset  # (a, b) means a -> b
    stars: frozenset = field(default_factory=frozenset)

    def indegree(self, v, vertices=None) -> int:
        return sum(1 for a, b in self.arcs if b == v)


def is_acyclic(vertices, arcs) -> bool:
    D = nx.DiGraph()
    D.add_nodes_from(vertices)
    D.add_edges_from(arcs)
    return nx.is_directed_acyclic_graph(D)


def acyclic_orientations(G: IncGraph):
    edges = G.edge_list()
    for bits in product((0, 1), repeat=len(edges)):
        arcs = frozenset((a, b) if t == 0 else (b, a) for (a, b), t in zip(edges, bits))
        if is_acyclic(G.vertices, arcs):
            yield arcs


def enumerate_marked_orientations(G: IncGraph):
    grounded = sorted(G.grounded)
    for arcs in acyclic_orientations(G):
        for bits in product((0, 1), repeat=len(grounded)):
            yield MarkedOrientation(arcs, frozenset(g for g, b in zip(grounded, bits) if b))


def source_count(vertices, arcs) -> int:
    heads = {b for _, b in arcs}
    return sum(1 for v in vertices if v not in heads)


def orientation_to_sequence(vertices, O) -> tuple:
    """Repeatedly remove the least vertex of indegree 0.

    ``O`` is a MarkedOrientation or a set of arcs.  Starred vertices come back
    as strings 'v*'.
    """
    arcs = set(O.arcs if isinstance(O, MarkedOrientation) else O)
    stars = O.stars if isinstance(O, MarkedOrientation) else frozenset()
    left = set(vertices)
    out = []
    while left:
        heads = {b for a, b in arcs if a in left and b in left}
        free = [v for v in left if v not in heads]
        if not free:
            raise ValueError("orientation has a cycle")
        j = min(free)
        out.append(f"{j}*" if j in stars else j)
        left.remove(j)
    return tuple(out)


def _unstar(x):
    if isinstance(x, str) and x.endswith("*"):
        return int(x[:-1]), True
    return x, False


def sequence_to_orientation(G: IncGraph, seq) -> MarkedOrientation:
    plain = [_unstar(x) for x in seq]
    pos = {v: t for t, (v, _) in enumerate(plain)}
    arcs = frozenset((a, b) if pos[a] < pos[b] else (b, a) for a, b in G.edge_list())
    return MarkedOrientation(arcs, frozenset(v for v, s in plain if s))


def is_descent_free(P: Poset, seq) -> bool:
    plain = [_unstar(x)[0] for x in seq]
    return all(not P.gt(a, b) for a, b in zip(plain, plain[1:]))


def descent_free_sequences(P: Poset, marked: bool = True):
    for perm in permutations(P.elements):
        if not is_descent_free(P, perm):
            continue
        if not marked:
            yield perm
            continue
        gs = [x for x in perm if x in P.grounded]
        for bits in product((0, 1), repeat=len(gs)):
            st = {g for g, b in zip(gs, bits) if b}
            yield tuple(f"{x}*" if x in st else x for x in perm)


def induced_subgraph(G: IncGraph, S) -> IncGraph:
    S = frozenset(S)
    return IncGraph(
        tuple(v for v in G.vertices if v in S), frozenset(e for e in G.edges if e <= S), G.grounded & S
    )


def count_acyclic_orientations(G: IncGraph, one_source: bool = False) -> int:
    if one_source:
        return sum(1 for O in acyclic_orientations(G) if source_count(G.vertices, O) == 1)
    return sum(1 for _ in acyclic_orientations(G))


def count_subgraph_sequence_orientations(G: IncGraph, lam, mu=(), one_source: bool = False) -> int:
    """Marked acyclic orientations of (G_{I_1}, ..., G_{I_r}, G_{J_1}, ..., G_{J_t}).

    The blocks run over ordered set partitions of type (lam..., mu...) with every
    circled vertex in an I-block; circled vertices may be starred.
    """
    from .core_combinatorics import ordered_set_partitions

    lam, mu = tuple(lam), tuple(mu)
    total = 0
    for blocks in ordered_set_partitions(G.vertices, lam + mu):
        left = frozenset().union(*blocks[: len(lam)])
        if not G.grounded <= left:
            continue
        p = 1
        for B in blocks:
            p *= count_acyclic_orientations(induced_subgraph(G, B), one_source)
            if not p:
                break
        total += p
    return total * 2 ** len(G.grounded)
