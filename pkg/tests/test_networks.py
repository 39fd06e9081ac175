from collections import Counter

import pytest
from hypothesis import given, strategies as st

from bcchroma import core_combinatorics as cc
from bcchroma import networks as nw
from bcchroma import signed_permutations as sp


def test_classify_examples():
    F = nw.a_network(7, [(2, 5), (1, 3), (4, 6), (6, 7)])
    assert nw.classify(F) == "zigzag"
    assert nw.classify(nw.a_network(3, [])) == "descending"
    assert nw.classify(nw.bc_network(2, [])) == "descending"
    # a symmetric star containing another interval is never zig-zag, in either order
    assert nw.classify(nw.bc_network(3, [(1, 2), (-3, 3)])) == "star"
    assert nw.classify(nw.bc_network(3, [(-3, 3), (1, 2)])) == "star"
    assert nw.classify(nw.bc_network(3, [(1, 2), (-1, 1)])) == "descending"
    assert nw.classify(nw.bc_network(3, [(-1, 1), (1, 2)])) == "zigzag"


def test_w_of_network_examples():
    F = nw.a_network(7, [(2, 5), (1, 3), (4, 6), (6, 7)])
    assert nw.w_of_network(F) == (3, 7, 5, 2, 1, 4, 6)
    assert nw.w_of_network(nw.a_network(4, [])) == (1, 2, 3, 4)
    assert nw.w_of_network(nw.bc_network(3, [])) == sp.identity(3)


def test_every_bc_zigzag_gives_a_smooth_element():
    ws = [nw.w_of_network(F) for F in nw.enumerate_networks(3, nw.BC, "zigzag")]
    assert len(set(ws)) == 22
    assert set(ws) == set(sp.pavoiding(3, "B"))


def test_network_of_w_examples():
    assert nw.format_network(nw.network_of_w((4, 3, 2, 1))) == "A[1,4]: [1,4]"
    assert nw.network_of_w(sp.identity(3)).factors == ()
    for w in sp.codominant(3, "B"):
        F = nw.network_of_w(w)
        assert nw.is_descending(F)
        assert nw.w_of_network(F) == w
    with pytest.raises(ValueError):
        nw.network_of_w((3, 4, 1, 2))


@pytest.mark.parametrize("n,count", [(1, 2), (2, 5), (3, 14), (4, 42)])
def test_descending_census(n, count):
    assert len(nw.enumerate_networks(n, nw.BC, "descending")) == count


@pytest.mark.parametrize("n", [1, 2, 3])
def test_zigzag_census_matches_type_a(n):
    bc = nw.enumerate_networks(n, nw.BC, "zigzag")
    a = nw.enumerate_networks(n + 1, nw.A, "zigzag")
    assert len(bc) == len(a) == len(sp.pavoiding(n, "B"))
    # the endpoint map is a bijection onto the type-A zig-zags
    images = {nw.canonical(nw.upsilon(F)).factors for F in bc}
    assert images == {F.factors for F in a}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_round_trips(n):
    for F in nw.enumerate_networks(n, nw.BC, "zigzag"):
        assert nw.canonical(nw.network_of_w(nw.w_of_network(F))).factors == F.factors
    for F in nw.enumerate_networks(n + 1, nw.A, "zigzag"):
        assert nw.canonical(nw.network_of_w(nw.w_of_network(F))).factors == F.factors


def _interval_order(factors):
    """Reflexive-transitive closure of i -> j: i < j and the intervals share a point no factor between them covers."""
    sets = [set(sp.nonzero_range(c, d)) for c, d in factors]
    t = len(sets)
    rel = {(i, i) for i in range(t)}
    for i in range(t):
        for j in range(i + 1, t):
            between = set().union(*sets[i + 1 : j])
            if (sets[i] & sets[j]) - between:
                rel.add((i, j))
    changed = True
    while changed:
        changed = False
        for a, b in list(rel):
            for c, d in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    return rel


@pytest.mark.parametrize("n", [1, 2, 3])
def test_at_most_one_symmetric_factor(n):
    for F in nw.enumerate_networks(n, nw.BC, "zigzag"):
        sym = [f for f in F.factors if f[0] == -f[1]]
        assert len(sym) <= 1
        if sym:
            leq = _interval_order(F.factors)
            j = F.factors.index(sym[0])
            others = [i for i in range(len(F.factors)) if i != j]
            assert all((j, i) not in leq for i in others) or all((i, j) not in leq for i in others)


def test_path_matrix_goldens():
    F = nw.network(nw.A, (-2, 2), [(-2, -1), (1, 2)])
    assert nw.path_matrix_rows(F) == [[1, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 1], [0, 0, 1, 1]]
    plain = nw.network(nw.A, (-2, 2), [(-2, 1), (-1, 2), (-2, 1)], condensed=False)
    assert nw.path_matrix_rows(plain) == [[5, 5, 5, 2]] * 3 + [[2, 2, 2, 1]]
    condensed = nw.network(nw.A, (-2, 2), [(-2, 1), (-1, 2), (-2, 1)])
    assert nw.path_matrix_rows(condensed) == [[2, 2, 2, 1]] * 3 + [[1, 1, 1, 1]]
    I = nw.path_matrix_rows(nw.bc_network(2, []))
    assert I == [[int(i == j) for j in range(4)] for i in range(4)]


def _paths_oracle(F, i, j):
    # count source-to-sink paths by depth-first search over the explicit graph
    G = F.graph
    out = {}
    for e in G.edges:
        out.setdefault(e.tail, []).append(e.head)

    def walk(v):
        if v == ("snk", j):
            return 1
        return sum(walk(h) for h in out.get(v, []))

    return walk(("src", i))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_path_matrix_symmetry_and_oracle(n):
    for F in nw.enumerate_networks(n, nw.BC, "zigzag"):
        M = nw.path_matrix(F)
        for i in F.indices:
            for j in F.indices:
                assert M[i][j] == M[-i][-j] == _paths_oracle(F, i, j)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_lindstrom_on_descending_a_networks(n):
    for F in nw.enumerate_networks(n, nw.A, "descending"):
        M = nw.path_matrix_rows(F)
        disjoint = sum(
            1
            for pi in nw.covering_families(F)
            if pi.type() == tuple(range(1, n + 1))
            and not any(pi.intersect(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))
        )
        assert cc.determinant(M) == disjoint


def test_132313_families():
    F = nw.a_network(3, [(1, 3), (2, 3), (1, 3)], condensed=False)
    fams = list(nw.covering_families(F))
    assert len(fams) == 72
    assert Counter(pi.type() for pi in fams) == {w: 12 for w in sp.all_permutations(3)}
    G = nw.graphical_representation(F)
    assert G == {w: (1, 3, 4, 3, 1) for w in sp.all_permutations(3)}
    assert nw.at_q_equals_1(G) == {w: 12 for w in sp.all_permutations(3)}
    heights = {1: [1, 3, 2, 2], 2: [2, 2, 3, 1], 3: [3, 1, 1, 3]}
    (pi,) = [p for p in fams if all(p.trajectory(i) == h for i, h in heights.items())]
    assert pi.type() == (2, 1, 3)
    assert nw.defect_count(pi) == 3
    assert nw.defect_triples(pi) == [(1, 2, 2), (1, 3, 3), (2, 3, 3)]


def test_all010_defects():
    F = nw.bc_network(2, [(-2, 2), (-1, 1), (1, 2), (-2, 2)], condensed=False)
    heights = {2: [2, -2, -2, -1], 1: [1, -1, 1, 2], -1: [-1, 1, -1, -2], -2: [-2, 2, 2, 1]}
    found = [p for p in nw.covering_families(F) if all(p.trajectory(i)[:4] == h for i, h in heights.items())]
    assert found
    for pi in found:
        assert nw.defect_count(pi) == 4
        assert sorted(nw.defect_triples(pi)) == sorted([(-1, 1, 2), (-1, 2, 3), (1, 2, 4), (-2, 2, 4)])


@pytest.mark.parametrize("n", [1, 2, 3])
def test_zigzag_represents_bruhat_interval(n):
    for w in sp.pavoiding(n, "B"):
        F = nw.network_of_w(w)
        G = nw.graphical_representation(F)
        assert G == {v: (1,) for v in sp.bruhat_interval(w)}
        assert all(nw.defect_count(pi) == 0 for pi in nw.covering_families(F))


def test_empty_network_represents_identity():
    assert nw.graphical_representation(nw.bc_network(2, [])) == {sp.identity(2): (1,)}


def test_grounded_paths():
    w = sp.parse("3 -1 2")
    F = nw.network_of_w(w)
    (pi,) = [p for p in nw.covering_families(F) if p.type() == w]
    assert pi.grounded_set() == {2}
    assert nw.grounded(pi, 2) and not nw.grounded(pi, 1) and not nw.grounded(pi, 3)


def test_oplus_net():
    E = nw.bc_network(1, [(-1, 1)])
    F = nw.a_network(3, [(2, 3), (1, 2)])
    G = nw.oplus_net(E, F)
    # F is shifted up by k = 1 before stacking
    assert G.factors == ((-1, 1), (3, 4), (2, 3))
    assert nw.w_of_network(G) == sp.oplus(nw.w_of_network(E), nw.w_of_network(F))
    empty = nw.oplus_net(nw.bc_network(1, []), nw.a_network(1, []))
    assert empty.factors == () and empty.n == 2


def test_oplus_net_compatible_with_oplus():
    for E in nw.enumerate_networks(2, nw.BC, "descending"):
        for F in nw.enumerate_networks(2, nw.A, "descending"):
            G = nw.oplus_net(E, F)
            assert nw.w_of_network(G) == sp.oplus(nw.w_of_network(E), nw.w_of_network(F))
            assert nw.classify(G) in ("zigzag", "descending")


@given(st.sampled_from(nw.enumerate_networks(3, nw.BC, "zigzag")))
def test_network_text_round_trip(F):
    assert nw.parse_network(nw.format_network(F)).factors == F.factors
    assert nw.is_zigzag(F)


def test_bound_exceeded(monkeypatch):
    monkeypatch.setenv("BCCHROMA_MAX_N", "3")
    nw.enumerate_networks.cache_clear()
    with pytest.raises(ValueError):
        nw.enumerate_networks(4, nw.BC, "descending")
    nw.enumerate_networks.cache_clear()
