import random
from fractions import Fraction
from math import factorial

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from bcchroma import core_combinatorics as cc
from bcchroma import networks as nw
from bcchroma import posets_graphs as pg
from bcchroma import signed_permutations as sp
from bcchroma import traces_symmfns as ts


def _bip(text):
    return cc.parse_bipartition(text)


# --- S_n traces ----------------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_one_row_traces(n):
    for mu in cc.partitions_of(n):
        assert ts.sn_trace_value("eta", (n,), mu) == 1
        assert ts.sn_trace_value("epsilon", (n,), mu) == (-1) ** (n - len(mu))


def test_psi_is_scaled_indicator():
    psi = ts.sn_trace_basis("psi", (3,))
    assert psi.as_dict() == {(3,): 3, (2, 1): 0, (1, 1, 1): 0}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_induced_traces_match_kostka_expansion(n):
    for lam in cc.partitions_of(n):
        assert ts.sn_trace_basis("eta", lam) == ts.eta_via_kostka(lam)
        assert ts.sn_trace_basis("epsilon", lam) == ts.epsilon_via_kostka(lam)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_phi_and_gamma_invert_kostka(n):
    # phi^lam = sum_mu Kinv[lam, mu] chi^mu, so sum_lam K[nu, lam] phi^lam = chi^nu
    parts = cc.partitions_of(n)
    K = cc.kostka_matrix(n)
    for j, nu in enumerate(parts):
        total = ts.TraceVector("A", n, (0,) * len(parts))
        for i, mu in enumerate(parts):
            total = total + K[j][i] * ts.sn_trace_basis("phi", mu)
        assert total == ts.sn_trace_basis("chi", nu)


# --- B_n traces ----------------------------------------------------------------


def test_one_dimensional_bn_traces():
    for n in (1, 2, 3):
        hh = ts.bn_trace_basis("hh", ((n,), ()))
        ee = ts.bn_trace_basis("ee", ((), (n,)))
        for w in sp.all_signed_permutations(n):
            assert hh(w) == 1
            assert ee(w) == (-1) ** sp.length(w)
    iota = ts.bn_trace_basis("iota", ((1,), ()))
    assert iota.values == (2, 0)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_class_formula_matches_group_induction(n):
    w_by_class = {ts.class_of(w): w for w in sp.all_signed_permutations(n)}
    for pair in ts.BC_PAIRS:
        for bp in cc.bipartitions_of(n):
            theta = ts.bn_trace_basis(pair, bp)
            for c, w in w_by_class.items():
                assert theta.at(c) == ts.induced_pair_by_group(*pair, *bp, w)


def test_class_sizes_sum_to_group_order():
    for n in (1, 2, 3, 4):
        assert sum(ts.class_size("B", c) for c in cc.bipartitions_of(n)) == 2**n * factorial(n)
        assert sum(ts.class_size("A", c) for c in cc.partitions_of(n)) == factorial(n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_bn_character_orthogonality(n):
    bips = cc.bipartitions_of(n)
    chars = {bp: ts.bn_trace_basis("ss", bp) for bp in bips}
    order = 2**n * factorial(n)
    for a in bips:
        for b in bips:
            s = sum(ts.class_size("B", c) * chars[a].at(c) * chars[b].at(c) for c in bips)
            assert s == (order if a == b else 0)


_B3 = sp.all_signed_permutations(3)


@settings(max_examples=80)
@given(st.sampled_from(_B3), st.sampled_from(_B3), st.sampled_from(ts.BC_PAIRS + ("iota",)), st.sampled_from(cc.bipartitions_of(3)))
def test_trace_property(u, v, pair, bp):
    theta = ts.bn_trace_basis(pair, bp)
    assert theta(sp.multiply(u, v)) == theta(sp.multiply(v, u))


def test_class_representatives():
    for n in (1, 2, 3):
        for c in cc.bipartitions_of(n):
            assert ts.class_of(ts.class_representative("B", c)) == c
        for c in cc.partitions_of(n + 1):
            assert ts.class_of(ts.class_representative("A", c)) == c


def test_trace_vector_json_round_trip():
    th = ts.bn_trace_basis("ss", ((2,), (1,)))
    assert ts.TraceVector.from_json(th.to_json()) == th
    with pytest.raises(ValueError):
        ts.TraceVector("B", 2, (1, 2))


# --- Kazhdan-Lusztig evaluations -------------------------------------------------


def test_kl_examples():
    t = sp.parse("-1")
    D = ts.kl_element(t)
    assert ts.evaluate(ts.bn_trace_basis("ee", ((1,), ())), D) == 2
    assert ts.evaluate(ts.bn_trace_basis("ee", ((), (1,))), D) == 0
    e = sp.identity(3)
    th = ts.bn_trace_basis("ss", ((1,), (1, 1)))
    assert ts.evaluate(th, ts.kl_element(e)) == th(e)
    with pytest.raises(ValueError):
        ts.kl_element((3, 4, 1, 2))


def test_hh_counts_interval():
    for w in sp.pavoiding(3, "B"):
        D = ts.kl_element(w)
        assert ts.evaluate(ts.bn_trace_basis("hh", ((3,), ())), D) == len(sp.bruhat_interval(w))
    assert ts.evaluate(ts.bn_trace_basis("hh", ((3,), ())), ts.kl_element(sp.parse("2 3 -1"))) == 8


def test_chichi_21_11_value():
    # computed by three independent routes; frozen here
    w = sp.parse("2 3 4 5 -1")
    assert ts.evaluate(ts.bn_trace_basis("ss", ((2, 1), (1, 1))), ts.kl_element(w)) == 12


# --- immanants ------------------------------------------------------------------


def _rand_matrix(rng, n, lo=-3, hi=3):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]


def test_det_and_perm_immanants():
    rng = random.Random(11)
    for n in (1, 2, 3, 4):
        M = _rand_matrix(rng, n)
        S = sympy.Matrix(M)
        assert ts.immanant_A(ts.sn_trace_basis("epsilon", (n,)), M) == S.det()
        assert ts.immanant_A(ts.sn_trace_basis("eta", (n,)), M) == S.per()


def test_lmw_and_psi_immanants():
    rng = random.Random(12)
    M = _rand_matrix(rng, 4)
    for lam in cc.partitions_of(4):
        for kind in ("epsilon", "eta"):
            assert ts.lmw_evaluate(kind, lam, M) == ts.immanant_A(ts.sn_trace_basis(kind, lam), M)
        assert ts.psi_immanant(lam, M) == ts.immanant_A(ts.sn_trace_basis("psi", lam), M)
    I = [[int(i == j) for j in range(4)] for i in range(4)]
    assert ts.psi_immanant((1, 1, 1, 1), I) == 24
    assert ts.psi_immanant((2, 2), I) == 0
    with pytest.raises(ValueError):
        ts.lmw_evaluate("chi", (2, 2), M)


def test_immanant_dimension_errors():
    with pytest.raises(ValueError):
        ts.immanant_A(lambda w: 1, [[1, 2]])
    with pytest.raises(ValueError):
        ts.immanant_BC(lambda w: 1, [[1, 2, 3]] * 3)


@pytest.mark.parametrize("n", [2, 3])
def test_tensor_immanant_lemma(n):
    rng = random.Random(n)
    for _ in range(3):
        M = _rand_matrix(rng, 2 * n, -2, 2)
        for pair in (("epsilon", "eta"), ("chi", "chi"), ("psi", "psi")):
            for bp in cc.bipartitions_of(n):
                z = ts.sn_trace_basis(pair[0], bp[0]) if bp[0] else ts.TraceVector("A", 0, (1,))
                x = ts.sn_trace_basis(pair[1], bp[1]) if bp[1] else ts.TraceVector("A", 0, (1,))
                assert ts.immanant_BC(ts.bn_trace_basis(pair, bp), M) == ts.tensor_immanant(z, x, M)


def test_evaluations_equal_immanants_on_b2():
    rng = random.Random(5)
    bips = cc.bipartitions_of(2)
    for w in sp.pavoiding(2, "B"):
        A = nw.path_matrix(nw.network_of_w(w))
        D = ts.kl_element(w)
        for _ in range(10):
            th = ts.TraceVector("B", 2, tuple(rng.randint(-5, 5) for _ in bips))
            assert ts.evaluate(th, D) == ts.immanant_BC(th, A)


def test_x_plus_minus_on_identity():
    M = [[int(i == j) for j in range(4)] for i in range(4)]
    plus, minus = ts.x_plus_minus(M)
    assert plus == minus == [[1, 0], [0, 1]]


# --- symmetric functions ---------------------------------------------------------


def test_single_variable_schur():
    f = ts.SymFn.from_dict("BC", 1, "ss", {((1,), ()): 1})
    assert f.convert("mm").as_dict() == {((1,), ()): 1}


@pytest.mark.parametrize("basis", ts.BC_BASES)
def test_bc_basis_round_trips(basis):
    rng = random.Random(hash(basis) % 1000)
    bips = cc.bipartitions_of(3)
    f = ts.SymFn("BC", 3, basis, tuple(rng.randint(-4, 4) for _ in bips))
    g = f
    for b in ts.BC_BASES:
        g = g.convert(b)
    assert g.convert(basis).coeffs == f.coeffs


@pytest.mark.parametrize("basis", ts.A_BASES)
def test_a_basis_round_trips(basis):
    rng = random.Random(3)
    f = ts.SymFn("A", 4, basis, tuple(rng.randint(-4, 4) for _ in cc.partitions_of(4)))
    for b in ts.A_BASES:
        assert f.convert(b).convert(basis).coeffs == f.coeffs


def test_omega():
    for n in (1, 2, 3):
        for bp in cc.bipartitions_of(n):
            f = ts.SymFn.from_dict("BC", n, "p+p-", {bp: 1})
            sign = (-1) ** (n - len(bp[0]) - len(bp[1]))
            assert ts.omega(f).as_dict() == {bp: sign}
            g = ts.SymFn.from_dict("BC", n, "ee", {bp: 1})
            assert ts.omega(g) == ts.SymFn.from_dict("BC", n, "hh", {bp: 1})
            assert ts.omega(ts.omega(f)) == f
    assert ts.omega(ts.SymFn.from_dict("A", 3, "e", {(2, 1): 1})) == ts.SymFn.from_dict("A", 3, "h", {(2, 1): 1})


def test_plethystic_powers_expand_by_hand():
    f = ts.plethystic_power_in_pp((1,), (1,))
    # (p1(x)+p1(y))(p1(x)-p1(y)) = p11(x) - p11(y)
    assert f.as_dict() == {((1, 1), ()): 1, ((), (1, 1)): -1}


def test_symfn_json_and_str():
    f = ts.SymFn.from_dict("BC", 2, "mm", {((1,), (1,)): Fraction(3, 2)})
    assert ts.SymFn.from_json(f.to_json()) == f
    assert str(f) == "3/2·(mm)_{1|1}"
    with pytest.raises(ValueError):
        ts.SymFn.from_dict("BC", 2, "mm", {((3,), ()): 1})
    with pytest.raises(ValueError):
        ts.SymFn("A", 2, "q", (0, 0))


# --- Frobenius maps --------------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_frobenius_of_characters_is_schur(n):
    for lam in cc.partitions_of(n):
        assert ts.frobenius(ts.sn_trace_basis("chi", lam)) == ts.SymFn.from_dict("A", n, "s", {lam: 1})


@pytest.mark.parametrize("n", [1, 2, 3])
def test_plethystic_frobenius_dictionary(n):
    for bp in cc.bipartitions_of(n):
        got = ts.frobenius(ts.bn_trace_basis("iota", bp), "plethysticBC")
        assert got.as_dict() == {bp: 1}
        for pair in ("ee", "hh", "eh", "he", "ss", "mm", "ff", "mf", "fm"):
            got = ts.frobenius(ts.bn_trace_basis(pair, bp), "plethysticBC")
            assert got == ts.SymFn.from_dict("BC", n, pair, {bp: 1})


def _plethystic_schur_in_pp(lam, mu):
    # s_lam[X+Y] s_mu[X-Y] from character values, then p+/p- split by hand
    n = sum(lam) + sum(mu)
    out = ts.SymFn.zero("BC", n, "pp")
    for a in cc.partitions_of(sum(lam)) if lam else [()]:
        ca = Fraction(cc.sn_character(lam, a), cc.z_value(a)) if lam else Fraction(1)
        for b in cc.partitions_of(sum(mu)) if mu else [()]:
            cb = Fraction(cc.sn_character(mu, b), cc.z_value(b)) if mu else Fraction(1)
            out = out + (ca * cb) * ts.plethystic_power_in_pp(a, b)
    return out


@pytest.mark.parametrize("n", [1, 2, 3])
def test_nonplethystic_frobenius_dictionary(n):
    for bp in cc.bipartitions_of(n):
        got = ts.frobenius(ts.bn_trace_basis("ss", bp), "nonplethysticBC")
        assert got == _plethystic_schur_in_pp(*bp)
        got = ts.frobenius(ts.bn_trace_basis("pp", bp), "nonplethysticBC")
        assert got == ts.plethystic_power_in_pp(*bp)
        got = ts.frobenius(ts.bn_trace_basis("iota", bp), "nonplethysticBC")
        assert got.as_dict() == {bp: 2 ** (len(bp[0]) + len(bp[1]))}


def test_frobenius_group_mismatch():
    with pytest.raises(ValueError):
        ts.frobenius(ts.bn_trace_basis("ss", ((1,), ())), "A")
    with pytest.raises(ValueError):
        ts.frobenius(ts.sn_trace_basis("chi", (1,)), "plethysticBC")


# --- generating functions -------------------------------------------------------


def test_y_bc_small():
    assert ts.Y_BC(ts.algebra_identity("B", 1)).as_dict() == {((1,), ()): 1, ((), (1,)): 1}
    assert ts.Y_BC(ts.kl_element(sp.parse("-1"))).as_dict() == {((1,), ()): 2}
    assert str(ts.Y_BC(ts.kl_element(sp.parse("-1")))) == "2·(mm)_{1|}"


def test_y_bc_expansions_agree():
    rng = random.Random(21)
    elems = sp.all_signed_permutations(3)
    for _ in range(5):
        D = {rng.choice(elems): rng.randint(-5, 5) for _ in range(6)}
        Y = ts.Y_BC(D, 3)
        for key, f in ts.Y_BC_expansions(D, 3).items():
            assert f == Y, key
        wY = ts.omega(Y)
        for key, f in ts.Y_BC_expansions(D, 3, dual=True).items():
            assert f == wY, key


def test_printed_power_sum_lines_fail_for_odd_n():
    D = ts.algebra_identity("B", 1)
    Y = ts.Y_BC(D, 1)
    printed = ts.Y_BC_expansions_as_printed(D, 1)
    assert printed["ψψ->pp"] != Y
    assert printed["ι->p+p-"] != Y


def test_y_a_expansions_agree():
    D = ts.kl_element((2, 3, 1, 4))
    Y = ts.Y_A(D, 4)
    for key, f in ts.Y_A_expansions(D, 4).items():
        assert f == Y, key


def test_inverse_y():
    rng = random.Random(4)
    elems = sp.all_signed_permutations(2)
    D0 = {rng.choice(elems): rng.randint(-3, 3) for _ in range(4)}
    f = ts.Y_BC(D0, 2)
    assert ts.Y_BC(ts.inverse_Y(f), 2) == f
    zero = ts.SymFn.zero("BC", 2, "mm")
    assert ts.Y_BC(ts.inverse_Y(zero), 2) == zero
    p = ts.SymFn.from_dict("BC", 2, "p+p-", {((2,), ()): 1})
    D = ts.inverse_Y(p)
    assert len({ts.class_of(v) for v in D}) == 1
    assert ts.Y_BC(D, 2) == p
    g = ts.Y_A(ts.kl_element((2, 1, 3)), 3)
    assert ts.Y_A(ts.inverse_Y_A(g), 3) == g


# --- chromatic symmetric functions ------------------------------------------------


def _multinomial(lam):
    out = factorial(sum(lam))
    for p in lam:
        out //= factorial(p)
    return out


def test_chromatic_edgeless_and_complete():
    for n in (1, 2, 3, 4):
        X = ts.chromatic_A(pg.inc(pg.chain(n)))
        assert X.as_dict() == {lam: _multinomial(lam) for lam in cc.partitions_of(n)}
        K = ts.chromatic_A(pg.inc(pg.antichain(n)))
        assert K == ts.SymFn.from_dict("A", n, "e", {(n,): factorial(n)})


def test_chromatic_q_at_one():
    for w in sp.codominant(4, "A"):
        G = pg.inc(pg.p_of_w(w))
        Xq = ts.chromatic_A_q(G)
        assert Xq.to_symfn_at_1() == ts.chromatic_A(G)
        assert Xq.is_symmetric()
        assert ts.QSymFnA.from_json(Xq.to_json()) == Xq


def test_chromatic_q_single_edge():
    G = pg.inc(pg.p_of_w((2, 1)))
    Xq = ts.chromatic_A_q(G)
    assert Xq.coeffs == {(1, 1): (1, 1)}
    assert str(Xq) == "(1 + q)·M_{1,1}"


@pytest.mark.parametrize("n", [1, 2, 3])
def test_bc_chromatic_equals_y(n):
    for w in sp.codominant(n, "B"):
        assert ts.Y_BC(ts.kl_element(w), n) == ts.chromatic_BC(pg.inc(pg.q_of_w(w)))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_type_a_chromatic_equals_y(n):
    for w in sp.codominant(n, "A"):
        assert ts.Y_A(ts.kl_element(w), n) == ts.chromatic_A(pg.inc(pg.p_of_w(w)))


def test_family_names():
    assert ts.parse_pair("hh") == ("eta", "eta")
    assert ts.parse_pair("ηε") == ("eta", "epsilon")
    assert ts.parse_pair("chi,psi") == ("chi", "psi")
    with pytest.raises(ValueError):
        ts.parse_pair("xyz")
    with pytest.raises(ValueError):
        ts.family_name("zeta")
