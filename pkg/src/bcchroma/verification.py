"""Theorem-checking harness: every identity is recomputed two ways and compared exactly.

Each suite takes a size bound ``n`` and returns a :class:`Report`.  Type-BC
suites run over B_1..B_n (or B_n alone where noted), type-A suites over S_n.
"""

from __future__ import annotations

import json
import os
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, prod

from . import core_combinatorics as cc
from . import networks as nw
from . import posets_graphs as pg
from . import signed_permutations as sp
from . import tableaux as tb
from . import traces_symmfns as ts

transpose = cc.transpose


@dataclass
class Record:
    identity: str
    inputs: str
    expected: object
    got: object

    @property
    def passed(self) -> bool:
        return self.expected == self.got

    def as_dict(self) -> dict:
        return {
            "identity": self.identity,
            "inputs": self.inputs,
            "expected": _jsonable(self.expected),
            "got": _jsonable(self.got),
            "pass": self.passed,
        }


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, (int, str, bool)) or x is None:
        return x
    return str(x)


@dataclass
class Report:
    suite: str
    n: int
    records: list = field(default_factory=list)
    wall_time: float = 0.0

    def add(self, identity, inputs, expected, got):
        self.records.append(Record(identity, str(inputs), expected, got))

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.records)

    @property
    def failed(self) -> int:
        return len(self.records) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def failures(self) -> list:
        return [r for r in self.records if not r.passed]

    def summary(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "checks": len(self.records),
            "passed": self.passed,
            "failed": self.failed,
            "wall_time": round(self.wall_time, 3),
        }

    def to_dict(self) -> dict:
        return {"summary": self.summary(), "records": [r.as_dict() for r in self.records]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def _sample(items, k, seed):
    items = list(items)
    if k is None or k >= len(items):
        return items
    return random.Random(seed).sample(items, k)


def _fmt(w) -> str:
    return sp.format_perm(w) if isinstance(w, sp.SignedPermutation) else "".join(map(str, w))


# --- census and bijections ---------------------------------------------------------------


def suite_catalan(n: int, rep: Report):
    for k in range(1, n + 1):
        rep.add("|D^BC| = C_(n+1)", f"n={k}", catalan(k + 1), len(nw.enumerate_networks(k, nw.BC, "descending")))
        rep.add("|codominant B_n| = C_(n+1)", f"n={k}", catalan(k + 1), len(sp.codominant(k, "B")))
    for k in range(1, min(n, 4) + 1):
        z = len(nw.enumerate_networks(k, nw.BC, "zigzag"))
        rep.add("|Z^BC| = |pavoiding B_n|", f"n={k}", len(sp.pavoiding(k, "B")), z)
        if k <= 3:
            rep.add("|Z^BC_[-n,n]| = |Z^A_[1,n+1]|", f"n={k}", len(nw.enumerate_networks(k + 1, nw.A, "zigzag")), z)
    if n >= 3:
        rep.add("twenty-two BC zig-zag networks", "n=3", 22, len(nw.enumerate_networks(3, nw.BC, "zigzag")))


def suite_roundtrips(n: int, rep: Report):
    nb, na = min(n, 4), min(n + 1, 5)
    for k in range(1, nb + 1):
        for w in sp.codominant(k, "B"):
            F = nw.network_of_w(w)
            rep.add("w(F_w) = w", _fmt(w), w, nw.w_of_network(F))
            rep.add("F_w descending", _fmt(w), True, nw.is_descending(F))
            rep.add("w(Q(w)) = w", _fmt(w), w, pg.w_of_q(pg.q_of_w(w)))
            rep.add("Q(w) via network", _fmt(w), pg.q_of_w(w), pg.q_of_w_network(w))
        for F in nw.enumerate_networks(k, nw.BC, "descending"):
            rep.add("F_(w(F)) = F", nw.format_network(F), F, nw.canonical(nw.network_of_w(nw.w_of_network(F))))
    for k in range(1, na + 1):
        for w in sp.codominant(k, "A"):
            rep.add("w(F_w) = w (A)", _fmt(w), w, nw.w_of_network(nw.network_of_w(w)))
            rep.add("w(P(w)) = w", _fmt(w), w, pg.w_of_p(pg.p_of_w(w)))
    # orientations and descent-free sequences
    for k in range(1, min(n, 3) + 1):
        for w in sp.codominant(k, "B"):
            Q = pg.q_of_w(w)
            G = pg.inc(Q)
            seqs = set()
            for O in pg.enumerate_marked_orientations(G):
                seq = pg.orientation_to_sequence(G.vertices, O)
                seqs.add(seq)
                back = pg.sequence_to_orientation(G, seq)
                if back != O or not pg.is_descent_free(Q, seq):
                    rep.add("PtoO(OtoP(O)) = O", f"{_fmt(w)} {sorted(O.arcs)}", O, back)
            rep.add("OtoP image = descent-free sequences", _fmt(w), set(pg.descent_free_sequences(Q)), seqs)


# --- trace evaluations ---------------------------------------------------------------------


def _bc_words(n, sample=None, seed=0):
    return _sample(sp.pavoiding(n, "B"), sample, seed)


def _ev(pair, bp, D):
    return ts.evaluate(ts.bn_trace_basis(pair, bp), D)


def suite_epsiloneta(n: int, rep: Report, sample=None):
    cs, rs = ["column-strict"], ["row-semistrict"]
    for w in _bc_words(n, sample):
        D, Q = ts.kl_element(w), pg.q_of_w(w)
        for bp in cc.bipartitions_of(n):
            lam, mu = bp
            inp = f"w={_fmt(w)} {cc.format_bipartition(bp)}"
            rep.add("εε: column-strict", inp, _ev("ee", bp, D), tb.count_bitableaux(Q, transpose(lam), transpose(mu), cs, cs))
            rep.add("εη: column-strict, row-semistrict", inp, _ev("eh", bp, D), tb.count_bitableaux(Q, transpose(lam), mu, cs, rs))
            rep.add("ηε: row-semistrict, column-strict", inp, _ev("he", bp, D), tb.count_bitableaux(Q, lam, transpose(mu), rs, cs))
            rep.add("ηη: row-semistrict", inp, _ev("hh", bp, D), tb.count_bitableaux(Q, lam, mu, rs, rs))


def suite_chi(n: int, rep: Report, sample=None):
    for w in _bc_words(n, sample):
        D, Q = ts.kl_element(w), pg.q_of_w(w)
        for bp in cc.bipartitions_of(n):
            rep.add(
                "χχ: standard", f"w={_fmt(w)} {cc.format_bipartition(bp)}",
                _ev("ss", bp, D), tb.count_bitableaux(Q, bp[0], bp[1], ["standard"], ["standard"]),
            )


def suite_psi(n: int, rep: Report, sample=None):
    cyc = ["cyclically-row-semistrict"]
    for w in _bc_words(n, sample):
        D, Q = ts.kl_element(w), pg.q_of_w(w)
        for bp in cc.bipartitions_of(n):
            rep.add(
                "ψψ: cyclically row-semistrict", f"w={_fmt(w)} {cc.format_bipartition(bp)}",
                _ev("pp", bp, D), tb.count_bitableaux(Q, bp[0], bp[1], cyc, cyc),
            )


def suite_c_epsiloneta(n: int, rep: Report, sample=None):
    cs, ef = ["column-strict"], ["excedance-free"]
    pr = ["row-closed", "left-row-strict"]
    for w in _bc_words(n, sample):
        D, Q = ts.kl_element(w), pg.q_of_w(w)
        G = pg.inc(Q)
        F = nw.network_of_w(w)
        fams = list(nw.covering_families(F))
        for bp in cc.bipartitions_of(n):
            lam, mu = bp
            inp = f"w={_fmt(w)} {cc.format_bipartition(bp)}"
            ee, eh, he, hh = (_ev(p, bp, D) for p in ("ee", "eh", "he", "hh"))
            rep.add("εε: marked colorings", inp, ee, pg.count_marked_colorings(G, lam, mu))
            rep.add("εη: (i) excedance-free", inp, eh, tb.count_bitableaux(Q, transpose(lam), mu, cs, ef))
            rep.add("ηε: (i) excedance-free", inp, he, tb.count_bitableaux(Q, lam, transpose(mu), ef, cs))
            rep.add("ηη: (i) excedance-free", inp, hh, tb.count_bitableaux(Q, lam, mu, ef, ef))
            rep.add("ηη: (ii) row-closed left row-strict F_w", inp, hh, tb.count_path_bitableaux(F, lam, mu, pr, pr, fams))
            rep.add("ηη: (iii) subgraph-sequence orientations", inp, hh, pg.count_subgraph_sequence_orientations(G, lam, mu))


def suite_c_psi(n: int, rep: Report, sample=None):
    rf = ["record-free", "row-semistrict"]
    ra = ["right-anchored", "row-semistrict"]
    for w in _bc_words(n, sample):
        D, Q = ts.kl_element(w), pg.q_of_w(w)
        G = pg.inc(Q)
        F = nw.network_of_w(w)
        fams = list(nw.covering_families(F))
        for bp in cc.bipartitions_of(n):
            lam, mu = bp
            inp = f"w={_fmt(w)} {cc.format_bipartition(bp)}"
            pp = _ev("pp", bp, D)
            rep.add("ψψ: (i) record-free row-semistrict", inp, pp, tb.count_bitableaux(Q, lam, mu, rf, rf))
            rep.add("ψψ: (ii) cylindrical F_w", inp, pp, tb.count_path_bitableaux(F, lam, mu, ["cylindrical"], ["cylindrical"], fams))
            rep.add("ψψ: (iii) right-anchored", inp, pp, prod(lam) * prod(mu) * tb.count_bitableaux(Q, lam, mu, ra, ra))
            rep.add("ψψ: (iv) one-source orientations", inp, pp, pg.count_subgraph_sequence_orientations(G, lam, mu, True))


def _n_cycle_families(fams, n):
    return sum(1 for pi in fams if sp.cycle_type(sp.phi(pi.type())) == (n,))


def _share_only(pi, allowed) -> bool:
    idx = pi.network.indices
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            i, j = idx[a], idx[b]
            if pi.intersect(i, j) and not allowed(i, j):
                return False
    return True


def suite_detDBPB(n: int, rep: Report):
    psi_n = ts.sn_trace_basis("psi", (n,))
    for w in sp.pavoiding(n, "B"):
        F = nw.network_of_w(w)
        fams = list(nw.covering_families(F))
        Ap, Am = ts.x_plus_minus(nw.path_matrix(F))
        lt = sp.lengths(w)[1]
        e = sp.identity(n)
        t = sp.generator_t(n)
        inp = f"w={_fmt(w)}"
        N = len(fams)
        rep.add("perm(A+) = #Π^BC", inp, N, cc.permanent(Ap))
        rep.add("perm(A-) = #Π^BC [ℓ_t = 0]", inp, N if lt == 0 else 0, cc.permanent(Am))
        rep.add("perm(A-) = same-sign sharing families", inp,
                sum(_share_only(pi, lambda i, j: (i > 0) == (j > 0)) for pi in fams), cc.permanent(Am))
        rep.add("det(A+) = 2^ℓ(w) [w in {e,t}]", inp, 2 ** sp.length(w) if w in (e, t) else 0, cc.determinant(Ap))
        rep.add("det(A+) = families sharing only within [-1,1]", inp,
                sum(_share_only(pi, lambda i, j: abs(i) <= 1 and abs(j) <= 1) for pi in fams), cc.determinant(Ap))
        rep.add("det(A-) = [w = e]", inp, int(w == e), cc.determinant(Am))
        rep.add("det(A-) = vertex-disjoint families", inp, sum(_share_only(pi, lambda i, j: False) for pi in fams), cc.determinant(Am))
        cyc = n * _n_cycle_families(fams, n)
        rep.add("Imm_ψn(A+) = n·#(n-cycle types)", inp, cyc, ts.immanant_A(psi_n, Ap))
        rep.add("Imm_ψn(A-) = n·#(n-cycle types)[ℓ_t = 0]", inp, cyc if lt == 0 else 0, ts.immanant_A(psi_n, Am))


def suite_colstrictetc(n: int, rep: Report):
    psi_n = ts.sn_trace_basis("psi", (n,))
    rs, ef = ["row-semistrict"], ["excedance-free"]
    for w in sp.pavoiding(n, "B"):
        F = nw.network_of_w(w)
        fams = list(nw.covering_families(F))
        Q = pg.q_of_w(w)
        G = pg.inc(Q)
        Ap, Am = ts.x_plus_minus(nw.path_matrix(F))
        inp = f"w={_fmt(w)}"
        pa, pm = cc.permanent(Ap), cc.permanent(Am)
        rep.add("perm(A+) = left row-strict F_w-tableaux", inp, pa, tb.count_path_bitableaux(F, (n,), (), ["left-row-strict"], (), fams))
        rep.add("perm(A+) = descent-free", inp, pa, tb.count_bitableaux(Q, (n,), (), rs))
        rep.add("perm(A+) = excedance-free", inp, pa, tb.count_bitableaux(Q, (n,), (), ef))
        rep.add("perm(A+) = marked acyclic orientations", inp, pa, sum(1 for _ in pg.enumerate_marked_orientations(G)))
        none_g = not Q.grounded
        rep.add("perm(A-) = descent-free, nothing grounded", inp, pm, tb.count_bitableaux(Q, (n,), (), rs) if none_g else 0)
        rep.add("perm(A-) = left row-strict, no grounded paths", inp, pm,
                sum(1 for pi, U, V in tb.enumerate_path_bitableaux(F, (n,), (), ["left-row-strict"], (), fams) if not pi.grounded_set()))
        rep.add("perm(A-) = acyclic orientations, nothing grounded", inp, pm, pg.count_acyclic_orientations(G) if none_g else 0)
        rep.add("perm(A-) = excedance-free, nothing grounded", inp, pm, tb.count_bitableaux(Q, (n,), (), ef) if none_g else 0)
        da, dm = cc.determinant(Ap), cc.determinant(Am)
        k = len(Q.grounded)
        is_chain = all(Q.comparable(a, b) for a in Q.elements for b in Q.elements)
        rep.add("det(A+) = column-strict 1^n, at most one grounded", inp, da,
                tb.count_bitableaux(Q, (1,) * n, (), ["column-strict"]) if k <= 1 else 0)
        rep.add("det(A+) = marked colorings of type (n|)", inp, da, pg.count_marked_colorings(G, (n,), ()))
        rep.add("det(A+) = 2^k [chain, k <= 1 grounded]", inp, da, 2**k if is_chain and k <= 1 else 0)
        rep.add("det(A-) = column-strict 1^n, nothing grounded", inp, dm,
                tb.count_bitableaux(Q, (1,) * n, (), ["column-strict"]) if none_g else 0)
        rep.add("det(A-) = marked colorings of type (|n)", inp, dm, pg.count_marked_colorings(G, (), (n,)))
        rep.add("det(A-) = [chain, nothing grounded]", inp, dm, int(is_chain and none_g))
        ip, im = ts.immanant_A(psi_n, Ap), ts.immanant_A(psi_n, Am)
        cyc = ["cyclically-row-semistrict"]
        rep.add("Imm_ψn(A+) = cylindrical", inp, ip, tb.count_path_bitableaux(F, (n,), (), ["cylindrical"], (), fams))
        rep.add("Imm_ψn(A+) = cyclically row-semistrict", inp, ip, tb.count_bitableaux(Q, (n,), (), cyc))
        rep.add("Imm_ψn(A+) = record-free row-semistrict", inp, ip, tb.count_bitableaux(Q, (n,), (), ["record-free", "row-semistrict"]))
        rep.add("Imm_ψn(A+) = n·right-anchored", inp, ip, n * tb.count_bitableaux(Q, (n,), (), ["right-anchored", "row-semistrict"]))
        rep.add("Imm_ψn(A+) = one-source marked orientations", inp, ip, pg.count_subgraph_sequence_orientations(G, (n,), (), True))
        rep.add("Imm_ψn(A-) = cyclically row-semistrict, nothing grounded", inp, im, tb.count_bitableaux(Q, (n,), (), cyc) if none_g else 0)
        for label, props, mult in (("record-free row-semistrict", ["record-free", "row-semistrict"], 1),
                                   ("n·right-anchored", ["right-anchored", "row-semistrict"], n)):
            rep.add(f"Imm_ψn(A-) = {label}, nothing grounded", inp, im,
                    mult * tb.count_bitableaux(Q, (n,), (), props) if none_g else 0)
        rep.add("Imm_ψn(A-) = one-source orientations, nothing grounded", inp, im,
                pg.count_acyclic_orientations(G, one_source=True) if none_g else 0)
        rep.add("Imm_ψn(A-) = cylindrical, no grounded paths", inp, im,
                sum(1 for pi, U, V in tb.enumerate_path_bitableaux(F, (n,), (), ["cylindrical"], (), fams) if not pi.grounded_set()))


def _random_trace(group, n, rng):
    return ts.TraceVector(group, n, tuple(rng.randint(-9, 9) for _ in ts.classes(group, n)))


def suite_charevalimmbc(n: int, rep: Report, traces_per_w: int = 20):
    rng = random.Random(n)
    for k in range(1, n + 1):
        for w in sp.pavoiding(k, "B"):
            A = nw.path_matrix(nw.network_of_w(w))
            D = ts.kl_element(w)
            for t in range(traces_per_w):
                th = _random_trace("B", k, rng)
                rep.add("θ(C'_w(1)) = Imm_θ(A)", f"w={_fmt(w)} θ={th.values}", ts.evaluate(th, D), ts.immanant_BC(th, A))


def suite_tensorimm(n: int, rep: Report, matrices: int = 2):
    rng = random.Random(100 + n)
    for k in range(1, n + 1):
        for _ in range(matrices):
            M = [[rng.randint(-3, 3) for _ in range(2 * k)] for _ in range(2 * k)]
            for pair in ts.BC_PAIRS:
                for bp in cc.bipartitions_of(k):
                    z = ts.sn_trace_basis(pair[0], bp[0])
                    x = ts.sn_trace_basis(pair[1], bp[1])
                    rep.add(
                        "Imm_(ζξ)(M) = Σ_I Imm_ζ(M+_I) Imm_ξ(M-_J)", f"{pair} {cc.format_bipartition(bp)} M={M}",
                        ts.immanant_BC(ts.bn_trace_basis(pair, bp), M), ts.tensor_immanant(z, x, M),
                    )


def _a_path_rows(w):
    M = nw.path_matrix(nw.network_of_w(w))
    return [[M[i][j] for j in range(1, len(w) + 1)] for i in range(1, len(w) + 1)]


def suite_immid(n: int, rep: Report):
    for w in sp.pavoiding(n, "A"):
        A = _a_path_rows(w)
        D = ts.kl_element(w)
        for fam in ts.A_FAMILIES:
            for lam in cc.partitions_of(n):
                th = ts.sn_trace_basis(fam, lam)
                rep.add("θ(C'_w(1)) = Imm_θ(A)", f"w={_fmt(w)} {fam}^{cc.format_partition(lam)}", ts.evaluate(th, D), ts.immanant_A(th, A))
        for lam in cc.partitions_of(n):
            inp = f"w={_fmt(w)} {cc.format_partition(lam)}"
            rep.add("LMW ε", inp, ts.immanant_A(ts.sn_trace_basis("epsilon", lam), A), ts.lmw_evaluate("epsilon", lam, A))
            rep.add("LMW η", inp, ts.immanant_A(ts.sn_trace_basis("eta", lam), A), ts.lmw_evaluate("eta", lam, A))
            rep.add("ψ-immanant", inp, ts.immanant_A(ts.sn_trace_basis("psi", lam), A), ts.psi_immanant(lam, A))


def suite_wtc1interps(n: int, rep: Report, words=None):
    words = sp.codominant(n, "A") if words is None else words
    for w in words:
        D = ts.kl_element(w)
        P = pg.p_of_w(w)
        G = pg.inc(P)
        F = nw.network_of_w(w)
        fams = list(nw.covering_families(F))
        for lam in cc.partitions_of(n):
            inp = f"w={_fmt(w)} {cc.format_partition(lam)}"
            ev = {f: ts.evaluate(ts.sn_trace_basis(f, lam), D) for f in ts.A_FAMILIES}
            ct = lambda shape, props: tb.count_tableaux(P, shape, props)
            rep.add("(i-a) ε: column-strict", inp, ev["epsilon"], ct(transpose(lam), ["column-strict"]))
            rep.add("(i-b) ε: colorings", inp, ev["epsilon"], sum(1 for _ in pg.proper_colorings_of_type(G, lam)))
            rep.add("(ii-a) η: row-closed left row-strict F_w", inp, ev["eta"], tb.count_path_tableaux(F, lam, ["row-closed", "left-row-strict"], fams))
            rep.add("(ii-b) η: row-semistrict", inp, ev["eta"], ct(lam, ["row-semistrict"]))
            rep.add("(ii-c) η: excedance-free", inp, ev["eta"], ct(lam, ["excedance-free"]))
            rep.add("(iii) χ: standard", inp, ev["chi"], ct(lam, ["standard"]))
            rep.add("(iv-a) ψ: cylindrical F_w", inp, ev["psi"], tb.count_path_tableaux(F, lam, ["cylindrical"], fams))
            rep.add("(iv-b) ψ: cyclically row-semistrict", inp, ev["psi"], ct(lam, ["cyclically-row-semistrict"]))
            rep.add("(iv-c) ψ: record-free row-semistrict", inp, ev["psi"], ct(lam, ["record-free", "row-semistrict"]))
            rep.add("(iv-d) ψ: right-anchored", inp, ev["psi"], prod(lam) * ct(lam, ["right-anchored", "row-semistrict"]))


def suite_wtc1interpssubg(n: int, rep: Report):
    for w in sp.codominant(n, "A"):
        D = ts.kl_element(w)
        G = pg.inc(pg.p_of_w(w))
        for lam in cc.partitions_of(n):
            inp = f"w={_fmt(w)} {cc.format_partition(lam)}"
            rep.add("η: subgraph-sequence orientations", inp, ts.evaluate(ts.sn_trace_basis("eta", lam), D),
                    pg.count_subgraph_sequence_orientations(G, lam))
            rep.add("ψ: one source per subgraph", inp, ts.evaluate(ts.sn_trace_basis("psi", lam), D),
                    pg.count_subgraph_sequence_orientations(G, lam, one_source=True))


# --- symmetric functions --------------------------------------------------------------------


def suite_bcxy(n: int, rep: Report):
    for k in range(1, n + 1):
        for w in sp.pavoiding(k, "B"):
            Y = ts.Y_BC(ts.kl_element(w), k)
            X = ts.chromatic_BC(pg.inc(pg.q_of_w(w)))
            rep.add("Y^BC(C'_w(1)) = X^BC_inc(Q(w))", _fmt(w), X.coeffs, Y.coeffs)


def suite_YequalsX(n: int, rep: Report):
    for w in sp.pavoiding(n, "A"):
        G = pg.inc(pg.p_of_w(w))
        Y = ts.Y_A(ts.kl_element(w), n)
        X = ts.chromatic_A(G)
        Xq = ts.chromatic_A_q(G)
        rep.add("Y(C'_w(1)) = X_inc(P(w))", _fmt(w), X.coeffs, Y.coeffs)
        rep.add("X_(G,1) = X_G", _fmt(w), X.coeffs, Xq.to_symfn_at_1().coeffs)
        rep.add("X_(G,q) symmetric", _fmt(w), True, Xq.is_symmetric())


def _random_element(group, n, rng, size=8):
    elems = ts.all_elements(group, n)
    D = {}
    for _ in range(size):
        D[rng.choice(elems)] = Fraction(rng.randint(-6, 6))
    return D


def suite_YBCexpansions(n: int, rep: Report, samples: int = 20):
    rng = random.Random(7 + n)
    for s in range(samples):
        D = _random_element("B", n, rng)
        Y = ts.Y_BC(D, n)
        for name, f in ts.Y_BC_expansions(D, n).items():
            rep.add(f"Y^BC: {name}", f"sample {s}", Y.coeffs, f.convert("mm").coeffs)
        oY = ts.omega(Y)
        for name, f in ts.Y_BC_expansions(D, n, dual=True).items():
            rep.add(f"ωY^BC: {name}", f"sample {s}", oY.coeffs, f.convert("mm").coeffs)
        rep.add("ω involution", f"sample {s}", Y.coeffs, ts.omega(oY).coeffs)
        rep.add("Y^BC(inverse_Y(f)) = f", f"sample {s}", Y.coeffs, ts.Y_BC(ts.inverse_Y(Y), n).coeffs)
    for s in range(samples // 4):
        D = _random_element("A", n, rng)
        Y = ts.Y_A(D, n)
        for name, f in ts.Y_A_expansions(D, n).items():
            rep.add(f"Y: {name}", f"sample {s}", Y.coeffs, f.convert("m").coeffs)


def suite_frobenius(n: int, rep: Report):
    table = {"hh": "hh", "he": "he", "eh": "eh", "ee": "ee", "mm": "mm", "mf": "mf",
             "fm": "fm", "ff": "ff", "ss": "ss", "pp": "pp"}
    for k in range(1, n + 1):
        for lam in cc.partitions_of(k):
            for fam, b in zip(ts.A_FAMILIES, ("e", "h", "s", "p", "m", "f")):
                got = ts.frobenius(ts.sn_trace_basis(fam, lam), "A")
                rep.add(f"frob({fam}) = {b}", cc.format_partition(lam), ts.SymFn.from_dict("A", k, b, {lam: 1}).coeffs, got.convert(b).coeffs)
        for bp in cc.bipartitions_of(k):
            for pair, b in table.items():
                got = ts.frobenius(ts.bn_trace_basis(pair, bp), "plethysticBC").convert(b)
                rep.add(f"pfrob({pair}) = ({b})", cc.format_bipartition(bp), ts.SymFn.from_dict("BC", k, b, {bp: 1}).coeffs, got.coeffs)
            got = ts.frobenius(ts.bn_trace_basis("iota", bp), "plethysticBC").convert("p+p-")
            rep.add("pfrob(ι) = p+p-", cc.format_bipartition(bp), ts.SymFn.from_dict("BC", k, "p+p-", {bp: 1}).coeffs, got.coeffs)
            rep.add("p+p- in (pp): character bridge = direct expansion", cc.format_bipartition(bp),
                    ts.plethystic_power_in_pp(*bp).coeffs, ts.SymFn.from_dict("BC", k, "p+p-", {bp: 1}).convert("pp").coeffs)


# --- equivalences ---------------------------------------------------------------------------


def _trace_values(w):
    return tuple(v for _, v in sorted(ts.trace_vector_at(w).items(), key=lambda kv: repr(kv[0])))


def suite_BCcodominant(n: int, rep: Report):
    cods = [(v, pg.q_of_w(v), _trace_values(v)) for v in sp.codominant(n, "B")]
    for w in sp.pavoiding(n, "B"):
        Q = pg.q_of_w(w)
        tv = _trace_values(w)
        match = [v for v, Qv, tvv in cods if pg.decorated_iso(Q, Qv) and tvv == tv]
        rep.add("∃ codominant v: Q(v) ≅ Q(w), same traces", _fmt(w), True, bool(match))


def suite_Acodominant(n: int, rep: Report):
    cods = [(v, pg.p_of_w(v), _trace_values(v)) for v in sp.codominant(n, "A")]
    for w in sp.pavoiding(n, "A"):
        P = pg.p_of_w(w)
        tv = _trace_values(w)
        match = [v for v, Pv, tvv in cods if pg.decorated_iso(P, Pv) and tvv == tv]
        rep.add("∃ codominant v: P(v) ≅ P(w), same traces", _fmt(w), True, bool(match))


def _equiv_suite(words, rep, label):
    data = [(w, pg.gamma_of_w(w), _trace_values(w)) for w in words]
    for i in range(len(data)):
        for j in range(i + 1, len(data)):
            v, Gv, tv = data[i]
            w, Gw, tw = data[j]
            if pg.graph_iso(Gv, Gw):
                rep.add(label, f"{_fmt(v)} ~ {_fmt(w)}", tv, tw)


def suite_BCequivimplications(n: int, rep: Report):
    _equiv_suite(sp.pavoiding(n, "B"), rep, "Γ(v) ≅ Γ(w) ⟹ equal traces")


def suite_Aequivimplications(n: int, rep: Report):
    _equiv_suite(sp.pavoiding(n, "A"), rep, "G(v) ≅ G(w) ⟹ equal traces")


# --- worked examples --------------------------------------------------------------------------


def suite_defects(n: int, rep: Report):
    F = nw.a_network(3, [(1, 3), (2, 3), (1, 3)], condensed=False)
    fams = list(nw.covering_families(F))
    rep.add("132313: number of families", nw.format_network(F), 72, len(fams))
    G = nw.graphical_representation(F)
    expected = {v: (1, 3, 4, 3, 1) for v in sp.bruhat_interval((3, 2, 1))}
    rep.add("132313: (1+q)^2(1+q+q^2) Σ_(v ≤ 321) T_v", nw.format_network(F), expected, G)
    F = nw.bc_network(2, [(-2, 2), (-1, 1), (1, 2), (-2, 2)], condensed=False)
    target = {2: [2, -2, -2, -1], 1: [1, -1, 1, 2], -1: [-1, 1, -1, -2], -2: [-2, 2, 2, 1]}
    # the last factor does not constrain the heights listed, so several families match
    found = [pi for pi in nw.covering_families(F) if all(pi.trajectory(i)[:4] == t for i, t in target.items())]
    want = sorted([(-1, 1, 2), (-1, 2, 3), (1, 2, 4), (-2, 2, 4)])
    rep.add("all010: family found", nw.format_network(F), True, bool(found))
    for pi in found:
        rep.add("all010: defect triples", f"type {_fmt(pi.type())}", want, sorted(nw.defect_triples(pi)))
    for k in range(1, min(n, 3) + 1):
        for Fz in nw.enumerate_networks(k, nw.BC, "zigzag"):
            bad = sum(1 for pi in nw.covering_families(Fz) if nw.defect_count(pi))
            rep.add("zig-zag families have no defects", nw.format_network(Fz), 0, bad)


def suite_goldens(n: int, rep: Report):
    F = nw.a_network(7, [(2, 5), (1, 3), (4, 6), (6, 7)])
    rep.add("w(F) = 3752146", nw.format_network(F), (3, 7, 5, 2, 1, 4, 6), nw.w_of_network(F))
    w = sp.parse("-1 4 3 6 5 -2")
    Q = pg.q_of_w(w)
    rel = sorted([(1, x) for x in (3, 4, 5, 6)] + [(2, 5), (2, 6), (3, 5), (3, 6)])
    rep.add("Q(w) relations", _fmt(w), rel, Q.relations())
    rep.add("Q(w) grounded", _fmt(w), [1, 2], sorted(Q.grounded))
    edges = [(1, 2), (2, 3), (2, 4), (3, 4), (4, 5), (4, 6), (5, 6)]
    G = pg.inc(Q)
    rep.add("Γ(w) edges", _fmt(w), edges, G.edge_list())
    O = pg.MarkedOrientation(frozenset([(2, 1), (3, 2), (3, 4), (2, 4), (4, 5), (4, 6), (6, 5)]), frozenset({2}))
    rep.add("OtoP sequence", _fmt(w), (3, "2*", 1, 4, 6, 5), pg.orientation_to_sequence(G.vertices, O))
    rep.add("PtoO inverse", _fmt(w), O, pg.sequence_to_orientation(G, (3, "2*", 1, 4, 6, 5)))
    mats = [
        (nw.network(nw.A, (-2, 2), [(-2, -1), (1, 2)]), [[1, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 1], [0, 0, 1, 1]]),
        (nw.network(nw.A, (-2, 2), [(-2, 1), (-1, 2), (-2, 1)], condensed=False), [[5, 5, 5, 2]] * 3 + [[2, 2, 2, 1]]),
        (nw.network(nw.A, (-2, 2), [(-2, 1), (-1, 2), (-2, 1)]), [[2, 2, 2, 1]] * 3 + [[1, 1, 1, 1]]),
    ]
    for Fm, M in mats:
        rep.add("path matrix", nw.format_network(Fm), M, nw.path_matrix_rows(Fm))
    P = pg.p_of_w((2, 3, 4, 1))
    rep.add("P(2341) relations", "2341", [(1, 3), (1, 4), (2, 4)], P.relations())


# --- structural invariants --------------------------------------------------------------------------


def suite_structural(n: int, rep: Report):
    for k in range(1, min(n + 1, 5) + 1):
        for w in sp.codominant(k, "A"):
            P = pg.p_of_w(w)
            rep.add("P(w) has no induced 2+2 or 3+1", _fmt(w), (False, False), (pg.has_induced(P, "2+2"), pg.has_induced(P, "3+1")))
    for k in range(1, min(n, 4) + 1):
        for w in sp.codominant(k, "B"):
            Q = pg.q_of_w(w)
            rep.add("Q(w) is a BC unit interval order", _fmt(w), True, pg.is_bc_unit_interval_order(Q))
    for k in range(1, min(n, 3) + 1):
        for w in sp.pavoiding(k, "B"):
            P = pg.p_of_w_network(w)
            dual = {(-b, -a) for a, b in P.less}
            rep.add("P(w) on [-n,n] is self-dual under i -> -i", _fmt(w), set(P.less), dual)
    for k in range(1, min(n, 3) + 1):
        bips = cc.bipartitions_of(k)
        order = 2**k * cc.factorial(k) if hasattr(cc, "factorial") else None
        for a in bips:
            for b in bips:
                s = sum(ts.class_size("B", c) * ts.bn_trace_basis("ss", a).at(c) * ts.bn_trace_basis("ss", b).at(c) for c in bips)
                rep.add("B_n character orthogonality", f"{cc.format_bipartition(a)} {cc.format_bipartition(b)}",
                        order if a == b else 0, s)
        elems = sp.all_signed_permutations(k)
        bad = sum(1 for u in elems for v in elems if ts.class_of(sp.multiply(u, v)) != ts.class_of(sp.multiply(v, u)))
        rep.add("trace property θ(uv) = θ(vu)", f"B_{k}", 0, bad)
        leq = {(u, v): sp.bruhat_leq(u, v) for u in elems for v in elems}
        refl = all(leq[(u, u)] for u in elems)
        anti = all(not (leq[(u, v)] and leq[(v, u)]) or u == v for u in elems for v in elems)
        trans = all(not (leq[(u, v)] and leq[(v, x)]) or leq[(u, x)] for u in elems for v in elems for x in elems)
        rep.add("Bruhat order is a partial order", f"B_{k}", (True, True, True), (refl, anti, trans))
    for k in range(1, 8):
        K = [[Fraction(x) for x in r] for r in cc.kostka_matrix(k)]
        Ki = [[Fraction(x) for x in r] for r in cc.inverse_kostka_matrix(k)]
        rep.add("K·K^-1 = I", f"n={k}", cc.identity_matrix(len(K)), cc.mat_mul(K, Ki))
    for k in range(1, min(n, 3) + 1):
        for bp in cc.bipartitions_of(k):
            for pair in ts.BC_PAIRS:
                for w in sp.all_signed_permutations(k)[:: max(1, k * 3)]:
                    rep.add("class-level induction = group-level induction", f"{pair} {cc.format_bipartition(bp)} {_fmt(w)}",
                            ts.induced_pair_by_group(pair[0], pair[1], bp[0], bp[1], w), ts.bn_trace_basis(pair, bp)(w))


SUITES = {
    "catalan": suite_catalan,
    "roundtrips": suite_roundtrips,
    "epsiloneta": suite_epsiloneta,
    "chi": suite_chi,
    "psi": suite_psi,
    "c_epsiloneta": suite_c_epsiloneta,
    "c_psi": suite_c_psi,
    "detDBPB": suite_detDBPB,
    "colstrictetc": suite_colstrictetc,
    "charevalimmbc": suite_charevalimmbc,
    "tensorimm": suite_tensorimm,
    "immid": suite_immid,
    "wtc1interps": suite_wtc1interps,
    "wtc1interpssubg": suite_wtc1interpssubg,
    "bcxy": suite_bcxy,
    "YequalsX": suite_YequalsX,
    "YBCexpansions": suite_YBCexpansions,
    "frobenius": suite_frobenius,
    "BCcodominant": suite_BCcodominant,
    "Acodominant": suite_Acodominant,
    "BCequivimplications": suite_BCequivimplications,
    "Aequivimplications": suite_Aequivimplications,
    "defects": suite_defects,
    "goldens": suite_goldens,
    "structural": suite_structural,
}

SAMPLED_SUITES = {"epsiloneta", "chi", "psi", "c_epsiloneta", "c_psi"}

# suites whose n refers to S_n; 'all' runs them at n + 1
TYPE_A_SUITES = {"immid", "wtc1interps", "wtc1interpssubg", "YequalsX", "Acodominant", "Aequivimplications"}


# default size bounds; cheap suites may go further
BOUND_B, BOUND_A = 4, 5
SUITE_CAPS = {"catalan": 5}


def size_bound(name: str, max_n: int | None = None) -> int:
    if max_n is None and os.environ.get("BCCHROMA_MAX_N"):
        max_n = int(os.environ["BCCHROMA_MAX_N"])
    if max_n is not None:
        return max_n
    base = BOUND_A if name in TYPE_A_SUITES else BOUND_B
    return max(base, SUITE_CAPS.get(name, 0))


def verify_theorem(name: str, n: int, max_n: int | None = None, **options) -> Report:
    """Run one suite at size n and return its report.

    Raises ValueError for an unknown suite or an n beyond the size bound
    (B_n: 4, S_n: 5 unless ``max_n`` or BCCHROMA_MAX_N says otherwise).
    """
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown theorem suite {name!r}; choose from {', '.join(SUITES)}") from None
    if n < 1:
        raise ValueError("n must be positive")
    bound = size_bound(name, max_n)
    if n > bound:
        raise ValueError(f"n={n} exceeds the bound {bound} for suite {name!r}; pass max_n to override")
    rep = Report(name, n)
    t0 = time.perf_counter()
    fn(n, rep, **options)
    rep.wall_time = time.perf_counter() - t0
    return rep


def verify_all(n: int, max_n: int | None = None) -> list:
    return [verify_theorem(name, n + 1 if name in TYPE_A_SUITES else n, max_n) for name in SUITES]
