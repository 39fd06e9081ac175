"""Command-line front end.

    bcchroma enumerate networks --flavor bc --class descending -n 3
    bcchroma eval "(ss)^{21|11}" -w "2 3 4 5 -1" --via tableaux
    bcchroma verify all -n 3 --json report.json
    bcchroma symfn -w "-1 3 -2" --function Xbc

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import core_combinatorics as cc
from . import networks as nw
from . import posets_graphs as pg
from . import signed_permutations as sp
from . import tableaux as tb
from . import traces_symmfns as ts
from . import verification as vf

DEFAULT_MAX_B = vf.BOUND_B
DEFAULT_MAX_A = vf.BOUND_A


class UsageError(Exception):
    pass


def _bounds(args) -> tuple:
    override = args.max_n if getattr(args, "max_n", None) is not None else os.environ.get("BCCHROMA_MAX_N")
    if override is not None:
        m = int(override)
        return m, m
    return DEFAULT_MAX_B, DEFAULT_MAX_A


def _check_bound(n: int, group: str, args):
    mb, ma = _bounds(args)
    limit = ma if group == "A" else mb
    if n > limit:
        raise UsageError(f"n={n} exceeds the bound {limit} for {'S_n' if group == 'A' else 'B_n'}; pass --max-n to override")
    if n < 1:
        raise UsageError("n must be positive")


def _group(token: str) -> str:
    t = token.lower()
    if t in ("b", "bc", "c"):
        return "B"
    if t == "a":
        return "A"
    raise UsageError(f"unknown group {token!r}")


# --- trace specs ------------------------------------------------------------------------------

_SPEC = re.compile(r"^\s*\(?([^()^]+?)\)?\s*\^\s*\{(.*)\}\s*$")


def _parse_part(text: str, n: int):
    text = text.strip()
    if text in ("", "∅", "0", "()"):
        return ()
    if text == "n":
        return (n,)
    if "," in text:
        parts = [int(t) for t in text.split(",")]
    else:
        parts = [int(ch) for ch in text]
    return cc.make_partition(parts)


def parse_trace_spec(spec: str, n: int):
    """'(hh)^{2|1}', '(ss-char)^{21|11}', '(iota)^{1|1}', or type A '(e)^{21}' -> (group, family, index)."""
    m = _SPEC.match(spec)
    if not m:
        raise UsageError(f"cannot parse trace spec {spec!r}; expected (family)^{{lam|mu}}")
    fam, idx = m.group(1).strip(), m.group(2)
    fam = re.sub(r"-char$", "", fam)
    if "|" in idx:
        a, b = idx.split("|", 1)
        bp = (_parse_part(a, n), _parse_part(b, n))
        if fam in ("iota", "ι"):
            return "B", "iota", bp
        try:
            return "B", ts.parse_pair(fam), bp
        except ValueError as e:
            raise UsageError(str(e)) from None
    try:
        return "A", ts.family_name(fam), _parse_part(idx, n)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _parse_w(text: str, group: str):
    try:
        w = sp.parse(text)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if group == "A":
        if sorted(w) != list(range(1, len(w) + 1)):
            raise UsageError(f"{text!r} is not a permutation")
        return tuple(w)
    if sorted(abs(x) for x in w) != list(range(1, len(w) + 1)):
        raise UsageError(f"{text!r} is not a signed permutation")
    return w


# --- evaluation routes ------------------------------------------------------------------------

_BC_TABLEAU_PROPS = {
    ("epsilon", "epsilon"): ("column-strict", "column-strict"),
    ("epsilon", "eta"): ("column-strict", "row-semistrict"),
    ("eta", "epsilon"): ("row-semistrict", "column-strict"),
    ("eta", "eta"): ("row-semistrict", "row-semistrict"),
    ("chi", "chi"): ("standard", "standard"),
    ("psi", "psi"): ("cyclically-row-semistrict", "cyclically-row-semistrict"),
}
_A_TABLEAU_PROPS = {
    "epsilon": "column-strict",
    "eta": "row-semistrict",
    "chi": "standard",
    "psi": "cyclically-row-semistrict",
}


def _shape(prop, lam):
    return cc.transpose(lam) if prop == "column-strict" else lam


def evaluate_route(group, fam, index, w, via):
    if not sp.is_pavoiding(w):
        raise UsageError(f"w = {sp.format_perm(w)} is not smooth (pattern-avoiding)")
    n = len(w)
    if group == "A" and any(x < 0 for x in w):
        raise UsageError("a type-A trace needs an unsigned permutation")
    size = sum(index) if group == "A" else sum(index[0]) + sum(index[1])
    if size != n:
        raise UsageError(f"trace index has size {size} but w has length {n}")
    if group == "B":
        w = sp.SignedPermutation(w)
        theta = ts.bn_trace_basis(fam, index)
    else:
        theta = ts.sn_trace_basis(fam, index)
    if via == "bruteforce":
        return ts.evaluate(theta, ts.kl_element(w))
    if via == "immanant":
        M = nw.path_matrix(nw.network_of_w(w))
        if group == "B":
            return ts.immanant_BC(theta, M)
        return ts.immanant_A(theta, [[M[i][j] for j in range(1, n + 1)] for i in range(1, n + 1)])
    if group == "B":
        Q = pg.q_of_w(w)
        lam, mu = index
        if via == "tableaux" and fam in _BC_TABLEAU_PROPS:
            l, r = _BC_TABLEAU_PROPS[fam]
            return tb.count_bitableaux(Q, _shape(l, lam), _shape(r, mu), [l], [r])
        if via == "colorings" and fam == ("epsilon", "epsilon"):
            return pg.count_marked_colorings(pg.inc(Q), lam, mu)
        if via == "orientations" and fam in (("eta", "eta"), ("psi", "psi")):
            return pg.count_subgraph_sequence_orientations(pg.inc(Q), lam, mu, one_source=fam[0] == "psi")
    else:
        P = pg.p_of_w(w)
        if via == "tableaux" and fam in _A_TABLEAU_PROPS:
            prop = _A_TABLEAU_PROPS[fam]
            return tb.count_tableaux(P, _shape(prop, index), [prop])
        if via == "colorings" and fam == "epsilon":
            return sum(1 for _ in pg.proper_colorings_of_type(pg.inc(P), index))
        if via == "orientations" and fam in ("eta", "psi"):
            return pg.count_subgraph_sequence_orientations(pg.inc(P), index, one_source=fam == "psi")
    name = fam if isinstance(fam, str) else "".join(_LETTER[f] for f in fam)
    raise UsageError(f"route {via!r} does not apply to the {name} family")


_LETTER = {"epsilon": "e", "eta": "h", "chi": "s", "psi": "p", "phi": "m", "gamma": "f"}

VIAS = ("bruteforce", "immanant", "tableaux", "colorings", "orientations")


def cmd_eval(args) -> int:
    w_text = args.w
    n = len(w_text.replace(",", " ").split())
    group, fam, index = parse_trace_spec(args.spec, n)
    w = _parse_w(w_text, group)
    if args.via == "all":
        out = {}
        for via in VIAS:
            try:
                out[via] = evaluate_route(group, fam, index, w, via)
            except UsageError:
                continue
        vals = set(out.values())
        if args.json:
            print(json.dumps({"spec": args.spec, "w": w_text, "values": {k: str(v) for k, v in out.items()}, "agree": len(vals) == 1}))
        else:
            for via, v in out.items():
                print(f"{via}\t{v}")
        return 0 if len(vals) == 1 else 1
    value = evaluate_route(group, fam, index, w, args.via)
    if args.json:
        print(json.dumps({"spec": args.spec, "w": w_text, "via": args.via, "value": str(value)}))
    else:
        print(value)
    return 0


# --- enumerate ----------------------------------------------------------------------------------


def _perm_line(w) -> str:
    return sp.format_perm(w)


def cmd_enumerate(args) -> int:
    kind = args.kind
    if kind == "networks":
        flavor = nw.BC if _group(args.flavor) == "B" else nw.A
        _check_bound(args.n, "B" if flavor == nw.BC else "A", args)
        items = nw.enumerate_networks(args.n, flavor, args.cls)
        lines = [nw.format_network(F) for F in items]
    else:
        group = _group(args.group or args.flavor)
        _check_bound(args.n, group, args)
        words = sp.codominant(args.n, group) if kind in ("codominant", "posets", "graphs") else sp.pavoiding(args.n, group)
        if kind in ("codominant", "smooth"):
            lines = [_perm_line(w) for w in words]
        else:
            lines = []
            for w in words:
                P = pg.q_of_w(w) if group == "B" else pg.p_of_w(w)
                if kind == "posets":
                    lines.append(f"{_perm_line(w)}\t{P.to_json()}")
                else:
                    G = pg.inc(P)
                    lines.append(f"{_perm_line(w)}\t" + json.dumps({"edges": G.edge_list(), "grounded": sorted(G.grounded)}))
    if args.json:
        print(json.dumps({"kind": kind, "n": args.n, "count": len(lines), "items": lines}))
    else:
        for line in lines:
            print(line)
        print(f"# {len(lines)} {kind}", file=sys.stderr)
    return 0


# --- verify ------------------------------------------------------------------------------------


def cmd_verify(args) -> int:
    names = list(vf.SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in vf.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(vf.SUITES)}")
    reports = []
    for name in names:
        n = args.n + 1 if (args.suite == "all" and name in vf.TYPE_A_SUITES) else args.n
        opts = {}
        if args.sample is not None and name in vf.SAMPLED_SUITES:
            opts["sample"] = args.sample
        reports.append(vf.verify_theorem(name, n, getattr(args, "max_n", None), **opts))
    ok = all(r.ok for r in reports)
    if args.json is not None:
        payload = json.dumps({"ok": ok, "reports": [r.to_dict() for r in reports]}, indent=None)
        if args.json == "-":
            print(payload)
        else:
            with open(args.json, "w") as fh:
                fh.write(payload)
    if args.json != "-":
        for r in reports:
            s = r.summary()
            print(f"{'PASS' if r.ok else 'FAIL'}  {s['suite']:<20} n={s['n']}  {s['passed']}/{s['checks']}  {s['wall_time']:.2f}s")
            shown = r.records if args.verbose else r.failures()[:10]
            for rec in shown:
                mark = "ok " if rec.passed else "BAD"
                print(f"    {mark} {rec.identity} [{rec.inputs}] expected={rec.expected} got={rec.got}")
    return 0 if ok else 1


# --- symfn -------------------------------------------------------------------------------------


def cmd_symfn(args) -> int:
    fn = args.function
    if fn in ("Xa", "Xaq"):
        group = "A"
    elif fn == "Xbc":
        group = "B"
    else:
        group = _group(args.group) if args.group else "B"
    w = _parse_w(args.w, group)
    if not sp.is_pavoiding(w):
        raise UsageError(f"w = {sp.format_perm(w)} is not smooth (pattern-avoiding)")
    if fn == "Y":
        f = ts.Y_BC(ts.kl_element(w), len(w)) if group == "B" else ts.Y_A(ts.kl_element(w), len(w))
    elif fn == "Xbc":
        f = ts.chromatic_BC(pg.inc(pg.q_of_w(w)))
    elif fn == "Xa":
        f = ts.chromatic_A(pg.inc(pg.p_of_w(w)))
    else:
        f = ts.chromatic_A_q(pg.inc(pg.p_of_w(w)))
        if args.at_q1:
            f = f.to_symfn_at_1()
    if isinstance(f, ts.SymFn) and args.basis:
        try:
            f = f.convert(args.basis)
        except ValueError as e:
            raise UsageError(str(e)) from None
    print(f.to_json() if args.json else str(f))
    return 0


# --- parser ------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bcchroma", description="Hyperoctahedral traces, BC star networks and chromatic symmetric functions.")
    bound_help = "override the default size bounds (B_n <= 4, S_n <= 5)"
    p.add_argument("--max-n", type=int, default=None, help=bound_help)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-n", type=int, default=argparse.SUPPRESS, help=bound_help)
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", parents=[common], help="list codominant or smooth elements, networks, posets or graphs")
    e.add_argument("kind", choices=("codominant", "smooth", "networks", "posets", "graphs"))
    e.add_argument("-n", type=int, required=True)
    e.add_argument("--flavor", default="bc", help="bc or a")
    e.add_argument("--group", default=None, help="b or a (defaults to --flavor)")
    e.add_argument("--class", dest="cls", default="zigzag", choices=("zigzag", "descending"))
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("eval", parents=[common], help="evaluate a trace at C'_w(1)")
    v.add_argument("spec", help='trace spec such as "(hh)^{2|1}" or "(e)^{21}"')
    v.add_argument("-w", required=True, help='quoted, space-separated word such as "2 3 -1"')
    v.add_argument("--via", default="bruteforce", choices=VIAS + ("all",))
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_eval)

    r = sub.add_parser("verify", parents=[common], help="run a theorem-verification suite")
    r.add_argument("suite", help="suite name or 'all'")
    r.add_argument("-n", type=int, default=3)
    r.add_argument("--json", nargs="?", const="-", default=None, metavar="PATH", help="write the JSON report to PATH (stdout if omitted)")
    r.add_argument("--sample", type=int, default=None, help="check only this many random w per size")
    r.add_argument("-v", "--verbose", action="store_true")
    r.set_defaults(func=cmd_verify)

    s = sub.add_parser("symfn", parents=[common], help="Y, X^BC, X or X_q of a smooth element")
    s.add_argument("-w", required=True)
    s.add_argument("--function", choices=("Y", "Xbc", "Xa", "Xaq"), default="Y")
    s.add_argument("--basis", default=None)
    s.add_argument("--group", default=None, help="b or a, for --function Y")
    s.add_argument("--at-q1", action="store_true", help="specialize Xaq at q = 1")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_symfn)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as e:
        print(f"bcchroma: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
