"""Command-line front end.

    ddcert bounds -k 3 -d 2
    ddcert gpoly -k 3 -d 4 -x 2.9 --coeffs
    ddcert analyze --graph petersen -d 2
    ddcert analyze --file graph.txt
    ddcert certify -k 3 -c 2
    ddcert interval -k 3 -d 8
    ddcert search -k 3 -d 2 --n-cap 10
    ddcert oracle --graph heawood -i 4

Exit status: 0 when every check passes, 1 when a mathematical check fails,
2 on usage or input errors. --json switches to a machine-readable report.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

import mpmath
import numpy as np

from ddcert import bounds, gpoly, graphcore, search, spectra, theorem

FLOAT_DIGITS = 17
QUAD_DIGITS = 30


@dataclass
class Report:
    command: str
    inputs: dict = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)

    def check(self, name: str, ok: bool, detail: str = ""):
        self.checks.append({"name": name, "pass": bool(ok), "detail": detail})

    @property
    def ok(self) -> bool:
        return all(c["pass"] for c in self.checks)

    def to_json(self) -> str:
        return json.dumps(
            {"command": self.command, "inputs": self.inputs, "results": self.results, "checks": self.checks},
            indent=2,
            ensure_ascii=True,
        )

    def to_text(self) -> str:
        lines = [f"== {self.command} " + " ".join(f"{k}={v}" for k, v in self.inputs.items())]
        for key, val in self.results.items():
            lines.extend(_text_lines(key, val, 0))
        for c in self.checks:
            tag = "PASS" if c["pass"] else "FAIL"
            lines.append(f"[{tag}] {c['name']}" + (f": {c['detail']}" if c["detail"] else ""))
        return "\n".join(lines)


def _text_lines(key, val, depth):
    pad = "  " * depth
    if isinstance(val, dict):
        if set(val) == {"symbolic", "decimal"}:
            return [f"{pad}{key}: {val['symbolic']} ~ {val['decimal']}"]
        out = [f"{pad}{key}:"]
        for k2, v2 in val.items():
            out.extend(_text_lines(k2, v2, depth + 1))
        return out
    if isinstance(val, list) and val and isinstance(val[0], dict):
        out = [f"{pad}{key}:"]
        for item in val:
            out.append(pad + "  - " + ", ".join(f"{a}={_flat(b)}" for a, b in item.items()))
        return out
    if isinstance(val, str) and "\n" in val:
        return [f"{pad}{key}:"] + [pad + "  " + ln for ln in val.rstrip("\n").split("\n")]
    return [f"{pad}{key}: {_flat(val)}"]


def _flat(v):
    if isinstance(v, dict) and set(v) == {"symbolic", "decimal"}:
        return f"{v['symbolic']} ~ {v['decimal']}"
    return v


def num(x):
    """JSON rendering: exact decimal strings for integers, fixed digits otherwise."""
    if isinstance(x, bool):
        return x
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, gpoly.QuadInt):
        return {"symbolic": str(x), "decimal": x.decimal(QUAD_DIGITS)}
    if isinstance(x, mpmath.mpf):
        return mpmath.nstr(x, FLOAT_DIGITS)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        if x == 0:
            x = 0.0  # drop the sign of -0.0
        return format(x, f".{FLOAT_DIGITS}g")
    return x


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_bounds(args) -> Report:
    k, d = args.k, args.d
    rep = Report("bounds", {"k": num(k), "d": num(d)})
    br = bounds.bound_report(k, d)
    ex = bounds.moore_existence(k, d)
    rep.results.update(
        moore=num(br.moore),
        bipartite=num(br.bipartite),
        nonregular=num(br.nonregular) if br.nonregular is not None else None,
        girth_floor=num(br.girth_floor) if br.girth_floor is not None else None,
        moore_graph=ex.moore.value,
        bipartite_moore_possible=ex.bipartite_possible,
    )
    gap = br.moore - br.bipartite
    if k >= 3:
        rep.check("moore_minus_bipartite", gap == (k - 1) ** d, f"M - B = {gap}, (k-1)^d = {(k - 1) ** d}")
        rep.check("nonregular_below_moore", br.nonregular < br.moore)
    else:
        rep.check("moore_minus_bipartite", gap == 1, f"M - B = {gap} for k = 2")
    gk = gpoly.moore_value(k, d)
    rep.check("gpoly_at_k_equals_moore", gk == br.moore, f"G_{{k,d}}(k) = {gk}")
    return rep


def cmd_gpoly(args) -> Report:
    k, d, prec = args.k, args.d, args.precision
    rep = Report("gpoly", {"k": num(k), "d": num(d), "precision": num(prec)})
    if args.x is not None:
        rep.inputs["x"] = args.x
    g = gpoly.build(k, d)
    rep.results["polynomial"] = str(g)
    if args.coeffs:
        rep.results["coeffs"] = [num(c) for c in g.coeffs]
    at_k = gpoly.eval_exact(g, k)
    rep.results["value_at_k"] = num(at_k)
    rep.check("monic_degree_d", g.degree == d and g.coeffs[-1] == 1)
    rep.check("value_at_k_equals_moore", d == 0 or at_k == bounds.moore_bound(k, d), "M(k,d) for d >= 1")
    if k >= 3:
        for sgn, label in (("+", "at_plus_2sqrt"), ("-", "at_minus_2sqrt")):
            sv = gpoly.special_value(k, d, sgn)
            rep.results[label] = num(sv)
            horner = gpoly.eval_exact(g, gpoly.double_root(k, sgn))
            rep.check(f"special_value_{label}", horner == sv, "double-root formula vs exact Horner in Z[sqrt(k-1)]")
    if args.x is not None:
        val = gpoly.eval_real(g, args.x, prec)
        rep.results["value_at_x"] = num(val)
        xf = mpmath.mpf(args.x)
        if k >= 3 and 2 * mpmath.sqrt(k - 1) < abs(xf) < k:
            cf = gpoly.closed_form(k, d, args.x, prec)
            rep.results["closed_form_at_x"] = num(cf)
            rel = abs(cf - val) / max(1, abs(val))
            rep.check("closed_form_agrees", rel <= 1e-9, f"relative gap {mpmath.nstr(rel, 3)}")
            rep.results["derivative_at_x"] = num(gpoly.derivative_eval(k, d, args.x, prec))
    return rep


def _load_graph(args):
    if args.graph and args.file:
        raise ValueError("give either --graph or --file, not both")
    if args.graph:
        return graphcore.corpus(args.graph)
    if args.file:
        return graphcore.read_edge_list(args.file)
    raise ValueError("one of --graph or --file is required")


def _inf(x):
    return "inf" if x == graphcore.INF else num(int(x))


def cmd_analyze(args) -> Report:
    g = _load_graph(args)
    rep = Report("analyze", {"graph": args.graph or args.file})
    lo, hi, regular = graphcore.degree_profile(g)
    diam = graphcore.diameter(g)
    d = args.d if args.d is not None else diam
    rep.inputs["d"] = num(args.d) if args.d is not None else "inferred"
    connected = diam != graphcore.INF
    bip = graphcore.is_bipartite(g)
    rep.results.update(
        order=num(g.n),
        edges=num(g.m),
        min_degree=num(lo),
        max_degree=num(hi),
        regular=regular,
        connected=connected,
        bipartite=bip,
        girth=_inf(graphcore.girth(g)),
        diameter=_inf(diam),
        d=_inf(d),
    )
    if not connected:
        rep.check("connected", False, "graph is disconnected; no finite diameter")
        return rep
    rep.check("diameter_within_d", diam <= d, f"diameter {diam}, d = {d}")
    if hi < 2 or d < 1:
        rep.results["note"] = "Moore-type bounds need max degree >= 2 and d >= 1"
        return rep
    k = hi
    m = bounds.moore_bound(k, d)
    rep.results["moore"] = num(m)
    rep.check("order_within_moore", g.n <= m, f"n = {g.n}, M = {m}")
    if g.n > m:
        return rep
    delta = bounds.defect(k, d, g.n)
    rep.results["defect"] = num(delta)
    if diam > d:
        return rep
    if not regular:
        rep.results["note"] = "spectral certificate skipped: graph is not regular"
        return rep
    report = spectra.eigenvalues(g)
    rep.results["spectrum"] = [{"value": num(v), "multiplicity": num(mu)} for v, mu in report.eigenvalues]
    rep.results["lambda_second_abs"] = num(report.lambda_second_abs)
    rep.results["residual_bound"] = num(report.residual_bound)
    rep.results["ramanujan"] = spectra.is_ramanujan(report, k)
    sb = spectra.spectral_defect_lower_bound(g, d, report, args.precision)
    rep.results["spectral_lower_bound"] = num(sb.bound)
    rep.results["spectral_witness"] = num(sb.witness)
    rep.check("spectral_bound_sound", sb.bound <= delta, f"bound {sb.bound} <= defect {delta}")
    dm = spectra.defect_matrix_check(g, d)
    rep.results["defect_matrix_delta"] = num(dm.delta)
    rep.results["defect_matrix_zero"] = bool(not np.any(dm.matrix_b))
    rep.check("defect_matrix_nonnegative", dm.nonneg_ok)
    rep.check("defect_matrix_row_col_sums", dm.row_sum_ok and dm.col_sum_ok, f"all equal {dm.delta}")
    gap = spectra.trace_identity_gap(g, d, report)
    rep.check("trace_identity", gap <= g.n * 1e-6, f"|tr G(A) - sum G(lambda)| = {gap:.3e}")
    return rep


def cmd_certify(args) -> Report:
    k, c = args.k, args.c
    rep = Report("certify", {"k": num(k), "c": num(c)})
    d, conditional = theorem.min_even_diameter(k, c)
    cb = theorem.case_bounds(k, d, c)
    rep.results.update(d=num(d), conditional=conditional, conditional_note=cb.conditional_note)
    rep.results["cases"] = [{"case": name, "bound": val, "exceeds_c": ok} for name, val, ok in cb.table()]
    rep.results["high_girth_pos"] = num(cb.high_girth_bound_pos)
    rep.results["high_girth_neg"] = num(cb.high_girth_bound_neg)
    rep.check("d_even", d % 2 == 0)
    rep.check("d_above_6_and_k", d > 6 and d > k, f"d = {d}")
    for name, _, ok in cb.table():
        rep.check(f"case {name} > c", ok)
    return rep


def cmd_interval(args) -> Report:
    k, d = args.k, args.d
    rep = Report("interval", {"k": num(k), "d": num(d)})
    iv = theorem.generalized_moore_defect_interval(k, d)
    rep.results.update(
        low_neg=num(iv.low_neg),
        low_pos=num(iv.low_pos),
        high=num(iv.high),
        second_interval_nonempty=iv.second_nonempty,
    )
    rep.check("low_neg_positive", iv.low_neg > 0)
    rep.check("low_neg_below_low_pos", iv.low_neg < iv.low_pos)
    rep.check("low_neg_within_high", iv.low_neg <= iv.high)
    return rep


def cmd_search(args) -> Report:
    k, d = args.k, args.d
    n_cap = args.n_cap if args.n_cap is not None else min(bounds.moore_bound(k, d), search.MAX_N_CAP)
    rep = Report("search", {"k": num(k), "d": num(d), "n_cap": num(n_cap), "budget": num(args.budget), "prune": not args.no_prune})
    res = search.max_order_search(k, d, n_cap, args.budget, prune=not args.no_prune)
    m = bounds.moore_bound(k, d)
    rep.results.update(
        best_order=num(res.best_order),
        exhaustive=res.exhaustive,
        nodes_explored=num(res.nodes_explored),
        moore=num(m),
        witness=graphcore.serialize_edge_list(res.witness),
    )
    w = res.witness
    lo, hi, reg = graphcore.degree_profile(w)
    wd = graphcore.diameter(w)
    rep.check("witness_order", w.n == res.best_order)
    rep.check("witness_degree", hi <= k, f"max degree {hi}")
    rep.check("witness_diameter", wd <= d, f"diameter {wd}")
    rep.check("witness_within_moore", w.n <= m)
    if res.best_order == m and reg and hi >= 2:
        sb = spectra.spectral_defect_lower_bound(w, d)
        dm = spectra.defect_matrix_check(w, d)
        rep.results["spectral_lower_bound"] = num(sb.bound)
        rep.check("moore_witness_defect_zero", sb.bound == 0 and dm.ok and dm.delta == 0 and not np.any(dm.matrix_b))
    return rep


def cmd_oracle(args) -> Report:
    g = _load_graph(args)
    i = args.i
    rep = Report("oracle", {"graph": args.graph or args.file, "i": num(i)})
    k = graphcore.regular_degree(g)
    walks = graphcore.nb_walk_counts(g, i, workers=args.threads)
    poly = spectra.apply_gpoly_to_matrix(k, i, g)
    same = bool(np.array_equal(walks.astype(object), poly.astype(object)))
    rep.results.update(order=num(g.n), k=num(k), walk_total=num(int(walks.sum())))
    rep.check("walks_equal_gpoly_of_A", same, "non-backtracking walk counts vs G_{k,i}(A)")
    return rep


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-j", "--json", action="store_true", help="emit a JSON report")
    common.add_argument("-p", "--precision", type=int, default=gpoly.DEFAULT_PRECISION, help="working precision in bits")
    common.add_argument("-t", "--threads", type=int, default=1, help="cap on worker processes")

    p = argparse.ArgumentParser(prog="ddcert", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("bounds", parents=[common], help="Moore-type order bounds")
    s.add_argument("-k", "--degree", dest="k", type=int, required=True)
    s.add_argument("-d", "--diameter", dest="d", type=int, required=True)
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("gpoly", parents=[common], help="the polynomial G_{k,d}")
    s.add_argument("-k", "--degree", dest="k", type=int, required=True)
    s.add_argument("-d", "--diameter", dest="d", type=int, required=True)
    s.add_argument("-x", "--at", dest="x", type=str, default=None, help="real evaluation point")
    s.add_argument("-C", "--coeffs", action="store_true", help="print coefficients")
    s.set_defaults(func=cmd_gpoly)

    for name, helptext in (("analyze", "certify a graph"), ("oracle", "walk-count identity check")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("-g", "--graph", help="corpus name, e.g. petersen or cycle(7)")
        s.add_argument("-f", "--file", help="edge-list file")
        if name == "analyze":
            s.add_argument("-d", "--diameter", dest="d", type=int, default=None)
            s.set_defaults(func=cmd_analyze)
        else:
            s.add_argument("-i", "--length", dest="i", type=int, required=True)
            s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("certify", parents=[common], help="smallest even diameter for defect > c")
    s.add_argument("-k", "--degree", dest="k", type=int, required=True)
    s.add_argument("-c", "--defect", dest="c", type=int, required=True)
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("interval", parents=[common], help="generalized Moore defect window")
    s.add_argument("-k", "--degree", dest="k", type=int, required=True)
    s.add_argument("-d", "--diameter", dest="d", type=int, required=True)
    s.set_defaults(func=cmd_interval)

    s = sub.add_parser("search", parents=[common], help="brute-force n(k,d) at desk scale")
    s.add_argument("-k", "--degree", dest="k", type=int, required=True)
    s.add_argument("-d", "--diameter", dest="d", type=int, required=True)
    s.add_argument("-n", "--n-cap", dest="n_cap", type=int, default=None)
    s.add_argument("-b", "--budget", type=int, default=search.DEFAULT_BUDGET)
    s.add_argument("--no-prune", action="store_true")
    s.set_defaults(func=cmd_search)
    return p


def run(argv=None, stdout=None) -> int:
    out = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        rep = args.func(args)
    except (ValueError, KeyError, OSError, TypeError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 2
    print(rep.to_json() if args.json else rep.to_text(), file=out)
    return 0 if rep.ok else 1


def main():
    sys.exit(run())
