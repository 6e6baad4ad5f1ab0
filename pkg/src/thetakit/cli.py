"""Batch command-line front-end.

Subcommands: analyze (per-graph tasks), power (strong-power table),
catalog (available graphs). Machine output is deterministic JSON with
floats at 12 significant digits; exit code 0 on success, 1 on input
errors, 2 when an inequality that should be a theorem is observed
violated (that signals an implementation bug, so it is loud).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from . import catalog
from .bounds import (
    alon_boppana,
    haemers_clique_upper,
    make_report,
    non_ramanujan_k0,
    product_bound_reports,
    srg_chromatic_factor,
    wei_bounds,
)
from .exact import DEFAULT_BUDGET, capacity_certificate, chromatic_number
from .graphs import Graph
from .io import read_edge_list, read_graph6
from .products import PRODUCT_VERTEX_CAP, power_spectrum, strong_power
from .spectra import (
    eigenvalues,
    jacobi_eigenvalues,
    ramanujan_verdict_from_values,
    spectrum_from_values,
)
from .srg import srg_check, srg_params_feasible
from .theta import theta_bounds_complement, theta_bounds_regular, theta_best, theta_srg

TASKS = ("spectrum", "theta", "srg", "ramanujan", "product-bounds",
         "chromatic-bounds", "capacity", "k0")

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VIOLATION = 2


def _f(x):
    """Round to 12 significant digits for deterministic printing."""
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return x
    return float(f"{float(x):.12g}")


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, Fraction):
        return int(obj) if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, float):
        return _f(obj)
    if hasattr(obj, "item") and not isinstance(obj, (str, bytes)):
        return _jsonable(obj.item())
    return obj


def _use_color(stream) -> bool:
    return stream.isatty() and not os.environ.get("NO_COLOR")


def _render_table(rows, header, stream):
    if not rows:
        return
    cols = len(header)
    widths = [len(str(header[i])) for i in range(cols)]
    srows = [[str(c) for c in r] for r in rows]
    for r in srows:
        for i, c in enumerate(r):
            widths[i] = max(widths[i], len(c))
    if _use_color(stream):
        head = "  ".join(f"\x1b[1m{str(header[i]).ljust(widths[i])}\x1b[0m"
                         for i in range(cols))
    else:
        head = "  ".join(str(header[i]).ljust(widths[i]) for i in range(cols))
    print(head, file=stream)
    print("  ".join("-" * w for w in widths), file=stream)
    for r in srows:
        print("  ".join(r[i].ljust(widths[i]) for i in range(cols)), file=stream)


def _load_source(args) -> Graph:
    if getattr(args, "gen", None):
        return catalog.load(args.gen)
    if getattr(args, "g6", None):
        return read_graph6(args.g6)
    if getattr(args, "edges", None):
        return read_edge_list(args.edges)
    raise ValueError("no graph source: use --gen, --g6, or --edges")


def _num(x):
    """Prefer exact ints in output when a value is integral."""
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else float(x)
    return x


# -- analyze tasks ----------------------------------------------------


def _task_spectrum(g, _args):
    s = eigenvalues(g)
    out = {
        "n": g.n,
        "edges": g.edge_count(),
        "regular": g.is_regular(),
        "connected": g.is_connected(),
        "eigenvalues": [{"value": v, "multiplicity": m} for v, m in s.groups],
        "lambda_max": s.largest(),
        "lambda_min": s.smallest(),
    }
    if g.n >= 2:
        out["lambda2"] = s.second_largest()
    if g.is_regular():
        out["degree"] = g.degree()
    return out, []


def _task_srg(g, _args):
    p = srg_check(g)
    if p is None:
        return {"strongly_regular": False}, []
    feas = srg_params_feasible(p)
    p1, p2 = p.eigenvalues()
    mult = p.multiplicities()
    out = {
        "strongly_regular": True,
        "params": list(p.as_tuple()),
        "complement_params": list(p.complement().as_tuple()),
        "restricted_eigenvalues": [p1, p2],
        "multiplicities": list(mult) if mult else None,
        "conference_case": feas.conference,
    }
    return out, []


def _theta_payload(g, est):
    out = {"method": est.method}
    if est.value is not None:
        out["theta"] = _num(est.exact) if est.exact is not None else est.value
    if est.bounds is not None:
        out["spectral_lower"] = est.bounds.lower
        out["spectral_upper"] = est.bounds.upper
    return out


def _task_theta(g, args):
    est = theta_best(g, exact_cap=args.exact_cap)
    out = _theta_payload(g, est)
    reports = []
    if g.is_regular() and 0 < g.degree() < g.n - 1:
        s = eigenvalues(g)
        n, d = g.n, g.degree()
        l2, lmin = s.second_largest(), s.smallest()
        b = theta_bounds_regular(n, d, l2, lmin)
        cb = theta_bounds_complement(n, d, l2, lmin)
        out["complement_lower"] = cb.lower
        out["complement_upper"] = cb.upper
        reports.append(make_report("theta-spectral-bounds-ordered",
                                   b.lower, b.upper, "<="))
        if est.value is not None:
            reports.append(make_report("theta-above-spectral-lower",
                                       b.lower, float(est.value) + 1e-6, "<="))
            reports.append(make_report("theta-below-spectral-upper",
                                       float(est.value) - 1e-6, b.upper, "<="))
    p = srg_check(g)
    if p is not None:
        t, tc = theta_srg(p)
        out["theta"] = _num(t) if isinstance(t, Fraction) else t
        out["theta_complement"] = _num(tc) if isinstance(tc, Fraction) else tc
        out["method"] = "closed-form"
    return out, reports


def _task_ramanujan(g, _args):
    if not g.is_regular():
        return {"applicable": False, "reason": "graph is not regular"}, []
    d = g.degree()
    if d < 2:
        return {"applicable": False, "reason": "degree < 2"}, []
    if not g.is_connected():
        return {"applicable": False, "reason": "graph is disconnected"}, []
    v = ramanujan_verdict_from_values(eigenvalues(g), d)
    return {
        "applicable": True,
        "is_ramanujan": v.is_ramanujan,
        "lambda": v.lam,
        "threshold": v.threshold,
        "margin": v.margin,
    }, []


def _task_product_bounds(g, args):
    if not g.is_regular():
        return {"applicable": False, "reason": "graph is not regular"}, []
    k = args.power
    n, d = g.n, g.degree()
    if not 0 < d:
        return {"applicable": False, "reason": "empty graph"}, []
    s = eigenvalues(g)
    ps = power_spectrum(s, k)
    est = theta_best(g, exact_cap=args.exact_cap)
    if est.value is None:
        return {"applicable": False,
                "reason": "theta not determined for factor"}, []
    tight = bool(srg_check(g)) or g.meta.edge_transitive is True
    fdata = [{"n": n, "d": d, "theta": float(est.value),
              "lmin": s.smallest(), "tight": tight}] * k
    l2p, lminp = ps.second_largest(), ps.smallest()
    reports = []
    if d < n - 1:
        reports = product_bound_reports(fdata, l2p, lminp)
    out = {
        "k": k,
        "product_order": n ** k,
        "product_degree": (1 + d) ** k - 1,
        "lambda2": l2p,
        "lambda_min": lminp,
        "theta_factor": float(est.value),
        "reports": [r.as_dict() for r in reports],
    }
    return out, reports


def _task_chromatic_bounds(g, args):
    est = theta_best(g, exact_cap=args.exact_cap)
    out = {}
    reports = []
    n = g.n
    alpha_lb, omega_lb = wei_bounds(g.degrees())
    out["wei_independence_lower"] = alpha_lb
    out["wei_clique_lower"] = omega_lb
    if est.value is not None and est.value > 0:
        t = float(est.value)
        out["chi_lower_from_theta"] = math.ceil(n / t - 1e-9)
        out["chi_complement_lower_from_theta"] = math.ceil(t - 1e-9)
    if g.is_regular() and 0 < g.degree() < n - 1:
        s = eigenvalues(g)
        d, l2, lmin = g.degree(), s.second_largest(), s.smallest()
        out["chi_lower_regular"] = math.ceil(1.0 - d / lmin - 1e-9)
        out["haemers_clique_upper"] = haemers_clique_upper(n, d, l2)
    p = srg_check(g)
    if p is not None:
        out["chromatic_factor_srg"] = srg_chromatic_factor(p)
    if args.exact_chi:
        res = chromatic_number(g, args.budget)
        out["chi"] = res.value
        out["chi_interval"] = [res.lower, res.upper]
        out["chi_status"] = res.status
        if res.status == "exact" and "chi_lower_from_theta" in out:
            reports.append(make_report("chi-at-least-n-over-theta",
                                       out["chi_lower_from_theta"],
                                       res.value, "<="))
    return out, reports


def _task_capacity(g, args):
    est = theta_best(g, exact_cap=args.exact_cap)
    if est.value is None:
        return {"status": "unknown-theta"}, []
    cert = capacity_certificate(g, float(est.value), args.budget)
    out = {
        "theta": float(est.value),
        "theta_method": est.method,
        "status": cert.status,
        "alpha": cert.alpha,
        "alpha_status": cert.alpha_result.status,
    }
    if cert.capacity is not None:
        out["capacity"] = cert.capacity
    reports = []
    if cert.alpha is not None:
        reports.append(make_report("alpha-at-most-theta", float(cert.alpha),
                                   float(est.value) + 1e-6, "<="))
    return out, reports


def _task_k0(g, args):
    if not g.is_regular():
        return {"applicable": False, "reason": "graph is not regular"}, []
    n, d = g.n, g.degree()
    if not 0 < d < n - 1:
        return {"applicable": False, "reason": "degenerate degree"}, []
    est = theta_best(g, exact_cap=args.exact_cap)
    if est.value is None:
        return {"applicable": False, "reason": "theta not determined"}, []
    t = float(est.value)
    threshold = n / math.sqrt(d + 1.0)
    out = {"theta": t, "threshold_n_over_sqrt_d1": threshold}
    if t >= threshold:
        out["applicable"] = False
        out["reason"] = "requires theta < n/sqrt(d+1)"
        return out, []
    out["applicable"] = True
    out["k0"] = non_ramanujan_k0(n, d, t)
    return out, []


_TASK_FNS = {
    "spectrum": _task_spectrum,
    "theta": _task_theta,
    "srg": _task_srg,
    "ramanujan": _task_ramanujan,
    "product-bounds": _task_product_bounds,
    "chromatic-bounds": _task_chromatic_bounds,
    "capacity": _task_capacity,
    "k0": _task_k0,
}


def _violations(reports):
    return [r.name for r in reports if r.applicable and not r.holds()]


def cmd_analyze(args) -> int:
    try:
        g = _load_source(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    tasks = [t.strip() for t in args.tasks.split(",") if t.strip()]
    bad = [t for t in tasks if t not in _TASK_FNS]
    if bad or not tasks:
        print(f"error: unknown tasks {bad}; choose from {', '.join(TASKS)}",
              file=sys.stderr)
        return EXIT_INPUT
    all_reports = []
    result = {
        "graph": {
            "name": g.meta.name or None,
            "n": g.n,
            "edges": g.edge_count(),
        },
        "tasks": {},
    }
    for t in tasks:
        payload, reports = _TASK_FNS[t](g, args)
        result["tasks"][t] = payload
        all_reports.extend(reports)
    viol = _violations(all_reports)
    result["violations"] = viol
    _emit(result, args)
    return EXIT_VIOLATION if viol else EXIT_OK


def cmd_power(args) -> int:
    try:
        g = _load_source(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if not g.is_regular():
        print("error: power tables need a regular graph", file=sys.stderr)
        return EXIT_INPUT
    n, d = g.n, g.degree()
    if d == 0 or d == n - 1:
        # complete/empty factors stay complete/empty under strong powers
        result = {"graph": {"name": g.meta.name or None, "n": n},
                  "trivial": "complete" if d == n - 1 else "empty",
                  "rows": [{"k": k, "order": n ** k} for k in
                           range(1, args.k + 1)],
                  "violations": []}
        _emit(result, args)
        return EXIT_OK
    s = eigenvalues(g)
    est = theta_best(g, exact_cap=args.exact_cap)
    tight = bool(srg_check(g)) or g.meta.edge_transitive is True
    rows = []
    all_reports = []
    for k in range(1, args.k + 1):
        ps = power_spectrum(s, k)
        dk = (1 + d) ** k - 1
        row = {
            "k": k,
            "order": n ** k,
            "degree": dk,
            "lambda2": ps.second_largest(),
            "lambda_min": ps.smallest(),
            "alon_boppana": alon_boppana(dk),
        }
        verdict = ramanujan_verdict_from_values(ps, dk)
        row["is_ramanujan"] = verdict.is_ramanujan
        row["lambda_nontrivial"] = verdict.lam
        fdata = [{"n": n, "d": d, "lmin": s.smallest(), "tight": tight}] * k
        if est.value is not None:
            for f in fdata:
                f["theta"] = float(est.value)
            reports = product_bound_reports(fdata, row["lambda2"],
                                            row["lambda_min"])
            row["eig2_lower"] = reports[0].lhs
            row["eigmin_upper"] = reports[1].rhs
            all_reports.extend(reports)
        if args.materialize and n ** k <= PRODUCT_VERTEX_CAP:
            import numpy as np

            pk = strong_power(g, k)
            dense = spectrum_from_values(
                jacobi_eigenvalues(pk.adj.astype(np.float64)))
            row["lambda2_dense"] = dense.second_largest()
            row["lambda_min_dense"] = dense.smallest()
        rows.append(row)
    viol = _violations(all_reports)
    result = {
        "graph": {"name": g.meta.name or None, "n": n, "degree": d},
        "theta_factor": float(est.value) if est.value is not None else None,
        "rows": rows,
        "violations": viol,
    }
    _emit(result, args, table=_power_table(rows))
    return EXIT_VIOLATION if viol else EXIT_OK


def _power_table(rows):
    header = ["k", "order", "degree", "lambda2", "eig2_lower", "lambda_min",
              "eigmin_upper", "alon_boppana", "ramanujan"]
    out = []
    for r in rows:
        out.append([
            r["k"], r["order"], r["degree"],
            f"{r['lambda2']:.4f}",
            f"{r['eig2_lower']:.4f}" if "eig2_lower" in r else "-",
            f"{r['lambda_min']:.4f}",
            f"{r['eigmin_upper']:.4f}" if "eigmin_upper" in r else "-",
            f"{r['alon_boppana']:.4f}",
            "yes" if r["is_ramanujan"] else "no",
        ])
    return header, out


def cmd_catalog(args) -> int:
    entries = catalog.entries()
    result = {"entries": []}
    rows = []
    for e in entries:
        item = {
            "name": e.name,
            "kind": e.kind,
            "description": e.description,
            "example": e.example or e.name,
        }
        if e.order:
            item["order"] = e.order
        if e.srg:
            item["srg"] = list(e.srg)
        if e.flags:
            item["flags"] = dict(sorted(e.flags.items()))
        if e.expected:
            item["expected"] = dict(sorted(e.expected.items()))
        if e.source:
            item["source"] = e.source
        result["entries"].append(item)
        known = ", ".join(f"{k}={v}" for k, v in sorted(e.expected.items()))
        rows.append([e.name, e.kind,
                     "x".join(map(str, e.srg)) if e.srg else "-",
                     known or "-"])
    _emit(result, args, table=(["name", "kind", "srg", "known values"], rows))
    return EXIT_OK


def _emit(result, args, table=None):
    payload = json.dumps(_jsonable(result), indent=2, sort_keys=False)
    out_path = getattr(args, "out", None)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(payload + "\n")
    if getattr(args, "json", False):
        print(payload)
        return
    if table is not None:
        header, rows = table
        _render_table(rows, header, sys.stdout)
        if result.get("violations"):
            print(f"VIOLATED: {', '.join(result['violations'])}", file=sys.stderr)
        return
    print(payload)


# -- bundled reproduction suite ---------------------------------------


def _examples_spec():
    """The quick bundled reproductions: (name, callable -> (got, want, ok))."""
    from .graphs import complete, cycle, disjoint_union, empty, petersen
    from .srg import SrgParams
    from .bounds import g_sequence, k0_self_complementary_vt
    from .theta import theta_exact

    def srg_case(tup, want):
        def run():
            t, _ = theta_srg(SrgParams(*tup))
            ok = isinstance(t, Fraction) and t == want
            return t, want, ok
        return run

    cases = []
    for tup, want in [((10, 3, 0, 1), 4), ((16, 6, 2, 2), 4),
                      ((100, 36, 14, 12), 10), ((50, 7, 0, 1), 15),
                      ((27, 16, 10, 8), 3), ((56, 10, 0, 2), 16),
                      ((77, 16, 0, 4), 21), ((231, 30, 9, 3), 21),
                      ((28, 12, 6, 4), 4)]:
        cases.append((f"theta closed form {tup}", srg_case(tup, want)))

    def theta_c5():
        got = theta_exact(cycle(5))
        want = math.sqrt(5.0)
        return got, want, abs(got - want) < 1e-5
    cases.append(("theta(C5) = sqrt(5)", theta_c5))

    def theta_pet():
        got = theta_exact(petersen())
        return got, 4.0, abs(got - 4.0) < 1e-5
    cases.append(("theta(Petersen) = 4", theta_pet))

    def power_table():
        s = eigenvalues(cycle(5))
        got = [power_spectrum(s, k).second_largest() for k in range(1, 6)]
        want = [0.6180, 3.8541, 13.5623, 42.6869, 130.0608]
        ok = all(abs(a - b) < 5e-4 for a, b in zip(got, want))
        return [round(x, 4) for x in got], want, ok
    cases.append(("second eigenvalue of C5 strong powers", power_table))

    def k0_table():
        got = [k0_self_complementary_vt(n) for n in (5, 9, 13, 17, 21)]
        want = [5, 4, 3, 3, 3]
        return got, want, got == want
    cases.append(("k0 for self-complementary vertex-transitive orders",
                  k0_table))

    def gseq():
        g = disjoint_union(complete(2), complete(2), complete(2))
        got = tuple(round(v, 6) for v in g_sequence(g).values)
        want = (3.0, -1.0, -1.0, 1.0, -1.0, -1.0)
        return got, want, got == want
    cases.append(("g-sequence of 3 disjoint edges", gseq))

    def affine():
        from .bounds import affine_polar_params
        got = [affine_polar_params(e, q, "+").theta
               for e, q in [(2, 2), (3, 2), (2, 3), (3, 3)]]
        want = [4.0, 8.0, 9.0, 27.0]
        return got, want, got == want
    cases.append(("affine polar + type theta values", affine))

    def factors():
        got = [round(srg_chromatic_factor(SrgParams(*t)), 6) for t in
               [(27, 16, 10, 8), (16, 6, 2, 2), (100, 36, 14, 12),
                (1782, 416, 100, 96), (28, 12, 6, 4)]]
        want = [9.0, 4.0, 10.0, 27.0, 7.0]
        return got, want, got == want
    cases.append(("chromatic factor values for named parameter sets",
                  factors))

    def empty_theta():
        got = theta_exact(empty(7))
        return got, 7.0, abs(got - 7.0) < 1e-9
    cases.append(("theta of edgeless graph is its order", empty_theta))

    return cases


def cmd_examples(_args) -> int:
    cases = _examples_spec()
    failures = 0
    for name, fn in cases:
        try:
            got, want, ok = fn()
        except Exception as exc:  # a crash is a failure, keep going
            print(f"FAIL {name}: {exc!r}")
            failures += 1
            continue
        tag = "PASS" if ok else "FAIL"
        if not ok:
            failures += 1
        print(f"{tag} {name}: got {got}, expected {want}")
    print(f"{len(cases) - failures}/{len(cases)} examples reproduced")
    return EXIT_OK if failures == 0 else EXIT_VIOLATION


# -- argument parsing -------------------------------------------------


def _add_source_args(p):
    src = p.add_mutually_exclusive_group()
    src.add_argument("--gen", help="generator or fixture spec, e.g. kneser:5:2")
    src.add_argument("--g6", help="path to a graph6 file")
    src.add_argument("--edges", help="path to an edge-list file")


def _add_common(p):
    p.add_argument("--json", action="store_true", help="print JSON to stdout")
    p.add_argument("--out", help="also write JSON to this path")
    p.add_argument("--budget", type=float, default=DEFAULT_BUDGET,
                   help="time budget in seconds for exact solvers")
    p.add_argument("--exact-cap", type=int, default=64,
                   help="largest order handed to the theta optimizer")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="thetakit",
        description="Spectral bounds, theta values, and capacity "
                    "certificates for graphs and their strong products.")
    ap.add_argument("--paper-examples", action="store_true",
                    help="run the bundled reproduction suite and print "
                         "one pass/fail line per example")
    sub = ap.add_subparsers(dest="command")

    pa = sub.add_parser("analyze", help="run analysis tasks on one graph")
    _add_source_args(pa)
    _add_common(pa)
    pa.add_argument("--tasks", default="spectrum,theta",
                    help=f"comma-separated subset of: {', '.join(TASKS)}")
    pa.add_argument("--power", type=int, default=2,
                    help="power used by the product-bounds task")
    pa.add_argument("--exact-chi", action="store_true",
                    help="also run the exact coloring solver")
    pa.set_defaults(fn=cmd_analyze)

    pp = sub.add_parser("power", help="strong-power table for one graph")
    _add_source_args(pp)
    _add_common(pp)
    pp.add_argument("-k", type=int, default=5, help="largest power")
    pp.add_argument("--materialize", action="store_true",
                    help="cross-check small powers against a dense eigensolve")
    pp.set_defaults(fn=cmd_power)

    pc = sub.add_parser("catalog", help="list generators and fixtures")
    pc.add_argument("--json", action="store_true")
    pc.add_argument("--out", help="also write JSON to this path")
    pc.set_defaults(fn=cmd_catalog)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.paper_examples:
        return cmd_examples(args)
    if not getattr(args, "command", None):
        ap.print_help()
        return EXIT_INPUT
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
