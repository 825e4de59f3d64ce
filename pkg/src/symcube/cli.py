"""Batch command-line front end.

Every verification surface is a subcommand producing a report on stdout.
Exit codes: 0 success / verification passed, 1 a verification failed (some
check exceeded its tolerance), 2 usage or input-format errors.  Output is
deterministic for fixed flags and --seed; --format json|csv gives
machine-readable bytes.  SYMCUBE_THREADS caps the worker pool used for
batched checks.
"""

from __future__ import annotations

import argparse
import cmath
import csv
import io
import json
import math
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import analytic, ingest, intertwining, localfactor, monomial
from .g2root import (POSITIVE_ROOTS, coroot_decomposition, gram,
                     inverted_roots, lambda_weight, pairing, parabolic_weyl_element,
                     rho_parabolic, weyl_group, ROOT_NAMES)
from .localfactor import RepTag
from .satake import SatakeClass, is_tempered

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _thread_count() -> int:
    try:
        n = int(os.environ.get("SYMCUBE_THREADS", "1"))
    except ValueError:
        n = 1
    return max(1, n)


def _parallel_map(fn, items):
    """Order-preserving map honoring the SYMCUBE_THREADS cap."""
    n = _thread_count()
    if n <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def _parse_complex(text: str) -> complex:
    return complex(text.replace(" ", ""))


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, default=str) + "\n")


def _emit_csv(header, rows) -> None:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    sys.stdout.write(out.getvalue())


def _emit_table(header, rows) -> None:
    widths = [len(h) for h in header]
    srows = [[str(c) for c in row] for row in rows]
    for row in srows:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]
    fmt = "  ".join("{:<%d}" % w for w in widths)
    print(fmt.format(*header))
    for row in srows:
        print(fmt.format(*row))


def _emit(fmt, header, rows, json_obj=None):
    if fmt == "json":
        _emit_json(json_obj if json_obj is not None else
                   [dict(zip(header, row)) for row in rows])
    elif fmt == "csv":
        _emit_csv(header, rows)
    else:
        _emit_table(header, rows)


def _load_form(source: str) -> ingest.ParsedForm:
    """A path, or builtin:delta[:N] for the shipped q-expansion sample."""
    if source.startswith("builtin:delta"):
        bits = source.split(":")
        n = int(bits[2]) if len(bits) > 2 else 1000
        return ingest.delta_form(n)
    return ingest.parse_form(source)


def _sym3_factors(form, limit):
    table = ingest.satake_table(form)
    return {p: localfactor.local_factor(RepTag.SYM3, c)
            for p, c in table.items() if p <= limit}


# --- subcommands -----------------------------------------------------------

def cmd_roots(args) -> int:
    what = args.what
    if what == "pairing":
        r = _parse_fraction(args.r) if args.r else None
        s = _parse_fraction(args.s) if args.s else None
        lam = lambda_weight()
        rows = []
        for name, beta in POSITIVE_ROOTS.items():
            form = pairing(lam, beta)
            val = form(r, s) if r is not None and s is not None else ""
            rows.append([name, str(form), str(val)])
        _emit(args.format, ["root", "pairing", "value"], rows)
        return EXIT_OK
    if what == "gram":
        names = sorted(POSITIVE_ROOTS)
        rows = [[a] + [str(gram(POSITIVE_ROOTS[a], POSITIVE_ROOTS[b])) for b in names]
                for a in names]
        _emit(args.format, ["root"] + names, rows)
        return EXIT_OK
    if what == "coroots":
        rows = [[name, *coroot_decomposition(beta)]
                for name, beta in POSITIVE_ROOTS.items()]
        _emit(args.format, ["root", "c1", "c6"], rows)
        return EXIT_OK
    if what == "weyl":
        rows = []
        for w in weyl_group():
            inv = sorted(ROOT_NAMES[b] for b in inverted_roots(w))
            rows.append(["*".join(w.word) or "1", len(w.word),
                         "{" + ",".join(inv) + "}"])
        rows.append(["rho_P", "", str(rho_parabolic())])
        long_w = parabolic_weyl_element()
        rows.append(["parabolic element", len(long_w.word),
                     "{" + ",".join(sorted(ROOT_NAMES[b] for b in inverted_roots(long_w))) + "}"])
        _emit(args.format, ["element", "length", "inverted/table"], rows)
        return EXIT_OK
    print(f"unknown roots action {what!r}", file=sys.stderr)
    return EXIT_USAGE


def cmd_region(args) -> int:
    n = args.grid

    def classify_row(i):
        r = Fraction(i, 2 * (n - 1)) if n > 1 else Fraction(0)
        out = []
        for j in range(n):
            s = Fraction(j, n - 1) if n > 1 else Fraction(0)
            cls = intertwining.region_membership(r, s, args.mu_case)
            forb = intertwining.forbidden_triangle_contains(r, s)
            out.append([str(r), str(s), cls, int(forb)])
        return out

    rows = [row for chunk in _parallel_map(classify_row, range(n)) for row in chunk]
    vertex_rows = []
    for vr, vs in intertwining.UPPER_VERTICES:
        vertex_rows.append([str(vr), str(vs),
                            intertwining.region_membership(vr, vs, args.mu_case), 0])
    _emit(args.format, ["r", "s", "class", "forbidden"], rows + vertex_rows)
    return EXIT_OK


def cmd_satake(args) -> int:
    form = _load_form(args.coeffs)
    table = ingest.satake_table(form)
    rows = []
    for p in sorted(table)[: args.limit]:
        c = table[p]
        rows.append([p, f"{c.alpha:.12g}", f"{c.beta:.12g}",
                     int(is_tempered(c, args.tol))])
    _emit(args.format, ["p", "alpha", "beta", "tempered"], rows)
    return EXIT_OK


def cmd_lfactor(args) -> int:
    form = _load_form(args.coeffs)
    table = ingest.satake_table(form)
    if args.p not in table:
        print(f"no Satake class at p={args.p} (ramified or out of range)",
              file=sys.stderr)
        return EXIT_USAGE
    tag = RepTag(args.tag)
    poly = localfactor.local_factor(tag, table[args.p])
    rows = [[k, f"{c.real:.15g}", f"{c.imag:.15g}"]
            for k, c in enumerate(poly.to_complex().coeffs)]
    _emit(args.format, ["power", "re", "im"], rows,
          json_obj={"p": args.p, "tag": args.tag,
                    "coeffs": [[c.real, c.imag] for c in poly.to_complex().coeffs]})
    return EXIT_OK


def _random_class(rng: random.Random, bound: float) -> SatakeClass:
    def draw():
        mod = math.exp(rng.uniform(-math.log(bound), math.log(bound)))
        return mod * cmath.exp(2j * math.pi * rng.random())
    return SatakeClass(draw(), draw(), rng.choice([2, 3, 5, 7]))


def cmd_identity(args) -> int:
    suites = {
        "triple": localfactor.check_triple_identity,
        "twist": localfactor.check_twist_identity,
        "gj": localfactor.check_gj_identity,
    }
    chosen = list(suites) if args.suite == "all" else [args.suite]
    rng = random.Random(args.seed)
    classes = [_random_class(rng, args.bound) for _ in range(args.samples)]
    failed = False
    rows = []
    for name in chosen:
        errs = _parallel_map(suites[name], classes)
        worst = max(errs) if errs else 0.0
        ok = worst < args.tol
        failed = failed or not ok
        rows.append([name, args.samples, f"{worst:.3e}", "pass" if ok else "FAIL"])
    _emit(args.format, ["suite", "samples", "max_error", "status"], rows)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_monomial_check(args) -> int:
    try:
        data = ingest.parse_hecke(args.hecke)
    except ValueError as exc:
        print(f"hecke data error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rows, failed = [], False
    for entry in data.entries:
        e3 = monomial.check_monomial_r3(entry)
        e30 = monomial.check_monomial_r30(entry)
        ok = e3 < args.tol and e30 < args.tol
        failed = failed or not ok
        rows.append([entry.p, entry.splitting, f"{e3:.3e}", f"{e30:.3e}",
                     "pass" if ok else "FAIL"])
    if data.chi_order is not None and data.chi_order > 1:
        verdict = monomial.pole_criterion(data.chi_order)
        rows.append(["chi-order", data.chi_order, verdict.kind, "", ""])
    _emit(args.format, ["p", "splitting", "r3_error", "r30_error", "status"], rows)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_intertwine(args) -> int:
    rng = random.Random(args.seed)
    rows, failed = [], False
    if args.grid:
        n = args.grid

        def grid_row(i):
            r = 0.5 * i / n
            out = []
            for j in range(1, n):
                s = 3.0 * j / n
                p = intertwining.PrincipalParams(1.0, args.q, r, s)
                try:
                    val = intertwining.gk_coefficient(p)
                    out.append([f"{r:.6f}", f"{s:.6f}",
                                f"{val.real:.12g}", f"{val.imag:.12g}"])
                except intertwining.IntertwiningPole as exc:
                    out.append([f"{r:.6f}", f"{s:.6f}", "pole", exc.root_name])
            return out

        grid_rows = [row for chunk in _parallel_map(grid_row, range(1, n))
                     for row in chunk]
        _emit(args.format, ["r", "s", "re", "im"], grid_rows)
        return EXIT_OK
    worst = 0.0
    for _ in range(args.samples):
        q = rng.choice([2, 3, 5])
        r = rng.uniform(0.01, 0.49)
        s = rng.uniform(0.05, 3.0)
        k, order = rng.randrange(0, 12), 12
        mu = cmath.exp(2j * math.pi * k / order)
        p = intertwining.PrincipalParams(mu, q, r, s)
        try:
            g = intertwining.gk_coefficient(p)
            l = intertwining.l_ratio(p)
        except intertwining.IntertwiningPole:
            continue
        worst = max(worst, abs(g - l) / max(abs(l), 1e-30))
    ok = worst < args.tol
    rows.append(["gk-vs-lratio", args.samples, f"{worst:.3e}", "pass" if ok else "FAIL"])
    for order in (1, 2, 5):
        r = Fraction(args.r) if args.r else Fraction(1, 10)
        want = intertwining.principal_series_pole_set(order, r)
        got = intertwining.gk_pole_set(order, r)
        match = want == got
        ok2 = match
        rows.append([f"pole-set-order-{order}", str(r),
                     "{" + ",".join(sorted(map(str, got))) + "}",
                     "pass" if ok2 else "FAIL"])
        failed = failed or not ok2
    failed = failed or not ok
    _emit(args.format, ["check", "param", "result", "status"], rows)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_euler(args) -> int:
    form = _load_form(args.coeffs)
    s = _parse_complex(args.s)
    factors = _sym3_factors(form, args.X)
    trace = analytic.partial_L(s, args.X, factors)
    rows = [[i, x, f"{v.real:.15g}", f"{v.imag:.15g}"]
            for i, (x, v) in enumerate(trace.checkpoints)]
    _emit(args.format, ["checkpoint", "X", "Re", "Im"], rows,
          json_obj={"s": str(s), "value": [trace.value.real, trace.value.imag],
                    "outside_convergence": trace.outside_convergence,
                    "checkpoints": [[x, v.real, v.imag] for x, v in trace.checkpoints]})
    if trace.outside_convergence:
        print("warning: Re(s) <= 1, outside the absolute-convergence contract",
              file=sys.stderr)
    return EXIT_OK


def _build_sym3_table(form, cfg, points) -> analytic.CoefficientTable:
    n = cfg.cutoff or max(analytic.default_cutoff(s, cfg) for s in points)
    factors = _sym3_factors(form, n)
    return analytic.dirichlet_coeffs(factors, n, rep_tag=RepTag.SYM3,
                                     source=form.source_path)


def cmd_afe(args) -> int:
    form = _load_form(args.coeffs)
    cfg = ingest.parse_afe_config(args.config) if args.config \
        else analytic.delta_sym3_config()
    points = [_parse_complex(t) for t in args.points.split(",")] if args.points \
        else [0.5 + 0.5j, 0.5 + 1j, 0.5 + 2j]
    probe_points = points + [1 - complex(s) for s in points]
    coeffs = _build_sym3_table(form, cfg, probe_points)
    report = analytic.epsilon_probe(points, cfg, coeffs)
    obj = {
        "points": [str(p) for p in report.points],
        "estimates": [[e.real, e.imag] for e in report.estimates],
        "max_pairwise_deviation": report.max_pairwise_deviation,
        "modulus_deviation": report.modulus_deviation,
        "skipped": [str(p) for p in report.skipped],
        "verdict": "pass" if (report.max_pairwise_deviation < args.tol
                              and report.modulus_deviation < args.tol) else "FAIL",
    }
    if args.format == "json":
        _emit_json(obj)
    else:
        rows = [[str(p), f"{e.real:.10g}", f"{e.imag:.10g}", f"{abs(e):.10f}"]
                for p, e in zip(report.points, report.estimates)]
        rows.append(["pairwise-dev", f"{report.max_pairwise_deviation:.3e}", "", ""])
        rows.append(["modulus-dev", f"{report.modulus_deviation:.3e}", "", ""])
        _emit(args.format, ["point", "eps_re", "eps_im", "|eps|"], rows)
    return EXIT_OK if obj["verdict"] == "pass" else EXIT_FAIL


def cmd_scan(args) -> int:
    form = _load_form(args.coeffs)
    cfg = ingest.parse_afe_config(args.config) if args.config \
        else analytic.delta_sym3_config()
    coeffs = _build_sym3_table(form, cfg, [args.a, args.b])
    if args.inject_pole:
        p_str, sig_str = args.inject_pole.split(",")
        coeffs = analytic.inject_pole_factor(coeffs, int(p_str), float(sig_str))
    report = analytic.pole_scan((args.a, args.b), args.grid, cfg, coeffs,
                                threshold=args.threshold)
    obj = {
        "grid": report.grid,
        "normalized": report.normalized,
        "max_normalized": report.max_normalized,
        "threshold": report.threshold,
        "verdict": report.verdict,
        "flagged_points": report.flagged_points,
    }
    if args.format == "json":
        _emit_json(obj)
    else:
        rows = [[f"{sg:.6f}", f"{v.real:.6e}", f"{nv:.6f}"]
                for sg, v, nv in zip(report.grid, report.values, report.normalized)]
        rows.append(["verdict", report.verdict, f"max={report.max_normalized:.3f}"])
        _emit(args.format, ["sigma", "Lambda_re", "normalized"], rows)
    return EXIT_OK if report.verdict == analytic.VERDICT_CONSISTENT else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="symcube",
        description="Cross-checks for symmetric-cube / adjoint-cube local "
                    "factors and the rank-two intertwining calculus.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=["table", "json", "csv"], default="table")
        p.add_argument("--tol", type=float, default=1e-10)
        p.add_argument("--seed", type=int, default=7)

    p = sub.add_parser("roots", help="pairing table, gram matrix, weyl data")
    p.add_argument("what", choices=["pairing", "gram", "coroots", "weyl"])
    p.add_argument("--r", help="rational value of r, e.g. 1/10")
    p.add_argument("--s", help="rational value of s, e.g. 2/3")
    common(p)
    p.set_defaults(fn=cmd_roots)

    p = sub.add_parser("region", help="rs-plane classification grid (CSV-friendly)")
    p.add_argument("--grid", type=int, default=100)
    p.add_argument("--mu-case", dest="mu_case", choices=["trivial", "order2"],
                   default="trivial")
    common(p)
    p.set_defaults(fn=cmd_region)

    p = sub.add_parser("satake", help="Satake classes from a coefficient file")
    p.add_argument("--coeffs", required=True,
                   help="path or builtin:delta[:N]")
    p.add_argument("--limit", type=int, default=25)
    common(p)
    p.set_defaults(fn=cmd_satake, tol=1e-8)

    p = sub.add_parser("lfactor", help="one local factor as a polynomial")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--tag", default="sym3",
                   choices=[t.value for t in RepTag if t is not RepTag.RANKIN_SELBERG])
    common(p)
    p.set_defaults(fn=cmd_lfactor)

    p = sub.add_parser("identity", help="seeded random factorization-identity suites")
    p.add_argument("--suite", choices=["all", "triple", "twist", "gj"], default="all")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--bound", type=float, default=4.0)
    common(p)
    p.set_defaults(fn=cmd_identity, tol=1e-12)

    p = sub.add_parser("monomial-check", help="dihedral factorizations from Hecke data")
    p.add_argument("--hecke", required=True)
    common(p)
    p.set_defaults(fn=cmd_monomial_check, tol=1e-12)

    p = sub.add_parser("intertwine", help="constant-term coefficient checks / grid")
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--r", help="rational r for pole-set checks")
    p.add_argument("--grid", type=int, default=0,
                   help="emit an (r,s) CSV grid of the coefficient instead")
    common(p)
    p.set_defaults(fn=cmd_intertwine)

    p = sub.add_parser("euler", help="partial Euler product with doubling trace")
    p.add_argument("--coeffs", required=True, help="path or builtin:delta[:N]")
    p.add_argument("--s", default="3")
    p.add_argument("--X", type=int, default=10000)
    common(p)
    p.set_defaults(fn=cmd_euler)

    p = sub.add_parser("afe", help="root-number probe for the completed function")
    p.add_argument("--coeffs", required=True, help="path or builtin:delta[:N]")
    p.add_argument("--config", help="key = value config file")
    p.add_argument("--points", help="comma-separated complex points")
    common(p)
    p.set_defaults(fn=cmd_afe, tol=1e-3)

    p = sub.add_parser("scan", help="boundedness scan on a real interval")
    p.add_argument("--coeffs", required=True, help="path or builtin:delta[:N]")
    p.add_argument("--config")
    p.add_argument("--a", type=float, default=0.55)
    p.add_argument("--b", type=float, default=0.95)
    p.add_argument("--grid", type=int, default=9)
    p.add_argument("--threshold", type=float, default=3.0)
    p.add_argument("--inject-pole", dest="inject_pole",
                   help="p,sigma0 : multiply in an Euler factor with a pole")
    common(p)
    p.set_defaults(fn=cmd_scan)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (ingest.FormParseError, ingest.HeckeParseError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
