"""Command-line front end: verification reports and norm tables as CSV or JSON.

Tables go to stdout (or ``--out``), progress messages to stderr. Numbers are
printed with 9 significant digits so identical arguments give identical
bytes. Exit status is 0 on success, 1 when a check fails and 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import sys

import numpy as np

from . import bounds, identities
from .errors import CutoffError, DomainError
from .projection import SeriesCoeffs, SpaceParams

log = logging.getLogger("bergnorm")

VERIFY_COLUMNS = ["check", "params", "reference", "numeric", "abs_diff", "tol", "passed"]
NORMS_COLUMNS = ["p", "alpha", "lower_formula", "upper_formula", "dostanic"]
SWEEP_XI_COLUMNS = ["xi", "quotient", "lower_formula", "upper_formula", "dostanic",
                    "phi_norm", "psi_norm", "upsilon_norm", "f_norm", "residual"]
SWEEP_EPS_COLUMNS = ["eps", "value", "upper_formula", "quadrature", "g_norm", "h_norm"]
HY_COLUMNS = ["p", "alpha", "trials", "min_margin", "parseval_gap", "passed"]
HV_COLUMNS = ["p", "a", "b", "n_samples", "seed", "violations", "max_feasible_b"]
CLASSIFY_COLUMNS = ["t", "c", "class"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _fmt(value):
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, complex):
        if value.imag == 0:
            return f"{value.real:.9g}"
        return f"{value.real:.9g}{value.imag:+.9g}j"
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.9g}"
    return str(value)


def _json_value(value):
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, complex):
        return {"re": float(f"{value.real:.9g}"), "im": float(f"{value.imag:.9g}")}
    if isinstance(value, (float, np.floating)):
        v = float(value)
        return float(f"{v:.9g}") if math.isfinite(v) else str(v)
    if isinstance(value, (int, np.integer)):
        return int(value)
    return value


def _render(command, columns, rows, fmt, ok, extra=None) -> str:
    if fmt == "json":
        doc = {"command": command, "ok": bool(ok), "columns": columns,
               "rows": [{c: _json_value(r.get(c)) for c in columns} for r in rows]}
        if extra:
            doc["diagnostics"] = {k: _json_value(v) for k, v in extra.items()}
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for r in rows:
        writer.writerow([_fmt(r.get(c, "")) for c in columns])
    return buf.getvalue()


def _floats(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise _UsageError(f"expected a comma-separated list of numbers, got {text!r}") from exc


# ---------------------------------------------------------------------------
# subcommands; each returns (columns, rows, ok, extra)

def _verify(args):
    tol = args.tol
    rng = np.random.default_rng(args.seed)
    rows = []
    rules = {}

    def rule(t):
        if t not in rules:
            rules[t] = identities.default_rule(t, args.nr, args.ntheta, args.refine)
        return rules[t]

    def add(name, params, res, tolerance):
        rows.append({"check": name, "params": params, "reference": res[0], "numeric": res[1],
                     "abs_diff": res[2], "tol": tolerance, "passed": res[2] <= tolerance})

    one_d = min(tol, 1e-10)
    add("beta_hyp", "0.5,0.5,1,1", identities.beta_hyp_check(0.5, 0.5, 1, 1), one_d)
    add("double_integral", "1,1,1", identities.double_integral_check(1, 1, 1), one_d)
    add("kernel_power", "0.5,1,0", identities.kernel_power_check(0.5, 1, 0, rule(0.0)), tol)
    add("three_kernel", "0.3,0.5j,1,1,1,0",
        identities.three_kernel_check(0.3, 0.5j, 1, 1, 1, 0, rule=rule(0.0)), tol)
    for _ in range(args.n_random):
        while True:
            a, b = rng.uniform(-1, 2.5, 2)
            c, d = rng.uniform(0.2, 3, 2)
            if d + c - a - b > 0.2:
                break
        add("beta_hyp", f"{a:.6g},{b:.6g},{c:.6g},{d:.6g}",
            identities.beta_hyp_check(a, b, c, d), one_d)
        while True:
            a, b = rng.uniform(0.1, 3, 2)
            c = rng.uniform(-1, 2.5)
            if 1 + a + b - 2 * c > 0.2:
                break
        add("double_integral", f"{a:.6g},{b:.6g},{c:.6g}",
            identities.double_integral_check(a, b, c), one_d)
        t = float(rng.choice([-0.5, 0.0, 1.0]))
        a = rng.uniform(-1, 3)
        z = rng.uniform(0, 0.8) * np.exp(1j * rng.uniform(0, 2 * np.pi))
        add("kernel_power", f"{_fmt(complex(z))},{a:.6g},{t:g}",
            identities.kernel_power_check(z, a, t, rule(t)), tol)
        a, b, c = rng.uniform(-1, 3, 3)
        w = rng.uniform(0, 0.8) * np.exp(1j * rng.uniform(0, 2 * np.pi))
        add("three_kernel", f"{_fmt(complex(z))},{_fmt(complex(w))},{a:.6g},{b:.6g},{c:.6g},{t:g}",
            identities.three_kernel_check(z, w, a, b, c, t, rule=rule(t)), tol)
    sup = identities.sup_value_check(2, 0)
    rows.append({"check": "sup_value", "params": "2,0", "reference": sup.closed_form,
                 "numeric": sup.numeric_sup, "abs_diff": sup.abs_diff, "tol": 1e-4,
                 "passed": sup.abs_diff <= 1e-4 and sup.argmax_at_edge and sup.monotone})
    for c, want in ((-1, "bounded"), (0, "logarithmic"), (1, "power")):
        got = identities.forelli_rudin_classify(0, c).value
        rows.append({"check": "forelli_rudin", "params": f"0,{c}", "reference": want,
                     "numeric": got, "abs_diff": 0.0 if got == want else 1.0, "tol": 0.0,
                     "passed": got == want})
    return VERIFY_COLUMNS, rows, all(r["passed"] for r in rows), None


def _norms(args):
    rows = []
    for p in _floats(args.p):
        for alpha in _floats(args.alpha):
            prm = SpaceParams(p, alpha)
            rows.append({"p": p, "alpha": alpha,
                         "lower_formula": bounds.conjectured_norm(prm),
                         "upper_formula": bounds.upper_bound_norm(prm),
                         "dostanic": bounds.dostanic_value(p)})
    ok = all(r["lower_formula"] <= r["upper_formula"] for r in rows)
    return NORMS_COLUMNS, rows, ok, None


def _sweep_xi(args):
    prm = SpaceParams(args.p, args.alpha)
    lower = bounds.conjectured_norm(prm)
    upper = bounds.upper_bound_norm(prm)
    dost = bounds.dostanic_value(prm.p)
    rows = []
    for xa in _floats(args.xi):
        log.info("sweep-xi: |xi| = %g", xa)
        row = {"xi": xa, "quotient": bounds.rayleigh_quotient_f_xi(xa, prm),
               "lower_formula": lower, "upper_formula": upper, "dostanic": dost}
        if args.decomposition:
            try:
                dec = bounds.decomposition_norm_check(xa, prm)
                row.update(phi_norm=dec.phi_norm, psi_norm=dec.psi_norm,
                           upsilon_norm=dec.upsilon_norm, f_norm=dec.f_norm,
                           residual=dec.residual)
            except CutoffError as exc:
                log.warning("%s", exc)
        rows.append(row)
    quot = [r["quotient"] for r in rows]
    extra = {"monotone": all(b >= a for a, b in zip(quot, quot[1:]))}
    ok = all(q <= upper + 1e-6 for q in quot)
    return SWEEP_XI_COLUMNS, rows, ok, extra


def _sweep_eps(args):
    prm = SpaceParams(args.p, args.alpha)
    upper = bounds.upper_bound_norm(prm)
    rows = []
    for eps in _floats(args.eps):
        row = {"eps": eps, "value": bounds.bilinear_form_value(eps, prm), "upper_formula": upper}
        if args.quadrature and eps <= 1:
            log.info("sweep-eps: quadrature at eps = %g", eps)
            quad = bounds.bilinear_form_quadrature(eps, prm)
            row.update(quadrature=quad.value, g_norm=quad.g_norm, h_norm=quad.h_norm)
        rows.append(row)
    ok = all(r["value"] <= upper * (1 + 1e-12) for r in rows)
    return SWEEP_EPS_COLUMNS, rows, ok, None


def _hy_check(args):
    rng = np.random.default_rng(args.seed)
    rows = []
    for p in _floats(args.p):
        for alpha in _floats(args.alpha):
            prm = SpaceParams(p, alpha)
            rule = bounds.polynomial_rule(alpha, args.terms)
            margins, gaps = [], []
            for _ in range(args.n):
                c = rng.normal(size=args.terms) + 1j * rng.normal(size=args.terms)
                res = bounds.hausdorff_young_check(SeriesCoeffs(c), prm, rule)
                margins.append(res.margin)
                gaps.append(abs(res.margin))
            parseval = max(gaps) if p == 2 else float("nan")
            passed = min(margins) >= -1e-8 and (p != 2 or parseval <= 1e-8)
            rows.append({"p": p, "alpha": alpha, "trials": args.n, "min_margin": min(margins),
                         "parseval_gap": parseval, "passed": passed})
    return HY_COLUMNS, rows, all(r["passed"] for r in rows), None


def _hv_search(args):
    a = args.a if args.a is not None else bounds.dostanic_value(args.p) ** args.p
    res = bounds.hv_inequality_check(args.p, a, args.b, args.n, args.seed)
    row = {"p": args.p, "a": a, "b": args.b, "n_samples": args.n, "seed": args.seed,
           "violations": res.violations, "max_feasible_b": res.max_feasible_b}
    return HV_COLUMNS, [row], True, None


def _classify(args):
    radii = _floats(args.radii)
    rows = []
    for t in _floats(args.t):
        for c in _floats(args.c):
            try:
                cls = identities.forelli_rudin_classify(t, c, radii).value
            except identities.InconclusiveError:
                cls = "inconclusive"
            rows.append({"t": t, "c": c, "class": cls})
    return CLASSIFY_COLUMNS, rows, all(r["class"] != "inconclusive" for r in rows), None


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", help="write the table here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")

    parser = _Parser(prog="bergnorm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("verify", parents=[common], help="closed-form identity suite")
    sp.add_argument("--tol", type=float, default=1e-8)
    sp.add_argument("--n-random", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--nr", type=int, default=identities.DEFAULT_NR)
    sp.add_argument("--ntheta", type=int, default=identities.DEFAULT_NTHETA)
    sp.add_argument("--refine", type=int, default=identities.DEFAULT_REFINE)
    sp.set_defaults(func=_verify)

    sp = sub.add_parser("norms", parents=[common], help="bound table over p and alpha")
    sp.add_argument("--p", required=True)
    sp.add_argument("--alpha", default="0")
    sp.set_defaults(func=_norms)

    sp = sub.add_parser("sweep-xi", parents=[common], help="Rayleigh quotients of f_xi")
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--alpha", type=float, default=0.0)
    sp.add_argument("--xi", default=",".join(map(str, bounds.XI_SCHEDULE)))
    sp.add_argument("--no-decomposition", dest="decomposition", action="store_false")
    sp.set_defaults(func=_sweep_xi)

    sp = sub.add_parser("sweep-eps", parents=[common], help="bilinear lower bound for P#")
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--alpha", type=float, default=0.0)
    sp.add_argument("--eps", default=",".join(map(str, bounds.EPS_SCHEDULE)))
    sp.add_argument("--quadrature", action="store_true", help="also integrate numerically")
    sp.set_defaults(func=_sweep_eps)

    sp = sub.add_parser("hy-check", parents=[common], help="coefficient inequality, random trials")
    sp.add_argument("--p", default="2,3,4")
    sp.add_argument("--alpha", default="0,1")
    sp.add_argument("--n", type=int, default=200)
    sp.add_argument("--terms", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=_hy_check)

    sp = sub.add_parser("hv-search", parents=[common], help="sampled two-variable inequality")
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--a", type=float, default=None, help="default csc(pi/p)^p")
    sp.add_argument("--b", type=float, default=0.0)
    sp.add_argument("--n", type=int, default=1_000_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=_hv_search)

    sp = sub.add_parser("classify", parents=[common], help="growth class of kernel integrals")
    sp.add_argument("--t", default="0")
    sp.add_argument("--c", default="-1,0,1", help="write negative lists as --c=-1,0")
    sp.add_argument("--radii", default=",".join(map(str, identities.FR_RADII)))
    sp.set_defaults(func=_classify)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"bergnorm: error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        columns, rows, ok, extra = args.func(args)
    except _UsageError as exc:
        print(f"bergnorm: error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"bergnorm: error: {exc}", file=sys.stderr)
        return 2
    text = _render(args.command, columns, rows, args.format, ok, extra)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())
