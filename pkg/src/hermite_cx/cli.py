"""Command-line entry point: ``hermite-cx poly|eval|verify|table|kernel``.

Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import analysis
from .analysis import gaussian_inner
from .multipoly import eval_complex, render, render_latex_poly, to_json
from .polyfamilies import hermite_explicit, hermite_operator, hermite_recurrence
from .report import Report
from .suites.runner import SuiteConfig, UnknownIdentityError, all_ids, get_entry, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

BASES = {
    "explicit": hermite_explicit,
    "operator": hermite_operator,
    "recurrence": hermite_recurrence,
}


class UsageError(Exception):
    pass


def parse_complex(text: str) -> complex:
    """``"re,im"`` -> complex; a bare ``"re"`` is accepted as a real number."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise UsageError(f"cannot parse complex literal {text!r}; expected 're,im'")


def _fmt_real(x: float) -> str:
    if x == int(x) and abs(x) < 1e15:
        return str(int(x))
    return f"{x:.15g}"


def format_complex(c: complex) -> str:
    """``3``, ``i``, ``-2.5i``, ``2+3i``."""
    re, im = c.real + 0.0, c.imag + 0.0
    if im == 0:
        return _fmt_real(re)
    mag = "" if abs(im) == 1 else _fmt_real(abs(im))
    sign = "-" if im < 0 else "+"
    if re == 0:
        return f"{'-' if im < 0 else ''}{mag}i"
    return f"{_fmt_real(re)}{sign}{mag}i"


def _index(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {n}")
    return n


def cmd_poly(args, out) -> int:
    f = BASES[args.basis](args.p, args.q)
    if args.format == "json":
        out.write(json.dumps({"p": args.p, "q": args.q, "terms": to_json(f)}) + "\n")
    elif args.format == "latex":
        out.write(render_latex_poly(f) + "\n")
    else:
        out.write(render(f) + "\n")
    return EXIT_OK


def cmd_eval(args, out) -> int:
    z = parse_complex(args.z)
    value = eval_complex(hermite_explicit(args.p, args.q), {"z": z, "zbar": z.conjugate()})
    out.write(format_complex(value) + "\n")
    return EXIT_OK


def _suite_ids(specs) -> list:
    ids = []
    for item in specs:
        for name in filter(None, (s.strip() for s in item.split(","))):
            if name == "all":
                ids.extend(all_ids())
            else:
                get_entry(name)
                ids.append(name)
    if not ids:
        raise UsageError("no suites selected")
    return list(dict.fromkeys(ids))


def cmd_verify(args, out) -> int:
    try:
        ids = _suite_ids(args.suites)
        config = SuiteConfig(args.max_index, args.max_multi_index, args.cap, args.tol, args.seed)
    except (UnknownIdentityError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    sink = None
    if args.out:
        try:
            sink = open(args.out, "w", encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot write report to {args.out}: {exc.strerror}") from None
    checks = run_suite(ids, config, workers=args.threads)
    report = Report.build(checks, config, suites=ids)
    for sid in sorted(ids):
        mine = [c for c in checks if c.id == sid]
        passed = sum(c.status == "pass" for c in mine)
        line = f"{sid}: {passed}/{len(mine)} pass"
        failed = [c for c in mine if c.status == "fail"]
        if failed:
            line += f" (first failure at {failed[0].indices}: {failed[0].witness[:160]})"
        out.write(line + "\n")
    s = report.summary
    out.write(f"total: {s['pass']} pass, {s['fail']} fail, {s['skipped']} skipped\n")
    if sink:
        with sink:
            sink.write(report.to_json())
    return EXIT_OK if report.ok else EXIT_FAIL


def table_rows(max_index: int) -> list:
    rows = []
    for p in range(max_index + 1):
        for q in range(max_index + 1):
            h = hermite_explicit(p, q)
            rows.append((p, q, h, gaussian_inner(h, h)))
    return rows


def render_table(max_index: int, fmt: str) -> str:
    rows = table_rows(max_index)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for p, q, h, gram in rows:
            writer.writerow([p, q, render(h), str(gram)])
        return buf.getvalue()
    lines = [
        "\\begin{tabular}{rrll}",
        "$p$ & $q$ & $H_{p,q}(z,\\bar{z})$ & $\\langle H_{p,q}, H_{p,q}\\rangle/\\pi$ \\\\",
        "\\hline",
    ]
    for p, q, h, gram in rows:
        lines.append(f"{p} & {q} & ${render_latex_poly(h)}$ & ${gram}$ \\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


def cmd_table(args, out) -> int:
    text = render_table(args.max_index, args.format)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write table to {args.out}: {exc.strerror}") from None
    else:
        out.write(text)
    return EXIT_OK


def cmd_kernel(args, out) -> int:
    try:
        if args.kind == "sum":
            z, w = parse_complex(args.z), parse_complex(args.w)
            res = analysis.kernel_series(args.p, args.m, z, w, args.tol)
            closed = analysis.kernel_closed_form(args.p, args.m, z, w)
        else:
            z, u, v = parse_complex(args.z), parse_complex(args.u), parse_complex(args.v)
            extra = {}
            if args.ubar is not None:
                extra["ubar"] = parse_complex(args.ubar)
            if args.vbar is not None:
                extra["vbar"] = parse_complex(args.vbar)
            res = analysis.quad_series(z, u, v, args.tol, **extra)
            closed = analysis.quad_closed_form(z, u, v, extra.get("ubar"), extra.get("vbar"))
    except (analysis.DomainError, analysis.ConvergenceError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    out.write(format_complex(res.value) + "\n")
    out.write(
        f"closed form {format_complex(closed)}; terms {res.terms}; "
        f"tail bound {res.tail_bound:.3e}\n"
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hermite-cx", description="Exact complex Hermite polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="render H_{p,q}")
    p.add_argument("p", type=_index)
    p.add_argument("q", type=_index)
    p.add_argument("--basis", choices=sorted(BASES), default="explicit")
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("eval", help="evaluate H_{p,q} at z (zbar = conj z)")
    p.add_argument("p", type=_index)
    p.add_argument("q", type=_index)
    p.add_argument("--z", required=True, help="complex point as re,im")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="run identity suites and write a JSON report")
    p.add_argument("--suites", nargs="+", default=["all"], help="ids (comma or space separated) or 'all'")
    p.add_argument("--max-index", type=int, default=6)
    p.add_argument("--max-multi-index", type=int, default=4)
    p.add_argument("--cap", type=int, default=12)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=None, help="worker processes (default: HERMITE_CX_THREADS, 0 = auto)")
    p.add_argument("--out", help="report path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="tabulate H_{p,q} and Gram values")
    p.add_argument("--max-index", type=_index, default=3)
    p.add_argument("--format", choices=("csv", "latex"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("kernel", help="numeric kernel and quadruple sums")
    ks = p.add_subparsers(dest="kind", required=True)
    k = ks.add_parser("sum", help="sum_q H_{p,q}(z) conj H_{m,q}(w) / q!")
    k.add_argument("p", type=_index)
    k.add_argument("m", type=_index)
    k.add_argument("--z", required=True)
    k.add_argument("--w", required=True)
    k.add_argument("--tol", type=float, default=1e-12)
    k = ks.add_parser("quad", help="quadruple generating sum")
    for name in ("z", "u", "v"):
        k.add_argument(f"--{name}", required=True)
    k.add_argument("--ubar")
    k.add_argument("--vbar")
    k.add_argument("--tol", type=float, default=1e-12)
    p.set_defaults(func=cmd_kernel)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"hermite-cx: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
