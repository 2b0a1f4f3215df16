"""Command-line front end.

Subcommands: expand an eta quotient, verify a catalog congruence
numerically, run a full certification, estimate odd densities, and print
conjecture tables or parity-table dumps.  Exit codes: 0 success, 1 a
verification or certification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import density, partitions
from .certifier import (CertificationError, catalog, claim_by_id, certify,
                        main_cases, numeric_verify)
from .etaquot import parse_eta_quotient


class UsageError(Exception):
    pass


def _write_atomic(path: str, data: str) -> None:
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".qparity-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _emit(text: str, out: str | None) -> None:
    if out:
        _write_atomic(out, text)
    else:
        sys.stdout.write(text)


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


# -- subcommands ------------------------------------------------------------

def _cmd_expand(args) -> int:
    quot = parse_eta_quotient(args.expr)
    series = quot.expand(args.terms)
    if args.format == "structured":
        payload = {"expr": quot.text(), "offset24": series.offset24,
                   "trunc": series.trunc, "support": series.support()}
        _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
    else:
        lines = [f"expr: {quot.text()}",
                 f"offset24: {series.offset24}",
                 f"trunc: {series.trunc}",
                 "support: " + " ".join(map(str, series.support()))]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _resolve_cases(args) -> list[str]:
    if args.all:
        return [c.id for c in main_cases()]
    if not args.case:
        raise UsageError("need --case a,b,t or --all")
    try:
        claim_by_id(args.case)
    except KeyError as exc:
        raise UsageError(str(exc)) from None
    return [args.case.replace(" ", "")]


def _cmd_verify(args) -> int:
    if args.all:
        ids = [c.id for c in catalog()]
    else:
        ids = _resolve_cases(args)
    results = _parallel(ids, lambda cid: numeric_verify(claim_by_id(cid), args.terms),
                        args.threads)
    lines = []
    failed = False
    for r in results:
        if r.ok:
            lines.append(f"{r.claim_id}: ok to {r.depth} terms")
        else:
            failed = True
            lines.append(f"{r.claim_id}: FAIL first mismatch at q^{r.first_mismatch}")
    _emit("\n".join(lines) + "\n", args.out)
    return 1 if failed else 0


def _cmd_certify(args) -> int:
    ids = _resolve_cases(args)
    for cid in ids:
        if claim_by_id(cid).numeric_only:
            raise UsageError(f"{cid} is numeric-only; use the verify command")
    certs = _parallel(ids, certify, args.threads)
    failed = any(not c.passed() for c in certs)
    if args.out and len(certs) > 1:
        os.makedirs(args.out, exist_ok=True)
        for c in certs:
            name = "cert-" + c.case_id.replace(",", "_") + ".txt"
            if not c.passed() and args.strict_output:
                continue
            _write_atomic(os.path.join(args.out, name), c.to_text())
        summary = "\n".join(f"{c.case_id}: {c.verdict}" for c in certs) + "\n"
        sys.stdout.write(summary)
    else:
        text = "".join(c.to_text() + "\n" for c in certs)
        _emit(text, args.out)
    return 1 if failed else 0


def _cmd_density(args) -> int:
    if args.relation:
        rep = density.regular_relation_check(args.x)
        if args.format == "structured":
            payload = {"x": rep.x, "d5": _frac(rep.d5), "d20": _frac(rep.d20),
                       "d7": _frac(rep.d7), "d28": _frac(rep.d28),
                       "residual_5_20": _frac(rep.residual_5_20),
                       "residual_7_28": _frac(rep.residual_7_28),
                       "identity_ok": rep.identity_ok}
            _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
        else:
            lines = [f"x: {rep.x}",
                     f"b5 odd ratio: {_frac(rep.d5)} ~ {float(rep.d5):.6f}",
                     f"b20 odd ratio: {_frac(rep.d20)} ~ {float(rep.d20):.6f}",
                     f"b7 odd ratio: {_frac(rep.d7)} ~ {float(rep.d7):.6f}",
                     f"b28 odd ratio: {_frac(rep.d28)} ~ {float(rep.d28):.6f}",
                     f"|d5 - d20/4|: {float(rep.residual_5_20):.6f}",
                     f"|d7 - d28/2|: {float(rep.residual_7_28):.6f}",
                     f"dissection identity exact to x: {rep.identity_ok}"]
            _emit("\n".join(lines) + "\n", args.out)
        return 0 if rep.identity_ok else 1
    est = density.odd_density(args.series, args.x)
    if args.format == "structured":
        payload = {"series": est.series_id, "x": est.x, "odd_count": est.odd_count,
                   "ratio": _frac(est.ratio),
                   "checkpoints": [[h, c] for h, c in est.checkpoints]}
        _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
    else:
        lines = [f"series: {est.series_id}", f"x: {est.x}",
                 f"odd_count: {est.odd_count}",
                 f"ratio: {_frac(est.ratio)} ~ {float(est.ratio):.6f}"]
        for h, c in est.checkpoints:
            lines.append(f"checkpoint {h}: {c} ~ {c / h:.6f}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_table(args) -> int:
    if args.dump:
        x = args.x
        table = _parity_table(args.dump, x)
        if args.format == "bits":
            if not args.out:
                raise UsageError("--format bits needs --out PATH")
            with open(args.out + ".tmp", "wb") as fh:
                fh.write(table.to_bit_dump())
            os.replace(args.out + ".tmp", args.out)
            sys.stdout.write(f"wrote {table.kind} bit dump for x={x}\n")
        else:
            _emit(table.to_rle() + "\n", args.out)
        return 0
    ts = [int(v) for v in args.ts.split(",") if v]
    if not ts:
        raise UsageError("--ts needs a comma-separated list of t values")
    rows = density.conjecture_table(ts, args.x)
    if args.format == "structured":
        payload = [{"t": r.t, "predicted": _frac(r.predicted),
                    "estimate": _frac(r.estimate), "deviation": _frac(r.deviation)}
                   for r in rows]
        _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
    else:
        lines = [f"{'t':>4} {'predicted':>10} {'estimate':>12} {'deviation':>12}"]
        for r in rows:
            lines.append(f"{r.t:>4} {_frac(r.predicted):>10} "
                         f"{float(r.estimate):>12.6f} {float(r.deviation):>12.6f}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _parity_table(spec: str, x: int):
    kind, _, arg = spec.partition("_")
    if kind == "p" and arg:
        if arg == "1":
            return partitions.partition_parity(x)
        return partitions.multipartition_parity(int(arg), x)
    if kind == "b" and arg:
        return partitions.regular_parity(int(arg), x)
    raise UsageError(f"unknown table spec {spec!r} (use p_T or b_M)")


def _parallel(items, fn, threads):
    if threads is None:
        threads = os.cpu_count() or 1
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


# -- dispatcher -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qparity",
        description="Parity congruences of partition generating functions: "
                    "expand, verify, certify, and measure odd densities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="expand an eta quotient mod 2")
    p.add_argument("--expr", required=True,
                   help="e.g. 'eta(1)^10 * eta(2)^2 * eta(11)^11 * eta(22)^-22 @ N=44'")
    p.add_argument("--terms", type=int, default=100)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_expand)

    p = sub.add_parser("verify", help="numeric coefficient comparison of a claim")
    p.add_argument("--case", help="catalog id, e.g. 5,4,1 or eq4")
    p.add_argument("--all", action="store_true", help="every catalog claim")
    p.add_argument("--terms", type=int, default=10000)
    p.add_argument("--threads", type=int)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("certify", help="full proof certificate for a catalog case")
    p.add_argument("--case", help="catalog triple, e.g. 11,6,1")
    p.add_argument("--all", action="store_true")
    p.add_argument("--threads", type=int)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--out", help="file (single case) or directory (--all)")
    p.add_argument("--strict-output", action="store_true",
                   help="do not write certificate files for failed cases")
    p.set_defaults(fn=_cmd_certify)

    p = sub.add_parser("density", help="exact odd-density estimate")
    p.add_argument("--series", default="p_1", help="p_T, b_M or landau")
    p.add_argument("--x", type=int, default=10**6)
    p.add_argument("--relation", action="store_true",
                   help="report the 5/20- and 7/28-regular density relations")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_density)

    p = sub.add_parser("table", help="conjecture table or parity-table dump")
    p.add_argument("--ts", default="1,2,3,4,5", help="comma-separated t values")
    p.add_argument("--x", type=int, default=10**5)
    p.add_argument("--dump", help="dump a parity table instead: p_T or b_M")
    p.add_argument("--format", choices=("text", "structured", "bits", "rle"),
                   default="text")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (CertificationError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
