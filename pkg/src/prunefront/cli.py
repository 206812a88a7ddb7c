"""Command-line front end.

Exit codes: 0 success, 1 mathematical failure (certificate printed),
2 usage or parse error, 3 resource or convergence error.

A file argument that does not exist but names a data file shipped with the
package (``example3.disks``, ``table1.rects`` ...) reads the bundled copy.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from .markov import check_partition, transitions
from .plane import kneading_disk
from .prune import PruningCollection, StabilizationError, check_pruning
from .shiftspace import ResourceError, entropy_bounds, surviving_periodic_orbits
from .specfmt import ParseError, bundled, emit_regions, parse_disks, parse_rects, parse_seq, parse_seq_list
from .spectral import spectral_radius
from .symseq import is_kneading

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class _UsageError(Exception):
    pass


def _read(path: str) -> str:
    p = Path(path)
    if p.exists():
        return p.read_text(encoding="utf-8")
    try:
        return bundled(p.name)
    except (FileNotFoundError, OSError):
        raise _UsageError(f"{path}: no such file") from None


def _load(path: str, parser):
    text = _read(path)
    try:
        return parser(text)
    except ParseError as exc:
        raise _UsageError(f"{path}:{exc}") from None


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    raise TypeError(type(x).__name__)


class _Out:
    def __init__(self, as_json: bool, stream):
        self.json = as_json
        self.stream = stream

    def record(self, rec: dict, text: str) -> None:
        if self.json:
            self.stream.write(json.dumps(rec, sort_keys=True, default=_jsonable) + "\n")
        else:
            self.stream.write(text.rstrip("\n") + "\n")


def _fmt(x: float) -> str:
    return f"{x:.6f}"


# -- commands ---------------------------------------------------------------


def _cmd_check(args, out: _Out) -> int:
    c = _load(args.disks, parse_disks)
    cert = check_pruning(c, args.bound, hard_cap=args.hard_cap)
    lines = [f"verdict: {cert.verdict} ({cert.mode})"]
    if cert.order:
        lines.append("order: " + " < ".join(cert.order))
    if cert.stabilization_bound is not None:
        lines.append(f"stabilization bound: {cert.stabilization_bound}")
    for v in cert.violations:
        lines.append(f"violation {v.kind} n={v.n} {v.i} -> {v.j}: {v.witness}")
    out.record({"command": "check", "file": args.disks, **cert.as_dict()}, "\n".join(lines))
    return EXIT_OK if cert.passed else EXIT_FAIL


def _cmd_orbits(args, out: _Out) -> int:
    c = _load(args.disks, parse_disks)
    orbits = surviving_periodic_orbits(c, args.max_period)
    if out.json:
        for s in orbits:
            out.record({"command": "orbits", "period": len(s.per), "orbit": str(s)}, "")
    else:
        out.record({}, f"{len(orbits)} surviving orbits of period <= {args.max_period}")
        for s in orbits:
            out.record({}, f"{len(s.per):3d}  {s}")
    return EXIT_OK


def _cmd_entropy(args, out: _Out) -> int:
    c = _load(args.disks, parse_disks)
    b = entropy_bounds(c, args.level, method=args.method, budget=args.budget, tol=args.tol)
    out.record(
        {"command": "entropy", "file": args.disks, **b.as_dict()},
        f"level {b.level}: {_fmt(b.lower)} <= h <= {_fmt(b.upper)}"
        f"  (graphs {b.lower_matrix_size}, {b.upper_matrix_size})",
    )
    return EXIT_OK if b.converged else EXIT_RESOURCE


def _cmd_markov(args, out: _Out) -> int:
    rects = _load(args.rects, parse_rects)
    m = transitions(rects)
    r = spectral_radius(m)
    status = EXIT_OK if r.converged else EXIT_RESOURCE
    rec = {
        "command": "markov",
        "names": m.names,
        "matrix": m.entries.tolist(),
        **r.as_dict(),
    }
    text = ["M =", str(m), f"lambda = {r.lambda_:.6f}", f"log lambda = {r.log_lambda:.6f}"]
    if args.disks:
        report = check_partition(rects, _load(args.disks, parse_disks))
        rec["partition"] = report.as_dict()
        text.append(f"partition: {'ok' if report.ok else 'problems'}")
        for a, b in report.overlapping:
            text.append(f"  overlap {a} {b}")
        for a, b in report.pruned:
            text.append(f"  {a} meets pruned disk {b}")
        for a in report.multi_branch:
            text.append(f"  {a} straddles both branches")
        if not report.ok and status == EXIT_OK:
            status = EXIT_FAIL
    out.record(rec, "\n".join(text))
    return status


def _scan_one(job: tuple[str, int, int | None]) -> dict:
    literal, level, budget = job
    kappa = parse_seq(literal)
    c = PruningCollection((("D", kneading_disk(kappa)),))
    rec: dict = {"kappa": str(kappa), "kneading": is_kneading(kappa)}
    try:
        rec["verdict"] = check_pruning(c).verdict
        b = entropy_bounds(c, level, budget=budget)
        rec.update(lower=b.lower, upper=b.upper, converged=b.converged)
    except (ResourceError, StabilizationError) as exc:
        rec["error"] = str(exc)
    return rec


def _cmd_scan(args, out: _Out) -> int:
    text = _read(args.kneading_list)
    try:
        seqs = parse_seq_list(text)
    except ParseError as exc:
        raise _UsageError(f"{args.kneading_list}:{exc}") from None
    jobs = [(str(s), args.level, args.budget) for s in seqs]
    if args.workers > 1:
        with ProcessPoolExecutor(args.workers) as ex:
            recs = list(ex.map(_scan_one, jobs))
    else:
        recs = [_scan_one(j) for j in jobs]
    status = EXIT_OK
    for i, rec in enumerate(recs):
        if "error" in rec:
            status = EXIT_RESOURCE
            line = f"{rec['kappa']:>16}  error: {rec['error']}"
        else:
            if rec["verdict"] != "pass" or not rec["converged"]:
                status = max(status, EXIT_FAIL if rec["converged"] else EXIT_RESOURCE)
            line = (
                f"{rec['kappa']:>16}  kneading={'yes' if rec['kneading'] else 'no ':3}  "
                f"{rec['verdict']:4}  {_fmt(rec['lower'])} <= h <= {_fmt(rec['upper'])}"
            )
        out.record({"command": "scan-family", "index": i, "level": args.level, **rec}, line)
    return status


def _range(text: str) -> range:
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _cmd_plot(args, out: _Out) -> int:
    c = _load(args.disks, parse_disks)
    doc = emit_regions(c, args.range, args.depth, args.format, budget=args.budget)
    if args.output:
        Path(args.output).write_text(doc, encoding="utf-8")
        out.record({"command": "plot", "output": args.output, "bytes": len(doc)}, f"wrote {args.output}")
    else:
        out.stream.write(doc)
    return EXIT_OK


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="prunefront", description="Pruning fronts for the horseshoe.")
    p.add_argument("--json", action="store_true", help="emit json-lines records")
    p.add_argument("--budget", type=_positive, default=None, help="node budget (default from PRUNEFRONT_NODE_BUDGET)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="verify a pruning collection")
    s.add_argument("disks")
    s.add_argument("--bound", type=_positive, default=None, help="check iterates 1..N only")
    s.add_argument("--hard-cap", type=_positive, default=100_000)
    s.set_defaults(run=_cmd_check)

    s = sub.add_parser("orbits", help="surviving periodic orbits")
    s.add_argument("disks")
    s.add_argument("--max-period", type=_positive, required=True)
    s.set_defaults(run=_cmd_orbits)

    s = sub.add_parser("entropy", help="entropy bounds of the pruned shift")
    s.add_argument("disks")
    s.add_argument("--level", type=_positive, required=True)
    s.add_argument("--method", choices=("automaton", "debruijn"), default="automaton")
    s.add_argument("--tol", type=float, default=1e-10)
    s.set_defaults(run=_cmd_entropy)

    s = sub.add_parser("markov", help="transition matrix and Perron root of a rectangle file")
    s.add_argument("rects")
    s.add_argument("--disks", default=None, help="also check the rectangles against a pruning collection")
    s.set_defaults(run=_cmd_markov)

    s = sub.add_parser("scan-family", help="check and entropy for one-disk fronts over kneading sequences")
    s.add_argument("kneading_list")
    s.add_argument("--level", type=_positive, required=True)
    s.add_argument("--workers", type=_positive, default=1)
    s.set_defaults(run=_cmd_scan)

    s = sub.add_parser("plot", help="SVG or CSV picture of pruned regions (write --range=-1..3 for negative starts)")
    s.add_argument("disks")
    s.add_argument("--range", type=_range, required=True, metavar="A..B")
    s.add_argument("--depth", type=_positive, required=True)
    s.add_argument("--format", choices=("svg", "csv"), default="svg")
    s.add_argument("-o", "--output", default=None)
    s.set_defaults(run=_cmd_plot)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out = _Out(args.json, sys.stdout)
    try:
        return args.run(args, out)
    except _UsageError as exc:
        print(f"prunefront: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceError, StabilizationError) as exc:
        print(f"prunefront: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
