"""Command-line entry point: ``splitham <command> ...``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import equitable, families, graph, spectral, verify

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

DEFAULT_BOUNDS = {
    "bbb": (6, 40),
    "I3": (6, 40),
    "I44": (8, 40),
    "I5": (10, 40),
    "I4": (12, 30),
}


class UsageError(Exception):
    pass


@dataclass
class Config:
    tol: float = spectral.DEFAULT_TOL
    margin: float = spectral.DEFAULT_MARGIN
    max_iter: int = spectral.DEFAULT_MAX_ITER
    threads: int = 1
    format: str = "json"
    bounds: dict[str, tuple[int, int]] = field(default_factory=lambda: dict(DEFAULT_BOUNDS))

    def validate(self) -> None:
        if self.tol <= 0:
            raise UsageError("tol must be positive")
        if self.margin < 10 * self.tol:
            raise UsageError(f"margin {self.margin:g} must be at least 10x tol {self.tol:g}")
        if self.max_iter < 1 or self.threads < 1:
            raise UsageError("max_iter and threads must be positive")
        if self.format not in ("json", "csv", "table"):
            raise UsageError(f"unknown format {self.format!r}")


def parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a, b = (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected a..b") from None
    if a > b:
        raise UsageError(f"empty range {text!r}")
    return a, b


def load_config(path: str | None) -> Config:
    cfg = Config()
    if path is None:
        return cfg
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config: {exc}") from None
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = (part.strip() for part in line.partition("="))
        if not sep:
            raise UsageError(f"{path}:{lineno}: expected key = value")
        try:
            if key == "tol":
                cfg.tol = float(value)
            elif key == "margin":
                cfg.margin = float(value)
            elif key == "max_iter":
                cfg.max_iter = int(float(value))
            elif key == "threads":
                cfg.threads = int(value)
            elif key == "format":
                cfg.format = value
            elif key.startswith("bounds.") and key[7:] in DEFAULT_BOUNDS:
                cfg.bounds[key[7:]] = parse_range(value)
            else:
                raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        except ValueError:
            raise UsageError(f"{path}:{lineno}: bad value for {key}") from None
    return cfg


def resolve_config(args: argparse.Namespace) -> Config:
    cfg = load_config(args.config)
    for name in ("tol", "margin", "max_iter", "threads", "format"):
        value = getattr(args, name, None)
        if value is not None:
            setattr(cfg, name, value)
    cfg.validate()
    return cfg


# -- output ---------------------------------------------------------------------

def _fixed(obj):
    """Round floats to 12 significant digits so output is stable across runs and platforms."""
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {k: _fixed(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_fixed(v) for v in obj]
    if hasattr(obj, "item"):  # numpy scalar
        return _fixed(obj.item())
    return obj


def _cell(value) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def _table_rows(payload: dict) -> list[dict]:
    if payload.get("rows"):
        return payload["rows"]
    summary = {k: v for k, v in payload.items() if k not in ("witnesses", "rows", "details")}
    summary.update(payload.get("details", {}))
    return [summary]


def emit(payload, fmt: str, out) -> None:
    payload = _fixed(payload)
    if fmt == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
        return
    rows = _table_rows(payload) if isinstance(payload, dict) else [{"value": payload}]
    columns = list(dict.fromkeys(k for r in rows for k in r))
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for r in rows:
            writer.writerow([_cell(r.get(c, "")) for c in columns])
        out.write(buf.getvalue())
        return
    cells = [[_cell(r.get(c, "")) for c in columns] for r in rows]
    widths = [max(len(c), *(len(row[j]) for row in cells)) for j, c in enumerate(columns)]
    out.write("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip() + "\n")
    for row in cells:
        out.write("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() + "\n")
    if isinstance(payload, dict) and payload.get("rows") and "verdict" in payload:
        out.write(f"verdict: {payload['verdict']}  checked: {payload['checked']}\n")
    if isinstance(payload, dict) and payload.get("witnesses"):
        out.write(f"witnesses: {len(payload['witnesses'])}\n")
        for w in payload["witnesses"]:
            out.write(f"  {w['graph6']}  {json.dumps(w['values'])}\n")


def _emit_report(report: verify.VerificationReport, cfg: Config, out) -> int:
    emit(report.to_dict(), cfg.format, out)
    return EXIT_PASS if report.passed else EXIT_FAIL


# -- commands -------------------------------------------------------------------

def _family_spec(values: list[str]) -> families.FamilySpec:
    if len(values) != 3:
        raise UsageError("--family takes NAME P1 P2")
    name, *params = values
    try:
        return families.family(name, *(int(p) for p in params))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _read_graph6(text: str, stdin) -> graph.Graph:
    if text == "-":
        text = stdin.readline()
    return graph.from_graph6(text)


def cmd_family(args, cfg, out, stdin) -> int:
    spec = _family_spec([args.name, *args.params])
    g = families.build_family(spec)
    if args.json:
        out.write(json.dumps(graph.to_json(g)) + "\n")
    else:
        out.write(graph.to_graph6(g) + "\n")
    return EXIT_PASS


def cmd_rho(args, cfg, out, stdin) -> int:
    if (args.graph6 is None) == (args.family is None):
        raise UsageError("rho needs exactly one of GRAPH6 or --family NAME P1 P2")
    g = families.build_family(_family_spec(args.family)) if args.family else _read_graph6(args.graph6, stdin)
    res = spectral.spectral_radius(g, cfg.tol, cfg.max_iter)
    emit(res.to_dict(), cfg.format, out)
    return EXIT_PASS


def cmd_charpoly(args, cfg, out, stdin) -> int:
    spec = _family_spec(args.family)
    g = families.build_family(spec)
    part = families.family_partition(spec)
    if args.paper_order:
        published = families.paper_quotient(spec)
        if published is None:
            raise UsageError(f"no published cell order for {spec.label}")
        part = part.permuted(published[0])
    q = equitable.quotient(g, part)
    coeffs = equitable.char_poly(q)
    if cfg.format == "json":
        out.write(json.dumps(coeffs) + "\n")
    else:
        emit({"rows": [{"degree": len(coeffs) - 1 - j, "coefficient": c} for j, c in enumerate(coeffs)]}, cfg.format, out)
    return EXIT_PASS


def cmd_verify(args, cfg, out, stdin) -> int:
    if args.what == "lemma":
        lemma = args.id
        if args.n_range:
            lo, hi = parse_range(args.n_range)
        else:
            lo, hi = cfg.bounds[lemma]
        i_size = args.i if args.i is not None else (6 if lemma == "I4" else None)
        report = verify.verify_lemma(lemma, lo, hi, i_size, cfg.margin, cfg.tol, cfg.max_iter)
    elif args.what == "theorem":
        report = verify.verify_theorem(args.id, args.n, args.i, cfg.margin, cfg.tol, cfg.max_iter, cfg.threads)
    elif args.what == "properties":
        lemmas = args.lemma or list(verify.PROPERTY_LEMMAS)
        report = verify.property_suite(args.seed, args.trials, lemmas, cfg.tol, cfg.max_iter)
    else:
        report = verify.corpus_crosscheck(args.n)
    return _emit_report(report, cfg, out)


def cmd_enumerate(args, cfg, out, stdin) -> int:
    filt = verify.EnumFilter(
        connected=args.connected,
        k1r_free=args.k1r_free,
        non_hamiltonian=args.non_hamiltonian,
        max_clique_typed=args.typed,
    )
    for g in verify.enumerate_split_graphs(args.k, args.i, filt, reduce_permutations=not args.no_reduce):
        out.write(graph.to_graph6(g) + "\n")
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "table"), default=None)
    common.add_argument("--config", help="key = value file; flags override it")
    common.add_argument("--tol", type=float, default=None)
    common.add_argument("--margin", type=float, default=None)
    common.add_argument("--max-iter", dest="max_iter", type=int, default=None)
    common.add_argument("--threads", type=int, default=None)

    parser = argparse.ArgumentParser(prog="splitham", description="Split-graph spectra and Hamiltonicity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", parents=[common], help="print a family graph")
    p.add_argument("name", choices=families.FAMILY_NAMES)
    p.add_argument("params", nargs=2)
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--graph6", action="store_true", help="graph6 line (default)")
    kind.add_argument("--json", action="store_true", help="edge-list JSON")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("rho", parents=[common], help="spectral radius and Perron vector")
    p.add_argument("graph6", nargs="?", help="graph6 text, or - for stdin")
    p.add_argument("--family", nargs=3, metavar=("NAME", "P1", "P2"))
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("charpoly", parents=[common], help="quotient characteristic polynomial of a family")
    p.add_argument("--family", nargs=3, metavar=("NAME", "P1", "P2"), required=True)
    p.add_argument("--paper-order", action="store_true", help="use the published cell order")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("verify", help="lemma sweeps, theorem checks and property trials")
    vsub = p.add_subparsers(dest="what", required=True)
    v = vsub.add_parser("lemma", parents=[common])
    v.add_argument("id", choices=[x.value for x in verify.LemmaId])
    v.add_argument("--n-range", dest="n_range")
    v.add_argument("--i", type=int, help="|I| for the I4 sweep (default 6)")
    v.set_defaults(func=cmd_verify)
    v = vsub.add_parser("theorem", parents=[common])
    v.add_argument("id", choices=[x.value for x in verify.TheoremId])
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--i", type=int, required=True)
    v.set_defaults(func=cmd_verify)
    v = vsub.add_parser("properties", parents=[common])
    v.add_argument("--seed", type=int, default=1)
    v.add_argument("--trials", type=int, default=1000)
    v.add_argument("--lemma", action="append", choices=verify.PROPERTY_LEMMAS)
    v.set_defaults(func=cmd_verify)
    v = vsub.add_parser("corpus", parents=[common])
    v.add_argument("--n", type=int, required=True)
    v.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="stream split graphs as graph6")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--k1r-free", dest="k1r_free", type=int, metavar="R")
    p.add_argument("--non-hamiltonian", dest="non_hamiltonian", action="store_true")
    p.add_argument("--typed", action="store_true", help="K must be a maximum clique")
    p.add_argument("--no-reduce", dest="no_reduce", action="store_true", help="keep I-permutation duplicates")
    p.set_defaults(func=cmd_enumerate)
    return parser


def run(argv: list[str] | None = None, out=None, err=None, stdin=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        cfg = resolve_config(args)
        return args.func(args, cfg, out, stdin)
    except (UsageError, graph.GraphError, ValueError) as exc:
        err.write(f"splitham: error: {exc}\n")
        return EXIT_USAGE
    except spectral.ConvergenceError as exc:
        err.write(f"splitham: solver failure: {exc}\n")
        return EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
