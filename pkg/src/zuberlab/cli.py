"""Command line entry point.

Exit status: 0 when every check passes, 1 when a mathematical mismatch is
found, 2 for invalid input or configuration.
"""
from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path

from .campaigns import CampaignConfig, inspect_point, run_theorem1_campaign, run_zuber_campaign
from .core import ParamPoint
from .errors import ConfigError, DomainError, VerificationError
from .fusion import MAX_VERTICES, build_regular_graph, dump_dot, dump_text, vertex_count
from .report import FORMATS, emit, write

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID = 0, 1, 2

# config-file keys and the argparse dest they feed
_FILE_KEYS = {
    "N": "N",
    "trials": "trials",
    "den-bound": "den_bound",
    "seed": "seed",
    "boundary-fraction": "boundary_fraction",
    "level": "level",
    "levels": "levels",
    "format": "format",
    "out": "out",
    "jobs": "jobs",
    "tolerance": "tolerance",
}


def parse_int_list(text: str) -> list[int]:
    """Accept ``"3"``, ``"2,3,5"`` or an inclusive range ``"2..8"``."""
    out: list[int] = []
    try:
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                a, b = part.split("..", 1)
                lo, hi = int(a), int(b)
                if hi < lo:
                    raise ConfigError(f"empty range {part!r}")
                out.extend(range(lo, hi + 1))
            elif part:
                out.append(int(part))
    except ValueError:
        raise ConfigError(f"cannot parse integer list {text!r}") from None
    return out


def read_config_file(path: Path) -> dict[str, str]:
    """Read ``key = value`` lines; blank lines and ``#`` comments are skipped."""
    values: dict[str, str] = {}
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.lstrip("-")
        if key not in _FILE_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        values[_FILE_KEYS[key]] = value
    return values


def _campaign_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", type=Path, help="key=value file; flags override it")
    p.add_argument("--N", help="N values: 3, 2,3,4 or 2..8")
    p.add_argument("--seed", help="64-bit unsigned seed (default 0)")
    p.add_argument("--format", choices=FORMATS)
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--jobs", help="worker processes (default 1)")
    p.add_argument("--tolerance", help="float cross-check tolerance (default 1e-8)")
    p.add_argument("--timing", action="store_true", help="include wall-clock timing in the output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zuberlab", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    t1 = sub.add_parser("theorem1", help="sample points of D and compare sign counts of Q and G")
    _campaign_args(t1)
    t1.add_argument("--trials", help="points per N (default 100)")
    t1.add_argument("--den-bound", dest="den_bound", help="denominator bound (default 64)")
    t1.add_argument("--boundary-fraction", dest="boundary_fraction",
                    help="share of boundary points, e.g. 1/4 (default 0)")

    zb = sub.add_parser("zuber", help="signature of the intersection form of regular fusion graphs")
    _campaign_args(zb)
    zb.add_argument("--level", help="a single level k = h - N")
    zb.add_argument("--levels", help="levels, e.g. 1..10")

    pt = sub.add_parser("point", help="inspect one point of D")
    pt.add_argument("coords", help="comma separated rationals, e.g. 1/8,1/4")
    pt.add_argument("--format", choices=FORMATS, default="text")
    pt.add_argument("--out")

    gr = sub.add_parser("graph", help="dump a regular fusion graph")
    gr.add_argument("--N", required=True, type=int)
    gr.add_argument("--level", required=True, type=int)
    gr.add_argument("--dot", action="store_true", help="emit DOT instead of the text edge list")
    gr.add_argument("--out")
    return parser


def _merged(args: argparse.Namespace) -> dict[str, str]:
    values = read_config_file(args.config) if getattr(args, "config", None) else {}
    for dest in _FILE_KEYS.values():
        v = getattr(args, dest, None)
        if v is not None:
            values[dest] = str(v)
    return values


def config_from_args(args: argparse.Namespace) -> tuple[CampaignConfig, str]:
    v = _merged(args)
    cfg = CampaignConfig()
    try:
        if "N" in v:
            cfg.n_values = parse_int_list(v["N"])
        if "trials" in v:
            cfg.trials = int(v["trials"])
        if "den_bound" in v:
            cfg.denominator_bound = int(v["den_bound"])
        if "seed" in v:
            cfg.seed = int(v["seed"])
        if "boundary_fraction" in v:
            cfg.boundary_fraction = Fraction(v["boundary_fraction"])
        if "levels" in v:
            cfg.level_range = parse_int_list(v["levels"])
        if "level" in v:
            cfg.level_range = [int(v["level"])]
        if "jobs" in v:
            cfg.jobs = int(v["jobs"])
        if "tolerance" in v:
            cfg.tolerance = float(v["tolerance"])
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(str(exc)) from None
    if "out" in v:
        cfg.output_path = Path(v["out"])
    fmt = v.get("format", "json")
    if fmt not in FORMATS:
        raise ConfigError(f"unknown format {fmt!r}")
    cfg.validate()
    return cfg, fmt


def _run(args: argparse.Namespace) -> int:
    if args.command in ("theorem1", "zuber"):
        cfg, fmt = config_from_args(args)
        runner = run_theorem1_campaign if args.command == "theorem1" else run_zuber_campaign
        report = runner(cfg)
        write(emit(report, fmt, include_timing=args.timing), cfg.output_path)
        return EXIT_OK if report.passed else EXIT_MISMATCH
    if args.command == "point":
        report = inspect_point(ParamPoint.parse(args.coords))
        write(emit(report, args.format), Path(args.out) if args.out else None)
        return EXIT_OK if report.passed else EXIT_MISMATCH
    # graph
    n, h = args.N, args.N + args.level
    if args.N < 2 or args.level < 1:
        raise ConfigError("graph needs N >= 2 and level >= 1")
    if vertex_count(n, h) > MAX_VERTICES:
        raise ConfigError(f"N={n}, level={args.level} exceeds the {MAX_VERTICES}-vertex cap")
    graph = build_regular_graph(n, h)
    text = dump_dot(graph) if args.dot else dump_text(graph)
    write(text.encode("utf-8"), Path(args.out) if args.out else None)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return _run(args)
    except (ConfigError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
