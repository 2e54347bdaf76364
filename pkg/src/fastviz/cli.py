"""Command-line interface: ``fastviz filter|compare|synth``.

Parameters come from flags, optionally seeded by a JSON config file
(``--config``); explicit flags win over config-file values.
"""

from __future__ import annotations

import argparse
import json
import sys

from .buffer import FilterParams
from .harness import (EXIT_IO, EXIT_OK, EXIT_USAGE, CompareRunConfig,
                      FilterRunConfig, SynthRunConfig, run_compare,
                      run_filter, run_synth)
from .synth import BurstWindow, SynthSpec

_PARAM_FLAGS = [
    ("forgetting_period", float, None, "seconds of data time between forgetting rounds"),
    ("time_contraction", float, None, "data seconds compressed into one playback second"),
    ("buffer_capacity", int, 2000, "maximum number of buffered nodes"),
    ("visual_capacity", int, 50, "nodes shown per frame"),
    ("forgetting_factor", float, 0.8, "per-round decay multiplier in [0,1)"),
    ("edge_threshold", float, 0.95, "minimum edge weight shown (exclusive)"),
    ("prune_epsilon", float, 1e-12, "values below this are treated as zero"),
]

_SYNTH_FLAGS = [
    ("duration", float, None, "stream length in seconds"),
    ("base_rate", float, None, "baseline events per second"),
    ("vocab_size", int, 1000, "number of distinct base node names"),
    ("clique_min", int, 2, "smallest clique size"),
    ("clique_max", int, 2, "largest clique size"),
    ("weight_low", float, 1.0, "lower bound of event weight"),
    ("weight_high", float, 1.0, "upper bound of event weight"),
    ("popularity_exponent", float, 0.8, "node popularity skew (0 = uniform)"),
    ("start_time", int, 0, "epoch seconds of the first event"),
    ("seed", int, 0, "random seed"),
]


def _add_flags(parser: argparse.ArgumentParser, flags) -> None:
    for name, kind, _default, help_text in flags:
        parser.add_argument(f"--{name.replace('_', '-')}", type=kind,
                            default=None, dest=name, help=help_text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fastviz")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file with default flag values")
    common.add_argument("--lenient", action="store_true",
                        help="count and skip bad lines instead of aborting")
    common.add_argument("--fps", type=int, default=None,
                        help="animation frames per second (default 30)")

    f = sub.add_parser("filter", parents=[common],
                       help="run the bounded filter, emit JSON updates")
    f.add_argument("--input", "-i", default="-", help="event stream file or - for stdin")
    f.add_argument("--updates-out", "-o", default="-", dest="updates_out",
                   help="updates file or - for stdout")
    f.add_argument("--change-tolerance", type=float, default=None, dest="change_tolerance",
                   help="relative change below which node/edge updates are suppressed")
    _add_flags(f, _PARAM_FLAGS)

    c = sub.add_parser("compare", parents=[common],
                       help="run bounded + window filters in lockstep, emit CSV metrics")
    c.add_argument("--input", "-i", default="-")
    c.add_argument("--metrics-out", required=True, dest="metrics_out")
    c.add_argument("--jaccard-out", required=True, dest="jaccard_out")
    c.add_argument("--include-low-degree", action="store_true", dest="include_low_degree",
                   help="count degree<2 nodes as 0 in the local clustering average")
    _add_flags(c, _PARAM_FLAGS)

    s = sub.add_parser("synth", parents=[common],
                       help="generate a synthetic bursty stream")
    s.add_argument("--spec", help="JSON spec file (bursts can only come from here)")
    s.add_argument("--out", required=True, help="output stream path or -")
    _add_flags(s, _SYNTH_FLAGS)

    return parser


def _load_config(path: str | None, stderr) -> dict | None:
    if not path:
        return {}
    try:
        with open(path, "r", encoding="utf-8") as handle:
            loaded = json.load(handle)
    except OSError as exc:
        print(f"fastviz: {exc}", file=stderr)
        return None
    except json.JSONDecodeError as exc:
        print(f"fastviz: bad config file: {exc}", file=stderr)
        return None
    if not isinstance(loaded, dict):
        print("fastviz: config file must hold a JSON object", file=stderr)
        return None
    return loaded


def _resolve(args, file_cfg: dict, flags, stderr) -> dict | None:
    resolved = {}
    for name, kind, default, _help in flags:
        value = getattr(args, name, None)
        if value is None:
            value = file_cfg.get(name, default)
        if value is None:
            print(f"fastviz: --{name.replace('_', '-')} is required "
                  "(flag or config file)", file=stderr)
            return None
        resolved[name] = kind(value)
    return resolved


def _filter_params(args, file_cfg: dict, stderr) -> FilterParams | None:
    resolved = _resolve(args, file_cfg, _PARAM_FLAGS, stderr)
    if resolved is None:
        return None
    try:
        return FilterParams(**resolved)
    except ValueError as exc:
        print(f"fastviz: {exc}", file=stderr)
        return None


def _fps(args, file_cfg: dict) -> int:
    if args.fps is not None:
        return args.fps
    return int(file_cfg.get("fps", 30))


def main(argv=None) -> int:
    stderr = sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    file_cfg = _load_config(getattr(args, "config", None), stderr)
    if file_cfg is None:
        return EXIT_USAGE

    if args.command == "filter":
        params = _filter_params(args, file_cfg, stderr)
        if params is None:
            return EXIT_USAGE
        tolerance = args.change_tolerance
        if tolerance is None:
            tolerance = float(file_cfg.get("change_tolerance", 1e-3))
        config = FilterRunConfig(input_path=args.input, updates_path=args.updates_out,
                                 params=params, frames_per_second=_fps(args, file_cfg),
                                 change_tolerance=tolerance, strict=not args.lenient)
        return run_filter(config)

    if args.command == "compare":
        params = _filter_params(args, file_cfg, stderr)
        if params is None:
            return EXIT_USAGE
        config = CompareRunConfig(input_path=args.input, metrics_path=args.metrics_out,
                                  jaccard_path=args.jaccard_out, params=params,
                                  frames_per_second=_fps(args, file_cfg),
                                  strict=not args.lenient,
                                  include_low_degree=args.include_low_degree)
        return run_compare(config)

    if args.command == "synth":
        spec_cfg = dict(file_cfg)
        if args.spec:
            loaded = _load_config(args.spec, stderr)
            if loaded is None:
                return EXIT_USAGE
            spec_cfg.update(loaded)
        resolved = _resolve(args, spec_cfg, _SYNTH_FLAGS, stderr)
        if resolved is None:
            return EXIT_USAGE
        bursts = []
        for raw in spec_cfg.get("bursts", []):
            try:
                bursts.append(BurstWindow(**raw))
            except (TypeError, ValueError) as exc:
                print(f"fastviz: bad burst window: {exc}", file=stderr)
                return EXIT_USAGE
        try:
            spec = SynthSpec(bursts=tuple(bursts), **resolved)
        except ValueError as exc:
            print(f"fastviz: {exc}", file=stderr)
            return EXIT_USAGE
        return run_synth(SynthRunConfig(spec=spec, output_path=args.out))

    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
