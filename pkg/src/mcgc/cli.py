"""Command line interface.

One tool exposing construction, verification, cutting, exhaustive search,
bound/kmin/gain tables, grid building, codebook building, decoding, and the
tracking simulator.  Exit codes: 0 success, 1 domain error, 2 usage error.
Data goes to stdout (or --output FILE); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .bounds import (
    bounds_table,
    gain_3dp,
    gain_table,
    kmin_table,
    render_bounds_csv,
    render_gain_csv,
    render_kmin_csv,
)
from .construct import build_m1, build_m2, build_m3
from .crossing import compose_for_m, cross, plan_cross, shift_palette
from .errors import InputError, McgcError
from .grid2d import (
    build_codebook,
    decode,
    format_codebook,
    format_grid,
    parse_codebook,
    parse_grid,
    product_grid,
)
from .search import brute_force_max_cyclic
from .sequences import (
    ColorSequence,
    Multiset,
    check_distinguishable,
    format_sequence,
    parse_sequences,
    t_cut,
)
from .sim import SimConfig, parse_config, parse_trajectory, run

FORMAT_VERSION = 1


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _write_output(args, text: str) -> None:
    path = getattr(args, "output", None)
    if path and path != "-":
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_one_sequence(path: str) -> ColorSequence:
    seqs = parse_sequences(_read_text(path))
    if not seqs:
        raise InputError(f"no sequence found in {path}")
    return seqs[0]


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError as exc:
        raise InputError(f"bad integer list {text!r}") from exc


def _parse_range(text: str) -> list[int]:
    """'A..B' inclusive, or a comma list, or a single integer."""
    if ".." in text:
        lo_str, hi_str = text.split("..", 1)
        try:
            lo, hi = int(lo_str), int(hi_str)
        except ValueError as exc:
            raise InputError(f"bad range {text!r}") from exc
        if hi < lo:
            raise InputError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return _int_list(text)


def _builder(m: int):
    return {1: build_m1, 2: build_m2, 3: build_m3}[m]


def cmd_construct(args) -> int:
    seq = _builder(args.m)(args.k)
    if args.linear:
        t = args.cut if args.cut is not None else len(seq) - 1
        seq = t_cut(seq, t, args.m)
    elif args.cut is not None:
        raise InputError("--cut only applies together with --linear")
    _write_output(args, format_sequence(seq))
    return 0


def cmd_verify(args) -> int:
    text = _read_text(args.file)
    sequences = parse_sequences(text)
    if not sequences:
        raise InputError(f"no sequence found in {args.file}")
    failures = 0
    lines = []
    for seq in sequences:
        if args.cyclic:
            seq = seq.with_mode("cyclic")
        elif args.linear:
            seq = seq.with_mode("linear")
        report = check_distinguishable(seq, args.m)
        if report.ok:
            result = {"ok": True, "windows": report.window_count}
            line = f"ok, {report.window_count} windows distinct"
        else:
            failures += 1
            i, j = report.collision
            result = {"ok": False, "collision": [i, j]}
            line = f"collision: windows {i} and {j} carry the same multiset"
        lines.append(json.dumps(result, sort_keys=True) if args.format == "json" else line)
    _write_output(args, "\n".join(lines) + "\n")
    return 1 if failures else 0


def cmd_cut(args) -> int:
    seq = _read_one_sequence(args.file).with_mode("cyclic")
    _write_output(args, format_sequence(t_cut(seq, args.t, args.m)))
    return 0


def cmd_search_max(args) -> int:
    result = brute_force_max_cyclic(args.m, args.k, args.cap)
    status = "proven" if result.proven else "cap-limited"
    comments = [
        f"search m={args.m} max={result.max_length} {status} "
        f"cap={result.cap} ceiling={result.ceiling}"
    ]
    _write_output(args, format_sequence(result.witness, comments))
    return 0


def cmd_cross(args) -> int:
    s = _read_one_sequence(args.s).with_mode("cyclic")
    t = _read_one_sequence(args.t).with_mode("cyclic")
    if min(t.colors) <= s.palette_size:
        t = shift_palette(t, s.palette_size)
    plan = plan_cross(len(s), args.m1, len(t), args.m2)
    out = cross(s, t, plan)
    comments = [
        f"cross split={args.m1}+{args.m2} d={plan.d} L={plan.L}",
    ]
    _write_output(args, format_sequence(out, comments))
    return 0


def cmd_compose(args) -> int:
    result = compose_for_m(args.m, max_colors=args.max_colors)
    split = "+".join(str(p) for p in result.split)
    comments = [f"compose split={split} palettes={','.join(map(str, result.factor_palettes))}"]
    comments.extend(
        f"stage {i}: d={plan.d} L={plan.L}" for i, plan in enumerate(result.plans)
    )
    _write_output(args, format_sequence(result.sequence, comments))
    return 0


def cmd_bounds(args) -> int:
    records = bounds_table(args.m, _parse_range(args.k_range))
    if args.format == "json":
        payload = [
            {
                "m": r.m,
                "k": r.k,
                "lower": r.lower,
                "upper": r.upper,
                "tight": r.tight,
                "lower_provenance": r.lower_provenance,
                "upper_provenance": r.upper_provenance,
                "existence_only": r.existence_only,
            }
            for r in records
        ]
        _write_output(args, json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        _write_output(args, render_bounds_csv(records))
    return 0


def cmd_kmin(args) -> int:
    rows = kmin_table(_int_list(args.m), _int_list(args.sizes))
    if args.format == "json":
        payload = [{"m": m, "M": M, "k": k} for m, M, k in rows]
        _write_output(args, json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        _write_output(args, render_kmin_csv(rows))
    return 0


def _parse_blocks(text: str) -> list[tuple[int, int]]:
    blocks: list[tuple[int, int]] = []
    for token in text.replace(",", " ").split():
        if "x" in token:
            m_str, n_str = token.split("x", 1)
            blocks.append((int(m_str), int(n_str)))
        else:
            v = int(token)
            blocks.append((v, v))
    if not blocks:
        raise InputError("no block shapes given")
    return blocks


def cmd_gain(args) -> int:
    records = gain_table(_int_list(args.sizes), _parse_blocks(args.blocks))
    if args.format == "json":
        payload = [
            {
                "m": r.m,
                "n": r.n,
                "M": r.M,
                "N": r.N,
                "k_M": r.k_M,
                "k_N": r.k_N,
                "gain": gain_3dp(r.gain),
            }
            for r in records
        ]
        _write_output(args, json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        _write_output(args, render_gain_csv(records))
    return 0


def cmd_grid(args) -> int:
    s = _read_one_sequence(args.s)
    t = _read_one_sequence(args.t)
    _write_output(args, format_grid(product_grid(s, t)))
    return 0


def cmd_codebook(args) -> int:
    grid = parse_grid(_read_text(args.grid))
    cb = build_codebook(grid, args.m, args.n)
    _write_output(args, format_codebook(cb))
    return 0


def cmd_decode(args) -> int:
    cb = parse_codebook(_read_text(args.codebook))
    colors = _int_list(args.colors)
    pos = decode(cb, Multiset.of(colors, cb.palette_size))
    _write_output(args, f"{pos[0]} {pos[1]}\n")
    return 0


def cmd_simulate(args) -> int:
    if args.config:
        config = parse_config(_read_text(args.config))
    else:
        required = {
            "--cells": args.cells,
            "--m": args.m,
            "--slots": args.slots,
            "--bits": args.bits,
            "--seed": args.seed,
        }
        missing = [flag for flag, value in required.items() if value is None]
        if missing:
            raise InputError(f"missing flags: {' '.join(missing)}")
        trajectory, p_move = parse_trajectory(args.traj)
        config = SimConfig(
            cells_per_side=args.cells,
            block=args.m,
            slots=args.slots,
            bits_per_slot=args.bits,
            seed=args.seed,
            trajectory=trajectory,
            p_move=p_move,
        )
    report, records = run(config)
    if args.records:
        ndjson = "".join(record.to_json() + "\n" for record in records)
        if args.records == "-":
            sys.stdout.write(ndjson)
        else:
            with open(args.records, "w", encoding="utf-8") as fh:
                fh.write(ndjson)
    _write_output(args, report.to_json() + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mcgc",
        description=(
            "Construct, verify, and apply window-distinguishable color "
            "sequences and 2D color maps."
        ),
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"%(prog)s {__version__} (formats v{FORMAT_VERSION})",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add_output(p):
        p.add_argument("-o", "--output", help="write data here instead of stdout")

    p = sub.add_parser("construct", help="build a distinguishable sequence")
    p.add_argument("--m", type=int, required=True, choices=(1, 2, 3))
    p.add_argument("--k", type=int, required=True, help="palette size")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--cyclic", action="store_true", help="cyclic output (default)")
    group.add_argument("--linear", action="store_true", help="cut the cycle open")
    p.add_argument("--cut", type=int, help="cut position for --linear (default: last)")
    add_output(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check distinguishability of sequences in a file")
    p.add_argument("--m", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--cyclic", action="store_true", help="force cyclic mode")
    group.add_argument("--linear", action="store_true", help="force linear mode")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("file", help="sequence file, or - for stdin")
    add_output(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cut", help="linearize a cyclic sequence")
    p.add_argument("--t", type=int, required=True, help="cut position")
    p.add_argument("--m", type=int, required=True, help="window size")
    p.add_argument("file", help="sequence file, or - for stdin")
    add_output(p)
    p.set_defaults(func=cmd_cut)

    p = sub.add_parser("search-max", help="exhaustive longest-sequence search")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cap", type=int, required=True, help="length cap")
    add_output(p)
    p.set_defaults(func=cmd_search_max)

    p = sub.add_parser("cross", help="interleave two cyclic sequences")
    p.add_argument("--s", required=True, help="first sequence file")
    p.add_argument("--t", required=True, help="second sequence file")
    p.add_argument("--m1", type=int, required=True, help="first window size")
    p.add_argument("--m2", type=int, required=True, help="second window size")
    add_output(p)
    p.set_defaults(func=cmd_cross)

    p = sub.add_parser("compose", help="build a sequence for any window size")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-colors", type=int, default=48)
    add_output(p)
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("bounds", help="length bound table (CSV)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k-range", required=True, help="A..B, comma list, or single k")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    add_output(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("kmin", help="minimal colors table (CSV)")
    p.add_argument("--m", required=True, help="window size(s), comma separated")
    p.add_argument("--sizes", required=True, help="grid sizes, comma separated")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    add_output(p)
    p.set_defaults(func=cmd_kmin)

    p = sub.add_parser("gain", help="coding gain table (CSV)")
    p.add_argument("--sizes", required=True, help="grid sizes, comma separated")
    p.add_argument(
        "--blocks",
        required=True,
        help="block shapes: '3' means 3x3, or 'MxN', comma separated",
    )
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    add_output(p)
    p.set_defaults(func=cmd_gain)

    p = sub.add_parser("grid", help="product color grid from two sequences")
    p.add_argument("--s", required=True, help="x-axis sequence file")
    p.add_argument("--t", required=True, help="y-axis sequence file")
    add_output(p)
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("codebook", help="build the multiset-to-position table")
    p.add_argument("--grid", required=True, help="grid file")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    add_output(p)
    p.set_defaults(func=cmd_codebook)

    p = sub.add_parser("decode", help="look up a reported multiset")
    p.add_argument("--codebook", required=True, help="codebook file")
    p.add_argument("--colors", required=True, help="reported colors, comma separated")
    add_output(p)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="run the tracking simulator")
    p.add_argument("--cells", type=int, help="cells per side C")
    p.add_argument("--m", type=int, help="detection block side")
    p.add_argument("--slots", type=int, help="number of time slots")
    p.add_argument("--bits", type=int, help="per-channel bits per slot")
    p.add_argument("--seed", type=int, help="PRNG seed (required)")
    p.add_argument("--traj", default="uniform", help="uniform | walk | walk:P")
    p.add_argument("--config", help="key=value config file instead of flags")
    p.add_argument("--records", help="write per-slot records (NDJSON) here")
    add_output(p)
    p.set_defaults(func=cmd_simulate)

    return parser


def dispatch(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage or version
        code = exc.code
        return code if isinstance(code, int) else 0
    try:
        return args.func(args)
    except McgcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
