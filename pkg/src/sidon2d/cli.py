"""Command line interface.

Data flows through stdout as JSON so subcommands compose in pipelines;
diagnostics go to stderr.  Exit codes: 0 success, 1 usage or input
error, 2 verified property violation (the witness is printed as JSON).
"""

from __future__ import annotations

import argparse
import json
import sys

from .ddc import (
    construct_golomb,
    construct_welch,
    fold_sidon_to_ddc,
    is_ddc,
    is_doubly_periodic_ddc,
    max_ddc_dots,
    pattern_from_json,
    pattern_to_json,
    render_ascii,
    unfold_to_sidon,
)
from .folding import folding_directions
from .groups import (
    GroupSpec,
    sequence_from_json,
    sequence_to_json,
    verify_sidon,
    verify_weak_sidon,
)
from .lattices import Lattice, Shape, Tiling, fundamental_shape
from .sidon import (
    check_optimality,
    construct_bose,
    construct_power_pairs,
    construct_ruzsa,
    construct_singer,
    max_sidon_size,
)

SEQUENCE_FAMILIES = ("bose", "singer", "ruzsa", "power-pairs")
PATTERN_FAMILIES = ("welch", "golomb")


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse {what} {text!r}: expected comma-separated integers")


def _parse_pair(text: str, what: str) -> tuple[int, int]:
    parts = _parse_ints(text, what)
    if len(parts) != 2:
        raise ValueError(f"{what} needs exactly two components, got {text!r}")
    return parts


def _parse_lattice(text: str) -> Lattice:
    rows = text.split(";")
    if len(rows) != 2:
        raise ValueError(f"cannot parse lattice {text!r}: expected 'v11,v12;v21,v22'")
    return Lattice((_parse_pair(rows[0], "lattice row"), _parse_pair(rows[1], "lattice row")))


def _parse_shape(text: str | None, lattice: Lattice) -> Shape:
    if text is None:
        return fundamental_shape(lattice)
    if "x" in text and not text.lstrip().startswith("["):
        w, _, h = text.partition("x")
        try:
            width, height = int(w), int(h)
        except ValueError:
            raise ValueError(f"cannot parse shape {text!r}: expected 'WxH' or a JSON point list")
        return Shape.rectangle(width, height)
    return Shape.from_json(json.loads(text))


def _read_json(path: str | None) -> dict:
    if path is None or path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON input: {exc}")
    if not isinstance(data, dict):
        raise ValueError("JSON input must be an object")
    return data


def _emit(obj: dict) -> None:
    print(json.dumps(obj))


def _element_json(element: tuple[int, ...], rank: int):
    return element[0] if rank == 1 else list(element)


# -- subcommands -------------------------------------------------------------


def _cmd_construct(args: argparse.Namespace) -> int:
    family = args.family
    if family in ("welch", "ruzsa"):
        if args.p is None:
            raise ValueError(f"--family {family} requires --p")
        size_arg = args.p
    else:
        if args.q is None:
            raise ValueError(f"--family {family} requires --q")
        size_arg = args.q
    if args.beta is not None and family != "golomb":
        raise ValueError("--beta only applies to --family golomb")
    if args.alpha is not None and family in ("bose", "singer"):
        raise ValueError(f"--family {family} does not take --alpha")

    if family in PATTERN_FAMILIES:
        if args.report:
            raise ValueError("--report only applies to sequence families")
        if family == "welch":
            pattern = construct_welch(size_arg, args.alpha)
        else:
            pattern = construct_golomb(size_arg, args.alpha, args.beta)
        if args.format == "ascii":
            print(render_ascii(pattern))
        else:
            _emit(pattern_to_json(pattern))
        return 0

    if args.format == "ascii":
        raise ValueError("only pattern families render as ascii")
    if family == "bose":
        seq = construct_bose(size_arg)
    elif family == "singer":
        seq = construct_singer(size_arg)
    elif family == "ruzsa":
        seq = construct_ruzsa(size_arg, args.alpha)
    else:
        seq = construct_power_pairs(size_arg, args.alpha)
    if args.report:
        _emit({"sequence": sequence_to_json(seq), "optimality": check_optimality(seq).to_json()})
    else:
        _emit(sequence_to_json(seq))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    data = _read_json(args.input)
    if args.kind in ("sidon", "weak-sidon"):
        seq = sequence_from_json(data)
        rank = seq.group.rank
        if args.kind == "sidon":
            collision = verify_sidon(seq)
            if collision is None:
                _emit({"ok": True})
                return 0
            _emit(
                {
                    "ok": False,
                    "kind": "difference-collision",
                    "difference": _element_json(collision.difference, rank),
                    "pair_a": [_element_json(e, rank) for e in collision.pair_a],
                    "pair_b": [_element_json(e, rank) for e in collision.pair_b],
                }
            )
            return 2
        collision = verify_weak_sidon(seq)
        if collision is None:
            _emit({"ok": True})
            return 0
        _emit(
            {
                "ok": False,
                "kind": "sum-collision",
                "total": _element_json(collision.total, rank),
                "pair_a": [_element_json(e, rank) for e in collision.pair_a],
                "pair_b": [_element_json(e, rank) for e in collision.pair_b],
            }
        )
        return 2

    if args.kind == "ddc":
        if "dots" not in data:
            raise ValueError("ddc JSON needs a 'dots' key")
        collision = is_ddc(tuple(tuple(int(c) for c in d) for d in data["dots"]))
    else:
        collision = is_doubly_periodic_ddc(pattern_from_json(data))
    if collision is None:
        _emit({"ok": True})
        return 0
    _emit(
        {
            "ok": False,
            "kind": "segment-collision",
            "difference": list(collision.difference),
            "pair_a": [list(p) for p in collision.pair_a],
            "pair_b": [list(p) for p in collision.pair_b],
        }
    )
    return 2


def _cmd_fold(args: argparse.Namespace) -> int:
    seq = sequence_from_json(_read_json(args.input))
    lattice = _parse_lattice(args.lattice)
    shape = _parse_shape(args.shape, lattice)
    direction = _parse_pair(args.direction, "direction")
    pattern = fold_sidon_to_ddc(seq, lattice, shape, direction)
    _emit(pattern_to_json(pattern))
    return 0


def _cmd_unfold(args: argparse.Namespace) -> int:
    pattern = pattern_from_json(_read_json(args.input))
    direction = _parse_pair(args.direction, "direction")
    anchor = None if args.anchor == "lower-left" else _parse_pair(args.anchor, "anchor")
    seq = unfold_to_sidon(pattern, direction, anchor)
    _emit(sequence_to_json(seq))
    return 0


def _cmd_directions(args: argparse.Namespace) -> int:
    if args.lattice is not None:
        lattice = _parse_lattice(args.lattice)
        shape = _parse_shape(args.shape, lattice)
    else:
        pattern = pattern_from_json(_read_json(args.input))
        lattice, shape = pattern.lattice, pattern.shape
    dirs = folding_directions(Tiling(lattice, shape))
    _emit({"count": len(dirs), "directions": [list(d) for d in dirs]})
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    if args.max_sidon is not None:
        group = GroupSpec(_parse_ints(args.max_sidon, "group moduli"))
        size, witness = max_sidon_size(group)
        _emit(
            {
                "max": size,
                "witness": [_element_json(e, group.rank) for e in witness],
            }
        )
        return 0
    if args.lattice is None:
        raise ValueError("--max-ddc requires --lattice")
    lattice = _parse_lattice(args.lattice)
    shape = _parse_shape(args.shape, lattice)
    size, witness = max_ddc_dots(lattice, shape)
    _emit({"max": size, "witness": [list(d) for d in witness]})
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    pattern = pattern_from_json(_read_json(args.input))
    print(render_ascii(pattern))
    return 0


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sidon2d",
        description="Construct, verify, and interconvert Sidon sequences and"
        " doubly periodic distinct difference configurations.",
    )
    parser.add_argument("--seed", type=int, help="reserved; all operations are deterministic")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a named construction")
    p.add_argument("--family", required=True, choices=SEQUENCE_FAMILIES + PATTERN_FAMILIES)
    p.add_argument("--p", type=int, help="prime parameter (welch, ruzsa)")
    p.add_argument("--q", type=int, help="prime power parameter (golomb, bose, singer, power-pairs)")
    p.add_argument("--alpha", type=int, help="primitive element, as an integer code")
    p.add_argument("--beta", type=int, help="second primitive element (golomb)")
    p.add_argument("--report", action="store_true", help="wrap the sequence with an optimality report")
    p.add_argument("--format", choices=("json", "ascii"), default="json")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="check a property of a JSON input")
    p.add_argument("--kind", required=True, choices=("sidon", "weak-sidon", "ddc", "periodic-ddc"))
    p.add_argument("--input", help="input file (default: stdin)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("fold", help="fold a sequence onto a tiled shape")
    p.add_argument("--lattice", required=True, help="basis rows, e.g. '6,0;0,7'")
    p.add_argument("--shape", help="'WxH' or JSON point list (default: fundamental)")
    p.add_argument("--direction", required=True, help="step vector, e.g. '1,1'")
    p.add_argument("--input", help="sequence JSON file (default: stdin)")
    p.set_defaults(func=_cmd_fold)

    p = sub.add_parser("unfold", help="unfold a pattern into a sequence")
    p.add_argument("--direction", required=True, help="step vector, e.g. '1,1'")
    p.add_argument("--anchor", default="lower-left", help="'lower-left' or 'x,y' (a dot)")
    p.add_argument("--input", help="pattern JSON file (default: stdin)")
    p.set_defaults(func=_cmd_unfold)

    p = sub.add_parser("directions", help="list folding directions of a tiling")
    p.add_argument("--lattice", help="basis rows; omit to read a pattern JSON")
    p.add_argument("--shape", help="'WxH' or JSON point list (default: fundamental)")
    p.add_argument("--input", help="pattern JSON file (default: stdin)")
    p.set_defaults(func=_cmd_directions)

    p = sub.add_parser("search", help="run an exhaustive oracle")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--max-sidon", help="group moduli, e.g. '7' or '6,7'")
    group.add_argument("--max-ddc", action="store_true")
    p.add_argument("--lattice", help="basis rows (with --max-ddc)")
    p.add_argument("--shape", help="'WxH' or JSON point list (default: fundamental)")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("render", help="print a pattern as an ascii grid")
    p.add_argument("--input", help="pattern JSON file (default: stdin)")
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
