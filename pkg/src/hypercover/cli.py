"""Command line interface.

One JSON object per command goes to stdout (the ``hitting`` experiment
emits JSON lines: one object per trial batch, then a summary).  Every
top-level object carries ``"v": 1``.  Errors are JSON objects on stderr.

Exit codes: 0 success, 1 honest failure (no cover found within budget,
verification failed, property violated), 2 bad usage or malformed input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import List, Optional

from .affine import Hyperplane, parse_rational
from .catalog import ENUM_MAX_DIM, PatternCatalog
from .constructions import (
    cover_full_cube,
    cover_minus_four,
    cover_minus_one,
    cover_minus_three,
    cover_minus_two,
    hamming_sphere_cover,
    layer_cover,
    reduce_fixed_k,
    verify_layer_cover,
)
from .cube import PointSet, check_dim, parse_point, weight
from .experiments import (
    af_missing_property_test,
    g_axis_aligned,
    random_hitting_experiment,
    wagner_check,
)
from .solver import (
    CERTIFIED_MAX_DIM,
    DEFAULT_NODE_LIMIT,
    ec_n_k_detail,
    find_cover_within_budget,
    min_exact_cover,
    verify_exact_cover,
)


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage errors as JSON on stderr with exit 2."""

    def error(self, message):
        print(json.dumps({"v": 1, "error": message}), file=sys.stderr)
        raise SystemExit(2)


def _err(message: str) -> None:
    print(json.dumps({"v": 1, "error": message}), file=sys.stderr)


def _coeff_str(c: str) -> str:
    f = parse_rational(c)
    return str(f.numerator) if f.denominator == 1 else c


def _hyperplane_line(hj: dict) -> str:
    terms = []
    for i, c in enumerate(hj["coeffs"]):
        f = parse_rational(c)
        if f == 0:
            continue
        s = _coeff_str(c)
        terms.append(f"{s}*x{i + 1}" if abs(f) != 1 else ("-" if f < 0 else "") + f"x{i + 1}")
    lhs = " + ".join(terms).replace("+ -", "- ")
    return f"{lhs} = {_coeff_str(hj['offset'])}"


def _print_table(obj: dict) -> None:
    for key, value in obj.items():
        if key == "v":
            continue
        if key == "hyperplanes":
            print(f"hyperplanes ({len(value)}):")
            for hj in value:
                print("  " + _hyperplane_line(hj))
        elif key in ("S", "witness") and isinstance(value, list):
            print(f"{key} = {{{', '.join(value)}}}")
        elif key == "patterns":
            print(f"patterns ({len(value)}):")
            for pat in value:
                print("  {" + ", ".join(pat) + "}")
        elif key == "orbits":
            print(f"orbits ({len(value)}):")
            for row in value:
                print(f"  size={row['size']} orbit={row['orbit']} S={{{', '.join(row['S'])}}}")
        elif isinstance(value, dict):
            print(f"{key}: {json.dumps(value)}")
        else:
            print(f"{key} = {value}")


def _emit(obj: dict, fmt: str) -> None:
    obj = {"v": 1, **obj}
    if fmt == "table":
        _print_table(obj)
    else:
        print(json.dumps(obj, indent=2))


def _read_avoid(value: str, n: int) -> PointSet:
    """Parse an avoided-set argument: comma/whitespace separated binary
    strings, or @FILE to read the same format from a file."""
    if value.startswith("@"):
        with open(value[1:], "r", encoding="ascii") as fh:
            value = fh.read()
    tokens = [t for t in re.split(r"[,\s]+", value.strip()) if t]
    return PointSet.from_strings(n, tokens)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_solve(args) -> int:
    n = check_dim(args.n)
    S = _read_avoid(args.avoid, n)
    if args.budget is None and n <= CERTIFIED_MAX_DIM:
        res = min_exact_cover(S)
    else:
        budget = args.budget if args.budget is not None else n
        res = find_cover_within_budget(
            S, budget, node_limit=args.node_limit, seed=args.seed
        )
        if res is None:
            _err(f"no exact cover of the complement found within budget {budget}")
            return 1
    _emit(res.to_json(), args.format)
    return 0


_METHOD_SIZES = {"minus1": 1, "minus2": 2, "minus3": 3, "minus4": 4}


def _cmd_construct(args) -> int:
    n = check_dim(args.n)
    method = args.method
    if method == "layer":
        if args.i is None:
            raise ValueError("--i (layer index) is required for the layer method")
        i = args.i
        if not 0 <= i <= n:
            raise ValueError("layer index out of range")
        b = parse_point(args.b, n) if args.b else parse_point("1" * i + "0" * (n - i), n)
        if weight(b) != i:
            raise ValueError("base point must lie on the chosen layer")
        cert = layer_cover(n, i, b)
        _emit({**cert.to_json(), "method": method}, args.format)
        return 0
    S = _read_avoid(args.avoid, n)
    if method in _METHOD_SIZES and len(S) != _METHOD_SIZES[method]:
        raise ValueError(
            f"method {method} needs exactly {_METHOD_SIZES[method]} avoided points, got {len(S)}"
        )
    if method == "full":
        if len(S) != 0:
            raise ValueError("method full takes no avoided points")
        cert = cover_full_cube(n)
    elif method == "minus1":
        cert = cover_minus_one(S)
    elif method == "minus2":
        cert = cover_minus_two(S)
    elif method == "minus3":
        cert = cover_minus_three(S)
    elif method == "minus4":
        cert = cover_minus_four(S)
    elif method == "fixedk":
        cert = reduce_fixed_k(S)
    elif method == "hamming":
        B = S.complement()
        if len(B) == 0:
            raise ValueError("avoided set is the whole cube; nothing to cover")
        cert = hamming_sphere_cover(B)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown method {method!r}")
    _emit({**cert.to_json(), "method": method}, args.format)
    return 0


def _cmd_verify(args) -> int:
    if args.cover == "-":
        text = sys.stdin.read()
    else:
        with open(args.cover, "r", encoding="utf-8") as fh:
            text = fh.read()
    obj = json.loads(text)
    n = check_dim(obj["n"])
    hs = [Hyperplane.from_json(n, h) for h in obj["hyperplanes"]]
    if "layer" in obj:
        b = parse_point(obj["base_point"], n)
        cert = verify_layer_cover(hs, n, obj["layer"], b)
        out = cert.to_json()
        if not cert.verified:
            out["covered_on_layer"] = cert.covered_on_layer.to_strings()
    else:
        S = PointSet.from_strings(n, obj["S"])
        cert = verify_exact_cover(hs, S)
        out = cert.to_json()
        if not cert.verified:
            out["covered_but_avoided"] = cert.covered_but_avoided.to_strings()
            out["uncovered"] = cert.uncovered.to_strings()
    _emit(out, args.format)
    return 0 if cert.verified else 1


def _cmd_patterns(args) -> int:
    n = check_dim(args.n)
    if n > ENUM_MAX_DIM:
        raise ValueError(f"full pattern enumeration is limited to n <= {ENUM_MAX_DIM}")
    catalog = PatternCatalog.get(n)
    out = {"n": n, "count": len(catalog.masks)}
    if args.out:
        catalog.save(args.out)
        out["out"] = args.out
    if not args.count_only:
        out["patterns"] = [PointSet(n, m).to_strings() for m in catalog.masks]
    _emit(out, args.format)
    return 0


def _cmd_experiment(args) -> int:
    kind = args.kind
    if kind == "hitting":
        if args.threshold is None or args.trials is None:
            raise ValueError("hitting needs --threshold and --trials")
        batch_size = args.batch_size or args.trials
        done = 0
        total_succ = 0
        witness = None
        batch_no = 0
        while done < args.trials:
            take = min(batch_size, args.trials - done)
            rep = random_hitting_experiment(args.n, args.threshold, take, args.seed + batch_no)
            total_succ += rep.successes
            if witness is None:
                witness = rep.witness
            print(json.dumps({"v": 1, "kind": "batch", "batch": batch_no, **rep.to_json()}))
            done += take
            batch_no += 1
        rate = Fraction(total_succ, args.trials) if args.trials else Fraction(0)
        print(
            json.dumps(
                {
                    "v": 1,
                    "kind": "summary",
                    "n": args.n,
                    "threshold": args.threshold,
                    "trials": args.trials,
                    "successes": total_succ,
                    "success_rate": f"{rate.numerator}/{rate.denominator}",
                    "witness": witness,
                }
            )
        )
        return 0
    if kind == "afmiss":
        if args.m is None or args.samples is None:
            raise ValueError("afmiss needs --m and --samples")
        rep = af_missing_property_test(args.n, args.m, args.samples, args.seed)
        _emit(rep.to_json(), args.format)
        return 0 if rep.passed else 1
    if kind == "gsubcube":
        if args.d is None:
            raise ValueError("gsubcube needs --d")
        res = g_axis_aligned(args.n, args.d)
        _emit(res.to_json(), args.format)
        return 0
    if kind == "wagner":
        rep = wagner_check(node_limit=args.node_limit)
        _emit(rep.to_json(), args.format)
        return 0 if rep.n6_result is not None else 1
    raise ValueError(f"unknown experiment {kind!r}")  # pragma: no cover


def _cmd_eck(args) -> int:
    rows = ec_n_k_detail(args.n, args.k)
    ec = max(row["size"] for row in rows) if rows else 0
    _emit({"n": args.n, "k": args.k, "ec": ec, "orbits": rows}, args.format)
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="hypercover", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "table"), default="json")
        p.add_argument(
            "--threads",
            type=int,
            default=1,
            help="accepted for interface compatibility; computations are single-threaded",
        )

    p = sub.add_parser("solve", help="minimum exact cover of the complement of --avoid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--avoid", default="", help="binary points, comma/space separated, or @FILE")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("construct", help="build a cover with a named construction")
    p.add_argument(
        "method",
        choices=("full", "minus1", "minus2", "minus3", "minus4", "layer", "fixedk", "hamming"),
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--avoid", default="", help="binary points, comma/space separated, or @FILE")
    p.add_argument("--i", type=int, default=None, help="layer index (layer method)")
    p.add_argument("--b", default=None, help="base point on the layer (layer method)")
    common(p)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="check a cover JSON (file or - for stdin)")
    p.add_argument("--cover", default="-")
    common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("patterns", help="enumerate hyperplane intersection patterns")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--out", default=None, help="also write the catalog file here")
    common(p)
    p.set_defaults(func=_cmd_patterns)

    p = sub.add_parser("experiment", help="randomized and exhaustive experiments")
    p.add_argument("kind", choices=("hitting", "afmiss", "gsubcube", "wagner"))
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--threshold", type=int, default=None)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--batch-size", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    common(p)
    p.set_defaults(func=_cmd_experiment)

    p = sub.add_parser("eck", help="worst-case exact cover size over all k-point avoided sets")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_eck)

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors by exiting
        return int(exc.code or 0)
    try:
        return args.func(args)
    except RuntimeError as exc:
        _err(str(exc))
        return 1
    except (ValueError, KeyError, TypeError, OSError, json.JSONDecodeError) as exc:
        _err(str(exc) or repr(exc))
        return 2


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
