"""Command-line interface.

Exit codes: 0 for success (for yes/no commands, a yes), 1 for a valid no
answer (`iso`, `domain --sc-check`), 2 for usage errors, 3 for solver and
input errors (caps, overflow, malformed files).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .approx import approx_auto, approx_candidates, approx_candidates_minus
from .domains import (
    MODEL_ALIASES,
    Axis,
    domain_as_election,
    is_single_crossing_order,
    maximal_single_peaked_domain,
    sample_election,
)
from .embedding import embed_2d
from .errors import ElectdistError, ParseError
from .exact import (
    DEFAULT_KEMENY_MAX_CANDIDATES,
    DEFAULT_MAX_CANDIDATES,
    DEFAULT_MAX_VOTERS,
    exact_distance_brute_candidates,
    kemeny_score_brute,
)
from .fpt import DEFAULT_MAX_SEARCH_BUDGET, distance_within_budget
from .io_formats import load_election, save_election, write_native
from .isomorphism import exact_discrete_distance, find_isomorphism
from .metrics import MetricKind
from .model import DistanceResult
from .pairwise import DistanceMatrix, pairwise_matrix


class _UsageError(Exception):
    pass


def _one_based(mapping) -> list[int]:
    return [x + 1 for x in mapping]


def _matching_line(label: str, mapping) -> str:
    pairs = " ".join(f"{i + 1}->{x + 1}" for i, x in enumerate(mapping))
    return f"{label}: {pairs}"


def _print_witness(result: DistanceResult) -> None:
    print(_matching_line("candidates", result.candidate_matching.mapping))
    print(_matching_line("voters", result.voter_matching.mapping))


def _result_json(result: DistanceResult, metric: MetricKind) -> dict:
    return {
        "value": result.value,
        "metric": metric.value,
        "exact": result.exact,
        "guarantee": str(result.guarantee) if result.guarantee is not None else None,
        "solver": result.solver,
        "candidate_matching": _one_based(result.candidate_matching.mapping),
        "voter_matching": _one_based(result.voter_matching.mapping),
    }


def _cmd_dist(args) -> int:
    first = load_election(args.first)
    second = load_election(args.second)
    metric = MetricKind.from_name(args.metric)
    if metric is MetricKind.DISCRETE:
        if args.algo in ("fpt", "approx", "approx-c-minus"):
            raise _UsageError(
                f"--algo {args.algo} is not available for the discrete metric; "
                "it is solved exactly in polynomial time"
            )
        result = exact_discrete_distance(first, second)
    elif args.algo == "exact":
        result = exact_distance_brute_candidates(
            first, second, metric, max_candidates=args.max_candidates
        )
    elif args.algo == "fpt":
        if args.k is None:
            raise _UsageError("--algo fpt requires --k")
        found = distance_within_budget(
            first,
            second,
            metric,
            args.k,
            max_search_budget=args.max_search_budget,
            max_voters=args.max_voters,
        )
        if found is None:
            if args.as_json:
                print(json.dumps({"value": None, "metric": metric.value, "budget": args.k}))
            else:
                print("unknown")
            return 0
        result = found
    elif args.algo == "approx":
        result = approx_candidates(first, second, metric)
    elif args.algo == "approx-c-minus":
        result = approx_candidates_minus(
            first, second, metric, args.c, max_improvement=args.c
        )
    else:
        result = approx_auto(first, second, metric)

    if args.as_json:
        print(json.dumps(_result_json(result, metric)))
    else:
        print(result.value)
        if not result.exact and result.guarantee is not None:
            print(f"guarantee {result.guarantee}")
        if args.witness:
            _print_witness(result)
    return 0


def _cmd_iso(args) -> int:
    first = load_election(args.first)
    second = load_election(args.second)
    witness = find_isomorphism(first, second)
    if args.as_json:
        payload: dict = {"isomorphic": witness is not None}
        if witness is not None:
            payload["candidate_matching"] = _one_based(witness[0].mapping)
            payload["voter_matching"] = _one_based(witness[1].mapping)
        print(json.dumps(payload))
    else:
        if witness is None:
            print("not isomorphic")
        else:
            print("isomorphic")
            if args.witness:
                print(_matching_line("candidates", witness[0].mapping))
                print(_matching_line("voters", witness[1].mapping))
    return 0 if witness is not None else 1


def _cmd_kemeny(args) -> int:
    election = load_election(args.election)
    score, consensus = kemeny_score_brute(
        election, max_candidates=args.max_candidates
    )
    if args.as_json:
        print(json.dumps({"score": score, "consensus": _one_based(consensus.ranking)}))
    else:
        print(score)
        print(" ".join(str(c + 1) for c in consensus.ranking))
    return 0


def _expand_paths(raw_paths: list[str]) -> list[Path]:
    out: list[Path] = []
    for raw in raw_paths:
        path = Path(raw)
        if path.is_dir():
            found = sorted(
                p for p in path.iterdir()
                if p.is_file() and p.suffix in (".elec", ".soc")
            )
            if not found:
                raise _UsageError(f"directory {path} contains no .elec or .soc files")
            out.extend(found)
        else:
            out.append(path)
    return out


def _cmd_matrix(args) -> int:
    paths = _expand_paths(args.paths)
    elections = [load_election(p) for p in paths]
    labels = [p.stem for p in paths]
    matrix = pairwise_matrix(
        elections,
        MetricKind.from_name(args.metric),
        args.strategy,
        labels=labels,
        max_candidates=args.max_candidates,
        max_voters=args.max_voters,
        processes=args.processes,
    )
    if args.as_json:
        print(json.dumps(matrix.to_json_dict()))
    else:
        width = max(
            [len(s) for s in matrix.labels]
            + [len(str(v)) for row in matrix.values for v in row]
        )
        header = " ".join(s.rjust(width) for s in matrix.labels)
        print(" " * width + " " + header)
        for label, row in zip(matrix.labels, matrix.values):
            cells = " ".join(str(v).rjust(width) for v in row)
            print(label.rjust(width) + " " + cells)
    return 0


def _cmd_embed(args) -> int:
    text = Path(args.matrix_file).read_text(encoding="utf-8")
    try:
        payload = json.loads(text)
    except ValueError as exc:
        raise ParseError(f"matrix file is not valid JSON: {exc}") from None
    matrix = DistanceMatrix.from_json_dict(payload)
    embedding = embed_2d(matrix, seed=args.seed, iterations=args.iterations)
    for label, (x, y) in zip(matrix.labels, embedding.points):
        print(f"{label},{x:.9g},{y:.9g}")
    return 0


def _parse_axis(text: str) -> Axis:
    entries = []
    for token in text.split(","):
        token = token.strip()
        try:
            entries.append(int(token) - 1)
        except ValueError:
            raise _UsageError(f"axis entry {token!r} is not an integer") from None
    return Axis(tuple(entries))


def _cmd_generate(args) -> int:
    model = args.model.strip().lower()
    if model not in MODEL_ALIASES:
        raise _UsageError(f"unknown model {args.model!r}")
    canonical = MODEL_ALIASES[model]
    axis = _parse_axis(args.axis) if args.axis else None
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for idx in range(args.count):
        seed = args.seed + idx
        election = sample_election(
            canonical, args.candidates, args.voters, seed, axis=axis
        )
        name = f"{canonical}_{args.candidates}x{args.voters}_seed{seed}.elec"
        target = out_dir / name
        save_election(target, election)
        print(target)
    return 0


def _cmd_domain(args) -> int:
    if args.sp_axis:
        axis = _parse_axis(args.sp_axis)
        election = domain_as_election(maximal_single_peaked_domain(axis))
        sys.stdout.write(write_native(election))
        return 0
    election = load_election(args.sc_check)
    if is_single_crossing_order(election):
        print("single-crossing")
        return 0
    print("not single-crossing")
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="electdist",
        description="Isomorphism and isomorphic distances between ordinal elections.",
    )
    parser.add_argument(
        "--version", action="version", version=f"electdist {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="distance between two elections")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--metric", required=True, choices=["disc", "swap", "spearman"])
    p.add_argument(
        "--algo",
        default="auto",
        choices=["exact", "fpt", "approx", "approx-c-minus", "auto"],
    )
    p.add_argument("--k", type=int, default=None, help="budget for --algo fpt")
    p.add_argument(
        "--c", type=int, default=1, help="ratio improvement for --algo approx-c-minus"
    )
    p.add_argument("--witness", action="store_true", help="print the matchings")
    p.add_argument("--json", dest="as_json", action="store_true")
    p.add_argument("--max-candidates", type=int, default=DEFAULT_MAX_CANDIDATES)
    p.add_argument("--max-voters", type=int, default=DEFAULT_MAX_VOTERS)
    p.add_argument("--max-search-budget", type=int, default=DEFAULT_MAX_SEARCH_BUDGET)
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("iso", help="isomorphism test (exit 0 yes, 1 no)")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--witness", action="store_true")
    p.add_argument("--json", dest="as_json", action="store_true")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("kemeny", help="Kemeny score and consensus of an election")
    p.add_argument("election")
    p.add_argument("--json", dest="as_json", action="store_true")
    p.add_argument(
        "--max-candidates", type=int, default=DEFAULT_KEMENY_MAX_CANDIDATES
    )
    p.set_defaults(func=_cmd_kemeny)

    p = sub.add_parser("matrix", help="pairwise distance matrix over election files")
    p.add_argument("paths", nargs="+", help="election files and/or directories")
    p.add_argument("--metric", required=True, choices=["disc", "swap", "spearman"])
    p.add_argument("--strategy", default="auto", choices=["exact", "approx", "auto"])
    p.add_argument("--json", dest="as_json", action="store_true")
    p.add_argument("--processes", type=int, default=1)
    p.add_argument("--max-candidates", type=int, default=DEFAULT_MAX_CANDIDATES)
    p.add_argument("--max-voters", type=int, default=DEFAULT_MAX_VOTERS)
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser("embed", help="2D embedding of a matrix JSON file (CSV out)")
    p.add_argument("matrix_file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iterations", type=int, default=500)
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("generate", help="sample elections to native files")
    p.add_argument(
        "--model", required=True, help="impartial_culture|identity|single_peaked (or ic|id|sp)"
    )
    p.add_argument("-m", "--candidates", type=int, required=True)
    p.add_argument("-n", "--voters", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--out", default=".")
    p.add_argument("--axis", default=None, help="1-based axis for single_peaked")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("domain", help="structured-domain helpers")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--sp-axis", help="print the maximal single-peaked domain of this axis"
    )
    group.add_argument(
        "--sc-check", metavar="FILE", help="test a vote sequence for single-crossing"
    )
    p.set_defaults(func=_cmd_domain)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ElectdistError, OverflowError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    sys.exit(main(sys.argv[1:]))
