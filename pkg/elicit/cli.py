"""
Command line for the elicitation toolkit

Usage:
    python -m elicit verify all --max-m 5
    python -m elicit verify parity-pair --m 4
    python -m elicit span --alpha 1,0,0,0 --t 3
    python -m elicit simplex --m 4 --grid 6
    python -m elicit winners --profile profile.json --alpha borda --t 2
    python -m elicit cover --m 6 --t 3 --tstar 2
    python -m elicit bound-curve --m 3 --tstar 2 --grid 6

Every command writes line-oriented RunReport records (or CSV for the
plot-data commands) to stdout or --out. Exit status is 0 when every report
passes, 1 when a verification fails or an unexpected error occurs, and 2 for
rejected arguments.
"""

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Union

import psutil

from elicit.config import REPORT_FORMATS, VERIFICATION_ALIASES, VERIFICATION_ORDER, settings
from elicit.constructions.fibonacci import (
    fibonacci_consistent_set,
    fibonacci_instance,
    fibonacci_success_bound,
)
from elicit.constructions.parity import parity_pair
from elicit.constructions.query_complexity import bound_curve, query_complexity_instance, uniform_grid
from elicit.constructions.stv_family import stv_family, stv_parameters
from elicit.constructions.winner_family import winner_family
from elicit.covering.designs import (
    cover_lower_bound,
    cover_rows,
    exact_cover,
    greedy_cover,
    is_cover,
    rational_cover_bound,
    tiny_parameters,
)
from elicit.exceptions import ElicitError, InvalidArgumentError
from elicit.models.reports import Outcome, RunReport
from elicit.profiles.core import CandidateSet, Profile
from elicit.profiles.io import load_profile, profile_to_document
from elicit.queries.session import QuerySession, SampledSession
from elicit.queries.verifier import indistinguishable
from elicit.rules.condorcet import condorcet_via_queries, condorcet_winner
from elicit.rules.presets import plurality_score, resolve_vector
from elicit.rules.stv import stv_winners
from elicit.scoring.basis import minimal_query_size, span_membership
from elicit.scoring.scores import score_via_queries, scores, winner_via_queries, winners
from elicit.scoring.simplex import simplex_grid
from elicit.scoring.vectors import ScoringVector
from elicit.utils.helpers import format_rational
from elicit.utils.logger import RunLogger, get_logger, setup_logging
from elicit.verifications.verification_manager import VerificationManager

logger = get_logger(__name__)

# argparse attributes that are not command parameters
_GLOBAL_OPTIONS = {"command", "handler", "json", "timings", "out", "log_level"}


class CsvTable(NamedTuple):
    header: List[str]
    rows: List[List[str]]


Emission = Union[List[RunReport], CsvTable]


# ============================================================================
# ARGUMENT HELPERS
# ============================================================================

def _parameters(args: argparse.Namespace) -> Dict[str, Any]:
    return {k: v for k, v in sorted(vars(args).items()) if k not in _GLOBAL_OPTIONS and v is not None}


def _value_report(args: argparse.Namespace, value: Any, query_count: Optional[int] = None) -> List[RunReport]:
    return [
        RunReport(
            command=args.command,
            parameters=_parameters(args),
            outcome=Outcome.VALUE,
            value=value,
            query_count=query_count,
        )
    ]


def _require_arg(value: Any, flag: str, command: str):
    if value is None:
        raise InvalidArgumentError(f"{command} needs {flag}")


def _candidates(args: argparse.Namespace) -> CandidateSet:
    _require_arg(args.m, "--m", args.command)
    return CandidateSet.letters(args.m)


def _alpha(args: argparse.Namespace, m: Optional[int] = None, default: Optional[str] = None) -> ScoringVector:
    """--alpha as a preset name or rational list; presets need --m (or the profile's m)"""
    text = args.alpha or default
    _require_arg(text, "--alpha", args.command)
    size = m if m is not None else args.m
    if size is None:
        return ScoringVector.parse(text)
    return resolve_vector(text, size)


def _profile(args: argparse.Namespace) -> Profile:
    _require_arg(args.profile, "--profile", args.command)
    return load_profile(args.profile)


def _labels(profile: Profile, values: Sequence) -> Dict[str, str]:
    return {profile.candidates.label(c): format_rational(v) for c, v in enumerate(values)}


def _json(model) -> Any:
    return model.model_dump(mode="json")


# ============================================================================
# COMMAND HANDLERS
# ============================================================================

def _verify(args: argparse.Namespace) -> Emission:
    manager = VerificationManager(fibonacci_n=args.n)
    if args.name == "all":
        results = manager.run_all(max_m=args.max_m, seed=args.seed, instances=args.instances)
    else:
        results = [manager.run(args.name, max_m=args.max_m, m=args.m, seed=args.seed, instances=args.instances)]

    reports = []
    for result in results:
        reports.append(
            RunReport(
                command=f"verify {result.name}",
                parameters=_parameters(args),
                outcome=Outcome.PASS if result.passed else Outcome.FAIL,
                value={"checks": result.checks, **result.details},
                witnesses=[result.witness] if result.witness else [],
            )
        )
    return reports


def _parity_pair(args: argparse.Namespace) -> Emission:
    pair = parity_pair(_candidates(args), args.a, args.b)
    return _value_report(args, {
        "a": pair.a,
        "b": pair.b,
        "plurality_a": format_rational(plurality_score(pair.profile, pair.a)),
        "plurality_b": format_rational(plurality_score(pair.profile, pair.b)),
        "profile": _json(profile_to_document(pair.profile)),
    })


def _winner_family(args: argparse.Namespace) -> Emission:
    candidates = _candidates(args)
    alpha = _alpha(args, default="plurality")
    pair = parity_pair(candidates, args.a, args.b)
    family = winner_family(pair.profile, pair.a, pair.b, alpha, t=args.t)
    return _value_report(args, {
        "alpha": alpha.format(),
        "t": family.t,
        "a": family.a,
        "b": family.b,
        "winners": {name: winners(p, alpha) for name, p in family.profiles.items()},
        "profiles": {name: _json(profile_to_document(p)) for name, p in family.profiles.items()},
    })


def _stv_family(args: argparse.Namespace) -> Emission:
    candidates = _candidates(args)
    params = stv_parameters(candidates, args.epsilon)
    profiles = stv_family(candidates, args.epsilon)
    return _value_report(args, {
        "epsilon": format_rational(params.epsilon),
        "cycle_rankings": len(params.rankings),
        "winners": {name: stv_winners(p).winners for name, p in profiles.items()},
        "profiles": {name: _json(profile_to_document(p)) for name, p in profiles.items()},
    })


def _query_instance(args: argparse.Namespace) -> Emission:
    alpha = _alpha(args)
    instance = query_complexity_instance(alpha, tstar=args.tstar)
    candidates = instance.candidates
    return _value_report(args, {
        "alpha": alpha.format(),
        "tstar": instance.tstar,
        "inner": [candidates.label(c) for c in instance.inner],
        "a": instance.a,
        "b": instance.b,
        "index": instance.index,
        "winners": winners(instance.profile, alpha),
        "profile": _json(profile_to_document(instance.profile)),
    })


def _fibonacci(args: argparse.Namespace) -> Emission:
    n = args.n or settings.FIBONACCI_N
    if args.observe:
        observed = {}
        for part in args.observe.split(","):
            key, _, value = part.partition("=")
            try:
                observed[int(key)] = int(value)
            except ValueError as e:
                raise InvalidArgumentError(f"malformed observation {part!r}; use j=value") from e
        consistent = fibonacci_consistent_set(n, observed, i=args.i)
        return _value_report(args, {
            "consistent": [_json(p) for p in consistent],
            "success": format_rational(fibonacci_success_bound(consistent)),
        })

    for flag, value in (("--i", args.i), ("--s", args.s), ("--r", args.r)):
        _require_arg(value, flag, args.command)
    instance = fibonacci_instance(n, args.i, args.s, args.r)
    return _value_report(args, {
        **_json(instance.record()),
        "profile": _json(profile_to_document(instance.profile)),
    })


def _span(args: argparse.Namespace) -> Emission:
    alpha = _alpha(args)
    _require_arg(args.t, "--t", args.command)
    decision = span_membership(alpha, args.t)
    value = _json(decision)
    value["verdict"] = "member" if decision.member else "not member"
    return _value_report(args, value)


def _tstar(args: argparse.Namespace) -> Emission:
    alpha = _alpha(args)
    return _value_report(args, {"alpha": alpha.format(), "tstar": minimal_query_size(alpha)})


def _simplex(args: argparse.Namespace) -> Emission:
    _require_arg(args.m, "--m", args.command)
    rows = simplex_grid(args.m, args.grid)
    header = [f"alpha_{j + 1}" for j in range(args.m)] + [f"x_{j + 1}" for j in range(args.m)] + ["tstar"]
    table = []
    for row in rows:
        coordinates = [format_rational(x) for x in row.coordinates] if row.coordinates else [""] * args.m
        table.append([format_rational(w) for w in row.alpha] + coordinates + [str(row.tstar)])
    return CsvTable(header, table)


def _scores(args: argparse.Namespace) -> Emission:
    profile = _profile(args)
    alpha = _alpha(args, m=profile.m)
    if args.t is None:
        return _value_report(args, {"scores": _labels(profile, scores(profile, alpha))})
    session = QuerySession(profile, args.t)
    values = [score_via_queries(session, alpha, c) for c in range(profile.m)]
    return _value_report(args, {"scores": _labels(profile, values)}, query_count=session.query_count)


def _winners(args: argparse.Namespace) -> Emission:
    profile = _profile(args)
    alpha = _alpha(args, m=profile.m)
    if args.t is None:
        return _value_report(args, {"winners": winners(profile, alpha)})
    session = QuerySession(profile, args.t)
    found = winner_via_queries(session, alpha)
    return _value_report(args, {"winners": found}, query_count=session.query_count)


def _stv(args: argparse.Namespace) -> Emission:
    return _value_report(args, _json(stv_winners(_profile(args))))


def _condorcet(args: argparse.Namespace) -> Emission:
    profile = _profile(args)
    session = QuerySession(profile, 2)
    run = condorcet_via_queries(session)
    value = _json(run)
    value["brute_force"] = condorcet_winner(profile)
    return _value_report(args, value, query_count=run.queries_used)


def _sample(args: argparse.Namespace) -> Emission:
    profile = _profile(args)
    _require_arg(args.query, "--query", args.command)
    members = [c.strip() for c in args.query.split(",")]
    session = SampledSession(profile, args.t or len(members), seed=args.seed)
    report = session.sample(members, args.n or 100)
    return _value_report(args, _json(report), query_count=session.query_count)


def _cover(args: argparse.Namespace) -> Emission:
    if args.m is not None and args.t is not None and args.tstar is not None:
        greedy = greedy_cover(args.m, args.t, args.tstar)
        value = {
            "lower_bound": cover_lower_bound(args.m, args.t, args.tstar),
            "rational_bound": format_rational(rational_cover_bound(args.m, args.t, args.tstar)),
            "greedy": [list(s) for s in greedy.sets],
            "greedy_valid": is_cover(greedy).valid,
        }
        if args.exact:
            value["exact"] = [list(s) for s in exact_cover(args.m, args.t, args.tstar).sets]
        return _value_report(args, value)

    rows = cover_rows(tiny_parameters(args.max_m or settings.VERIFY_MAX_M), exact=args.exact)
    header = ["m", "t", "tstar", "lower_bound", "rational_bound", "greedy", "exact"]
    return CsvTable(header, [
        [str(r.m), str(r.t), str(r.tstar), str(r.lower_bound), format_rational(r.rational_bound),
         str(r.greedy), "" if r.exact is None else str(r.exact)]
        for r in rows
    ])


def _bound_curve(args: argparse.Namespace) -> Emission:
    _require_arg(args.m, "--m", args.command)
    _require_arg(args.tstar, "--tstar", args.command)
    rows = bound_curve(args.m, args.tstar, uniform_grid(args.grid))
    return CsvTable(["delta", "bound", "baseline", "optimal"], [
        [format_rational(r.delta), format_rational(r.bound), format_rational(r.baseline),
         "" if r.optimal is None else format_rational(r.optimal)]
        for r in rows
    ])


def _indistinguishable(args: argparse.Namespace) -> Emission:
    first = _profile(args)
    _require_arg(args.other, "--other", args.command)
    _require_arg(args.t, "--t", args.command)
    report = indistinguishable(first, load_profile(args.other), args.t)
    return _value_report(args, _json(report))


# ============================================================================
# PARSER
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true",
        help=f"Emit {REPORT_FORMATS['json']} instead of {REPORT_FORMATS['text']}",
    )
    common.add_argument("--timings", action="store_true", help="Add wall time and resident memory to reports")
    common.add_argument("--out", help="Write output to this file instead of stdout")
    common.add_argument("--log-level", help="Override ELICIT_LOG_LEVEL")

    parser = argparse.ArgumentParser(prog="elicit", description="Voting with size-limited preference queries")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler, help_text: str, *flags: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        sub.set_defaults(handler=handler)
        for flag in flags:
            FLAGS[flag](sub)
        return sub

    verify = command("verify", _verify, "Run acceptance verifications", "--m", "--seed", "--n")
    verify.add_argument("name", choices=["all"] + VERIFICATION_ORDER + list(VERIFICATION_ALIASES))
    verify.add_argument("--max-m", type=int, help="Largest candidate count to check")
    verify.add_argument("--instances", type=int, help="Random instances per parameter choice")

    for name, handler, help_text, flags in (
        ("parity-pair", _parity_pair, "Parity-pair profile on m candidates", ("--m",)),
        ("winner-family", _winner_family, "One profile per candidate with a unique winner", ("--m", "--alpha", "--t")),
    ):
        sub = command(name, handler, help_text, *flags)
        sub.add_argument("--a", default="a", help="First candidate of the pair")
        sub.add_argument("--b", default="b", help="Second candidate of the pair")

    stv_sub = command("stv-family", _stv_family, "STV profiles hidden from (m-1)-queries", "--m")
    stv_sub.add_argument("--epsilon", help="Mixture weight, default 1/m^2")
    command("query-instance", _query_instance, "Hard instance for queries larger than t*", "--m", "--alpha", "--tstar")

    fib = command("fibonacci", _fibonacci, "Three-candidate Fibonacci instances", "--n")
    fib.add_argument("--i", type=int)
    fib.add_argument("--s", type=int)
    fib.add_argument("--r", type=int)
    fib.add_argument("--observe", help="Observed scaled margins, e.g. 1=300,2=292")

    command("span", _span, "Decide alpha in R_{m,t}", "--m", "--alpha", "--t")
    command("tstar", _tstar, "Minimal query size of alpha", "--m", "--alpha")
    simplex = command("simplex", _simplex, "CSV of grid scoring vectors with t*", "--m")
    simplex.add_argument("--grid", type=int, default=6, help="Grid resolution")

    command("score", _scores, "Scores, directly or through t-queries", "--profile", "--alpha", "--t")
    command("winners", _winners, "Winners, directly or through t-queries", "--profile", "--alpha", "--t")
    command("stv", _stv, "STV winner set with elimination traces", "--profile")
    command("condorcet", _condorcet, "Condorcet winner from pairwise queries", "--profile")
    sample = command("sample", _sample, "Sampled answer to one query", "--profile", "--t", "--seed", "--n")
    sample.add_argument("--query", help="Comma-separated candidate labels")

    cover = command("cover", _cover, "Covering designs and cover-number CSV", "--m", "--t", "--tstar")
    cover.add_argument("--max-m", type=int, help="Largest m for the CSV listing")
    cover.add_argument("--exact", action="store_true", help="Also run the exhaustive minimum search")

    curve = command("bound-curve", _bound_curve, "CSV of the success upper bound", "--m", "--tstar")
    curve.add_argument("--grid", type=int, default=6, help="Number of delta steps")

    pair = command("indistinguishable", _indistinguishable, "Exact t-indistinguishability", "--profile", "--t")
    pair.add_argument("--other", help="Second profile file")
    return parser


FLAGS = {
    "--m": lambda p: p.add_argument("--m", type=int, help="Number of candidates"),
    "--t": lambda p: p.add_argument("--t", type=int, help="Query size"),
    "--tstar": lambda p: p.add_argument("--tstar", type=int, help="Minimal query size t*"),
    "--alpha": lambda p: p.add_argument("--alpha", help="Preset name or comma-separated rationals"),
    "--profile": lambda p: p.add_argument("--profile", help="Profile document (JSON)"),
    "--seed": lambda p: p.add_argument("--seed", type=int, help="Random seed"),
    "--n": lambda p: p.add_argument("--n", type=int, help="Fibonacci scale or sample count"),
}


# ============================================================================
# OUTPUT
# ============================================================================

def _text_value(value: Any) -> str:
    if isinstance(value, str) and value and " " not in value:
        return value
    return json.dumps(value, sort_keys=True, separators=(",", ":"))


def render_report(report: RunReport, as_json: bool = False) -> str:
    data = report.model_dump(mode="json", exclude_none=True)
    if as_json:
        return json.dumps(data, sort_keys=True, separators=(",", ":"))
    parts = [f"command={_text_value(data.pop('command'))}", f"outcome={data.pop('outcome')}"]
    for key, value in data.pop("parameters", {}).items():
        parts.append(f"{key}={_text_value(value)}")
    for key in sorted(data):
        parts.append(f"{key}={_text_value(data[key])}")
    return " ".join(parts)


def render_csv(table: CsvTable) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(table.header)
    writer.writerows(table.rows)
    return buffer.getvalue()


def _emit(text: str, out: Optional[str]):
    if out:
        Path(out).write_text(text, encoding="utf-8")
        logger.info(f"Wrote output to {out}")
    else:
        sys.stdout.write(text)


# ============================================================================
# ENTRY POINT
# ============================================================================

def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, run one command and write its reports; returns the exit status"""
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level)

    try:
        with RunLogger(logger, args.command) as run_logger:
            emission = args.handler(args)
    except ElicitError as e:
        logger.error(f"{args.command} rejected: {str(e)}")
        report = RunReport(
            command=args.command,
            parameters=_parameters(args),
            outcome=Outcome.ERROR,
            witnesses=[f"{type(e).__name__}: {str(e)}"],
        )
        _emit(render_report(report, args.json) + "\n", args.out)
        return 2
    except Exception as e:
        logger.error(f"{args.command} failed unexpectedly: {str(e)}")
        return 1

    if isinstance(emission, CsvTable):
        _emit(render_csv(emission), args.out)
        return 0

    if args.timings:
        memory_mb = psutil.Process().memory_info().rss / (1024 * 1024)
        emission = [
            r.model_copy(update={"wall_time": round(run_logger.duration, 6), "memory_mb": round(memory_mb, 1)})
            for r in emission
        ]
    _emit("".join(render_report(r, args.json) + "\n" for r in emission), args.out)
    return 1 if any(r.outcome == Outcome.FAIL for r in emission) else 0


def main():
    sys.exit(run())
