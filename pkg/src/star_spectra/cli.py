"""Command-line surface: classification, orbit enumeration, membership checks, solving, verification.

All machine output is a single JSON document on stdout with sorted keys and
canonical rational strings, so runs are byte-reproducible.  Exit codes:
0 success / member, 1 non-member / infeasible / failed verification,
2 usage error, 3 inconclusive solve.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .coxeter import GVector, orbit_entries
from .membership import (
    MembershipDecision,
    cross_validate,
    decide_catalog,
    decide_generic,
)
from .param_bridge import AlgebraParams, GenDim, dim_to_generalized, trace_gap
from .rep_builder import (
    SolveResult,
    StarRep,
    commutant_dimension,
    solve_representation,
    starrep_from_json_obj,
    starrep_to_json_obj,
    verify,
)
from .serialize import format_rational, parse_rational, parse_rational_list
from .star_graph import StarGraph, build_star, classify

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

# Canonical branch lengths for named graphs (sorted long-to-short); when weight
# flags are present their arity wins and the name only validates the multiset.
NAMED_GRAPHS = {
    "D4": (1, 1, 1),
    "E6": (2, 2, 1),
    "E7": (3, 2, 1),
    "E8": (4, 2, 1),
}


class UsageError(Exception):
    pass


def _parse_graph_spec(spec: str) -> tuple[str | None, tuple[int, int, int] | None]:
    """Returns (name, lengths); exactly one is set."""
    if spec in NAMED_GRAPHS:
        return spec, None
    parts = spec.split(",")
    if len(parts) == 3:
        try:
            lengths = tuple(int(x) for x in parts)
        except ValueError:
            raise UsageError(f"unknown graph name or malformed branch lengths: {spec!r}")
        return None, lengths  # type: ignore[return-value]
    raise UsageError(f"unknown graph name or malformed branch lengths: {spec!r}")


def _graph_without_params(spec: str) -> StarGraph:
    name, lengths = _parse_graph_spec(spec)
    if name is not None:
        lengths = NAMED_GRAPHS[name]
    try:
        return build_star(*lengths)  # type: ignore[misc]
    except ValueError as exc:
        raise UsageError(str(exc))


def _graph_and_params(args) -> tuple[StarGraph, AlgebraParams]:
    for flag in ("alpha", "beta", "delta", "gamma"):
        if getattr(args, flag, None) is None:
            raise UsageError(f"--{flag} is required for this subcommand")
    try:
        alpha = parse_rational_list(args.alpha)
        beta = parse_rational_list(args.beta)
        delta = parse_rational_list(args.delta)
        gamma = parse_rational(args.gamma)
        params = AlgebraParams(alpha, beta, delta, gamma)
    except ValueError as exc:
        raise UsageError(str(exc))
    arity = params.branch_lengths
    name, lengths = _parse_graph_spec(args.graph)
    if name is not None:
        if sorted(arity) != sorted(NAMED_GRAPHS[name]):
            raise UsageError(
                f"weight list lengths {arity} do not form the {name} shape "
                f"{tuple(sorted(NAMED_GRAPHS[name], reverse=True))}"
            )
    elif lengths != arity:
        raise UsageError(f"--graph lengths {lengths} disagree with weight list lengths {arity}")
    return build_star(*arity), params


def _default_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("STAR_SPECTRA_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"STAR_SPECTRA_SEED must be an integer, got {env!r}")
    return 0


def _gvector_json(v: GVector) -> list[str]:
    return [format_rational(x) for x in v.values]


def _gendim_json(n: GenDim) -> dict:
    return {"n0": n.n0, "n_p": list(n.n_p), "n_q": list(n.n_q), "n_s": list(n.n_s)}


def _decision_json(d: MembershipDecision) -> dict:
    out = {
        "member": d.member,
        "method": d.method,
        "witnesses": [
            {
                "gendim": _gendim_json(w.gendim),
                "dimension": _gvector_json(w.dimension),
                "steps": w.steps,
            }
            for w in d.witnesses
        ],
    }
    if d.method == "catalog":
        out["failed_conditions"] = list(d.failed_conditions)
    return out


def _emit(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2))


def _cmd_classify(args) -> int:
    g = _graph_without_params(args.graph)
    c = classify(g)
    out: dict = {"branch_lengths": list(g.branch_lengths), "type": c.name}
    if c.is_finite:
        out["coxeter_number"] = c.coxeter_number
        out["rank"] = c.rank
    _emit(out)
    return EXIT_OK


def _cmd_orbit(args) -> int:
    g = _graph_without_params(args.graph)
    if not classify(g).is_finite:
        raise UsageError(f"orbit enumeration requires a finite Dynkin star, got {classify(g).name}")
    entries = []
    for e in orbit_entries(g):
        dim = GVector(g, tuple(Fraction(x) for x in e.dim))
        entries.append(
            {
                "dimension": _gvector_json(dim),
                "gendim": _gendim_json(dim_to_generalized(dim, g)),
                "steps": e.steps,
                "start_vertex": e.start_vertex,
            }
        )
    _emit({"branch_lengths": list(g.branch_lengths), "count": len(entries), "dimensions": entries})
    return EXIT_OK


def _cmd_check(args) -> int:
    g, params = _graph_and_params(args)
    if not classify(g).name in NAMED_GRAPHS:
        raise UsageError(f"check requires a D4/E6/E7/E8 shape, got {classify(g).name}")
    generic = decide_generic(params, g)
    catalog = decide_catalog(params, g)
    agree = (
        generic.member == catalog.member
        and generic.witness_gendims == catalog.witness_gendims
    )
    _emit(
        {
            "agree": agree,
            "catalog": _decision_json(catalog),
            "generic": _decision_json(generic),
            "member": generic.member,
        }
    )
    return EXIT_OK if generic.member else EXIT_NEGATIVE


def _cmd_solve(args) -> int:
    g, params = _graph_and_params(args)
    if not classify(g).name in NAMED_GRAPHS:
        raise UsageError(f"solve requires a D4/E6/E7/E8 shape, got {classify(g).name}")
    seed = _default_seed(args)
    decision = decide_generic(params, g)
    out: dict = {"decision": _decision_json(decision), "seed": seed}
    if not decision.member:
        candidates = [
            dim_to_generalized(GVector(g, tuple(Fraction(x) for x in e.dim)), g)
            for e in orbit_entries(g)
        ]
        trace_gaps = {
            "/".join(map(str, n.flat())): format_rational(trace_gap(params, n))
            for n in candidates
        }
        out.update(
            {
                "status": "infeasible",
                "message": "no admissible generalized dimension for these weights",
                "trace_gaps": trace_gaps,
            }
        )
        _emit(out)
        return EXIT_NEGATIVE
    witness = decision.witnesses[0]
    result = solve_representation(
        params, witness.gendim, seed=seed, tol=args.tol, max_restarts=args.restarts
    )
    out["status"] = result.status
    out["message"] = result.message
    if not result.solved:
        _emit(out)
        return EXIT_NEGATIVE if result.status == "infeasible" else EXIT_INCONCLUSIVE
    assert result.rep is not None
    report = verify(result.rep, tol=max(args.tol * 100, 1e-12))
    rep_obj = starrep_to_json_obj(result.rep)
    out.update(
        {
            "commutant_dimension": commutant_dimension(result.rep),
            "iterations": result.iterations,
            "representation": rep_obj,
            "residual": result.residual,
            "verify": {
                "deviations": report.deviations(),
                "passed": report.passed,
                "ranks": [list(fr) for fr in report.ranks],
            },
            "winning_restart": result.winning_restart,
        }
    )
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(rep_obj, fh, sort_keys=True, indent=2)
    _emit(out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    try:
        with open(args.input, encoding="utf-8") as fh:
            rep = starrep_from_json_obj(json.load(fh))
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot read representation file {args.input!r}: {exc}")
    report = verify(rep, tol=args.tol)
    _emit(
        {
            "commutant_dimension": commutant_dimension(rep),
            "deviations": report.deviations(),
            "nondegeneracy_margins": list(report.nondegeneracy_margins),
            "passed": report.passed,
            "ranks": [list(fr) for fr in report.ranks],
        }
    )
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def _cmd_cross_validate(args) -> int:
    g = _graph_without_params(args.graph)
    if not classify(g).name in NAMED_GRAPHS:
        raise UsageError(f"cross-validate requires a D4/E6/E7/E8 shape, got {classify(g).name}")
    seed = _default_seed(args)
    report = cross_validate(g, args.samples, seed)
    _emit(
        {
            "agree": report.agree,
            "disagreements": [
                {
                    "catalog": _decision_json(d.catalog),
                    "generic": _decision_json(d.generic),
                    "params": {
                        "alpha": [format_rational(x) for x in d.params.alpha],
                        "beta": [format_rational(x) for x in d.params.beta],
                        "delta": [format_rational(x) for x in d.params.delta],
                        "gamma": format_rational(d.params.gamma),
                    },
                    "sample_index": d.sample_index,
                }
                for d in report.disagreements
            ],
            "member_count": report.member_count,
            "multi_witness_count": report.multi_witness_count,
            "samples": report.samples,
            "seed": seed,
        }
    )
    return EXIT_OK if report.agree else EXIT_NEGATIVE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="star-spectra",
        description="Decide and construct weighted projection-family representations on star-shaped graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph(p):
        p.add_argument("--graph", required=True, help="D4/E6/E7/E8 or branch lengths k,l,m")

    def add_params(p):
        p.add_argument("--alpha", help="comma-separated exact rationals, strictly decreasing")
        p.add_argument("--beta", help="comma-separated exact rationals, strictly decreasing")
        p.add_argument("--delta", help="comma-separated exact rationals, strictly decreasing")
        p.add_argument("--gamma", help="exact rational")

    def add_seed(p):
        p.add_argument("--seed", type=int, default=None, help="default: $STAR_SPECTRA_SEED or 0")

    p = sub.add_parser("classify", help="graph type, rank and Coxeter number")
    add_graph(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("orbit", help="non-degenerate dimensions with generalized dimensions and step counts")
    add_graph(p)
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("check", help="membership decision from both deciders")
    add_graph(p)
    add_params(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("solve", help="construct and verify a representation")
    add_graph(p)
    add_params(p)
    add_seed(p)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--restarts", type=int, default=32)
    p.add_argument("--output", help="also write the representation JSON to this file")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="verify a representation JSON file")
    p.add_argument("--input", required=True)
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("cross-validate", help="compare the two deciders on random samples")
    add_graph(p)
    add_seed(p)
    p.add_argument("--samples", type=int, default=1000)
    p.set_defaults(func=_cmd_cross_validate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
