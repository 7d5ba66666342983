"""Command-line front end.

Four subcommands: ``check`` certifies sequence-level facts, ``realize``
builds graphs with prescribed degrees, ``hajos`` runs the witness
construction (or the full graph pipeline), ``sweep`` grinds the
inequalities over every small graphic sequence.  Certificates and sweep
reports are JSON with a top-level schema version; graphs travel as graph6,
optionally DOT.

Exit codes: 0 success, 1 sweep found violations, 2 parse error, 3 resource
limit, 4 infeasible or wrong-domain input, 5 internal error (a step the
theory guarantees cannot fail did fail).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from datetime import datetime, timezone

from . import __version__
from .analysis import (
    chromatic_number,
    verify_witness,
    witness_from_json,
    witness_to_json,
)
from .errors import (
    ArgumentError,
    DegseqError,
    InfeasibleError,
    InternalBugError,
    NotGraphicError,
    ParseError,
    ResourceLimitError,
)
from .graphs import graph6_decode, graph6_encode, to_dot
from .hajos import (
    build_basic_witness,
    check_bounds,
    plan_construction,
    witness_pipeline,
)
from .oracle import ALL_CHECKS, chi_of_sequence, h1_of_sequence, sweep
from .realize import (
    realize_any,
    realize_bipartite_with_matching,
    realize_tree,
    realize_with_clique,
)
from .sequences import (
    SOURCE_ORACLE,
    SOURCE_RAO,
    SOURCE_WITNESS,
    SequenceStats,
    classify_basic_profile,
    is_graphic,
    omega_of_sequence,
    parse_sequence,
)

__all__ = ["main", "entrypoint", "build_parser"]


def _certificate_shell(input_value) -> dict:
    return {
        "schema": 1,
        "tool": {"name": "degseq", "version": __version__},
        "generated_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "input": input_value,
    }


def _emit(payload, out_path: str | None) -> None:
    text = json.dumps(payload, indent=2)
    if out_path and out_path != "-":
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _parse_raw_ints(text: str, what: str) -> list[int]:
    # demand lists must reach the builder unsorted, so no DegreeSequence here
    tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    if not tokens:
        raise ParseError(f"{what} is empty")
    vals = []
    for tok in tokens:
        try:
            vals.append(int(tok))
        except ValueError:
            raise ParseError(f"{what} has non-integer token {tok!r}") from None
    return vals


def cmd_check(args) -> int:
    seq = parse_sequence(args.sequence)
    cert = _certificate_shell(list(seq.degrees))
    graphic = is_graphic(seq)
    cert["graphic"] = graphic
    if graphic:
        omega = omega_of_sequence(seq)
        cert["omega"] = {"value": omega, "method": SOURCE_RAO}
        profile = classify_basic_profile(seq)
        cert["profile"] = {"verdict": profile.verdict.value, "m": profile.m}
        stats = SequenceStats(
            omega=omega,
            delta_max=seq.max_deg,
            sources={"omega": SOURCE_RAO},
        )
        if args.oracle:
            kw = {"limit": args.max_n} if args.max_n is not None else {}
            chi = chi_of_sequence(seq, **kw)
            h1 = h1_of_sequence(seq, **kw)
            cert["chi"] = {"value": chi, "method": SOURCE_ORACLE}
            cert["h1"] = {"value": h1, "method": SOURCE_ORACLE}
            stats = SequenceStats(
                chi=chi,
                omega=omega,
                h1=h1,
                delta_max=seq.max_deg,
                sources={
                    "chi": SOURCE_ORACLE,
                    "omega": SOURCE_RAO,
                    "h1": SOURCE_ORACLE,
                },
            )
        cert["bounds"] = check_bounds(stats).to_dict()
    _emit(cert, args.out)
    return 0


def cmd_realize(args) -> int:
    if args.bipartite is not None:
        a_text, sep, b_text = args.bipartite.partition("/")
        if not sep:
            raise ParseError("bipartite demands must look like 'a1,a2,../b1,b2,..'")
        bip = realize_bipartite_with_matching(
            _parse_raw_ints(a_text, "A-side demands"),
            _parse_raw_ints(b_text, "B-side demands"),
        )
        graph = bip.graph
    else:
        if args.sequence is None:
            raise ParseError("a sequence is required unless --bipartite is used")
        seq = parse_sequence(args.sequence)
        if args.tree:
            graph = realize_tree(seq)
        elif args.clique is not None:
            graph = realize_with_clique(seq, args.clique)
        else:
            graph = realize_any(seq)
    lines = [graph6_encode(graph)]
    if args.dot:
        lines.append(to_dot(graph))
    text = "\n".join(lines)
    if args.out and args.out != "-":
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def _reverify(graph6_text: str, witness_doc: dict) -> None:
    # certificates promise that their embedded artifacts re-verify
    g = graph6_decode(graph6_text)
    w = witness_from_json(witness_doc)
    report = verify_witness(g, w)
    if not report:
        raise InternalBugError(
            f"emitted witness fails re-verification "
            f"({report.reason}: {report.detail})"
        )


def cmd_hajos(args) -> int:
    if args.pipeline:
        host = graph6_decode(args.sequence)
        graph, witness = witness_pipeline(host)
        cert = _certificate_shell(graph6_encode(host))
        cert["chi"] = {
            "value": chromatic_number(host),
            "method": SOURCE_ORACLE,
        }
        plan_doc = None
    else:
        seq = parse_sequence(args.sequence)
        plan = plan_construction(seq)
        graph, witness = build_basic_witness(seq)
        cert = _certificate_shell(list(seq.degrees))
        cert["graphic"] = True
        cert["omega"] = {"value": omega_of_sequence(seq), "method": SOURCE_RAO}
        profile = classify_basic_profile(seq)
        cert["profile"] = {"verdict": profile.verdict.value, "m": profile.m}
        plan_doc = plan.to_dict()
    g6 = graph6_encode(graph)
    wdoc = witness_to_json(witness)
    _reverify(g6, wdoc)
    cert["h1_lower_bound"] = {"value": witness.order, "method": SOURCE_WITNESS}
    cert["artifacts"] = {"graph6": g6, "witness": wdoc, "plan": plan_doc}
    _emit(cert, args.out)
    return 0


def cmd_sweep(args) -> int:
    if args.checks:
        names = [t for t in args.checks.split(",") if t]
    else:
        names = sorted(ALL_CHECKS)
    report = sweep(args.max_n, names, force=args.force)
    print(report.summary())
    if args.out:
        _emit(report.to_dict(), args.out)
    return 1 if report.has_violations else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degseq",
        description="Degree-sequence certification, realization and "
        "witness construction.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="certify sequence-level facts as JSON")
    p.add_argument("sequence", help="degree sequence, e.g. '2,2,2,2,2'")
    p.add_argument(
        "--oracle",
        action="store_true",
        help="also compute exact chi and h1 by enumeration",
    )
    p.add_argument(
        "--max-n",
        type=int,
        default=None,
        help="acknowledge and override the oracle length cap",
    )
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("realize", help="emit one realization as graph6")
    p.add_argument("sequence", nargs="?", help="degree sequence")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--tree", action="store_true", help="build a tree")
    mode.add_argument(
        "--clique",
        type=int,
        metavar="K",
        help="realization with a clique on the top K degrees",
    )
    mode.add_argument(
        "--bipartite",
        metavar="A/B",
        help="bipartite demands 'a1,a2,../b1,b2,..' with an A-saturating "
        "matching",
    )
    p.add_argument("--dot", action="store_true", help="also emit DOT")
    p.add_argument("--out", help="write output here instead of stdout")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser(
        "hajos",
        help="build the subdivided-clique witness for a sequence "
        "(or a graph with --pipeline)",
    )
    p.add_argument("sequence", help="degree sequence, or graph6 with --pipeline")
    p.add_argument(
        "--pipeline",
        action="store_true",
        help="treat the input as graph6 and run decomposition + "
        "construction + join",
    )
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_hajos)

    p = sub.add_parser("sweep", help="run inequality checks over all small sequences")
    p.add_argument("--max-n", type=int, required=True, help="largest length")
    p.add_argument(
        "--checks",
        help="comma list from: " + ",".join(sorted(ALL_CHECKS)) + " (default all)",
    )
    p.add_argument(
        "--force",
        action="store_true",
        help="acknowledge the cost of exceeding the default caps",
    )
    p.add_argument("--out", help="write the JSON report here")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InternalBugError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 5
    except (InfeasibleError, NotGraphicError, ArgumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except DegseqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


def entrypoint() -> None:
    sys.exit(main())
