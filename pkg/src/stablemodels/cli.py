"""Command-line front end.

Subcommands: models, graph, tight, loops, nes, split, fuzz.  Input
comes from a file argument or standard input ("-" also means stdin).

Exit codes:
  0  success
  1  parse error, bad atom sets, or usage problems
  2  enumeration cap exceeded
  3  graph is cyclic (tight) / splitting conditions fail (split)
  4  splitting conditions pass but the equivalence fails
  5  fuzzing found property violations
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import __version__
from .depgraph import GraphKind, graph_of, has_cycle, to_dot
from .errors import (
    AtomsOutsideFormulaError,
    CapExceededError,
    FormulaParseError,
    NotAPartitionError,
    NotNondisjunctiveError,
)
from .formula import (
    And,
    Theory,
    atoms,
    is_nondisjunctive_theory,
    print_formula,
    print_theory,
    theory_atoms,
)
from .fuzz import (
    MAX_FUZZ_ATOMS,
    MAX_FUZZ_DEPTH,
    PROPERTIES,
    run_fuzz,
)
from .loopformulas import loop_formula, nes, stable_via_loops
from .parser import parse_formula, parse_theory
from .semantics import (
    DEFAULT_CAP,
    Interpretation,
    analyze,
    satisfies,
    stable_models,
    supported_models,
)
from .splitting import check_split

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_CAP = 2
EXIT_CYCLIC = 3
EXIT_NOT_EQUIVALENT = 4
EXIT_VIOLATIONS = 5


def _read_input(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _fmt_interp(i: Interpretation) -> str:
    return "{" + " ".join(sorted(i)) + "}"


def _fmt_models(models) -> str:
    return ", ".join(_fmt_interp(m) for m in models) if models else "(none)"


def _parse_atom_list(text: str) -> frozenset[str]:
    return frozenset(a for a in text.replace(",", " ").split() if a)


def cmd_models(args) -> int:
    theory = parse_theory(_read_input(args.input))
    report = analyze(theory, cap=args.cap)
    if args.json:
        print(report.to_json())
        return EXIT_OK
    print("universe:", " ".join(sorted(report.universe)) or "(empty)")
    print("classical:", _fmt_models(report.classical))
    print("stable:", _fmt_models(report.stable))
    if report.supported is not None:
        print("supported:", _fmt_models(report.supported))
    print("pointwise stable:", _fmt_models(report.pointwise_stable))
    if report.completion_theory is not None:
        print("completion:")
        for f in report.completion_theory:
            print(" ", print_formula(f) + ".")
    return EXIT_OK


def cmd_graph(args) -> int:
    theory = parse_theory(_read_input(args.input))
    graph = graph_of(theory, GraphKind(args.graph))
    if args.format == "dot":
        sys.stdout.write(to_dot(graph, label=args.graph))
    else:
        for (head, body) in graph.sorted_edges():
            print(head, body)
    return EXIT_OK


def cmd_tight(args) -> int:
    theory = parse_theory(_read_input(args.input))
    kind = GraphKind(args.graph)
    cyclic = has_cycle(graph_of(theory, kind))
    print(f"graph {kind.value}: {'cyclic' if cyclic else 'acyclic'}")
    from .depgraph import g_sp

    if is_nondisjunctive_theory(theory) and not has_cycle(g_sp(theory)):
        sup = supported_models(theory, cap=args.cap)
        st = stable_models(theory, cap=args.cap)
        verdict = "verified" if sup == st else "VIOLATED"
        print(
            "tight (sp graph acyclic): supported models = stable models "
            f"({verdict}): {_fmt_models(st)}"
        )
    return EXIT_CYCLIC if cyclic else EXIT_OK


def cmd_loops(args) -> int:
    f = parse_formula(_read_input(args.input).strip())
    kind = GraphKind(args.graph)
    from .depgraph import strongly_connected_subsets

    loops = strongly_connected_subsets(graph_of((f,), kind))
    interp = (
        _parse_atom_list(args.interpretation)
        if args.interpretation is not None
        else None
    )
    for ys in loops:
        lf = loop_formula(f, ys)
        line = f"loop {_fmt_interp(ys)}: {print_formula(lf)}"
        if interp is not None:
            verdict = "satisfied" if satisfies(interp, lf) else "violated"
            line += f"  [{verdict}]"
        print(line)
    if interp is not None:
        accepted = stable_via_loops(interp, f, kind)
        label = f"{kind.value}-loop oracle"
        if accepted:
            note = " (UNSOUND)" if kind is GraphKind.SP else ""
            print(f"interpretation {_fmt_interp(interp)} accepted by {label}{note}")
        else:
            print(f"interpretation {_fmt_interp(interp)} rejected by {label}")
    return EXIT_OK


def cmd_nes(args) -> int:
    f = parse_formula(_read_input(args.input).strip())
    ys = _parse_atom_list(args.atoms)
    print(print_formula(nes(f, ys)))
    return EXIT_OK


def cmd_split(args) -> int:
    f = parse_formula(args.f)
    g = parse_formula(args.g)
    ps = _parse_atom_list(args.p)
    universe = atoms(And(f, g))
    qs = universe - ps
    report = check_split(f, g, ps, qs, GraphKind(args.graph), cap=args.cap)
    if args.json:
        print(
            json.dumps(
                {
                    "graph": report.kind.value,
                    "cond_i": report.cond_i,
                    "cond_ii": report.cond_ii,
                    "cond_iii": report.cond_iii,
                    "equivalence_holds": report.equivalence_holds,
                    "stable_whole": [sorted(m) for m in report.stable_whole],
                    "stable_part_f": [sorted(m) for m in report.stable_part_f],
                    "stable_part_g": [sorted(m) for m in report.stable_part_g],
                },
                indent=2,
            )
        )
    else:
        print(f"graph: {report.kind.value}")
        print(
            "condition (i):",
            "pass" if report.cond_i else
            "FAIL, atoms " + " ".join(sorted(report.cond_i_offenders)),
        )
        print(
            "condition (ii):",
            "pass" if report.cond_ii else
            "FAIL, atoms " + " ".join(sorted(report.cond_ii_offenders)),
        )
        print(
            "condition (iii):",
            "pass" if report.cond_iii else
            "FAIL, component " + _fmt_interp(report.cond_iii_offender),
        )
        print("stable (whole):", _fmt_models(report.stable_whole))
        print("stable (part f):", _fmt_models(report.stable_part_f))
        print("stable (part g):", _fmt_models(report.stable_part_g))
        print("equivalence holds:", "yes" if report.equivalence_holds else "no")
    if not report.conditions_pass:
        return EXIT_CYCLIC
    if not report.equivalence_holds:
        return EXIT_NOT_EQUIVALENT
    return EXIT_OK


def cmd_fuzz(args) -> int:
    result = run_fuzz(
        args.property,
        seed=args.seed,
        count=args.count,
        max_atoms=args.max_atoms,
        max_depth=args.max_depth,
    )
    print(f"property: {result.property_name}")
    print(
        f"seed: {result.seed}  count: {result.checked}  "
        f"max-atoms: {args.max_atoms}  max-depth: {args.max_depth}"
    )
    print(f"violations: {len(result.violations)}")
    if result.violations:
        print()
        print(result.violations[0])
    return EXIT_VIOLATIONS if result.violations else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stablemodels",
        description=(
            "Workbench for propositional stable-model semantics: model "
            "enumeration, dependency graphs, loop formulas, and splitting."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument(
            "input",
            nargs="?",
            default=None,
            help="input file ('-' or omitted reads standard input)",
        )

    def add_cap(p):
        p.add_argument(
            "--cap",
            type=int,
            default=DEFAULT_CAP,
            help=f"atom cap for exhaustive enumeration (default {DEFAULT_CAP})",
        )

    def add_graph(p):
        p.add_argument(
            "--graph",
            choices=("sp", "pnn"),
            default="pnn",
            help="dependency-graph construction (default pnn)",
        )

    p = sub.add_parser("models", help="enumerate model classes of a theory")
    add_input(p)
    add_cap(p)
    p.add_argument("--json", action="store_true", help="structured output")
    p.set_defaults(func=cmd_models)

    p = sub.add_parser("graph", help="emit a positive dependency graph")
    add_input(p)
    add_graph(p)
    p.add_argument(
        "--format",
        choices=("dot", "edges"),
        default="dot",
        help="output format (default dot)",
    )
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("tight", help="check acyclicity of a dependency graph")
    add_input(p)
    add_graph(p)
    add_cap(p)
    p.set_defaults(func=cmd_tight)

    p = sub.add_parser("loops", help="loops and loop formulas of a formula")
    add_input(p)
    add_graph(p)
    p.add_argument(
        "--interpretation",
        "-i",
        default=None,
        help="atom list to evaluate the loop formulas under, e.g. 'p,q'",
    )
    p.set_defaults(func=cmd_loops)

    p = sub.add_parser("nes", help="negated-external-support formula")
    add_input(p)
    p.add_argument(
        "--atoms",
        required=True,
        help="atom set Y, e.g. 'p,q'",
    )
    p.set_defaults(func=cmd_nes)

    p = sub.add_parser("split", help="check the splitting conditions")
    p.add_argument("f", help="first formula text")
    p.add_argument("g", help="second formula text")
    p.add_argument(
        "--p",
        required=True,
        help="atom list for the first part; the rest goes to the second",
    )
    add_graph(p)
    add_cap(p)
    p.add_argument("--json", action="store_true", help="structured output")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("fuzz", help="randomized refutation-seeking checks")
    p.add_argument(
        "--property",
        required=True,
        help="one of: " + ", ".join(sorted(PROPERTIES)),
    )
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--max-atoms", type=int, default=MAX_FUZZ_ATOMS)
    p.add_argument("--max-depth", type=int, default=MAX_FUZZ_DEPTH)
    p.set_defaults(func=cmd_fuzz)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FormulaParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (
        AtomsOutsideFormulaError,
        NotAPartitionError,
        NotNondisjunctiveError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
