"""Command-line entry point.

Every subcommand prints one JSON certificate on stdout. Exit status is 0
for valid/found/pass/not-equivalent, 1 for invalid/not-found/fail/
inconclusive and 2 for usage or input errors. Vertex and class ids in
certificates are 1-based, like the input files.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

from fatcolor.construction import (
    ALPHA_POSITIVE,
    CLIQUE_GATE,
    build_graph,
    non_equivalence_sweep,
    plan_construction,
    predict_properties,
    verify_construction,
)
from fatcolor.fat import fat_chromatic_number, verify_fat
from fatcolor.graph import maximum_clique, homomorphism_exists
from fatcolor.io import (
    Certificate,
    FormatError,
    parse_coloring,
    parse_dimacs,
    render_parameters,
    write_coloring,
    write_dimacs,
)
from fatcolor.rational import format_rational, parse_rational


class UsageError(Exception):
    pass


def _rational_arg(text: str):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"expected A/B or an integer: {exc}") from None


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str):
    return parse_dimacs(_read(path))


def _params_dict(params) -> dict[str, Any]:
    return render_parameters(
        params.k, params.alpha, params.beta,
        kind=params.kind, alpha_canonical=params.alpha_canonical,
    )


def _blocks(partition) -> list[list[int]]:
    return [[v + 1 for v in block] for block in partition.blocks]


def _plan_details(plan) -> dict[str, Any]:
    out: dict[str, Any] = {"branch": plan.branch, "n": plan.n, "a": plan.a, "b": plan.b}
    if plan.branch == ALPHA_POSITIVE:
        out.update(a0=plan.a0, b0=plan.b0, g=plan.g, ell=plan.ell)
    else:
        out["component_order"] = plan.component_order
    return out


def cmd_construct(args) -> Certificate:
    plan = plan_construction(args.k, args.alpha, args.n, g=args.g)
    graph, part = build_graph(plan)
    pred = predict_properties(plan)
    details = _plan_details(plan)
    details.update(order=graph.order, size=graph.size, regular_degree=pred.regular_degree,
                   predicted_clique_number=pred.clique_number, class_sizes=list(part.class_sizes))
    dimacs = write_dimacs(graph)
    coloring = write_coloring(part)
    if args.out:
        Path(args.out).write_text(dimacs)
        details["graph_file"] = args.out
    else:
        details["dimacs"] = dimacs
    if args.coloring:
        Path(args.coloring).write_text(coloring)
        details["coloring_file"] = args.coloring
    else:
        details["coloring"] = coloring
    return Certificate("construct", "found", render_parameters(plan.k, plan.alpha, plan.beta), details)


def cmd_verify(args) -> Certificate:
    graph = _load_graph(args.graph)
    part = parse_coloring(_read(args.coloring), graph.vertex_count)
    verdict = verify_fat(graph, part)
    details: dict[str, Any] = {"order": graph.order, "class_sizes": list(part.class_sizes)}
    if verdict.valid:
        return Certificate("verify", "valid", _params_dict(verdict.params), details)
    w = verdict.witness
    details["witness"] = {
        "vertex": w.vertex + 1,
        "class": w.class_index,
        "observed": w.observed,
        "required": format_rational(w.required),
    }
    return Certificate("verify", "invalid", render_parameters(part.k, None, None), details)


def cmd_chi_fat(args) -> Certificate:
    graph = _load_graph(args.graph)
    res = fat_chromatic_number(graph, max_order=args.max_order)
    details = {"chi_fat": res.k, "order": graph.order, "witness": _blocks(res.partition)}
    return Certificate("chi-fat", "found", _params_dict(res.params), details)


def cmd_clique(args) -> Certificate:
    graph = _load_graph(args.graph)
    clique = maximum_clique(graph)
    details = {"clique_number": len(clique), "clique": [v + 1 for v in clique], "order": graph.order}
    return Certificate("clique", "found", None, details)


def cmd_hom(args) -> Certificate:
    g = _load_graph(args.from_)
    h = _load_graph(args.to)
    mapping = homomorphism_exists(g, h)
    if mapping is None:
        return Certificate("hom", "not-found", None, {"mapping": None})
    return Certificate("hom", "found", None, {"mapping": {str(x + 1): y + 1 for x, y in enumerate(mapping)}})


def cmd_check_construction(args) -> Certificate:
    plan = plan_construction(args.k, args.alpha, args.n)
    report = verify_construction(plan, clique_gate=args.clique_gate)
    checks = []
    for c in report.checks:
        entry: dict[str, Any] = {"name": c.name, "status": c.status,
                                 "predicted": _render(c.predicted), "measured": _render(c.measured)}
        if c.note:
            entry["note"] = c.note
        checks.append(entry)
    details = _plan_details(plan)
    details["checks"] = checks
    return Certificate("check-construction", report.status,
                       render_parameters(plan.k, plan.alpha, plan.beta), details)


def cmd_sweep(args) -> Certificate:
    omegas, entries = non_equivalence_sweep(args.k, args.alpha, args.n_max, clique_gate=args.clique_gate)
    beta = 1 - (args.k - 1) * args.alpha
    details = {
        "clique_numbers": {str(n): v for n, v in omegas.items()},
        "pairs": [
            {"i": e.i, "j": e.j, "omega_i": e.omega_i, "omega_j": e.omega_j,
             "status": e.status, "source": e.source}
            for e in entries
        ],
    }
    status = "not-equivalent" if all(e.status == "not-equivalent" for e in entries) else "inconclusive"
    return Certificate("sweep", status, render_parameters(args.k, args.alpha, beta), details)


def _render(value: Any) -> Any:
    if isinstance(value, tuple) and len(value) == 2 and all(hasattr(x, "denominator") for x in value):
        return {"alpha": format_rational(value[0]), "beta": format_rational(value[1])}
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fatcolor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build the regular graph for (k, alpha, n)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--alpha", type=_rational_arg, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g", type=int)
    p.add_argument("--out", help="write the DIMACS graph here")
    p.add_argument("--coloring", help="write the canonical coloring here")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a coloring for the FAT property")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("chi-fat", help="FAT chromatic number by exhaustive search")
    p.add_argument("--graph", required=True)
    p.add_argument("--max-order", type=int, help="size guard (default 12 or $FATCOLOR_MAX_ORDER)")
    p.set_defaults(func=cmd_chi_fat)

    p = sub.add_parser("clique", help="exact clique number")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_clique)

    p = sub.add_parser("hom", help="search a homomorphism between two tiny graphs")
    p.add_argument("--from", dest="from_", required=True)
    p.add_argument("--to", required=True)
    p.set_defaults(func=cmd_hom)

    for name, func in (("check-construction", cmd_check_construction), ("sweep", cmd_sweep)):
        p = sub.add_parser(name)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--alpha", type=_rational_arg, required=True)
        if name == "sweep":
            p.add_argument("--n-max", type=int, required=True)
        else:
            p.add_argument("--n", type=int, required=True)
        p.add_argument("--clique-gate", type=int, default=CLIQUE_GATE)
        p.set_defaults(func=func)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cert = args.func(args)
    except (UsageError, FormatError, ValueError, ZeroDivisionError) as exc:
        print(f"fatcolor {args.command}: error: {exc}", file=sys.stderr)
        return 2
    print(cert.to_json())
    return cert.exit_code


if __name__ == "__main__":
    sys.exit(main())
