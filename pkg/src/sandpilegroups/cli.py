"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage, parse or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from typing import Any

from . import __version__
from .errors import SandpileError
from .families import ChSpec, HSpec, build_ch_canonical, build_ch_member, build_h, canonical_plan
from .formulas import f_recursive, g_closed_form
from .graph import format_graph, read_graph, reduced_laplacian, to_dot, laplacian
from .linalg import format_matrix
from .sandpile import sandpile_group
from .verify import CHECKS, run_check

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


@dataclass
class RunReport:
    command: str
    inputs: dict[str, Any]
    result: dict[str, Any]
    trials: int | None = None
    failures: list[int] = field(default_factory=list)

    def to_json(self) -> str:
        d = asdict(self)
        if self.trials is None:
            del d["trials"], d["failures"]
        return json.dumps(d, indent=2)


def _csv_ints(text: str) -> list[int]:
    if text.strip() == "":
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _group_result(group) -> dict[str, Any]:
    return {"factors": [str(d) for d in group.invariant_factors], "order": str(group.order)}


def cmd_group(args) -> tuple[RunReport, str, int]:
    g = read_graph(args.path)
    group = sandpile_group(g, args.drop)
    report = RunReport("group", {"path": args.path, "drop": args.drop}, _group_result(group))
    text = f"{group}\norder {group.order}"
    if args.print_matrix:
        m = reduced_laplacian(g, args.drop) if g.vertex_count > 1 else laplacian(g)
        text = format_matrix(m) + "\n" + text
    return report, text, EXIT_OK


def cmd_gen(args) -> tuple[RunReport, str, int]:
    inputs: dict[str, Any] = {"kind": args.kind}
    if args.kind == "ch-canonical":
        _need(args.a, "--a")
        inputs["a"] = args.a
        g = build_ch_canonical(args.a)
    elif args.kind == "ch-member":
        _need(args.a, "--a")
        plan = args.plan if args.plan is not None else list(canonical_plan(args.a))
        inputs.update(a=args.a, plan=plan)
        g = build_ch_member(ChSpec(tuple(args.a), tuple(plan)))
    else:
        _need(args.n, "--n")
        F = read_graph(args.F) if args.F else None
        G = read_graph(args.G) if args.G else None
        spec = HSpec(F=F, G=G, n=args.n, i=args.i,
                     f1=args.f1 or (), f2=args.f2 or (), g1=args.g1 or (), g2=args.g2 or ())
        inputs.update(n=args.n, i=args.i, F=args.F, G=args.G,
                      f1=list(spec.f1), f2=list(spec.f2), g1=list(spec.g1), g2=list(spec.g2))
        g = build_h(spec)
    body = to_dot(g) if args.dot else format_graph(g)
    result = {"vertices": str(g.vertex_count), "edges": str(g.edge_count)}
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(body)
        result["out"] = args.out
        text = f"wrote {args.out}: {g.vertex_count} vertices, {g.edge_count} edges"
    else:
        text = body.rstrip("\n")
    return RunReport("gen", inputs, result), text, EXIT_OK


def cmd_formula(args) -> tuple[RunReport, str, int]:
    _need(args.a, "--a")
    fn = f_recursive if args.kind == "f" else g_closed_form
    value = fn(args.a)
    return RunReport("formula", {"kind": args.kind, "a": args.a}, {"value": str(value)}), str(value), EXIT_OK


def cmd_verify(args) -> tuple[RunReport, str, int]:
    if args.trials < 1:
        raise _Usage("--trials must be >= 1")
    res = run_check(args.check, args.trials, args.seed)
    report = RunReport(
        "verify",
        {"check": args.check, "trials": args.trials, "seed": args.seed},
        {"passed": res.passed, "failed": res.failed, "failure_seeds": res.failure_seeds},
        trials=res.trials,
        failures=res.failure_seeds,
    )
    lines = [f"{args.check}: {res.passed}/{res.trials} passed"]
    lines += [f"  failing trial seed {s}" for s in res.failure_seeds]
    return report, "\n".join(lines), EXIT_OK if res.ok else EXIT_FAILED


class _Usage(Exception):
    pass


def _need(value, flag: str) -> None:
    if value is None:
        raise _Usage(f"{flag} is required")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sandpilegroups", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="emit a JSON report")

    sp = sub.add_parser("group", help="sandpile group of a graph file")
    sp.add_argument("path")
    sp.add_argument("--drop", type=int, default=None, help="vertex whose row/column is removed (default: last)")
    sp.add_argument("--print-matrix", action="store_true", help="also print the reduced Laplacian")
    common(sp)
    sp.set_defaults(func=cmd_group)

    sp = sub.add_parser("gen", help="generate a family member")
    sp.add_argument("kind", choices=["ch-canonical", "ch-member", "h"])
    sp.add_argument("--a", type=_csv_ints, help="cycle lengths, e.g. 3,6,4,6")
    sp.add_argument("--plan", type=_csv_ints, help="attachment plan for ch-member (default: canonical)")
    sp.add_argument("--n", type=int, help="cycle length for h")
    sp.add_argument("--i", type=int, default=1, help="attachment index for h")
    sp.add_argument("--F", help="graph file for F (h only)")
    sp.add_argument("--G", help="graph file for G (h only)")
    for name in ("f1", "f2", "g1", "g2"):
        sp.add_argument(f"--{name}", type=_csv_ints)
    sp.add_argument("--out", help="write the graph here instead of stdout")
    sp.add_argument("--dot", action="store_true", help="write Graphviz DOT instead of the graph format")
    common(sp)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("formula", help="evaluate the tree-count recurrence (f) or closed form (g)")
    sp.add_argument("kind", choices=["f", "g"])
    sp.add_argument("--a", type=_csv_ints)
    common(sp)
    sp.set_defaults(func=cmd_formula)

    sp = sub.add_parser("verify", help="run a seeded randomized check")
    sp.add_argument("check", choices=sorted(CHECKS))
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    common(sp)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, text, code = args.func(args)
    except (SandpileError, _Usage, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(report.to_json() if args.json else text)
    return code


if __name__ == "__main__":
    sys.exit(main())
