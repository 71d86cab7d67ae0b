"""Command-line front end.

Subcommands cover the whole pipeline: polytope, norm, cycles, simulate,
realize, check-morphism, anisotropy, report.  All numeric output is exact
rational text; exit codes are 0 (success), 1 (input error), 2 (budget
exceeded), 3 (connectivity verdict failure).  The VELO_BUDGET environment
variable overrides every default resource budget at once.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from .cycles import DEFAULT_MAX_CYCLES, Cycle, basic_velocities, enumerate_cycles, path_displacement
from .dynamics import DEFAULT_PREFIX_BUDGET, build_plan, convergence_check, empirical_velocity, schedule
from .errors import BudgetError, DgfError, NotStronglyConnectedError, VeloError
from .geometry import (
    Polytope,
    anisotropy,
    contains_polytope,
    format_rational,
    gauge_norm,
    parse_rational,
    polytope_from_json,
    polytope_to_dict,
    polytope_to_json,
)
from .graph import (
    DEFAULT_PATCH_BUDGET,
    DisplacementGraph,
    gamma_norm_oracle,
    parse_dgf,
    serialize_dgf,
    strongly_connected_components,
)
from .invariants import VERDICT_STRONG, connectivity_report, velocity_polytope, velocity_set
from .realize import realize
from .svg import polytope_svg


@dataclass(frozen=True)
class Budgets:
    max_cycles: int = DEFAULT_MAX_CYCLES
    patch: int = DEFAULT_PATCH_BUDGET
    prefix: int = DEFAULT_PREFIX_BUDGET


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 1 on usage errors, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 1


def _load_graph(path: str) -> DisplacementGraph:
    with open(path, "rb") as fh:
        return parse_dgf(fh.read())


def _polytope_text(p: Polytope, note: str | None = None) -> str:
    lines = [f"dim {p.dim}"]
    if p.is_empty:
        lines.append("empty polytope" + (f" ({note})" if note else ""))
    else:
        for v in p.vertices:
            lines.append("vertex " + " ".join(format_rational(c) for c in v))
        if p.facets is not None:
            for f in p.facets:
                lines.append(
                    "facet " + " ".join(str(c) for c in f.normal) + f" <= {f.offset}"
                )
    return "\n".join(lines) + "\n"


def _report_text(g: DisplacementGraph, budgets: Budgets) -> str:
    rep = connectivity_report(g, max_cycles=budgets.max_cycles)
    cycles = enumerate_cycles(g, budgets.max_cycles)
    lines = [
        f"vertices {len(g.vertices)}",
        f"edges {len(g.edges)}",
        f"verdict {rep.verdict}",
        f"scc_count {rep.scc_count}",
        f"cycle_lattice_rank {rep.cycle_lattice_rank}",
        f"lattice_index {rep.lattice_index if rep.lattice_index is not None else '-'}",
        f"cone_full {'true' if rep.cone_full else 'false'}",
        f"cycles {len(cycles)}",
    ]
    vels = basic_velocities(g, budgets.max_cycles)
    for v in vels:
        lines.append("velocity " + " ".join(format_rational(c) for c in v))
    if rep.scc_count == 1:
        poly = velocity_polytope(g, max_cycles=budgets.max_cycles)
        lines.append(_polytope_text(poly, note="no cycles").rstrip("\n"))
        try:
            an = anisotropy(poly)
            lines.append(f"inradius2 {format_rational(an.inradius_sq)}")
            lines.append(f"circumradius2 {format_rational(an.circumradius_sq)}")
            lines.append(f"isotropic {'true' if an.isotropic else 'false'}")
        except ValueError as exc:
            lines.append(f"anisotropy unavailable ({exc})")
    else:
        vset = velocity_set(g, max_cycles=budgets.max_cycles)
        lines.append(f"components {len(vset.components)}")
    return "\n".join(lines) + "\n"


def _connectivity_text(g: DisplacementGraph, budgets: Budgets) -> str:
    rep = connectivity_report(g, max_cycles=budgets.max_cycles)
    return (
        f"verdict {rep.verdict}\n"
        f"scc_count {rep.scc_count}\n"
        f"cycle_lattice_rank {rep.cycle_lattice_rank}\n"
        f"lattice_index {rep.lattice_index if rep.lattice_index is not None else '-'}\n"
        f"cone_full {'true' if rep.cone_full else 'false'}\n"
    )


def _cycle_route(g: DisplacementGraph, cycle: Cycle) -> str:
    parts = [g.vertices[g.edges[cycle.edges[0]].source]]
    for eid in cycle.edges:
        parts.append(f"-e{eid}->")
        parts.append(g.vertices[g.edges[eid].target])
    return " ".join(parts)


def _parse_rationals(text: str) -> list[Fraction]:
    return [parse_rational(tok) for tok in text.split(",") if tok.strip()]


def _parse_metric(text: str) -> list[list[Fraction]]:
    return [_parse_rationals(row) for row in text.split(";") if row.strip()]


def cmd_polytope(args: argparse.Namespace, budgets: Budgets) -> int:
    g = _load_graph(args.graph)
    sccs_single = connectivity_report(g, max_cycles=budgets.max_cycles).scc_count == 1
    if sccs_single:
        poly = velocity_polytope(g, max_cycles=budgets.max_cycles)
        if args.svg:
            with open(args.svg, "w") as fh:
                fh.write(polytope_svg(poly))
        if args.json:
            sys.stdout.write(polytope_to_json(poly))
        else:
            sys.stdout.write(_polytope_text(poly, note="no cycles, so no trajectory exists"))
        return 0
    if args.svg:
        return _fail("--svg requires a strongly connected quotient graph")
    vset = velocity_set(g, max_cycles=budgets.max_cycles)
    comps = strongly_connected_components(g)
    if args.json:
        payload = {
            "dim": vset.dim,
            "components": [
                {
                    "scc": comp_id,
                    "vertices": [g.vertices[v] for v in comps[comp_id]],
                    "polytope": polytope_to_dict(poly),
                }
                for comp_id, poly in vset.components
            ],
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        lines = [f"dim {vset.dim}", f"components {len(vset.components)}"]
        for comp_id, poly in vset.components:
            names = ",".join(g.vertices[v] for v in comps[comp_id])
            lines.append(f"component {comp_id} vertices {names}")
            lines.append(_polytope_text(poly).rstrip("\n"))
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_norm(args: argparse.Namespace, budgets: Budgets) -> int:
    g = _load_graph(args.graph)
    rep = connectivity_report(g, max_cycles=budgets.max_cycles)
    if rep.verdict != VERDICT_STRONG:
        sys.stderr.write(_connectivity_text(g, budgets))
        print(f"error: graph is {rep.verdict}, not {VERDICT_STRONG}", file=sys.stderr)
        return 3
    x = tuple(args.x)
    poly = velocity_polytope(g, max_cycles=budgets.max_cycles)
    value = gauge_norm(poly, [Fraction(c) for c in x])
    norm_text = "inf" if value is None else format_rational(value)
    payload: dict = {"norm": norm_text}
    lines = [norm_text]
    if args.oracle:
        oracle = gamma_norm_oracle(g, x, args.n, patch_budget=budgets.patch)
        payload["n"] = args.n
        payload["oracle"] = format_rational(oracle)
        lines.append(f"oracle {format_rational(oracle)}")
        if value is not None:
            gap = abs(oracle - value)
            payload["gap"] = format_rational(gap)
            lines.append(f"gap {format_rational(gap)}")
    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_cycles(args: argparse.Namespace, budgets: Budgets) -> int:
    g = _load_graph(args.graph)
    cycles = enumerate_cycles(g, budgets.max_cycles)
    if args.json:
        payload = {"count": len(cycles), "cycles": [list(c.edges) for c in cycles]}
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        for c in cycles:
            print(_cycle_route(g, c))
        print(f"cycles {len(cycles)}")
    return 0


def cmd_simulate(args: argparse.Namespace, budgets: Budgets) -> int:
    g = _load_graph(args.graph)
    weights = _parse_rationals(args.weights)
    cycles = enumerate_cycles(g, budgets.max_cycles)
    if args.cycles:
        indices = [int(tok) for tok in args.cycles.split(",") if tok.strip()]
    else:
        indices = list(range(len(weights)))
    if len(indices) != len(weights):
        return _fail("number of weights must match number of cycle indices")
    try:
        chosen = [cycles[i] for i in indices]
    except IndexError:
        return _fail(f"cycle index out of range (graph has {len(cycles)} cycles)")
    plan = build_plan(g, list(zip(chosen, weights)))
    prefix = schedule(plan, args.kmax, budget=budgets.prefix)
    if not prefix:
        return _fail("scheduled prefix is empty; increase --kmax")
    target = [Fraction(0)] * g.dim
    for cycle, weight in plan.cycles:
        disp = path_displacement(g, cycle.edges)
        for j in range(g.dim):
            target[j] += weight * Fraction(disp[j], cycle.length)
    vel = empirical_velocity(g, prefix)
    gap = max(abs(a - b) for a, b in zip(vel, target))
    poly = velocity_polytope(g, max_cycles=budgets.max_cycles)
    dist = convergence_check(g, prefix, poly)
    payload = {
        "target": [format_rational(c) for c in target],
        "steps": len(prefix),
        "velocity": [format_rational(c) for c in vel],
        "target_gap": format_rational(gap),
        "polytope_gap": format_rational(dist),
    }
    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        print("target " + " ".join(payload["target"]))
        print(f"steps {len(prefix)}")
        print("velocity " + " ".join(payload["velocity"]))
        print(f"target_gap {payload['target_gap']}")
        print(f"polytope_gap {payload['polytope_gap']}")
    return 0


def cmd_realize(args: argparse.Namespace, budgets: Budgets) -> int:
    with open(args.polytope, "r") as fh:
        poly = polytope_from_json(fh.read())
    sys.stdout.write(serialize_dgf(realize(poly)))
    return 0


def cmd_check_morphism(args: argparse.Namespace, budgets: Budgets) -> int:
    src = _load_graph(args.source)
    dst = _load_graph(args.dest)
    p_src = velocity_polytope(src, max_cycles=budgets.max_cycles)
    p_dst = velocity_polytope(dst, max_cycles=budgets.max_cycles)
    if contains_polytope(p_dst, p_src):
        print("inconclusive")
    else:
        print("morphism impossible")
    return 0


def cmd_anisotropy(args: argparse.Namespace, budgets: Budgets) -> int:
    g = _load_graph(args.graph)
    poly = velocity_polytope(g, max_cycles=budgets.max_cycles)
    metric = _parse_metric(args.metric) if args.metric else None
    an = anisotropy(poly, metric)
    payload = {
        "inradius2": format_rational(an.inradius_sq),
        "circumradius2": format_rational(an.circumradius_sq),
        "isotropic": an.isotropic,
    }
    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        print(f"inradius2 {payload['inradius2']}")
        print(f"circumradius2 {payload['circumradius2']}")
        print(f"isotropic {'true' if an.isotropic else 'false'}")
    return 0


def cmd_report(args: argparse.Namespace, budgets: Budgets) -> int:
    g = _load_graph(args.graph)
    if args.json:
        rep = connectivity_report(g, max_cycles=budgets.max_cycles)
        payload: dict = {
            "vertices": list(g.vertices),
            "edges": len(g.edges),
            "verdict": rep.verdict,
            "scc_count": rep.scc_count,
            "cycle_lattice_rank": rep.cycle_lattice_rank,
            "lattice_index": rep.lattice_index,
            "cone_full": rep.cone_full,
            "cycles": len(enumerate_cycles(g, budgets.max_cycles)),
            "basic_velocities": [
                [format_rational(c) for c in v] for v in basic_velocities(g, budgets.max_cycles)
            ],
        }
        if rep.scc_count == 1:
            poly = velocity_polytope(g, max_cycles=budgets.max_cycles)
            payload["polytope"] = polytope_to_dict(poly)
            try:
                an = anisotropy(poly)
                payload["anisotropy"] = {
                    "inradius2": format_rational(an.inradius_sq),
                    "circumradius2": format_rational(an.circumradius_sq),
                    "isotropic": an.isotropic,
                }
            except ValueError:
                payload["anisotropy"] = None
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(_report_text(g, budgets))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="velo", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("polytope", help="velocity polytope of a graph (per SCC if disconnected)")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.add_argument("--text", action="store_true", help="default output format")
    p.add_argument("--svg", metavar="PATH", help="write a 2-d SVG rendering")
    p.set_defaults(func=cmd_polytope)

    p = sub.add_parser("norm", help="growth norm of an integer direction")
    p.add_argument("graph")
    p.add_argument("x", nargs="+", type=int)
    p.add_argument("--n", type=int, default=8, help="oracle sample index")
    p.add_argument("--oracle", action="store_true", help="also run the BFS oracle")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("cycles", help="list canonical simple cycles")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("simulate", help="schedule a weighted cycle mixture and measure it")
    p.add_argument("graph")
    p.add_argument("--weights", required=True, help="comma-separated positive rationals summing to 1")
    p.add_argument("--cycles", help="comma-separated canonical cycle indices (default: first ones)")
    p.add_argument("--kmax", type=int, default=16)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("realize", help="emit a graph realizing a polytope JSON file")
    p.add_argument("polytope")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("check-morphism", help="velocity obstruction to graph morphisms")
    p.add_argument("source")
    p.add_argument("dest")
    p.set_defaults(func=cmd_check_morphism)

    p = sub.add_parser("anisotropy", help="in/circumradius of the velocity polytope")
    p.add_argument("graph")
    p.add_argument("--metric", help="rational matrix, rows separated by ';', entries by ','")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_anisotropy)

    p = sub.add_parser("report", help="one-shot structural and geometric report")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    budget_env = os.environ.get("VELO_BUDGET")
    if budget_env is not None:
        try:
            value = int(budget_env)
            if value < 1:
                raise ValueError
        except ValueError:
            return _fail(f"VELO_BUDGET must be a positive integer, got {budget_env!r}")
        budgets = Budgets(max_cycles=value, patch=value, prefix=value)
    else:
        budgets = Budgets()
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 1
    try:
        return args.func(args, budgets)
    except DgfError as exc:
        return _fail(str(exc))
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotStronglyConnectedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (VeloError, ValueError, OSError, json.JSONDecodeError) as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
