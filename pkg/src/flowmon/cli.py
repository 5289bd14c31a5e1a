"""Command-line interface.

Subcommands: gen, reduce, solve, exact, infer, kernel, hardness, bench.
Exit codes: 0 success, 2 parse/validation error, 3 size-guard refusal,
4 inconsistent measurements. All output is line-oriented plain text and
deterministic for fixed inputs and seeds (bench timings excepted).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench as bench_mod
from . import generators
from .errors import FlowmonError, ParseError, ValidationError
from .flowsim import infer
from .graph import Graph
from .hardness import lemma1_check, verify_star_canonical, verify_star_random
from .kernel import kernel_graph
from .reduce import preprocess
from .solvers import SolverConfig, Solution, exact, sigma_greedy, solve_pipeline
from .textio import (
    format_graph,
    format_readings,
    format_reduction_map,
    parse_edge_id_list,
    parse_graph,
    parse_readings,
)
from .weights import Weight


def _read_graph(path: str) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return parse_graph(text)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_gen(args) -> int:
    lo, hi = _parse_weight_range(args.weights)
    spec = generators.GeneratorSpec(
        family=args.family,
        k=args.k,
        epsilon=Weight.parse(args.epsilon),
        n=args.n,
        m=args.m,
        seed=args.seed,
        min_degree=args.min_degree,
        simple=args.simple,
        weight_lo=lo,
        weight_hi=hi,
    )
    g = generators.build_instance(spec)
    if args.family == "fig1" and args.readings_out:
        _, _, readings = generators.gen_fig1()
        Path(args.readings_out).write_text(format_readings(readings))
    _emit(format_graph(g), args.output)
    return 0


def _parse_weight_range(text: str) -> tuple[int, int]:
    try:
        lo, _, hi = text.partition(":")
        return (int(lo), int(hi)) if hi else (int(lo), int(lo))
    except ValueError:
        raise ValidationError(f"bad weight range {text!r}; expected LO:HI") from None


def _cmd_reduce(args) -> int:
    g = _read_graph(args.graph)
    reduced, rmap = preprocess(g)
    _emit(format_graph(reduced), args.output)
    map_text = format_reduction_map(rmap, g.vertex_count, len(g.edges))
    if args.map_out:
        Path(args.map_out).write_text(map_text)
    else:
        sys.stdout.write(map_text)
    return 0


def _solution_lines(sol: Solution, trace: bool) -> str:
    lines = [f"M {e}" for e in sorted(sol.monitors)]
    lines += [f"D {e}" for e in sorted(sol.determined_extras)]
    lines += [f"Z {e}" for e in sorted(sol.zero_flow)]
    lines.append(f"GAIN {sol.gain}")
    if trace and sol.trace:
        for i, s in enumerate(sol.trace.steps, start=1):
            p = ",".join(map(str, sorted(s.monitors_placed)))
            y = ",".join(map(str, sorted(s.collected)))
            lines.append(
                f"T {i} P {p} Y {y} G {s.step_gain} C {s.candidates}"
            )
    return "\n".join(lines) + "\n"


def _make_algo(name: str):
    if name == "exact":
        return exact
    if name == "greedy1":
        sigma = 1
    elif name == "greedy2":
        sigma = 2
    elif name.startswith("greedy:"):
        try:
            sigma = int(name.split(":", 1)[1])
        except ValueError:
            raise ValidationError(f"bad solver name {name!r}") from None
    else:
        raise ValidationError(f"unknown solver {name!r}")
    return lambda g, k: sigma_greedy(g, SolverConfig(k=k, sigma=sigma))


def _cmd_solve(args) -> int:
    g = _read_graph(args.graph)
    sol = solve_pipeline(g, args.k, _make_algo(args.algo))
    _emit(_solution_lines(sol, args.trace), args.output)
    return 0


def _cmd_exact(args) -> int:
    g = _read_graph(args.graph)
    sol = exact(g, args.k)
    _emit(_solution_lines(sol, trace=False), args.output)
    return 0


def _cmd_infer(args) -> int:
    g = _read_graph(args.graph)
    monitors = parse_edge_id_list(args.monitors)
    try:
        readings = parse_readings(Path(args.readings).read_text())
    except OSError as exc:
        raise ParseError(f"cannot read {args.readings}: {exc}") from None
    result = infer(g, monitors, readings)
    lines = [f"F {e} {result.determined[e]}" for e in sorted(result.determined)]
    lines += [f"U {e}" for e in sorted(result.undetermined)]
    lines.append(f"CONSISTENT {'yes' if result.consistent else 'no'}")
    _emit("\n".join(lines) + "\n", args.output)
    return 0 if result.consistent else 4


def _cmd_kernel(args) -> int:
    g = _read_graph(args.graph)
    kg = kernel_graph(g, parse_edge_id_list(args.monitors))
    out = format_graph(kg.graph)
    out += "".join(f"K {i} {orig}\n" for i, orig in enumerate(kg.represents))
    _emit(out, args.output)
    return 0


def _cmd_hardness(args) -> int:
    lines = []
    failed = False
    if args.lemma1:
        for n in range(1, args.max_n + 1):
            for s in range(1, n + 1):
                ok = lemma1_check(n, s)
                failed |= not ok
                lines.append(f"LEMMA1 n={n} s={s} {'PASS' if ok else 'FAIL'}")
    if args.verify_star:
        for report in verify_star_canonical(min(args.max_n, 7)):
            failed |= not report.ok
            lines.append(
                f"STAR {report.label} instances={report.instances}"
                f" checks={report.checks} mismatches={report.mismatches}"
                f" {'PASS' if report.ok else 'FAIL'}"
            )
        if args.random_instances:
            report = verify_star_random((7, 8), args.random_instances, seed=args.seed)
            failed |= not report.ok
            lines.append(
                f"STAR {report.label} instances={report.instances}"
                f" checks={report.checks} mismatches={report.mismatches}"
                f" {'PASS' if report.ok else 'FAIL'}"
            )
    if not lines:
        raise ValidationError("choose --verify-star and/or --lemma1")
    lines.append(f"OVERALL {'FAIL' if failed else 'PASS'}")
    _emit("\n".join(lines) + "\n", args.output)
    return 1 if failed else 0


def _cmd_bench(args) -> int:
    sizes = tuple(int(s) for s in args.sizes.split(","))
    sigmas = tuple(int(s) for s in args.sigma.split(","))
    rows = bench_mod.run_ladder(sizes, sigmas, args.k)
    sys.stdout.write(bench_mod.format_report(rows))
    return 0 if all(r.ok for r in rows) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="flowmon")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("family", choices=generators.FAMILIES)
    p.add_argument("-k", type=int, default=None)
    p.add_argument("-n", type=int, default=None)
    p.add_argument("-m", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--epsilon", default="0.01")
    p.add_argument("--min-degree", type=int, default=0)
    p.add_argument("--simple", action="store_true")
    p.add_argument("--weights", default="1", help="edge weight range LO:HI")
    p.add_argument("--readings-out", default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("reduce", help="strip bridges, merge, contract edge groups")
    p.add_argument("graph")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--map-out", default=None)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("solve", help="preprocess, solve, lift back")
    p.add_argument("graph")
    p.add_argument("--algo", required=True, help="greedy1|greedy2|greedy:<sigma>|exact")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--trace", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("exact", help="brute-force optimum on the raw graph")
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("infer", help="determine flows from monitor readings")
    p.add_argument("graph")
    p.add_argument("-m", "--monitors", required=True, help="comma-separated edge ids")
    p.add_argument("-r", "--readings", required=True, help="readings file")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_infer)

    p = sub.add_parser("kernel", help="contract around a monitor set")
    p.add_argument("graph")
    p.add_argument("-m", "--monitors", required=True, help="comma-separated edge ids")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_kernel)

    p = sub.add_parser("hardness", help="run the reduction verifiers")
    p.add_argument("--verify-star", action="store_true")
    p.add_argument("--lemma1", action="store_true")
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--random-instances", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_hardness)

    p = sub.add_parser("bench", help="time the pipeline, check candidate counts")
    p.add_argument("--sizes", default="12,16,20")
    p.add_argument("--sigma", default="1,2")
    p.add_argument("-k", type=int, default=4)
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FlowmonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


def main_entry() -> None:
    sys.exit(main())
