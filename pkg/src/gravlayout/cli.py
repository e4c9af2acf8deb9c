"""Command-line front end: layout runs, graph generators, and metrics reports."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .arcs import layout_lombardi
from .centrality import CENTRALITY_KINDS, compute_centrality, normalize_mass
from .engine import LayoutConfig, Schedule, run_layout
from .generators import generate_forest, generate_random_tree
from .graphs import Graph, GraphParseError, parse_edge_list, parse_graph_json, serialize_edge_list
from .metrics import compute_metrics
from .render import color_for, render_svg

SCHEDULE_NAMES = {
    "stepped": Schedule.STEPPED_ITERATION,
    "equilibrium": Schedule.STEPPED_EQUILIBRIUM,
    "constant": Schedule.CONSTANT,
    "none": Schedule.NONE,
}


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _read_graph(path: str, fmt: str) -> Graph:
    text = _read_text(path)
    if fmt == "auto":
        fmt = "json" if path.endswith(".json") or text.lstrip().startswith("{") else "edges"
    if fmt == "json":
        return parse_graph_json(text)
    return parse_edge_list(text)


def _build_config(args: argparse.Namespace) -> LayoutConfig:
    schedule = SCHEDULE_NAMES[args.schedule]
    gamma_const = args.gamma if args.gamma is not None else 0.0
    return LayoutConfig(
        k=args.k,
        i_max=args.imax,
        sigma=args.sigma,
        gamma_max=args.gamma_max,
        schedule=schedule,
        gamma_const=gamma_const,
        block_len=args.block,
        gamma_step=args.gamma_step,
        equilibrium_eps=args.eps,
        max_iterations=args.max_iterations,
        seed=args.seed,
    )


def _resolved_config(args: argparse.Namespace) -> dict:
    return {
        "input": args.graph_in,
        "format": args.format,
        "centrality": args.centrality,
        "k": args.k,
        "imax": args.imax,
        "sigma": args.sigma,
        "gamma_max": args.gamma_max,
        "schedule": args.schedule,
        "gamma": args.gamma,
        "block": args.block,
        "gamma_step": args.gamma_step,
        "eps": args.eps,
        "max_iterations": args.max_iterations,
        "seed": args.seed,
        "mass_floor": args.mass_floor,
        "lombardi": args.lombardi,
    }


def cmd_layout(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph_in, args.format)
    cent = compute_centrality(g, args.centrality)
    mass = normalize_mass(cent, args.mass_floor)
    config = _build_config(args)
    if args.lombardi:
        positions, arcs = layout_lombardi(g, mass, config)
    else:
        positions = run_layout(g, mass, config)
        arcs = None
    if args.svg:
        if g.vertex_count:
            lo = float(cent.values.min())
            hi = float(cent.values.max())
            colors = [color_for(float(v), lo, hi) for v in cent.values]
        else:
            colors = None
        svg = render_svg(g, positions, colors, arcs, k=args.k, show_labels=args.labels)
        _write_text(args.svg, svg)
    if args.metrics:
        report = compute_metrics(g, positions, cent).as_dict()
        report["config"] = _resolved_config(args)
        _write_text(args.metrics, json.dumps(report, indent=2) + "\n")
    if args.positions:
        payload = {"positions": [[float(x), float(y)] for x, y in np.asarray(positions)]}
        _write_text(args.positions, json.dumps(payload, indent=2) + "\n")
    return 0


def cmd_gen_tree(args: argparse.Namespace) -> int:
    g = generate_random_tree(args.n, args.seed)
    _write_text(args.out, serialize_edge_list(g))
    return 0


def cmd_gen_forest(args: argparse.Namespace) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError as exc:
        raise ValueError(f"bad --sizes value {args.sizes!r}: {exc}") from exc
    g = generate_forest(sizes, args.seed)
    _write_text(args.out, serialize_edge_list(g))
    return 0


def cmd_metrics(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph_in, args.format)
    payload = json.loads(_read_text(args.positions))
    positions = np.asarray(payload["positions"], dtype=float)
    if positions.shape != (g.vertex_count, 2):
        raise ValueError(
            f"positions shape {positions.shape} does not match {g.vertex_count} vertices"
        )
    cent = compute_centrality(g, args.centrality)
    report = compute_metrics(g, positions, cent).as_dict()
    report["config"] = {
        "input": args.graph_in,
        "format": args.format,
        "positions": args.positions,
        "centrality": args.centrality,
    }
    _write_text(args.out, json.dumps(report, indent=2) + "\n")
    return 0


def _add_layout_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--in", dest="graph_in", required=True, help="input graph ('-' for stdin)")
    p.add_argument("--format", choices=("auto", "edges", "json"), default="auto")
    p.add_argument("--centrality", choices=CENTRALITY_KINDS, default="degree")
    p.add_argument("--k", type=float, default=80.0, help="natural edge length")
    p.add_argument("--imax", type=float, default=10.0, help="impulse magnitude cap")
    p.add_argument("--sigma", type=float, default=0.1, help="displacement scale")
    p.add_argument("--gamma-max", type=float, default=2.5, dest="gamma_max")
    p.add_argument("--schedule", choices=tuple(SCHEDULE_NAMES), default="stepped")
    p.add_argument("--gamma", type=float, default=None, help="gravity level for --schedule constant")
    p.add_argument("--block", type=int, default=200, help="iterations per gravity step")
    p.add_argument("--gamma-step", type=float, default=0.2, dest="gamma_step")
    p.add_argument("--eps", type=float, default=1.0, help="equilibrium impulse tolerance")
    p.add_argument("--max-iterations", type=int, default=3000, dest="max_iterations")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mass-floor", type=float, default=0.05, dest="mass_floor")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gravlayout",
        description="Force-directed graph layout with centrality-weighted gravity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_layout = sub.add_parser("layout", help="lay out a graph; write SVG and metrics")
    _add_layout_flags(p_layout)
    p_layout.add_argument("--svg", help="write an SVG drawing here")
    p_layout.add_argument("--metrics", help="write a JSON metrics report here")
    p_layout.add_argument("--positions", help="write final positions as JSON here")
    p_layout.add_argument("--lombardi", action="store_true", help="circular-arc edge post-pass")
    p_layout.add_argument("--labels", action="store_true", help="draw vertex labels")
    p_layout.set_defaults(func=cmd_layout)

    p_tree = sub.add_parser("gen-tree", help="generate a uniform random tree")
    p_tree.add_argument("--n", type=int, required=True)
    p_tree.add_argument("--seed", type=int, default=0)
    p_tree.add_argument("--out", default="-")
    p_tree.set_defaults(func=cmd_gen_tree)

    p_forest = sub.add_parser("gen-forest", help="generate a random forest")
    p_forest.add_argument("--sizes", required=True, help="comma-separated component sizes")
    p_forest.add_argument("--seed", type=int, default=0)
    p_forest.add_argument("--out", default="-")
    p_forest.set_defaults(func=cmd_gen_forest)

    p_metrics = sub.add_parser("metrics", help="metrics report for an existing layout")
    p_metrics.add_argument("--in", dest="graph_in", required=True)
    p_metrics.add_argument("--format", choices=("auto", "edges", "json"), default="auto")
    p_metrics.add_argument("--positions", required=True, help="positions JSON from layout")
    p_metrics.add_argument("--centrality", choices=CENTRALITY_KINDS, default="degree")
    p_metrics.add_argument("--out", default="-")
    p_metrics.set_defaults(func=cmd_metrics)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "layout" and args.schedule == "constant" and args.gamma is None:
        print("error: --schedule constant requires --gamma", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (GraphParseError, OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())
