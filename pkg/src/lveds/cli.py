"""``lveds`` command-line interface.

Exit codes: 0 success (or a valid verdict), 1 invalid verdict, 2 bad input,
3 exact search over budget or infeasible instance.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Any

from . import __version__
from .bench import format_table, random_suite, records_to_json, run_suite, small_suite, write_report
from .domination import (
    BudgetExceeded,
    DominationScope,
    InfeasibleScope,
    min_lveds_search,
    three_layer_mis_lveds,
    verify_lveds,
)
from .generate import GeneratorError, GeneratorSpec, generate_random_instance
from .geom import GraphDomainError, PointFormatError, UnitDiskGraph, build_unit_disk_graph, format_points, read_points
from .ptas import PtasConfig, ptas_min_lveds
from .reduction import (
    SHIPPED,
    EmbeddingError,
    ReductionError,
    build_reduction_instance,
    load_embedding,
    lveds_to_vertex_cover,
    shipped_embedding,
    vertex_cover_to_lveds,
)

log = logging.getLogger("lveds")

EXIT_OK, EXIT_INVALID, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


def _emit(doc: Any) -> None:
    sys.stdout.write(json.dumps(doc, indent=2, sort_keys=False) + "\n")


def _load_graph(path: str, radius: float | None) -> UnitDiskGraph:
    pts, file_radius = read_points(path)
    r = radius if radius is not None else (file_radius if file_radius is not None else 1.0)
    return build_unit_disk_graph(pts, r)


def _read_json(path: str) -> Any:
    text = Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}: invalid JSON: {exc.msg}") from None


def read_vertex_set(path: str, n: int | None = None, keys=("vertices",)) -> list[int]:
    """A JSON list of indices, or an object holding one under one of ``keys``."""
    doc = _read_json(path)
    if isinstance(doc, dict):
        for k in keys:
            if k in doc:
                doc = doc[k]
                break
        else:
            raise InputError(f"{path}: expected a list or an object with field {' or '.join(map(repr, keys))}")
    if not isinstance(doc, list):
        raise InputError(f"{path}: vertex set must be a JSON list")
    out = []
    for i, v in enumerate(doc):
        if isinstance(v, bool) or not isinstance(v, int):
            raise InputError(f"{path}: entry [{i}] is not an integer index: {v!r}")
        if v < 0 or (n is not None and v >= n):
            raise InputError(f"{path}: entry [{i}] = {v} is outside 0..{'' if n is None else n - 1}")
        out.append(v)
    return sorted(set(out))


def _embedding(arg: str):
    if not Path(arg).exists() and arg in SHIPPED:
        return shipped_embedding(arg)
    return load_embedding(arg)


# ---------------------------------------------------------------- subcommands


def cmd_solve(a) -> int:
    g = _load_graph(a.points, a.radius)
    cfg = PtasConfig(epsilon=a.eps, exact_local=not a.heuristic_local, work_budget=a.budget)
    res = ptas_min_lveds(g, cfg)
    _emit(res.to_json(timings=a.timings))
    return EXIT_OK


def cmd_alg1(a) -> int:
    g = _load_graph(a.points, a.radius)
    sol = three_layer_mis_lveds(g, range(g.n))
    _emit({"size": len(sol), "vertices": sol})
    return EXIT_OK


def cmd_oracle(a) -> int:
    g = _load_graph(a.points, a.radius)
    res = min_lveds_search(DominationScope.full(g), a.budget)
    _emit({"size": len(res.vertices), "vertices": res.vertices, "examined": res.examined})
    return EXIT_OK


def cmd_verify(a) -> int:
    g = _load_graph(a.points, a.radius)
    sol = read_vertex_set(a.set, g.n)
    verdict = verify_lveds(DominationScope.full(g), sol)
    _emit(verdict.to_json())
    return EXIT_OK if verdict.valid else EXIT_INVALID


def cmd_reduce(a) -> int:
    emb = _embedding(a.embedding)
    inst = build_reduction_instance(emb)
    out = Path(a.out)
    out.mkdir(parents=True, exist_ok=True)
    stem = a.name or (Path(a.embedding).stem if Path(a.embedding).exists() else a.embedding)
    md = inst.metadata()
    header = f"reduction instance: n={md['n']} l={md['l']} m={md['m']} points={md['points']}"
    (out / f"{stem}.txt").write_text(format_points(inst.points, header), encoding="utf-8")
    (out / f"{stem}.json").write_text(json.dumps(inst.to_json(), indent=2) + "\n", encoding="utf-8")
    written = [str(out / f"{stem}.txt"), str(out / f"{stem}.json")]
    if not a.no_figure:
        from .plotting import plot_instance

        written.append(str(plot_instance(inst.points, inst.graph.edges, inst.labels, out / f"{stem}.png")))
    _emit({**md, "files": written})
    return EXIT_OK


def cmd_reduce_map(a) -> int:
    inst = build_reduction_instance(_embedding(a.embedding))
    if a.cover is not None:
        cover = read_vertex_set(a.cover, keys=("cover", "vertices"))
        sol = vertex_cover_to_lveds(inst, cover)
        verdict = verify_lveds(DominationScope.full(inst.graph), sol)
        _emit(
            {
                "direction": "cover_to_lveds",
                "cover": cover,
                "size": len(sol),
                "target_size": inst.target_size(len(cover)),
                "vertices": sol,
                "verdict": verdict.to_json(),
            }
        )
        return EXIT_OK if verdict.valid else EXIT_INVALID
    sol = read_vertex_set(a.lveds, len(inst.scaled))
    rev = lveds_to_vertex_cover(inst, sol)
    _emit(
        {
            "direction": "lveds_to_cover",
            "size": len(rev.cover),
            "cover": rev.cover,
            "normalized": rev.normalized,
            "steps": rev.steps,
        }
    )
    return EXIT_OK


def cmd_gen(a) -> int:
    pts = generate_random_instance(GeneratorSpec(n=a.n, side=a.side, seed=a.seed, min_sep=a.min_sep))
    header = f"n={a.n} side={a.side:g} seed={a.seed}" + (f" min_sep={a.min_sep:g}" if a.min_sep else "")
    text = format_points(pts, header)
    if a.output:
        Path(a.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bench(a) -> int:
    r = 1.0 if a.radius is None else a.radius
    insts = small_suite(r) if a.suite == "small" else random_suite(a.count, a.seed, a.n_max, r)
    recs = run_suite(insts, a.eps, a.oracle_budget)
    if a.json:
        sys.stdout.write(records_to_json(recs) + "\n")
    else:
        bold = sys.stdout.isatty() and "NO_COLOR" not in os.environ
        sys.stdout.write(format_table(recs, bold=bold) + "\n")
    if a.out:
        for p in write_report(recs, a.out, a.eps):
            log.info("wrote %s", p)
    return EXIT_OK


# ---------------------------------------------------------------- parser


def _positive(kind):
    def conv(s: str):
        v = kind(s)
        if v <= 0:
            raise argparse.ArgumentTypeError(f"must be positive, got {s}")
        return v

    return conv


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lveds", description="Liar's vertex-edge domination on unit disk graphs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--radius", type=_positive(float), default=None, help="disk radius (default 1.0, or the point file's)")
    p.add_argument("--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="run the approximation scheme")
    s.add_argument("points")
    s.add_argument("--eps", type=_positive(float), default=1.0)
    s.add_argument("--heuristic-local", action="store_true", help="use the three-layer heuristic inside each piece")
    s.add_argument("--budget", type=_positive(int), default=PtasConfig.work_budget, help="subsets per local search")
    s.add_argument("--timings", action="store_true", help="include per-phase wall clock (output no longer reproducible)")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("alg1", help="three-layer maximal independent set heuristic")
    s.add_argument("points")
    s.set_defaults(func=cmd_alg1)

    s = sub.add_parser("oracle", help="exact minimum by exhaustive search")
    s.add_argument("points")
    s.add_argument("--budget", type=_positive(int), default=None)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("verify", help="check a vertex set; exit 0 if valid, 1 if not")
    s.add_argument("points")
    s.add_argument("set")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("reduce", help="build the unit disk instance of an orthogonal embedding")
    s.add_argument("embedding", help=f"embedding JSON file or a shipped name ({', '.join(SHIPPED)})")
    s.add_argument("--out", required=True)
    s.add_argument("--name", default=None, help="output file stem")
    s.add_argument("--no-figure", action="store_true")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("reduce-map", help="map certificates between vertex cover and the reduced instance")
    s.add_argument("embedding")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--cover")
    g.add_argument("--lveds")
    s.set_defaults(func=cmd_reduce_map)

    s = sub.add_parser("gen", help="random uniform point set")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--side", type=_positive(float), required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--min-sep", type=float, default=None)
    s.add_argument("-o", "--output", default=None)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("bench", help="compare exact, heuristic and scheme sizes")
    s.add_argument("--suite", choices=["small", "random"], default="small")
    s.add_argument("--eps", type=_positive(float), default=1.0)
    s.add_argument("--count", type=_positive(int), default=40)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--n-max", type=_positive(int), default=16)
    s.add_argument("--oracle-budget", type=_positive(int), default=20_000_000)
    s.add_argument("--json", action="store_true", help="print records as JSON instead of a table")
    s.add_argument("--out", default=None, help="directory for records.json, records.csv and figures")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    logging.basicConfig(level=a.log_level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return a.func(a)
    except (BudgetExceeded, InfeasibleScope) as exc:
        print(f"lveds: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except EmbeddingError as exc:
        print("lveds: invalid embedding:\n  " + "\n  ".join(exc.problems), file=sys.stderr)
        return EXIT_INPUT
    except ReductionError as exc:
        print(f"lveds: {exc}", file=sys.stderr)
        if exc.detail:
            print(json.dumps(exc.detail), file=sys.stderr)
        return EXIT_INPUT
    except (InputError, PointFormatError, GraphDomainError, GeneratorError, OSError, ValueError) as exc:
        print(f"lveds: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
