"""Benchmark harness: run the exact search, the three-layer heuristic and the scheme side by side."""

from __future__ import annotations

import csv
import io
import json
import logging
import random
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from .domination import BudgetExceeded, DominationScope, min_lveds_search, three_layer_mis_lveds, verify_lveds
from .generate import GeneratorSpec, generate_random_instance
from .geom import Point2D, UnitDiskGraph, build_unit_disk_graph
from .ptas import PtasConfig, ptas_min_lveds
from .reduction import build_reduction_instance, shipped_embedding

log = logging.getLogger(__name__)

SMALL_SUITE: dict[str, list[Point2D]] = {
    "K2": [(0, 0), (1, 0)],
    "P3": [(0, 0), (1, 0), (2, 0)],
    "C4": [(0, 0), (1, 0), (1, 1), (0, 1)],
    "K1,3": [(0, 0), (1, 0), (-1, 0), (0, 1)],
    "K4": [(0, 0), (0.5, 0), (0.5, 0.5), (0, 0.5)],
}
FIELDS = ("instance", "n", "m", "algorithm", "size", "valid", "repairs", "wall_time")


@dataclass(frozen=True)
class BenchRecord:
    instance: str
    n: int
    m: int
    algorithm: str
    size: int
    valid: bool
    repairs: int
    wall_time: float


@dataclass
class BenchInstance:
    name: str
    graph: UnitDiskGraph


def small_suite(radius: float = 1.0) -> list[BenchInstance]:
    out = [BenchInstance(name, build_unit_disk_graph(pts, radius)) for name, pts in SMALL_SUITE.items()]
    out.append(BenchInstance("single_edge_reduction", build_reduction_instance(shipped_embedding("single_edge")).graph))
    return out


def random_suite(count: int = 40, seed: int = 0, n_max: int = 16, radius: float = 1.0) -> list[BenchInstance]:
    """Desk-scale random instances: n in [4, n_max], side swept so density varies."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(4, n_max)
        side = round(rng.uniform(1.0, 4.5), 3)
        pts = generate_random_instance(GeneratorSpec(n=n, side=side, seed=rng.getrandbits(63)))
        out.append(BenchInstance(f"rand{i:03d}_n{n}_s{side:g}", build_unit_disk_graph(pts, radius)))
    return out


def _record(inst: BenchInstance, tag: str, sol: list[int], repairs: int, t: float) -> BenchRecord:
    valid = verify_lveds(DominationScope.full(inst.graph), sol).valid
    if not valid:
        raise AssertionError(f"{tag} produced an invalid set on {inst.name}")
    return BenchRecord(inst.name, inst.graph.n, inst.graph.m, tag, len(sol), valid, repairs, round(t, 6))


def run_instance(inst: BenchInstance, epsilon: float, oracle_budget: int | None = 20_000_000) -> list[BenchRecord]:
    g = inst.graph
    recs = []
    t0 = time.perf_counter()
    try:
        opt = min_lveds_search(DominationScope.full(g), oracle_budget).vertices
        recs.append(_record(inst, "oracle", opt, 0, time.perf_counter() - t0))
    except BudgetExceeded as exc:
        log.info("oracle skipped on %s: %s", inst.name, exc)

    t0 = time.perf_counter()
    h = three_layer_mis_lveds(g, range(g.n))
    recs.append(_record(inst, "alg1", h, 0, time.perf_counter() - t0))

    t0 = time.perf_counter()
    res = ptas_min_lveds(g, PtasConfig(epsilon=epsilon))
    recs.append(_record(inst, f"ptas({epsilon:g})", res.solution, len(res.repairs), time.perf_counter() - t0))
    return recs


def run_suite(instances: list[BenchInstance], epsilon: float, oracle_budget: int | None = 20_000_000) -> list[BenchRecord]:
    out = []
    for inst in instances:
        out.extend(run_instance(inst, epsilon, oracle_budget))
    return out


def format_table(records: list[BenchRecord], bold: bool = False) -> str:
    rows = [[f"{r.wall_time:.6f}" if f == "wall_time" else str(getattr(r, f)) for f in FIELDS] for r in records]
    widths = [max(len(f), *(len(row[i]) for row in rows)) if rows else len(f) for i, f in enumerate(FIELDS)]
    head = "  ".join(f.ljust(w) for f, w in zip(FIELDS, widths))
    if bold:
        head = f"\033[1m{head}\033[0m"
    lines = [head, "  ".join("-" * w for w in widths)]
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows]
    return "\n".join(lines)


def records_to_json(records: list[BenchRecord]) -> str:
    return json.dumps([asdict(r) for r in records], indent=2)


def records_to_csv(records: list[BenchRecord]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
    w.writeheader()
    for r in records:
        w.writerow(asdict(r))
    return buf.getvalue()


def write_report(records: list[BenchRecord], out_dir: str | Path, epsilon: float) -> list[Path]:
    """records.json, records.csv and the two summary figures under ``out_dir``."""
    from .plotting import plot_ratios, plot_sizes

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "records.json").write_text(records_to_json(records) + "\n")
    (out / "records.csv").write_text(records_to_csv(records))
    dicts = [asdict(r) for r in records]
    return [
        out / "records.json",
        out / "records.csv",
        plot_sizes(dicts, out / "sizes.png"),
        plot_ratios(dicts, epsilon, out / "ratios.png"),
    ]
