"""Acceptance suite: one test per criterion, each emitting a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v``; the lines are collected into an
"acceptance criteria" section at the end of the terminal report.
"""

from __future__ import annotations

import math
import random
import time

import pytest
from conftest import ACCEPTANCE_LINES, NAMED, udg

from lveds.domination import (
    BudgetExceeded,
    DominationScope,
    all_lveds_of_size,
    min_lveds_search,
    three_layer_mis_lveds,
    verify_lveds,
)
from lveds.generate import GeneratorSpec, generate_random_instance
from lveds.ptas import (
    InvariantViolation,
    PtasConfig,
    build_two_separated_collection,
    collection_violations,
    ptas_min_lveds,
)
from lveds.reduction import (
    SHIPPED,
    ReductionError,
    all_vertex_covers,
    build_reduction_instance,
    instance_violations,
    lveds_to_vertex_cover,
    segment_counts,
    shipped_embedding,
    vertex_cover_to_lveds,
)

SUITE_SIZE = 1000
SUITE_SEED = 20240601
SMALL_COUNT = 150
SMALL_SEED = 7
ORACLE_BUDGET = 20_000_000


def report(tag: str, title: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {tag}: {title} | {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def full(g):
    return DominationScope.full(g)


def _random_suite():
    """Random UDGs with n in [2, 200]; side set from a target mean degree in [0.3, 15]."""
    rng = random.Random(SUITE_SEED)
    for i in range(SUITE_SIZE):
        n = rng.randint(2, 200)
        degree = rng.uniform(0.3, 15.0)
        side = max(0.5, math.sqrt(n * math.pi / degree))
        pts = generate_random_instance(GeneratorSpec(n=n, side=side, seed=rng.getrandbits(63)))
        yield i, udg(pts)


@pytest.fixture(scope="module")
def random_graphs():
    return list(_random_suite())


@pytest.fixture(scope="module")
def collections(random_graphs):
    """One collection per suite graph, epsilon cycling so several stopping ratios are exercised."""
    out = []
    for i, g in random_graphs:
        cfg = PtasConfig(epsilon=(0.25, 0.5, 1.0, 2.0)[i % 4])
        try:
            coll = build_two_separated_collection(g, cfg, check=False)
        except InvariantViolation as exc:
            out.append((i, g, cfg, None, str(exc)))
            continue
        out.append((i, g, cfg, coll, None))
    return out


def test_oracle_ground_truth():
    expected = {"K2": 2, "P3": 3, "C4": 3, "K1,3": 3, "K4": 3}
    got = {}
    for name in expected:
        g = udg(NAMED[name])
        sol = min_lveds_search(full(g)).vertices
        got[name] = len(sol) if verify_lveds(full(g), sol).valid else -1
    report("oracle-ground-truth", "exact minimum sizes on K2, P3, C4, K1,3, K4", got == expected, f"sizes {got}")


def test_three_layer_heuristic_always_valid(random_graphs):
    failures = []
    ns = []
    for i, g in random_graphs:
        ns.append(g.n)
        if not verify_lveds(full(g), three_layer_mis_lveds(g, range(g.n))).valid:
            failures.append(i)
    report(
        "three-layer-validity",
        f"heuristic output verifies on {len(random_graphs)} random UDGs",
        len(random_graphs) >= 1000 and not failures and min(ns) >= 2 and max(ns) <= 200,
        f"n in [{min(ns)}, {max(ns)}], failures {failures[:10]}",
    )


def test_packing_bound(collections):
    checks = sum(c.telemetry.bound_checks for *_, c, _ in collections if c is not None)
    violations = [v for *_, c, _ in collections if c is not None for v in c.telemetry.bound_violations]
    raised = [(i, err) for i, _, _, c, err in collections if c is None]
    report(
        "packing-bound",
        "|L(ball r)| <= 3(2r+1)^2 in every radius step",
        checks > 0 and not violations and not raised,
        f"{checks} checks, {len(violations)} violations, {len(raised)} aborted",
    )


def test_collection_structure(collections):
    bad = []
    pieces = 0
    for i, g, cfg, coll, err in collections:
        if coll is None:
            bad.append((i, err))
            continue
        pieces += len(coll)
        v = collection_violations(g, coll, cfg.rho)
        if v:
            bad.append((i, v[:3]))
    report(
        "separated-collection",
        "2-separation, S within T, disjoint N[S], edge coverage",
        not bad,
        f"{len(collections)} instances, {pieces} pieces, violations {bad[:3]}",
    )


def test_ratio_at_desk_scale():
    rng = random.Random(SMALL_SEED)
    solved = 0
    skipped = 0
    worst = 0.0
    bad = []
    repairs = 0
    t0 = time.perf_counter()
    for i in range(SMALL_COUNT):
        n = rng.randint(4, 16)
        side = rng.uniform(1.0, 4.5)
        g = udg(generate_random_instance(GeneratorSpec(n=n, side=side, seed=rng.getrandbits(63))))
        if g.m == 0:
            skipped += 1
            continue
        try:
            opt = len(min_lveds_search(full(g), ORACLE_BUDGET).vertices)
        except BudgetExceeded:
            skipped += 1
            continue
        solved += 1
        for eps in (0.5, 1.0):
            res = ptas_min_lveds(g, PtasConfig(epsilon=eps, exact_local=True))
            repairs += len(res.repairs)
            worst = max(worst, res.size / opt)
            if not res.verdict.valid or res.size > (1 + eps) * opt or res.repairs:
                bad.append((i, eps, res.size, opt, len(res.repairs)))
    report(
        "ratio-desk-scale",
        "exact-local scheme within (1+eps) of the optimum, no repairs",
        solved >= 100 and not bad,
        f"{solved} instances solved ({skipped} skipped), worst ratio {worst:.3f}, repairs {repairs}, "
        f"violations {bad[:5]}, {time.perf_counter() - t0:.1f}s",
    )


def _minimum_covers(emb):
    covers = all_vertex_covers(emb.source_vertices, emb.source_edges)
    k = min(len(c) for c in covers)
    return [c for c in covers if len(c) == k]


def test_forward_map():
    notes = []
    ok = True
    for name in ("single_edge", "path3", "cycle4"):
        inst = build_reduction_instance(shipped_embedding(name))
        failed = []
        covers = _minimum_covers(inst.embedding)
        for cover in covers:
            sol = vertex_cover_to_lveds(inst, cover)
            if not (verify_lveds(full(inst.graph), sol).valid and len(sol) == inst.target_size(len(cover))):
                failed.append(cover)
        ok &= not failed
        notes.append(f"{name}: {len(covers) - len(failed)}/{len(covers)} minimum covers map to a valid set"
                     + (f" (invalid for {failed})" if failed else ""))
    report("forward-map", "cover C maps to a valid set of size |C|+3n+6l", ok, "; ".join(notes))


def test_single_edge_equivalence():
    inst = build_reduction_instance(shipped_embedding("single_edge"))
    scope = full(inst.graph)
    t0 = time.perf_counter()
    res = min_lveds_search(scope)
    none_at_12 = not all_lveds_of_size(scope, 12)
    minimum = all_lveds_of_size(scope, 13)
    counts = [min(segment_counts(inst, s)) for s in minimum]
    ok = (
        len(inst.scaled) == 21
        and (inst.n, inst.l, inst.m) == (2, 1, 1)
        and len(res.vertices) == 13 == inst.target_size(1)
        and res.sizes_exhausted == list(range(3, 13))
        and none_at_12
        and minimum
        and min(counts) >= 6
    )
    report(
        "single-edge-equivalence",
        "no valid set of size 12, one of size 13 = k+3n+6l",
        bool(ok),
        f"oracle size {len(res.vertices)} after {res.examined} subsets, {len(minimum)} minimum sets, "
        f"segment counts {sorted(set(counts))}, {time.perf_counter() - t0:.1f}s",
    )


def test_round_trip():
    notes = []
    ok = True
    for name in SHIPPED:
        inst = build_reduction_instance(shipped_embedding(name))
        covers = all_vertex_covers(inst.embedding.source_vertices, inst.embedding.source_edges)
        failed = []
        for cover in covers:
            try:
                back = lveds_to_vertex_cover(inst, vertex_cover_to_lveds(inst, cover)).cover
            except ReductionError:
                failed.append(cover)
                continue
            if len(back) > len(cover):
                failed.append(cover)
        ok &= not failed
        notes.append(f"{name}: {len(covers) - len(failed)}/{len(covers)}" + (f" (fails {failed})" if failed else ""))
    report("round-trip", "reverse(forward(C)) is a cover no larger than C", ok, "; ".join(notes))


def test_instance_geometry():
    notes = []
    bad = {}
    for name in SHIPPED:
        inst = build_reduction_instance(shipped_embedding(name))
        v = instance_violations(inst)
        meta = inst.metadata()
        if meta["A"] != 10 * inst.l + inst.m or meta["S"] != 4 * inst.n:
            v.append("count mismatch")
        if v:
            bad[name] = v[:3]
        notes.append(f"{name} |A|={meta['A']} |S|={meta['S']}")
    report("instance-geometry", "chain paths, no cross-chain adjacency, |A|=10l+m, |S|=4n", not bad,
           ", ".join(notes) + (f"; violations {bad}" if bad else ""))

