import pytest
from conftest import point_sets, udg
from hypothesis import given
from hypothesis import strategies as st

from lveds.domination import DominationScope, brute_force_min_lveds, verify_lveds
from lveds.generate import GeneratorSpec, generate_random_instance
from lveds.geom import hop_distance
from lveds.ptas import (
    PtasConfig,
    RadiusCapExceeded,
    Telemetry,
    build_two_separated_collection,
    collection_violations,
    grow_radius,
    local_optimal_lveds,
    mis_size_bound,
    ptas_min_lveds,
)

CLIQUE5 = [(0, 0), (0.5, 0), (0.5, 0.5), (0, 0.5), (0.25, 0.25)]


def test_mis_size_bound():
    assert [mis_size_bound(r) for r in (0, 1, 2)] == [3, 27, 75]
    with pytest.raises(ValueError):
        mis_size_bound(-1)


def test_epsilon_must_be_positive():
    with pytest.raises(ValueError):
        PtasConfig(epsilon=0)


def test_grow_radius_on_clique():
    g = udg(CLIQUE5)
    gr = grow_radius(g, 0, range(5), rho=2.0)
    assert gr.radius == 1 and gr.inner == gr.outer


def test_grow_radius_single_edge():
    gr = grow_radius(udg([(0, 0), (1, 0)]), 0, [0, 1], rho=1.5)
    assert gr.radius == 1 and len(gr.inner) == len(gr.outer) == 2


def test_grow_radius_rejects_isolated_center():
    with pytest.raises(ValueError):
        grow_radius(udg([(0, 0), (3, 0)]), 0, [0, 1], rho=2.0)


def test_radius_cap():
    # a long path keeps growing while rho is tiny
    g = udg([(i, 0) for i in range(60)])
    with pytest.raises(RadiusCapExceeded):
        grow_radius(g, 0, range(60), rho=1.01, r_cap=2)


def test_empty_collection():
    assert len(build_two_separated_collection(udg([]), PtasConfig())) == 0
    res = ptas_min_lveds(udg([]))
    assert res.solution == [] and res.verdict.valid


def test_two_far_cliques():
    pts = CLIQUE5 + [(x + 50, y) for x, y in CLIQUE5]
    coll = build_two_separated_collection(udg(pts), PtasConfig())
    assert [(p.inner, p.outer) for p in coll.pieces] == [([0, 1, 2, 3, 4],) * 2, ([5, 6, 7, 8, 9],) * 2]


def test_single_clique_one_piece():
    assert len(build_two_separated_collection(udg(CLIQUE5), PtasConfig())) == 1


def test_local_examples():
    cfg = PtasConfig()
    assert local_optimal_lveds(udg([(0, 0), (1, 0)]), [0, 1], cfg).vertices == [0, 1]
    assert local_optimal_lveds(udg([(0, 0), (1, 0), (2, 0)]), [0, 1, 2], cfg).vertices == [0, 1, 2]
    assert local_optimal_lveds(udg([(0, 0), (3, 0)]), [0, 1], cfg).vertices == []


def test_local_budget_falls_back_to_heuristic():
    g = udg([(i * 0.9, 0) for i in range(14)])
    loc = local_optimal_lveds(g, range(14), PtasConfig(work_budget=10))
    assert not loc.optimal
    assert verify_lveds(DominationScope.local(g, range(14)), loc.vertices).valid


def test_k4_solution():
    res = ptas_min_lveds(udg([(0, 0), (0.5, 0), (0.5, 0.5), (0, 0.5)]))
    assert res.size == 3 and res.verdict.valid


def test_random_twelve_point_instance():
    g = udg(generate_random_instance(GeneratorSpec(n=12, side=3, seed=7)))
    opt = brute_force_min_lveds(DominationScope.full(g))
    res = ptas_min_lveds(g, PtasConfig(epsilon=1.0))
    assert res.verdict.valid and res.size <= 2 * len(opt)


def test_result_json_is_deterministic():
    g = udg(generate_random_instance(GeneratorSpec(n=30, side=5, seed=2)))
    a = ptas_min_lveds(g, PtasConfig(epsilon=0.5)).to_json()
    b = ptas_min_lveds(g, PtasConfig(epsilon=0.5)).to_json()
    assert a == b and "timings" not in a


@given(point_sets(max_size=60, side=7.0), st.sampled_from([0.25, 0.5, 1.0, 2.0]))
def test_collection_invariants(pts, eps):
    g = udg(pts)
    cfg = PtasConfig(epsilon=eps)
    coll = build_two_separated_collection(g, cfg, check=False)
    assert collection_violations(g, coll, cfg.rho) == []
    for i, a in enumerate(coll.pieces):
        for b in coll.pieces[i + 1 :]:
            assert hop_distance(g, a.inner, b.inner) > 2


@given(point_sets(max_size=60, side=7.0))
def test_packing_bound_telemetry(pts):
    g = udg(pts)
    coll = build_two_separated_collection(g, PtasConfig(epsilon=0.5))
    tele: Telemetry = coll.telemetry
    assert tele.bound_violations == []
    assert tele.bound_checks >= 2 * len(coll.pieces)


@given(point_sets(max_size=80, side=8.0))
def test_heuristic_local_solution_is_valid(pts):
    res = ptas_min_lveds(udg(pts), PtasConfig(exact_local=False))
    assert res.verdict.valid and res.repairs == []
