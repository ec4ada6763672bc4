import json

import pytest

from lveds.domination import DominationScope, brute_force_min_lveds, verify_lveds
from lveds.reduction import (
    SHIPPED,
    EmbeddingError,
    OrthogonalEmbedding,
    ReductionError,
    all_vertex_covers,
    brute_force_min_vertex_cover,
    build_reduction_instance,
    forward_map_conflicts,
    instance_violations,
    load_embedding,
    lveds_to_vertex_cover,
    repaired_forward_map,
    segment_counts,
    shipped_embedding,
    validate_embedding,
    vertex_cover_to_lveds,
)


def emb(nodes, edges, pendants=None):
    return OrthogonalEmbedding.from_json(
        {
            "nodes": [{"id": i, "pos": p} for i, p in nodes.items()],
            "edges": [{"u": u, "v": v, "chain": c} for u, v, c in edges],
            "pendants": pendants or {},
        }
    )


@pytest.fixture(scope="module")
def single():
    return build_reduction_instance(shipped_embedding("single_edge"))


@pytest.fixture(scope="module")
def path3():
    return build_reduction_instance(shipped_embedding("path3"))


def valid(inst, sol):
    return verify_lveds(DominationScope.full(inst.graph), sol).valid


# ---------------------------------------------------------------- validation


def test_single_edge_embedding_valid():
    assert validate_embedding(emb({0: [0, 0], 1: [10, 0]}, [(0, 1, [[0, 0], [10, 0]])])).valid


def test_long_step_rejected():
    rep = validate_embedding(emb({0: [0, 0], 1: [20, 0]}, [(0, 1, [[0, 0], [20, 0]])]))
    assert not rep.valid and "length 10" in rep.problems[0]


def test_degree_four_rejected():
    nodes = {0: [0, 0], 1: [10, 0], 2: [-10, 0], 3: [0, 10], 4: [0, -10]}
    edges = [(0, k, [[0, 0], nodes[k]]) for k in (1, 2, 3, 4)]
    rep = validate_embedding(emb(nodes, edges))
    assert any("degree 4" in p for p in rep.problems)


def test_off_grid_node_rejected():
    rep = validate_embedding(emb({0: [0, 0], 1: [10, 5]}, [(0, 1, [[0, 0], [10, 5]])]))
    assert any("10-grid" in p for p in rep.problems)


def test_chain_through_node_rejected():
    nodes = {0: [0, 0], 1: [10, 0], 2: [20, 0]}
    rep = validate_embedding(emb(nodes, [(0, 2, [[0, 0], [10, 0], [20, 0]]), (1, 2, [[10, 0], [20, 0]])]))
    assert any("passes through node" in p for p in rep.problems)


def test_close_parallel_chains_rejected():
    nodes = {0: [0, 0], 1: [10, 0], 2: [0, 10], 3: [10, 10]}
    ok = validate_embedding(emb(nodes, [(0, 1, [[0, 0], [10, 0]]), (2, 3, [[0, 10], [10, 10]])]))
    assert ok.valid
    bad = emb({0: [0, 0], 1: [20, 0], 2: [0, 10], 3: [20, 10]},
              [(0, 1, [[0, 0], [10, 0], [20, 0]]), (2, 3, [[0, 10], [10, 10], [10, 0], [20, 0]])])
    assert not validate_embedding(bad).valid


def test_malformed_document():
    with pytest.raises(EmbeddingError):
        OrthogonalEmbedding.from_json({"nodes": [{"id": 0}], "edges": []})


def test_invalid_embedding_refused_by_builder():
    with pytest.raises(EmbeddingError):
        build_reduction_instance(emb({0: [0, 0], 1: [20, 0]}, [(0, 1, [[0, 0], [20, 0]])]))


@pytest.mark.parametrize("name", SHIPPED)
def test_shipped_embeddings_valid(name):
    e = shipped_embedding(name)
    assert validate_embedding(e).valid
    assert OrthogonalEmbedding.from_json(json.loads(json.dumps(e.to_json()))) == e


def test_load_embedding_from_file(tmp_path):
    p = tmp_path / "e.json"
    p.write_text(json.dumps(shipped_embedding("cycle4").to_json()))
    assert load_embedding(p) == shipped_embedding("cycle4")


# ---------------------------------------------------------------- construction


def test_single_edge_point_count(single):
    assert (single.n, single.l, single.m) == (2, 1, 1)
    assert len(single.scaled) == 21
    assert single.labels.count("P") == 2 and single.labels.count("A") == 11 and single.labels.count("S") == 8


def test_single_edge_gap_pattern(single):
    gd = single.gadgets[0]
    path = [single.node_index[gd.lo], *gd.chain, single.node_index[gd.hi]]
    xs = [single.scaled[p][0] for p in path]
    gaps = [b - a for a, b in zip(xs, xs[1:])]
    assert gaps == [8, 4, 10, 10, 10, 6, 5, 10, 10, 10, 9, 8]
    assert instance_violations(single) == []


def test_path3_chain_count(path3):
    assert path3.labels.count("A") == 22
    assert path3.metadata()["expected_points"] == len(path3.scaled) == 37


@pytest.mark.parametrize("name", SHIPPED)
def test_instance_geometry(name):
    inst = build_reduction_instance(shipped_embedding(name))
    assert instance_violations(inst) == []
    assert len(inst.scaled) == 5 * inst.n + 10 * inst.l + inst.m
    assert len(set(inst.scaled)) == len(inst.scaled)


def test_points_are_exact_tenths(single):
    assert single.graph.scaled == tuple(single.scaled)


# ---------------------------------------------------------------- certificate maps


def test_forward_single_edge(single):
    for cover in ([0], [1]):
        sol = vertex_cover_to_lveds(single, cover)
        assert len(sol) == 13 and valid(single, sol)


def test_forward_path3_middle_size(path3):
    assert len(vertex_cover_to_lveds(path3, [1])) == 22


@pytest.mark.xfail(strict=True, reason="both chains start at the middle node and share dominators {p, u}")
def test_forward_path3_middle_valid(path3):
    assert valid(path3, vertex_cover_to_lveds(path3, [1]))


def test_forward_conflicts_predict_validity():
    for name in SHIPPED:
        inst = build_reduction_instance(shipped_embedding(name))
        for cover in all_vertex_covers(inst.embedding.source_vertices, inst.embedding.source_edges):
            ok = valid(inst, vertex_cover_to_lveds(inst, cover))
            assert ok == (not forward_map_conflicts(inst, cover)), (name, cover)


@pytest.mark.parametrize("name", SHIPPED)
def test_forward_all_vertices_valid(name):
    inst = build_reduction_instance(shipped_embedding(name))
    assert valid(inst, vertex_cover_to_lveds(inst, inst.embedding.source_vertices))


def test_forward_rejects_non_cover(path3):
    with pytest.raises(ReductionError, match="uncovered"):
        vertex_cover_to_lveds(path3, [0])


def test_round_trip_single_edge(single):
    for cover in ([0], [1]):
        assert lveds_to_vertex_cover(single, vertex_cover_to_lveds(single, cover)).cover == cover


@pytest.mark.parametrize("name", SHIPPED)
def test_round_trip_through_repair(name):
    inst = build_reduction_instance(shipped_embedding(name))
    for cover in all_vertex_covers(inst.embedding.source_vertices, inst.embedding.source_edges):
        fixed, _ = repaired_forward_map(inst, cover)
        assert valid(inst, fixed)
        assert len(lveds_to_vertex_cover(inst, fixed).cover) <= len(cover)


def test_reverse_requires_valid_input(path3):
    with pytest.raises(ReductionError, match="not a liar"):
        lveds_to_vertex_cover(path3, [0, 1])


def test_reverse_drops_surplus_pendant_point(single):
    sol = vertex_cover_to_lveds(single, [0])
    z = single.pendants[1][3]
    rev = lveds_to_vertex_cover(single, sol + [z])
    assert rev.cover == [0] and z not in rev.normalized
    assert any("drop z" in s for s in rev.steps)


def test_reverse_of_oracle_minimum(single):
    opt = brute_force_min_lveds(DominationScope.full(single.graph))
    assert len(opt) == 13
    assert min(segment_counts(single, opt)) >= 6
    assert len(lveds_to_vertex_cover(single, opt).cover) == 1


def test_vertex_cover_oracle():
    assert len(brute_force_min_vertex_cover([0, 1], [(0, 1)])) == 1
    assert brute_force_min_vertex_cover([0, 1, 2], [(0, 1), (1, 2)]) == [1]
    assert len(brute_force_min_vertex_cover([0, 1, 2, 3], [(0, 1), (1, 2), (2, 3), (0, 3)])) == 2
    assert brute_force_min_vertex_cover([0, 1], []) == []
