"""Vertex cover on max-degree-3 planar graphs -> liar's ve-domination on unit disk graphs.

Input is an orthogonal grid embedding (nodes on multiples of 10, edges as chains of
length-10 axis-parallel segments). All placement happens in integer tenths so the
gaps of exactly 1.0 are decided exactly.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

from .domination import BudgetExceeded, DominationScope, verify_lveds
from .geom import UnitDiskGraph, build_unit_disk_graph

GridPoint = tuple[int, int]

DIRECTIONS: dict[str, GridPoint] = {"+x": (1, 0), "-x": (-1, 0), "+y": (0, 1), "-y": (0, -1)}
SEGMENT = 10
# distances in tenths along a segment
SINGLE_OFFSETS = (8, 12, 22, 32, 42, 48, 53, 63, 73, 83, 92)
ELEVEN_OFFSETS = (10, 15, 20, 30, 40, 49, 59, 69, 79, 89, 99)
TEN_NODE_OFFSETS = (10, 20, 30, 40, 49, 59, 69, 79, 89, 99)
MIDDLE_OFFSETS = (5, 15, 25, 35, 45, 55, 65, 75, 85, 95)
PENDANT_OFFSETS = (10, 20, 30, 40)
# positions (0-based, mod 5) kept by the forward map: skip two, take three
KEEP_PHASES = (2, 3, 4)

SHIPPED = ("single_edge", "path3", "cycle4", "paw", "long_edge")


class EmbeddingError(ValueError):
    def __init__(self, problems: list[str]):
        super().__init__("invalid embedding: " + "; ".join(problems))
        self.problems = problems


class ReductionError(RuntimeError):
    """A certificate map broke one of its guarantees; ``detail`` carries the offending data."""

    def __init__(self, message: str, detail: dict[str, Any] | None = None):
        super().__init__(message)
        self.detail = detail or {}


@dataclass(frozen=True)
class EmbeddedEdge:
    u: int
    v: int
    chain: tuple[GridPoint, ...]


@dataclass(frozen=True)
class OrthogonalEmbedding:
    nodes: dict[int, GridPoint]
    edges: tuple[EmbeddedEdge, ...]
    pendants: dict[int, str] = field(default_factory=dict)

    @classmethod
    def from_json(cls, doc: dict[str, Any]) -> OrthogonalEmbedding:
        try:
            nodes = {int(nd["id"]): _grid_point(nd["pos"]) for nd in doc["nodes"]}
            edges = tuple(
                EmbeddedEdge(int(e["u"]), int(e["v"]), tuple(_grid_point(p) for p in e["chain"]))
                for e in doc["edges"]
            )
            pendants = {int(k): str(d) for k, d in doc.get("pendants", {}).items()}
        except (KeyError, TypeError, ValueError) as exc:
            raise EmbeddingError([f"malformed embedding document: {exc!r}"]) from None
        if len(nodes) != len(doc["nodes"]):
            raise EmbeddingError(["duplicate node id"])
        return cls(nodes, edges, pendants)

    def to_json(self) -> dict[str, Any]:
        return {
            "nodes": [{"id": i, "pos": list(p)} for i, p in sorted(self.nodes.items())],
            "edges": [{"u": e.u, "v": e.v, "chain": [list(p) for p in e.chain]} for e in self.edges],
            "pendants": {str(k): d for k, d in sorted(self.pendants.items())},
        }

    @property
    def source_vertices(self) -> list[int]:
        return sorted(self.nodes)

    @property
    def source_edges(self) -> list[tuple[int, int]]:
        return sorted((min(e.u, e.v), max(e.u, e.v)) for e in self.edges)


def _grid_point(p) -> GridPoint:
    x, y = p
    if float(x) != int(x) or float(y) != int(y):
        raise ValueError(f"grid point {p!r} is not integral")
    return int(x), int(y)


def load_embedding(path: str | Path) -> OrthogonalEmbedding:
    return OrthogonalEmbedding.from_json(json.loads(Path(path).read_text(encoding="utf-8")))


def shipped_embedding(name: str) -> OrthogonalEmbedding:
    text = resources.files("lveds").joinpath("embeddings").joinpath(f"{name}.json").read_text(encoding="utf-8")
    return OrthogonalEmbedding.from_json(json.loads(text))


# ---------------------------------------------------------------- validation


def _step_dir(a: GridPoint, b: GridPoint) -> str | None:
    dx, dy = b[0] - a[0], b[1] - a[1]
    for name, (ux, uy) in DIRECTIONS.items():
        if (dx, dy) == (ux * SEGMENT, uy * SEGMENT):
            return name
    return None


def _oriented_chain(emb: OrthogonalEmbedding, e: EmbeddedEdge) -> tuple[int, int, tuple[GridPoint, ...]]:
    """(lo, hi, chain from lo's point to hi's point)."""
    lo, hi = min(e.u, e.v), max(e.u, e.v)
    chain = e.chain
    if chain and chain[0] != emb.nodes.get(lo):
        chain = tuple(reversed(chain))
    return lo, hi, chain


def _seg_distance(a: tuple[GridPoint, GridPoint], b: tuple[GridPoint, GridPoint]) -> float:
    (p1, p2), (q1, q2) = a, b
    # axis-parallel segments: closed-form via the closest coordinates on each axis
    ax0, ax1 = sorted((p1[0], p2[0]))
    ay0, ay1 = sorted((p1[1], p2[1]))
    bx0, bx1 = sorted((q1[0], q2[0]))
    by0, by1 = sorted((q1[1], q2[1]))
    dx = max(0, bx0 - ax1, ax0 - bx1)
    dy = max(0, by0 - ay1, ay0 - by1)
    return (dx * dx + dy * dy) ** 0.5


def _node_dirs(emb: OrthogonalEmbedding) -> dict[int, list[str]]:
    used: dict[int, list[str]] = {i: [] for i in emb.nodes}
    for e in emb.edges:
        lo, hi, chain = _oriented_chain(emb, e)
        if len(chain) >= 2 and lo in used and hi in used:
            used[lo].append(_step_dir(chain[0], chain[1]))
            used[hi].append(_step_dir(chain[-1], chain[-2]))
    return used


def pendant_direction(emb: OrthogonalEmbedding, node: int) -> str | None:
    used = set(_node_dirs(emb)[node])
    if node in emb.pendants:
        return emb.pendants[node]
    return next((d for d in DIRECTIONS if d not in used), None)


@dataclass
class EmbeddingReport:
    problems: list[str]

    @property
    def valid(self) -> bool:
        return not self.problems


def validate_embedding(emb: OrthogonalEmbedding) -> EmbeddingReport:
    """Check grid placement, chain shape, degree, pendant room and geometric separation."""
    problems: list[str] = []
    node_at: dict[GridPoint, int] = {}
    for i, (x, y) in sorted(emb.nodes.items()):
        if x % SEGMENT or y % SEGMENT:
            problems.append(f"node {i} at {(x, y)} is not on the 10-grid")
        if (x, y) in node_at:
            problems.append(f"nodes {node_at[(x, y)]} and {i} share position {(x, y)}")
        node_at[(x, y)] = i

    degree = {i: 0 for i in emb.nodes}
    seen_pairs: set[tuple[int, int]] = set()
    interior_owner: dict[GridPoint, int] = {}
    segments: list[tuple[int, tuple[GridPoint, GridPoint]]] = []
    for k, e in enumerate(emb.edges):
        tag = f"edge {k} ({e.u},{e.v})"
        if e.u not in emb.nodes or e.v not in emb.nodes:
            problems.append(f"{tag} names an unknown node")
            continue
        if e.u == e.v:
            problems.append(f"{tag} is a self-loop")
            continue
        pair = (min(e.u, e.v), max(e.u, e.v))
        if pair in seen_pairs:
            problems.append(f"{tag} duplicates an earlier edge")
        seen_pairs.add(pair)
        degree[e.u] += 1
        degree[e.v] += 1
        lo, hi, chain = _oriented_chain(emb, e)
        if len(chain) < 2 or chain[0] != emb.nodes[lo] or chain[-1] != emb.nodes[hi]:
            problems.append(f"{tag}: chain must run between its two node points")
            continue
        for a, b in zip(chain, chain[1:]):
            if _step_dir(a, b) is None:
                problems.append(f"{tag}: step {a}->{b} is not one axis-parallel segment of length 10")
        if len(set(chain)) != len(chain):
            problems.append(f"{tag}: chain revisits a grid point")
        for p in chain[1:-1]:
            if p in node_at:
                problems.append(f"{tag}: chain passes through node {node_at[p]}")
            elif p in interior_owner and interior_owner[p] != k:
                problems.append(f"{tag}: interior point {p} shared with edge {interior_owner[p]}")
            interior_owner[p] = k
        segments.extend((k, (a, b)) for a, b in zip(chain, chain[1:]))

    for i, d in degree.items():
        if d > 3:
            problems.append(f"node {i} has degree {d} > 3")
    if problems:
        return EmbeddingReport(problems)

    used = _node_dirs(emb)
    for i in sorted(emb.nodes):
        if len(set(used[i])) != len(used[i]):
            problems.append(f"node {i}: two chains leave in the same direction")
        d = emb.pendants.get(i)
        if d is not None:
            if d not in DIRECTIONS:
                problems.append(f"node {i}: unknown pendant direction {d!r}")
            elif d in used[i]:
                problems.append(f"node {i}: pendant direction {d} is taken by a chain")
        elif len(set(used[i])) >= 4:
            problems.append(f"node {i}: no free direction for the pendant")

    for (ka, sa), (kb, sb) in itertools.combinations(segments, 2):
        if ka == kb:
            continue
        if _seg_distance(sa, sb) < 2:
            shared = set(sa) & set(sb)
            ok = len(shared) == 1 and next(iter(shared)) in node_at and set(sa) != set(sb)
            ok = ok and _step_dir(*_from(shared, sa)) != _step_dir(*_from(shared, sb))
            if not ok:
                problems.append(f"segments {sa} (edge {ka}) and {sb} (edge {kb}) come within distance 2")

    if not problems:
        for i in sorted(emb.nodes):
            d = pendant_direction(emb, i)
            ux, uy = DIRECTIONS[d]
            x, y = emb.nodes[i]
            tail = ((x, y), (x + 4 * ux, y + 4 * uy))
            for k, seg in segments:
                if emb.nodes[i] in seg:
                    continue
                if _seg_distance(tail, seg) < 2:
                    problems.append(f"pendant of node {i} comes within distance 2 of edge {k}")
            for j in sorted(emb.nodes):
                if j <= i:
                    continue
                dj = pendant_direction(emb, j)
                vx, vy = DIRECTIONS[dj]
                xj, yj = emb.nodes[j]
                if _seg_distance(tail, ((xj, yj), (xj + 4 * vx, yj + 4 * vy))) < 2:
                    problems.append(f"pendants of nodes {i} and {j} come within distance 2")
    return EmbeddingReport(problems)


def _from(shared: set[GridPoint], seg: tuple[GridPoint, GridPoint]) -> tuple[GridPoint, GridPoint]:
    p = next(iter(shared))
    return (p, seg[1] if seg[0] == p else seg[0])


# ---------------------------------------------------------------- construction


@dataclass
class EdgeGadget:
    lo: int
    hi: int
    chain: list[int]  # point indices in path order from lo to hi
    segments: list[list[int]]  # the same indices split per grid segment
    eleven_triangle: tuple[int, int] | None  # chain points 1.0 and 2.0 from the node on an eleven-point segment


@dataclass
class ReductionInstance:
    embedding: OrthogonalEmbedding
    scaled: list[GridPoint]  # tenths
    labels: list[str]  # "P", "A" or "S"
    node_index: dict[int, int]  # source vertex id -> point index
    pendants: dict[int, tuple[int, int, int, int]]  # source vertex id -> (u, x, y, z)
    gadgets: list[EdgeGadget]
    graph: UnitDiskGraph

    @property
    def n(self) -> int:
        return len(self.node_index)

    @property
    def m(self) -> int:
        return len(self.gadgets)

    @property
    def l(self) -> int:  # noqa: E743
        return sum(len(gd.segments) for gd in self.gadgets)

    @property
    def points(self) -> list[tuple[float, float]]:
        return [(x / 10, y / 10) for x, y in self.scaled]

    def target_size(self, cover_size: int) -> int:
        return cover_size + 3 * self.n + 6 * self.l

    def metadata(self) -> dict[str, Any]:
        n, l, m = self.n, self.l, self.m
        return {
            "n": n,
            "l": l,
            "m": m,
            "points": len(self.scaled),
            "A": sum(lab == "A" for lab in self.labels),
            "S": sum(lab == "S" for lab in self.labels),
            "expected_points": 5 * n + 10 * l + m,
            "stated_total_4n_formula": 4 * n + 10 * l + m,
            "note": "four pendant points per node give 5n + 10l + m points; the 4n + 10l + m total undercounts by n",
        }

    def to_json(self) -> dict[str, Any]:
        return {
            **self.metadata(),
            "labels": self.labels,
            "nodes": {str(k): v for k, v in sorted(self.node_index.items())},
            "pendants": {str(k): list(v) for k, v in sorted(self.pendants.items())},
            "edges": [
                {"u": gd.lo, "v": gd.hi, "chain": gd.chain, "segments": gd.segments} for gd in self.gadgets
            ],
        }


def _along(a: GridPoint, b: GridPoint, d: int) -> GridPoint:
    """Point ``d`` tenths from grid point ``a`` toward ``b`` (tenths coordinates)."""
    ux = (b[0] > a[0]) - (b[0] < a[0])
    uy = (b[1] > a[1]) - (b[1] < a[1])
    return a[0] * 10 + ux * d, a[1] * 10 + uy * d


def build_reduction_instance(emb: OrthogonalEmbedding, *, check: bool = True) -> ReductionInstance:
    """Place node, chain and pendant points for ``emb`` and build the unit disk graph."""
    report = validate_embedding(emb)
    if not report.valid:
        raise EmbeddingError(report.problems)

    scaled: list[GridPoint] = []
    labels: list[str] = []
    node_index: dict[int, int] = {}
    for i in sorted(emb.nodes):
        node_index[i] = len(scaled)
        x, y = emb.nodes[i]
        scaled.append((x * 10, y * 10))
        labels.append("P")

    def add(p: GridPoint, label: str) -> int:
        scaled.append(p)
        labels.append(label)
        return len(scaled) - 1

    gadgets = []
    for e in sorted(emb.edges, key=lambda e: (min(e.u, e.v), max(e.u, e.v))):
        lo, hi, chain = _oriented_chain(emb, e)
        segs = list(zip(chain, chain[1:]))
        per_seg: list[list[int]] = []
        triangle = None
        if len(segs) == 1:
            a, b = segs[0]
            per_seg.append([add(_along(a, b, d), "A") for d in SINGLE_OFFSETS])
        else:
            for k, (a, b) in enumerate(segs):
                if k == 0:
                    idx = [add(_along(a, b, d), "A") for d in ELEVEN_OFFSETS]
                    triangle = (idx[0], idx[2])
                elif k == len(segs) - 1:
                    idx = [add(_along(b, a, d), "A") for d in reversed(TEN_NODE_OFFSETS)]
                else:
                    idx = [add(_along(a, b, d), "A") for d in MIDDLE_OFFSETS]
                per_seg.append(idx)
        gadgets.append(EdgeGadget(lo, hi, [i for s in per_seg for i in s], per_seg, triangle))

    pendants = {}
    for i in sorted(emb.nodes):
        d = pendant_direction(emb, i)
        ux, uy = DIRECTIONS[d]
        x, y = emb.nodes[i]
        pendants[i] = tuple(add((x * 10 + ux * t, y * 10 + uy * t), "S") for t in PENDANT_OFFSETS)

    graph = build_unit_disk_graph([(x / 10, y / 10) for x, y in scaled], 1.0, scaled=scaled)
    inst = ReductionInstance(emb, scaled, labels, node_index, pendants, gadgets, graph)
    if check:
        bad = instance_violations(inst)
        if bad:
            raise ReductionError("generated instance breaks its structural invariants", {"problems": bad})
    return inst


def instance_violations(inst: ReductionInstance) -> list[str]:
    """Counting and adjacency invariants of a generated instance; empty when all hold."""
    bad = []
    meta = inst.metadata()
    if meta["A"] != 10 * inst.l + inst.m:
        bad.append(f"|A| = {meta['A']} != 10l + m = {10 * inst.l + inst.m}")
    if meta["S"] != 4 * inst.n:
        bad.append(f"|S| = {meta['S']} != 4n")
    g = inst.graph
    expected: set[tuple[int, int]] = set()
    for i, (u, x, y, z) in inst.pendants.items():
        expected |= {tuple(sorted(p)) for p in ((inst.node_index[i], u), (u, x), (x, y), (y, z))}
    for gd in inst.gadgets:
        path = [inst.node_index[gd.lo], *gd.chain, inst.node_index[gd.hi]]
        expected |= {tuple(sorted(p)) for p in zip(path, path[1:])}
        if gd.eleven_triangle:
            expected.add(tuple(sorted(gd.eleven_triangle)))
    actual = set(g.edges)
    for e in sorted(actual - expected):
        bad.append(f"unexpected adjacency {e} ({inst.labels[e[0]]}-{inst.labels[e[1]]})")
    for e in sorted(expected - actual):
        bad.append(f"missing adjacency {e}")
    return bad


# ---------------------------------------------------------------- certificate maps


def _check_cover(emb: OrthogonalEmbedding, cover: set[int]) -> None:
    unknown = cover - set(emb.nodes)
    if unknown:
        raise ReductionError(f"cover names unknown vertices {sorted(unknown)}")
    for u, v in emb.source_edges:
        if u not in cover and v not in cover:
            raise ReductionError(f"not a vertex cover: edge ({u}, {v}) is uncovered", {"edge": [u, v]})


def _strong_start(gd: EdgeGadget, node: int) -> bool:
    # reading from the eleven-point end: the 1.0/2.0 triangle puts position 3 in N[p q1]
    return gd.eleven_triangle is not None and node == gd.lo


def chain_orientation(inst: ReductionInstance, cover) -> list[int]:
    """Pick, per gadget, the covered endpoint its chain pattern is read from.

    The pattern leaves the two chain points next to its starting node unchosen, so two
    such starts at one node see the same two dominators ``{p, u}``. Starting nodes are
    therefore assigned by a bipartite matching (gadgets in order, lower endpoint first).
    A start on an eleven-point segment is exempt, and gadgets left unmatched fall back
    to their lower covered endpoint.
    """
    cover = set(cover)
    start = [-1] * len(inst.gadgets)
    options: dict[int, list[int]] = {}
    for k, gd in enumerate(inst.gadgets):
        if gd.lo in cover and _strong_start(gd, gd.lo):
            start[k] = gd.lo
        else:
            options[k] = [w for w in (gd.lo, gd.hi) if w in cover]
    owner: dict[int, int] = {}

    def augment(k: int, seen: set[int]) -> bool:
        for w in options[k]:
            if w in seen:
                continue
            seen.add(w)
            if w not in owner or augment(owner[w], seen):
                owner[w] = k
                return True
        return False

    for k in options:
        if not augment(k, set()):
            start[k] = options[k][0] if options[k] else -1
    for w, k in owner.items():
        start[k] = w
    return start


def vertex_cover_to_lveds(inst: ReductionInstance, cover) -> list[int]:
    """Map a vertex cover ``C`` to a candidate liar's ve-dominating set of size ``|C| + 3n + 6l``.

    Keeps every node point of ``C``, the first three pendant points of every node and,
    along each chain read from a covered endpoint, the points at positions 3-5 of every
    block of five. Validity is not guaranteed: a cover that forces two chains to start
    at the same node yields a set that fails the pair condition there (see
    :func:`forward_map_conflicts`).
    """
    cover = set(cover)
    _check_cover(inst.embedding, cover)
    out = {inst.node_index[i] for i in cover}
    for u, x, y, _z in inst.pendants.values():
        out |= {u, x, y}
    for gd, start in zip(inst.gadgets, chain_orientation(inst, cover)):
        seq = gd.chain if start == gd.lo else list(reversed(gd.chain))
        out |= {p for k, p in enumerate(seq) if k % 5 in KEEP_PHASES}
    return sorted(out)


def forward_map_conflicts(inst: ReductionInstance, cover) -> dict[int, list[tuple[int, int]]]:
    """Covered nodes where more than one exposed chain start meets, with those gadgets' edges."""
    starts: dict[int, list[tuple[int, int]]] = {}
    for gd, w in zip(inst.gadgets, chain_orientation(inst, cover)):
        if not _strong_start(gd, w):
            starts.setdefault(w, []).append((gd.lo, gd.hi))
    return {w: es for w, es in sorted(starts.items()) if len(es) > 1}


def repaired_forward_map(inst: ReductionInstance, cover) -> tuple[list[int], list[int]]:
    """Forward map followed by greedy repair; returns (valid set, vertices added by repair)."""
    from .ptas import repair

    base = vertex_cover_to_lveds(inst, cover)
    fixed, repairs, verdict = repair(inst.graph, base)
    assert verdict.valid
    return fixed, [r["added"] for r in repairs]


@dataclass
class ReverseMap:
    cover: list[int]
    normalized: list[int]
    steps: list[str]


def lveds_to_vertex_cover(inst: ReductionInstance, solution) -> ReverseMap:
    """Normalise a valid liar's ve-dominating set and read a vertex cover off its node points.

    Pendants are rewritten to ``{u, x, y}``; an edge with neither node point chosen gives
    one surplus chain point to its lower endpoint. The result is checked to be a cover
    of size at most ``|L| - 3n - 6l``.
    """
    original = sorted(set(solution))
    verdict = verify_lveds(DominationScope.full(inst.graph), original)
    if not verdict.valid:
        raise ReductionError("input is not a liar's ve-dominating set", {"witness": verdict.witness})
    cur = set(original)
    steps = []
    for i, (u, x, y, z) in sorted(inst.pendants.items()):
        missing = [w for w in (u, x, y) if w not in cur]
        if not missing:
            if z in cur:
                cur.discard(z)
                steps.append(f"node {i}: drop z")
        elif len(missing) == 1 and z in cur:
            cur.discard(z)
            cur.add(missing[0])
            steps.append(f"node {i}: swap z for pendant point {missing[0]}")
        else:
            raise ReductionError(f"pendant of node {i} cannot be normalised", {"node": i, "missing": missing})

    for gd in inst.gadgets:
        p_lo, p_hi = inst.node_index[gd.lo], inst.node_index[gd.hi]
        if p_lo in cur or p_hi in cur:
            continue
        held = [p for p in gd.chain if p in cur]
        need = 6 * len(gd.segments) + 1
        if len(held) < need:
            raise ReductionError(
                f"edge ({gd.lo}, {gd.hi}) has neither node point and only {len(held)} < {need} chain points",
                {"edge": [gd.lo, gd.hi], "chain_points": held},
            )
        cur.discard(held[0])
        cur.add(p_lo)
        steps.append(f"edge ({gd.lo},{gd.hi}): swap chain point {held[0]} for node {gd.lo}")

    point_to_node = {p: i for i, p in inst.node_index.items()}
    cover = sorted(point_to_node[p] for p in cur if p in point_to_node)
    cset = set(cover)
    for u, v in inst.embedding.source_edges:
        if u not in cset and v not in cset:
            raise ReductionError(f"normalised set leaves edge ({u}, {v}) uncovered", {"edge": [u, v]})
    limit = len(original) - 3 * inst.n - 6 * inst.l
    if len(cover) > limit:
        raise ReductionError(
            f"cover of size {len(cover)} exceeds |L| - 3n - 6l = {limit}", {"cover": cover, "solution": original}
        )
    return ReverseMap(cover, sorted(cur), steps)


def segment_counts(inst: ReductionInstance, solution) -> list[int]:
    """Members of ``solution`` on each grid segment, in gadget order."""
    s = set(solution)
    return [sum(p in s for p in seg) for gd in inst.gadgets for seg in gd.segments]


def brute_force_min_vertex_cover(
    vertices: list[int], edges: list[tuple[int, int]], budget: int | None = 1_000_000
) -> list[int]:
    """Minimum vertex cover by increasing-cardinality enumeration (lexicographic tie-break)."""
    vertices = sorted(vertices)
    examined = 0
    for k in range(len(vertices) + 1):
        for combo in itertools.combinations(vertices, k):
            examined += 1
            if budget is not None and examined > budget:
                raise BudgetExceeded(k, examined - 1, budget)
            cs = set(combo)
            if all(u in cs or v in cs for u, v in edges):
                return list(combo)
    return list(vertices)


def all_vertex_covers(vertices: list[int], edges: list[tuple[int, int]]) -> list[list[int]]:
    out = []
    for k in range(len(vertices) + 1):
        for combo in itertools.combinations(sorted(vertices), k):
            cs = set(combo)
            if all(u in cs or v in cs for u, v in edges):
                out.append(list(combo))
    return out
