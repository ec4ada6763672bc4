"""(1+eps)-approximation for minimum liar's ve-domination on unit disk graphs.

The graph is carved into a 2-separated collection of hop balls ``S_i`` with enclosing
balls ``T_i``; each ``T_i`` is solved locally and the local answers are unioned.
"""

from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass, field
from typing import Any

from .domination import (
    BudgetExceeded,
    DominationScope,
    Verdict,
    min_lveds_search,
    three_layer_mask,
    verify_lveds,
)
from .geom import UnitDiskGraph, bfs_distances, isolated_in, mask_of, members

log = logging.getLogger(__name__)

OUTER_GAP = 6
REMOVAL_GAP = 2


class InvariantViolation(AssertionError):
    """A structural guarantee of the construction failed at runtime."""


class RadiusCapExceeded(RuntimeError):
    def __init__(self, center: int, r: int, inner: int, outer: int):
        super().__init__(
            f"radius cap hit at center {center}, r={r}: |L(outer)|={outer} still exceeds rho*|L(inner)|={inner}*rho"
        )
        self.center, self.r, self.inner, self.outer = center, r, inner, outer


@dataclass(frozen=True)
class PtasConfig:
    epsilon: float = 1.0
    exact_local: bool = True
    work_budget: int | None = 5_000_000
    r_cap: int | None = None

    def __post_init__(self) -> None:
        if not (self.epsilon > 0 and math.isfinite(self.epsilon)):
            raise ValueError(f"epsilon must be a positive finite number, got {self.epsilon!r}")

    @property
    def rho(self) -> float:
        return 1.0 + self.epsilon


def mis_size_bound(r: int) -> int:
    """Packing bound on the three-layer set of a radius-``r`` hop ball: 3(2r+1)^2."""
    if r < 0:
        raise ValueError("radius must be non-negative")
    return 3 * (2 * r + 1) ** 2


@dataclass
class Growth:
    radius: int
    inner: list[int]
    outer: list[int]
    checks: int = 0


@dataclass
class Telemetry:
    """Counters filled while the collection is grown; read by tests and the bench harness."""

    bound_checks: int = 0
    bound_violations: list[tuple[int, int, int]] = field(default_factory=list)
    radii: list[int] = field(default_factory=list)
    extra_removed: int = 0


def _ball_masks(dist: dict[int, int], max_r: int) -> list[int]:
    layers = [0] * (max_r + 1)
    for u, d in dist.items():
        if d <= max_r:
            layers[d] |= 1 << u
    out, acc = [], 0
    for layer in layers:
        acc |= layer
        out.append(acc)
    return out


def grow_radius(
    g: UnitDiskGraph,
    v: int,
    remaining: int | list[int],
    rho: float,
    r_cap: int | None = None,
    telemetry: Telemetry | None = None,
    dist: dict[int, int] | None = None,
) -> Growth:
    """Smallest ``r >= 1`` with ``|L(ball r+6)| <= rho * |L(ball r)|``, balls taken in ``G[remaining]``.

    ``L`` is the three-layer heuristic. Every heuristic set is checked against the
    packing bound for its radius.
    """
    rem = remaining if isinstance(remaining, int) else mask_of(remaining)
    if not (rem >> v) & 1:
        raise ValueError(f"center {v} is not in the remaining vertex set")
    if not g.adj_masks[v] & rem:
        raise ValueError(f"center {v} is isolated in the remaining graph")
    if dist is None:
        dist = bfs_distances(g, [v], rem)
    ecc = max(dist.values())
    balls = _ball_masks(dist, ecc)
    memo: dict[int, int] = {}

    def heuristic(r: int) -> int:
        key = min(r, ecc)
        if key not in memo:
            memo[key] = three_layer_mask(g, balls[key])
        sol = memo[key]
        if telemetry is not None:
            telemetry.bound_checks += 1
            if sol.bit_count() > mis_size_bound(r):
                telemetry.bound_violations.append((v, r, sol.bit_count()))
        if sol.bit_count() > mis_size_bound(r):
            raise InvariantViolation(f"|L(ball {r} around {v})| = {sol.bit_count()} > {mis_size_bound(r)}")
        return sol

    r = 1
    checks = 0
    while True:
        inner, outer = heuristic(r), heuristic(r + OUTER_GAP)
        checks += 1
        if not outer.bit_count() > rho * inner.bit_count():
            break
        if r_cap is not None and r >= r_cap:
            raise RadiusCapExceeded(v, r, inner.bit_count(), outer.bit_count())
        r += 1

    eps = rho - 1.0
    if eps < 1:
        log.debug("center %d: r'=%d, (1/eps)log(1/eps)=%.2f", v, r, math.log(1 / eps) / eps)
    if telemetry is not None:
        telemetry.radii.append(r)
    return Growth(r, members(inner), members(outer), checks)


@dataclass
class Piece:
    center: int
    radius: int
    inner: list[int]
    outer: list[int]
    removed: list[int]
    stripped_before: list[int]
    heuristic_inner: int
    heuristic_outer: int


@dataclass
class SeparatedCollection:
    pieces: list[Piece]
    stripped_after: list[int] = field(default_factory=list)
    telemetry: Telemetry = field(default_factory=Telemetry)

    def __len__(self) -> int:
        return len(self.pieces)

    def to_json(self) -> dict[str, Any]:
        return {
            "pieces": [
                {
                    "center": p.center,
                    "radius": p.radius,
                    "S": p.inner,
                    "T": p.outer,
                    "removed": p.removed,
                    "stripped": p.stripped_before,
                    "heuristic_sizes": [p.heuristic_inner, p.heuristic_outer],
                }
                for p in self.pieces
            ],
            "stripped_after": self.stripped_after,
        }


def _closed_reach(g: UnitDiskGraph, mask: int) -> int:
    cm = g.closed_masks
    out = 0
    for u in members(mask):
        out |= cm[u]
    return out


def build_two_separated_collection(g: UnitDiskGraph, cfg: PtasConfig, *, check: bool = True) -> SeparatedCollection:
    """Carve ``g`` into pieces ``(S_i, T_i)`` with ``S_i`` pairwise more than 2 hops apart in ``g``.

    Each round strips isolated vertices, grows a ball around the lowest surviving index
    inside ``G[V_i]`` and removes every surviving vertex within 2 hops (in ``g``) of ``S_i``.
    ``T_i`` is the radius ``r'+6`` ball plus the closed neighbourhood of the removed set,
    so every edge that loses an endpoint in this round lies inside ``G[T_i]``.
    """
    tele = Telemetry()
    rem = (1 << g.n) - 1
    pieces: list[Piece] = []
    while True:
        iso = isolated_in(g, rem)
        rem &= ~iso
        if not rem:
            break
        v = (rem & -rem).bit_length() - 1
        dist = bfs_distances(g, [v], rem)
        grown = grow_radius(g, v, rem, cfg.rho, cfg.r_cap, tele, dist)
        r = grown.radius
        balls = _ball_masks(dist, r + OUTER_GAP)
        inner = balls[r]
        ball_removed = balls[r + REMOVAL_GAP]
        # a path of length <= 2 may run through an earlier round's territory
        removed = rem & _closed_reach(g, _closed_reach(g, inner))
        if ball_removed & ~removed:
            raise InvariantViolation("removal ball escapes the 2-hop reach of S")
        tele.extra_removed += (removed & ~ball_removed).bit_count()
        outer = balls[r + OUTER_GAP] | (rem & _closed_reach(g, removed))
        pieces.append(
            Piece(
                center=v,
                radius=r,
                inner=members(inner),
                outer=members(outer),
                removed=members(removed),
                stripped_before=members(iso),
                heuristic_inner=len(grown.inner),
                heuristic_outer=len(grown.outer),
            )
        )
        rem &= ~removed
    coll = SeparatedCollection(pieces, stripped_after=members(iso), telemetry=tele)
    if check:
        check_collection(g, coll, cfg.rho)
    return coll


def collection_violations(g: UnitDiskGraph, coll: SeparatedCollection, rho: float | None = None) -> list[str]:
    """Every broken structural property of ``coll``; empty when the collection is sound."""
    bad = []
    s_masks = [mask_of(p.inner) for p in coll.pieces]
    t_masks = [mask_of(p.outer) for p in coll.pieces]
    reach1 = [_closed_reach(g, s) for s in s_masks]
    reach2 = [_closed_reach(g, r1) for r1 in reach1]
    for i, (s, t) in enumerate(zip(s_masks, t_masks)):
        if s & ~t:
            bad.append(f"S_{i} is not inside T_{i}")
        for j in range(i + 1, len(s_masks)):
            if s & s_masks[j]:
                bad.append(f"S_{i} and S_{j} overlap")
            if reach2[i] & s_masks[j]:
                bad.append(f"S_{i} and S_{j} are within 2 hops")
            if reach1[i] & reach1[j]:
                bad.append(f"N[S_{i}] and N[S_{j}] intersect")
    for u, v in g.edges:
        if not any((t >> u) & (t >> v) & 1 for t in t_masks):
            bad.append(f"edge ({u}, {v}) lies in no G[T_i]")
    if rho is not None:
        for i, p in enumerate(coll.pieces):
            if p.heuristic_outer > rho * p.heuristic_inner:
                bad.append(f"piece {i} stopped while |L(outer)| > rho |L(inner)|")
    return bad


def check_collection(g: UnitDiskGraph, coll: SeparatedCollection, rho: float | None = None) -> None:
    bad = collection_violations(g, coll, rho)
    if bad:
        raise InvariantViolation("; ".join(bad[:5]))


@dataclass
class LocalSolution:
    vertices: list[int]
    optimal: bool
    examined: int = 0


def local_optimal_lveds(g: UnitDiskGraph, piece: Piece | list[int], cfg: PtasConfig) -> LocalSolution:
    """Solve the edges of ``G[T]`` with dominators drawn from anywhere in ``g``.

    Exact search when ``cfg.exact_local``; falls back to the three-layer set (and marks
    the piece non-optimal) if the work budget runs out.
    """
    outer = piece.outer if isinstance(piece, Piece) else list(piece)
    tmask = mask_of(outer)
    heuristic = members(three_layer_mask(g, tmask))
    if isinstance(piece, Piece) and len(heuristic) > mis_size_bound(piece.radius + OUTER_GAP):
        raise InvariantViolation(f"heuristic on T around {piece.center} exceeds the packing bound")
    if not cfg.exact_local:
        return LocalSolution(heuristic, optimal=False)
    scope = DominationScope.local(g, outer)
    try:
        res = min_lveds_search(scope, cfg.work_budget)
    except BudgetExceeded as exc:
        log.info("local search budget exhausted on a piece of %d vertices; using heuristic", len(outer))
        return LocalSolution(heuristic, optimal=False, examined=exc.examined)
    return LocalSolution(res.vertices, optimal=True, examined=res.examined)


@dataclass
class PtasResult:
    solution: list[int]
    collection: SeparatedCollection
    local: list[LocalSolution]
    verdict: Verdict
    repairs: list[dict[str, Any]]
    timings: dict[str, float]
    epsilon: float
    exact_local: bool

    @property
    def size(self) -> int:
        return len(self.solution)

    def stats(self) -> dict[str, Any]:
        return {
            "pieces": len(self.collection),
            "max_radius": max((p.radius for p in self.collection.pieces), default=0),
            "local_work": sum(s.examined for s in self.local),
            "non_optimal_pieces": [i for i, s in enumerate(self.local) if not s.optimal],
            "bound_checks": self.collection.telemetry.bound_checks,
            "extra_removed": self.collection.telemetry.extra_removed,
        }

    def to_json(self, timings: bool = False) -> dict[str, Any]:
        doc = {
            "epsilon": self.epsilon,
            "exact_local": self.exact_local,
            "size": self.size,
            "vertices": self.solution,
            "verdict": self.verdict.to_json(),
            "repairs": self.repairs,
            "pieces": [
                {
                    "center": p.center,
                    "radius": p.radius,
                    "S_size": len(p.inner),
                    "T_size": len(p.outer),
                    "local_size": len(s.vertices),
                    "local_optimal": s.optimal,
                    "local_vertices": s.vertices,
                }
                for p, s in zip(self.collection.pieces, self.local)
            ],
            "stats": self.stats(),
        }
        if timings:
            doc["timings"] = {k: round(v, 6) for k, v in self.timings.items()}
        return doc


def repair(g: UnitDiskGraph, solution: list[int]) -> tuple[list[int], list[dict[str, Any]], Verdict]:
    """Add lowest-index vertices from each witnessed deficit until the full graph verifies."""
    scope = DominationScope.full(g)
    current = set(solution)
    repairs = []
    verdict = verify_lveds(scope, current)
    while not verdict.valid:
        reach = 0
        for u, v in verdict.witness["edges"]:
            reach |= g.closed_masks[u] | g.closed_masks[v]
        missing = [w for w in members(reach) if w not in current]
        if not missing:
            break  # cannot happen for edges of one graph
        current.add(missing[0])
        repairs.append({"witness": verdict.witness, "added": missing[0]})
        verdict = verify_lveds(scope, current)
    return sorted(current), repairs, verdict


def ptas_min_lveds(g: UnitDiskGraph, cfg: PtasConfig | None = None) -> PtasResult:
    cfg = cfg or PtasConfig()
    t0 = time.perf_counter()
    coll = build_two_separated_collection(g, cfg)
    t1 = time.perf_counter()
    local = [local_optimal_lveds(g, p, cfg) for p in coll.pieces]
    union = sorted(set().union(*(s.vertices for s in local))) if local else []
    t2 = time.perf_counter()
    solution, repairs, verdict = repair(g, union)
    t3 = time.perf_counter()
    if repairs:
        log.warning("union of local solutions needed %d repair addition(s)", len(repairs))
    return PtasResult(
        solution=solution,
        collection=coll,
        local=local,
        verdict=verdict,
        repairs=repairs,
        timings={"collection": t1 - t0, "local": t2 - t1, "verify": t3 - t2},
        epsilon=cfg.epsilon,
        exact_local=cfg.exact_local,
    )
