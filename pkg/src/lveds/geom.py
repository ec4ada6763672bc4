"""Unit disk graphs over planar point sets and the hop-distance queries built on them.

Vertices are positional indices into the point list. Every set-valued result is a
sorted list of indices so outputs are stable and diffable.
"""

from __future__ import annotations

import json
import logging
import math
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

log = logging.getLogger(__name__)

Point2D = tuple[float, float]
Edge = tuple[int, int]

INFINITE = math.inf

# all-pairs blocks below this size, uniform grid buckets above
DENSE_LIMIT = 10_000
_BLOCK = 1024
_TENTH_TOL = 1e-9


class GraphDomainError(ValueError):
    """Raised when a query names a vertex, edge or set that the graph cannot answer for."""


class PointFormatError(ValueError):
    """Raised for malformed point files; the message names the offending line or field."""


@dataclass(frozen=True, eq=False)
class UnitDiskGraph:
    """Intersection graph of equal disks: ``u ~ v`` iff ``|p_u - p_v| <= radius``.

    Built by :func:`build_unit_disk_graph`; treat as immutable.
    """

    points: tuple[Point2D, ...]
    radius: float
    edges: tuple[Edge, ...]
    neighbors: tuple[frozenset[int], ...]
    # 10x-scaled integer coordinates when every coordinate sits on the 0.1 grid
    scaled: tuple[tuple[int, int], ...] | None = None
    adj_masks: tuple[int, ...] = field(init=False, repr=False)
    closed_masks: tuple[int, ...] = field(init=False, repr=False)
    _edge_index: dict[Edge, int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        adj = tuple(sum(1 << u for u in nb) for nb in self.neighbors)
        object.__setattr__(self, "adj_masks", adj)
        object.__setattr__(self, "closed_masks", tuple(m | (1 << v) for v, m in enumerate(adj)))
        object.__setattr__(self, "_edge_index", {e: i for i, e in enumerate(self.edges)})

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors[u] if 0 <= u < self.n else False

    def edge_id(self, e: Edge) -> int:
        u, v = canonical_edge(*e)
        try:
            return self._edge_index[(u, v)]
        except KeyError:
            raise GraphDomainError(f"({u}, {v}) is not an edge") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _on_tenth_grid(values: np.ndarray) -> bool:
    scaled = values * 10.0
    return bool(np.all(np.abs(scaled - np.rint(scaled)) <= _TENTH_TOL * np.maximum(1.0, np.abs(scaled))))


def _validate(points: Sequence[Sequence[float]], radius: float) -> np.ndarray:
    if not (isinstance(radius, (int, float)) and math.isfinite(radius) and radius > 0):
        raise GraphDomainError(f"radius must be a positive finite number, got {radius!r}")
    arr = np.asarray(points, dtype=float).reshape(-1, 2) if len(points) else np.zeros((0, 2))
    if not np.all(np.isfinite(arr)):
        bad = int(np.argwhere(~np.isfinite(arr))[0][0])
        raise PointFormatError(f"point {bad} has a non-finite coordinate: {tuple(arr[bad])}")
    return arr


def _pairs_dense(coords: np.ndarray, limit) -> list[Edge]:
    n = len(coords)
    out: list[Edge] = []
    for start in range(0, n, _BLOCK):
        block = coords[start : start + _BLOCK]
        dx = block[:, None, 0] - coords[None, :, 0]
        dy = block[:, None, 1] - coords[None, :, 1]
        close = dx * dx + dy * dy <= limit
        rows, cols = np.nonzero(close)
        rows = rows + start
        keep = rows < cols
        out.extend(zip(rows[keep].tolist(), cols[keep].tolist()))
    return out


def _pairs_bucketed(coords: np.ndarray, limit, cell: float) -> list[Edge]:
    keys = np.floor(coords / cell).astype(np.int64)
    buckets: dict[tuple[int, int], list[int]] = {}
    for i, (kx, ky) in enumerate(keys.tolist()):
        buckets.setdefault((kx, ky), []).append(i)
    out: list[Edge] = []
    for (kx, ky), idx in buckets.items():
        near = []
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                near.extend(buckets.get((kx + dx, ky + dy), ()))
        near_arr = np.asarray(near)
        for i in idx:
            d = coords[near_arr] - coords[i]
            hit = near_arr[(d[:, 0] * d[:, 0] + d[:, 1] * d[:, 1] <= limit) & (near_arr > i)]
            out.extend((i, int(j)) for j in hit)
    return out


def build_unit_disk_graph(
    points: Sequence[Sequence[float]],
    radius: float = 1.0,
    *,
    scaled: Sequence[tuple[int, int]] | None = None,
) -> UnitDiskGraph:
    """Build the unit disk graph of ``points`` with closed threshold ``radius``.

    Adjacency is decided on squared distances. When all coordinates and the radius are
    multiples of 0.1 (or ``scaled`` tenths are supplied directly) the decision is made
    exactly on 10x-scaled integers, so gaps of exactly ``radius`` are always adjacent.
    """
    arr = _validate(points, radius)
    n = len(arr)
    r10 = radius * 10.0
    exact = scaled is not None or (n > 0 and _on_tenth_grid(arr) and abs(r10 - round(r10)) <= _TENTH_TOL * r10)
    if scaled is not None:
        ints = np.asarray(scaled, dtype=np.int64).reshape(-1, 2)
        if len(ints) != n:
            raise GraphDomainError("scaled coordinates must match the point count")
    elif exact:
        ints = np.rint(arr * 10.0).astype(np.int64)
    if exact:
        coords, limit = ints, int(round(r10)) ** 2
        cell = float(round(r10))
    else:
        coords, limit, cell = arr, radius * radius, radius

    pairs = _pairs_dense(coords, limit) if n <= DENSE_LIMIT else _pairs_bucketed(coords.astype(float), limit, cell)
    pairs.sort()

    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in pairs:
        nbrs[u].add(v)
        nbrs[v].add(u)

    if n:
        uniq = np.unique(coords, axis=0)
        if len(uniq) < n:
            log.warning("%d duplicate point(s); duplicates become adjacent twins", n - len(uniq))

    return UnitDiskGraph(
        points=tuple((float(x), float(y)) for x, y in arr.tolist()),
        radius=float(radius),
        edges=tuple(pairs),
        neighbors=tuple(frozenset(s) for s in nbrs),
        scaled=tuple(map(tuple, ints.tolist())) if exact else None,
    )


def _check_vertex(g: UnitDiskGraph, v: int) -> None:
    if not (isinstance(v, (int, np.integer)) and 0 <= v < g.n):
        raise GraphDomainError(f"vertex {v!r} out of range for a graph on {g.n} vertices")


def closed_neighborhood(g: UnitDiskGraph, v: int) -> list[int]:
    _check_vertex(g, v)
    return sorted(g.neighbors[v] | {v})


def closed_edge_neighborhood(g: UnitDiskGraph, e: Edge) -> list[int]:
    """N[u] | N[v] for the edge ``e = (u, v)``."""
    u, v = canonical_edge(*e)
    if not g.has_edge(u, v):
        raise GraphDomainError(f"({u}, {v}) is not an edge")
    return members(g.closed_masks[u] | g.closed_masks[v])


def bfs_distances(g: UnitDiskGraph, sources: Iterable[int], within: int | None = None) -> dict[int, int]:
    """Hop distances from a source set, optionally restricted to the vertex mask ``within``."""
    dist: dict[int, int] = {}
    queue: deque[int] = deque()
    for s in sources:
        _check_vertex(g, s)
        if within is not None and not (within >> s) & 1:
            continue
        if s not in dist:
            dist[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.neighbors[u]:
            if w not in dist and (within is None or (within >> w) & 1):
                dist[w] = du
                queue.append(w)
    return dist


def r_ball(g: UnitDiskGraph, v: int, r: int, within: Iterable[int] | None = None) -> list[int]:
    """Vertices at hop distance at most ``r`` from ``v`` (inside ``G[within]`` if given)."""
    if r < 0:
        raise GraphDomainError("ball radius must be non-negative")
    mask = None if within is None else mask_of(within)
    if mask is not None and not (mask >> v) & 1:
        raise GraphDomainError(f"center {v} is not in the restricting vertex set")
    dist = bfs_distances(g, [v], mask)
    return sorted(u for u, d in dist.items() if d <= r)


def hop_distance(g: UnitDiskGraph, a: Iterable[int], b: Iterable[int]) -> float:
    """Minimum hop distance between two vertex sets; ``math.inf`` across components."""
    a, b = list(a), set(b)
    if not a or not b:
        raise GraphDomainError("hop_distance needs two non-empty vertex sets")
    for v in b:
        _check_vertex(g, v)
    dist = bfs_distances(g, a)
    found = [dist[v] for v in b if v in dist]
    return min(found) if found else INFINITE


def induced_edges(g: UnitDiskGraph, vertices: Iterable[int]) -> list[Edge]:
    mask = mask_of(vertices)
    return [(u, v) for u, v in g.edges if (mask >> u) & 1 and (mask >> v) & 1]


def isolated_in(g: UnitDiskGraph, mask: int) -> int:
    """Mask of vertices in ``mask`` that have no neighbour inside ``mask``."""
    out = 0
    for v in members(mask):
        if not g.adj_masks[v] & mask:
            out |= 1 << v
    return out


def connected_components(g: UnitDiskGraph) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for v in range(g.n):
        if v not in seen:
            comp = sorted(bfs_distances(g, [v]))
            seen.update(comp)
            comps.append(comp)
    return comps


# ---------------------------------------------------------------- point files


def parse_points(text: str, *, source: str = "<points>") -> tuple[list[Point2D], float | None]:
    """Parse either the ``x y`` line format or the JSON ``{"radius", "points"}`` variant."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise PointFormatError(f"{source}: invalid JSON at line {exc.lineno}: {exc.msg}") from None
        if "points" not in doc:
            raise PointFormatError(f"{source}: JSON point file needs a 'points' field")
        pts = []
        for i, p in enumerate(doc["points"]):
            if not (isinstance(p, (list, tuple)) and len(p) == 2):
                raise PointFormatError(f"{source}: points[{i}] must be an [x, y] pair")
            pts.append(_finite_pair(p[0], p[1], f"{source}: points[{i}]"))
        radius = doc.get("radius")
        if radius is not None and not (isinstance(radius, (int, float)) and radius > 0):
            raise PointFormatError(f"{source}: 'radius' must be a positive number")
        return pts, (None if radius is None else float(radius))

    pts = []
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) != 2:
            raise PointFormatError(f"{source}:{lineno}: expected 'x y', got {line.strip()!r}")
        pts.append(_finite_pair(parts[0], parts[1], f"{source}:{lineno}"))
    return pts, None


def _finite_pair(x, y, where: str) -> Point2D:
    try:
        fx, fy = float(x), float(y)
    except (TypeError, ValueError):
        raise PointFormatError(f"{where}: coordinates must be numbers, got {x!r} {y!r}") from None
    if not (math.isfinite(fx) and math.isfinite(fy)):
        raise PointFormatError(f"{where}: non-finite coordinate")
    return fx, fy


def read_points(path: str | Path) -> tuple[list[Point2D], float | None]:
    path = Path(path)
    return parse_points(path.read_text(encoding="utf-8"), source=str(path))


def format_points(points: Iterable[Point2D], header: str | None = None) -> str:
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    lines += [f"{_fmt(x)} {_fmt(y)}" for x, y in points]
    return "\n".join(lines) + "\n"


def _fmt(v: float) -> str:
    return str(int(v)) if v == int(v) else repr(float(v))


def write_points(path: str | Path, points: Iterable[Point2D], header: str | None = None) -> None:
    Path(path).write_text(format_points(points, header), encoding="utf-8")
