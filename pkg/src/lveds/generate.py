"""Seeded random point sets for tests and benchmarks."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geom import Point2D


class GeneratorError(RuntimeError):
    pass


@dataclass(frozen=True)
class GeneratorSpec:
    n: int
    side: float
    seed: int = 0
    min_sep: float | None = None
    max_attempts: int = 1000

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if not (self.side > 0 and math.isfinite(self.side)):
            raise ValueError("side must be positive")
        if self.min_sep is not None and self.min_sep < 0:
            raise ValueError("min_sep must be non-negative")


def generate_random_instance(spec: GeneratorSpec) -> list[Point2D]:
    """``n`` points uniform in ``[0, side]^2``; identical for identical specs.

    With ``min_sep`` each point is rejection-sampled until it keeps that distance from
    all earlier points, giving up after ``max_attempts`` draws for a single point.
    """
    rng = np.random.default_rng(spec.seed)
    if not spec.min_sep:
        return [(float(x), float(y)) for x, y in rng.uniform(0.0, spec.side, size=(spec.n, 2))]
    pts = np.empty((spec.n, 2))
    sep2 = spec.min_sep**2
    for i in range(spec.n):
        for _ in range(spec.max_attempts):
            cand = rng.uniform(0.0, spec.side, size=2)
            if i == 0 or np.min(np.sum((pts[:i] - cand) ** 2, axis=1)) >= sep2:
                pts[i] = cand
                break
        else:
            raise GeneratorError(
                f"could not place point {i} at separation {spec.min_sep} after {spec.max_attempts} attempts"
            )
    return [(float(x), float(y)) for x, y in pts]
