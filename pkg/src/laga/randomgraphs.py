"""Seeded random layered graphs for property testing."""

from __future__ import annotations

import random

from .errors import LagaError
from .graphs import LayeredGraph, V, build_graph, is_uniform


def random_layered_graph(
    rng: random.Random,
    max_levels: int = 4,
    max_width: int = 6,
    unique_minimal: bool = True,
) -> LayeredGraph:
    """A random layered graph with every positive vertex covering a
    nonempty random subset of the level below."""
    nlevels = rng.randint(2, max_levels)
    sizes = [1 if unique_minimal else rng.randint(1, max_width)]
    sizes += [rng.randint(1, max_width) for _ in range(nlevels - 1)]
    edges = []
    for n in range(1, nlevels):
        below = list(range(sizes[n - 1]))
        for i in range(sizes[n]):
            count = rng.randint(1, len(below))
            for j in rng.sample(below, count):
                edges.append((V(n, i), V(n - 1, j)))
    return build_graph(
        sizes,
        edges,
        unique_minimal=sizes[0] == 1,
        positive_outdegree=True,
    )


def random_uniform_graph(
    rng: random.Random,
    max_levels: int = 4,
    max_width: int = 6,
    attempts: int = 1000,
) -> LayeredGraph:
    """Rejection-sample random graphs until one is uniform."""
    for _ in range(attempts):
        g = random_layered_graph(rng, max_levels=max_levels, max_width=max_width)
        uniform, _ = is_uniform(g)
        if uniform:
            return g
    raise LagaError(f"no uniform graph found in {attempts} attempts")
