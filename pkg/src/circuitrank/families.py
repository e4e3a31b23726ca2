"""Named graph families and random generators used by tests and the CLI."""

from __future__ import annotations

import itertools
import random
from typing import Iterator, Sequence

from .graph import Graph, make_even

FAMILIES = ("cycle", "path", "complete", "star", "h_tree", "bowtie", "cactus_chain")


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError(f"cycle needs k >= 3, got {k}")
    return Graph.from_edges(k, ((i, (i + 1) % k) for i in range(k)))


def path(k: int) -> Graph:
    if k < 1:
        raise ValueError(f"path needs k >= 1, got {k}")
    return Graph.from_edges(k, ((i, i + 1) for i in range(k - 1)))


def complete(k: int) -> Graph:
    if k < 1:
        raise ValueError(f"complete needs k >= 1, got {k}")
    return Graph.from_edges(k, itertools.combinations(range(k), 2))


def star(k: int) -> Graph:
    """K_{1,k}: centre 0 and ``k`` leaves."""
    if k < 1:
        raise ValueError(f"star needs k >= 1 leaves, got {k}")
    return Graph.from_edges(k + 1, ((0, i) for i in range(1, k + 1)))


def h_tree() -> Graph:
    # a1-a2-a3 = 0-1-2, b1-b2-b3 = 3-4-5, crossbar a2-b2
    return Graph.from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5), (1, 4)])


def cactus_chain(lengths: Sequence[int]) -> Graph:
    """Cycles glued in a chain, consecutive cycles sharing one cut vertex.

    Each new cycle is attached at the vertex of the previous cycle farthest
    (along the cycle) from where that cycle was itself attached.
    """
    if not lengths:
        raise ValueError("cactus_chain needs at least one cycle length")
    edges: list[tuple[int, int]] = []
    n = 0
    anchor = 0
    for idx, k in enumerate(lengths):
        if k < 3:
            raise ValueError(f"cycle length must be >= 3, got {k}")
        if idx == 0:
            verts = list(range(k))
            n = k
        else:
            verts = [anchor] + list(range(n, n + k - 1))
            n += k - 1
        edges.extend((verts[i], verts[(i + 1) % k]) for i in range(k))
        anchor = verts[k // 2]
    return Graph.from_edges(n, edges)


def bowtie() -> Graph:
    return cactus_chain([3, 3])


def generate(family: str, k=None) -> Graph:
    """Build a named family member; ``k`` is a size or, for cactus_chain, a list."""
    if family == "h_tree":
        return h_tree()
    if family == "bowtie":
        return bowtie()
    if family == "cactus_chain":
        if k is None:
            raise ValueError("cactus_chain needs a list of cycle lengths")
        if isinstance(k, int):
            k = [k]
        return cactus_chain(list(k))
    builders = {"cycle": cycle, "path": path, "complete": complete, "star": star}
    if family not in builders:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if k is None:
        raise ValueError(f"family {family!r} needs a size parameter")
    return builders[family](int(k))


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on ``n`` vertices, by increasing edge mask."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, (e for e in itertools.combinations(range(n), 2) if rng.random() < p))


def random_connected_graph(rng: random.Random, n: int, extra: float = 0.3) -> Graph:
    """Random spanning tree plus independent extra edges."""
    edges = {(min(i, j), max(i, j)) for i in range(1, n) for j in [rng.randrange(i)]}
    for e in itertools.combinations(range(n), 2):
        if e not in edges and rng.random() < extra:
            edges.add(e)
    return Graph.from_edges(n, edges)


def random_odd_tree(rng: random.Random, steps: int) -> Graph:
    """Grow a tree in which every vertex has odd degree.

    Starting from K_2, each step picks a leaf and gives it two new children,
    so every degree is 1 or 3.
    """
    edges = [(0, 1)]
    deg = [1, 1]
    for _ in range(steps):
        leaves = [x for x, d in enumerate(deg) if d == 1]
        x = rng.choice(leaves)
        a, b = len(deg), len(deg) + 1
        edges += [(x, a), (x, b)]
        deg[x] += 2
        deg += [1, 1]
    return Graph.from_edges(len(deg), edges)


def random_cactus(rng: random.Random, lengths: Sequence[int]) -> Graph:
    """Cycle-spliced graph: each new cycle is glued at one random existing vertex."""
    edges: list[tuple[int, int]] = []
    n = 0
    for idx, k in enumerate(lengths):
        if idx == 0:
            verts = list(range(k))
            n = k
        else:
            verts = [rng.randrange(n)] + list(range(n, n + k - 1))
            n += k - 1
        edges.extend((verts[i], verts[(i + 1) % k]) for i in range(k))
    return Graph.from_edges(n, edges)


def random_connected_even_graph(rng: random.Random, n: int, extra: float = 0.3) -> Graph:
    """Connected even graph: the parity completion of a random connected graph."""
    return make_even(random_connected_graph(rng, n, extra))
