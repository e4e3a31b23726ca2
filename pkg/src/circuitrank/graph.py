"""Simple undirected graphs, degree/component statistics and parity completions."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Edges are stored as sorted ``(u, v)`` pairs with ``u < v``, in
    lexicographic order; the position of a pair in ``edges`` is its edge
    index, which is the coordinate used by every edge-set bit vector.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        prev = None
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"invalid edge ({u}, {v}) for n={self.n}")
            if prev is not None and (u, v) <= prev:
                raise ValueError("edges must be distinct and sorted")
            prev = (u, v)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, normalising pair order; loops and repeats are rejected."""
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in norm:
                raise ValueError(f"parallel edge {e}")
            norm.add(e)
        return cls(n, tuple(sorted(norm)))

    @property
    def e(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], [s]
            while stack:
                x = stack.pop()
                for y in self.adjacency[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
                        comp.append(y)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def is_even(self) -> bool:
        return all(d % 2 == 0 for d in self.degrees)

    def is_odd(self) -> bool:
        return all(d % 2 == 1 for d in self.degrees)

    def relabel(self, perm: list[int]) -> "Graph":
        """Return the graph with vertex ``i`` renamed ``perm[i]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))


@dataclass(frozen=True)
class GraphStats:
    v: int
    e: int
    c: int
    c_e: int
    v_e: int
    v_o: int
    theta: int
    parity_indicator: int
    degree_parities: tuple[int, ...]


def compute_stats(g: Graph) -> GraphStats:
    """Counts used throughout the bounds.

    ``parity_indicator`` is 0 when every degree is even and 1 otherwise, so a
    graph that is neither even nor odd gets 1.  An isolated vertex counts as
    an even component.
    """
    par = tuple(d & 1 for d in g.degrees)
    v_o = sum(par)
    comps = g.components
    c_e = sum(1 for comp in comps if not any(par[x] for x in comp))
    c = len(comps)
    return GraphStats(
        v=g.n,
        e=g.e,
        c=c,
        c_e=c_e,
        v_e=g.n - v_o,
        v_o=v_o,
        theta=g.e - g.n + c,
        parity_indicator=0 if v_o == 0 else 1,
        degree_parities=par,
    )


def make_even(g: Graph) -> Graph:
    """Join every odd-degree vertex to one new vertex (identity on even graphs)."""
    odd = [x for x, d in enumerate(g.degrees) if d & 1]
    if not odd:
        return g
    u = g.n
    return Graph.from_edges(g.n + 1, list(g.edges) + [(x, u) for x in odd])


def make_odd(g: Graph) -> Graph:
    """Hang one new pendant vertex on every even-degree vertex."""
    even = [x for x, d in enumerate(g.degrees) if d % 2 == 0]
    extra = [(x, g.n + k) for k, x in enumerate(even)]
    return Graph.from_edges(g.n + len(even), list(g.edges) + extra)
