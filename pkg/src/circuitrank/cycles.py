"""Cycle, cut and bicycle spaces, and packing of edge-disjoint odd cycles."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .f2 import BinaryMatrix, F2Subspace, f2_intersect, f2_nullity
from .graph import Graph

DEFAULT_CYCLE_CAP = 5000
DEFAULT_NODE_BUDGET = 10**6


@dataclass(frozen=True)
class EdgeSubset:
    """An element of the edge space: bit ``i`` set means edge ``i`` is present."""

    ambient_dim: int
    bits: int

    def indices(self) -> list[int]:
        x, out = self.bits, []
        while x:
            low = x & -x
            out.append(low.bit_length() - 1)
            x ^= low
        return out

    def __len__(self) -> int:
        return self.bits.bit_count()


@dataclass(frozen=True)
class TauResult:
    value: int
    certificate: tuple[EdgeSubset, ...]
    exact: bool


def _spanning_forest(g: Graph):
    """BFS forest, rooted at the smallest vertex of each component."""
    parent = [-1] * g.n
    parent_edge = [-1] * g.n
    depth = [0] * g.n
    seen = [False] * g.n
    roots = []
    tree_edges = set()
    for s in range(g.n):
        if seen[s]:
            continue
        roots.append(s)
        seen[s] = True
        q = deque([s])
        while q:
            x = q.popleft()
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    idx = g.edge_index[(min(x, y), max(x, y))]
                    parent_edge[y] = idx
                    tree_edges.add(idx)
                    depth[y] = depth[x] + 1
                    q.append(y)
    return parent, parent_edge, depth, roots, tree_edges


def fundamental_cycles(g: Graph) -> list[EdgeSubset]:
    """One cycle per non-tree edge of the BFS forest."""
    parent, parent_edge, depth, _, tree = _spanning_forest(g)
    out = []
    for idx, (u, v) in enumerate(g.edges):
        if idx in tree:
            continue
        bits = 1 << idx
        while u != v:
            if depth[u] < depth[v]:
                u, v = v, u
            bits ^= 1 << parent_edge[u]
            u = parent[u]
        out.append(EdgeSubset(g.e, bits))
    return out


def cycle_basis(g: Graph) -> F2Subspace:
    return F2Subspace.from_vectors(g.e, (c.bits for c in fundamental_cycles(g)))


def star_cut(g: Graph, x: int) -> int:
    bits = 0
    for y in g.adjacency[x]:
        bits |= 1 << g.edge_index[(min(x, y), max(x, y))]
    return bits


def cut_basis(g: Graph) -> F2Subspace:
    """Star cuts of every vertex except one root per component."""
    roots = {comp[0] for comp in g.components}
    return F2Subspace.from_vectors(g.e, (star_cut(g, x) for x in range(g.n) if x not in roots))


def bicycle_basis(g: Graph) -> F2Subspace:
    return f2_intersect(cycle_basis(g), cut_basis(g))


def is_even_subgraph(g: Graph, bits: int) -> bool:
    return all((star_cut(g, x) & bits).bit_count() % 2 == 0 for x in range(g.n))


def adjacency_f2(g: Graph) -> BinaryMatrix:
    return BinaryMatrix.from_row_ints([sum(1 << y for y in a) for a in g.adjacency], g.n)


def parity_laplacian(g: Graph) -> BinaryMatrix:
    """Laplacian reduced mod 2: degree parities on the diagonal plus A."""
    rows = [sum(1 << y for y in a) | ((len(a) & 1) << x) for x, a in enumerate(g.adjacency)]
    return BinaryMatrix.from_row_ints(rows, g.n)


def beta_via_parity_laplacian(g: Graph) -> int:
    return f2_nullity(parity_laplacian(g)) - len(g.components)


# --------------------------------------------------------------- odd cycles


class _CapExceeded(Exception):
    pass


def odd_cycles(g: Graph, cap: int | None = None, alive: int | None = None) -> list[int]:
    """Edge masks of all simple odd cycles, optionally restricted to ``alive`` edges.

    Each cycle is found once, from its smallest vertex, in the direction
    whose second vertex is smaller than its last.  Raises ``_CapExceeded``
    when more than ``cap`` cycles exist.
    """
    adj = _alive_adjacency(g, alive)
    out: list[int] = []
    for s in range(g.n):
        path = [s]
        on_path = [False] * g.n
        on_path[s] = True

        def extend(x, mask):
            for y, idx in adj[x]:
                if y < s:
                    continue
                if y == s:
                    if len(path) >= 3 and len(path) % 2 == 1 and path[1] < path[-1]:
                        out.append(mask | 1 << idx)
                        if cap is not None and len(out) > cap:
                            raise _CapExceeded
                    continue
                if on_path[y]:
                    continue
                on_path[y] = True
                path.append(y)
                extend(y, mask | 1 << idx)
                path.pop()
                on_path[y] = False

        extend(s, 0)
    return out


def _alive_adjacency(g: Graph, alive: int | None):
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for idx, (u, v) in enumerate(g.edges):
        if alive is None or alive >> idx & 1:
            adj[u].append((v, idx))
            adj[v].append((u, idx))
    return adj


def _lex_key(mask: int) -> tuple[int, tuple[int, ...]]:
    return mask.bit_count(), tuple(EdgeSubset(0, mask).indices())


def shortest_odd_cycle(g: Graph, alive: int | None = None) -> int | None:
    """Shortest odd cycle among ``alive`` edges, ties broken by sorted edge indices."""
    adj = _alive_adjacency(g, alive)
    best_len = None
    # shortest odd closed walk through s = shortest odd cycle length overall
    for s in range(g.n):
        dist = {(s, 0): 0}
        q = deque([(s, 0)])
        while q:
            x, par = q.popleft()
            d = dist[(x, par)]
            if best_len is not None and d >= best_len:
                break
            for y, _ in adj[x]:
                st = (y, par ^ 1)
                if st not in dist:
                    dist[st] = d + 1
                    q.append(st)
        if (s, 1) in dist and (best_len is None or dist[(s, 1)] < best_len):
            best_len = dist[(s, 1)]
    if best_len is None:
        return None
    length = best_len
    best = None
    for s in range(g.n):
        path = [s]
        on_path = {s}

        def extend(x, mask):
            nonlocal best
            for y, idx in adj[x]:
                if y < s:
                    continue
                if y == s:
                    if len(path) == length and path[1] < path[-1]:
                        m = mask | 1 << idx
                        if best is None or _lex_key(m) < _lex_key(best):
                            best = m
                    continue
                if y in on_path or len(path) == length:
                    continue
                on_path.add(y)
                path.append(y)
                extend(y, mask | 1 << idx)
                path.pop()
                on_path.discard(y)

        extend(s, 0)
    return best


def _greedy(g: Graph) -> list[int]:
    alive = (1 << g.e) - 1
    chosen = []
    while True:
        c = shortest_odd_cycle(g, alive)
        if c is None:
            return chosen
        chosen.append(c)
        alive &= ~c


def _greedy_from_list(cycles: list[int]) -> list[int]:
    used = 0
    chosen = []
    for c in sorted(cycles, key=_lex_key):
        if not c & used:
            chosen.append(c)
            used |= c
    return chosen


def _vertex_masks(g: Graph) -> list[int]:
    return [star_cut(g, x) for x in range(g.n)]


def _max_packing(cycles: list[int], vmasks: list[int], incumbent: list[int], budget: int):
    """Branch and bound for the largest set of pairwise edge-disjoint cycles.

    Branches on the lowest edge still covered by a candidate cycle: either
    one of the candidates through it is taken, or the edge is dropped.  The
    bound uses that a union of cycles meets every vertex in an even number
    of edges.  Returns ``(best, completed)``.
    """
    best = list(incumbent)
    nodes = 0
    min_len = min((c.bit_count() for c in cycles), default=3)
    order = sorted(cycles, key=_lex_key)

    def bound(cands):
        usable = 0
        for c in cands:
            usable |= c
        deg_sum = 0
        for vm in vmasks:
            deg_sum += (usable & vm).bit_count() & ~1
        return min(len(cands), deg_sum // 2 // min_len)

    def search(cands, chosen):
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            raise _CapExceeded
        if len(chosen) > len(best):
            best = list(chosen)
        if not cands or len(chosen) + bound(cands) <= len(best):
            return
        usable = 0
        for c in cands:
            usable |= c
        e = usable & -usable
        through = [c for c in cands if c & e]
        for c in through:
            rest = [d for d in cands if not d & c]
            chosen.append(c)
            search(rest, chosen)
            chosen.pop()
        search([d for d in cands if not d & e], chosen)

    try:
        search(order, [])
    except _CapExceeded:
        return best, False
    return best, True


def odd_cycle_packing(
    g: Graph,
    mode: str = "exact",
    budget: int = DEFAULT_NODE_BUDGET,
    cycle_cap: int = DEFAULT_CYCLE_CAP,
) -> TauResult:
    """Maximum number of pairwise edge-disjoint odd cycles.

    ``exact`` mode enumerates odd cycles and runs branch and bound; if the
    cycle count exceeds ``cycle_cap`` or the node budget runs out, the best
    packing found is returned with ``exact=False``.  ``greedy`` mode strips
    shortest odd cycles one at a time and is never marked exact.
    """
    if mode not in ("exact", "greedy"):
        raise ValueError(f"unknown tau mode {mode!r}")

    def wrap(masks, exact):
        masks = sorted(masks, key=_lex_key)
        return TauResult(len(masks), tuple(EdgeSubset(g.e, m) for m in masks), exact)

    if mode == "greedy":
        return wrap(_greedy(g), False)
    try:
        cycles = odd_cycles(g, cap=cycle_cap)
    except _CapExceeded:
        return wrap(_greedy(g), False)
    if not cycles:
        return wrap([], True)
    best, done = _max_packing(cycles, _vertex_masks(g), _greedy_from_list(cycles), budget)
    return wrap(best, done)


def is_simple_cycle(g: Graph, bits: int) -> bool:
    """True when the edge set is one connected 2-regular subgraph."""
    if not bits:
        return False
    es = [g.edges[i] for i in EdgeSubset(g.e, bits).indices()]
    deg: dict[int, int] = {}
    for u, v in es:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if any(d != 2 for d in deg.values()):
        return False
    adj: dict[int, list[int]] = {x: [] for x in deg}
    for u, v in es:
        adj[u].append(v)
        adj[v].append(u)
    start = es[0][0]
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(deg)
