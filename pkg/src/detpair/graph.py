"""Undirected simple graphs, BFS distances and structural queries on trees.

Vertices are the integers ``0..n-1``. Adjacency lists are kept sorted so
every iteration order in the package is id-ascending.

Tree terminology used throughout:

* a *leaf* has degree 1, a *branching point* degree at least 3;
* a *leg* of a branching point ``x`` is a path from a neighbour of ``x`` to a
  leaf whose inner vertices all have degree 2 (``x`` itself is excluded);
* a branching point with at least one leg is *special*; one with exactly
  ``t`` leaf neighbours is a ``t``-stem;
* ``B2+`` is the set of special branching points with two or more legs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import BadParam, NotATree, NotSpecialBranchingPoint

INF = math.inf


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise BadParam("adjacency length does not match n")
        object.__setattr__(self, "_m", sum(map(len, self.adj)) // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        if n < 0:
            raise BadParam("n must be non-negative")
        nbrs: list[list[int]] = [[] for _ in range(n)]
        # one shared int object per id keeps adjacency compact in memory
        ids = list(range(n))
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise BadParam(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise BadParam(f"self-loop at {u}")
            nbrs[u].append(ids[v])
            nbrs[v].append(ids[u])
        adj = []
        for u, s in enumerate(nbrs):
            s.sort()
            for a, b in zip(s, s[1:]):
                if a == b:
                    raise BadParam(f"duplicate edge ({min(u, a)}, {max(u, a)})")
            adj.append(tuple(s))
        return cls(n, tuple(adj))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def m(self) -> int:
        return self._m

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def closed_neighbourhood(self, v: int) -> tuple[int, ...]:
        return (v,) + self.adj[v]


def bfs_distances(g: Graph, source: int) -> list:
    """Hop distances from ``source``; unreachable vertices get ``INF``."""
    if not 0 <= source < g.n:
        raise BadParam(f"source {source} out of range")
    dist: list = [INF] * g.n
    dist[source] = 0
    frontier = [source]
    d = 0
    adj = g.adj
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if dist[w] is INF:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return INF not in bfs_distances(g, 0)


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and len(bfs_order(g, 0)[0]) == g.n


def tree_bfs(g: Graph, root: int = 0) -> tuple[list[int], list[int]]:
    """``bfs_order`` for trees; raises ``NotATree`` otherwise."""
    if g.n < 1 or g.m != g.n - 1:
        raise NotATree("input graph is not a tree")
    order, parent = bfs_order(g, root)
    if len(order) != g.n:
        raise NotATree("input graph is not a tree")
    return order, parent


def distance_matrix(g: Graph) -> list[list]:
    return [bfs_distances(g, s) for s in range(g.n)]


def bfs_order(g: Graph, root: int) -> tuple[list[int], list[int]]:
    """BFS order and parent array (``-1`` for the root) of a connected graph."""
    parent = [-2] * g.n
    parent[root] = -1
    order = [root]
    adj = g.adj
    i = 0
    while i < len(order):
        u = order[i]
        i += 1
        for w in adj[u]:
            if parent[w] == -2:
                parent[w] = u
                order.append(w)
    return order, parent


@dataclass(frozen=True)
class TreeStructure:
    g: Graph
    root: int
    parent: tuple[int, ...]
    leaves: frozenset
    branching_points: frozenset
    special_branching_points: frozenset
    # x -> legs of x, each stored from the neighbour of x out to the leaf
    legs: dict = field(repr=False)
    # x -> number of leaf neighbours of x
    stems: dict = field(repr=False)
    # vertex -> the special branching point whose leg contains it
    leg_owner: dict = field(repr=False)

    @property
    def b2plus(self) -> list[int]:
        return sorted(x for x, ls in self.legs.items() if len(ls) >= 2)

    def long_legs(self, x: int) -> list[tuple[int, ...]]:
        return [leg for leg in self.legs[x] if len(leg) >= 2]

    def leaf_neighbours(self, x: int) -> list[int]:
        return [leg[0] for leg in self.legs[x] if len(leg) == 1]

    def children(self, v: int) -> list[int]:
        p = self.parent[v]
        return [w for w in self.g.adj[v] if w != p]

    def is_path(self) -> bool:
        return not self.branching_points


def analyze_tree(g: Graph, root: int = 0) -> TreeStructure:
    _, parent = tree_bfs(g, root)
    deg = list(map(len, g.adj))
    leaves = frozenset(v for v in range(g.n) if deg[v] == 1)
    branching = frozenset(v for v in range(g.n) if deg[v] >= 3)

    legs: dict[int, list[tuple[int, ...]]] = {}
    leg_owner: dict[int, int] = {}
    for y in sorted(leaves):
        path = [y]
        prev, cur = y, g.adj[y][0]
        while deg[cur] == 2:
            path.append(cur)
            a, b = g.adj[cur]
            prev, cur = cur, (b if a == prev else a)
        if deg[cur] >= 3:
            path.reverse()
            legs.setdefault(cur, []).append(tuple(path))
            for v in path:
                leg_owner[v] = cur
    for x in legs:
        legs[x].sort(key=lambda leg: leg[-1])
    stems = {x: sum(1 for leg in ls if len(leg) == 1) for x, ls in legs.items()}
    return TreeStructure(
        g=g,
        root=root,
        parent=tuple(parent),
        leaves=leaves,
        branching_points=branching,
        special_branching_points=frozenset(legs),
        legs=legs,
        stems=stems,
        leg_owner=leg_owner,
    )


def subtree_Lx(ts: TreeStructure, x: int) -> frozenset:
    """``x`` together with every vertex on a leg attached to ``x``."""
    if x not in ts.legs:
        raise NotSpecialBranchingPoint(f"{x} is not a special branching point")
    out = {x}
    for leg in ts.legs[x]:
        out.update(leg)
    return frozenset(out)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Relabelled induced subgraph plus the new-id -> old-id mapping."""
    old = sorted(set(vertices))
    new_id = [-1] * g.n
    for i, v in enumerate(old):
        new_id[v] = i
    # the relabelling is monotone, so adjacency lists stay sorted
    adj = tuple(tuple(new_id[w] for w in g.adj[v] if new_id[w] >= 0) for v in old)
    return Graph(len(old), adj), old
