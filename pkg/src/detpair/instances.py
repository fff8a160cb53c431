"""Instance generators and the edge-list file format.

File format: a header line ``n m`` followed by ``m`` lines ``u v`` with
``0 <= u < v < n``; lines starting with ``#`` are comments.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional

from .errors import BadParam
from .graph import Graph, is_connected


@dataclass(frozen=True)
class InstanceSpec:
    family: str
    n: Optional[int] = None
    l: Optional[int] = None
    star_size: int = 3
    legs: tuple = ()
    seed: int = 0
    p: float = 0.3

    FAMILIES = ("path", "complete", "star", "spider", "t1", "t2", "random_tree", "random_graph")

    def build(self) -> Graph:
        f = self.family
        if f == "path":
            return gen_path(_need(self.n, "n"))
        if f == "complete":
            return gen_complete(_need(self.n, "n"))
        if f == "star":
            return gen_star(_need(self.n, "n") - 1)
        if f == "spider":
            return gen_spider(self.legs)
        if f == "t1":
            return gen_t1(_need(self.l, "l"), self.star_size)
        if f == "t2":
            return gen_t2(_need(self.l, "l"))
        if f == "random_tree":
            return gen_random_tree(_need(self.n, "n"), self.seed)
        if f == "random_graph":
            return gen_random_graph(_need(self.n, "n"), self.p, self.seed)
        raise BadParam(f"unknown family {f!r}")


def _need(value, name):
    if value is None:
        raise BadParam(f"parameter {name} is required")
    return value


def gen_path(n: int) -> Graph:
    if n < 1:
        raise BadParam("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise BadParam("complete graph needs n >= 1")
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def gen_star(m: int) -> Graph:
    """K_{1,m}: centre 0 and leaves 1..m."""
    if m < 1:
        raise BadParam("star needs at least one leaf")
    return Graph.from_edges(m + 1, [(0, i) for i in range(1, m + 1)])


def gen_spider(leg_lengths: Iterable[int]) -> Graph:
    """Centre 0 with one path per entry of ``leg_lengths``."""
    lengths = list(leg_lengths)
    if not lengths or min(lengths) < 1:
        raise BadParam("spider needs at least one leg, all of length >= 1")
    edges = []
    nxt = 1
    for length in lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def gen_t1(l: int, star_size: int = 3) -> Graph:
    """``l`` stars of ``star_size`` leaves whose centres share one extra neighbour.

    The extra vertex is 0; star ``i`` has centre ``1 + i*(star_size+1)``.
    """
    if l < 1 or star_size < 3:
        raise BadParam("t1 needs l >= 1 and star_size >= 3")
    edges = []
    nxt = 1
    for _ in range(l):
        centre = nxt
        edges.append((0, centre))
        for j in range(1, star_size + 1):
            edges.append((centre, centre + j))
        nxt = centre + star_size + 1
    return Graph.from_edges(nxt, edges)


def gen_t2(l: int) -> Graph:
    """Backbone path of ``l + 2`` vertices, two leaves on each end, and on each
    inner backbone vertex a three-leaf star (one edge subdivided) hung by its centre.

    Backbone vertices are ``0..l+1``.
    """
    if l < 1:
        raise BadParam("t2 needs l >= 1")
    edges = [(i, i + 1) for i in range(l + 1)]
    nxt = l + 2
    for end in (0, l + 1):
        edges += [(end, nxt), (end, nxt + 1)]
        nxt += 2
    for v in range(1, l + 1):
        c, sub, tip, b, d = range(nxt, nxt + 5)
        edges += [(v, c), (c, sub), (sub, tip), (c, b), (c, d)]
        nxt += 5
    return Graph.from_edges(nxt, edges)


def prufer_decode(seq: list[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(heap)
    edges = []
    for x in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(heap, x)
    u, v = heapq.heappop(heap), heapq.heappop(heap)
    edges.append((u, v))
    return edges


def gen_random_tree(n: int, seed: int = 0) -> Graph:
    """Uniform random labelled tree (Prüfer decoding), deterministic per seed."""
    if n < 1:
        raise BadParam("random tree needs n >= 1")
    if n == 1:
        return Graph.from_edges(1, [])
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return Graph.from_edges(n, prufer_decode(seq, n))


def gen_random_graph(n: int, p: float, seed: int = 0, max_tries: int = 1000) -> Graph:
    """Erdős–Rényi G(n, p) conditioned on connectivity by rejection."""
    if n < 1 or not 0.0 <= p <= 1.0:
        raise BadParam("random graph needs n >= 1 and 0 <= p <= 1")
    rng = random.Random(seed)
    for _ in range(max_tries):
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            return g
    raise BadParam(f"no connected G({n}, {p}) found in {max_tries} tries")


def gen_double_broom(path_len: int) -> Graph:
    """Two 2-stems joined by a path of ``path_len`` inner vertices."""
    if path_len < 0:
        raise BadParam("path_len must be >= 0")
    n = path_len + 6
    a, b = 0, path_len + 1
    edges = [(i, i + 1) for i in range(path_len + 1)]
    edges += [(a, b + 1), (a, b + 2), (b, b + 3), (b, b + 4)]
    return Graph.from_edges(n, edges)


def write_edge_list(g: Graph, path, comment: Optional[str] = None):
    lines = []
    if comment:
        lines += [f"# {line}" for line in comment.splitlines()]
    lines.append(f"{g.n} {g.m}")
    lines += [f"{u} {v}" for u, v in g.edges()]
    Path(path).write_text("\n".join(lines) + "\n")


def parse_edge_list(text: str) -> Graph:
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line.split())
    if not rows:
        raise BadParam("empty graph file")
    try:
        n, m = (int(x) for x in rows[0])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError:
        raise BadParam("malformed edge-list line") from None
    if len(edges) != m:
        raise BadParam(f"header announces {m} edges, found {len(edges)}")
    for u, v in edges:
        if not 0 <= u < v < n:
            raise BadParam(f"edge line '{u} {v}' violates 0 <= u < v < n")
    return Graph.from_edges(n, edges)


def read_edge_list(path) -> Graph:
    return parse_edge_list(Path(path).read_text())
