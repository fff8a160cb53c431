"""Logarithmic-factor approximation on arbitrary connected graphs.

Every unordered vertex pair becomes a universe element. Each vertex ``v``
contributes two candidate sets: the pairs a watcher at ``v`` dominates (at
least one endpoint in ``N[v]``) and the pairs a listener at ``v`` separates.
A collection of sets covers the universe exactly when the corresponding
watchers and listeners form a detection pair, so the classic greedy cover
gives size at most ``(ln C(n,2) + 1) * DP(G) <= (2 ln n + 1) * DP(G)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .detection import DetectionPair, _require_connected
from .errors import TooLarge, Uncoverable
from .graph import Graph, bfs_distances

WATCHER = "W"
LISTENER = "L"
DEFAULT_SETCOVER_CEILING = 2000


def pair_index(u: int, v: int, n: int) -> int:
    if u > v:
        u, v = v, u
    return u * n - u * (u + 1) // 2 + (v - u - 1)


@dataclass(frozen=True)
class SetCoverInstance:
    n: int
    universe_size: int
    # (vertex, kind) tags and covered-element bitsets, watchers first
    tags: tuple
    sets: tuple

    def covers(self, chosen) -> bool:
        acc = 0
        lookup = dict(zip(self.tags, self.sets))
        for tag in chosen:
            acc |= lookup[tag]
        return acc == (1 << self.universe_size) - 1


def build_instance(g: Graph, ceiling: int = DEFAULT_SETCOVER_CEILING) -> SetCoverInstance:
    _require_connected(g)
    n = g.n
    if n > ceiling:
        raise TooLarge(f"n={n} exceeds set-cover ceiling {ceiling}")
    size = n * (n - 1) // 2

    # row_bits[x]: bits of all pairs {x, y}, y != x
    row_bits = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            b = 1 << pair_index(u, v, n)
            row_bits[u] |= b
            row_bits[v] |= b

    watcher_sets = []
    for v in range(n):
        bits = 0
        for x in g.closed_neighbourhood(v):
            bits |= row_bits[x]
        watcher_sets.append(bits)

    listener_sets = []
    for v in range(n):
        dist = bfs_distances(g, v)
        levels: dict[int, list[int]] = {}
        for x, d in enumerate(dist):
            levels.setdefault(d, []).append(x)
        # pairs inside one distance level are the only ones not separated
        same = 0
        for group in levels.values():
            for i, x in enumerate(group):
                for y in group[i + 1:]:
                    same |= 1 << pair_index(x, y, n)
        listener_sets.append(((1 << size) - 1) & ~same)

    tags = tuple((v, WATCHER) for v in range(n)) + tuple((v, LISTENER) for v in range(n))
    return SetCoverInstance(n, size, tags, tuple(watcher_sets + listener_sets))


def greedy_set_cover(inst: SetCoverInstance) -> list[tuple[int, str]]:
    """Repeatedly take the set covering the most uncovered elements.

    Ties go to the earlier tag: watchers before listeners, then lower id.
    """
    uncovered = (1 << inst.universe_size) - 1
    union = 0
    for s in inst.sets:
        union |= s
    if union != uncovered:
        raise Uncoverable("some pair is contained in no candidate set")
    chosen = []
    while uncovered:
        best, best_gain = -1, 0
        for i, s in enumerate(inst.sets):
            gain = (s & uncovered).bit_count()
            if gain > best_gain:
                best, best_gain = i, gain
        chosen.append(inst.tags[best])
        uncovered &= ~inst.sets[best]
    return chosen


def cover_to_pair(chosen) -> DetectionPair:
    W = frozenset(v for v, kind in chosen if kind == WATCHER)
    L = frozenset(v for v, kind in chosen if kind == LISTENER)
    return DetectionPair(W, L)


def approx_detection_pair(g: Graph) -> DetectionPair:
    _require_connected(g)
    if g.n <= 1:
        return DetectionPair()
    return cover_to_pair(greedy_set_cover(build_instance(g)))
