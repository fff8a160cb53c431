"""Watchers, listeners and detection pairs.

A watcher at ``w`` dominates ``N[w]``; a listener at ``l`` separates ``u`` and
``v`` when ``d(u, l) != d(v, l)``. ``(W, L)`` is a detection pair when any two
distinct vertices that are both undominated are separated by some listener.

The brute-force oracles here are exponential and only meant as ground
truth for small graphs.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .errors import BadParam, Disconnected, NoSolutionWithin, TooLarge
from .graph import INF, Graph, bfs_distances, distance_matrix, is_connected

DEFAULT_BRUTE_CEILING = 14


def brute_ceiling() -> int:
    raw = os.environ.get("DETPAIR_BRUTE_CEILING")
    return int(raw) if raw else DEFAULT_BRUTE_CEILING


@dataclass(frozen=True)
class DetectionPair:
    watchers: frozenset = frozenset()
    listeners: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "watchers", frozenset(self.watchers))
        object.__setattr__(self, "listeners", frozenset(self.listeners))

    def size(self) -> int:
        # a vertex holding both kinds of detector counts twice
        return len(self.watchers) + len(self.listeners)

    def detectors(self) -> frozenset:
        return self.watchers | self.listeners

    def to_dict(self) -> dict:
        return {"watchers": sorted(self.watchers), "listeners": sorted(self.listeners)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, obj: dict) -> "DetectionPair":
        try:
            W, L = frozenset(obj["watchers"]), frozenset(obj["listeners"])
        except (KeyError, TypeError) as exc:
            raise BadParam(f"malformed witness: {exc}") from None
        if not all(type(v) is int for v in W | L):
            raise BadParam("witness vertex ids must be integers")
        return cls(W, L)

    @classmethod
    def from_json(cls, text: str) -> "DetectionPair":
        try:
            obj = json.loads(text)
        except ValueError as exc:
            raise BadParam(f"witness is not valid JSON: {exc}") from None
        return cls.from_dict(obj)


@dataclass(frozen=True)
class OracleResult:
    value: int
    witness: object  # DetectionPair for DP, frozenset of vertices for gamma / MD


def _require_connected(g: Graph):
    if not is_connected(g):
        raise Disconnected("graph is disconnected")


def _check_ids(g: Graph, vertices: Iterable[int]):
    for v in vertices:
        if not 0 <= v < g.n:
            raise BadParam(f"vertex {v} out of range for n={g.n}")


def dominates(g: Graph, w: int, u: int) -> bool:
    return u == w or u in g.adj[w]


def separates(g: Graph, l: int, u: int, v: int) -> bool:
    _require_connected(g)
    d = bfs_distances(g, l)
    return d[u] != d[v]


def dominated_set(g: Graph, watchers: Iterable[int]) -> set[int]:
    out: set[int] = set()
    for w in watchers:
        out.add(w)
        out.update(g.adj[w])
    return out


def find_violation(g: Graph, dp: DetectionPair, dist_rows: Optional[dict] = None):
    """Return an undistinguished pair ``(u, v)`` with ``u < v``, or ``None``.

    ``dist_rows`` may map listener ids to precomputed distance lists.
    """
    _check_ids(g, dp.watchers | dp.listeners)
    dom = dominated_set(g, dp.watchers)
    rows = []
    for l in sorted(dp.listeners):
        row = dist_rows[l] if dist_rows and l in dist_rows else bfs_distances(g, l)
        rows.append(row)
    seen: dict[tuple, int] = {}
    for u in range(g.n):
        if u in dom:
            continue
        sig = tuple(row[u] for row in rows)
        if INF in sig:
            raise Disconnected("graph is disconnected")
        if sig in seen:
            return (seen[sig], u)
        seen[sig] = u
    return None


def verify(g: Graph, dp: DetectionPair) -> bool:
    _require_connected(g)
    return find_violation(g, dp) is None


# ---------------------------------------------------------------------------
# brute-force oracles
# ---------------------------------------------------------------------------


def _pair_masks(g: Graph, watcher_slots: bool, listener_slots: bool) -> list[int]:
    """For every vertex pair, the bitmask of typed slots that handle it.

    Slot ``2v`` is a watcher at ``v``, slot ``2v + 1`` a listener at ``v``.
    Masks are sorted by popcount so infeasible candidates fail fast.
    """
    D = distance_matrix(g)
    closed = [set(g.closed_neighbourhood(v)) for v in range(g.n)]
    masks = []
    for u, v in combinations(range(g.n), 2):
        m = 0
        if watcher_slots:
            for w in closed[u] | closed[v]:
                m |= 1 << (2 * w)
        if listener_slots:
            for l in range(g.n):
                if D[l][u] != D[l][v]:
                    m |= 1 << (2 * l + 1)
        masks.append(m)
    masks.sort(key=lambda m: bin(m).count("1"))
    return masks


def _guard(g: Graph, ceiling: Optional[int]):
    _require_connected(g)
    limit = brute_ceiling() if ceiling is None else ceiling
    if g.n > limit:
        raise TooLarge(f"n={g.n} exceeds brute-force ceiling {limit}")


def dp_oracle(g: Graph, k_max: Optional[int] = None, ceiling: Optional[int] = None) -> OracleResult:
    """Exact DP(G) by enumerating detector slots in increasing total size.

    Each vertex may hold a watcher, a listener or both; candidate slot sets
    of size ``k`` are scanned in lexicographic order, so the witness is
    deterministic.
    """
    _guard(g, ceiling)
    masks = _pair_masks(g, True, True)
    limit = 2 * g.n if k_max is None else min(k_max, 2 * g.n)
    for k in range(limit + 1):
        for combo in combinations(range(2 * g.n), k):
            chosen = 0
            for s in combo:
                chosen |= 1 << s
            if all(m & chosen for m in masks):
                W = frozenset(s // 2 for s in combo if s % 2 == 0)
                L = frozenset(s // 2 for s in combo if s % 2 == 1)
                return OracleResult(k, DetectionPair(W, L))
    raise NoSolutionWithin(limit)


def _vertex_subset_oracle(g: Graph, masks: list[int], slot_shift: int) -> OracleResult:
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            chosen = 0
            for v in combo:
                chosen |= 1 << (2 * v + slot_shift)
            if all(m & chosen for m in masks):
                return OracleResult(k, frozenset(combo))
    raise NoSolutionWithin(g.n)  # unreachable for connected graphs


def gamma_oracle(g: Graph, ceiling: Optional[int] = None) -> OracleResult:
    """Minimum dominating set by subset enumeration."""
    _guard(g, ceiling)
    full = (1 << g.n) - 1
    nmask = [sum(1 << u for u in g.closed_neighbourhood(v)) for v in range(g.n)]
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            cov = 0
            for v in combo:
                cov |= nmask[v]
            if cov == full:
                return OracleResult(k, frozenset(combo))
    # n == 0
    return OracleResult(0, frozenset())


def md_oracle(g: Graph, ceiling: Optional[int] = None) -> OracleResult:
    """Minimum resolving set by subset enumeration."""
    _guard(g, ceiling)
    return _vertex_subset_oracle(g, _pair_masks(g, False, True), 1)
