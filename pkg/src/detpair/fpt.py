"""Exact FPT decision procedure for detection pairs on trees.

``fpt_decide(t, k)`` answers whether a tree has a detection pair of size at
most ``k`` and returns a witness when it does. The search runs in two phases.

Phase 1 looks for solutions with at most one listener: a minimum dominating
set covers the listener-free case, and for a single listener at ``x`` the
watchers are searched among a small candidate set derived from the distance
partition around ``x``.

Phase 2 assumes two or more listeners. Every special branching point with
at least two legs gets one of a handful of canonical detector layouts; each
combination of layouts fixes a partial pair whose listeners distinguish a
connected region. What is left hangs off that region as pending trees. The
pending trees are contracted, extra listeners are guessed at the endpoints
of the threads of the contracted forest, and finally the missing watchers
are searched tree by tree among candidate sets.

Two canonical-form facts are used throughout and keep the search complete:
a watcher on a leaf can always move to the leaf's neighbour, and once two
listeners exist, the set of separated pairs only grows when the subtree
spanned by the listeners grows, so every listener may be pushed out to a
leaf.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Optional

from .detection import DetectionPair, find_violation
from .errors import NotATree, StemPresent
from .graph import Graph, TreeStructure, analyze_tree, bfs_order, is_tree
from .tree_exact import leg_sort_key, min_dominating_all_but_one_tree

CHOICE_TAGS = ("1a", "1b", "1c", "2a", "2b", "2c", "2d")
CANDIDATE_FACTOR = 63


# ---------------------------------------------------------------------------
# canonical layouts at special branching points
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SbpChoice:
    x: int
    tag: str
    watchers: frozenset
    listeners: frozenset

    @property
    def cost(self) -> int:
        return len(self.watchers) + len(self.listeners)


def sbp_region(ts: TreeStructure, x: int) -> frozenset:
    """``x``, its leaf neighbours and every vertex of its long legs."""
    out = {x}
    for leg in ts.legs[x]:
        out.update(leg)
    return frozenset(out)


def admissible_choices(ts: TreeStructure, x: int) -> list[SbpChoice]:
    legs = ts.legs[x]
    t = ts.stems[x]
    long_legs = sorted(ts.long_legs(x), key=leg_sort_key)
    l = len(long_legs)
    by_length = sorted(legs, key=leg_sort_key)
    longest_leaf = by_length[0][-1]
    X = frozenset([x])
    none = frozenset()
    out = []
    if l <= 1:
        out.append(SbpChoice(x, "1a", X, none))
        out.append(SbpChoice(x, "1b", X, frozenset([longest_leaf])))
        if t + l == 2:
            out.append(SbpChoice(x, "1c", none, frozenset([longest_leaf])))
    else:
        out.append(SbpChoice(x, "2a", X, frozenset(leg[-1] for leg in long_legs)))
        out.append(SbpChoice(x, "2b", X, frozenset(leg[-1] for leg in long_legs[:-1])))
        if t <= 1:
            out.append(SbpChoice(x, "2c", none, frozenset(leg[-1] for leg in by_length)))
            out.append(SbpChoice(x, "2d", none, frozenset(leg[-1] for leg in by_length[:-1])))
    return out


def enumerate_sbp_combinations(ts: TreeStructure, k: int) -> Iterator[tuple]:
    """All combinations of admissible layouts over ``B2+`` costing at most ``k``.

    Branching points are taken in ascending id, layouts in tag order.
    """
    points = ts.b2plus
    options = [admissible_choices(ts, x) for x in points]

    def rec(i, chosen, cost):
        if i == len(points):
            yield tuple(chosen)
            return
        for ch in options[i]:
            if cost + ch.cost <= k:
                chosen.append(ch)
                yield from rec(i + 1, chosen, cost + ch.cost)
                chosen.pop()

    yield from rec(0, [], 0)


# ---------------------------------------------------------------------------
# regions distinguished by listeners
# ---------------------------------------------------------------------------


def tree_path(g: Graph, u: int, v: int) -> list[int]:
    _, parent = bfs_order(g, u)
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def path_plus(g: Graph, u: int, v: int, ts: Optional[TreeStructure] = None) -> frozenset:
    """The u-v path plus every leg attached to an inner path vertex of degree 3.

    Listeners at ``u`` and ``v`` distinguish all of these vertices.
    """
    if ts is None:
        ts = analyze_tree(g)
    path = tree_path(g, u, v)
    out = set(path)
    for s in path[1:-1]:
        if g.degree(s) == 3:
            for leg in ts.legs.get(s, ()):
                out.update(leg)
    return frozenset(out)


@dataclass
class RootedSubtree:
    """A subtree hanging from ``root``; depths are distances to the root."""

    root: int
    order: list  # BFS order, root first
    parent: dict
    depth: dict

    @property
    def vertices(self) -> frozenset:
        return frozenset(self.order)

    def children(self) -> dict:
        ch = {v: [] for v in self.order}
        for v in self.order[1:]:
            ch[self.parent[v]].append(v)
        return ch

    def levels(self) -> list[list[int]]:
        out: list[list[int]] = []
        for v in self.order:
            d = self.depth[v]
            while len(out) <= d:
                out.append([])
            out[d].append(v)
        return out

    def has_undistinguished(self, dominated) -> bool:
        seen = set()
        for v in self.order[1:]:
            if v in dominated:
                continue
            d = self.depth[v]
            if d in seen:
                return True
            seen.add(d)
        return False


def rooted_at(g: Graph, root: int, blocked=frozenset()) -> RootedSubtree:
    """BFS from ``root`` that never enters ``blocked``."""
    order = [root]
    parent = {root: -1}
    depth = {root: 0}
    i = 0
    adj = g.adj
    while i < len(order):
        u = order[i]
        i += 1
        for w in adj[u]:
            if w not in parent and w not in blocked:
                parent[w] = u
                depth[w] = depth[u] + 1
                order.append(w)
    return RootedSubtree(root, order, parent, depth)


@dataclass
class Region:
    listeners: frozenset
    vstar: frozenset
    boundary: list
    pending: list  # RootedSubtree per boundary vertex, same order


def steiner_vertices(g: Graph, listeners) -> set:
    listeners = set(listeners)
    if not listeners:
        return set()
    r = min(listeners)
    if len(listeners) == 1:
        return {r}
    order, parent = bfs_order(g, r)
    count = [0] * g.n
    for v in listeners:
        count[v] = 1
    for v in reversed(order[1:]):
        count[parent[v]] += count[v]
    return {v for v in order if count[v] > 0}


def distinguished_region(t: Graph, listeners, ts: Optional[TreeStructure] = None) -> Region:
    """Union of ``path_plus(u, v)`` over listener pairs, and what hangs off it.

    Computed in linear time: the subtree spanned by the listeners, plus the
    legs of its inner vertices of degree 3. With a single listener the region
    is that vertex alone and the whole tree hangs from it.
    """
    if ts is None:
        ts = analyze_tree(t)
    listeners = frozenset(listeners)
    S = steiner_vertices(t, listeners)
    vstar = set(S)
    if len(listeners) >= 2:
        for s in S:
            if t.degree(s) == 3 and s in ts.legs:
                inner = sum(1 for w in t.adj[s] if w in S) >= 2
                if inner:
                    for leg in ts.legs[s]:
                        vstar.update(leg)
    vstar_f = frozenset(vstar)
    boundary = sorted(x for x in vstar if any(w not in vstar for w in t.adj[x]))
    pending = [rooted_at(t, x, vstar_f - {x}) for x in boundary]
    return Region(listeners, vstar_f, boundary, pending)


def literal_region(t: Graph, listeners, ts: Optional[TreeStructure] = None) -> frozenset:
    """Quadratic reference version: union of path_plus over all listener pairs."""
    if ts is None:
        ts = analyze_tree(t)
    ls = sorted(listeners)
    out = set(ls[:1])
    for i, u in enumerate(ls):
        for v in ls[i + 1:]:
            out |= path_plus(t, u, v, ts)
    return frozenset(out)


# ---------------------------------------------------------------------------
# contraction of pending trees and listener placement on threads
# ---------------------------------------------------------------------------


@dataclass
class ContractedTree:
    root: int
    adj: dict  # vertex -> sorted neighbours inside the contracted tree
    relocate: dict  # endpoint -> leaf of its removed single leg

    def leaves(self) -> list[int]:
        return sorted(v for v, nb in self.adj.items() if v != self.root and len(nb) <= 1)

    def endpoints(self) -> list[int]:
        return sorted(v for v, nb in self.adj.items() if v == self.root or len(nb) != 2)

    def threads(self) -> list[tuple[int, int]]:
        ends = set(self.endpoints())
        found = set()
        for e in ends:
            for w in self.adj[e]:
                prev, cur = e, w
                while cur not in ends:
                    a, b = self.adj[cur]
                    prev, cur = cur, (b if a == prev else a)
                found.add((min(e, cur), max(e, cur)))
        if not found:
            found.add((self.root, self.root))
        return sorted(found)


def contract_pending_tree(pt: RootedSubtree, watchers, ts: TreeStructure) -> ContractedTree:
    """Drop (i) every leg whose branching point has exactly one leg and
    (ii) every leaf adjacent to a fixed watcher."""
    g = ts.g
    inside = pt.vertices
    removed = set()
    relocate = {}
    for b in pt.order:
        legs = ts.legs.get(b)
        if legs is not None and len(legs) == 1:
            leg = legs[0]
            if all(v in inside and v != pt.root for v in leg):
                removed.update(leg)
                relocate[b] = leg[-1]
    watchers = set(watchers)
    for v in pt.order:
        if v != pt.root and v in ts.leaves and any(w in watchers for w in g.adj[v]):
            removed.add(v)
    keep = [v for v in pt.order if v not in removed]
    keep_set = set(keep)
    adj = {v: [w for w in g.adj[v] if w in keep_set and w in inside] for v in keep}
    relocate = {b: y for b, y in relocate.items() if b in keep_set}
    return ContractedTree(pt.root, adj, relocate)


def enumerate_thread_listeners(forest: list[ContractedTree], budget: int, fixed=frozenset()) -> Iterator[frozenset]:
    """Listener sets obtained by choosing, per thread, both endpoints, one, or none.

    An endpoint shared by several threads is decided at the first thread that
    mentions it, so every distinct set is produced once. A listener at an
    endpoint carrying a removed leg is moved to that leg's leaf. Sets adding
    more than ``budget`` new listeners are skipped.
    """
    threads = []
    relocate = {}
    for ct in forest:
        threads.extend(ct.threads())
        relocate.update(ct.relocate)
    first = {}
    for i, (u, v) in enumerate(threads):
        first.setdefault(u, i)
        first.setdefault(v, i)
    fixed = frozenset(fixed)
    seen = set()

    def options(i):
        u, v = threads[i]
        new = [e for e in dict.fromkeys((u, v)) if first[e] == i]
        if len(new) == 2:
            return [(u, v), (u,), (v,), ()]
        if len(new) == 1:
            return [(new[0],), ()]
        return [()]

    def rec(i, chosen):
        if i == len(threads):
            key = frozenset(chosen)
            if key not in seen:
                seen.add(key)
                yield key
            return
        for opt in options(i):
            extra = {relocate.get(e, e) for e in opt} - fixed - chosen
            if len(chosen) + len(extra) <= budget:
                yield from rec(i + 1, chosen | extra)

    yield from rec(0, frozenset())


# ---------------------------------------------------------------------------
# watcher candidates inside a subtree without listeners
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WatcherCandidateSet:
    root: int
    partition: tuple  # part i = vertices at distance i from the root
    multi_parts: tuple  # indices of parts with two or more vertices
    X: frozenset
    budget: int

    @property
    def bound(self) -> int:
        return CANDIDATE_FACTOR * self.budget * self.budget


def watcher_candidates(t_x: RootedSubtree, x: int, k_x: int, g: Graph) -> WatcherCandidateSet:
    """Vertices that may need a watcher when only listeners through ``x`` act on ``t_x``.

    Listeners outside the subtree see it only through ``x``, so two of its
    vertices are separated iff their distances to ``x`` differ. Any watcher
    outside the returned set dominates only vertices that are alone at their
    distance and can be dropped.
    """
    if t_x.root != x:
        raise ValueError("entry vertex must be the subtree root")
    ch = t_x.children()
    leafy = {v for v in t_x.order if v != x and not ch[v]}
    for v in t_x.order:
        if sum(1 for c in ch[v] if c in leafy) >= 2:
            raise StemPresent(f"vertex {v} has two or more leaf children")
    levels = t_x.levels()
    multi = tuple(i for i, part in enumerate(levels) if len(part) >= 2)
    inside = t_x.vertices
    X = set()
    for i in multi:
        for v in levels[i]:
            X.add(v)
            X.update(w for w in g.adj[v] if w in inside)
    return WatcherCandidateSet(x, tuple(tuple(p) for p in levels), multi, frozenset(X), k_x)


def colex(m: int, k: int) -> Iterator[tuple]:
    """k-subsets of range(m) in colexicographic order."""
    if k == 0:
        yield ()
        return
    for top in range(k - 1, m):
        for rest in colex(top, k - 1):
            yield rest + (top,)


def _strip_dominated_leaves(sub: RootedSubtree, dominated) -> RootedSubtree:
    ch = sub.children()
    alive = set(sub.order)
    nkids = {v: len(ch[v]) for v in sub.order}
    queue = deque(v for v in sub.order if v != sub.root and nkids[v] == 0 and v in dominated)
    while queue:
        v = queue.popleft()
        alive.discard(v)
        p = sub.parent[v]
        nkids[p] -= 1
        if p != sub.root and nkids[p] == 0 and p in dominated:
            queue.append(p)
    order = [v for v in sub.order if v in alive]
    return RootedSubtree(sub.root, order, {v: sub.parent[v] for v in order}, {v: sub.depth[v] for v in order})


def min_watchers(g: Graph, leaves, sub: RootedSubtree, dominated, budget: int) -> Optional[frozenset]:
    """Fewest extra watchers (at most ``budget``) making every distance class
    of ``sub`` contain at most one undominated vertex; ``None`` if impossible.

    Assumes all listeners reach ``sub`` through its root.
    """
    if budget < 0:
        return None
    dominated = set(dominated)
    forced = []
    stripped = _strip_dominated_leaves(sub, dominated)
    while True:
        # two undominated leaves under one vertex: a watcher there is never worse
        ch = stripped.children()
        fresh = [q for q in stripped.order
                 if sum(1 for c in ch[q] if not ch[c] and c not in dominated) >= 2]
        if not fresh:
            break
        forced += fresh
        if len(forced) > budget:
            return None
        for q in fresh:
            dominated.add(q)
            dominated.update(g.adj[q])
        stripped = _strip_dominated_leaves(stripped, dominated)
    ch = stripped.children()
    cands = watcher_candidates(stripped, sub.root, budget, g)
    parts = [cands.partition[i] for i in cands.multi_parts]
    needy = [p for p in parts if sum(1 for v in p if v not in dominated) >= 2]
    if not needy:
        return frozenset(forced)
    rest = budget - len(forced)
    # a watcher touches at most three consecutive distance classes
    if len(needy) > 3 * rest:
        return None
    # a leaf's parent dominates everything the leaf would
    pool = sorted(v for v in cands.X if ch[v] or v == stripped.root)
    closed = {v: g.closed_neighbourhood(v) for v in pool}
    for size in range(1, rest + 1):
        for combo in colex(len(pool), size):
            dom = set(dominated)
            for i in combo:
                dom.update(closed[pool[i]])
            if all(sum(1 for v in p if v not in dom) <= 1 for p in needy):
                return frozenset(forced) | frozenset(pool[i] for i in combo)
    return None


# ---------------------------------------------------------------------------
# the decision procedure
# ---------------------------------------------------------------------------


@dataclass
class FptState:
    """One branch of Phase 2: fixed detectors, their region and pending forest."""

    watchers: frozenset
    listeners: frozenset
    region: Region = None
    forest: list = field(default_factory=list)  # pending trees with an undistinguished vertex
    contracted: list = field(default_factory=list)

    @property
    def cost(self) -> int:
        return len(self.watchers) + len(self.listeners)


def _closed_union(g: Graph, vertices) -> set:
    out = set()
    for v in vertices:
        out.add(v)
        out.update(g.adj[v])
    return out


def _listener_positions_phase1(ts: TreeStructure) -> list[int]:
    # a lone listener inside a leg, or on a branching point owning a leg,
    # does no better than one on that leg's leaf
    g = ts.g
    return [x for x in range(g.n) if (x not in ts.leg_owner or x in ts.leaves) and x not in ts.legs]


def _single_listener_levels(g: Graph, x: int, max_multi: int) -> Optional[RootedSubtree]:
    """BFS from x level by level; give up once too many classes have 2+ vertices."""
    order = [x]
    parent = {x: -1}
    depth = {x: 0}
    frontier = [x]
    multi = 0
    d = 0
    adj = g.adj
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if w not in parent:
                    parent[w] = u
                    depth[w] = d
                    nxt.append(w)
        if len(nxt) >= 2:
            multi += 1
            if multi > max_multi:
                return None
        order.extend(nxt)
        frontier = nxt
    return RootedSubtree(x, order, parent, depth)


def _phase1(g: Graph, ts: TreeStructure, k: int, stats: dict) -> Optional[DetectionPair]:
    # without listeners one vertex may stay undominated
    ds = min_dominating_all_but_one_tree(g, k)
    if len(ds) <= k:
        return DetectionPair(ds, frozenset())
    if k < 1:
        return None
    for x in _listener_positions_phase1(ts):
        sub = _single_listener_levels(g, x, 3 * (k - 1))
        if sub is None:
            continue
        stats["phase1_listeners"] = stats.get("phase1_listeners", 0) + 1
        W = min_watchers(g, ts.leaves, sub, set(), k - 1)
        if W is not None:
            return DetectionPair(W, frozenset([x]))
    return None


def _fill_watchers(g, ts, state: FptState, listeners, k, stats) -> Optional[DetectionPair]:
    region = distinguished_region(g, listeners, ts)
    dominated = _closed_union(g, state.watchers)
    budget = k - len(state.watchers) - len(listeners)
    extra = set()
    for pt in region.pending:
        if not pt.has_undistinguished(dominated):
            continue
        W = min_watchers(g, ts.leaves, pt, dominated, budget - len(extra))
        if W is None:
            return None
        extra |= W
        dominated |= _closed_union(g, W)
    pair = DetectionPair(state.watchers | extra, listeners)
    if find_violation(g, pair) is not None:
        stats["rejected_witness"] = stats.get("rejected_witness", 0) + 1
        return None
    return pair


def _branch(g, ts, state: FptState, k, prune, stats) -> Optional[DetectionPair]:
    stats["branches"] = stats.get("branches", 0) + 1
    region = distinguished_region(g, state.listeners, ts)
    dominated = _closed_union(g, state.watchers)
    state.region = region
    state.forest = [pt for pt in region.pending if pt.has_undistinguished(dominated)]
    if prune and len(state.forest) > k:
        stats["forest_size_pruned"] = stats.get("forest_size_pruned", 0) + 1
        return None
    state.contracted = [contract_pending_tree(pt, state.watchers, ts) for pt in state.forest]
    if prune and sum(len(ct.leaves()) for ct in state.contracted) > 2 * k:
        stats["forest_leaves_pruned"] = stats.get("forest_leaves_pruned", 0) + 1
        return None
    for extra in enumerate_thread_listeners(state.contracted, k - state.cost, state.listeners):
        found = _fill_watchers(g, ts, state, state.listeners | extra, k, stats)
        if found is not None:
            return found
    return None


def _phase2(g: Graph, ts: TreeStructure, k: int, prune: bool, stats: dict) -> Optional[DetectionPair]:
    for combo in enumerate_sbp_combinations(ts, k):
        stats["combinations"] = stats.get("combinations", 0) + 1
        W = frozenset().union(*(c.watchers for c in combo))
        L = frozenset().union(*(c.listeners for c in combo))
        if L:
            found = _branch(g, ts, FptState(W, L), k, prune, stats)
            if found is not None:
                return found
            continue
        # no listener fixed yet: one of the sought listeners sits on a leaf
        # outside every canonical layout
        if len(W) + 1 > k:
            continue
        fixed = frozenset().union(*(sbp_region(ts, c.x) for c in combo))
        for y in sorted(ts.leaves - fixed):
            found = _branch(g, ts, FptState(W, frozenset([y])), k, prune, stats)
            if found is not None:
                return found
    return None


def fpt_decide(t: Graph, k: int, prune: bool = True, stats: Optional[dict] = None) -> Optional[DetectionPair]:
    """Return a detection pair of size <= k, or ``None`` when none exists.

    ``prune=False`` disables the two pending-forest size cuts; the answer
    must not change, only the running time.
    """
    if not is_tree(t):
        raise NotATree("input graph is not a tree")
    if k < 0:
        return None
    if stats is None:
        stats = {}
    if t.n == 1:
        return DetectionPair()
    if k == 0:
        return None
    ts = analyze_tree(t)
    if len(ts.b2plus) > k:
        return None
    found = _phase1(t, ts, k, stats)
    if found is not None:
        stats["phase"] = 1
        return found
    found = _phase2(t, ts, k, prune, stats)
    if found is not None:
        stats["phase"] = 2
    return found


def dp_tree(t: Graph, k_max: Optional[int] = None) -> tuple[int, DetectionPair]:
    """Smallest k for which fpt_decide says YES, with its witness."""
    limit = t.n if k_max is None else k_max
    for k in range(limit + 1):
        found = fpt_decide(t, k)
        if found is not None:
            return k, found
    raise ValueError(f"no detection pair of size <= {limit}")
