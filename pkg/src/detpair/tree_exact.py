"""Linear-time exact solvers on trees: metric dimension and domination."""

from __future__ import annotations

from typing import Optional

from .graph import Graph, TreeStructure, analyze_tree, tree_bfs


def leg_sort_key(leg):
    # longest first, ties towards the smaller leaf id
    return (-len(leg), leg[-1])


def slater_resolving_set(t: Graph, ts: Optional[TreeStructure] = None) -> frozenset:
    """Optimal resolving set of a tree.

    For every special branching point with ``l`` legs, take the leaves of
    its ``l - 1`` longest legs. A path has no branching point, so it gets a
    single end vertex instead (the rule alone would return nothing).
    """
    if ts is None:
        ts = analyze_tree(t)
    if t.n == 1:
        return frozenset()
    if ts.is_path():
        return frozenset([min(ts.leaves)])
    out = set()
    for x, legs in ts.legs.items():
        for leg in sorted(legs, key=leg_sort_key)[:-1]:
            out.add(leg[-1])
    return frozenset(out)


def min_dominating_set_tree(t: Graph, free=()) -> frozenset:
    """Minimum dominating set by the leaves-up greedy.

    Vertices are processed in reverse BFS order; an undominated vertex
    recruits its parent (or itself, at the root). Vertices in ``free`` need
    not be dominated but may still be chosen.
    """
    order, parent = tree_bfs(t, 0)
    dominated = [False] * t.n
    for v in free:
        dominated[v] = True
    chosen = set()
    adj = t.adj
    for v in reversed(order):
        if dominated[v]:
            continue
        p = parent[v]
        pick = p if p >= 0 else v
        chosen.add(pick)
        dominated[pick] = True
        for w in adj[pick]:
            dominated[w] = True
    return frozenset(chosen)


def min_dominating_all_but_one_tree(t: Graph, budget: Optional[int] = None) -> frozenset:
    """Smallest vertex set dominating every vertex except possibly one.

    This is the optimum of a listener-free detection pair: a single
    undominated vertex is trivially distinguished. Exempting a vertex saves
    at most one watcher, so with ``budget`` given the search stops early
    once the answer provably exceeds it.
    """
    if t.n == 1:
        return frozenset()
    best = min_dominating_set_tree(t)
    if len(best) <= 1 or (budget is not None and len(best) > budget + 1):
        return best
    for u in range(t.n):
        cand = min_dominating_set_tree(t, free=(u,))
        if len(cand) < len(best):
            return cand
    return best
