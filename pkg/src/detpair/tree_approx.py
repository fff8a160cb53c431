"""Linear-time 2-approximation for detection pairs on trees.

Watchers go on every t-stem with t >= 3. Those stems then shed leaf
neighbours (t-2 of them with no long leg, t-1 with one long leg, all t with
two or more), and an optimal resolving set of the pruned tree supplies the
listeners. Distances between surviving vertices are unchanged by the
pruning, and every removed leaf is dominated by its stem.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .detection import DetectionPair
from .graph import Graph, TreeStructure, analyze_tree, induced_subgraph
from .tree_exact import slater_resolving_set


@dataclass(frozen=True)
class ApproxOutput:
    pair: DetectionPair
    pruned_tree_size: int
    # x -> (watchers, listeners) of the output inside L(x)
    accounting: dict = field(default_factory=dict, repr=False)


def big_stems(ts: TreeStructure) -> list[int]:
    return sorted(x for x, t in ts.stems.items() if t >= 3)


def build_pruned_tree(t: Graph, ts: Optional[TreeStructure] = None) -> tuple[Graph, list[int]]:
    """Return the pruned tree and its new-id -> original-id mapping.

    The leaf neighbours removed at each stem are the ones with the
    smallest ids.
    """
    if ts is None:
        ts = analyze_tree(t)
    removed = set()
    for x in big_stems(ts):
        leaves = sorted(ts.leaf_neighbours(x))
        n_long = len(ts.long_legs(x))
        drop = len(leaves) - 2 if n_long == 0 else len(leaves) - 1 if n_long == 1 else len(leaves)
        removed.update(leaves[:drop])
    if not removed:
        return t, list(range(t.n))
    return induced_subgraph(t, (v for v in range(t.n) if v not in removed))


def approx2_detection_pair(t: Graph) -> ApproxOutput:
    ts = analyze_tree(t)
    if t.n == 1:
        return ApproxOutput(DetectionPair(), 1)
    watchers = big_stems(ts)
    pruned, old_id = build_pruned_tree(t, ts)
    listeners = frozenset(old_id[v] for v in slater_resolving_set(pruned))
    pair = DetectionPair(frozenset(watchers), listeners)

    accounting = {}
    for x in ts.legs:
        members = {x}
        for leg in ts.legs[x]:
            members.update(leg)
        accounting[x] = (len(pair.watchers & members), len(pair.listeners & members))
    return ApproxOutput(pair, pruned.n, accounting)
