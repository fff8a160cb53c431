"""Shared test corpora, built deterministically and cached per session."""

from __future__ import annotations

from functools import lru_cache

from detpair.detection import dp_oracle, gamma_oracle, md_oracle
from detpair.graph import Graph
from detpair.instances import gen_path, gen_random_graph, gen_random_tree, gen_spider, gen_star

MAX_N = 14


def partitions(total: int, min_parts: int, largest: int | None = None):
    """Non-increasing tuples of positive ints summing to ``total``."""
    if largest is None:
        largest = total
    if total == 0:
        if min_parts <= 0:
            yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in partitions(total - first, min_parts - 1, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def tree_corpus() -> tuple[tuple[str, Graph], ...]:
    out = []
    for seed in range(500):
        n = 2 + seed % (MAX_N - 1)
        out.append((f"prufer{seed}_n{n}", gen_random_tree(n, seed)))
    for n in range(1, MAX_N + 1):
        out.append((f"path{n}", gen_path(n)))
    for m in range(1, MAX_N):
        out.append((f"star{m}", gen_star(m)))
    for total in range(3, MAX_N):
        for legs in partitions(total, 3):
            out.append((f"spider{'-'.join(map(str, legs))}", gen_spider(legs)))
    return tuple(out)


@lru_cache(maxsize=None)
def graph_corpus() -> tuple[tuple[str, Graph], ...]:
    out = []
    for seed in range(200):
        n = 4 + seed % 7
        p = 0.3 + 0.1 * (seed % 4)
        out.append((f"gnp{seed}_n{n}", gen_random_graph(n, p, seed)))
    return tuple(out)


@lru_cache(maxsize=None)
def dp_value(g: Graph) -> int:
    return dp_oracle(g).value


@lru_cache(maxsize=None)
def gamma_value(g: Graph) -> int:
    return gamma_oracle(g).value


@lru_cache(maxsize=None)
def md_value(g: Graph) -> int:
    return md_oracle(g).value
