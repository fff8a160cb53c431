import itertools
import math
import random

import pytest

from detpair.detection import DetectionPair, dp_oracle, verify
from detpair.errors import Disconnected, TooLarge, Uncoverable
from detpair.graph import Graph, bfs_distances
from detpair.instances import gen_complete, gen_path, gen_random_graph, gen_star
from detpair.setcover import (
    LISTENER,
    WATCHER,
    SetCoverInstance,
    approx_detection_pair,
    build_instance,
    cover_to_pair,
    greedy_set_cover,
    pair_index,
)


def members(inst, tag):
    bits = dict(zip(inst.tags, inst.sets))[tag]
    return {i for i in range(inst.universe_size) if bits >> i & 1}


def test_pair_index_is_a_bijection():
    for n in range(2, 9):
        idx = [pair_index(u, v, n) for u, v in itertools.combinations(range(n), 2)]
        assert idx == list(range(n * (n - 1) // 2))
        assert pair_index(n - 1, 0, n) == pair_index(0, n - 1, n)


def test_k4_instance():
    inst = build_instance(gen_complete(4))
    assert inst.universe_size == 6
    assert len(inst.sets) == 8
    for v in range(4):
        assert members(inst, (v, WATCHER)) == set(range(6))
    assert greedy_set_cover(inst) == [(0, WATCHER)]


def test_p3_instance():
    inst = build_instance(gen_path(3))
    assert members(inst, (0, LISTENER)) == {0, 1, 2}
    assert members(inst, (1, WATCHER)) == {0, 1, 2}
    # a watcher at an end dominates one vertex of every pair too, so the
    # tie among full sets goes to the watcher with the lowest id
    assert members(inst, (0, WATCHER)) == {0, 1, 2}
    assert greedy_set_cover(inst) == [(0, WATCHER)]


def test_empty_universe():
    inst = build_instance(Graph.from_edges(1, []))
    assert inst.universe_size == 0
    assert greedy_set_cover(inst) == []
    assert approx_detection_pair(Graph.from_edges(1, [])) == DetectionPair()


def test_membership_invariants():
    for seed in range(30):
        g = gen_random_graph(3 + seed % 7, 0.4, seed)
        inst = build_instance(g)
        dist = [bfs_distances(g, v) for v in range(g.n)]
        for v in range(g.n):
            w_set, l_set = members(inst, (v, WATCHER)), members(inst, (v, LISTENER))
            closed = set(g.closed_neighbourhood(v))
            for x, y in itertools.combinations(range(g.n), 2):
                i = pair_index(x, y, g.n)
                assert (i in w_set) == (x in closed or y in closed)
                assert (i in l_set) == (dist[v][x] != dist[v][y])


def test_cover_iff_detection_pair():
    rng = random.Random(11)
    hits = [0, 0]
    for seed in range(60):
        g = gen_random_graph(2 + seed % 7, 0.45, seed)
        inst = build_instance(g)
        for _ in range(40):
            chosen = rng.sample(inst.tags, rng.randint(0, min(5, len(inst.tags))))
            covered = inst.covers(chosen)
            assert covered == verify(g, cover_to_pair(chosen))
            hits[covered] += 1
    assert min(hits) > 50


def test_uncoverable_is_reported():
    inst = SetCoverInstance(2, 1, ((0, WATCHER),), (0,))
    with pytest.raises(Uncoverable):
        greedy_set_cover(inst)


def test_errors():
    with pytest.raises(Disconnected):
        build_instance(Graph.from_edges(3, [(0, 1)]))
    with pytest.raises(TooLarge):
        build_instance(gen_path(30), ceiling=20)


def test_approx_examples():
    assert approx_detection_pair(gen_complete(4)).size() == 1
    p8 = gen_path(8)
    out = approx_detection_pair(p8)
    assert verify(p8, out)
    assert out.size() <= (2 * math.log(8) + 1) * dp_oracle(p8).value
    star = gen_star(5)
    out = approx_detection_pair(star)
    assert verify(star, out)
    assert out.size() <= (2 * math.log(6) + 1) * dp_oracle(star).value


def test_greedy_factor_against_oracle():
    for seed in range(60):
        n = 2 + seed % 9
        g = gen_random_graph(n, 0.35, seed)
        out = approx_detection_pair(g)
        assert verify(g, out)
        universe = n * (n - 1) // 2
        assert out.size() <= (math.log(universe) + 1) * dp_oracle(g).value + 1e-9
