import pytest

from detpair.detection import DetectionPair, dp_oracle, verify
from detpair.errors import NotATree
from detpair.graph import Graph, analyze_tree, subtree_Lx
from detpair.instances import gen_path, gen_random_tree, gen_t1, gen_t2
from detpair.tree_approx import approx2_detection_pair, build_pruned_tree

from corpus import dp_value, tree_corpus


def test_t1_1_pruning():
    # the centre is a 4-stem with only short legs, so two of its leaves go
    t = gen_t1(1)
    pruned, old = build_pruned_tree(t)
    assert pruned.n == 3
    assert old == [1, 3, 4]


def test_four_stem_with_one_long_leg():
    # centre 0, long leg 1-2-3, leaves 4..7, and a 2-stem 8 hanging off 0
    edges = [(0, 1), (1, 2), (2, 3), (0, 4), (0, 5), (0, 6), (0, 7), (0, 8), (8, 9), (8, 10)]
    t = Graph.from_edges(11, edges)
    ts = analyze_tree(t)
    assert ts.stems[0] == 4
    _, old = build_pruned_tree(t)
    removed = set(range(11)) - set(old)
    assert removed == {4, 5, 6}


def test_no_big_stem_is_identity():
    t = gen_path(7)
    pruned, old = build_pruned_tree(t)
    assert pruned == t and old == list(range(7))


def test_t1_output():
    out = approx2_detection_pair(gen_t1(3))
    assert out.pair.size() == 6
    assert len(out.pair.watchers) == 3 and len(out.pair.listeners) == 3


def test_t2_output():
    assert approx2_detection_pair(gen_t2(2)).pair.size() == 6
    t = gen_t2(1)
    out = approx2_detection_pair(t).pair
    # the single star at centre 7 holds two listeners
    assert len(out.listeners & subtree_Lx(analyze_tree(t), 7)) == 2


def test_path_output():
    out = approx2_detection_pair(gen_path(10)).pair
    assert out == DetectionPair(set(), {0})
    assert dp_oracle(gen_path(10)).value == 1


def test_small_cases():
    assert approx2_detection_pair(gen_path(2)).pair.size() == 1
    assert approx2_detection_pair(Graph.from_edges(1, [])).pair.size() == 0


def test_rejects_non_tree():
    with pytest.raises(NotATree):
        approx2_detection_pair(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))


def test_tightness_small():
    for l in (1, 2, 3):
        assert approx2_detection_pair(gen_t1(l)).pair.size() == 2 * l
        assert dp_oracle(gen_t1(l), ceiling=20).value == l
    for l in (1, 2):
        t = gen_t2(l)
        size = approx2_detection_pair(t).pair.size()
        opt = dp_oracle(t, ceiling=20).value
        assert size == 2 * l + 2 and opt == l + 2
        assert size / opt == pytest.approx(2 - 2 / (l + 2))


def test_detectors_inside_branching_regions():
    for seed in range(200):
        t = gen_random_tree(3 + seed % 20, seed)
        ts = analyze_tree(t)
        if ts.is_path():
            continue
        regions = set()
        for x in ts.legs:
            regions |= subtree_Lx(ts, x)
        pair = approx2_detection_pair(t).pair
        assert pair.detectors() <= regions


def test_factor_two_on_corpus_sample():
    for name, t in tree_corpus()[::5]:
        pair = approx2_detection_pair(t).pair
        assert verify(t, pair), name
        assert pair.size() <= 2 * dp_value(t), name
