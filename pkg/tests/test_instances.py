import pytest
from hypothesis import given, settings, strategies as st

from detpair.errors import BadParam
from detpair.graph import Graph, analyze_tree, is_connected, is_tree
from detpair.instances import (
    InstanceSpec,
    gen_double_broom,
    gen_random_graph,
    gen_random_tree,
    gen_spider,
    gen_t1,
    gen_t2,
    parse_edge_list,
    prufer_decode,
    read_edge_list,
    write_edge_list,
)
from detpair.tree_approx import approx2_detection_pair


def test_t1_examples():
    g = gen_t1(1, 3)
    assert g.n == 5
    assert g.degree(0) == 1 and g.degree(1) == 4
    assert analyze_tree(gen_t1(3)).b2plus == [1, 5, 9]
    assert gen_t1(2, 4).n == 11
    for l in range(1, 6):
        for s in (3, 4, 5):
            assert gen_t1(l, s).n == l * (s + 1) + 1


def test_t2_examples():
    assert gen_t2(1).n == 12
    assert approx2_detection_pair(gen_t2(2)).pair.size() == 6
    for l in range(1, 6):
        g = gen_t2(l)
        assert is_tree(g) and g.n == (l + 2) + 4 + 5 * l


def test_bad_parameters():
    for call in (lambda: gen_t1(0), lambda: gen_t1(2, 2), lambda: gen_t2(0), lambda: gen_spider([]),
                 lambda: gen_spider([0, 1]), lambda: gen_random_tree(0), lambda: gen_random_graph(3, 1.5)):
        with pytest.raises(BadParam):
            call()
    with pytest.raises(BadParam):
        InstanceSpec("nonsense", n=3).build()
    with pytest.raises(BadParam):
        InstanceSpec("path").build()


def test_random_tree_examples():
    assert gen_random_tree(1).n == 1
    assert is_tree(gen_random_tree(8, 42))
    assert gen_random_tree(8, 42) == gen_random_tree(8, 42)
    assert gen_random_tree(30, 1) != gen_random_tree(30, 2)


def test_prufer_known_sequence():
    # the sequence (3, 3, 3) is the star centred at 3 on five vertices
    assert sorted(tuple(sorted(e)) for e in prufer_decode([3, 3, 3], 5)) == [(0, 3), (1, 3), (2, 3), (3, 4)]


def test_random_graph_connected_and_deterministic():
    g = gen_random_graph(9, 0.3, 5)
    assert is_connected(g)
    assert g == gen_random_graph(9, 0.3, 5)


def test_double_broom():
    g = gen_double_broom(4)
    ts = analyze_tree(g)
    assert g.n == 10 and ts.b2plus == [0, 5]


def test_spec_families_build():
    for spec in (InstanceSpec("path", n=4), InstanceSpec("complete", n=4), InstanceSpec("star", n=5),
                 InstanceSpec("spider", legs=(1, 2, 2)), InstanceSpec("t1", l=2), InstanceSpec("t2", l=1),
                 InstanceSpec("random_tree", n=9, seed=3), InstanceSpec("random_graph", n=7, seed=3, p=0.5)):
        g = spec.build()
        assert is_connected(g)
        assert g == spec.build()


def test_parse_errors():
    for text in ("", "3 2\n0 1\n", "3 1\n1 0\n", "3 1\n0 x\n", "3 1\n0 5\n", "2 1\n0 1 2\n"):
        with pytest.raises(BadParam):
            parse_edge_list(text)
    g = parse_edge_list("# comment\n3 2\n0 1\n\n1 2\n")
    assert g.edges() == [(0, 1), (1, 2)]


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 30), st.integers(0, 10**6))
def test_round_trip(tmp_path_factory, n, seed):
    path = tmp_path_factory.mktemp("rt") / "g.txt"
    for g in (gen_random_tree(n, seed), gen_random_graph(min(n, 10), 0.5, seed)):
        write_edge_list(g, path, comment="generated\nfor a round trip")
        assert read_edge_list(path) == g
