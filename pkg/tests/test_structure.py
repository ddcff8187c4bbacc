import pytest

from unicellular import (UnicellularMap, bridge_elimination, bridges, cubic, is_virtual_collection,
                         parse_word, perfect_matching, split_vertex, underlying_graph)
from unicellular.errors import NotCubic
from unicellular.oracles import brute_bridges, brute_has_perfect_matching

THETA = "1 2 3 -1 -2 -3"


def test_bridges_examples():
    assert bridges(parse_word("1 -1 2 -2")) == {1, 2}
    assert bridges(parse_word(THETA)) == frozenset()
    # loops are never bridges
    assert bridges(parse_word("1 2 -1 -2")) == frozenset()


def test_bridges_oracle(small_corpus):
    for w in small_corpus:
        m = UnicellularMap(w)
        assert bridges(m) == brute_bridges(m)


def test_degree_sequence(small_corpus):
    for w in small_corpus:
        m = UnicellularMap(w)
        assert tuple(sorted(underlying_graph(m).degree_sequence(), reverse=True)) == m.degrees


def test_matching_theta():
    pm = perfect_matching(parse_word(THETA))
    assert pm is not None and len(pm.edges) == 1


def test_matching_oracle(small_corpus):
    for w in small_corpus:
        m = UnicellularMap(w)
        pm = perfect_matching(m)
        assert (pm is not None) == brute_has_perfect_matching(m)


def test_matching_absent_on_odd_vertex_count():
    # path with two edges has three vertices
    assert perfect_matching(parse_word("1 -1 2 -2")) is None


def test_virtual_collection():
    assert is_virtual_collection(parse_word(THETA))
    with pytest.raises(NotCubic):
        is_virtual_collection(parse_word("1 2 -1 -2"))


def test_split_4valent_is_virtual(g2_corpus):
    # splitting every vertex of a 4-valent map gives a cubic map matched by the fresh edges
    for w in g2_corpus[(4, 4, 4)]:
        m = UnicellularMap(w)
        fresh = []
        while m.degrees[0] == 4:
            v = next(i for i, c in enumerate(m.vertex_cycles) if len(c) == 4)
            m = split_vertex(m, v, 0, 2)
            fresh.append(m.n_edges)
        assert m.degrees == cubic(2)
        assert is_virtual_collection(m)
        covered = set()
        for e in fresh:
            covered.update(m.endpoints(e))
        assert len(covered) == m.n_vertices


def test_bridgeless_input_has_empty_trace():
    assert bridge_elimination(parse_word(THETA)) == []


def test_bridge_elimination_g2(g2_corpus):
    runs = 0
    for w in g2_corpus[cubic(2)]:
        m = UnicellularMap(w)
        k = len(bridges(m))
        if not k:
            continue
        runs += 1
        trace = bridge_elimination(m)
        assert 1 <= len(trace) <= k
        final = trace[-1].map
        assert bridges(final) == frozenset()
        assert is_virtual_collection(final)
        for step in trace:
            assert step.bridge not in bridges(step.map)
            assert step.map.degrees == m.degrees
    assert runs == 1


def test_bridge_elimination_not_cubic():
    with pytest.raises(NotCubic):
        bridge_elimination(parse_word("1 2 -1 -2"))
