"""Randomized checks on arbitrary chord diagrams."""
from hypothesis import given, settings
from hypothesis import strategies as st

from unicellular import (UnicellularMap, canonical_form, collapse_edge, genus_from_rank,
                         is_intertwined, neighbors, split_vertex, subdivide_edge, surgery,
                         symmetry_count)
from unicellular.oracles import brute_automorphisms, corner_degrees, corner_vertex_count


@st.composite
def words(draw, max_edges=7):
    E = draw(st.integers(1, max_edges))
    order = draw(st.permutations(range(2 * E)))
    word = [0] * (2 * E)
    for k in range(E):
        i, j = order[2 * k], order[2 * k + 1]
        sign = draw(st.sampled_from((1, -1)))
        word[i], word[j] = sign * (k + 1), -sign * (k + 1)
    return tuple(word)


def relabel(word, perm, flips):
    return tuple((1 if x > 0 else -1) * flips[abs(x) - 1] * perm[abs(x) - 1] for x in word)


@given(words(), st.data())
def test_canonical_invariance(w, data):
    E = len(w) // 2
    r = data.draw(st.integers(0, len(w) - 1))
    perm = data.draw(st.permutations(range(1, E + 1)))
    flips = data.draw(st.lists(st.sampled_from((1, -1)), min_size=E, max_size=E))
    v = relabel(w[r:] + w[:r], perm, flips)
    assert canonical_form(v) == canonical_form(w)


@given(words())
def test_orbits_match_corner_gluing(w):
    m = UnicellularMap(w)
    assert m.n_vertices == corner_vertex_count(w)
    assert m.degrees == corner_degrees(w)
    assert sum(m.degrees) == 2 * m.n_edges
    assert m.n_vertices - m.n_edges + 1 == 2 - 2 * m.genus


@given(words())
def test_rank_genus(w):
    assert genus_from_rank(w) == UnicellularMap(w).genus


@given(words(max_edges=5))
def test_symmetry_oracle(w):
    assert symmetry_count(w) == brute_automorphisms(w)


@given(words(), st.data())
def test_subdivide_keeps_genus(w, data):
    m = UnicellularMap(w)
    e = data.draw(st.integers(1, m.n_edges))
    s = subdivide_edge(m, e)
    assert (s.genus, s.n_vertices, s.n_edges) == (m.genus, m.n_vertices + 1, m.n_edges + 1)
    assert 2 in s.degrees


@given(words(), st.data())
def test_split_collapse_inverse(w, data):
    m = UnicellularMap(w)
    v = data.draw(st.integers(0, m.n_vertices - 1))
    d = len(m.vertex_cycles[v])
    if d < 2:
        return
    start = data.draw(st.integers(0, d - 1))
    length = data.draw(st.integers(1, d - 1))
    s = split_vertex(m, v, start, length)
    assert s.genus == m.genus
    assert canonical_form(collapse_edge(s, s.n_edges)) == canonical_form(m)


@given(words())
def test_intertwining_reversal(w):
    m = UnicellularMap(w)
    for x in w:
        for y in w:
            if abs(x) != abs(y):
                assert is_intertwined(m, x, y) == is_intertwined(m, -x, -y)


@settings(max_examples=40)
@given(words(max_edges=6))
def test_adjacency_symmetric(w):
    src = canonical_form(w)
    for c in neighbors(w):
        assert src in neighbors(c.word)


@given(words())
def test_surgery_preserves_invariants(w):
    m = UnicellularMap(w)
    for x in w:
        for y in w:
            if abs(x) != abs(y) and is_intertwined(m, x, y):
                out = surgery(m, x, y)
                assert (out.degrees, out.genus) == (m.degrees, m.genus)
