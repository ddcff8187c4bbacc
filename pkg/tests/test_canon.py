import itertools

from unicellular import (UnicellularMap, canonical_form, is_chiral, is_isomorphic, mirror,
                         parse_word, subdivide_edge, symmetry_count)
from unicellular.canon import is_canonical, letter_key
from unicellular.oracles import all_pairings, brute_automorphisms, brute_isomorphic


def test_relabel_and_rotation():
    assert canonical_form(parse_word("2 1 -2 -1")) == canonical_form(parse_word("1 2 -1 -2"))


def test_all_rotations_theta():
    m = parse_word("1 2 3 -1 -2 -3")
    forms = {canonical_form(m.rotate(k)) for k in range(6)}
    assert len(forms) == 1


def test_letter_order():
    assert sorted([-2, 2, -1, 1], key=letter_key) == [1, -1, 2, -2]


def test_edge_reversal_invariance():
    # flipping which occurrence of an edge is barred gives the same class
    a = parse_word("1 2 3 -1 -2 -3")
    b = parse_word("-1 2 3 1 -2 -3")
    assert canonical_form(a) == canonical_form(b)


def test_idempotent(small_corpus):
    for w in small_corpus:
        c = canonical_form(w)
        assert canonical_form(c.word) == c
        assert is_canonical(c.word)


def test_symmetry_counts(small_corpus):
    assert symmetry_count(parse_word("1 2 -1 -2")) == 4
    for w in small_corpus:
        s = symmetry_count(w)
        assert (2 * UnicellularMap(w).n_edges) % s == 0
        assert s == brute_automorphisms(w)


def test_not_isomorphic():
    t = parse_word("1 2 -1 -2")
    assert not is_isomorphic(t, subdivide_edge(t, 1))
    assert not is_isomorphic(t, parse_word("1 -1 2 -2"))


def test_isomorphism_oracle_len6():
    words = list(all_pairings(3))
    for u, v in itertools.combinations(words, 2):
        assert is_isomorphic(u, v) == brute_isomorphic(u, v)


def test_chiral_genus2_map_exists(g2_corpus):
    # the word is not reversed, so some cubic genus-2 classes differ from their mirror
    chiral = [w for w in g2_corpus[(3,) * 6] if is_chiral(w)]
    assert chiral
    w = chiral[0]
    assert canonical_form(mirror(w)) != canonical_form(w)
    # none of the (4,4,4) classes is chiral
    assert not any(is_chiral(w) for w in g2_corpus[(4, 4, 4)])
