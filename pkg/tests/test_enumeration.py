import json

import pytest

from unicellular import (EnumerationCursor, EnumerationSpec, canonical_form, collection_formula,
                         count_maps, cubic, enumerate_chunk, enumerate_maps, enumerate_words,
                         rooted_count, unicellular_collections)
from unicellular.errors import CapExceeded, Unrealizable
from unicellular.maps import UnicellularMap
from unicellular.oracles import naive_class_count, naive_classes

# classes with E edges, all degree partitions together
CLASS_COUNTS = {1: 1, 2: 2, 3: 5, 4: 18, 5: 105, 6: 902, 7: 9749}
N2 = 6   # (4,4,4)
N3 = 9   # cubic genus 2


def test_single_torus():
    assert [c.word for c in enumerate_maps((4,))] == [(1, 2, -1, -2)]
    assert count_maps((4,)) == 1


def test_unrealizable():
    with pytest.raises(Unrealizable):
        EnumerationSpec((2,))
    with pytest.raises(Unrealizable):
        count_maps((10,))


def test_theta_count():
    assert count_maps((3, 3)) == len(naive_classes(3, (3, 3))) == 1


@pytest.mark.parametrize("E, n", sorted(CLASS_COUNTS.items()))
def test_class_counts(E, n):
    assert len(enumerate_words(n_edges=E)[0]) == n


def test_rooted_counts():
    # every chord diagram is a rooted unicellular map
    for E, n in zip(range(1, 6), (1, 3, 15, 105, 945)):
        assert rooted_count(n_edges=E) == n


def test_emitted_words_canonical_and_sorted():
    prev = None
    for c in enumerate_maps((4, 3, 3, 3, 3)):
        assert canonical_form(c.word) == c
        m = UnicellularMap(c.word)
        assert m.degrees == (4, 3, 3, 3, 3)
        if prev is not None:
            assert prev < c
        prev = c


def test_regression_g2():
    assert count_maps((4, 4, 4)) == N2
    assert count_maps(cubic(2)) == N3
    assert rooted_count((4, 4, 4)) == 45
    assert rooted_count(cubic(2)) == 105


def test_dual_method_n2():
    classes, rooted, _ = naive_class_count((4, 4, 4))
    assert (classes, rooted) == (N2, 45)


@pytest.mark.slow
def test_dual_method_n3():
    # unpruned sweep over all 17!! = 34459425 chord diagrams of length 18
    classes, rooted, total = naive_class_count(cubic(2))
    assert total == 34459425
    assert (classes, rooted) == (N3, 105)


def test_workers_do_not_change_output():
    a, sa = enumerate_words((3,) * 6)
    b, sb = enumerate_words((3,) * 6, workers=3)
    assert (a == b).all() and (sa == sb).all()
    a, _ = enumerate_words(n_edges=6)
    b, _ = enumerate_words(n_edges=6, workers=2)
    assert (a == b).all()


def test_cap_and_resume():
    full = [c.word for c in enumerate_maps((4, 3, 3, 3, 3))]
    spec = EnumerationSpec((4, 3, 3, 3, 3), max_classes=5)
    got = []
    with pytest.raises(CapExceeded) as info:
        for c in enumerate_maps(spec):
            got.append(c.word)
    assert len(got) == 5
    cursor = EnumerationCursor.from_json(info.value.partial.to_json())
    got += [c.word for c in enumerate_maps((4, 3, 3, 3, 3), cursor=cursor)]
    assert got == full


def test_chunked_resume_matches():
    full = enumerate_words(n_edges=5)[0].tolist()
    cursor = EnumerationCursor(5, None)
    got = []
    while not cursor.done:
        words, _ = enumerate_chunk(cursor, 7)
        got += words.tolist()
        cursor = EnumerationCursor.from_json(cursor.to_json())
    assert got == full


def test_cursor_shape():
    d = json.loads(EnumerationCursor(9, cubic(2)).to_json())
    assert set(d) == {"version", "n_edges", "degrees", "prefix", "stack", "emitted", "done"}


def test_formula():
    assert collection_formula(1) == 1
    assert collection_formula(2) == 45
    assert unicellular_collections(2) == (4, 4, 4)
