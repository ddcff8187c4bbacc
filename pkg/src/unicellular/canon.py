"""Canonical representatives of maps up to rotation and relabeling.

For each of the ``2E`` rotations of the word, edges are renamed in order of
first appearance and the first occurrence of every edge is declared forward.
The canonical word is the least of these relabeled rotations, letters being
compared by magnitude with ``+k`` before ``-k``.  Words are never reversed, so
mirror images are distinct classes.

Cost is O(E^2) per map.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .maps import UnicellularMap, as_map


def letter_key(x):
    return 2 * abs(x) + (x < 0)


def word_key(word):
    """Sort key putting words in canonical lexicographic order."""
    return tuple(2 * abs(x) + (x < 0) for x in word)


def relabel_rotation(word, r):
    """Rotation of ``word`` starting at index ``r``, relabeled by first appearance."""
    n = len(word)
    names = {}
    out = []
    for t in range(n):
        x = word[(r + t) % n]
        e = abs(x)
        if e in names:
            out.append(-names[e])
        else:
            names[e] = len(names) + 1
            out.append(names[e])
    return tuple(out)


@dataclass(frozen=True, order=False)
class CanonicalClass:
    """Homeomorphism class of a unicellular map.

    ``symmetry_count`` is the number of rotations of the word that relabel to
    the canonical word, i.e. the order of the orientation-preserving
    combinatorial automorphism group.
    """

    word: tuple
    symmetry_count: int

    @cached_property
    def map(self):
        return UnicellularMap(self.word)

    @property
    def degrees(self):
        return self.map.degrees

    @property
    def genus(self):
        return self.map.genus

    @property
    def key(self):
        return word_key(self.word)

    def __lt__(self, other):
        return self.key < other.key

    def __str__(self):
        return " ".join(str(x) for x in self.word)


def canonical_form(m):
    m = as_map(m)
    w = m.word
    best = None
    count = 0
    for r in range(len(w)):
        cand = relabel_rotation(w, r)
        k = word_key(cand)
        if best is None or k < best[0]:
            best = (k, cand)
            count = 1
        elif k == best[0]:
            count += 1
    return CanonicalClass(best[1], count)


def canonical_word(m):
    return canonical_form(m).word


def is_isomorphic(a, b):
    a, b = as_map(a), as_map(b)
    if len(a.word) != len(b.word) or a.degrees != b.degrees:
        return False
    return canonical_form(a).word == canonical_form(b).word


def symmetry_count(m):
    return canonical_form(m).symmetry_count


def is_canonical(word):
    """True if ``word`` equals its own canonical form."""
    return canonical_form(UnicellularMap(word)).word == tuple(word)


def mirror(m):
    """The orientation-reversed map: the boundary word read backwards."""
    m = as_map(m)
    return UnicellularMap.from_letters(m.word[::-1])


def is_chiral(m):
    return canonical_form(m).word != canonical_form(mirror(m)).word
