r"""
Surgery on unicellular maps.

Two oriented edges ``x`` and ``y`` (on different edges) are intertwined when
the four letters ``x, -x, y, -y`` appear in the cyclic word in the order

    x < -x < y < -y      or      x < -y < y < -x.

A move is stored in the first (normal) form ``a < -a < b < -b``; a pair in the
second form ``(x, y)`` is the normal-form move ``(-y, -x)``.  With the word
rotated to ``w1 a w2 -a w3 b w4 -b`` the surgery returns

    w3 a w2 -a w1 b w4 -b

Edge labels are carried through unchanged so that moves can be chained.
"""
from __future__ import annotations

from dataclasses import dataclass

from .canon import canonical_form
from .errors import NotIntertwined, PropertyFailure, SameEdge
from .maps import UnicellularMap, as_map


@dataclass(frozen=True)
class SurgeryMove:
    """Ordered pair of oriented edges in normal form on a given word.

    ``positions`` holds the indices of ``a, -a, b, -b`` in the word the move
    was built for.
    """

    a: int
    b: int
    positions: tuple = ()

    def __str__(self):
        return "(%d,%d)" % (self.a, self.b)


def _cyclic_offsets(m, x, y):
    pos = m.positions
    n = len(m.word)
    base = pos[x]
    return ((pos[-x] - base) % n, (pos[y] - base) % n, (pos[-y] - base) % n)


def is_normal_form(m, a, b):
    """True if the letters read ``a, -a, b, -b`` cyclically."""
    if abs(a) == abs(b):
        raise SameEdge("letters %d and %d lie on the same edge" % (a, b))
    da, db, dbb = _cyclic_offsets(m, a, b)
    return da < db < dbb


def is_intertwined(m, x, y):
    m = as_map(m)
    if abs(x) == abs(y):
        raise SameEdge("letters %d and %d lie on the same edge" % (x, y))
    dxb, dy, dyb = _cyclic_offsets(m, x, y)
    return dxb < dy < dyb or dyb < dy < dxb


def normal_form(m, x, y):
    """The :class:`SurgeryMove` realizing the surgery between ``x`` and ``y``."""
    m = as_map(m)
    if is_normal_form(m, x, y):
        a, b = x, y
    elif is_normal_form(m, -y, -x):
        a, b = -y, -x
    else:
        raise NotIntertwined("letters %d and %d are not intertwined" % (x, y))
    pos = m.positions
    return SurgeryMove(a, b, (pos[a], pos[-a], pos[b], pos[-b]))


def sectors(m, move):
    """Split the word into ``(w1, w2, w3, w4)`` around a normal-form move."""
    w = m.word
    n = len(w)
    i = m.positions[move.a]
    r = w[i:] + w[:i]
    ja = (m.positions[-move.a] - i) % n
    jb = (m.positions[move.b] - i) % n
    jbb = (m.positions[-move.b] - i) % n
    return r[jbb + 1:], r[1:ja], r[ja + 1:jb], r[jb + 1:jbb]


def surgery(m, x, y=None):
    """Apply the surgery between ``x`` and ``y``.

    ``x`` may also be a :class:`SurgeryMove`, in which case ``y`` is omitted.
    Raises :class:`NotIntertwined` when the pair admits no surgery.
    """
    m = as_map(m)
    if isinstance(x, SurgeryMove):
        move = x
        if not is_normal_form(m, move.a, move.b):
            raise NotIntertwined("move %s is not in normal form on this word" % move)
    else:
        move = normal_form(m, x, y)
    a, b = move.a, move.b
    w1, w2, w3, w4 = sectors(m, move)
    return UnicellularMap(w3 + (a,) + w2 + (-a,) + w1 + (b,) + w4 + (-b,))


def moves(m):
    """All normal-form moves on ``m``, ordered by the positions of ``a`` then ``b``."""
    m = as_map(m)
    w = m.word
    n = len(w)
    pos = m.positions
    out = []
    for i, a in enumerate(w):
        ja = (pos[-a] - i) % n
        for t in range(ja + 1, n):
            b = w[(i + t) % n]
            if abs(b) == abs(a):
                continue
            if (pos[-b] - i) % n > t:
                out.append(SurgeryMove(a, b, (i, pos[-a], pos[b], pos[-b])))
    return out


@dataclass(frozen=True)
class Neighborhood:
    """Result of scanning every move on a map.

    ``neighbors`` maps each distinct neighbor class to the first move (in
    :func:`moves` order) producing it.  Moves landing back in the source
    class are only counted in ``self_loops``.
    """

    source: object
    neighbors: dict
    self_loops: int
    n_moves: int

    def sorted(self):
        return sorted(self.neighbors.items(), key=lambda kv: kv[0].key)


def neighborhood(m):
    m = as_map(m)
    source = canonical_form(m)
    found = {}
    loops = 0
    all_moves = moves(m)
    for mv in all_moves:
        c = canonical_form(surgery(m, mv))
        if c.word == source.word:
            loops += 1
        elif c not in found:
            found[c] = mv
    return Neighborhood(source, found, loops, len(all_moves))


def neighbors(m):
    """Set of canonical classes one surgery away, excluding the source class."""
    return frozenset(neighborhood(m).neighbors)


def involution_loop(m, x, y=None):
    """Surgery on ``(a, b)`` followed by surgery on ``(-a, -b)``.

    The result lies in the same class as ``m``; failing to find the second
    move intertwined is a :class:`PropertyFailure`.
    """
    m = as_map(m)
    move = x if isinstance(x, SurgeryMove) else normal_form(m, x, y)
    first = surgery(m, move)
    try:
        return surgery(first, -move.a, -move.b)
    except NotIntertwined:
        raise PropertyFailure("(-a, -b) not intertwined after surgery on %s" % move,
                              word=m.word) from None
