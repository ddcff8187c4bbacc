r"""
Unicellular maps encoded by their boundary word.

A unicellular map with ``E`` edges is stored as the cyclic word read along its
single face: a tuple of ``2E`` nonzero integers where ``+k`` and ``-k`` are
the two orientations of edge ``k``.  An oriented edge is therefore just a
signed integer and reversing it is negation.

The vertex rotation is recovered from the word by

    sigma(x) = letter following -x in the cyclic word

so that the orbits of ``sigma`` are the vertices.  With this convention the
word ``1 2 -1 -2`` is the one-vertex torus.

EXAMPLES::

    >>> m = parse_word("1 2 3 -1 -2 -3")
    >>> m.degrees, m.genus
    ((3, 3), 1)
    >>> m.vertex_cycles
    ((1, -2, 3), (2, -3, -1))
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (EdgeOccurrenceViolation, InvalidBlock, LoopEdge,
                     MalformedToken, NonIntegerGenus, NotUnicellular,
                     Unrealizable)


def _check_letters(word):
    """Raise unless ``word`` uses each id 1..E exactly once with each sign."""
    n = len(word)
    if n < 2 or n % 2:
        raise EdgeOccurrenceViolation("word length must be even and at least 2, got %d" % n)
    E = n // 2
    seen = set()
    for x in word:
        if not isinstance(x, (int, np.integer)) or x == 0:
            raise MalformedToken("letter %r is not a nonzero integer" % (x,))
        if abs(x) > E:
            raise EdgeOccurrenceViolation("edge id %d out of range 1..%d" % (abs(x), E))
        if x in seen:
            raise EdgeOccurrenceViolation("letter %d occurs twice" % x)
        seen.add(x)


def normalize_word(letters):
    """Relabel edges 1..E by order of first appearance.

    The sign of each letter is kept, so the relabeling is a pure renaming of
    edge ids.  Input ids only need to be nonzero and appear once with each
    sign.
    """
    letters = list(letters)
    if len(letters) < 2 or len(letters) % 2:
        raise EdgeOccurrenceViolation("word length must be even and at least 2, got %d" % len(letters))
    relabel = {}
    seen = set()
    for x in letters:
        if x == 0:
            raise MalformedToken("edge id 0 is not allowed")
        if x in seen:
            raise EdgeOccurrenceViolation("letter %d occurs twice with the same sign" % x)
        seen.add(x)
        if abs(x) not in relabel:
            relabel[abs(x)] = len(relabel) + 1
    for x in seen:
        if -x not in seen:
            raise EdgeOccurrenceViolation("edge %d does not occur with both signs" % abs(x))
    return tuple(relabel[abs(x)] if x > 0 else -relabel[abs(x)] for x in letters)


@dataclass(frozen=True)
class UnicellularMap:
    """A validated boundary word together with its derived vertex structure.

    The word is kept as given (labels 1..E, a distinguished start).  Equality
    is equality of words; use :func:`unicellular.canon.is_isomorphic` to
    compare maps up to rotation and relabeling.
    """

    word: tuple

    def __post_init__(self):
        word = tuple(int(x) for x in self.word)
        _check_letters(word)
        object.__setattr__(self, "word", word)
        if (self.n_edges - self.n_vertices + 1) % 2:
            raise NonIntegerGenus("E - V + 1 = %d is odd" % (self.n_edges - self.n_vertices + 1))

    @classmethod
    def from_letters(cls, letters):
        """Build a map from arbitrary signed ids, relabeled by first appearance."""
        return cls(normalize_word(letters))

    def __str__(self):
        return to_umf(self)

    def __len__(self):
        return len(self.word)

    @property
    def n_edges(self):
        return len(self.word) // 2

    @property
    def n_vertices(self):
        return len(self.vertex_cycles)

    @cached_property
    def positions(self):
        """Dictionary letter -> index in the word."""
        return {x: i for i, x in enumerate(self.word)}

    def sigma(self, x):
        """Next oriented edge around the source vertex of ``x``."""
        w = self.word
        return w[(self.positions[-x] + 1) % len(w)]

    @cached_property
    def vertex_cycles(self):
        """Orbits of the rotation, each starting at its first letter in word order."""
        seen = set()
        cycles = []
        for x in self.word:
            if x in seen:
                continue
            cyc = []
            y = x
            while y not in seen:
                seen.add(y)
                cyc.append(y)
                y = self.sigma(y)
            cycles.append(tuple(cyc))
        return tuple(cycles)

    @cached_property
    def vertex_of(self):
        """Dictionary letter -> index of the vertex it leaves from."""
        return {x: i for i, cyc in enumerate(self.vertex_cycles) for x in cyc}

    @property
    def degrees(self):
        return tuple(sorted((len(c) for c in self.vertex_cycles), reverse=True))

    @property
    def genus(self):
        return (self.n_edges - self.n_vertices + 1) // 2

    def endpoints(self, e):
        """Return ``(u, v)``, the vertex indices at the tail and head of edge ``e``."""
        return self.vertex_of[e], self.vertex_of[-e]

    def is_loop(self, e):
        u, v = self.endpoints(e)
        return u == v

    def rotate(self, k):
        w = self.word
        k %= len(w)
        return UnicellularMap(w[k:] + w[:k])


def parse_word(text):
    """Parse one line of UMF text into a map with normalized edge ids."""
    tokens = text.split()
    letters = []
    for tok in tokens:
        try:
            x = int(tok)
        except ValueError:
            raise MalformedToken("token %r is not an integer" % tok) from None
        if x == 0:
            raise MalformedToken("token %r is zero" % tok)
        letters.append(x)
    return UnicellularMap(normalize_word(letters))


def as_map(obj):
    """Coerce a map, a UMF string or a letter sequence to a :class:`UnicellularMap`."""
    if isinstance(obj, UnicellularMap):
        return obj
    if isinstance(obj, str):
        return parse_word(obj)
    return UnicellularMap.from_letters(obj)


def to_umf(m):
    return " ".join(str(x) for x in m.word)


def read_umf(lines):
    """Yield maps from an iterable of UMF lines, skipping blanks and comments."""
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        yield parse_word(line)


def write_umf(maps, fh):
    for m in maps:
        fh.write(to_umf(as_map(m)))
        fh.write("\n")


def vertex_structure(m):
    return m.vertex_cycles


def genus(m):
    return m.genus


# ---------------------------------------------------------------------------
# degree partitions
# ---------------------------------------------------------------------------

def degree_partition(degrees):
    """Canonical multiset form: a descending tuple of positive ints."""
    degrees = tuple(sorted((int(d) for d in degrees), reverse=True))
    if not degrees or degrees[-1] <= 0:
        raise Unrealizable("degrees must be a nonempty list of positive integers")
    return degrees


def partition_shape(degrees):
    """Return ``(V, E, g)`` for a realizable degree partition."""
    degrees = degree_partition(degrees)
    total = sum(degrees)
    if total % 2:
        raise Unrealizable("degree sum %d is odd" % total)
    V = len(degrees)
    E = total // 2
    twice_g = E - V + 1
    if twice_g < 0 or twice_g % 2:
        raise Unrealizable("E - V + 1 = %d is not twice a nonnegative integer" % twice_g)
    return V, E, twice_g // 2


def is_realizable(degrees):
    try:
        partition_shape(degrees)
    except Unrealizable:
        return False
    return True


def partitions_with_edges(E):
    """All realizable degree partitions with ``E`` edges, descending order."""
    out = []

    def rec(remaining, maxpart, acc):
        if remaining == 0:
            if is_realizable(acc):
                out.append(tuple(acc))
            return
        for d in range(min(remaining, maxpart), 0, -1):
            acc.append(d)
            rec(remaining - d, d, acc)
            acc.pop()

    rec(2 * E, 2 * E, [])
    return out


# ---------------------------------------------------------------------------
# rotation systems and local edits
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RotationSystem:
    """Vertex rotation given by its cycles over signed letters.

    Faces are the orbits of ``x -> sigma(-x)``, which walks the boundary word
    of a unicellular map letter by letter.
    """

    cycles: tuple

    @cached_property
    def sigma(self):
        s = {}
        for cyc in self.cycles:
            for i, x in enumerate(cyc):
                s[x] = cyc[(i + 1) % len(cyc)]
        return s

    def face_cycles(self):
        sigma = self.sigma
        seen = set()
        faces = []
        for cyc in self.cycles:
            for x in cyc:
                if x in seen:
                    continue
                face = []
                y = x
                while y not in seen:
                    seen.add(y)
                    face.append(y)
                    y = sigma[-y]
                faces.append(tuple(face))
        return faces

    def face_count(self):
        return len(self.face_cycles())

    def to_map(self, start=None):
        """Boundary word of the single face, starting at ``start`` if given."""
        sigma = self.sigma
        for x in sigma:
            if -x not in sigma:
                raise NotUnicellular("letter %d has no reverse" % x)
        faces = self.face_cycles()
        if len(faces) != 1:
            raise NotUnicellular("rotation system has %d faces" % len(faces))
        face = faces[0]
        if start is not None:
            k = face.index(start)
            face = face[k:] + face[:k]
        return UnicellularMap(face)


def rotation_system(m):
    return RotationSystem(m.vertex_cycles)


def rotation_system_roundtrip(m):
    """Word -> rotation system -> word, starting from the same letter."""
    rs = rotation_system(m)
    if rs.face_count() != 1:
        raise NotUnicellular("derived rotation system is not unicellular")
    return rs.to_map(start=m.word[0])


def _first_letter(m, avoid=()):
    return next(x for x in m.word if abs(x) not in avoid)


def subdivide_edge(m, e):
    """Insert a degree-2 vertex on edge ``e`` using the fresh edge ``E+1``."""
    if not 1 <= e <= m.n_edges:
        raise EdgeOccurrenceViolation("no edge %d" % e)
    f = m.n_edges + 1
    out = []
    for x in m.word:
        if x == e:
            out.extend((e, f))
        elif x == -e:
            out.extend((-f, -e))
        else:
            out.append(x)
    return UnicellularMap(out)


def split_vertex(m, v, start, length):
    """Split vertex ``v`` by pulling the arc ``start .. start+length-1`` of its rotation apart.

    ``v`` indexes :attr:`UnicellularMap.vertex_cycles`.  The arc is moved to a
    new vertex joined to the remainder by the fresh edge ``E+1``; the two new
    degrees are ``length + 1`` and ``deg(v) - length + 1``.
    """
    cycles = list(m.vertex_cycles)
    if not 0 <= v < len(cycles):
        raise InvalidBlock("no vertex %d" % v)
    cyc = cycles[v]
    d = len(cyc)
    if d < 2 or not 1 <= length <= d - 1:
        raise InvalidBlock("block must be a nonempty proper arc of a degree-%d vertex" % d)
    block = [cyc[(start + i) % d] for i in range(length)]
    rest = [cyc[(start + length + i) % d] for i in range(d - length)]
    f = m.n_edges + 1
    cycles[v] = tuple([f] + block)
    cycles.append(tuple([-f] + rest))
    return RotationSystem(tuple(cycles)).to_map(start=m.word[0])


def collapse_edge(m, e):
    """Contract the non-loop edge ``e`` and renumber the last edge into its slot."""
    if not 1 <= e <= m.n_edges:
        raise EdgeOccurrenceViolation("no edge %d" % e)
    u, v = m.endpoints(e)
    if u == v:
        raise LoopEdge("edge %d is a loop" % e)
    cycles = list(m.vertex_cycles)
    cu, cv = cycles[u], cycles[v]
    i, j = cu.index(e), cv.index(-e)
    merged = cu[i + 1:] + cu[:i] + cv[j + 1:] + cv[:j]
    cycles = [c for k, c in enumerate(cycles) if k not in (u, v)] + [merged]
    start = _first_letter(m, avoid=(e,))
    last = m.n_edges
    if e != last:
        ren = {last: e, -last: -e}
        cycles = [tuple(ren.get(x, x) for x in c) for c in cycles]
        start = ren.get(start, start)
    return RotationSystem(tuple(cycles)).to_map(start=start)


# ---------------------------------------------------------------------------
# batch helpers over arrays of words
# ---------------------------------------------------------------------------

def words_array(words):
    """Stack equal-length words into a 2D integer array."""
    return np.asarray([list(w) for w in words], dtype=np.int64)


def batch_sigma(words):
    """Rotation permutation on positions for each row of ``words``.

    Row ``i`` maps position ``p`` to the position of ``sigma(words[i, p])``.
    """
    W = np.asarray(words, dtype=np.int64)
    N, n = W.shape
    E = n // 2
    # letter index: +k -> 2(k-1), -k -> 2(k-1)+1
    idx = 2 * (np.abs(W) - 1) + (W < 0)
    pos = np.empty_like(idx)
    rows = np.arange(N)[:, None]
    pos[rows, idx] = np.arange(n)[None, :]
    bar_pos = pos[rows, idx ^ 1]
    return (bar_pos + 1) % n


def _orbit_minima(P):
    """Smallest point in the orbit of each point, by pointer doubling."""
    N, n = P.shape
    rows = np.arange(N)[:, None]
    label = np.broadcast_to(np.arange(n), (N, n)).copy()
    step = P.copy()
    span = 1
    while span < n:
        label = np.minimum(label, label[rows, step])
        step = step[rows, step]
        span *= 2
    return label


def batch_cycle_count(perm):
    """Number of cycles of each row permutation."""
    P = np.asarray(perm, dtype=np.int64)
    label = _orbit_minima(P)
    return (label == np.arange(P.shape[1])[None, :]).sum(axis=1)


def batch_degrees(words):
    """Sorted-descending degree lists (padded with zeros) for each word."""
    P = batch_sigma(words)
    N, n = P.shape
    rows = np.arange(N)[:, None]
    label = _orbit_minima(P)
    flat = (rows * n + label).ravel()
    counts = np.bincount(flat, minlength=N * n).reshape(N, n)
    return -np.sort(-counts, axis=1)
