r"""
GF(2) interlacement of a boundary word.

Edge ``e`` occupies two positions of the word, a chord of the ``2E``-gon.
``A[e][f] = 1`` when the chords of ``e`` and ``f`` cross.  The rank of ``A``
over GF(2) equals ``2g``, which gives a genus computation independent of the
vertex rotation.

Rows are stored as Python ints used as bitsets (bit ``f-1`` for edge ``f``).

For maps with all vertex degrees even, ``A u = 1`` always has a solution;
:func:`parity_certificate` returns one together with ``2g`` independent rows.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoSolution, OddPartition
from .maps import as_map


@dataclass(frozen=True)
class InterlacementMatrix:
    rows: tuple

    @property
    def size(self):
        return len(self.rows)

    def entry(self, e, f):
        return (self.rows[e - 1] >> (f - 1)) & 1

    def to_array(self):
        n = self.size
        return np.array([[(r >> j) & 1 for j in range(n)] for r in self.rows], dtype=np.uint8)

    @property
    def rank(self):
        return gf2_rank(self.rows)


def interlacement(m):
    m = as_map(m)
    E = m.n_edges
    pos = m.positions
    chords = [(min(pos[e], pos[-e]), max(pos[e], pos[-e])) for e in range(1, E + 1)]
    rows = [0] * E
    for i in range(E):
        a, b = chords[i]
        for j in range(i + 1, E):
            c, d = chords[j]
            if (a < c < b) != (a < d < b):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return InterlacementMatrix(tuple(rows))


def _eliminate(rows):
    """Row-reduce; return ``(pivots, reduced)`` with pivots as (row index, bit)."""
    work = list(rows)
    pivots = []
    used = [False] * len(work)
    nbits = max((r.bit_length() for r in work), default=0)
    for bit in range(nbits):
        mask = 1 << bit
        piv = next((i for i, r in enumerate(work) if not used[i] and r & mask), None)
        if piv is None:
            continue
        used[piv] = True
        pivots.append((piv, bit))
        pr = work[piv]
        for i, r in enumerate(work):
            if i != piv and r & mask:
                work[i] = r ^ pr
    return pivots, work


def gf2_rank(rows):
    return len(_eliminate(rows)[0])


def gf2_solve(rows, rhs):
    """Solve ``A u = rhs`` over GF(2) where ``rows`` are the rows of ``A``.

    ``rhs`` is a bitset over rows.  Returns a bitset ``u`` over columns, or
    ``None`` if the system is inconsistent.
    """
    n = len(rows)
    aug = [r | (((rhs >> i) & 1) << n) for i, r in enumerate(rows)]
    # reduce on the coefficient columns only
    work = list(aug)
    used = [False] * n
    pivots = []
    for bit in range(n):
        mask = 1 << bit
        piv = next((i for i in range(n) if not used[i] and work[i] & mask), None)
        if piv is None:
            continue
        used[piv] = True
        pivots.append((piv, bit))
        pr = work[piv]
        for i in range(n):
            if i != piv and work[i] & mask:
                work[i] ^= pr
    coeff_mask = (1 << n) - 1
    for i in range(n):
        if not used[i] and work[i] & coeff_mask == 0 and (work[i] >> n) & 1:
            return None
    u = 0
    for piv, bit in pivots:
        if (work[piv] >> n) & 1:
            u |= 1 << bit
    return u


def genus_from_rank(m):
    return interlacement(m).rank // 2


def is_even_partition(m):
    return all(d % 2 == 0 for d in as_map(m).degrees)


@dataclass(frozen=True)
class ParityCertificate:
    """Independent interlacement rows and a solution of ``A u = 1``.

    ``basis_edges`` are edge ids, ``solution`` the edge ids where ``u = 1``.
    """

    basis_edges: tuple
    solution: tuple

    def vector(self, n_edges):
        s = set(self.solution)
        return tuple(int(e in s) for e in range(1, n_edges + 1))


def parity_certificate(m):
    m = as_map(m)
    if not is_even_partition(m):
        raise OddPartition("degrees %s are not all even" % (m.degrees,))
    A = interlacement(m)
    E = A.size
    if any(r == 0 for r in A.rows):
        raise NoSolution("zero interlacement row in an even map", word=m.word)
    ones = (1 << E) - 1
    u = gf2_solve(A.rows, ones)
    if u is None:
        raise NoSolution("A u = 1 has no solution", word=m.word)
    check = 0
    for i, r in enumerate(A.rows):
        check |= (bin(r & u).count("1") & 1) << i
    if check != ones:
        raise NoSolution("returned solution does not satisfy A u = 1", word=m.word)
    # independent rows in edge order
    basis = []
    span = []
    for i, r in enumerate(A.rows):
        if gf2_rank(span + [r]) > len(span):
            span.append(r)
            basis.append(i + 1)
    if len(basis) != 2 * m.genus:
        raise NoSolution("found %d independent rows, expected %d" % (len(basis), 2 * m.genus),
                         word=m.word)
    return ParityCertificate(tuple(basis), tuple(e for e in range(1, E + 1) if (u >> (e - 1)) & 1))


# ---------------------------------------------------------------------------
# batch versions over arrays of words
# ---------------------------------------------------------------------------

def batch_interlacement_rows(words):
    """Interlacement rows as bitsets, one row of ``E`` ints per word."""
    W = np.asarray(words, dtype=np.int64)
    N, n = W.shape
    E = n // 2
    rows = np.arange(N)[:, None]
    idx = 2 * (np.abs(W) - 1) + (W < 0)
    pos = np.empty_like(idx)
    pos[rows, idx] = np.arange(n)[None, :]
    first = np.minimum(pos[:, 0::2], pos[:, 1::2])
    second = np.maximum(pos[:, 0::2], pos[:, 1::2])
    a, b = first[:, :, None], second[:, :, None]
    c, d = first[:, None, :], second[:, None, :]
    cross = ((a < c) & (c < b)) != ((a < d) & (d < b))
    weights = (1 << np.arange(E, dtype=np.int64))
    return (cross.astype(np.int64) * weights[None, None, :]).sum(axis=2)


def batch_gf2_rank(rows, n_bits=None):
    """GF(2) rank of each matrix given as an ``(N, R)`` array of row bitsets."""
    R = np.array(rows, dtype=np.int64, copy=True)
    N, nr = R.shape
    if n_bits is None:
        n_bits = int(R.max()).bit_length() if R.size else 0
    used = np.zeros((N, nr), dtype=bool)
    rank = np.zeros(N, dtype=np.int64)
    idx = np.arange(N)
    for bit in range(n_bits):
        has = ((R >> bit) & 1).astype(bool)
        cand = has & ~used
        ok = cand.any(axis=1)
        piv = np.argmax(cand, axis=1)
        prow = R[idx, piv]
        clear = has & ok[:, None]
        clear[idx, piv] = False
        R = np.where(clear, R ^ prow[:, None], R)
        used[idx[ok], piv[ok]] = True
        rank += ok
    return rank


def batch_rank(words):
    W = np.asarray(words)
    return batch_gf2_rank(batch_interlacement_rows(W), n_bits=W.shape[1] // 2)


def batch_ones_solvable(words):
    """Whether ``A u = 1`` is solvable, for each word, via rank comparison."""
    W = np.asarray(words)
    E = W.shape[1] // 2
    rows = batch_interlacement_rows(W)
    aug = rows | (1 << E)
    return batch_gf2_rank(rows, E) == batch_gf2_rank(aug, E + 1)
