"""Brute-force reference computations.

Nothing here shares code with the production paths it is used to check:
vertices come from gluing polygon corners, isomorphism from trying every
rotation with a forced relabeling, classes from grouping every chord diagram,
and surgery from slicing the word directly.  Everything is exponential or
quadratic on purpose and meant for small words only.
"""
from __future__ import annotations

import itertools

from .maps import UnicellularMap


def corner_classes(word):
    """Vertices as sets of polygon corners; corner ``i`` starts side ``i``."""
    n = len(word)
    where = {}
    for i, x in enumerate(word):
        where.setdefault(abs(x), []).append(i)
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, j in where.values():
        # sides i and j are glued with opposite orientations
        for a, b in ((i, (j + 1) % n), (j, (i + 1) % n)):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    groups = {}
    for c in range(n):
        groups.setdefault(find(c), []).append(c)
    return list(groups.values())


def corner_degrees(word):
    return tuple(sorted((len(g) for g in corner_classes(word)), reverse=True))


def corner_vertex_count(word):
    return len(corner_classes(word))


def brute_isomorphic(u, v):
    """Try every rotation of ``v`` with the relabeling it forces."""
    if len(u) != len(v):
        return False
    n = len(u)
    for r in range(n):
        fwd = {}
        back = {}
        ok = True
        for t in range(n):
            a = abs(u[t])
            b = abs(v[(r + t) % n])
            if fwd.setdefault(a, b) != b or back.setdefault(b, a) != a:
                ok = False
                break
        if ok:
            return True
    return False


def brute_automorphisms(word):
    """Rotations ``r`` under which the word relabels onto itself."""
    n = len(word)
    count = 0
    for r in range(n):
        fwd = {}
        ok = True
        for t in range(n):
            a = abs(word[t])
            b = abs(word[(r + t) % n])
            if fwd.setdefault(a, b) != b:
                ok = False
                break
        if ok and len(set(fwd.values())) == len(fwd):
            count += 1
    return count


def all_pairings(n_edges):
    """Every chord diagram on ``2E`` points as a word with first-appearance labels."""
    n = 2 * n_edges

    def rec(partner):
        try:
            i = partner.index(None)
        except ValueError:
            yield tuple(partner)
            return
        for j in range(i + 1, n):
            if partner[j] is None:
                partner[i], partner[j] = j, i
                yield from rec(partner)
                partner[i] = partner[j] = None

    for partner in rec([None] * n):
        word = [0] * n
        lab = 0
        for i in range(n):
            if partner[i] > i:
                lab += 1
                word[i] = lab
                word[partner[i]] = -lab
        yield tuple(word)


def naive_classes(n_edges, degrees=None):
    """One representative per isomorphism class, grouped by brute force."""
    buckets = {}
    for w in all_pairings(n_edges):
        d = corner_degrees(w)
        if degrees is not None and d != tuple(sorted(degrees, reverse=True)):
            continue
        reps = buckets.setdefault(d, [])
        if not any(brute_isomorphic(w, r) for r in reps):
            reps.append(w)
    return [r for reps in buckets.values() for r in reps]


def _rewrite(word, a, b):
    """Sector swap with the word read from ``a``: a w2 -a w3 b w4 -b w1."""
    n = len(word)
    i = word.index(a)
    r = list(word[i:] + word[:i])
    ia, ib, ibb = r.index(-a), r.index(b), r.index(-b)
    w2, w3, w4, w1 = r[1:ia], r[ia + 1:ib], r[ib + 1:ibb], r[ibb + 1:]
    return tuple(w3 + [a] + w2 + [-a] + w1 + [b] + w4 + [-b])


def _cyclic_order(word, letters):
    """Letters sorted by position, read cyclically from the first one."""
    n = len(word)
    start = word.index(letters[0])
    return sorted(letters, key=lambda x: (word.index(x) - start) % n)


def brute_surgeries(word):
    """Every ``(x, y, result)`` over ordered pairs matching either intertwining pattern."""
    out = []
    for x in word:
        for y in word:
            if abs(x) == abs(y):
                continue
            order = _cyclic_order(word, [x, -x, y, -y])
            if order == [x, -x, y, -y]:
                out.append((x, y, _rewrite(word, x, y)))
            elif order == [x, -y, y, -x]:
                out.append((x, y, _rewrite(word, -y, -x)))
    return out


def brute_bridges(m):
    """Edges whose deletion leaves more components (plain graph search per edge)."""
    E = m.n_edges
    ends = [m.endpoints(e) for e in range(1, E + 1)]

    def n_components(skip):
        parent = list(range(m.n_vertices))

        def find(a):
            while parent[a] != a:
                a = parent[a]
            return a

        for e, (u, v) in enumerate(ends, 1):
            if e != skip:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
        return len({find(v) for v in range(m.n_vertices)})

    base = n_components(None)
    return frozenset(e for e in range(1, E + 1) if n_components(e) > base)


def brute_has_perfect_matching(m):
    V = m.n_vertices
    if V % 2:
        return False
    ends = [m.endpoints(e) for e in range(1, m.n_edges + 1)]
    proper = [(u, v) for u, v in ends if u != v]
    for combo in itertools.combinations(proper, V // 2):
        covered = {x for uv in combo for x in uv}
        if len(covered) == V:
            return True
    return False


def surgery_preserves_invariants(word, result):
    a, b = UnicellularMap(word), UnicellularMap(result)
    return (a.n_edges, a.degrees, a.genus) == (b.n_edges, b.degrees, b.genus)


def naive_class_count(degrees):
    """Class count from an unpruned sweep of every chord diagram.

    The compiled sweep keeps the diagrams with the right corner degrees; those
    are rooted maps, and grouping them by canonical word gives the classes.
    """
    import numpy as np

    from . import _kernel
    from .canon import canonical_form
    from .maps import partition_shape

    degrees = tuple(sorted(degrees, reverse=True))
    _, E, _ = partition_shape(degrees)
    cnt = np.zeros(max(degrees) + 1, dtype=np.int64)
    for d in degrees:
        cnt[d] += 1
    words, total = _kernel.naive_pairing_kernel(E, cnt, True, 0)
    classes = {canonical_form(tuple(int(x) for x in w)).word for w in words}
    return len(classes), len(words), int(total)
