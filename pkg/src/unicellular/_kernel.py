"""Compiled backtracking over boundary words in canonical position.

Words are built left to right.  At each position the letter is either the
closing ``-j`` of an open edge ``j`` or the opening of the next edge, tried in
canonical letter order (``-1 < -2 < ... < next``), so leaves come out in
lexicographic order.

Letter ``x`` has index ``2(|x|-1) + (x < 0)``.  Placing position ``p`` fixes
``sigma(-w[p-1]) = w[p]``; the partial rotation is kept as a set of open
chains with their lengths stored at both endpoints, so a vertex is detected
the moment its orbit closes.
"""
import numpy as np
from numba import njit


@njit(cache=True)
def _lidx(x):
    if x > 0:
        return 2 * (x - 1)
    return 2 * (-x - 1) + 1


@njit(cache=True)
def _key(x):
    if x > 0:
        return 2 * x
    return -2 * x + 1


@njit(cache=True)
def _max_remaining(cnt):
    for d in range(cnt.shape[0] - 1, 0, -1):
        if cnt[d] > 0:
            return d
    return 0


@njit(cache=True)
def _link(a, b, other, clen, cnt, use_deg, rec, slot):
    """Set sigma(a) = b.  Returns False (with state unchanged) on a degree clash."""
    h = other[a]
    t = other[b]
    if h == b:
        L = clen[a]
        if use_deg:
            if L >= cnt.shape[0] or cnt[L] == 0:
                return False
            cnt[L] -= 1
        rec[slot, 0] = 1
        rec[slot, 1] = L
        return True
    L = clen[a] + clen[b]
    if use_deg and L > _max_remaining(cnt):
        return False
    rec[slot, 0] = 2
    rec[slot, 1] = h
    rec[slot, 2] = t
    rec[slot, 3] = other[h]
    rec[slot, 4] = other[t]
    rec[slot, 5] = clen[h]
    rec[slot, 6] = clen[t]
    other[h] = t
    other[t] = h
    clen[h] = L
    clen[t] = L
    return True


@njit(cache=True)
def _unlink(other, clen, cnt, use_deg, rec, slot):
    kind = rec[slot, 0]
    if kind == 1:
        if use_deg:
            cnt[rec[slot, 1]] += 1
    elif kind == 2:
        h = rec[slot, 1]
        t = rec[slot, 2]
        other[h] = rec[slot, 3]
        other[t] = rec[slot, 4]
        clen[h] = rec[slot, 5]
        clen[t] = rec[slot, 6]
    rec[slot, 0] = 0


@njit(cache=True)
def _prefix_ok(w, p, open_pos, rl):
    """No rotation's known relabeled prefix is smaller than the word's."""
    for r in range(1, p + 1):
        nxt = 0
        for q in range(r, p + 1):
            x = w[q]
            if x > 0:
                nxt += 1
                rl[x] = nxt
                y = nxt
            else:
                if open_pos[-x] >= r:
                    y = -rl[-x]
                else:
                    nxt += 1
                    rl[-x] = nxt
                    y = nxt
            c = _key(y) - _key(w[q - r])
            if c < 0:
                return False
            if c > 0:
                break
    return True


@njit(cache=True)
def _leaf_symmetry(w, n, rl, stamp, counter):
    """Number of rotations equal to ``w`` after relabeling, or 0 if one is smaller."""
    sym = 1
    for r in range(1, n):
        counter += 1
        nxt = 0
        c = 0
        for t in range(n):
            x = w[(r + t) % n]
            e = x if x > 0 else -x
            if stamp[e] == counter:
                y = -rl[e]
            else:
                stamp[e] = counter
                nxt += 1
                rl[e] = nxt
                y = nxt
            c = _key(y) - _key(w[t])
            if c != 0:
                break
        if c < 0:
            return 0, counter
        if c == 0:
            sym += 1
    return sym, counter


@njit(cache=True)
def _place(p, x, n, w, open_pos, is_open, state, other, clen, cnt, use_deg, rec):
    """Put letter ``x`` at position ``p``; state = [opened, n_open]."""
    w[p] = x
    if x > 0:
        open_pos[x] = p
        is_open[x] = True
        state[0] += 1
        state[1] += 1
    else:
        is_open[-x] = False
        state[1] -= 1
    ok = True
    if p >= 1:
        ok = _link(_lidx(-w[p - 1]), _lidx(x), other, clen, cnt, use_deg, rec, p)
    if ok and p == n - 1:
        ok = _link(_lidx(-x), _lidx(w[0]), other, clen, cnt, use_deg, rec, n)
        if not ok:
            _unlink(other, clen, cnt, use_deg, rec, p)
    if not ok:
        _unplace_letter(p, x, w, is_open, state)
    return ok


@njit(cache=True)
def _unplace_letter(p, x, w, is_open, state):
    if x > 0:
        is_open[x] = False
        state[0] -= 1
        state[1] -= 1
    else:
        is_open[-x] = True
        state[1] += 1
    w[p] = 0


@njit(cache=True)
def _unplace(p, n, w, is_open, state, other, clen, cnt, use_deg, rec):
    x = w[p]
    if p == n - 1:
        _unlink(other, clen, cnt, use_deg, rec, n)
    if p >= 1:
        _unlink(other, clen, cnt, use_deg, rec, p)
    _unplace_letter(p, x, w, is_open, state)


@njit(cache=True)
def _next_choice(p, cur, n, E, is_open, state):
    """Next letter after ``cur`` (0 = none tried) in canonical order, or 0."""
    remaining = n - p - 1
    start = 1
    if cur < 0:
        start = -cur + 1
    elif cur > 0:
        return 0
    if p > 0:
        for j in range(start, state[0] + 1):
            if is_open[j]:
                return -j
    if state[0] < E and state[1] + 1 <= remaining:
        return state[0] + 1
    return 0


@njit(cache=True)
def enumerate_kernel(E, deg_counts, use_deg, path, path_len, floor, resume, max_out):
    """Depth-first enumeration of canonical words.

    ``path[:path_len]`` is replayed first; with ``resume`` the search continues
    strictly after it, otherwise it is taken as a fixed prefix to expand.
    Positions below ``floor`` are never revisited.  Stops after ``max_out``
    leaves (``max_out <= 0`` means no limit).

    Returns ``(words, syms, count, path, path_len, done, ok)`` where ``ok`` is
    False when the given path could not be replayed.
    """
    n = 2 * E
    w = np.zeros(n, dtype=np.int64)
    open_pos = np.full(E + 2, -1, dtype=np.int64)
    is_open = np.zeros(E + 2, dtype=np.bool_)
    state = np.zeros(2, dtype=np.int64)
    other = np.arange(n, dtype=np.int64)
    clen = np.ones(n, dtype=np.int64)
    cnt = deg_counts.copy()
    rec = np.zeros((n + 1, 7), dtype=np.int64)
    rl = np.zeros(E + 2, dtype=np.int64)
    stamp = np.zeros(E + 2, dtype=np.int64)
    counter = 0

    cap = 1024
    words = np.zeros((cap, n), dtype=np.int8)
    syms = np.zeros(cap, dtype=np.int64)
    count = 0
    out_path = np.zeros(n, dtype=np.int64)

    for p in range(path_len):
        x = path[p]
        ok = False
        if p == 0:
            ok = x == 1
        else:
            # x must be a legal choice at p
            c = _next_choice(p, 0, n, E, is_open, state)
            while c != 0 and c != x:
                c = _next_choice(p, c, n, E, is_open, state)
            ok = c == x
        if ok:
            ok = _place(p, x, n, w, open_pos, is_open, state, other, clen, cnt, use_deg, rec)
        if ok and p >= 1:
            ok = _prefix_ok(w, p, open_pos, rl)
            if not ok:
                _unplace(p, n, w, is_open, state, other, clen, cnt, use_deg, rec)
        if not ok:
            return words[:0], syms[:0], 0, out_path, 0, True, False

    if resume and path_len > floor:
        p = path_len - 1
        advance = True
    else:
        p = path_len
        advance = False

    while True:
        if p == n:
            sym, counter = _leaf_symmetry(w, n, rl, stamp, counter)
            if sym > 0:
                if count == cap:
                    cap *= 2
                    nw = np.zeros((cap, n), dtype=np.int8)
                    nw[:count] = words[:count]
                    words = nw
                    ns = np.zeros(cap, dtype=np.int64)
                    ns[:count] = syms[:count]
                    syms = ns
                for i in range(n):
                    words[count, i] = w[i]
                syms[count] = sym
                count += 1
                if max_out > 0 and count >= max_out:
                    out_path[:] = w
                    return words[:count], syms[:count], count, out_path, n, False, True
            p = n - 1
            advance = True
            continue
        if advance:
            cur = w[p]
            _unplace(p, n, w, is_open, state, other, clen, cnt, use_deg, rec)
            if p < floor:
                break
            x = _next_choice(p, cur, n, E, is_open, state)
        else:
            if p == 0:
                x = 1
            else:
                x = _next_choice(p, 0, n, E, is_open, state)
        advance = False
        while x != 0:
            if _place(p, x, n, w, open_pos, is_open, state, other, clen, cnt, use_deg, rec):
                if p == 0 or _prefix_ok(w, p, open_pos, rl):
                    break
                _unplace(p, n, w, is_open, state, other, clen, cnt, use_deg, rec)
            x = _next_choice(p, x, n, E, is_open, state)
            if p == 0:
                x = 0
        if x == 0:
            if p <= floor:
                break
            p -= 1
            advance = True
        else:
            p += 1
    return words[:count], syms[:count], count, out_path, 0, True, True


@njit(cache=True)
def naive_pairing_kernel(E, deg_counts, use_deg, max_out):
    """Every chord diagram on ``2E`` points, filtered by degree multiset.

    No canonicity test and no pruning: each pairing of positions is visited,
    vertices are found by gluing the corners of the ``2E``-gon with a
    union-find, and matching words are returned with their first-appearance
    labels.  Used as an independent cross-check of the backtracking search.
    """
    n = 2 * E
    partner = np.full(n, -1, dtype=np.int64)
    cap = 1024
    words = np.zeros((cap, n), dtype=np.int8)
    count = 0
    total = 0
    parent = np.zeros(n, dtype=np.int64)
    degs = np.zeros(n, dtype=np.int64)
    hist = np.zeros(deg_counts.shape[0] + n + 1, dtype=np.int64)
    # choose partner of the lowest free position each level
    depth = 0
    first = np.zeros(E + 1, dtype=np.int64)
    choice = np.full(E + 1, -1, dtype=np.int64)
    while depth >= 0:
        if depth == E:
            total += 1
            keep = True
            if use_deg:
                for i in range(n):
                    parent[i] = i
                # corner i sits at the start of side i
                for i in range(n):
                    j = partner[i]
                    a = i
                    b = (j + 1) % n
                    while parent[a] != a:
                        a = parent[a]
                    while parent[b] != b:
                        b = parent[b]
                    if a != b:
                        parent[a] = b
                for i in range(n):
                    degs[i] = 0
                for i in range(n):
                    r = i
                    while parent[r] != r:
                        r = parent[r]
                    degs[r] += 1
                for d in range(hist.shape[0]):
                    hist[d] = 0
                for i in range(n):
                    if degs[i] > 0:
                        hist[degs[i]] += 1
                for d in range(hist.shape[0]):
                    want = deg_counts[d] if d < deg_counts.shape[0] else 0
                    if hist[d] != want:
                        keep = False
                        break
            if keep:
                if count == cap:
                    cap *= 2
                    nw = np.zeros((cap, n), dtype=np.int8)
                    nw[:count] = words[:count]
                    words = nw
                lab = 0
                for i in range(n):
                    if partner[i] > i:
                        lab += 1
                        words[count, i] = lab
                        words[count, partner[i]] = -lab
                count += 1
                if max_out > 0 and count >= max_out:
                    return words[:count], total
            depth -= 1
            if depth < 0:
                break
            # undo pairing made at this depth and advance
            i0 = first[depth]
            j0 = choice[depth]
            partner[i0] = -1
            partner[j0] = -1
        else:
            if choice[depth] == -1:
                i0 = 0
                while partner[i0] != -1:
                    i0 += 1
                first[depth] = i0
                j0 = i0
            else:
                i0 = first[depth]
                j0 = choice[depth]
            j0 += 1
            while j0 < n and partner[j0] != -1:
                j0 += 1
            if j0 >= n:
                choice[depth] = -1
                depth -= 1
                if depth >= 0:
                    partner[first[depth]] = -1
                    partner[choice[depth]] = -1
                continue
            choice[depth] = j0
            partner[i0] = j0
            partner[j0] = i0
            depth += 1
            continue
        # returning from a leaf: re-enter loop at this depth to advance
    return words[:count], total
