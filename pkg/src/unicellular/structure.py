"""Underlying-graph analysis: bridges, perfect matchings, bridge elimination."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (BridgeNotResolved, NoIntertwinedOrientation, NotCubic,
                     PropertyFailure)
from .maps import as_map
from .surgery import is_intertwined, normal_form, surgery


@dataclass(frozen=True)
class UnderlyingGraph:
    """Abstract multigraph of a map; ``edges[e-1] = (u, v)`` for edge ``e``."""

    n_vertices: int
    edges: tuple

    def incident(self, v):
        return [e for e, (a, b) in enumerate(self.edges, 1) if v in (a, b)]

    def degree_sequence(self):
        deg = [0] * self.n_vertices
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return tuple(sorted(deg, reverse=True))

    def component_of(self, v, removed=None):
        adj = [[] for _ in range(self.n_vertices)]
        for e, (a, b) in enumerate(self.edges, 1):
            if e != removed:
                adj[a].append(b)
                adj[b].append(a)
        seen = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen


def underlying_graph(m):
    m = as_map(m)
    return UnderlyingGraph(m.n_vertices,
                           tuple(m.endpoints(e) for e in range(1, m.n_edges + 1)))


def bridges(m):
    """Edges whose removal disconnects the underlying graph (low-link search)."""
    G = underlying_graph(m)
    adj = [[] for _ in range(G.n_vertices)]
    for e, (a, b) in enumerate(G.edges, 1):
        if a != b:
            adj[a].append((b, e))
            adj[b].append((a, e))
    disc = [-1] * G.n_vertices
    low = [0] * G.n_vertices
    found = set()
    clock = 0
    for root in range(G.n_vertices):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = clock
        clock += 1
        # frames: (vertex, edge used to enter, iterator position)
        stack = [(root, 0, 0)]
        while stack:
            u, via, i = stack[-1]
            if i < len(adj[u]):
                stack[-1] = (u, via, i + 1)
                w, e = adj[u][i]
                if e == via:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, e, 0))
                else:
                    low[u] = min(low[u], disc[w])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if low[u] > disc[p]:
                        found.add(via)
    return frozenset(found)


def is_cubic(m):
    return all(d == 3 for d in as_map(m).degrees)


@dataclass(frozen=True)
class Matching:
    edges: frozenset
    perfect: bool = True


def _verify_matching(G, edges):
    covered = set()
    for e in edges:
        a, b = G.edges[e - 1]
        if a == b or a in covered or b in covered:
            return False
        covered.update((a, b))
    return len(covered) == G.n_vertices


def perfect_matching(m):
    """First perfect matching found by backtracking, or ``None``.

    Vertices are covered in index order, each trying its incident non-loop
    edges by increasing edge id.  An odd vertex count returns ``None`` at once.
    """
    G = underlying_graph(m)
    n = G.n_vertices
    if n % 2:
        return None
    adj = [[] for _ in range(n)]
    for e, (a, b) in enumerate(G.edges, 1):
        if a != b:
            adj[a].append((e, b))
            adj[b].append((e, a))
    matched = [False] * n
    chosen = []

    def rec(v):
        while v < n and matched[v]:
            v += 1
        if v == n:
            return True
        matched[v] = True
        for e, w in adj[v]:
            if not matched[w]:
                matched[w] = True
                chosen.append(e)
                if rec(v + 1):
                    return True
                chosen.pop()
                matched[w] = False
        matched[v] = False
        return False

    if not rec(0):
        return None
    result = frozenset(chosen)
    if not _verify_matching(G, result):
        raise PropertyFailure("matching search returned an invalid matching", word=as_map(m).word)
    return Matching(result)


def is_virtual_collection(m):
    m = as_map(m)
    if not is_cubic(m):
        raise NotCubic("degrees %s are not all 3" % (m.degrees,))
    return perfect_matching(m) is not None


@dataclass(frozen=True)
class EliminationStep:
    bridge: int
    move: object
    map: object
    bridges_before: int
    bridges_after: int

    @property
    def monotone(self):
        return self.bridges_after < self.bridges_before


def _resolving_move(m, e):
    """Smallest orientation pair across bridge ``e`` whose surgery removes it."""
    G = underlying_graph(m)
    u, v = G.edges[e - 1]
    side_u = G.component_of(u, removed=e)
    firsts = sorted(f for f in G.incident(u) if f != e)
    seconds = sorted(f for f in G.incident(v) if f != e)
    tried = False
    for e1 in firsts:
        for e2 in seconds:
            for x in (e1, -e1):
                for y in (e2, -e2):
                    if not is_intertwined(m, x, y):
                        continue
                    tried = True
                    move = normal_form(m, x, y)
                    out = surgery(m, move)
                    if e not in bridges(out):
                        return move, out
    if not tried:
        raise NoIntertwinedOrientation(
            "no orientation of an edge at %d (side %s) is intertwined with one at %d"
            % (u, sorted(side_u), v), word=m.word)
    raise BridgeNotResolved("no intertwined pair across bridge %d removes it" % e, word=m.word)


def bridge_elimination(m, max_steps=None):
    """Remove bridges of a cubic map one surgery at a time.

    At each step the smallest bridge ``e`` is taken; among edges ``e1`` at one
    end and ``e2`` at the other, the lexicographically first intertwined
    orientation pair whose surgery leaves ``e`` bridgeless is applied.  The
    trace is returned; exceeding ``max_steps`` (default: the initial bridge
    count) raises :class:`PropertyFailure`.
    """
    m = as_map(m)
    if not is_cubic(m):
        raise NotCubic("degrees %s are not all 3" % (m.degrees,))
    current = bridges(m)
    if max_steps is None:
        max_steps = len(current)
    trace = []
    while current:
        if len(trace) >= max_steps:
            raise PropertyFailure("bridge elimination did not finish within %d steps" % max_steps,
                                  word=m.word)
        e = min(current)
        move, out = _resolving_move(m, e)
        after = bridges(out)
        trace.append(EliminationStep(e, move, out, len(current), len(after)))
        m, current = out, after
    return trace
