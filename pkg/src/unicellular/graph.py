"""The combinatorial surgery graph over canonical classes.

Nodes are canonical classes, indexed in canonical order; two nodes are
adjacent when one surgery takes a map of the first class into the second.
The graph is simple: repeated surgeries between two classes give one edge and
surgeries returning to the same class are kept as a per-node count.
"""
from __future__ import annotations

import json
import math
import time
from collections import deque
from dataclasses import dataclass, field

from .canon import canonical_form
from .enumeration import EnumerationSpec, enumerate_maps
from .errors import CapExceeded, PartialGraph
from .maps import as_map
from .surgery import neighborhood

DEFAULT_MAX_NODES = 10 ** 6
EXACT_DIAMETER_LIMIT = 10 ** 5


@dataclass
class SurgeryGraph:
    nodes: list
    adjacency: list
    self_loops: list
    provenance: str
    partial: bool = False
    index: dict = field(default_factory=dict, repr=False)

    def __len__(self):
        return len(self.nodes)

    @property
    def n_edges(self):
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self):
        return sorted((i, j) for i, nb in enumerate(self.adjacency) for j in nb if i < j)

    def degree(self, i):
        return len(self.adjacency[i])

    def find(self, m):
        """Index of the class of ``m``, or ``None``."""
        return self.index.get(canonical_form(as_map(m)).word)

    def to_json_dict(self):
        return {
            "nodes": [{"id": i, "word": str(c), "degrees": list(c.degrees), "genus": c.genus}
                      for i, c in enumerate(self.nodes)],
            "edges": [list(e) for e in self.edges()],
        }

    def to_json(self):
        return json.dumps(self.to_json_dict(), indent=1)

    def to_dot(self):
        lines = ["graph K {"]
        for i, c in enumerate(self.nodes):
            lines.append('  n%d [label="%s"];' % (i, c))
        for i, j in self.edges():
            lines.append("  n%d -- n%d;" % (i, j))
        lines.append("}")
        return "\n".join(lines) + "\n"


def _finish(classes, adj_words, loops, provenance, partial):
    order = sorted(classes, key=lambda c: c.key)
    index = {c.word: i for i, c in enumerate(order)}
    adjacency = []
    self_loops = []
    for c in order:
        nb = sorted({index[w] for w in adj_words.get(c.word, ()) if w in index})
        adjacency.append(nb)
        self_loops.append(loops.get(c.word, 0))
    return SurgeryGraph(order, adjacency, self_loops, provenance, partial, index)


def _check_symmetric(g):
    for i, nb in enumerate(g.adjacency):
        for j in nb:
            if i not in g.adjacency[j]:
                raise AssertionError("surgery graph is not symmetric at (%d, %d)" % (i, j))


def build_graph(spec=None, seeds=None, max_nodes=DEFAULT_MAX_NODES, max_seconds=None,
                strict=True):
    """Build the surgery graph of a degree partition, or the closure of ``seeds``.

    In full mode the node set is the enumeration of ``spec``; in seed mode it
    is the breadth-first closure of the seeds.  When a cap is reached a
    :class:`CapExceeded` is raised with the partial graph attached, unless
    ``strict`` is false, in which case the partial graph is returned.
    """
    start = time.monotonic()
    classes = []
    adj_words = {}
    loops = {}
    partial = False

    def timed_out():
        return max_seconds is not None and time.monotonic() - start > max_seconds

    if spec is not None:
        if not isinstance(spec, EnumerationSpec):
            spec = EnumerationSpec(tuple(spec))
        provenance = "full:%s" % ",".join(map(str, spec.degrees))
        for c in enumerate_maps(spec):
            if len(classes) >= max_nodes or timed_out():
                partial = True
                break
            classes.append(c)
        if not partial:
            for c in classes:
                if timed_out():
                    partial = True
                    break
                nb = neighborhood(c.map)
                adj_words[c.word] = {d.word for d in nb.neighbors}
                loops[c.word] = nb.self_loops
    else:
        provenance = "seeds"
        seen = {}
        queue = deque()
        for s in seeds or ():
            c = canonical_form(as_map(s))
            if c.word not in seen:
                seen[c.word] = c
                queue.append(c)
        while queue:
            if timed_out():
                partial = True
                break
            c = queue.popleft()
            nb = neighborhood(c.map)
            adj_words[c.word] = {d.word for d in nb.neighbors}
            loops[c.word] = nb.self_loops
            for d in nb.neighbors:
                if d.word not in seen:
                    if len(seen) >= max_nodes:
                        partial = True
                        break
                    seen[d.word] = d
                    queue.append(d)
            if partial:
                break
        classes = list(seen.values())
        if partial:
            # unexpanded nodes have unknown neighborhoods; keep only known edges
            for c in classes:
                adj_words.setdefault(c.word, set())
            for w, nb in list(adj_words.items()):
                for v in nb:
                    if v in adj_words:
                        adj_words[v].add(w)
    g = _finish(classes, adj_words, loops, provenance, partial)
    if not partial:
        _check_symmetric(g)
    if partial and strict:
        raise CapExceeded("graph construction stopped at %d nodes" % len(g), partial=g)
    return g


def _require_complete(g):
    if g.partial:
        raise PartialGraph("graph is partial; connectivity is undetermined")


def components(g):
    """Connected components as sorted index lists, ordered by smallest member."""
    _require_complete(g)
    parent = list(range(len(g)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, nb in enumerate(g.adjacency):
        for j in nb:
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    groups = {}
    for i in range(len(g)):
        groups.setdefault(find(i), []).append(i)
    return [groups[k] for k in sorted(groups)]


def is_connected(g):
    return len(components(g)) <= 1


def bfs_distances(g, source):
    dist = [-1] * len(g)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def eccentricity(g, source):
    dist = bfs_distances(g, source)
    if min(dist) < 0:
        return math.inf
    return max(dist)


@dataclass(frozen=True)
class Diameter:
    value: float
    exact: bool = True

    def __int__(self):
        return int(self.value)


def diameter(g, sample=None):
    """Largest eccentricity; ``math.inf`` if disconnected.

    Above ``EXACT_DIAMETER_LIMIT`` nodes only ``sample`` sources (default 64,
    evenly spaced) are used and the result is a lower bound.
    """
    _require_complete(g)
    n = len(g)
    if n == 0:
        return Diameter(0)
    if n > 1 and not is_connected(g):
        return Diameter(math.inf)
    if n <= EXACT_DIAMETER_LIMIT and sample is None:
        return Diameter(max(eccentricity(g, s) for s in range(n)))
    k = min(n, sample or 64)
    sources = sorted({(i * n) // k for i in range(k)})
    return Diameter(max(eccentricity(g, s) for s in sources), exact=False)


def isolated_nodes(g):
    _require_complete(g)
    return [i for i in range(len(g)) if not g.adjacency[i]]
