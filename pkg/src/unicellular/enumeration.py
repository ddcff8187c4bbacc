"""Exhaustive generation of unicellular map classes.

Classes are produced as canonical words in increasing canonical order.  The
search runs in a compiled kernel (:mod:`unicellular._kernel`); this module
wraps it with degree-partition handling, caps, resumable cursors and an
optional process pool.

Cursor files are JSON objects::

    {"version": 1, "n_edges": 9, "degrees": [3, 3, 3, 3, 3, 3],
     "prefix": [1], "stack": [1, 2, ...], "emitted": 120, "done": false}

``prefix`` is the fixed start of the subtree being searched and ``stack`` the
DFS path at the last emitted word (empty before the first emission).
"""
from __future__ import annotations

import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _kernel
from .canon import CanonicalClass
from .errors import CapExceeded, Unrealizable
from .maps import degree_partition, partition_shape

CHUNK = 4096


@dataclass(frozen=True)
class EnumerationSpec:
    degrees: tuple
    max_classes: int | None = None
    max_seconds: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "degrees", degree_partition(self.degrees))
        partition_shape(self.degrees)

    @property
    def shape(self):
        """``(V, E, g)``."""
        return partition_shape(self.degrees)


def _degree_counts(degrees):
    if degrees is None:
        return np.zeros(1, dtype=np.int64), False
    cnt = np.zeros(max(degrees) + 1, dtype=np.int64)
    for d in degrees:
        cnt[d] += 1
    return cnt, True


def _edges_for(degrees, n_edges):
    if degrees is not None:
        _, E, _ = partition_shape(degrees)
        if n_edges is not None and n_edges != E:
            raise Unrealizable("degrees %s need %d edges, not %d" % (degrees, E, n_edges))
        return E
    if n_edges is None or n_edges < 1:
        raise Unrealizable("give a degree partition or a positive edge count")
    return n_edges


@dataclass
class EnumerationCursor:
    n_edges: int
    degrees: tuple | None
    prefix: list = field(default_factory=lambda: [1])
    stack: list = field(default_factory=list)
    emitted: int = 0
    done: bool = False

    def to_json(self):
        return json.dumps({"version": 1, "n_edges": self.n_edges,
                           "degrees": list(self.degrees) if self.degrees else None,
                           "prefix": list(self.prefix), "stack": list(self.stack),
                           "emitted": self.emitted, "done": self.done})

    @classmethod
    def from_json(cls, text):
        d = json.loads(text)
        if d.get("version") != 1:
            raise ValueError("unsupported cursor version %r" % d.get("version"))
        degrees = tuple(d["degrees"]) if d.get("degrees") else None
        return cls(int(d["n_edges"]), degrees, list(d["prefix"]), list(d["stack"]),
                   int(d["emitted"]), bool(d["done"]))


def _run(E, degrees, path, floor, resume, max_out):
    cnt, use_deg = _degree_counts(degrees)
    arr = np.zeros(2 * E, dtype=np.int64)
    arr[:len(path)] = path
    words, syms, count, out_path, out_len, done, ok = _kernel.enumerate_kernel(
        E, cnt, use_deg, arr, len(path), floor, resume, max_out)
    return words, syms, [int(x) for x in out_path[:out_len]], bool(done), bool(ok)


def enumerate_chunk(cursor, max_out=CHUNK):
    """Advance ``cursor`` by at most ``max_out`` classes; returns ``(words, syms)``."""
    if cursor.done:
        return np.zeros((0, 2 * cursor.n_edges), dtype=np.int8), np.zeros(0, dtype=np.int64)
    if cursor.stack:
        path, resume = cursor.stack, True
    else:
        path, resume = cursor.prefix, False
    words, syms, out_path, done, ok = _run(cursor.n_edges, cursor.degrees, path,
                                           len(cursor.prefix), resume, max_out)
    if not ok:
        cursor.done = True
        return words, syms
    cursor.emitted += len(words)
    cursor.done = done
    if not done:
        cursor.stack = out_path
    return words, syms


def _task_prefixes(E, depth):
    """Feasible letter prefixes of the given length, in canonical order."""
    out = []

    def rec(prefix, opened, open_set):
        if len(prefix) == depth:
            out.append(list(prefix))
            return
        for j in sorted(open_set):
            rec(prefix + [-j], opened, open_set - {j})
        if opened < E:
            rec(prefix + [opened + 1], opened + 1, open_set | {opened + 1})

    rec([1], 1, frozenset({1}))
    return out


def _run_task(args):
    E, degrees, prefix = args
    words, syms, _, _, _ = _run(E, degrees, prefix, len(prefix), False, 0)
    return words, syms


def enumerate_words(degrees=None, n_edges=None, workers=1):
    """All canonical words as ``(words, symmetry_counts)`` arrays.

    ``degrees`` restricts to one degree partition; otherwise every class with
    ``n_edges`` edges is produced.  With ``workers > 1`` the search tree is
    cut at a fixed depth and subtrees are searched in separate processes;
    results are concatenated in prefix order, which is the canonical order,
    so the output does not depend on ``workers``.
    """
    if degrees is not None:
        degrees = degree_partition(degrees)
    E = _edges_for(degrees, n_edges)
    if workers <= 1 or E < 4:
        words, syms, _, _, _ = _run(E, degrees, [1], 1, False, 0)
        return words, syms
    tasks = [(E, degrees, p) for p in _task_prefixes(E, min(4, 2 * E - 1))]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_run_task, tasks))
    words = np.concatenate([p[0] for p in parts]) if parts else np.zeros((0, 2 * E), np.int8)
    syms = np.concatenate([p[1] for p in parts]) if parts else np.zeros(0, np.int64)
    return words, syms


def enumerate_maps(spec, cursor=None):
    """Stream :class:`CanonicalClass` objects for ``spec`` in canonical order.

    ``spec`` is an :class:`EnumerationSpec` or a degree sequence.  When a cap
    is hit, :class:`CapExceeded` is raised after the last permitted class;
    its ``partial`` attribute holds the cursor to resume from.
    """
    if not isinstance(spec, EnumerationSpec):
        spec = EnumerationSpec(tuple(spec))
    _, E, _ = spec.shape
    if cursor is None:
        cursor = EnumerationCursor(E, spec.degrees)
    start = time.monotonic()
    emitted = 0
    while not cursor.done:
        budget = CHUNK
        if spec.max_classes is not None:
            budget = min(budget, spec.max_classes - emitted)
            if budget <= 0:
                raise CapExceeded("stopped after %d classes" % emitted, partial=cursor)
        words, syms = enumerate_chunk(cursor, budget)
        for w, s in zip(words, syms):
            yield CanonicalClass(tuple(int(x) for x in w), int(s))
        emitted += len(words)
        if spec.max_seconds is not None and not cursor.done \
                and time.monotonic() - start > spec.max_seconds:
            raise CapExceeded("stopped after %.1f s" % spec.max_seconds, partial=cursor)


def count_maps(spec):
    if not isinstance(spec, EnumerationSpec):
        spec = EnumerationSpec(tuple(spec))
    if spec.max_classes is None and spec.max_seconds is None:
        return len(enumerate_words(spec.degrees)[0])
    return sum(1 for _ in enumerate_maps(spec))


def rooted_count(degrees=None, n_edges=None):
    """Number of rooted maps: each class counts ``2E / symmetry``."""
    words, syms = enumerate_words(degrees, n_edges)
    n = words.shape[1]
    return int(sum(n // int(s) for s in syms))


def collection_formula(g):
    """(4g-2)! / (2^(2g-1) g!), the leading-order count of one-vertex 4-regular collections."""
    return math.factorial(4 * g - 2) // (2 ** (2 * g - 1) * math.factorial(g))


def unicellular_collections(g):
    """Degree partition (4, ..., 4) with 2g - 1 parts."""
    return (4,) * (2 * g - 1)


def cubic(g):
    """Degree partition (3, ..., 3) with 4g - 2 parts."""
    return (3,) * (4 * g - 2)
