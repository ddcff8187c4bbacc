"""Property suites run over enumerated corpora.

Each suite returns a :class:`VerificationReport`; an empty failure list means
every check passed.  Large sweeps (all classes with up to nine edges) use the
batch numpy paths; the others go map by map through the public API and
compare against :mod:`unicellular.oracles`.
"""
from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field

import numpy as np

from . import oracles
from .canon import canonical_form, is_isomorphic, symmetry_count
from .enumeration import (collection_formula, cubic, enumerate_words,
                          rooted_count, unicellular_collections)
from .errors import MapError, PropertyFailure, UnknownSuite
from .homology import (batch_interlacement_rows, batch_ones_solvable,
                       batch_rank, genus_from_rank, is_even_partition,
                       parity_certificate)
from .maps import (UnicellularMap, batch_degrees, degree_partition, is_realizable,
                   partition_shape, partitions_with_edges)
from .structure import (bridge_elimination, bridges, is_virtual_collection,
                        perfect_matching)
from .surgery import involution_loop, is_normal_form, moves, neighborhood, surgery

BATCH = 100_000


@dataclass
class VerificationReport:
    suite: str
    checks: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0
    notes: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def fail(self, word, detail):
        self.failures.append({"word": " ".join(str(int(x)) for x in word), "detail": detail})

    def to_dict(self):
        return {"suite": self.suite, "checks": self.checks, "failures": self.failures,
                "seconds": round(self.seconds, 3), "notes": self.notes}

    def to_json(self):
        return json.dumps(self.to_dict(), indent=1)

    def summary(self):
        status = "ok" if self.ok else "FAILED"
        return "%s: %d checks, %d failures, %.2f s [%s]" % (
            self.suite, self.checks, len(self.failures), self.seconds, status)


def _corpus_maps(partitions):
    for d in partitions:
        words, _ = enumerate_words(d)
        for w in words:
            yield d, UnicellularMap(tuple(int(x) for x in w))


SMALL_GENUS_CORPUS = ((4,), (3, 3), unicellular_collections(2), cubic(2))


def _chunks(arr, size=BATCH):
    for i in range(0, len(arr), size):
        yield arr[i:i + size]


def _word_sets(max_edges, partitions):
    """``(E, words, partition)`` per edge count, or per partition when given."""
    if partitions:
        for p in partitions:
            p = degree_partition(p)
            yield partition_shape(p)[1], enumerate_words(p)[0], p
    else:
        for E in range(1, max_edges + 1):
            yield E, enumerate_words(n_edges=E)[0], None


def suite_euler(max_edges=9, partitions=None, **_):
    """Degree sums, Euler relation and coverage of every realizable partition."""
    rep = VerificationReport("euler")
    for E, words, part in _word_sets(max_edges, partitions):
        seen_partitions = set()
        for chunk in _chunks(words):
            degs = batch_degrees(chunk)
            V = (degs > 0).sum(axis=1)
            g = batch_rank(chunk) // 2
            sums = degs.sum(axis=1)
            bad_sum = np.nonzero(sums != 2 * E)[0]
            bad_euler = np.nonzero(E - V != 2 * g - 1)[0]
            rep.checks += 2 * len(chunk)
            for i in bad_sum[:20]:
                rep.fail(chunk[i], "degree sum %d != 2E = %d" % (sums[i], 2 * E))
            for i in bad_euler[:20]:
                rep.fail(chunk[i], "E - V = %d but 2g - 1 = %d" % (E - V[i], 2 * g[i] - 1))
            seen_partitions.update(r.tobytes() for r in degs.astype(np.int8))
        seen = {tuple(d for d in np.frombuffer(p, dtype=np.int8).tolist() if d)
                for p in seen_partitions}
        expected = set(partitions_with_edges(E)) if part is None else {part}
        rep.checks += 1
        if seen != expected:
            rep.fail((), "E=%d partitions realized %s, realizable %s"
                     % (E, sorted(seen - expected), sorted(expected - seen)))
        for p in seen:
            if not is_realizable(p):
                rep.fail((), "unrealizable partition %s produced" % (p,))
        label = "E=%d" % E if part is None else "degrees %s" % (part,)
        rep.notes.append("%s: %d classes over %d partitions" % (label, len(words), len(seen)))
    return rep


def suite_card_shuffle(partitions=SMALL_GENUS_CORPUS, **_):
    """Every move re-validates, keeps degrees and genus, and matches the sector swap."""
    rep = VerificationReport("card-shuffle")
    for d, m in _corpus_maps(partitions):
        reference = {(x, y): r for x, y, r in oracles.brute_surgeries(m.word)}
        for mv in moves(m):
            rep.checks += 1
            try:
                out = surgery(m, mv)
            except MapError as exc:
                rep.fail(m.word, "move %s: %s" % (mv, exc))
                continue
            if (out.n_edges, out.degrees, out.genus) != (m.n_edges, m.degrees, m.genus):
                rep.fail(m.word, "move %s changed (E, degrees, genus)" % mv)
            if oracles.corner_degrees(out.word) != m.degrees:
                rep.fail(m.word, "move %s: corner gluing disagrees" % mv)
            if reference.get((mv.a, mv.b)) != out.word:
                rep.fail(m.word, "move %s differs from the sector swap" % mv)
            if not is_normal_form(out, mv.a, mv.b):
                rep.fail(m.word, "move %s: a, b no longer intertwined" % mv)
    return rep


def suite_involution(partitions=SMALL_GENUS_CORPUS, **_):
    rep = VerificationReport("involution")
    for d, m in _corpus_maps(partitions):
        source = canonical_form(m).word
        for mv in moves(m):
            rep.checks += 1
            try:
                back = involution_loop(m, mv)
            except (MapError, PropertyFailure) as exc:
                rep.fail(m.word, "move %s: %s" % (mv, exc))
                continue
            if canonical_form(back).word != source:
                rep.fail(m.word, "move %s: loop ends in another class" % mv)
    return rep


def suite_rank_genus(max_edges=9, partitions=None, **_):
    rep = VerificationReport("rank-genus")
    small = []
    for E, words, _ in _word_sets(max_edges, partitions):
        if E <= 6:
            small.append(words)
        for chunk in _chunks(words):
            rank = batch_rank(chunk)
            V = (batch_degrees(chunk) > 0).sum(axis=1)
            genus = (E - V + 1) // 2
            rep.checks += 3 * len(chunk)
            for i in np.nonzero(rank % 2)[0][:20]:
                rep.fail(chunk[i], "odd rank %d" % rank[i])
            for i in np.nonzero(rank != 2 * genus)[0][:20]:
                rep.fail(chunk[i], "rank %d but genus %d" % (rank[i], genus[i]))
            for i in np.nonzero(V != E - rank + 1)[0][:20]:
                rep.fail(chunk[i], "V = %d but E - rank + 1 = %d" % (V[i], E - rank[i] + 1))
    # the per-map path on a smaller range
    for words in small:
        for w in words:
            m = UnicellularMap(tuple(int(x) for x in w))
            rep.checks += 1
            if genus_from_rank(m) != m.genus:
                rep.fail(m.word, "genus_from_rank disagrees with the rotation")
    return rep


def suite_petersen(partitions=((3, 3), cubic(2)), **_):
    rep = VerificationReport("petersen")
    bridged = 0
    for d, m in _corpus_maps(partitions):
        br = bridges(m)
        rep.checks += 1
        if br != oracles.brute_bridges(m):
            rep.fail(m.word, "bridges %s differ from the deletion test" % sorted(br))
        if len(br) > 2:
            bridged += 1
            continue
        rep.checks += 1
        pm = perfect_matching(m)
        if pm is None:
            rep.fail(m.word, "no perfect matching with %d bridges" % len(br))
            continue
        covered = set()
        for e in pm.edges:
            u, v = m.endpoints(e)
            if u == v or u in covered or v in covered:
                rep.fail(m.word, "matching %s is not a matching" % sorted(pm.edges))
            covered.update((u, v))
        if len(covered) != m.n_vertices:
            rep.fail(m.word, "matching %s misses vertices" % sorted(pm.edges))
    rep.notes.append("%d maps with more than two bridges skipped" % bridged)
    return rep


def suite_bridge_elim(partitions=(cubic(2),), **_):
    rep = VerificationReport("bridge-elim")
    runs = 0
    for d, m in _corpus_maps(partitions):
        initial = len(bridges(m))
        if not initial:
            continue
        runs += 1
        rep.checks += 1
        try:
            trace = bridge_elimination(m)
        except (MapError, PropertyFailure) as exc:
            rep.fail(m.word, str(exc))
            continue
        final = trace[-1].map
        if bridges(final):
            rep.fail(m.word, "final map still has bridges")
        if not is_virtual_collection(final):
            rep.fail(m.word, "final map has no perfect matching")
        if len(trace) > initial:
            rep.fail(m.word, "%d steps for %d bridges" % (len(trace), initial))
        for step in trace:
            if step.bridge in bridges(step.map):
                rep.fail(m.word, "bridge %d survived its step" % step.bridge)
            if not step.monotone:
                rep.notes.append("non-decreasing bridge count %d -> %d on %s"
                                 % (step.bridges_before, step.bridges_after,
                                    " ".join(map(str, m.word))))
            elif step.bridges_after != step.bridges_before - 1:
                rep.notes.append("bridge count dropped by %d on %s"
                                 % (step.bridges_before - step.bridges_after,
                                    " ".join(map(str, m.word))))
    rep.notes.append("%d bridged maps processed" % runs)
    return rep


def suite_even_invariant(max_edges=8, partitions=None, **_):
    rep = VerificationReport("even-invariant")
    certified = 0
    for E, words, _ in _word_sets(max_edges, partitions):
        for chunk in _chunks(words):
            degs = batch_degrees(chunk)
            even = ((degs % 2) == 0).all(axis=1)
            sub = chunk[even]
            if not len(sub):
                continue
            rows = batch_interlacement_rows(sub)
            solvable = batch_ones_solvable(sub)
            rep.checks += 2 * len(sub)
            for i in np.nonzero((rows == 0).any(axis=1))[0][:20]:
                rep.fail(sub[i], "zero interlacement row")
            for i in np.nonzero(~solvable)[0][:20]:
                rep.fail(sub[i], "A u = 1 not solvable")
            for w in sub:
                m = UnicellularMap(tuple(int(x) for x in w))
                try:
                    parity_certificate(m)
                    certified += 1
                except (MapError, PropertyFailure) as exc:
                    rep.fail(m.word, str(exc))
    rep.notes.append("%d certificates issued" % certified)
    return rep


def suite_oracle_small(max_edges=5, partitions=None, **_):
    rep = VerificationReport("oracle-small")
    for E, words, part in _word_sets(max_edges, partitions):
        if E > 6:
            rep.notes.append("E=%d skipped: too large for the brute-force oracle" % E)
            continue
        fast = [tuple(int(x) for x in w) for w in words]
        if part is None:
            naive = oracles.naive_classes(E)
            rep.checks += 1
            if len(fast) != len(naive):
                rep.fail((), "E=%d: %d classes vs %d by brute force" % (E, len(fast), len(naive)))
            naive_canon = sorted(canonical_form(w).word for w in naive)
            if naive_canon != sorted(fast):
                rep.fail((), "E=%d: class sets differ" % E)
        for p in (partitions_with_edges(E) if part is None else [part]):
            rep.checks += 1
            got = [tuple(int(x) for x in w) for w in enumerate_words(p)[0]]
            want = sorted(canonical_form(w).word for w in oracles.naive_classes(E, p))
            if sorted(got) != want:
                rep.fail((), "partition %s: enumeration differs from brute force" % (p,))
        for w in fast:
            m = UnicellularMap(w)
            rep.checks += 3
            if oracles.corner_degrees(w) != m.degrees:
                rep.fail(w, "rotation orbits disagree with corner gluing")
            if symmetry_count(m) != oracles.brute_automorphisms(w):
                rep.fail(w, "symmetry count disagrees with brute force")
            nb = neighborhood(m)
            got = {c.word for c in nb.neighbors}
            results = [canonical_form(r).word for _, _, r in oracles.brute_surgeries(w)]
            want = {r for r in results if r != nb.source.word}
            if got != want:
                rep.fail(w, "neighbors disagree with the pair scan")
            if nb.self_loops != sum(r == nb.source.word for r in results) // 2:
                rep.fail(w, "self-loop count disagrees with the pair scan")
    # isomorphism on every pair of words up to length 8
    for E in range(1, 0 if partitions else min(max_edges, 4) + 1):
        words = list(oracles.all_pairings(E))
        for u, v in itertools.combinations_with_replacement(words, 2):
            rep.checks += 1
            if is_isomorphic(u, v) != oracles.brute_isomorphic(u, v):
                rep.fail(u, "is_isomorphic disagrees on %s" % (v,))
    return rep


SUITES = {
    "euler": suite_euler,
    "card-shuffle": suite_card_shuffle,
    "involution": suite_involution,
    "rank-genus": suite_rank_genus,
    "petersen": suite_petersen,
    "bridge-elim": suite_bridge_elim,
    "even-invariant": suite_even_invariant,
    "oracle-small": suite_oracle_small,
}


def run_suite(name, **kwargs):
    """Run one suite; ``kwargs`` may override ``partitions`` or ``max_edges``."""
    try:
        fn = SUITES[name]
    except KeyError:
        raise UnknownSuite("unknown suite %r; choose from %s" % (name, ", ".join(SUITES))) from None
    start = time.monotonic()
    rep = fn(**kwargs)
    rep.seconds = time.monotonic() - start
    return rep


def counting_report(genera=(1, 2)):
    """Class and rooted counts of (4, ..., 4) partitions next to the asymptotic formula."""
    rows = []
    for g in genera:
        d = unicellular_collections(g)
        words, _ = enumerate_words(d)
        rows.append({"genus": g, "degrees": list(d), "classes": len(words),
                     "rooted": rooted_count(d), "formula": collection_formula(g)})
    return rows
