"""Bookkeeping for one fixed reduced word of the maximal coset representative.

A :class:`PositionTable` pins a parabolic together with one reduced word
``(i_1, ..., i_M)`` for the longest minimal coset representative.  Word
positions are matched with (letter, occurrence) pairs: position ``n``
corresponds to ``(s, t)`` where ``s = i_n`` and ``t`` counts how many times
``s`` appears among the first ``n`` letters.  ``prefix(m)`` is the group
element of the first ``m`` letters, and ``occ_prefix(s, t)`` the prefix
through the t-th occurrence of ``s`` (the identity for ``t = 0``).

Strings are handled simply as prefix lengths ``0 <= m <= M``; the prefix
order refines the weak left order of the corresponding elements.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import weyl
from .errors import ConstructionError, InputError
from .rootdata import RootDatum, Weight, build_root_datum


@dataclass(frozen=True)
class IndexSet:
    """Letter/occurrence positions cut out by two prefix bounds.

    kind "d":  lo_s <  j <= hi_s      kind "dR": lo_s < j < hi_s
    kind "u":  lo_s <= j <  hi_s      kind "uL": lo_s < j < hi_s
    """

    kind: str
    lo: int
    hi: int
    entries: tuple[tuple[int, int], ...]


class PositionTable:
    def __init__(self, datum: RootDatum, levi: frozenset[int], word: tuple[int, ...]):
        self.datum = datum
        self.levi = frozenset(levi)
        self.word = tuple(word)
        self.M = len(self.word)
        prefixes = [weyl.identity(datum)]
        for i in self.word:
            prev = prefixes[-1]
            prefixes.append(weyl.compose(datum, prev, (i,)))
        self.prefixes = tuple(prefixes)
        if self.prefixes[-1].length != self.M:
            raise InputError("word is not reduced")
        # position n (1-based) <-> (letter, occurrence)
        counts = [0] * (datum.rank + 1)
        pos = [None]
        n_of = {}
        for n, s in enumerate(self.word, start=1):
            counts[s] += 1
            pos.append((s, counts[s]))
            n_of[(s, counts[s])] = n
        self.position = tuple(pos)
        self._n_of = n_of
        self.total = tuple(counts)  # total[s] = multiplicity of s in the word
        occ_rows = [tuple([0] * (datum.rank + 1))]
        running = [0] * (datum.rank + 1)
        for s in self.word:
            running[s] += 1
            occ_rows.append(tuple(running))
        self._occ = tuple(occ_rows)
        self.letters = tuple(s for s in range(1, datum.rank + 1) if self.total[s])
        self._wt_cache: dict = {}
        self._p_cache: dict = {}
        # occurrence weights, used to resolve weight pairs back to labels
        self._occ_weight_index = {
            s: {self.occ_weight(s, t, s): t for t in range(self.total[s] + 1)}
            for s in range(1, datum.rank + 1)
        }

    # -- basic queries -------------------------------------------------

    def occ(self, m: int, s: int) -> int:
        """Occurrences of letter s among the first m letters."""
        return self._occ[m][s]

    def n_of(self, s: int, t: int) -> int:
        """Word position of the t-th occurrence of s (0 for t = 0)."""
        if t == 0:
            return 0
        n = self._n_of.get((s, t))
        if n is None:
            raise InputError(f"letter {s} has no occurrence {t}")
        return n

    def prefix(self, m: int) -> weyl.WeylElt:
        return self.prefixes[m]

    def occ_prefix(self, s: int, t: int) -> weyl.WeylElt:
        return self.prefixes[self.n_of(s, t)]

    def prefix_weight(self, m: int, k: int) -> Weight:
        """prefix(m) applied to Lambda_k, cached."""
        key = (m, k)
        got = self._wt_cache.get(key)
        if got is None:
            got = weyl.act(self.prefixes[m], self.datum.fundamental_weight(k))
            self._wt_cache[key] = got
        return got

    def occ_weight(self, s: int, t: int, k: int) -> Weight:
        """Prefix through the t-th occurrence of s, applied to Lambda_k."""
        return self.prefix_weight(self.n_of(s, t), k)

    def occurrence_of_weight(self, s: int, xi: Weight) -> int:
        """Inverse of t -> occ_weight(s, t, s); the weights are distinct."""
        t = self._occ_weight_index[s].get(xi)
        if t is None:
            raise ConstructionError(
                f"weight {xi} is not an occurrence weight of letter {s}"
            )
        return t

    # -- the p index ---------------------------------------------------

    def p_index(self, a: int, j: int, k: int) -> int:
        """Largest p with occ_weight(k, p, k) == occ_weight(a, j, k).

        Scans downward from the letter multiplicity; the occurrence weights
        of a fixed letter are pairwise distinct, so the match found by the
        scan is unique.  It always exists (the occurrence count of k in the
        prefix through position (a, j) realizes the equality).
        """
        key = (a, j, k)
        got = self._p_cache.get(key)
        if got is not None:
            return got
        target = self.occ_weight(a, j, k)
        for p in range(self.total[k], -1, -1):
            if self.occ_weight(k, p, k) == target:
                self._p_cache[key] = p
                return p
        raise ConstructionError(f"no occurrence of {k} matches position ({a},{j})")

    # -- index sets ----------------------------------------------------

    def index_set(self, kind: str, lo: int, hi: int) -> IndexSet:
        if not 0 <= lo <= hi <= self.M:
            raise InputError(f"prefix bounds out of order: {lo}, {hi}")
        entries = []
        for a in range(1, self.datum.rank + 1):
            a_lo, a_hi = self.occ(lo, a), self.occ(hi, a)
            if kind == "d":
                rng = range(a_lo + 1, a_hi + 1)
            elif kind == "dR":
                rng = range(a_lo + 1, a_hi)
            elif kind == "u":
                rng = range(a_lo, a_hi)
            elif kind == "uL":
                rng = range(a_lo + 1, a_hi)
            else:
                raise InputError(f"unknown index-set kind {kind!r}")
            entries.extend((a, j) for j in rng)
        return IndexSet(kind, lo, hi, tuple(sorted(entries)))

    def single_bound_alias(self, kind: str, m: int) -> IndexSet:
        """The one-argument shorthands: d-kind runs up to the full word,
        and the u-shorthand is the d-kind set over (0, m)."""
        if kind == "d":
            return self.index_set("d", m, self.M)
        if kind == "u":
            return self.index_set("d", 0, m)
        raise InputError(f"unknown alias kind {kind!r}")

    def position_set(self, m: int) -> tuple[tuple[int, int], ...]:
        """All (letter, occurrence) pairs of the prefix, occurrence 0 included."""
        return tuple(
            (s, t)
            for s in range(1, self.datum.rank + 1)
            for t in range(self.occ(m, s) + 1)
        )

    def __repr__(self):
        return (
            f"PositionTable({self.datum.lie_type}{self.datum.rank}, "
            f"levi={sorted(self.levi)}, word={self.word})"
        )


def fix_word(
    lie_type: str,
    rank: int,
    levi,
    word=None,
) -> PositionTable:
    """Fix a reduced word for the maximal minimal-coset representative.

    With no explicit word the lexicographically least reduced word is used,
    so output is deterministic.  An explicit word must be reduced and must
    evaluate to the maximal representative.
    """
    datum = build_root_datum(lie_type, rank)
    levi = frozenset(levi)
    if not levi <= set(range(1, rank + 1)):
        raise InputError(f"levi {sorted(levi)} not a subset of 1..{rank}")
    if levi == set(range(1, rank + 1)):
        raise InputError("levi must be a proper subset (nilradical nonempty)")
    wp = weyl.max_parabolic_rep(datum, levi)
    if word is None:
        word = wp.word  # canonical words are lexicographically least
    else:
        word = tuple(int(i) for i in word)
        cand = weyl.from_word(datum, word)
        if cand != wp:
            raise InputError("word does not evaluate to the maximal representative")
        if len(word) != wp.length:
            raise InputError("word is not reduced")
    table = PositionTable(datum, levi, word)
    if table.prefixes[-1] != wp:
        raise ConstructionError("fixed word does not reach the maximal representative")
    return table
