"""Independent q-commutation oracle in the quasi-polynomial algebra.

To each position ``n`` of the fixed word we attach the positive root
``gamma_n = prefix(n-1)(alpha_{i_n})``; the set of these is exactly the
inversion set of the full word's element.  The associated quasi-polynomial
algebra has one generator ``z_n`` per position with the single relation
``z_a z_b = q^{-(gamma_a, gamma_b)} z_b z_a`` for ``a < b`` (all lower-order
corrections dropped).  Monomials in the ``z_n`` therefore q-commute with an
exponent given by a signed sum of root pairings, and that exponent is what
this module computes.

A quantized minor labelled by two occurrence weights of one letter has a
distinguished leading monomial ("diagonal"): the product of the ``z`` at
that letter's occurrences between the two endpoints.  Commutation exponents
of q-commuting minors can be read off from their diagonals, which makes
this module a second, independent route to every exponent produced by the
weight formula in :mod:`qschub.seeds`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import InputError
from .positions import PositionTable
from .rootdata import pairing


@dataclass(frozen=True)
class ZMonomial:
    """Laurent monomial in the position generators.

    ``exponents`` maps 1-based word positions to integer exponents (finitely
    supported, zeros dropped); ``normalization`` is the q-exponent that makes
    the monomial reversal-symmetric.  The normalization never enters
    commutation exponents.
    """

    exponents: tuple[tuple[int, int], ...]
    normalization: Fraction = Fraction(0)

    @staticmethod
    def from_dict(d: dict[int, int], normalization=Fraction(0)) -> "ZMonomial":
        return ZMonomial(
            tuple(sorted((n, e) for n, e in d.items() if e)), normalization
        )

    def as_dict(self) -> dict[int, int]:
        return dict(self.exponents)


def gamma_sequence(table: PositionTable) -> tuple:
    """Roots attached to the word positions: prefix(n-1) applied to the
    n-th letter's simple root."""
    cached = table._wt_cache.get("gamma")
    if cached is not None:
        return cached
    datum = table.datum
    out = []
    for n, s in enumerate(table.word, start=1):
        root = table.prefixes[n - 1].action
        out.append(linalg.mat_vec(root, datum.simple_roots[s - 1]))
    out = tuple(out)
    table._wt_cache["gamma"] = out
    return out


def gamma_pairing(table: PositionTable, a: int, b: int) -> Fraction:
    """(gamma_a, gamma_b), cached per table."""
    cache = table._wt_cache.setdefault("gamma_pairing", {})
    key = (a, b) if a <= b else (b, a)
    got = cache.get(key)
    if got is None:
        gammas = gamma_sequence(table)
        got = pairing(gammas[key[0] - 1], gammas[key[1] - 1], table.datum)
        cache[key] = got
    return got


def z_commutation_exponent(m1: ZMonomial, m2: ZMonomial, table: PositionTable) -> Fraction:
    """Exponent G with m1 * m2 = q^G * m2 * m1 in the quasi-polynomial
    algebra.  Positions shared by both monomials contribute nothing."""
    total = Fraction(0)
    for a, e1 in m1.exponents:
        for b, e2 in m2.exponents:
            if a == b:
                continue
            p = gamma_pairing(table, a, b)
            total += (-p if a < b else p) * e1 * e2
    return total


def diagonal(label, table: PositionTable) -> ZMonomial:
    """Leading monomial of a minor labelled by occurrence endpoints.

    For the minor of letter ``s`` between occurrences ``i < j`` this is the
    product of the generators at that letter's occurrences ``i+1 .. j``.
    The normalization exponent ``alpha`` is fixed by requiring the reversed
    product to equal ``q^{2 alpha}`` times the ascending one.
    """
    s, i, j = label.s, label.i, label.j
    if not 0 <= i <= j <= table.total[s]:
        raise InputError(f"occurrence endpoints ({i},{j}) invalid for letter {s}")
    positions = [table.n_of(s, t) for t in range(i + 1, j + 1)]
    alpha = Fraction(0)
    for x in range(len(positions)):
        for y in range(x + 1, len(positions)):
            alpha += gamma_pairing(table, positions[x], positions[y])
    return ZMonomial.from_dict({n: 1 for n in positions}, alpha / 2)


def oracle_exponent(l1, l2, table: PositionTable) -> Fraction:
    """Commutation exponent of two minors, computed through their diagonals.

    Valid as the true q-commutation exponent whenever the two minors
    q-commute at all; certification of that fact lives elsewhere.
    """
    cache = table._wt_cache.setdefault("oracle", {})
    key = (l1.s, l1.i, l1.j, l2.s, l2.i, l2.j)
    got = cache.get(key)
    if got is None:
        got = z_commutation_exponent(diagonal(l1, table), diagonal(l2, table), table)
        cache[key] = got
    return got
