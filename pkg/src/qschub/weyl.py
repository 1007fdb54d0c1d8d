"""Weyl group elements on the weight lattice, reduced words, and orders.

An element is identified by its integer action matrix on fundamental-weight
coordinates; the stored word is a witness, always the lexicographically
least reduced word (obtained by peeling smallest left descents).  The word
``(i_1, ..., i_k)`` denotes ``sigma_{i_1} o ... o sigma_{i_k}`` with the
rightmost factor acting first, so prefixes of a word are left factors and
appending a letter multiplies on the right.

``Phi(w)`` below is the set of positive roots sent negative by ``w^{-1}``;
its size is the length of ``w``.  The weak left order ``u <=_L w`` (w = u
followed by a length-adding tail) is equivalent to ``Phi(u) <= Phi(w)``,
which is how it is decided here.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from . import linalg
from .errors import GroupTooLargeError, InputError
from .rootdata import RootDatum, Weight, reflect, root_support

DEFAULT_GROUP_CAP = 40320


@dataclass(frozen=True)
class WeylElt:
    """Group element: action matrix, its inverse, and a reduced word."""

    action: tuple[tuple[int, ...], ...]
    inv_action: tuple[tuple[int, ...], ...]
    word: tuple[int, ...] = field(compare=False)

    @property
    def length(self) -> int:
        return len(self.word)

    def __eq__(self, other):
        return isinstance(other, WeylElt) and self.action == other.action

    def __hash__(self):
        return hash(self.action)

    def __repr__(self):
        return f"WeylElt{self.word}"


def identity(datum: RootDatum) -> WeylElt:
    eye = linalg.identity(datum.rank)
    return WeylElt(eye, eye, ())


def simple_elt(datum: RootDatum, i: int) -> WeylElt:
    if not 1 <= i <= datum.rank:
        raise InputError(f"simple-root index {i} out of range")
    s = datum.reflections[i - 1]
    return WeylElt(s, s, (i,))


def act(w: WeylElt, lam: Weight) -> Weight:
    return linalg.mat_vec(w.action, lam)


def act_inv(w: WeylElt, lam: Weight) -> Weight:
    return linalg.mat_vec(w.inv_action, lam)


def _left_descent(datum: RootDatum, w: WeylElt) -> int | None:
    """Smallest i with length(sigma_i w) < length(w), i.e. w^{-1} alpha_i < 0."""
    pos = datum.positive_root_set
    for i in range(1, datum.rank + 1):
        if linalg.mat_vec(w.inv_action, datum.simple_roots[i - 1]) not in pos:
            return i
    return None


def _canonical_word(datum: RootDatum, action, inv_action) -> tuple[int, ...]:
    """Lexicographically least reduced word, by smallest-descent peeling."""
    word = []
    w = WeylElt(action, inv_action, ())
    while True:
        i = _left_descent(datum, w)
        if i is None:
            return tuple(word)
        word.append(i)
        s = datum.reflections[i - 1]
        w = WeylElt(linalg.mat_mul(s, w.action), linalg.mat_mul(w.inv_action, s), ())


def from_word(datum: RootDatum, word, *, assume_reduced: bool = False) -> WeylElt:
    """Build the element of a word of 1-based letters."""
    action = linalg.identity(datum.rank)
    inv_action = action
    for i in word:
        if not 1 <= i <= datum.rank:
            raise InputError(f"letter {i} out of range for rank {datum.rank}")
        s = datum.reflections[i - 1]
        action = linalg.mat_mul(action, s)
        inv_action = linalg.mat_mul(s, inv_action)
    if assume_reduced:
        return WeylElt(action, inv_action, tuple(word))
    return WeylElt(action, inv_action, _canonical_word(datum, action, inv_action))


def compose(datum: RootDatum, *parts) -> WeylElt:
    """Product of elements and/or words, leftmost factor outermost."""
    action = linalg.identity(datum.rank)
    inv_action = action
    for part in parts:
        if isinstance(part, WeylElt):
            action = linalg.mat_mul(action, part.action)
            inv_action = linalg.mat_mul(part.inv_action, inv_action)
        else:
            p = from_word(datum, part, assume_reduced=True)
            action = linalg.mat_mul(action, p.action)
            inv_action = linalg.mat_mul(p.inv_action, inv_action)
    return WeylElt(action, inv_action, _canonical_word(datum, action, inv_action))


def inverse(datum: RootDatum, w: WeylElt) -> WeylElt:
    return WeylElt(w.inv_action, w.action,
                   _canonical_word(datum, w.inv_action, w.action))


def inversion_set(datum: RootDatum, w: WeylElt) -> frozenset[Weight]:
    """Positive roots beta with w^{-1} beta negative; size = length(w)."""
    cache = datum.cache.setdefault("inv_set", {})
    got = cache.get(w.action)
    if got is not None:
        return got
    pos = datum.positive_root_set
    phi = frozenset(
        beta for beta in datum.positive_roots
        if linalg.mat_vec(w.inv_action, beta) not in pos
    )
    cache[w.action] = phi
    return phi


def weak_left_leq(datum: RootDatum, u: WeylElt, w: WeylElt) -> bool:
    """u <=_L w: w = u * tail with lengths adding."""
    return inversion_set(datum, u) <= inversion_set(datum, w)


def bruhat_leq(datum: RootDatum, u: WeylElt, w: WeylElt) -> bool:
    """Bruhat order via descent cancellation along one reduced word of w.

    Processing the fixed reduced word of w from the left, cancel each
    letter against v (initially u) exactly when it is a left descent of v.
    The lifting property makes this a faithful subword test.
    """
    if u.length > w.length:
        return False
    pos = datum.positive_root_set
    v_action, v_inv = u.action, u.inv_action
    remaining = u.length
    for pos_idx, i in enumerate(w.word):
        if remaining == 0:
            return True
        if w.length - pos_idx < remaining:
            return False
        if linalg.mat_vec(v_inv, datum.simple_roots[i - 1]) not in pos:
            s = datum.reflections[i - 1]
            v_action = linalg.mat_mul(s, v_action)
            v_inv = linalg.mat_mul(v_inv, s)
            remaining -= 1
    return remaining == 0


def group_cap() -> int:
    raw = os.environ.get("QSCHUB_MAX_GROUP")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise InputError(f"QSCHUB_MAX_GROUP={raw!r} is not an integer")
    return DEFAULT_GROUP_CAP


def enumerate_weyl(datum: RootDatum, letters=None, cap: int | None = None) -> list[WeylElt]:
    """Exhaustive enumeration of the (sub)group generated by ``letters``.

    Elements come back sorted by (length, word).  Refuses to enumerate past
    the cap (default 40320, overridable via QSCHUB_MAX_GROUP).
    """
    if letters is None:
        letters = tuple(range(1, datum.rank + 1))
    letters = tuple(sorted(letters))
    cache = datum.cache.setdefault("enum", {})
    if letters in cache:
        return cache[letters]
    limit = cap if cap is not None else group_cap()
    e = identity(datum)
    seen = {e.action: e}
    frontier = [e]
    while frontier:
        nxt = []
        for w in frontier:
            for i in letters:
                s = datum.reflections[i - 1]
                action = linalg.mat_mul(w.action, s)
                if action in seen:
                    continue
                if len(seen) >= limit:
                    raise GroupTooLargeError(
                        f"group exceeds enumeration cap {limit}; "
                        "raise QSCHUB_MAX_GROUP to override"
                    )
                elt = WeylElt(action, linalg.mat_mul(s, w.inv_action),
                              w.word + (i,))
                seen[action] = elt
                nxt.append(elt)
        frontier = nxt
    out = sorted(seen.values(), key=lambda w: (w.length, w.word))
    # BFS words are reduced but not canonical; normalize the witnesses
    out = [WeylElt(w.action, w.inv_action,
                   _canonical_word(datum, w.action, w.inv_action)) for w in out]
    cache[letters] = out
    return out


def longest_element(datum: RootDatum, letters=None) -> WeylElt:
    """Longest element of the (parabolic sub)group, by greedy ascent."""
    if letters is None:
        letters = tuple(range(1, datum.rank + 1))
    pos = datum.positive_root_set
    w = identity(datum)
    while True:
        for i in letters:
            # ascend while sigma_i is not already a right descent
            if linalg.mat_vec(w.action, datum.simple_roots[i - 1]) in pos:
                s = datum.reflections[i - 1]
                w = WeylElt(linalg.mat_mul(w.action, s),
                            linalg.mat_mul(s, w.inv_action), ())
                break
        else:
            return WeylElt(w.action, w.inv_action,
                           _canonical_word(datum, w.action, w.inv_action))


def parabolic_complement_roots(datum: RootDatum, levi: frozenset[int]) -> frozenset[Weight]:
    """Positive roots with support not contained in the levi subset."""
    return frozenset(
        beta for beta in datum.positive_roots
        if not root_support(beta, datum) <= levi
    )


def enumerate_Wp(datum: RootDatum, levi) -> tuple[list[WeylElt], list[WeylElt]]:
    """Minimal coset representatives for a parabolic, plus the levi subgroup.

    Returns ``(wp, w_levi)`` where ``wp`` is every w whose inversion set
    lies in the positive roots outside the levi span, sorted by length
    (its last element is the maximal representative), and ``w_levi`` is the
    full subgroup generated by the levi letters.
    """
    levi = frozenset(levi)
    if not levi <= set(range(1, datum.rank + 1)):
        raise InputError(f"levi {sorted(levi)} not a subset of 1..{datum.rank}")
    if levi == set(range(1, datum.rank + 1)):
        raise InputError("levi must be a proper subset (nilradical nonempty)")
    delta_u = parabolic_complement_roots(datum, levi)
    full = enumerate_weyl(datum)
    wp = [w for w in full if inversion_set(datum, w) <= delta_u]
    w_levi = enumerate_weyl(datum, tuple(sorted(levi))) if levi else [identity(datum)]
    return wp, w_levi


def max_parabolic_rep(datum: RootDatum, levi) -> WeylElt:
    """The longest minimal coset representative.

    The longest element of the whole group factors through the levi part as
    w0 = w_levi * wp with lengths adding, so wp = w_levi * w0 (the levi
    longest element is an involution).
    """
    w0 = longest_element(datum)
    wl = longest_element(datum, tuple(sorted(levi))) if levi else identity(datum)
    return compose(datum, wl, w0)


def min_rep_for_weight(datum: RootDatum, target: Weight, s: int) -> WeylElt:
    """Shortest w with w(Lambda_s) = target, by greedy reflection towards
    the dominant chamber.  Every other representative is this element
    followed by a stabilizer factor, with lengths adding."""
    cache = datum.cache.setdefault("min_rep", {})
    key = (target, s)
    got = cache.get(key)
    if got is not None:
        return got
    word = []
    v = target
    lam = datum.fundamental_weight(s)
    while v != lam:
        i = next((k + 1 for k, c in enumerate(v) if c < 0), None)
        if i is None:
            raise InputError(f"{target} is not in the orbit of Lambda_{s}")
        word.append(i)
        v = reflect(i, v, datum)
    out = from_word(datum, word, assume_reduced=True)
    cache[key] = out
    return out


def max_rep_for_weight(datum: RootDatum, target: Weight, s: int) -> WeylElt:
    """Longest w with w(Lambda_s) = target: the minimal representative
    composed with the longest element of the stabilizer of Lambda_s."""
    cache = datum.cache.setdefault("max_rep", {})
    key = (target, s)
    got = cache.get(key)
    if got is not None:
        return got
    stab_letters = tuple(i for i in range(1, datum.rank + 1) if i != s)
    w_stab = datum.cache.setdefault("stab_longest", {})
    if s not in w_stab:
        w_stab[s] = longest_element(datum, stab_letters) if stab_letters else identity(datum)
    out = compose(datum, min_rep_for_weight(datum, target, s), w_stab[s])
    cache[key] = out
    return out
