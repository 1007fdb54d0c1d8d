"""Quantized-minor labels, clusters, q-commutation data and exchange columns.

A minor label is a weight pair ``(xi, eta) = (u Lambda_s, v Lambda_s)``
where ``u`` and ``v`` are prefixes of the fixed word through two
occurrences ``i <= j`` of the letter ``s``; labels are equal exactly when
their weight pairs are.  Clusters pair a "u part" (labels with a fixed
right endpoint) with a "d part" (fixed left endpoint), cut out of the word
by a chain of prefixes.

The q-commutation exponent of an ordered pair of labels is
``(xi_1 - eta_1, xi_2 + eta_2)`` whenever the pair can be certified by
factoring the four weights through a common pair of group elements with
lengths adding (:func:`certify_order`).  Every exponent entering a cluster
matrix is cross-checked against the quasi-polynomial oracle
(:mod:`qschub.lusztig`); a mismatch aborts, it is never recoverable.

Exchange-matrix columns are Laurent monomials in the cluster written as
integer exponent vectors.  Interior columns are ratios of ladder products
(:func:`h_monomial`); the column of the label joining the two parts has a
closed form whose factors telescope through the occurrence bookkeeping.
Every column is certified exactly: the symplectic form applied to a column
has a single nonzero entry ``sign * 2 d_s`` at the column's own slot, with
a global sign per variant (``-`` for the standard orientation, ``+`` for
the opposite one).  A column that fails its closed form is repaired by an
exact constrained solve and flagged.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg, weyl
from .errors import ConstructionError, InputError, OracleMismatchError
from .lusztig import oracle_exponent
from .positions import PositionTable
from .rootdata import Weight, pairing


@dataclass(frozen=True)
class MinorLabel:
    """Minor of letter ``s`` between occurrences ``i < j`` of the fixed word."""

    s: int
    i: int
    j: int
    xi: Weight
    eta: Weight

    def __eq__(self, other):
        return (
            isinstance(other, MinorLabel)
            and self.xi == other.xi
            and self.eta == other.eta
        )

    def __hash__(self):
        return hash((self.xi, self.eta))

    @property
    def weight(self) -> Weight:
        return tuple(x - e for x, e in zip(self.xi, self.eta))

    def __repr__(self):
        return f"E_{self.s}({self.i},{self.j})"


def make_label(i: int, j: int, s: int, table: PositionTable) -> MinorLabel | None:
    """Label with endpoints at the i-th and j-th occurrence of s.

    ``i == j`` yields the unit, reported as ``None``.
    """
    if not 0 <= i <= j <= table.total[s]:
        raise InputError(f"occurrence endpoints ({i},{j}) out of range for letter {s}")
    if i == j:
        return None
    return MinorLabel(s, i, j, table.occ_weight(s, i, s), table.occ_weight(s, j, s))


def label_u(table: PositionTable, u: weyl.WeylElt, v: weyl.WeylElt, s: int) -> MinorLabel | None:
    """Label from explicit group elements, normalized to occurrence form."""
    xi = weyl.act(u, table.datum.fundamental_weight(s))
    eta = weyl.act(v, table.datum.fundamental_weight(s))
    return make_label(
        table.occurrence_of_weight(s, xi), table.occurrence_of_weight(s, eta), s, table
    )


# ---------------------------------------------------------------------------
# order certificates and the weight formula
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OrderWitness:
    """Factorization witness for an ordered pair of labels.

    ``xi1 = s_outer * s_inner (lam)``, ``eta1 = t_outer (lam)``,
    ``xi2 = s_outer (mu)``, ``eta2 = t_outer * t_inner (mu)``,
    with both products length-additive.
    """

    s_outer: weyl.WeylElt
    s_inner: weyl.WeylElt
    t_outer: weyl.WeylElt
    t_inner: weyl.WeylElt
    lam: Weight
    mu: Weight


def certify_order(l1: MinorLabel, l2: MinorLabel, table: PositionTable) -> OrderWitness | None:
    """Certificate that ``l1`` precedes ``l2`` in the commutation order.

    Searches for group elements realizing the four label weights through a
    common outer pair with both lengths adding.  Testing the shortest
    representative of each outer weight against the longest representative
    of each inner weight decides existence exactly, because representatives
    of a weight form a single stabilizer coset with lengths adding off the
    shortest one.
    """
    datum = table.datum
    cache = table._wt_cache.setdefault("certify", {})
    key = (l1.s, l1.i, l1.j, l2.s, l2.i, l2.j)
    if key in cache:
        return cache[key]
    s_outer = weyl.min_rep_for_weight(datum, l2.xi, l2.s)
    x_max = weyl.max_rep_for_weight(datum, l1.xi, l1.s)
    witness = None
    if weyl.weak_left_leq(datum, s_outer, x_max):
        t_outer = weyl.min_rep_for_weight(datum, l1.eta, l1.s)
        y_max = weyl.max_rep_for_weight(datum, l2.eta, l2.s)
        if weyl.weak_left_leq(datum, t_outer, y_max):
            s_inner = weyl.compose(datum, weyl.inverse(datum, s_outer), x_max)
            t_inner = weyl.compose(datum, weyl.inverse(datum, t_outer), y_max)
            assert s_outer.length + s_inner.length == x_max.length
            assert t_outer.length + t_inner.length == y_max.length
            witness = OrderWitness(
                s_outer,
                s_inner,
                t_outer,
                t_inner,
                datum.fundamental_weight(l1.s),
                datum.fundamental_weight(l2.s),
            )
    cache[key] = witness
    return witness


def formula_exponent(l1: MinorLabel, l2: MinorLabel, table: PositionTable) -> Fraction:
    """Exponent r with ``l1 l2 = q^r l2 l1`` for a pair certified as l1 < l2."""
    diff = tuple(x - e for x, e in zip(l1.xi, l1.eta))
    total = tuple(x + e for x, e in zip(l2.xi, l2.eta))
    return pairing(diff, total, table.datum)


def commutation_exponent(l1: MinorLabel, l2: MinorLabel, table: PositionTable) -> Fraction:
    """Certified exponent in either direction; raises if no witness exists."""
    if certify_order(l1, l2, table) is not None:
        return formula_exponent(l1, l2, table)
    if certify_order(l2, l1, table) is not None:
        return -formula_exponent(l2, l1, table)
    raise ConstructionError(f"pair {l1}, {l2} is not order-certifiable")


def lambda_matrix_for_labels(labels, table: PositionTable, *, inject_fault: bool = False):
    """Skew matrix of certified exponents, each entry checked against the
    quasi-polynomial oracle.  ``inject_fault`` flips one entry before the
    check, to prove the tripwire fires (test harness only)."""
    n = len(labels)
    lam = [[Fraction(0)] * n for _ in range(n)]
    faulted = False
    for i in range(n):
        for j in range(i + 1, n):
            val = commutation_exponent(labels[i], labels[j], table)
            if inject_fault and not faulted and val != 0:
                val = -val
                faulted = True
            check = oracle_exponent(labels[i], labels[j], table)
            if val != check:
                raise OracleMismatchError(
                    f"exponent mismatch for {labels[i]}, {labels[j]}: "
                    f"formula {val} vs oracle {check}",
                    formula=val,
                    oracle=check,
                )
            lam[i][j] = val
            lam[j][i] = -val
    return tuple(tuple(row) for row in lam)


# ---------------------------------------------------------------------------
# clusters
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Slot:
    """Where a label sits: u or d part, its position, and the defining
    piece of the chain (prefix-length anchors)."""

    part: str
    s: int
    j: int
    piece_index: int
    anchors: tuple[int, int, int]


class Cluster:
    """Ordered cluster of labels with the mutable/frozen split."""

    def __init__(self, table, variant, strings, labels, slots, mutable):
        self.table = table
        self.variant = variant
        self.strings = tuple(strings)
        self.labels = tuple(labels)
        self.slots = tuple(slots)
        self.mutable = tuple(mutable)
        self._index = {(l.xi, l.eta): k for k, l in enumerate(self.labels)}

    def __len__(self):
        return len(self.labels)

    def index_of(self, label: MinorLabel) -> int | None:
        return self._index.get((label.xi, label.eta))

    def label_set(self) -> frozenset:
        return frozenset((l.xi, l.eta) for l in self.labels)

    def __repr__(self):
        return (
            f"Cluster({self.variant}, strings={self.strings}, "
            f"labels={list(self.labels)})"
        )


def _pieces(strings, variant):
    """Defining triples of a chain, as (piece_index, part, (x, y, z))."""
    n = len(strings)
    out = []
    if variant == "standard":
        for j in range(1, (n - 1) // 2 + 1):
            out.append((j, "u", (strings[j - 1], strings[j], strings[n - j - 1])))
        for i in range(1, n // 2 + 1):
            out.append((i, "d", (strings[i - 1], strings[n - i - 1], strings[n - i])))
    elif variant == "opposite":
        for i in range(1, n // 2 + 1):
            out.append((i, "u", (strings[i - 1], strings[i], strings[n - i])))
        for j in range(1, (n - 1) // 2 + 1):
            out.append((j, "d", (strings[j], strings[n - j - 1], strings[n - j])))
    else:
        raise InputError(f"unknown variant {variant!r}")
    return out


def _slot_sort_key(table, slot):
    n = table.n_of(slot.s, slot.j) if slot.j else 0
    if slot.part == "u":
        return (0, -n, slot.s)
    return (1, n, slot.s)


def det_weight_pairs(table, strings):
    """Weight pairs of the frozen labels: one per letter of the last prefix,
    spanning the whole chain; pairs that collapse to the unit are skipped."""
    lo, hi = strings[0], strings[-1]
    pairs = set()
    for s in range(1, table.datum.rank + 1):
        if table.occ(hi, s) == 0:
            continue
        xi, eta = table.prefix_weight(lo, s), table.prefix_weight(hi, s)
        if xi != eta:
            pairs.add((xi, eta))
    return pairs


def build_cluster(table: PositionTable, strings, variant: str = "standard") -> Cluster:
    """Cluster of a chain of prefixes, in canonical order.

    ``strings`` is a nondecreasing tuple of prefix lengths with distinct
    endpoints.  The u-part collects labels with right endpoint anchored at
    a chain element, the d-part labels with anchored left endpoint; the
    opposite variant swaps the roles.  Non-mutable labels are exactly those
    whose weights span the whole chain.
    """
    strings = tuple(int(m) for m in strings)
    if len(strings) < 2:
        raise InputError("need at least two strings")
    if any(not 0 <= m <= table.M for m in strings):
        raise InputError(f"prefix lengths out of range: {strings}")
    if any(a > b for a, b in zip(strings, strings[1:])):
        raise InputError(f"strings out of order: {strings}")
    if strings[0] == strings[-1]:
        raise InputError("chain endpoints must differ")

    seen: dict = {}
    entries: list[tuple[Slot, MinorLabel]] = []
    for piece_index, part, (x, y, z) in _pieces(strings, variant):
        if part == "u":
            idx = table.index_set("u", x, y)
            for (a, j) in idx.entries:
                lab = make_label(j, table.occ(z, a), a, table)
                if lab is None:
                    continue
                key = (lab.xi, lab.eta)
                if key not in seen:
                    seen[key] = True
                    entries.append((Slot("u", a, j, piece_index, (x, y, z)), lab))
        else:
            idx = table.index_set("d", y, z)
            for (a, j) in idx.entries:
                lab = make_label(table.occ(x, a), j, a, table)
                if lab is None:
                    continue
                key = (lab.xi, lab.eta)
                if key not in seen:
                    seen[key] = True
                    entries.append((Slot("d", a, j, piece_index, (x, y, z)), lab))

    entries.sort(key=lambda sl: _slot_sort_key(table, sl[0]))
    dets = det_weight_pairs(table, strings)
    labels = tuple(lab for _, lab in entries)
    slots = tuple(slot for slot, _ in entries)
    mutable = tuple((lab.xi, lab.eta) not in dets for lab in labels)
    return Cluster(table, variant, strings, labels, slots, mutable)


# ---------------------------------------------------------------------------
# ladder products and exchange columns
# ---------------------------------------------------------------------------


class _Vec(dict):
    """label-keyed integer exponent vector."""

    def add(self, label: MinorLabel | None, coef: int) -> None:
        if label is None or coef == 0:
            return
        cur = self.get(label, 0) + coef
        if cur:
            self[label] = cur
        else:
            self.pop(label, None)

    def add_all(self, other: "_Vec", scale: int = 1) -> None:
        for label, coef in other.items():
            self.add(label, coef * scale)


def h_monomial(table: PositionTable, kind: str, ref: int, a: int, j: int) -> _Vec:
    """Ladder product attached to position (a, j), anchored at prefix ``ref``.

    Kind "d" anchors left endpoints at ``ref``; kind "u" anchors right
    endpoints.  Factors for every letter adjacent to ``a`` enter with the
    (negative) Cartan entry as exponent, evaluated at the occurrence that
    matches the weight of the prefix through position (a, j).  Unit factors
    are dropped.
    """
    datum = table.datum
    vec = _Vec()
    a_ref = table.occ(ref, a)
    if kind == "d":
        if not a_ref < j <= table.total[a]:
            raise InputError(f"position ({a},{j}) outside the d range of prefix {ref}")
        vec.add(make_label(a_ref, j, a, table), 1)
        vec.add(make_label(a_ref, j - 1, a, table), 1)
        for k in range(1, datum.rank + 1):
            coupling = datum.cartan[k - 1][a - 1]
            if coupling < 0:
                vec.add(make_label(table.occ(ref, k), table.p_index(a, j, k), k, table),
                        coupling)
    elif kind == "u":
        if not 1 <= j <= a_ref:
            raise InputError(f"position ({a},{j}) outside the u range of prefix {ref}")
        vec.add(make_label(j, a_ref, a, table), 1)
        vec.add(make_label(j - 1, a_ref, a, table), 1)
        for k in range(1, datum.rank + 1):
            coupling = datum.cartan[k - 1][a - 1]
            if coupling < 0:
                vec.add(make_label(table.p_index(a, j, k), table.occ(ref, k), k, table),
                        coupling)
    else:
        raise InputError(f"unknown ladder kind {kind!r}")
    return vec


def interior_column_d(table, ref: int, a: int, j: int) -> _Vec:
    """Ratio of consecutive d ladders; satisfies the minus certificate."""
    vec = h_monomial(table, "d", ref, a, j)
    vec.add_all(h_monomial(table, "d", ref, a, j + 1), -1)
    return vec


def interior_column_u(table, ref: int, a: int, j: int) -> _Vec:
    """Ratio of consecutive u ladders; satisfies the minus certificate."""
    vec = h_monomial(table, "u", ref, a, j)
    vec.add_all(h_monomial(table, "u", ref, a, j + 1), -1)
    return vec


def boundary_column(table, lo: int, hi: int, s: int) -> _Vec:
    """Column of the label joining the u and d parts across (lo, hi).

    Written on the labels adjacent to ``E_s(occ(lo,s), occ(hi,s))``: one
    extra occurrence on either endpoint, plus coupling factors anchored at
    the two prefixes.  Minus certificate.
    """
    datum = table.datum
    i0, j0 = table.occ(lo, s), table.occ(hi, s)
    if j0 + 1 > table.total[s]:
        raise ConstructionError(
            f"boundary column at letter {s} needs occurrence {j0 + 1}"
        )
    vec = _Vec()
    vec.add(make_label(i0 + 1, j0, s, table), -1)
    vec.add(make_label(i0, j0 + 1, s, table), -1)
    for k in range(1, datum.rank + 1):
        coupling = datum.cartan[k - 1][s - 1]
        if coupling < 0:
            vec.add(make_label(table.occ(lo, k), table.p_index(s, j0 + 1, k), k, table),
                    -coupling)
            vec.add(make_label(table.p_index(s, i0 + 1, k), table.occ(hi, k), k, table),
                    -coupling)
            vec.add(make_label(table.occ(lo, k), table.occ(hi, k), k, table), coupling)
    return vec


def boundary_column_opposite(table, lo: int, hi: int, s: int) -> _Vec:
    """Mirror of :func:`boundary_column` for the opposite orientation:
    one fewer occurrence on either endpoint.  Plus certificate."""
    datum = table.datum
    i0, j0 = table.occ(lo, s), table.occ(hi, s)
    if i0 < 1:
        raise ConstructionError(
            f"opposite boundary column at letter {s} needs occurrence {i0 - 1}"
        )
    vec = _Vec()
    vec.add(make_label(i0 - 1, j0, s, table), -1)
    vec.add(make_label(i0, j0 - 1, s, table), -1)
    for k in range(1, datum.rank + 1):
        coupling = datum.cartan[k - 1][s - 1]
        if coupling < 0:
            vec.add(make_label(table.p_index(s, i0, k), table.occ(hi, k), k, table),
                    -coupling)
            vec.add(make_label(table.occ(lo, k), table.p_index(s, j0, k), k, table),
                    -coupling)
            vec.add(make_label(table.occ(lo, k), table.occ(hi, k), k, table), coupling)
    return vec


def shifted_check_column(table, s: int, i: int, j: int, direction: int) -> _Vec:
    """Generic column candidate built from a label's own endpoints, shifting
    both one occurrence up (direction=+1) or down (direction=-1)."""
    datum = table.datum
    vec = _Vec()
    if direction > 0:
        if j + 1 > table.total[s]:
            raise ConstructionError("shift exceeds letter multiplicity")
        vec.add(make_label(i + 1, j, s, table), -1)
        vec.add(make_label(i, j + 1, s, table), -1)
        ii, jj = i + 1, j + 1
    else:
        if i < 1:
            raise ConstructionError("shift below first occurrence")
        vec.add(make_label(i - 1, j, s, table), -1)
        vec.add(make_label(i, j - 1, s, table), -1)
        ii, jj = i, j
    for k in range(1, datum.rank + 1):
        coupling = datum.cartan[k - 1][s - 1]
        if coupling < 0:
            vec.add(make_label(table.p_index(s, ii, k), table.p_index(s, jj, k), k, table),
                    -coupling)
    return vec


# ---------------------------------------------------------------------------
# seeds
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ColumnInfo:
    row: int          # index of the column's own label in the cluster
    s: int
    sign: int         # certificate: L @ column == sign * 2 d_s * e_row
    kind: str         # "interior-d", "interior-u", "boundary", "repaired"
    repaired: bool


class QuantumSeed:
    """Cluster with its exact symplectic and exchange matrices."""

    def __init__(self, cluster: Cluster, lam, bmat, columns):
        self.cluster = cluster
        self.lam = lam
        self.bmat = bmat
        self.columns = tuple(columns)
        self.col_of_row = {c.row: k for k, c in enumerate(self.columns)}

    @property
    def table(self) -> PositionTable:
        return self.cluster.table

    @property
    def size(self) -> int:
        return len(self.cluster)

    def __repr__(self):
        return (
            f"QuantumSeed({self.cluster.variant}, strings={self.cluster.strings}, "
            f"n={self.size}, mutable={sum(self.cluster.mutable)})"
        )


def _resolve(vec: _Vec, cluster: Cluster):
    out = {}
    for label, coef in vec.items():
        idx = cluster.index_of(label)
        if idx is None:
            return None, label
        out[idx] = out.get(idx, 0) + coef
    return out, None


def certificate_vector(lam, column: dict[int, int]):
    n = len(lam)
    return tuple(
        sum(lam[i][k] * coef for k, coef in column.items()) for i in range(n)
    )


def _certificate_ok(lam, column, row, sign, two_d):
    f = certificate_vector(lam, column)
    want = Fraction(sign * two_d)
    return all(
        (v == want if i == row else v == 0) for i, v in enumerate(f)
    )


def _neg_vec(fn, *args) -> _Vec:
    vec = _Vec()
    vec.add_all(fn(*args), -1)
    return vec


def _column_candidates(cluster: Cluster, idx: int):
    """Ordered closed-form candidates for the column at a mutable label.

    The standard orientation carries the minus certificate on every column,
    the opposite orientation the plus certificate; interior ladder ratios
    are negated accordingly.  Labels at the top of an inner chain piece are
    viewed through the enclosing piece (the other part's orientation), as
    the chain construction embeds each label in a triple cluster.
    """
    table = cluster.table
    label = cluster.labels[idx]
    slot = cluster.slots[idx]
    s = label.s
    x, y, z = slot.anchors
    strings = cluster.strings
    cands: list[tuple[str, _Vec]] = []

    def safe(kind, fn, *args):
        try:
            cands.append((kind, fn(*args)))
        except (ConstructionError, InputError):
            pass

    if cluster.variant == "standard":
        sign = -1
        if slot.part == "d":
            if slot.j < table.occ(z, s):
                safe("interior-d", interior_column_d, table, x, s, slot.j)
            elif slot.piece_index >= 2:
                # inner-piece top: u view through the enclosing ring
                safe("interior-u", interior_column_u, table, z, s, table.occ(x, s))
                safe("boundary", boundary_column, table,
                     strings[slot.piece_index - 2], z, s)
        else:
            if slot.j > table.occ(x, s):
                safe("interior-u", interior_column_u, table, z, s, slot.j)
            else:
                safe("boundary", boundary_column, table, x, z, s)
        safe("shift", shifted_check_column, table, s, label.i, label.j, +1)
    else:
        sign = +1
        if slot.part == "u":
            if slot.j > table.occ(x, s):
                safe("interior-u", _neg_vec, interior_column_u, table, z, s, slot.j)
            elif slot.piece_index >= 2:
                # inner-piece boundary: d view through the enclosing ring
                safe("interior-d", _neg_vec, interior_column_d, table, x, s,
                     table.occ(z, s))
                safe("boundary", boundary_column_opposite, table, x, z, s)
        else:
            if slot.j < table.occ(z, s):
                safe("interior-d", _neg_vec, interior_column_d, table, x, s, slot.j)
            else:
                safe("boundary", boundary_column_opposite, table, x, z, s)
        safe("shift", shifted_check_column, table, s, label.i, label.j, -1)
    return sign, cands


def b_column(seed_lam, cluster: Cluster, idx: int):
    """Exchange column for the mutable label at ``idx``.

    Tries the closed forms appropriate to the label's position, certifying
    each against the symplectic form; if none certifies, falls back to an
    exact constrained solve for an integer column (flagged as repaired).
    """
    table = cluster.table
    label = cluster.labels[idx]
    two_d = 2 * table.datum.d[label.s - 1]
    sign, cands = _column_candidates(cluster, idx)
    for kind, vec in cands:
        column, missing = _resolve(vec, cluster)
        if column is None:
            continue
        if _certificate_ok(seed_lam, column, idx, sign, two_d):
            return column, ColumnInfo(idx, label.s, sign, kind, False)
    # constrained solve: L @ x = sign * 2 d_s * e_idx, integer x
    n = len(cluster)
    rhs = [Fraction(0)] * n
    rhs[idx] = Fraction(sign * two_d)
    sol = linalg.solve(seed_lam, rhs)
    if sol is None or any(v.denominator != 1 for v in sol):
        raise ConstructionError(
            f"no integral exchange column for {label} in {cluster.strings}"
        )
    column = {i: int(v) for i, v in enumerate(sol) if v != 0}
    if not _certificate_ok(seed_lam, column, idx, sign, two_d):
        raise ConstructionError(f"repair solve failed the certificate for {label}")
    return column, ColumnInfo(idx, label.s, sign, "repaired", True)


def build_seed(table: PositionTable, strings, variant: str = "standard",
               *, inject_fault: bool = False) -> QuantumSeed:
    """Assemble (cluster, symplectic matrix, exchange matrix) for a chain."""
    cluster = build_cluster(table, strings, variant)
    lam = lambda_matrix_for_labels(cluster.labels, table, inject_fault=inject_fault)
    columns = []
    vectors = []
    for idx, is_mut in enumerate(cluster.mutable):
        if not is_mut:
            continue
        column, info = b_column(lam, cluster, idx)
        vectors.append(column)
        columns.append(info)
    n = len(cluster)
    bmat = tuple(
        tuple(vec.get(i, 0) for vec in vectors) for i in range(n)
    )
    seed = QuantumSeed(cluster, lam, bmat, columns)
    report = check_compatible(seed)
    if not report.ok:
        raise ConstructionError(f"seed failed compatibility: {report.failures}")
    return seed


def lambda_matrix(cluster: Cluster, *, inject_fault: bool = False):
    """Symplectic matrix of a cluster (formula-authored, oracle-checked)."""
    return lambda_matrix_for_labels(cluster.labels, cluster.table,
                                    inject_fault=inject_fault)


@dataclass(frozen=True)
class CompatReport:
    ok: bool
    diagonal: tuple
    failures: tuple


def check_compatible(seed: QuantumSeed) -> CompatReport:
    """Exact compatibility check of the pair (symplectic, exchange).

    The product of the transposed exchange matrix with the symplectic one
    must be diagonal with entry ``-sign * 2 d_s`` at each column (sign as
    recorded at construction: minus for the standard orientation, plus for
    the opposite).  The report carries every failing entry.
    """
    lam = seed.lam
    n = seed.size
    failures = []
    diagonal = []
    d = seed.table.datum.d
    for c, info in enumerate(seed.columns):
        column = {i: seed.bmat[i][c] for i in range(n) if seed.bmat[i][c]}
        f = certificate_vector(lam, column)
        want = Fraction(info.sign * 2 * d[info.s - 1])
        diagonal.append(f[info.row])
        for i, v in enumerate(f):
            expect = want if i == info.row else Fraction(0)
            if v != expect:
                failures.append((c, i, v, expect))
    return CompatReport(not failures, tuple(diagonal), tuple(failures))


def is_splitting(table: PositionTable, a: int, b: int, c: int, variant: str = "standard") -> bool:
    """Whether inserting ``b`` into the pair (a, c) leaves the cluster
    unchanged as a set of labels."""
    if not a < b < c:
        raise InputError("splitting needs a < b < c")
    whole = build_cluster(table, (a, c), variant)
    split = build_cluster(table, (a, b, c), variant)
    return whole.label_set() == split.label_set()
