"""Exchange-matrix mutation and the verified single-letter seed walks.

``bfz_mutate`` is plain matrix mutation of a compatible pair: the
symplectic matrix transforms by a change of basis ``E^T L E`` and the
exchange matrix by ``E B F``, where ``E`` (resp. ``F``) is the identity
except in the mutated column (row), carrying the positive or negative part
of that column depending on a sign choice that provably does not matter.

A seed walk moves the middle string of a triple one letter at a time.
Appending the next word letter renames one label from the d part to the u
part without touching any matrix; after that, each affected u label is
exchanged by one mutation whose column is the one-step check column.  The
walk verifies, step by step, that the installed exchange column is exactly
the predicted check column, that the mutated symplectic matrix equals the
matrix recomputed independently from the new labels (formula + oracle),
and that both exchange monomials carry the weight of the incoming label.
The terminal state must reproduce the directly built seed of the new
triple up to the canonical ordering; any discrepancy is fatal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg, weyl
from .errors import ConstructionError, InputError, VerificationError
from .positions import PositionTable
from .seeds import (
    Cluster,
    ColumnInfo,
    MinorLabel,
    QuantumSeed,
    build_cluster,
    build_seed,
    certificate_vector,
    is_splitting,
    lambda_matrix_for_labels,
    make_label,
    shifted_check_column,
)


@dataclass(frozen=True)
class MutationSite:
    kind: str      # "m+" or "m-"
    letter: int
    a: int
    b: int
    c: int
    target: int    # the new middle prefix length


def find_sites(table: PositionTable, a: int, b: int, c: int) -> list[MutationSite]:
    """Mutation sites of the middle string, in the fixed-word realization.

    Prefixes of one fixed word admit exactly one extension (the next word
    letter, if the middle is below the top string) and one removal (the
    last letter, if above the bottom string).
    """
    if not 0 <= a <= b <= c <= table.M:
        raise InputError(f"strings out of order: {(a, b, c)}")
    if a == c:
        raise InputError("outer strings must differ")
    sites = []
    if b < c:
        sites.append(MutationSite("m+", table.word[b], a, b, c, b + 1))
    if b > a:
        sites.append(MutationSite("m-", table.word[b - 1], a, b, c, b - 1))
    return sites


# ---------------------------------------------------------------------------
# matrix mutation
# ---------------------------------------------------------------------------


def bfz_matrices(seed: QuantumSeed, k: int, eps: int):
    """The change-of-basis pair (E, F) of a mutation at slot ``k``."""
    n = seed.size
    ck = seed.col_of_row.get(k)
    if ck is None:
        raise InputError(f"slot {k} is not mutable")
    ncols = len(seed.columns)
    e = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        e[i][k] = -1 if i == k else max(0, -eps * seed.bmat[i][ck])
    f = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
    for j in range(ncols):
        f[ck][j] = -1 if j == ck else max(0, eps * seed.bmat[k][j])
    return tuple(map(tuple, e)), tuple(map(tuple, f))


@dataclass(frozen=True)
class SymbolicLabel:
    """Placeholder for a mutated variable with no supplied minor label."""

    slot: int
    generation: int
    s: int

    @property
    def weight(self):
        return None


def bfz_mutate(seed: QuantumSeed, k: int, eps: int,
               new_label: MinorLabel | None = None) -> QuantumSeed:
    """One matrix mutation at slot ``k``; the variable at ``k`` is replaced
    by ``new_label`` when supplied and left symbolic otherwise."""
    if eps not in (1, -1):
        raise InputError("mutation sign must be +1 or -1")
    e, f = bfz_matrices(seed, k, eps)
    new_b = linalg.mat_mul(linalg.mat_mul(e, seed.bmat), f) if seed.columns else seed.bmat
    new_lam = linalg.mat_mul(linalg.mat_mul(linalg.transpose(e), seed.lam), e)
    old = seed.cluster
    if new_label is None:
        prev = old.labels[k]
        gen = prev.generation + 1 if isinstance(prev, SymbolicLabel) else 1
        letter = prev.s
        new_label = SymbolicLabel(k, gen, letter)
    labels = tuple(
        new_label if i == k else lab for i, lab in enumerate(old.labels)
    )
    cluster = Cluster(old.table, old.variant, old.strings, labels, old.slots,
                      old.mutable)
    return QuantumSeed(cluster, new_lam, new_b, seed.columns)


# ---------------------------------------------------------------------------
# verified seed walks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StepRecord:
    index: int
    kind: str                  # "rename" or "exchange"
    slot: int | None
    eps: int | None
    replaced: object
    installed: object
    checks: tuple[str, ...]


@dataclass
class SeedState:
    """A stop on a seed walk: the seed plus the step counter."""

    seed: QuantumSeed
    step: int
    record: StepRecord | None = None


@dataclass
class SchubertPath:
    table: PositionTable
    a: int
    b: int
    c: int
    target: int
    letter: int
    t0: int
    states: list[SeedState] = field(default_factory=list)

    @property
    def records(self):
        return [st.record for st in self.states if st.record is not None]

    @property
    def final(self) -> QuantumSeed:
        return self.states[-1].seed


def _column_dict(seed: QuantumSeed, k: int) -> dict[int, int]:
    ck = seed.col_of_row[k]
    return {i: seed.bmat[i][ck] for i in range(seed.size) if seed.bmat[i][ck]}


def _resolve_over(labels, vec) -> dict[int, int]:
    index = {(l.xi, l.eta): i for i, l in enumerate(labels)
             if isinstance(l, MinorLabel)}
    out: dict[int, int] = {}
    for label, coef in vec.items():
        idx = index.get((label.xi, label.eta))
        if idx is None:
            raise VerificationError(f"check column factor {label} not in cluster")
        out[idx] = out.get(idx, 0) + coef
    return out


def _label_weight_sum(labels, column: dict[int, int]):
    rank = len(labels[0].xi)
    total = [0] * rank
    for i, coef in column.items():
        w = labels[i].weight
        total = [t + coef * x for t, x in zip(total, w)]
    return tuple(total)


def align_permutation(seed_from: QuantumSeed, seed_to: QuantumSeed) -> list[int]:
    """Map positions of ``seed_to``'s labels inside ``seed_from``."""
    perm = []
    for lab in seed_to.cluster.labels:
        idx = seed_from.cluster.index_of(lab)
        if idx is None:
            raise VerificationError(f"label {lab} missing from walked seed")
        perm.append(idx)
    if len(set(perm)) != seed_from.size or seed_from.size != seed_to.size:
        raise VerificationError("clusters are not a relabeling of each other")
    return perm


def assert_seeds_match(walked: QuantumSeed, built: QuantumSeed) -> list[int]:
    """Exact equality of (labels, symplectic, exchange) up to ordering."""
    perm = align_permutation(walked, built)
    n = built.size
    for i in range(n):
        for j in range(n):
            if walked.lam[perm[i]][perm[j]] != built.lam[i][j]:
                raise VerificationError(
                    "symplectic matrices differ at "
                    f"{built.cluster.labels[i]}, {built.cluster.labels[j]}: "
                    f"{walked.lam[perm[i]][perm[j]]} vs {built.lam[i][j]}"
                )
    cols_walked = {
        info.row: _column_dict(walked, info.row) for info in walked.columns
    }
    for info in built.columns:
        row_w = perm[info.row]
        if row_w not in cols_walked:
            raise VerificationError(
                f"no walked column at {built.cluster.labels[info.row]}"
            )
        col_b = {perm[i]: built.bmat[i][seed_col(built, info.row)] for i in range(n)
                 if built.bmat[i][seed_col(built, info.row)]}
        if col_b != cols_walked[row_w]:
            raise VerificationError(
                f"exchange columns differ at {built.cluster.labels[info.row]}: "
                f"{cols_walked[row_w]} vs {col_b}"
            )
    if len(built.columns) != len(walked.columns):
        raise VerificationError("mutable counts differ")
    return perm


def seed_col(seed: QuantumSeed, row: int) -> int:
    return seed.col_of_row[row]


def check_column(table: PositionTable, s: int, i: int, j: int):
    """The one-step check column of the exchange at occurrence pair (i, j):
    both endpoints shifted one occurrence up."""
    return shifted_check_column(table, s, i, j, +1)


def schubert_mutate(table: PositionTable, a: int, b: int, c: int,
                    target: int) -> SchubertPath:
    """Move the middle string one letter, as a verified mutation sequence."""
    sites = {site.target: site for site in find_sites(table, a, b, c)}
    if target not in sites:
        raise InputError(f"no single-letter site from {b} to {target}")
    site = sites[target]
    if site.kind == "m+":
        return _walk_up(table, a, b, c)
    return _walk_down(table, a, b, c)


def _walk_up(table: PositionTable, a: int, b: int, c: int) -> SchubertPath:
    s = table.word[b]
    bp = b + 1
    s_a, s_b = table.occ(a, s), table.occ(b, s)
    t0 = table.occ(bp, s) - s_a - 1
    assert t0 == s_b - s_a
    path = SchubertPath(table, a, b, c, bp, s, t0)
    seed = build_seed(table, (a, b, c), "standard")
    path.states.append(SeedState(seed, 0))

    moved = make_label(s_a, s_b + 1, s, table)
    if seed.cluster.index_of(moved) is None:
        raise VerificationError(f"renamed label {moved} missing from start cluster")
    path.states.append(SeedState(
        seed, 0,
        StepRecord(0, "rename", None, None, moved, moved, ("label-transfer",)),
    ))

    d = table.datum.d[s - 1]
    for t in range(t0):
        labels = path.final.cluster.labels
        seed = path.final
        cur = make_label(s_a + t, s_b, s, table)
        new = make_label(s_a + t + 1, s_b + 1, s, table)
        k = seed.cluster.index_of(cur)
        if k is None:
            raise VerificationError(f"label {cur} missing at step {t}")
        checks = []
        expected = _resolve_over(labels, check_column(table, s, s_a + t, s_b))
        installed = _column_dict(seed, k)
        if installed != expected:
            raise VerificationError(
                f"step {t}: installed column {installed} differs from "
                f"check column {expected}"
            )
        checks.append("check-column")
        f = certificate_vector(seed.lam, installed)
        want = tuple(Fraction(-2 * d) if i == k else Fraction(0)
                     for i in range(seed.size))
        if f != want:
            raise VerificationError(f"step {t}: column certificate failed: {f}")
        checks.append("certificate")
        # both exchange monomials must carry the incoming label's weight
        col_weight = _label_weight_sum(labels, installed)
        if any(col_weight):
            raise VerificationError(f"step {t}: column weight {col_weight} != 0")
        pos = {i: v for i, v in installed.items() if v > 0}
        neg = {i: -v for i, v in installed.items() if v < 0}
        w_pos = tuple(x - y for x, y in
                      zip(_label_weight_sum(labels, pos), labels[k].weight))
        w_neg = tuple(x - y for x, y in
                      zip(_label_weight_sum(labels, neg), labels[k].weight))
        if not (w_pos == w_neg == new.weight):
            raise VerificationError(
                f"step {t}: exchange weights {w_pos}, {w_neg} != {new.weight}"
            )
        checks.append("exchange-weight")
        mutated_plus = bfz_mutate(seed, k, +1, new)
        mutated_minus = bfz_mutate(seed, k, -1, new)
        if (mutated_plus.lam != mutated_minus.lam
                or mutated_plus.bmat != mutated_minus.bmat):
            raise VerificationError(f"step {t}: mutation is sign-dependent")
        checks.append("sign-independence")
        lam_ind = lambda_matrix_for_labels(mutated_plus.cluster.labels, table)
        if lam_ind != mutated_plus.lam:
            raise VerificationError(
                f"step {t}: change-of-basis symplectic matrix differs from the "
                "one recomputed from the new labels"
            )
        checks.append("independent-lambda")
        path.states.append(SeedState(
            mutated_plus, t + 1,
            StepRecord(t + 1, "exchange", k, +1, cur, new, tuple(checks)),
        ))

    built = build_seed(table, (a, bp, c), "standard")
    assert_seeds_match(path.final, built)
    return path


def _walk_down(table: PositionTable, a: int, b: int, c: int) -> SchubertPath:
    """Reverse walk: replay the upward path backwards from the top seed."""
    up = _walk_up(table, a, b - 1, c)
    path = SchubertPath(table, a, b, c, b - 1, up.letter, up.t0)
    seed = build_seed(table, (a, b, c), "standard")
    path.states.append(SeedState(seed, 0))
    exchanges = [st.record for st in up.states if st.record
                 and st.record.kind == "exchange"]
    cur = seed
    for t, rec in enumerate(reversed(exchanges)):
        k = cur.cluster.index_of(rec.installed)
        if k is None:
            raise VerificationError(f"reverse step {t}: label {rec.installed} missing")
        mutated_plus = bfz_mutate(cur, k, +1, rec.replaced)
        mutated_minus = bfz_mutate(cur, k, -1, rec.replaced)
        if (mutated_plus.lam != mutated_minus.lam
                or mutated_plus.bmat != mutated_minus.bmat):
            raise VerificationError(f"reverse step {t}: sign-dependent")
        lam_ind = lambda_matrix_for_labels(mutated_plus.cluster.labels, table)
        if lam_ind != mutated_plus.lam:
            raise VerificationError(f"reverse step {t}: symplectic mismatch")
        path.states.append(SeedState(
            mutated_plus, t + 1,
            StepRecord(t + 1, "exchange", k, +1, rec.installed, rec.replaced,
                       ("certificate", "independent-lambda")),
        ))
        cur = mutated_plus
    built = build_seed(table, (a, b - 1, c), "standard")
    assert_seeds_match(path.final, built)
    return path


# ---------------------------------------------------------------------------
# creation / annihilation and chain moves
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PathEvent:
    kind: str          # "split", "merge", "walk", "insert", "remove", "restrict"
    detail: tuple


@dataclass
class CreationPath:
    table: PositionTable
    events: list[PathEvent] = field(default_factory=list)
    walks: list[SchubertPath] = field(default_factory=list)


def _best_split(table: PositionTable, a: int, c: int, toward: int) -> int:
    """Largest middle at most ``toward`` that leaves the pair's cluster
    unchanged; the trivial split at ``a`` always qualifies."""
    for b in range(min(toward, c - 1), a, -1):
        if is_splitting(table, a, b, c):
            return b
    return a

def create_annihilate(table: PositionTable, a: int, c: int, b1: int,
                      direction: str) -> CreationPath:
    """Creation ("+"): split (a, c) and walk the middle to ``b1``.
    Annihilation ("-"): walk the middle of (a, b1, c) down to a splitting
    and merge.  Every walk step runs the verified mutation engine."""
    if not 0 <= a < c <= table.M:
        raise InputError(f"invalid pair ({a}, {c})")
    if not a <= b1 <= c:
        raise InputError(f"target middle {b1} outside [{a}, {c}]")
    path = CreationPath(table)
    if direction == "+":
        b = _best_split(table, a, c, b1)
        path.events.append(PathEvent("split", (a, b, c)))
        while b != b1:
            step = b + 1 if b1 > b else b - 1
            walk = schubert_mutate(table, a, b, c, step)
            path.walks.append(walk)
            path.events.append(PathEvent("walk", (a, b, c, step)))
            b = step
    elif direction == "-":
        b = b1
        b_stop = _best_split(table, a, c, b1)
        while b != b_stop:
            walk = schubert_mutate(table, a, b, c, b - 1)
            path.walks.append(walk)
            path.events.append(PathEvent("walk", (a, b, c, b - 1)))
            b -= 1
        path.events.append(PathEvent("merge", (a, b, c)))
    else:
        raise InputError("direction must be '+' or '-'")
    return path


def chain_insert_index(n: int) -> int:
    """Middle slot where a chain of length n grows (or n+1 shrinks)."""
    return n // 2 if n % 2 == 0 else (n - 1) // 2


def normalize_chain(strings) -> tuple[int, ...]:
    """Collapse repeated neighbours; the cluster does not see them."""
    out = [strings[0]]
    for m in strings[1:]:
        if m != out[-1]:
            out.append(m)
    return tuple(out)


def chain_moves(table: PositionTable, variant: str, strings, max_len: int):
    """All one-step chain moves: middle-string walks on interior slots,
    cluster-preserving middle inserts and removals, and the two
    restrictions that peel the outermost part of the chain."""
    strings = tuple(strings)
    n = len(strings)
    moves = []
    # interior walks (the composite creation/annihilation replacements)
    for idx in range(1, n - 1):
        lo, cur, hi = strings[idx - 1], strings[idx], strings[idx + 1]
        if cur + 1 <= hi:
            moves.append(("walk", variant,
                          strings[:idx] + (cur + 1,) + strings[idx + 1:]))
        if cur - 1 >= lo:
            moves.append(("walk", variant,
                          strings[:idx] + (cur - 1,) + strings[idx + 1:]))
    # middle inserts (trivial on the cluster, by construction or by check)
    if n < max_len:
        pos = chain_insert_index(n)
        base = build_cluster(table, strings, variant).label_set()
        for x in range(strings[pos - 1] if pos else strings[0], strings[pos] + 1):
            cand = strings[:pos] + (x,) + strings[pos:]
            if normalize_chain(cand) == normalize_chain(strings):
                moves.append(("insert", variant, cand))
                continue
            if build_cluster(table, cand, variant).label_set() == base:
                moves.append(("insert", variant, cand))
    # middle removal
    if n > 2:
        pos = chain_insert_index(n - 1)
        cand = strings[:pos] + strings[pos + 1:]
        if cand[0] != cand[-1]:
            base = build_cluster(table, strings, variant).label_set()
            if build_cluster(table, cand, variant).label_set() == base:
                moves.append(("remove", variant, cand))
    # restrictions peel the outer part of the recursion
    if n > 2:
        if variant == "standard":
            cand = strings[:-1]
            if cand[0] != cand[-1]:
                moves.append(("restrict", "opposite", cand))
        else:
            cand = strings[1:]
            if cand[0] != cand[-1]:
                moves.append(("restrict", "standard", cand))
    return moves


def reachable_chains(table: PositionTable, max_len: int = 4,
                     transient_len: int = 5):
    """Breadth-first closure of the chain moves from the full pair (0, M).

    Returns the set of (variant, normalized strings) nodes visited.  Walk
    edges on triples run the verified mutation engine once per distinct
    edge; longer chains move at the string level (their seeds are rebuilt
    and fully checked by construction).
    """
    start = ("standard", (0, table.M))
    seen = {start}
    frontier = [start]
    verified_edges = set()
    while frontier:
        nxt = []
        for variant, strings in frontier:
            for kind, var2, cand in chain_moves(table, variant, strings,
                                                transient_len):
                if kind == "walk" and len(strings) == 3 and variant == "standard":
                    edge = (strings, cand)
                    if edge not in verified_edges:
                        verified_edges.add(edge)
                        idx = next(i for i in range(3) if strings[i] != cand[i])
                        schubert_mutate(table, strings[0], strings[idx],
                                        strings[2], cand[idx])
                node = (var2, normalize_chain(cand))
                if len(node[1]) > transient_len:
                    continue
                if node not in seen:
                    seen.add(node)
                    nxt.append(node)
        frontier = nxt
    return seen
