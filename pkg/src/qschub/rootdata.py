"""Cartan data of the finite simple Lie types with the exact invariant form.

Weights live in fundamental-weight coordinates as plain integer tuples.
The i-th simple root is the i-th *column* of the Cartan matrix, i.e.
``alpha_i = sum_j a[j][i] * Lambda_j``.  The symmetrizers ``d_i`` are the
unique positive integers with ``d_i a_ij = d_j a_ji`` and ``min d_i = 1``;
they pin the invariant bilinear form through ``(Lambda_i, alpha_j) =
delta_ij d_j``.  The resulting Gram matrix of the fundamental weights is
``diag(d) @ inverse(cartan)``, so the only denominators that ever appear
divide the determinant of the Cartan matrix.

All letters (simple-root indices) are 1-based throughout the package.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import InputError
from . import linalg

Weight = tuple  # integer coordinates in the fundamental-weight basis

_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


def _cartan_entries(lie_type: str, rank: int) -> list[list[int]]:
    n = rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, aij=-1, aji=-1):
        # 0-based; aij sits at row i, column j
        a[i][j] = aij
        a[j][i] = aji

    if lie_type == "A":
        for i in range(n - 1):
            bond(i, i + 1)
    elif lie_type == "B":
        # last simple root short: d = (2,...,2,1)
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 2, n - 1, -1, -2)
    elif lie_type == "C":
        # last simple root long: d = (1,...,1,2)
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 2, n - 1, -2, -1)
    elif lie_type == "D":
        for i in range(n - 3):
            bond(i, i + 1)
        bond(n - 3, n - 2)
        bond(n - 3, n - 1)
    elif lie_type == "E":
        # Bourbaki numbering: chain 1-3-4-5-..., node 2 attached to 4
        chain = [0] + list(range(2, n))
        for i, j in zip(chain, chain[1:]):
            bond(i, j)
        bond(1, 3)
    elif lie_type == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)  # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        bond(2, 3)
    elif lie_type == "G":
        bond(0, 1, -3, -1)  # alpha_1 short, alpha_2 long
    return a


def _symmetrizers(cartan) -> tuple[int, ...]:
    """Positive integers d with d_i a_ij = d_j a_ji, normalized min d = 1."""
    n = len(cartan)
    d = [Fraction(0)] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if i != j and cartan[i][j] != 0 and d[j] == 0:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                stack.append(j)
    if any(x == 0 for x in d):
        raise InputError("Cartan matrix is not connected")
    scale = min(d)
    d = [x / scale for x in d]
    if any(x.denominator != 1 or x <= 0 for x in d):
        raise InputError("Cartan matrix is not symmetrizable over the integers")
    return tuple(int(x) for x in d)


class RootDatum:
    """Immutable bundle of Cartan data and derived exact tables."""

    def __init__(self, lie_type: str, rank: int):
        lo, hi = _RANK_RANGE.get(lie_type, (None, None))
        if lo is None or rank < lo or (hi is not None and rank > hi):
            raise InputError(f"invalid simple type {lie_type}{rank}")
        self.lie_type = lie_type
        self.rank = rank
        self.cartan: tuple[tuple[int, ...], ...] = tuple(
            tuple(row) for row in _cartan_entries(lie_type, rank)
        )
        self.d: tuple[int, ...] = _symmetrizers(self.cartan)
        for i in range(rank):
            for j in range(rank):
                assert self.d[i] * self.cartan[i][j] == self.d[j] * self.cartan[j][i]
        inv = linalg.invert(self.cartan)
        # Gram matrix of the fundamental weights: (Lambda_i, Lambda_j)
        self.gram: tuple[tuple[Fraction, ...], ...] = tuple(
            tuple(Fraction(self.d[i]) * inv[i][j] for j in range(rank))
            for i in range(rank)
        )
        # simple roots in weight coordinates (columns of the Cartan matrix)
        self.simple_roots: tuple[Weight, ...] = tuple(
            tuple(self.cartan[j][i] for j in range(rank)) for i in range(rank)
        )
        # reflection matrices on weight coordinates: S_i = 1 - alpha_i e_i^T
        self.reflections: tuple[tuple[tuple[int, ...], ...], ...] = tuple(
            tuple(
                tuple((1 if r == c else 0) - (self.simple_roots[i][r] if c == i else 0)
                      for c in range(rank))
                for r in range(rank)
            )
            for i in range(rank)
        )
        self._init_roots()
        # per-instance caches for hot Weyl-group queries (see weyl.py)
        self.cache: dict = {}

    def _init_roots(self) -> None:
        # closure of the simple roots under the simple reflections
        seen: set[Weight] = set(self.simple_roots)
        queue = list(self.simple_roots)
        while queue:
            beta = queue.pop()
            for s in self.reflections:
                gamma = linalg.mat_vec(s, beta)
                if gamma not in seen:
                    seen.add(gamma)
                    queue.append(gamma)
        inv = linalg.invert(self.cartan)
        coords = {}
        positive = []
        for beta in seen:
            c = linalg.mat_vec(inv, beta)
            assert all(x.denominator == 1 for x in c)
            c = tuple(int(x) for x in c)
            coords[beta] = c
            if all(x >= 0 for x in c):
                positive.append(beta)
        positive.sort(key=lambda b: (sum(coords[b]), coords[b]))
        self.positive_roots: tuple[Weight, ...] = tuple(positive)
        self.positive_root_set: frozenset[Weight] = frozenset(positive)
        self.root_coords: dict[Weight, tuple[int, ...]] = coords

    def fundamental_weight(self, i: int) -> Weight:
        """Lambda_i as a coordinate vector (1-based i)."""
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    def __eq__(self, other):
        return (
            isinstance(other, RootDatum)
            and (self.lie_type, self.rank) == (other.lie_type, other.rank)
        )

    def __hash__(self):
        return hash((self.lie_type, self.rank))

    def __repr__(self):
        return f"RootDatum({self.lie_type}{self.rank})"


@lru_cache(maxsize=None)
def build_root_datum(lie_type: str, rank: int) -> RootDatum:
    """Construct (and cache) the datum for a simple type."""
    return RootDatum(lie_type, rank)


def pairing(lam: Weight, mu: Weight, datum: RootDatum) -> Fraction:
    """Exact value of the invariant bilinear form on two weights."""
    g = datum.gram
    total = Fraction(0)
    for i, x in enumerate(lam):
        if x:
            row = g[i]
            total += x * sum(row[j] * y for j, y in enumerate(mu) if y)
    return total


def reflect(i: int, lam: Weight, datum: RootDatum) -> Weight:
    """Simple reflection: sigma_i(lam) = lam - lam_i * alpha_i (1-based i)."""
    c = lam[i - 1]
    if c == 0:
        return tuple(lam)
    alpha = datum.simple_roots[i - 1]
    return tuple(x - c * a for x, a in zip(lam, alpha))


def root_support(beta: Weight, datum: RootDatum) -> frozenset[int]:
    """1-based set of simple roots appearing in a root."""
    return frozenset(
        i + 1 for i, c in enumerate(datum.root_coords[beta]) if c != 0
    )
