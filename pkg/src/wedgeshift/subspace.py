"""Canonical subspaces of a fixed graded component, plus the Plücker embedding.

A subspace is stored as the reduced echelon basis of its row space with
respect to an explicit ordering of the monomial coordinates, so subspace
equality is literal equality of canonical rows.  Two coordinate orders are
available: ``lex`` compares supports as sorted index sequences, and
``weight2`` orders supports by increasing binary weight (the sum of 2^i over
the support), which is what a diagonal action with doubly exponential
parameter weights separates.  The two differ: {1,4} precedes {2,3} in lex
but has the larger binary weight (18 against 12).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Iterable, Optional, Sequence

from .errors import BudgetExceededError, GroundMismatchError, HomogeneityError
from .exterior import Multivector, Support
from .families import SetFamily

ORDER_KINDS = ("lex", "weight2")

_PLUECKER_CAP = 1_000_000


@lru_cache(maxsize=None)
def _ordered_supports(kind: str, n: int, k: int) -> tuple[Support, ...]:
    subs = itertools.combinations(range(1, n + 1), k)
    if kind == "lex":
        return tuple(subs)
    return tuple(sorted(subs, key=lambda s: sum(1 << i for i in s)))


@lru_cache(maxsize=None)
def _support_index(kind: str, n: int, k: int) -> dict[Support, int]:
    return {s: i for i, s in enumerate(_ordered_supports(kind, n, k))}


@dataclass(frozen=True)
class MonomialOrder:
    """Total order on the grade-k monomial coordinates over ground dimension n."""

    kind: str
    n: int
    k: int

    def __post_init__(self) -> None:
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if not (1 <= self.n) or not (0 <= self.k <= self.n):
            raise ValueError(f"bad order parameters n={self.n}, k={self.k}")

    def supports(self) -> tuple[Support, ...]:
        return _ordered_supports(self.kind, self.n, self.k)

    def index(self, support: Sequence[int]) -> int:
        return _support_index(self.kind, self.n, self.k)[tuple(support)]

    def key(self, support: Sequence[int]):
        if self.kind == "lex":
            return tuple(support)
        return sum(1 << i for i in support)


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot column indices)."""
    if not rows:
        return [], []
    ncols = len(rows[0])
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        p = mat[r][c]
        mat[r] = [v / p for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def _nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : A x = 0} for the matrix with the given rows, in free-column order."""
    reduced, pivots = _rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            vec[p] = -row[f]
        basis.append(vec)
    return basis


def _det(mat: list[list[Fraction]]) -> Fraction:
    m = len(mat)
    work = [list(r) for r in mat]
    sign = 1
    out = Fraction(1)
    for col in range(m):
        piv = next((r for r in range(col, m) if work[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            work[col], work[piv] = work[piv], work[col]
            sign = -sign
        p = work[col][col]
        out *= p
        for r in range(col + 1, m):
            f = work[r][col] / p
            if f:
                for c in range(col, m):
                    work[r][c] -= f * work[col][c]
    return sign * out


@dataclass(frozen=True)
class PlueckerVector:
    """Projective vector of maximal minors: nonzero coordinates in coordinate
    order, scaled so the first one is 1.  Keys are tuples of monomial supports."""

    m: int
    order: MonomialOrder
    items: tuple[tuple[tuple[Support, ...], Fraction], ...]

    @property
    def leading(self) -> tuple[Support, ...]:
        """Order-earliest nonvanishing coordinate."""
        return self.items[0][0]

    def coordinate(self, key: Sequence[Sequence[int]]) -> Fraction:
        wanted = tuple(tuple(s) for s in key)
        for k, v in self.items:
            if k == wanted:
                return v
        return Fraction(0)


class Subspace:
    """Row space in reduced echelon form over an explicit monomial order.

    Construction re-canonicalizes any spanning set, so equal subspaces are
    structurally equal; pivot monomials are the order-earliest supports of
    the canonical rows.
    """

    __slots__ = ("order", "rows", "_pivots")

    def __init__(self, order: MonomialOrder, vectors: Iterable[Multivector] = ()):
        vecs = list(vectors)
        for v in vecs:
            if v.n != order.n:
                raise GroundMismatchError(
                    f"vector over ground dimension {v.n}, order expects {order.n}"
                )
            if not v.is_homogeneous:
                raise HomogeneityError("spanning vectors must be homogeneous")
            if not v.is_zero and v.grade != order.k:
                raise HomogeneityError(
                    f"spanning vector of grade {v.grade}, order expects {order.k}"
                )
        supports = order.supports()
        index = _support_index(order.kind, order.n, order.k)
        coords = [
            [Fraction(0)] * len(supports) for _ in range(len(vecs))
        ]
        for r, v in enumerate(vecs):
            for sup, c in v.terms.items():
                coords[r][index[sup]] = c
        reduced, pivots = _rref(coords)
        self.order = order
        self.rows = tuple(
            Multivector(order.n, {supports[c]: val for c, val in enumerate(row) if val})
            for row in reduced
        )
        self._pivots = tuple(supports[c] for c in pivots)

    @property
    def n(self) -> int:
        return self.order.n

    @property
    def k(self) -> int:
        return self.order.k

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def is_zero(self) -> bool:
        return not self.rows

    def pivots(self) -> tuple[Support, ...]:
        """Pivot supports of the canonical rows, in coordinate order."""
        return self._pivots

    def _vectorize(self, x: Multivector) -> list[Fraction]:
        index = _support_index(self.order.kind, self.n, self.k)
        vec = [Fraction(0)] * len(index)
        for sup, c in x.terms.items():
            vec[index[sup]] = c
        return vec

    def _check_member_input(self, x: Multivector) -> None:
        if x.n != self.n:
            raise GroundMismatchError(f"ground dimensions differ: {x.n} vs {self.n}")
        if not x.is_homogeneous:
            raise HomogeneityError("membership needs a homogeneous multivector")
        if not x.is_zero and x.grade != self.k:
            raise GroundMismatchError(f"grade {x.grade} element against a grade-{self.k} subspace")

    def contains(self, x: Multivector) -> bool:
        """True iff x reduces to zero against the canonical rows."""
        self._check_member_input(x)
        residue = x
        for row, piv in zip(self.rows, self._pivots):
            c = residue.coefficient(piv)
            if c:
                residue = residue - row.scale(c)
        return residue.is_zero

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return Subspace(self.order, self.rows + other.rows)

    __add__ = sum

    def intersect(self, other: "Subspace") -> "Subspace":
        """Exact intersection via the kernel of the stacked spanning columns."""
        self._check_compatible(other)
        if self.is_zero or other.is_zero:
            return Subspace(self.order)
        cols = [self._vectorize(r) for r in self.rows] + [other._vectorize(r) for r in other.rows]
        ncols = len(cols)
        nrows = len(cols[0])
        matrix = [[cols[c][r] for c in range(ncols)] for r in range(nrows)]
        members = []
        for vec in _nullspace(matrix, ncols):
            acc = Multivector.zero(self.n)
            for coeff, row in zip(vec[: self.dim], self.rows):
                if coeff:
                    acc = acc + row.scale(coeff)
            members.append(acc)
        return Subspace(self.order, members)

    def _check_compatible(self, other: "Subspace") -> None:
        if self.order != other.order:
            raise GroundMismatchError(
                f"subspaces disagree: {self.order} vs {other.order}"
            )

    def apply_map(self, f: Callable[[Multivector], Multivector]) -> "Subspace":
        """Span of the images of the canonical rows under a grade-preserving linear map."""
        return Subspace(self.order, [f(r) for r in self.rows])

    def monomial_basis(self) -> Optional[SetFamily]:
        """Support family when every canonical row is a single monomial, else None."""
        sets = []
        for row in self.rows:
            terms = row.terms
            if len(terms) != 1:
                return None
            sets.append(next(iter(terms)))
        return SetFamily(self.n, self.k, tuple(sets))

    def pluecker(self) -> PlueckerVector:
        """All maximal minors of the canonical row matrix, projectively normalized.

        Coordinates are indexed by m-subsets of the monomial coordinates,
        walked in lexicographic position order; desk-scale sizes only.
        """
        m = self.dim
        if m == 0:
            raise ValueError("zero subspace has no Pluecker vector")
        supports = self.order.supports()
        ncoords = comb(len(supports), m)
        if ncoords > _PLUECKER_CAP:
            raise BudgetExceededError(
                f"Pluecker vector would have {ncoords} coordinates (cap {_PLUECKER_CAP})"
            )
        matrix = [self._vectorize(r) for r in self.rows]
        items: list[tuple[tuple[Support, ...], Fraction]] = []
        for positions in itertools.combinations(range(len(supports)), m):
            d = _det([[matrix[r][c] for c in positions] for r in range(m)])
            if d:
                items.append((tuple(supports[c] for c in positions), d))
        lead = items[0][1]
        return PlueckerVector(m, self.order, tuple((k, v / lead) for k, v in items))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subspace)
            and self.order == other.order
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.order, self.rows))

    def __repr__(self) -> str:
        basis = ", ".join(str(r) for r in self.rows)
        return f"Subspace(n={self.n}, k={self.k}, {self.order.kind}, [{basis}])"


def span(vectors: Iterable[Multivector], order: Optional[MonomialOrder] = None) -> Subspace:
    """Reduced echelon span; the order is inferred from the first nonzero vector
    (lex) when not supplied."""
    vecs = list(vectors)
    if order is None:
        probe = next((v for v in vecs if not v.is_zero), None)
        if probe is None:
            raise ValueError("monomial order required to span an empty set")
        if not probe.is_homogeneous:
            raise HomogeneityError("spanning vectors must be homogeneous")
        order = MonomialOrder("lex", probe.n, probe.grade)
    return Subspace(order, vecs)


def subspace_sum(V: Subspace, W: Subspace) -> Subspace:
    return V.sum(W)


def intersect(V: Subspace, W: Subspace) -> Subspace:
    return V.intersect(W)
