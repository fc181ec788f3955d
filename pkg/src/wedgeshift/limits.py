"""Symbolic limits of one-parameter matrix actions on subspaces.

The limit of the shear family that replaces basis index i by j is computed in
closed form (image of the index-replacement map plus the part of the space
whose image falls back inside it); the limit of the doubly exponential
diagonal family is the span of the pivot monomials.  A round-robin drive
composes the shear limits (or, after an initial-monomial degeneration,
combinatorial shifts of the support family) until the result is fixed by
every decreasing pair.  An independent oracle recomputes shear limits through
Plücker coordinates with polynomial entries.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional, Union

from .errors import BudgetExceededError, FalsificationError, IterationLimitError
from .exterior import LinearMap, Multivector, Rational, apply_linear
from .families import ShiftPair, combinatorial_shift, is_shifted
from .poly import Poly
from .subspace import PlueckerVector, Subspace, _nullspace, span

PairLike = Union[ShiftPair, tuple[int, int]]


def _as_pair(pair: PairLike, n: int) -> ShiftPair:
    p = pair if isinstance(pair, ShiftPair) else ShiftPair(*pair)
    if p.i > n or p.j > n:
        raise ValueError(f"shift pair ({p.i}, {p.j}) out of range for ground dimension {n}")
    return p


def shift_map(x: Multivector, pair: PairLike) -> Multivector:
    """Linear map sending each monomial with factor e_i to the same monomial with
    e_i replaced by e_j (zero when j is already a factor), and every monomial
    without i to zero.  Applying it twice gives zero."""
    p = _as_pair(pair, x.n)
    i, j = p.i, p.j
    acc: dict[tuple[int, ...], Fraction] = {}
    for sup, c in x.terms.items():
        if i not in sup or j in sup:
            continue
        rest = tuple(a for a in sup if a != i)
        eps = -1 if sup.index(i) % 2 else 1
        sig = -1 if sum(1 for a in rest if a < j) % 2 else 1
        target = tuple(sorted(rest + (j,)))
        v = acc.get(target, Fraction(0)) + eps * sig * c
        if v == 0:
            acc.pop(target, None)
        else:
            acc[target] = v
    return Multivector(x.n, acc)


def limit_shift(V: Subspace, pair: PairLike) -> Subspace:
    """Limit of the shear action replacing index i by j, as the parameter grows
    without bound: the image of the replacement map plus the members of V whose
    image lands back in V.  Dimension is preserved; the result is idempotent
    under the same pair."""
    p = _as_pair(pair, V.n)
    images = [shift_map(r, p) for r in V.rows]
    phi_V = Subspace(V.order, images)
    # the image of any member lies in phi(V), so membership in V is the whole test
    cols = [V._vectorize(img) for img in images] + [V._vectorize(r) for r in V.rows]
    members = list(phi_V.rows)
    if cols:
        ncols = len(cols)
        nrows = len(cols[0])
        matrix = [[cols[c][r] for c in range(ncols)] for r in range(nrows)]
        for vec in _nullspace(matrix, ncols):
            acc = Multivector.zero(V.n)
            for coeff, row in zip(vec[: V.dim], V.rows):
                if coeff:
                    acc = acc + row.scale(coeff)
            members.append(acc)
    out = Subspace(V.order, members)
    if out.dim != V.dim:
        raise FalsificationError(
            f"shear limit changed dimension: {V.dim} -> {out.dim} at pair ({p.i}, {p.j})"
        )
    return out


def initial_subspace(V: Subspace) -> Subspace:
    """Span of the pivot monomials of the canonical rows: the limit of the
    weight-diagonal action under V's own coordinate order.  Always a monomial
    subspace of the same dimension."""
    rows = [Multivector.monomial(V.n, piv) for piv in V.pivots()]
    return Subspace(V.order, rows)


def apply_shear(V: Subspace, pair: PairLike, t: Rational) -> Subspace:
    """Exact image of V under the shear with a concrete rational parameter."""
    p = _as_pair(pair, V.n)
    g = LinearMap.shear(V.n, p.i, p.j, t)
    return V.apply_map(lambda x: apply_linear(g, x))


def _det_poly(matrix: list[list[Poly]]) -> Poly:
    """Division-free determinant by column expansion with memoization."""
    m = len(matrix)

    memo: dict[tuple[int, tuple[int, ...]], Poly] = {}

    def minor(r: int, cols: tuple[int, ...]) -> Poly:
        if not cols:
            return Poly([1])
        key = (r, cols)
        got = memo.get(key)
        if got is not None:
            return got
        acc = Poly()
        for idx, c in enumerate(cols):
            a = matrix[r][c]
            if a.is_zero:
                continue
            sub = minor(r + 1, cols[:idx] + cols[idx + 1:])
            term = a * sub
            acc = acc + (term if idx % 2 == 0 else -term)
        memo[key] = acc
        return acc

    return minor(0, tuple(range(m)))


def pluecker_limit(V: Subspace, pair: PairLike) -> PlueckerVector:
    """Projective limit of the Plücker vector of the sheared subspace.

    Each canonical row picks up the parameter times its replacement image, the
    maximal minors become polynomials, and the coefficient vector of the top
    degree present is the limit point.  Must agree with the Plücker vector of
    limit_shift projectively."""
    p = _as_pair(pair, V.n)
    m = V.dim
    if m == 0:
        raise ValueError("zero subspace has no Pluecker vector")
    supports = V.order.supports()
    base = [V._vectorize(r) for r in V.rows]
    moved = [V._vectorize(shift_map(r, p)) for r in V.rows]
    ncoords = comb(len(supports), m)
    if ncoords > 1_000_000:
        raise BudgetExceededError(f"Pluecker oracle would need {ncoords} coordinates")
    poly_rows = [
        [Poly([base[r][c], moved[r][c]]) for c in range(len(supports))] for r in range(m)
    ]
    minors: list[tuple[tuple, Poly]] = []
    top = -1
    for positions in itertools.combinations(range(len(supports)), m):
        d = _det_poly([[poly_rows[r][c] for c in positions] for r in range(m)])
        if not d.is_zero:
            minors.append((tuple(supports[c] for c in positions), d))
            top = max(top, d.degree)
    items = [
        (key, d.coefficient(top)) for key, d in minors if d.coefficient(top) != 0
    ]
    lead = items[0][1]
    return PlueckerVector(m, V.order, tuple((k, v / lead) for k, v in items))


@dataclass(frozen=True)
class TraceStep:
    """One applied step of a fixed-point drive, with the state it produced."""

    step: int
    kind: str  # "limit_shift" | "comb_shift" | "init"
    pair: Optional[tuple[int, int]]
    dim: int
    monomial: bool
    shifted: bool
    state: Subspace = field(compare=False, repr=False)

    def record(self) -> dict:
        return {
            "step": self.step,
            "kind": self.kind,
            "pair": list(self.pair) if self.pair else None,
            "dim": self.dim,
            "monomial": self.monomial,
            "shifted": self.shifted,
        }


def decreasing_pairs(n: int) -> list[ShiftPair]:
    """All pairs (i, j) with i > j, ordered lexicographically by (j, i)."""
    return [ShiftPair(i, j) for j in range(1, n) for i in range(j + 1, n + 1)]


def _status(V: Subspace) -> tuple[bool, bool]:
    fam = V.monomial_basis()
    if fam is None:
        return False, False
    return True, is_shifted(fam)


ROUTES = ("iterate", "init-then-shift")


def triangular_fixed_point(
    V: Subspace,
    route: str = "init-then-shift",
    max_rounds: Optional[int] = None,
) -> tuple[Subspace, list[TraceStep]]:
    """Drive V to a subspace fixed by every decreasing shear limit.

    Route ``iterate`` round-robins limit_shift over all pairs i > j until a
    full round applies no change; the round cap (default 10*n^2) turns a
    runaway drive into IterationLimitError instead of a loop.  Route
    ``init-then-shift`` first degenerates to the initial monomial subspace and
    then shifts the support family until it is shifted, which always
    terminates.  Either way the result has a monomial basis whose support
    family is shifted, and the trace lists every applied step."""
    if route not in ROUTES:
        raise ValueError(f"unknown route {route!r}")
    n = V.n
    pairs = decreasing_pairs(n)
    steps: list[TraceStep] = []

    if route == "iterate":
        cap = 10 * n * n if max_rounds is None else max_rounds
        current = V
        converged = False
        for _ in range(cap):
            changed = False
            for p in pairs:
                moved = limit_shift(current, p)
                if moved != current:
                    current = moved
                    changed = True
                    mono, shif = _status(current)
                    steps.append(
                        TraceStep(len(steps), "limit_shift", (p.i, p.j), current.dim, mono, shif, current)
                    )
            if not changed:
                converged = True
                break
        if not converged:
            raise IterationLimitError(
                f"no fixed point after {cap} round-robin rounds ({len(steps)} applied steps)"
            )
        mono, shif = _status(current)
        if not mono:
            raise FalsificationError("fixed point of all decreasing shears lacks a monomial basis")
        if not shif:
            raise FalsificationError("fixed point of all decreasing shears is not shifted")
        return current, steps

    current = initial_subspace(V)
    if current != V:
        mono, shif = _status(current)
        steps.append(TraceStep(0, "init", None, current.dim, mono, shif, current))
    fam = current.monomial_basis()
    if fam is None:
        raise FalsificationError("initial-monomial degeneration is not monomial")
    while True:
        changed = False
        for p in pairs:
            moved = combinatorial_shift(fam, p)
            if moved != fam:
                fam = moved
                changed = True
                state = span(
                    [Multivector.monomial(V.n, s) for s in fam.sets], V.order
                ) if fam.size else Subspace(V.order)
                steps.append(
                    TraceStep(len(steps), "comb_shift", (p.i, p.j), state.dim, True, is_shifted(fam), state)
                )
        if not changed:
            break
    final = span([Multivector.monomial(V.n, s) for s in fam.sets], V.order) if fam.size else Subspace(V.order)
    if final.dim != V.dim:
        raise FalsificationError(f"fixed-point drive changed dimension: {V.dim} -> {final.dim}")
    return final, steps
