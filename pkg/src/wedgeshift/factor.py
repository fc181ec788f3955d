"""Linear-factor and annihilator analysis in the exterior algebra.

A grade-one element a is a linear factor of v exactly when a wedge v
vanishes, so factor spaces are kernels of explicit multiplication matrices
and cofactors are recovered constructively by a change of basis.  On top of
that sit the common annihilator of a subspace, the complement-pair
construction of a factor-free self-annihilating space of maximal dimension,
and a desk-scale probe tabulating annihilator dimensions of large families.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from .errors import FalsificationError, HomogeneityError
from .exterior import LinearMap, Multivector, apply_linear, wedge
from .families import DEFAULT_BUDGET, enumerate_families, is_star
from .ekr import hm_bound, self_annihilating
from .subspace import MonomialOrder, Subspace, _nullspace, _support_index, span


def _grade_one_space(n: int, vectors) -> Subspace:
    return Subspace(MonomialOrder("lex", n, 1), list(vectors))


def linear_factors(v: Multivector) -> Subspace:
    """Grade-one kernel of wedging with v: the space of linear factors of v.

    For nonzero homogeneous v of grade k this is the nullspace of the map
    a -> a wedge v into grade k+1; its dimension is at most k, with equality
    exactly when v is a wedge of grade-one elements."""
    if v.is_zero:
        raise ValueError("zero multivector: every grade-one element is a factor")
    if not v.is_homogeneous:
        raise HomogeneityError("linear factors need a homogeneous multivector")
    n, k = v.n, v.grade
    if k == n:
        return _grade_one_space(n, [Multivector.basis(n, i) for i in range(1, n + 1)])
    images = [wedge(Multivector.basis(n, i), v) for i in range(1, n + 1)]
    index = _support_index("lex", n, k + 1)
    matrix = [[Fraction(0)] * n for _ in range(len(index))]
    for col, img in enumerate(images):
        for sup, c in img.terms.items():
            matrix[index[sup]][col] = c
    kernel = _nullspace(matrix, n)
    vectors = [
        Multivector(n, {(i + 1,): c for i, c in enumerate(vec) if c}) for vec in kernel
    ]
    return _grade_one_space(n, vectors)


def extract_cofactor(v: Multivector, a: Multivector) -> Multivector:
    """Constructive factorization: returns w with a wedge w = v, given a wedge v = 0.

    The basis vector at a's first nonzero coordinate is swapped for a, every
    monomial of the transformed element must then carry that coordinate, and
    stripping it yields the cofactor back in the original basis."""
    if a.is_zero:
        raise ValueError("zero is not a valid factor")
    if a.grades() != frozenset({1}):
        raise HomogeneityError("factor must be homogeneous of grade one")
    if v.is_zero or not v.is_homogeneous:
        raise HomogeneityError("cofactor extraction needs nonzero homogeneous input")
    if not wedge(a, v).is_zero:
        raise ValueError("not a factor: a wedge v is nonzero")
    p = min(s[0] for s in a.terms)
    entries = [
        [Fraction(1) if r == c else Fraction(0) for c in range(v.n)] for r in range(v.n)
    ]
    for sup, c in a.terms.items():
        entries[sup[0] - 1][p - 1] = c
    g = LinearMap(entries)
    u = apply_linear(g.inverse(), v)
    stripped: dict[tuple[int, ...], Fraction] = {}
    for sup, c in u.terms.items():
        if p not in sup:
            raise FalsificationError("transformed element escaped the factor coordinate")
        rest = tuple(x for x in sup if x != p)
        sign = -1 if sum(1 for x in rest if x < p) % 2 else 1
        stripped[rest] = sign * c
    w = apply_linear(g, Multivector(v.n, stripped))
    if wedge(a, w) != v:
        raise FalsificationError("cofactor failed to wedge back to the input")
    return w


def common_annihilator(V: Subspace) -> Subspace:
    """Grade-one elements wedging every canonical row to zero.

    Equals the space of common linear factors of V; the zero subspace is
    annihilated by everything."""
    n, k = V.n, V.k
    if V.dim == 0 or k == n:
        return _grade_one_space(n, [Multivector.basis(n, i) for i in range(1, n + 1)])
    index = _support_index("lex", n, k + 1)
    rows: list[list[Fraction]] = []
    for r in V.rows:
        block = [[Fraction(0)] * n for _ in range(len(index))]
        for col in range(1, n + 1):
            img = wedge(Multivector.basis(n, col), r)
            for sup, c in img.terms.items():
                block[index[sup]][col - 1] = c
        rows.extend(block)
    kernel = _nullspace(rows, n)
    vectors = [
        Multivector(n, {(i + 1,): c for i, c in enumerate(vec) if c}) for vec in kernel
    ]
    return _grade_one_space(n, vectors)


@dataclass
class FactorReport:
    """Factor-space summary for one multivector."""

    identifier: str
    factor_space: Subspace
    factor_dim: int
    decomposable: bool
    cofactors: tuple[Multivector, ...]

    def record(self) -> dict:
        return {
            "identifier": self.identifier,
            "factor_dim": self.factor_dim,
            "decomposable": self.decomposable,
            "factors": [str(r) for r in self.factor_space.rows],
            "cofactors": [str(w) for w in self.cofactors],
        }


def factor_report(v: Multivector, identifier: str = "") -> FactorReport:
    """Assemble the factor space of v with one cofactor witness per basis factor."""
    space = linear_factors(v)
    cofactors = tuple(extract_cofactor(v, a) for a in space.rows)
    return FactorReport(
        identifier=identifier or str(v),
        factor_space=space,
        factor_dim=space.dim,
        decomposable=space.dim == v.grade,
        cofactors=cofactors,
    )


def complement_pair_space(k: int) -> Subspace:
    """Self-annihilating span of monomial-plus-complement pairs on 2k indices.

    For odd k >= 3 the k-sets containing 1 pair with their complements; the
    span has the maximal dimension C(2k-1, k-1), yet no spanning element has
    any linear factor and the common annihilator is zero.  The construction
    re-verifies all four guarantees before returning."""
    if k < 3 or k % 2 == 0:
        raise ValueError(f"construction needs odd k >= 3, got {k}")
    n = 2 * k
    ground = set(range(1, n + 1))
    rows = []
    for combo in itertools.combinations(range(2, n + 1), k - 1):
        a = tuple(sorted((1,) + combo))
        ac = tuple(sorted(ground - set(a)))
        rows.append(Multivector(n, {a: 1, ac: 1}))
    V = span(rows, MonomialOrder("lex", n, k))
    if V.dim != comb(n - 1, k - 1):
        raise FalsificationError(f"complement-pair span has dimension {V.dim}")
    if not self_annihilating(V):
        raise FalsificationError("complement-pair span is not self-annihilating")
    for r in rows:
        if linear_factors(r).dim != 0:
            raise FalsificationError(f"spanning element {r} has a linear factor")
    if common_annihilator(V).dim != 0:
        raise FalsificationError("complement-pair span has a nonzero common annihilator")
    return V


def annihilator_probe(
    n: int,
    k: int,
    dim_floor: Optional[int] = None,
    budget: int = DEFAULT_BUDGET,
    rng: Optional[random.Random] = None,
    transforms: int = 1,
) -> list[dict]:
    """Tabulate common-annihilator dimensions over large shifted intersecting
    families and sampled invertible upper-triangular images of their spans.

    When n = 2k with k odd the complement-pair space is appended, the known
    factor-free example at that size.  This gathers evidence only; it decides
    nothing."""
    from .sampling import random_upper_triangular  # local import to keep layering flat

    if not (2 <= k and 2 * k <= n):
        raise ValueError(f"probe needs 2 <= k <= n/2, got n={n}, k={k}")
    floor = hm_bound(n, k) if dim_floor is None else dim_floor
    rng = rng or random.Random(0)
    order = MonomialOrder("lex", n, k)
    rows: list[dict] = []

    def add_rows(label, V: Subspace, star: bool) -> None:
        rows.append(
            {
                "family": label,
                "size": V.dim,
                "star": star,
                "annihilator_dim": common_annihilator(V).dim,
                "transformed": False,
            }
        )
        for _ in range(transforms):
            g = random_upper_triangular(rng, n)
            image = V.apply_map(lambda x: apply_linear(g, x))
            rows.append(
                {
                    "family": label,
                    "size": image.dim,
                    "star": star,
                    "annihilator_dim": common_annihilator(image).dim,
                    "transformed": True,
                }
            )

    for fam in enumerate_families(n, k, "shifted_intersecting", budget=budget):
        if fam.size <= floor:
            continue
        V = Subspace(order, [Multivector.monomial(n, s) for s in fam.sets])
        add_rows([list(s) for s in fam.sets], V, is_star(fam) is not None)
    if n == 2 * k and k % 2 == 1 and k >= 3:
        add_rows(f"complement-pairs(k={k})", complement_pair_space(k), False)
    return rows
