"""Seeded generators for random exact test objects.

Numerators are drawn from [-9, 9] and denominators from [1, 9], keeping all
downstream arithmetic small and exact; every generator is deterministic in
the provided random.Random instance.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .exterior import LinearMap, Multivector
from .families import SetFamily
from .subspace import MonomialOrder, Subspace


def random_rational(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if c != 0 or not nonzero:
            return c


def random_multivector(
    rng: random.Random, n: int, k: int, density: float = 0.5, nonzero: bool = True
) -> Multivector:
    supports = list(itertools.combinations(range(1, n + 1), k))
    terms = {}
    for s in supports:
        if rng.random() < density:
            c = random_rational(rng)
            if c:
                terms[s] = c
    if nonzero and not terms:
        terms[rng.choice(supports)] = random_rational(rng, nonzero=True)
    return Multivector(n, terms)


def random_subspace(
    rng: random.Random, order: MonomialOrder, m: int, attempts: int = 100
) -> Subspace:
    """Span of m random multivectors, resampled until the dimension is exactly m."""
    for _ in range(attempts):
        vecs = [random_multivector(rng, order.n, order.k) for _ in range(m)]
        V = Subspace(order, vecs)
        if V.dim == m:
            return V
    raise RuntimeError(f"failed to sample a {m}-dimensional subspace")


def random_upper_triangular(rng: random.Random, n: int) -> LinearMap:
    """Invertible upper-triangular map with random small rational entries."""
    rows = []
    for r in range(n):
        row = [Fraction(0)] * n
        row[r] = random_rational(rng, nonzero=True)
        for c in range(r + 1, n):
            row[c] = random_rational(rng)
        rows.append(row)
    return LinearMap(rows)


def random_diagonal_invertible(rng: random.Random, n: int) -> LinearMap:
    return LinearMap.diagonal([random_rational(rng, nonzero=True) for _ in range(n)])


def random_invertible(rng: random.Random, n: int, attempts: int = 100) -> LinearMap:
    for _ in range(attempts):
        g = LinearMap([[random_rational(rng) for _ in range(n)] for _ in range(n)])
        if g.is_invertible:
            return g
    raise RuntimeError("failed to sample an invertible map")


def random_intersecting_family(
    rng: random.Random, n: int, k: int, max_size: int | None = None
) -> SetFamily:
    """Greedy random intersecting family of k-subsets of [n]; never empty."""
    pool = list(itertools.combinations(range(1, n + 1), k))
    rng.shuffle(pool)
    target = max_size or rng.randint(1, len(pool))
    chosen: list[tuple[int, ...]] = []
    for s in pool:
        if len(chosen) >= target:
            break
        if all(set(s).intersection(t) for t in chosen):
            chosen.append(s)
    return SetFamily(n, k, tuple(chosen))
