"""Shear limits, initial degenerations, fixed-point drives, and their oracles."""

import pytest

from wedgeshift import (
    IterationLimitError,
    LinearMap,
    MonomialOrder,
    Multivector,
    SetFamily,
    ShiftPair,
    apply_linear,
    apply_shear,
    combinatorial_shift,
    decreasing_pairs,
    initial_subspace,
    is_shifted,
    limit_shift,
    pluecker_limit,
    self_annihilating,
    shift_map,
    span,
    triangular_fixed_point,
)
from wedgeshift.sampling import (
    random_intersecting_family,
    random_subspace,
    random_upper_triangular,
)


def monomial_span(n, k, sets, kind="lex"):
    order = MonomialOrder(kind, n, k)
    return span([Multivector.monomial(n, s) for s in sets], order) if sets else span([], order)


def all_pairs(n):
    return [ShiftPair(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]


class TestShiftMap:
    def test_moves_index(self, mv):
        assert shift_map(mv(3, "e2^e3"), ShiftPair(2, 1)) == mv(3, "e1^e3")

    def test_kills_when_target_present(self, mv):
        assert shift_map(mv(3, "e1^e2"), ShiftPair(2, 1)).is_zero

    def test_kills_without_source(self, mv):
        assert shift_map(mv(4, "e3^e4"), ShiftPair(2, 1)).is_zero

    def test_nilpotent(self, rng):
        from wedgeshift.sampling import random_multivector

        for _ in range(20):
            x = random_multivector(rng, 5, 2)
            p = ShiftPair(3, 1)
            assert shift_map(shift_map(x, p), p).is_zero

    def test_kernel_contains_rows_away_from_source(self, mv):
        # members supported away from i are killed
        V = span([mv(4, "e1^e3 + e3^e4")])
        assert shift_map(V.rows[0], ShiftPair(2, 1)).is_zero


class TestLimitShift:
    def test_plain_move(self, mv):
        V = span([mv(3, "e2^e3")])
        assert limit_shift(V, ShiftPair(2, 1)) == span([mv(3, "e1^e3")])

    def test_fixed_when_image_inside(self, mv):
        V = span([mv(3, "e2^e3"), mv(3, "e1^e3")])
        assert limit_shift(V, ShiftPair(2, 1)) == V

    def test_fixed_kernel_case(self, mv):
        V = span([mv(3, "e1^e2")])
        assert limit_shift(V, ShiftPair(2, 1)) == V

    def test_dimension_preserved(self, rng):
        order = MonomialOrder("lex", 4, 2)
        for _ in range(25):
            V = random_subspace(rng, order, rng.randint(1, 3))
            for p in all_pairs(4):
                assert limit_shift(V, p).dim == V.dim

    def test_idempotent(self, rng):
        order = MonomialOrder("lex", 4, 2)
        for _ in range(15):
            V = random_subspace(rng, order, rng.randint(1, 3))
            for p in all_pairs(4):
                W = limit_shift(V, p)
                assert limit_shift(W, p) == W

    def test_monomial_compatibility_random(self, rng):
        for _ in range(20):
            F = random_intersecting_family(rng, 5, 2)
            V = monomial_span(5, 2, F.sets)
            for p in all_pairs(5):
                assert limit_shift(V, p).monomial_basis() == combinatorial_shift(F, p)

    def test_self_annihilation_closed(self, rng):
        for _ in range(10):
            F = random_intersecting_family(rng, 5, 2)
            g = random_upper_triangular(rng, 5)
            V = monomial_span(5, 2, F.sets).apply_map(lambda x: apply_linear(g, x))
            assert self_annihilating(V)
            for p in decreasing_pairs(5):
                assert self_annihilating(limit_shift(V, p))
            assert self_annihilating(initial_subspace(V))


class TestCombinatorialShift:
    def test_moves(self):
        F = SetFamily(3, 2, ((2, 3),))
        assert combinatorial_shift(F, ShiftPair(2, 1)).sets == ((1, 3),)

    def test_blocked_by_present_target(self):
        F = SetFamily(3, 2, ((2, 3), (1, 3)))
        assert combinatorial_shift(F, ShiftPair(2, 1)) == F

    def test_target_inside_set(self):
        F = SetFamily(3, 2, ((1, 2),))
        assert combinatorial_shift(F, ShiftPair(2, 1)) == F

    def test_size_preserved(self, rng):
        for _ in range(20):
            F = random_intersecting_family(rng, 5, 2)
            for p in all_pairs(5):
                assert combinatorial_shift(F, p).size == F.size


class TestIsShifted:
    def test_examples(self):
        assert is_shifted(SetFamily(3, 2, ((1, 2), (1, 3))))
        assert not is_shifted(SetFamily(3, 2, ((2, 3),)))
        assert is_shifted(SetFamily(3, 2, ()))


class TestInitialSubspace:
    def test_monomial_fixed(self, mv):
        V = monomial_span(4, 2, [(1, 2), (3, 4)])
        assert initial_subspace(V) == V

    def test_lex_earliest_pivot(self, mv):
        assert initial_subspace(span([mv(3, "e1^e2 + e2^e3")])) == span([mv(3, "e1^e2")])

    def test_cancellation_reveals_monomials(self, mv):
        V = span([mv(4, "e1^e2 + e3^e4"), mv(4, "e1^e2 - e3^e4")])
        assert initial_subspace(V) == monomial_span(4, 2, [(1, 2), (3, 4)])

    def test_dimension_preserved(self, rng):
        for kind in ("lex", "weight2"):
            order = MonomialOrder(kind, 4, 2)
            for _ in range(15):
                V = random_subspace(rng, order, rng.randint(1, 3))
                W = initial_subspace(V)
                assert W.dim == V.dim
                assert W.monomial_basis() is not None

    def test_initial_oracle_via_pluecker(self, rng):
        # earliest nonvanishing Pluecker coordinate indexes the initial monomials
        for kind in ("lex", "weight2"):
            order = MonomialOrder(kind, 5, 2)
            for _ in range(15):
                V = random_subspace(rng, order, rng.randint(1, 3))
                lead = V.pluecker().leading
                assert set(lead) == set(initial_subspace(V).pivots())


class TestWeightDiagonalOrder:
    def test_weight_diagonal_matches_weight2_order(self, mv):
        # {1,4} is lex-earliest but carries the smaller diagonal weight than {2,3}:
        # the literal matrix action converges onto the weight2 pivot.
        v = mv(4, "e1^e4 + e2^e3")
        lex_init = initial_subspace(span([v], MonomialOrder("lex", 4, 2)))
        w2_init = initial_subspace(span([v], MonomialOrder("weight2", 4, 2)))
        assert lex_init.rows == (mv(4, "e1^e4"),)
        assert w2_init.rows == (mv(4, "e2^e3"),)
        for t in (2, 3):
            img = apply_linear(LinearMap.weight_diagonal(4, t), v)
            rescaled = img.scale(t ** (2 ** 2 + 2 ** 3))  # clear the {2,3} weight
            assert rescaled.coefficient((2, 3)) == 1
            assert abs(rescaled.coefficient((1, 4))) < 1
        # and the dominant coefficient shrinks as t grows: the limit is the weight2 pivot
        small = apply_linear(LinearMap.weight_diagonal(4, 2), v).scale(2 ** 12)
        big = apply_linear(LinearMap.weight_diagonal(4, 4), v).scale(4 ** 12)
        assert abs(big.coefficient((1, 4))) < abs(small.coefficient((1, 4)))


class TestApplyShear:
    def test_finite_parameter(self, mv):
        V = span([mv(3, "e2^e3")])
        assert apply_shear(V, ShiftPair(2, 1), 5) == span([mv(3, "e2^e3 + 5*e1^e3")])

    def test_zero_parameter(self, rng):
        order = MonomialOrder("lex", 4, 2)
        V = random_subspace(rng, order, 2)
        assert apply_shear(V, ShiftPair(2, 1), 0) == V

    def test_fixed_case(self, mv):
        V = span([mv(3, "e1^e2")])
        for t in (1, 2, 7):
            assert apply_shear(V, ShiftPair(2, 1), t) == V


class TestPlueckerLimit:
    def test_single_row(self, mv):
        V = span([mv(3, "e2^e3")])
        P = pluecker_limit(V, ShiftPair(2, 1))
        assert P.items == ((((1, 3),), 1),)
        assert P == limit_shift(V, ShiftPair(2, 1)).pluecker()

    def test_monomial_fixed(self, mv):
        V = span([mv(3, "e1^e2")])
        assert pluecker_limit(V, ShiftPair(2, 1)) == V.pluecker()

    def test_two_row_fixed(self, mv):
        V = span([mv(3, "e2^e3"), mv(3, "e1^e3")])
        assert pluecker_limit(V, ShiftPair(2, 1)) == V.pluecker()

    def test_oracle_equivalence_random(self, rng):
        order = MonomialOrder("lex", 4, 2)
        for _ in range(20):
            V = random_subspace(rng, order, rng.randint(1, 3))
            for p in all_pairs(4):
                assert pluecker_limit(V, p) == limit_shift(V, p).pluecker()

    def test_oracle_equivalence_exhaustive_tiny(self):
        import itertools

        pool = list(itertools.combinations(range(1, 4), 2))
        for r in range(1, len(pool) + 1):
            for sets in itertools.combinations(pool, r):
                V = monomial_span(3, 2, list(sets))
                for p in all_pairs(3):
                    assert pluecker_limit(V, p) == limit_shift(V, p).pluecker()


class TestTriangularFixedPoint:
    def test_star_at_two(self):
        V = monomial_span(4, 2, [(2, 3), (2, 4), (1, 2)])
        for route in ("iterate", "init-then-shift"):
            W, trace = triangular_fixed_point(V, route=route)
            assert W.monomial_basis() == SetFamily(4, 2, ((1, 2), (1, 3), (1, 4)))
            assert trace

    def test_already_shifted_empty_trace(self):
        V = monomial_span(4, 2, [(1, 2), (1, 3)])
        for route in ("iterate", "init-then-shift"):
            W, trace = triangular_fixed_point(V, route=route)
            assert W == V and trace == []

    def test_tail_killed_by_either_route(self, mv):
        V = span([mv(3, "e1^e2 + e2^e3")])
        for route in ("iterate", "init-then-shift"):
            W, _ = triangular_fixed_point(V, route=route)
            assert W == span([mv(3, "e1^e2")])

    def test_endpoint_fixed_by_everything(self, rng):
        for _ in range(8):
            F = random_intersecting_family(rng, 5, 2)
            g = random_upper_triangular(rng, 5)
            V = monomial_span(5, 2, F.sets).apply_map(lambda x: apply_linear(g, x))
            W, trace = triangular_fixed_point(V, route="iterate")
            fam = W.monomial_basis()
            assert fam is not None and is_shifted(fam)
            for p in decreasing_pairs(5):
                assert limit_shift(W, p) == W
            for _ in range(5):
                h = random_upper_triangular(rng, 5)
                assert W.apply_map(lambda x: apply_linear(h, x)) == W
            for st in trace:
                assert st.dim == V.dim

    def test_round_cap(self):
        V = monomial_span(4, 2, [(2, 3), (2, 4)])
        with pytest.raises(IterationLimitError):
            triangular_fixed_point(V, route="iterate", max_rounds=0)

    def test_bad_route(self):
        V = monomial_span(4, 2, [(1, 2)])
        with pytest.raises(ValueError):
            triangular_fixed_point(V, route="sideways")

    def test_trace_records(self):
        V = monomial_span(4, 2, [(2, 3), (2, 4), (1, 2)])
        _, trace = triangular_fixed_point(V, route="iterate")
        for st in trace:
            rec = st.record()
            assert set(rec) == {"step", "kind", "pair", "dim", "monomial", "shifted"}
            assert rec["kind"] in {"limit_shift", "comb_shift", "init"}
