"""The Betti oracle: upper Koszul complexes, tables, pd/reg, closed forms."""

import random

import pytest

from neuralideals.betti import (
    NotDominantError,
    betti_table,
    dominant_check,
    dominant_invariants,
    euler_discrepancy,
    has_linear_resolution,
    invariants,
    reg_upper_bound_lcm,
    upper_koszul,
)
from neuralideals.homology import FieldTag
from neuralideals.monomials import (
    Monomial,
    UnitOrZeroIdealError,
    minimalize,
    parse_monomial,
    restrict,
    lcm_closure,
)
from neuralideals.structure import family_prop32, family_prop33, family_thm36
from neuralideals.verify import degree_n_universe, ideal_from_subset


def m(text, n):
    return parse_monomial(text, n)


def ideal(n, *texts):
    return minimalize([m(t, n) for t in texts], n)


class TestUpperKoszul:
    def test_principal_generator_gives_irrelevant(self):
        K = upper_koszul(ideal(1, "x1"), m("x1", 1))
        assert K.is_irrelevant

    def test_koszul_syzygy_two_vertices(self):
        K = upper_koszul(ideal(1, "x1", "y1"), m("x1*y1", 1))
        assert K.faces == frozenset({frozenset(), frozenset({0}), frozenset({1})})

    def test_void_when_outside_ideal(self):
        assert upper_koszul(ideal(2, "x1*y2"), m("x1", 2)).is_void

    def test_rejects_unit_and_zero(self):
        with pytest.raises(UnitOrZeroIdealError):
            upper_koszul(minimalize([], 1), m("x1", 1))
        with pytest.raises(UnitOrZeroIdealError):
            upper_koszul(ideal(1, "1"), m("x1", 1))


class TestBettiTable:
    def test_koszul_pair(self):
        t = betti_table(ideal(1, "x1", "y1"))
        assert t.coarse == {(0, 1): 2, (1, 2): 1}
        assert (t.pd, t.reg) == (1, 1)

    def test_two_generator_taylor(self):
        t = betti_table(ideal(2, "x1*y2", "y1*x2"))
        assert t.coarse == {(0, 2): 2, (1, 4): 1}
        assert (t.pd, t.reg) == (1, 3)

    def test_product_pairs_pd(self):
        assert invariants(family_thm36(2, 2).inner) == (2, 2)

    def test_beta0_recovers_mingens(self):
        I = ideal(3, "x1*y2", "y1*x2", "x3")
        t = betti_table(I)
        zero_row = {b: r for (i, b), r in t.fine.items() if i == 0}
        assert zero_row == {g.mask: 1 for g in I.gens}

    def test_fine_supported_on_lcm_closure(self):
        I = ideal(3, "x1*x2", "y1*x2", "x1*y3")
        closure = {c.mask for c in lcm_closure(I)}
        t = betti_table(I)
        assert {b for _, b in t.fine} <= closure

    def test_json_schema_fields(self):
        d = betti_table(ideal(1, "x1", "y1")).to_json_dict()
        assert set(d) == {"fine", "coarse", "pd", "reg"}
        assert d["fine"][0] == {"i": 0, "b": "x1", "rank": 1}


class TestInvariants:
    def test_simple_pair(self):
        assert invariants(ideal(1, "x1", "y1")) == (1, 1)

    def test_regularity_family_small(self):
        assert invariants(family_prop33(2, 1).inner)[1] == 2

    def test_pd_family_small(self):
        assert invariants(family_prop32(3, 2).inner)[0] == 1

    def test_fields_agree_on_examples(self):
        for I in [ideal(2, "x1*y2", "y1*x2"), family_thm36(3, 3).inner]:
            assert invariants(I, FieldTag.F2) == invariants(I, FieldTag.RATIONALS)


class TestLinearResolution:
    def test_scaled_pair_is_linear(self):
        assert has_linear_resolution(ideal(2, "x1*x2", "y1*x2"))

    def test_crossing_pair_is_not(self):
        assert not has_linear_resolution(ideal(2, "x1*y2", "y1*x2"))

    def test_principal_is_linear(self):
        assert has_linear_resolution(ideal(1, "x1"))

    def test_non_equigenerated_warns_false(self):
        with pytest.warns(UserWarning):
            assert not has_linear_resolution(ideal(2, "x1", "y1*x2"))


class TestRegUpperBound:
    def test_examples(self):
        assert reg_upper_bound_lcm(ideal(1, "x1", "y1")) == 1
        assert reg_upper_bound_lcm(ideal(2, "x1*y2", "y1*x2")) == 3
        assert reg_upper_bound_lcm(ideal(3, "x1*x2*x3")) == 3

    def test_bounds_regularity(self):
        rng = random.Random(3)
        universe = degree_n_universe(3)
        for _ in range(25):
            I = ideal_from_subset(universe, rng.randrange(1, 1 << 8)).inner
            assert invariants(I)[1] <= reg_upper_bound_lcm(I)


class TestDominant:
    def test_prop32_family_witness(self):
        witness = dominant_check(family_prop32(3, 3).inner)
        assert witness is not None
        assert sorted(witness.values()) == [0, 1, 2]  # x1, x2, x3 private

    def test_shared_variables_not_dominant(self):
        assert dominant_check(ideal(2, "x1*x2", "x1*y2", "y1*x2")) is None

    def test_principal_dominant(self):
        assert dominant_check(ideal(2, "x1*x2")) is not None

    def test_closed_form_matches_oracle(self):
        for I in [family_prop32(3, 3).inner, ideal(2, "x1*x2"),
                  ideal(2, "x1*y2", "y1*x2"), ideal(3, "x1", "y2", "x3")]:
            assert dominant_invariants(I) == invariants(I)

    def test_not_dominant_raises(self):
        with pytest.raises(NotDominantError):
            dominant_invariants(ideal(2, "x1*x2", "x1*y2", "y1*x2"))


class TestEulerIdentity:
    def test_exhaustive_n2(self):
        universe = degree_n_universe(2)
        for subset in range(1, 1 << 4):
            I = ideal_from_subset(universe, subset).inner
            assert euler_discrepancy(I, betti_table(I)) == {}

    def test_mixed_degree_sample(self):
        rng = random.Random(9)
        for _ in range(25):
            gens = [Monomial(rng.randrange(1, 1 << 6), 3) for _ in range(rng.randint(1, 5))]
            I = minimalize(gens, 3)
            if not I.is_proper_nonzero:
                continue
            assert euler_discrepancy(I, betti_table(I)) == {}


class TestRestrictionLemmas:
    def test_linear_resolution_passes_to_restrictions(self):
        I = family_thm36(3, 3).inner
        assert has_linear_resolution(I)
        for mono in lcm_closure(I):
            sub = restrict(I, mono)
            if sub.is_proper_nonzero:
                assert has_linear_resolution(sub)
