"""Core monomial/ideal arithmetic, checked against brute-force membership."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from neuralideals.monomials import (
    Monomial,
    NeuronCountError,
    NonSquarefreeProductError,
    PairViolationError,
    ZeroIdealError,
    colon,
    intersect,
    is_equigenerated,
    lcm_closure,
    minimalize,
    parse_ideal,
    parse_monomial,
    render_ideal,
    restrict,
    scale,
    validate_polarized_neural,
)


def m(text, n):
    return parse_monomial(text, n)


def ideal(n, *texts):
    return minimalize([m(t, n) for t in texts], n)


class TestMonomialBasics:
    def test_parse_render_roundtrip(self):
        for text in ["1", "x1", "y2", "x1*y2*x3", "x1*x2*y1"]:
            mono = m(text, 3)
            assert parse_monomial(str(mono), 3) == mono

    def test_space_separated(self):
        assert m("x1 y2", 2) == m("x1*y2", 2)

    def test_unit(self):
        one = Monomial.one(3)
        assert one.degree == 0 and str(one) == "1"

    def test_degree_is_popcount(self):
        assert m("x1*y2*x3", 3).degree == 3

    def test_divides_lcm_gcd(self):
        a, b = m("x1*x2", 2), m("x1*y2", 2)
        assert not a.divides(b)
        assert a.lcm(b) == m("x1*x2*y2", 2)
        assert a.gcd(b) == m("x1", 2)
        assert m("x1", 2).divides(a)

    def test_product_disjoint_only(self):
        assert m("x1", 2) * m("y2", 2) == m("x1*y2", 2)
        with pytest.raises(NonSquarefreeProductError):
            m("x1", 2) * m("x1*y2", 2)

    def test_neuron_count_cap(self):
        Monomial(0, 32)
        with pytest.raises(NeuronCountError):
            Monomial(0, 33)

    def test_parse_rejects_bad_tokens(self):
        for bad in ["z1", "x0", "x3", "x1*x1", ""]:
            with pytest.raises(ValueError):
                parse_monomial(bad, 2)


class TestMinimalize:
    def test_divisor_wins(self):
        assert ideal(2, "x1", "x1*x2").gens == (m("x1", 2),)

    def test_incomparable_pair_kept(self):
        assert ideal(2, "x1*y2", "y1*x2").gens == (m("y1*x2", 2), m("x1*y2", 2))

    def test_common_divisor(self):
        assert ideal(2, "x1*x2", "x2", "y1*x2").gens == (m("x2", 2),)

    def test_zero_and_unit(self):
        assert minimalize([], 2).is_zero
        assert ideal(2, "1", "x1").is_unit

    @given(st.lists(st.integers(min_value=0, max_value=63), max_size=8))
    @settings(max_examples=200, deadline=None)
    def test_idempotent_and_order_free(self, masks):
        gens = [Monomial(mk, 3) for mk in masks]
        once = minimalize(gens, 3)
        assert minimalize(once.gens, 3) == once
        assert minimalize(list(reversed(gens)), 3) == once


class TestColonIntersect:
    def test_colon_examples(self):
        assert colon(ideal(2, "x1*x2", "x1*y2"), m("x1", 2)) == ideal(2, "x2", "y2")
        assert colon(ideal(2, "x1"), m("y1", 2)) == ideal(2, "x1")
        assert colon(ideal(2, "x1"), m("x1", 2)).is_unit

    def test_intersect_examples(self):
        assert intersect(ideal(2, "x1"), ideal(2, "y1")) == ideal(2, "x1*y1")
        two = ideal(2, "x1", "y1")
        assert intersect(two, two) == two
        assert intersect(ideal(2, "x1*x2"), ideal(2, "y1")) == ideal(2, "x1*x2*y1")

    def test_against_membership_oracle(self):
        # w in I:u  iff  w*u in I, and w in I∩J iff w in both, for every
        # monomial w over 2n = 4 variables (degree-insensitive: divisibility
        # of squarefree generators only sees the union of supports)
        n = 2
        ideals = [
            ideal(n, "x1*x2", "x1*y2"),
            ideal(n, "x1", "y1"),
            ideal(n, "x1*y2", "y1*x2"),
            ideal(n, "x2*y1"),
        ]
        monos = [Monomial(mask, n) for mask in range(16)]
        for I in ideals:
            for u in monos:
                q = colon(I, u)
                for w in monos:
                    product = Monomial(w.mask | u.mask, n)
                    assert q.contains(w) == I.contains(product)
            for J in ideals:
                meet = intersect(I, J)
                for w in monos:
                    assert meet.contains(w) == (I.contains(w) and J.contains(w))


class TestScaleRestrict:
    def test_scale_examples(self):
        assert scale(m("x1", 2), ideal(2, "x2", "y2")) == ideal(2, "x1*x2", "x1*y2")
        I = ideal(2, "x1*y2", "y1*x2")
        assert scale(Monomial.one(2), I) == I
        with pytest.raises(NonSquarefreeProductError):
            scale(m("x1", 2), ideal(2, "x1"))

    def test_restrict_examples(self):
        I = ideal(2, "x1*y2", "y1*x2", "x1*x2")
        assert restrict(I, m("x1*x2*y2", 2)) == ideal(2, "x1*y2", "x1*x2")
        assert restrict(I, Monomial.one(2)).is_zero
        everything = Monomial((1 << 4) - 1, 2)
        assert restrict(I, everything) == I

    def test_restrict_exact_subset_semantics(self):
        I = ideal(3, "x1*y2", "y1*x2", "x1*x3", "y3")
        for mono in lcm_closure(I):
            sub = restrict(I, mono)
            assert set(sub.gens) == {g for g in I.gens if g.divides(mono)}


class TestValidationAndDegrees:
    def test_pair_violations(self):
        with pytest.raises(PairViolationError) as exc:
            validate_polarized_neural(ideal(2, "x1*y1"))
        assert exc.value.neuron == 1
        validate_polarized_neural(ideal(2, "x1*y2"))
        with pytest.raises(PairViolationError) as exc:
            validate_polarized_neural(ideal(2, "x1*x2*y2"))
        assert exc.value.neuron == 2

    def test_polarized_degree_at_most_n(self):
        # pair exclusion forces at most one bit per pair
        P = validate_polarized_neural(ideal(3, "x1*y2*x3", "y1*y2*y3"))
        assert all(g.degree <= 3 for g in P.inner.gens)

    def test_is_equigenerated(self):
        assert is_equigenerated(ideal(2, "x1*y2", "y1*x2")) == 2
        assert is_equigenerated(ideal(2, "x1", "y1*x2")) is None
        assert is_equigenerated(ideal(2, "x1")) == 1
        with pytest.raises(ZeroIdealError):
            is_equigenerated(minimalize([], 2))


class TestLcmClosure:
    def test_closure_contains_gens_and_is_closed(self):
        I = ideal(3, "x1*y2", "y1*x2", "x3")
        closure = {c.mask for c in lcm_closure(I)}
        assert {g.mask for g in I.gens} <= closure
        for a in closure:
            for b in closure:
                assert a | b in closure


class TestIdealText:
    def test_parse_render_roundtrip(self):
        text = "x2*y1\nx1*y2\n"
        I = parse_ideal(text)
        assert render_ideal(I) == text
        assert I.n == 2

    def test_comments_and_blanks(self):
        I = parse_ideal("# header\n\nx1  # trailing\n\ny1\n")
        assert I == ideal(1, "x1", "y1")

    def test_explicit_n_overrides_inference(self):
        assert parse_ideal("x1", n=3).n == 3
