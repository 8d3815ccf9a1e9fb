"""Fox derivatives, presentation matrices, and the polynomial pipeline."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from corpus import (
    BAUMSLAG_B,
    BS23,
    DYADIC,
    NOCOVER,
    TORUS23,
    knotlike_corpus,
    trefoil,
    two_bridge_pairs,
    weight_zero_form,
)
from cycover.alexander import (
    NoUnitWeightGenerator,
    NotDeficiencyOne,
    alexander_matrix,
    alexander_polynomial,
    fox_derivative_abelianized,
    mod_p_table,
)
from cycover.laurent import INFINITE, LaurentPoly
from cycover.twobridge import TwoBridgeParams, family_presentation, presentation
from cycover.words import FreeWord, Presentation, parse_presentation

L = LaurentPoly.from_coeffs


def W(*syllables):
    return FreeWord.make(list(syllables))


# -- Fox derivative -----------------------------------------------------


def test_fox_single_positive_syllable():
    chi = {"t": 1, "a": 0}
    # d(t^3)/dt = 1 + t + t^2
    assert fox_derivative_abelianized(W(("t", 3)), "t", chi) == L([1, 1, 1])


def test_fox_single_negative_syllable():
    chi = {"t": 1, "a": 0}
    # d(t^-2)/dt = -t^-1 - t^-2
    got = fox_derivative_abelianized(W(("t", -2)), "t", chi)
    assert got == LaurentPoly({-1: -1, -2: -1})


def test_fox_zero_weight_generator():
    chi = {"t": 1, "a": 0}
    # a-syllables sit at the height of their prefix
    w = W(("t", 1), ("a", 2), ("t", -1), ("a", -1))
    assert fox_derivative_abelianized(w, "a", chi) == L([-1, 2])
    # the t and t^-1 contributions cancel: 1 + t*(-t^-1) = 0
    assert fox_derivative_abelianized(w, "t", chi).is_zero()


def test_fox_of_identity_is_zero():
    assert fox_derivative_abelianized(FreeWord.identity(), "t", {"t": 1}).is_zero()


def _phi_weight(w, chi):
    return sum(e * chi[g] for g, e in w.syllables)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_fox_product_rule(data):
    chi = {"t": 1, "a": 0}
    syls = st.lists(
        st.tuples(st.sampled_from(["t", "a"]), st.integers(-3, 3).filter(bool)),
        max_size=6,
    )
    u = FreeWord.make(data.draw(syls))
    v = FreeWord.make(data.draw(syls))
    for g in ("t", "a"):
        lhs = fox_derivative_abelianized(u * v, g, chi)
        rhs = fox_derivative_abelianized(u, g, chi) + LaurentPoly.t_power(
            _phi_weight(u, chi)
        ) * fox_derivative_abelianized(v, g, chi)
        assert lhs == rhs


def test_fox_fundamental_identity_on_corpus():
    for name, pres, chi in knotlike_corpus():
        for r in pres.relators:
            total = LaurentPoly.zero()
            for g in pres.generators:
                step = LaurentPoly.t_power(chi[g]) - LaurentPoly.constant(1)
                total = total + fox_derivative_abelianized(r, g, chi) * step
            assert total.is_zero(), name


# -- presentation matrix ------------------------------------------------


def test_matrix_shape_and_entries():
    m = alexander_matrix(DYADIC, {"t": 1, "a": 0})
    assert m.entry(0, m.column_index("t")).is_zero()
    assert m.entry(0, m.column_index("a")) == L([-2, 1])


def test_matrix_without_column():
    m = alexander_matrix(DYADIC, {"t": 1, "a": 0})
    rows = m.without_column("t")
    assert len(rows) == 1 and len(rows[0]) == 1
    assert rows[0][0] == L([-2, 1])


# -- the polynomial -----------------------------------------------------


def test_dyadic_delta_and_table():
    res = alexander_polynomial(DYADIC, {"t": 1, "a": 0})
    assert res.delta == L([-2, 1])
    assert res.deleted_column == "t"
    mp, d = res.mod_p_table[2]
    assert d == 0  # t - 2 drops to the unit t mod 2
    assert res.mod_p_table[3][1] == 1
    assert res.mod_p_table[5][1] == 1
    assert res.mod_p_table[7][1] == 1


def test_bs23_delta():
    res = alexander_polynomial(BS23, {"x": 1, "y": 0})
    assert res.delta == L([-3, 2])


def test_trefoil_delta_both_columns():
    chi = {"u": 1, "v": 1}
    a = alexander_polynomial(trefoil(), chi, delete_column="u")
    b = alexander_polynomial(trefoil(), chi, delete_column="v")
    assert a.delta == b.delta == L([1, -1, 1])


def test_figure_eight_delta():
    pres = presentation(TwoBridgeParams(5, 3))
    res = alexander_polynomial(pres, {"u": 1, "v": 1})
    assert res.delta == L([1, -3, 1])


def test_eleven_nine_delta():
    pres = presentation(TwoBridgeParams(11, 9))
    res = alexander_polynomial(pres, {"u": 1, "v": 1})
    assert res.delta == L([3, -5, 3])


def test_family_delta_formula():
    for n in range(1, 7):
        res = alexander_polynomial(family_presentation(n), {"u": 1, "a": 0})
        assert res.delta == L([n, -(2 * n - 1), n]), n


def test_nocover_delta_is_one():
    res = alexander_polynomial(NOCOVER, {"t": 1, "a": 0})
    assert res.delta == LaurentPoly.constant(1)
    for p in (2, 3, 5, 7):
        assert res.mod_p_table[p][1] == 0


def test_baumslag_b_delta_is_one():
    res = alexander_polynomial(BAUMSLAG_B, {"x": 1, "y": 0})
    assert res.delta == LaurentPoly.constant(1)


def test_no_unit_weight_generator():
    with pytest.raises(NoUnitWeightGenerator):
        alexander_polynomial(TORUS23, {"x": 3, "y": 2})


def test_too_many_relators():
    pres = parse_presentation("<x, y | x y x^-1 y^-1, x^2 y^-2>")
    with pytest.raises(NotDeficiencyOne):
        alexander_polynomial(pres, {"x": 1, "y": 0})


def test_fewer_relators_gives_zero():
    pres = Presentation.make(("x", "y"), [])
    res = alexander_polynomial(pres, {"x": 1, "y": 0})
    assert res.delta.is_zero()
    assert all(d is INFINITE for _, d in res.mod_p_table.values())


def test_mod_p_table_standalone():
    table = mod_p_table(L([-2, 1]), primes=(2, 5))
    assert set(table) == {2, 5}
    assert table[2][1] == 0 and table[5][1] == 1


def test_custom_primes_threaded_through():
    res = alexander_polynomial(DYADIC, {"t": 1, "a": 0}, primes=(11, 13))
    assert set(res.mod_p_table) == {11, 13}


# -- symmetry and normalization on the two-bridge corpus ----------------


def test_two_bridge_delta_symmetric_and_unit_at_one():
    # the alternating-word construction is a knot presentation for odd q
    # only; even q still gives a weighted group with delta(1) = +-1
    for p, q in two_bridge_pairs(15):
        pres = presentation(TwoBridgeParams(p, q))
        delta = alexander_polynomial(pres, {"u": 1, "v": 1}).delta
        assert delta.evaluate(1) in (1, -1), (p, q)
        if q % 2 == 1:
            assert delta.reciprocal().normalize() == delta, (p, q)


def test_weight_zero_form_matches_raw_delta():
    # the Tietze rewrite must not move the polynomial
    for p, q in [(3, 1), (5, 3), (7, 3), (11, 9), (13, 5)]:
        raw = alexander_polynomial(
            presentation(TwoBridgeParams(p, q)), {"u": 1, "v": 1}
        ).delta
        pres, chi = weight_zero_form(p, q)
        assert alexander_polynomial(pres, chi).delta == raw, (p, q)
