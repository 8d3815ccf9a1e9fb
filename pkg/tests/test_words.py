"""Words, presentations, parsing, and weighting extraction."""

import random

import pytest
from hypothesis import given, strategies as st

from cycover.words import (
    DuplicateGenerator,
    FreeWord,
    NotKnotLike,
    ParseError,
    Presentation,
    SelfReference,
    UnknownGenerator,
    equal_up_to_cycling,
    parse_presentation,
    smith_diagonal,
    validate_weighting,
)


def W(*syllables):
    return FreeWord.make(list(syllables))


# -- free words ---------------------------------------------------------


def test_free_reduction_merges_and_cancels():
    w = W(("a", 2), ("a", -2), ("b", 1))
    assert w.syllables == (("b", 1),)
    w2 = W(("a", 1), ("b", 1), ("b", -1), ("a", 1))
    assert w2.syllables == (("a", 2),)


def test_identity_and_str():
    assert FreeWord.identity().is_identity()
    assert str(FreeWord.identity()) == "1"
    assert str(W(("t", 1), ("a", -2))) == "t a^-2"


def test_inverse_and_mul():
    w = W(("t", 1), ("a", -2))
    assert (w * w.inverse()).is_identity()
    assert w.inverse().syllables == (("a", 2), ("t", -1))


def test_pow():
    w = W(("a", 1), ("b", 1))
    assert w**2 == W(("a", 1), ("b", 1), ("a", 1), ("b", 1))
    assert w**0 == FreeWord.identity()
    assert w**-1 == w.inverse()


def test_letters_and_sums():
    w = W(("a", 2), ("b", -1))
    assert list(w.letters()) == [("a", 1), ("a", 1), ("b", -1)]
    assert w.letter_length() == 3
    assert w.exponent_sum("a") == 2
    assert w.exponent_sum("b") == -1
    assert w.generators_used() == {"a", "b"}


def test_cyclic_reduce():
    # a b a^-1 cyclically reduces to b
    w = W(("a", 1), ("b", 1), ("a", -1))
    assert w.cyclic_reduce() == W(("b", 1))
    # partial cancellation at the ends: a^2 b a^-1 -> a b
    w2 = W(("a", 2), ("b", 1), ("a", -1))
    assert w2.cyclic_reduce() == W(("a", 1), ("b", 1))
    # same-sign ends stay put
    w3 = W(("a", 1), ("b", 1), ("a", 1))
    assert w3.cyclic_reduce() == w3


def test_substitute():
    w = W(("v", 1), ("u", 1))
    out = w.substitute("v", W(("u", 1), ("a", 1)))
    assert out == W(("u", 1), ("a", 1), ("u", 1))


def test_equal_up_to_cycling():
    w1 = W(("a", 1), ("b", 1), ("c", 1))
    w2 = W(("c", 1), ("a", 1), ("b", 1))
    assert equal_up_to_cycling(w1, w2)
    assert equal_up_to_cycling(w1, w1.inverse())
    assert not equal_up_to_cycling(w1, W(("a", 1), ("c", 1), ("b", 1)))


ATOMS = st.tuples(st.sampled_from("abc"), st.integers(-3, 3).filter(bool))
WORDS = st.lists(ATOMS, max_size=8).map(lambda s: FreeWord.make(s))


@given(WORDS, WORDS, WORDS)
def test_mul_associative(u, v, w):
    assert (u * v) * w == u * (v * w)


@given(WORDS)
def test_inverse_cancels(w):
    assert (w * w.inverse()).is_identity()
    assert (w.inverse() * w).is_identity()


@given(WORDS)
def test_cyclic_reduce_shrinks_and_is_idempotent(w):
    c = w.cyclic_reduce()
    assert c.letter_length() <= w.letter_length()
    assert c.cyclic_reduce() == c


@given(WORDS, WORDS)
def test_exponent_sum_additive(u, v):
    for g in "abc":
        assert (u * v).exponent_sum(g) == u.exponent_sum(g) + v.exponent_sum(g)


# -- parsing ------------------------------------------------------------


def test_parse_basic():
    p = parse_presentation("<t, a | t a t^-1 = a^2>")
    assert p.generators == ("t", "a")
    assert p.relators == (W(("t", 1), ("a", 1), ("t", -1), ("a", -2)),)


def test_parse_relator_form_and_whitespace():
    p = parse_presentation("  < u,v |\n u v u v^-1 u^-1 v^-1 >  ")
    assert p.generators == ("u", "v")
    assert len(p.relators) == 1


def test_parse_multicharacter_generators_longest_match():
    p = parse_presentation("<x, xy | xy x^-1>")
    assert p.relators[0] == W(("xy", 1), ("x", -1))


def test_parse_identity_word():
    p = parse_presentation("<a | 1 = a^3>")
    assert p.relators == (W(("a", -3)),)


def test_parse_parenthesized_exponent():
    p = parse_presentation("<a | a^(-3)>")
    assert p.relators == (W(("a", -3)),)


def test_parse_no_relators():
    p = parse_presentation("<t, a |>")
    assert p.relators == ()
    assert p.deficiency() == 2


def test_parse_errors():
    with pytest.raises(DuplicateGenerator):
        parse_presentation("<a, a | >")
    with pytest.raises(UnknownGenerator):
        parse_presentation("<a | b>")
    with pytest.raises(ParseError):
        parse_presentation("<a | a^>")
    with pytest.raises(ParseError):
        parse_presentation("no brackets")
    with pytest.raises(ParseError):
        parse_presentation("<a | a> trailing")


def test_parse_error_location():
    try:
        parse_presentation("<a |\n b>")
    except ParseError as e:
        assert e.line == 2
    else:
        pytest.fail("expected ParseError")


def test_roundtrip_text():
    src = "<t, a | t a t^-1 a^-2>"
    p = parse_presentation(src)
    assert parse_presentation(p.to_text()) == p


def test_json_dict():
    p = parse_presentation("<t, a | t a t^-1 a^-2>")
    d = p.to_json_dict()
    assert d == {
        "generators": ["t", "a"],
        "relators": [[["t", 1], ["a", 1], ["t", -1], ["a", -2]]],
    }


# -- presentation invariants -------------------------------------------


def test_relators_stored_cyclically_reduced():
    p = Presentation.make(["a", "b"], [W(("a", 1), ("b", 1), ("a", -1))])
    assert p.relators[0] == W(("b", 1))
    with pytest.raises(ValueError):
        Presentation(("a", "b"), (W(("a", 1), ("b", 1), ("a", -1)),))


def test_exponent_matrix():
    p = parse_presentation("<t, a | t a t^-1 a^-2>")
    assert p.exponent_matrix() == [[0, -1]]


def test_tietze_substitute_appends_new_generators():
    p = parse_presentation("<u, v | u v u v^-1 u^-1 v^-1>")
    q = p.tietze_substitute("v", W(("u", 1), ("a", 1)))
    assert q.generators == ("u", "a")
    assert "v" not in q.generators_set() if hasattr(q, "generators_set") else True
    for r in q.relators:
        assert "v" not in r.generators_used()


def test_tietze_substitute_errors():
    p = parse_presentation("<u, v | u v>")
    with pytest.raises(UnknownGenerator):
        p.tietze_substitute("w", W(("u", 1)))
    with pytest.raises(SelfReference):
        p.tietze_substitute("v", W(("v", 1)))


# -- abelianization and weightings -------------------------------------

# Derived by hand from the exponent matrices; cross-checked against the
# sympy Smith normal form below.
ABELIANIZATIONS = [
    ("<t, a | t a t^-1 a^-2>", (1, ())),
    ("<u, v | u v u v^-1 u^-1 v^-1>", (1, ())),
    ("<a, b | a b a^-1 b^-1>", (2, ())),
    ("<a | a^3>", (0, (3,))),
    ("<a, b | a^2 b^-3>", (1, ())),
    ("<t, a |>", (2, ())),
    ("<a, b | a^2, b^2>", (0, (2, 2))),
    ("<a, b | a^2 b^2, a^4>", (0, (2, 4))),
]


@pytest.mark.parametrize("src,expected", ABELIANIZATIONS)
def test_abelianization_invariants(src, expected):
    assert parse_presentation(src).abelianization_invariants() == expected


WEIGHTINGS = [
    ("<t, a | t a t^-1 a^-2>", {"t": 1, "a": 0}),
    ("<u, v | u v u v^-1 u^-1 v^-1>", {"u": 1, "v": 1}),
    ("<a, b | a^2 b^-3>", {"a": 3, "b": 2}),
    ("<t | >", {"t": 1}),
]


@pytest.mark.parametrize("src,expected", WEIGHTINGS)
def test_canonical_weighting(src, expected):
    p = parse_presentation(src)
    chi = p.canonical_weighting()
    assert chi == expected
    validate_weighting(p, chi)


def test_canonical_weighting_sign_convention():
    # Same group, generator order reversed: first generator with nonzero
    # weight must come out positive.
    p = parse_presentation("<a, t | t a^-1 t^-1 a^2>")
    chi = p.canonical_weighting()
    first = next(g for g in p.generators if chi[g] != 0)
    assert chi[first] > 0


@pytest.mark.parametrize(
    "src",
    [
        "<a, b | a b a^-1 b^-1>",  # first homology Z^2
        "<a | a^3>",  # finite first homology
        "<a, b | a^2, b^2>",
    ],
)
def test_not_knot_like(src):
    with pytest.raises(NotKnotLike):
        parse_presentation(src).canonical_weighting()


def test_validate_weighting_rejects_bad():
    p = parse_presentation("<t, a | t a t^-1 a^-2>")
    with pytest.raises(ValueError):
        validate_weighting(p, {"t": 1})  # missing generator
    with pytest.raises(ValueError):
        validate_weighting(p, {"t": 1, "a": 1})  # relator weight nonzero
    with pytest.raises(ValueError):
        validate_weighting(p, {"t": 2, "a": 0})  # gcd 2


# -- Smith normal form vs sympy ----------------------------------------


def _sympy_invariants(rows, ncols):
    from sympy import Matrix
    from sympy.matrices.normalforms import smith_normal_form

    if not rows:
        return []
    m = smith_normal_form(Matrix(rows))
    diag = [abs(m[i, i]) for i in range(min(m.shape))]
    return [d for d in diag if d != 0]


def test_smith_diagonal_matches_sympy_on_random_matrices():
    rng = random.Random(20260825)
    for _ in range(60):
        nrows = rng.randint(1, 4)
        ncols = rng.randint(1, 4)
        rows = [[rng.randint(-6, 6) for _ in range(ncols)] for _ in range(nrows)]
        diag, v = smith_diagonal(rows, ncols)
        assert diag == _sympy_invariants(rows, ncols), rows
        # divisibility chain
        for a, b in zip(diag, diag[1:]):
            assert b % a == 0
        # V must be unimodular: check via integer determinant of the
        # column transform (Bareiss on a small matrix).
        assert abs(_det(v)) == 1


def _det(m):
    from fractions import Fraction

    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det
