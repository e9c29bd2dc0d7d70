import pytest
from hypothesis import given, strategies as st

from subchains.perm import (
    DuplicatePointError,
    MalformedCycleError,
    Permutation,
    PointOutOfRangeError,
    compose,
    format_permutation,
    identity,
    inverse,
    order_of,
    parse_permutation,
)


@st.composite
def perms(draw, degree=None):
    n = degree if degree is not None else draw(st.integers(1, 7))
    images = draw(st.permutations(range(1, n + 1)))
    return Permutation(n, tuple(images))


@st.composite
def perm_triples(draw):
    n = draw(st.integers(1, 7))
    return tuple(draw(perms(n)) for _ in range(3))


@pytest.mark.parametrize("text, degree, images", [
    ("(1,2,3)(4,5)", 5, (2, 3, 1, 5, 4)),
    ("", 4, (1, 2, 3, 4)),
    ("(2,3,5,4)", 5, (1, 3, 5, 2, 4)),
    ("  (1, 2, 3, 4, 5) ", 5, (2, 3, 4, 5, 1)),
    ("()", 3, (1, 2, 3)),
])
def test_parse_examples(text, degree, images):
    assert parse_permutation(text, degree).images == images


@pytest.mark.parametrize("text, exc", [
    ("(1,2)(2,3)", DuplicatePointError),
    ("(1,1)", DuplicatePointError),
    ("(1,6)", PointOutOfRangeError),
    ("(0,1)", PointOutOfRangeError),
    ("(1,2", MalformedCycleError),
    ("1,2)", MalformedCycleError),
    ("(1,,2)", MalformedCycleError),
    ("(1,2,)", MalformedCycleError),
    ("(1 2)", MalformedCycleError),
    ("(a,b)", MalformedCycleError),
])
def test_parse_errors_are_distinct(text, exc):
    with pytest.raises(exc):
        parse_permutation(text, 5)


def test_degree_is_part_of_the_value():
    assert parse_permutation("(1,2)", 5) != parse_permutation("(1,2)", 2)


def test_compose_applies_right_operand_first():
    p = parse_permutation("(1,2,3)", 3)
    q = parse_permutation("(1,2)", 3)
    assert compose(p, q) == parse_permutation("(1,3)", 3)
    assert compose(q, p) == parse_permutation("(2,3)", 3)
    assert p * q == compose(p, q)


def test_compose_small_laws():
    t = parse_permutation("(1,2)", 4)
    assert compose(identity(4), t) == t
    assert compose(t, t) == identity(4)
    with pytest.raises(ValueError):
        compose(t, parse_permutation("(1,2)", 3))


@pytest.mark.parametrize("text, degree, order", [
    ("", 5, 1), ("(1,2,3)(4,5)", 5, 6), ("(1,2,3,4,5)", 5, 5), ("(1,2)(3,4)", 4, 2),
])
def test_order_examples(text, degree, order):
    assert order_of(parse_permutation(text, degree)) == order


def test_invalid_images_rejected():
    with pytest.raises(ValueError):
        Permutation(3, (1, 1, 2))
    with pytest.raises(ValueError):
        Permutation(0, ())


@given(perms())
def test_format_parse_round_trip(p):
    assert parse_permutation(format_permutation(p), p.degree) == p


@given(perm_triples())
def test_group_axioms(triple):
    p, q, r = triple
    e = identity(p.degree)
    assert compose(compose(p, q), r) == compose(p, compose(q, r))
    assert compose(e, p) == p == compose(p, e)
    assert compose(p, inverse(p)) == e == compose(inverse(p), p)


@given(perms())
def test_order_matches_iterated_composition(p):
    k, cur = 1, p
    while not cur.is_identity():
        cur = compose(cur, p)
        k += 1
    assert order_of(p) == k
