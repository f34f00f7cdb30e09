import itertools

import pytest
from hypothesis import given, strategies as st

from sdconv import make_field, parse_element, parse_field_selector, sqrt_of_minus_one
from sdconv.errors import (
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    NotPrime,
    ParseError,
    ReducibleModulus,
)

FIELDS = {
    2: (2, 1),
    3: (3, 1),
    4: (2, 2),
    5: (5, 1),
    7: (7, 1),
    8: (2, 3),
    9: (3, 2),
    11: (11, 1),
    13: (13, 1),
    16: (2, 4),
    25: (5, 2),
}


def field(q):
    p, l = FIELDS[q]
    return make_field(p, l)


def test_prime_field_modulus_is_x():
    assert make_field(2).modulus == (0, 1)
    assert make_field(7).modulus == (0, 1)


def test_f4_modulus_is_the_unique_irreducible_quadratic():
    # oracle: a binary quadratic is reducible iff it has a root in GF(2)
    reducible = []
    for c0, c1 in itertools.product((0, 1), repeat=2):
        has_root = c0 == 0 or (c0 + c1 + 1) % 2 == 0
        if has_root:
            reducible.append((c0, c1, 1))
    assert len(reducible) == 3
    assert make_field(2, 2).modulus == (1, 1, 1)


def test_make_field_errors():
    with pytest.raises(NotPrime):
        make_field(6)
    with pytest.raises(DegreeMismatch):
        make_field(3, 1, (1, 0, 1))  # degree 2 modulus for l = 1
    with pytest.raises(ReducibleModulus):
        make_field(2, 2, (0, 0, 1))  # x^2 = x * x
    with pytest.raises(ValueError):
        make_field(2, 0)


def test_make_field_deterministic():
    for q in FIELDS:
        p, l = FIELDS[q]
        assert make_field(p, l).modulus == make_field(p, l).modulus


def test_arithmetic_examples():
    F5 = field(5)
    assert F5.from_int(3) * F5.from_int(4) == F5.from_int(2)
    assert F5.from_int(2).inverse() == F5.from_int(3)
    F4 = field(4)
    a = F4.element((0, 1))
    assert a + (a + F4.one) == F4.one


def test_inverse_of_zero_raises():
    with pytest.raises(DivisionByZero):
        field(4).zero.inverse()


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        field(2).one + field(3).one


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9, 25, 49])
def test_field_axioms_exhaustive(q):
    spec = make_field(7, 2) if q == 49 else field(q)
    els = spec.elements()
    assert len(els) == q
    for a in els:
        assert a + spec.zero == a
        assert a * spec.one == a
        assert a + (-a) == spec.zero
        if a:
            assert a * a.inverse() == spec.one
    for a, b in itertools.product(els, repeat=2):
        assert a + b == b + a
        assert a * b == b * a
    for a, b, c in itertools.product(els, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("q", sorted(FIELDS))
def test_sqrt_of_minus_one_existence_table(q):
    spec = field(q)
    p, l = FIELDS[q]
    predicted = p == 2 or p % 4 == 1 or l % 2 == 0
    root = sqrt_of_minus_one(spec)
    assert (root is not None) == predicted
    if root is not None:
        assert root * root == spec.from_int(-1)


def test_sqrt_of_minus_one_values():
    assert sqrt_of_minus_one(field(2)) == field(2).one
    assert sqrt_of_minus_one(field(3)) is None
    # scan of {0..4}: squares are 0,1,4,4,1 so 2 is the first solution
    assert sqrt_of_minus_one(field(5)) == field(5).from_int(2)


def test_enumeration_is_lexicographic():
    F9 = field(9)
    seq = [e.coeffs for e in F9.elements()]
    assert seq == sorted(seq)
    assert seq[0] == (0, 0)


def test_element_text_roundtrip():
    F9 = field(9)
    for e in F9.elements():
        assert parse_element(F9, str(e)) == e
    a = F9.element((0, 1))
    assert parse_element(F9, "a^2+2*a") == a * a + F9.from_int(2) * a
    F5 = field(5)
    assert parse_element(F5, " 3 ") == F5.from_int(3)
    with pytest.raises(ParseError):
        parse_element(F5, "x")
    with pytest.raises(ParseError):
        parse_element(F5, "")


def test_parse_field_selector():
    assert parse_field_selector("2").q == 2
    assert parse_field_selector("4").q == 4
    assert parse_field_selector("3^2").q == 9
    assert parse_field_selector("25").q == 25
    with pytest.raises(ParseError):
        parse_field_selector("6")
    with pytest.raises(ParseError):
        parse_field_selector("zzz")


@given(st.integers(), st.integers())
def test_from_int_is_a_ring_morphism(x, y):
    F7 = field(7)
    assert F7.from_int(x) + F7.from_int(y) == F7.from_int(x + y)
    assert F7.from_int(x) * F7.from_int(y) == F7.from_int(x * y)
