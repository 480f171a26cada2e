"""Tests for the associative torus algebra arithmetic."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from torustile.algebra import (Basic, Element, F2, Z, RingMismatch,
                               ParseError, basic_multiply, basics_up_to,
                               format_element, parse_basic, parse_element,
                               reeb_basis)


def oracle_multiply(x: Basic, y: Basic):
    """Independent product: expand both factors into letter lists and check
    the concatenation is a single consecutive run with matching idempotents."""
    u = x.u + y.u
    if x.length == 0 and y.length == 0:
        return Basic.idem(x.start, u) if x.start == y.start else None
    if x.length == 0:
        return Basic(u, y.start, y.length) if x.start == y.left_idempotent() else None
    if y.length == 0:
        return Basic(u, x.start, x.length) if y.start == x.right_idempotent() else None
    letters = x.letters() + y.letters()
    for a, b in zip(letters, letters[1:]):
        if (a % 4) + 1 != b:
            return None
    return Basic(u, letters[0], len(letters))


def small_basics(max_len):
    return [b for b in basics_up_to(max_len)]


def test_multiplication_against_letter_oracle():
    basics = small_basics(7)
    for x in basics:
        for y in basics:
            assert basic_multiply(x, y) == oracle_multiply(x, y)


def test_quiver_idempotents():
    assert parse_basic("r1").left_idempotent() == 0
    assert parse_basic("r1").right_idempotent() == 1
    assert parse_basic("r3").left_idempotent() == 0
    assert parse_basic("r2").left_idempotent() == 1
    assert parse_basic("r4").left_idempotent() == 1
    assert parse_basic("r12").right_idempotent() == 0
    assert parse_basic("U^2*r4123").left_idempotent() == 1
    assert parse_basic("i1").left_idempotent() == 1


def test_path_relations_exact():
    for a, b in (("r2", "r1"), ("r3", "r2"), ("r4", "r3"), ("r1", "r4")):
        assert (parse_element(a, F2) * parse_element(b, F2)).is_zero()
    assert parse_element("r1", F2) * parse_element("r2", F2) == \
        parse_element("r12", F2)
    assert (parse_element("U*r4", F2) * parse_element("r123", F2)
            == parse_element("U*r4123", F2))


def test_idempotent_unit_and_annihilation():
    i0 = parse_element("i0", F2)
    r1 = parse_element("r1", F2)
    assert i0 * r1 == r1
    assert (r1 * i0).is_zero()
    unit = Element.unit(F2)
    for b in small_basics(6):
        e = Element.of(b, F2)
        assert unit * e == e
        assert e * unit == e


def test_associativity_exhaustive_length_12():
    basics = small_basics(4)
    for x, y, z in itertools.product(basics, repeat=3):
        if x.total_length() + y.total_length() + z.total_length() > 12:
            continue
        ex, ey, ez = (Element.of(b, Z) for b in (x, y, z))
        assert (ex * ey) * ez == ex * (ey * ez)


def test_additivity_of_length_support_wingr():
    basics = small_basics(6)
    for x in basics:
        for y in basics:
            prod = basic_multiply(x, y)
            if prod is None:
                continue
            assert prod.total_length() == x.total_length() + y.total_length()
            assert prod.wingr() == x.wingr() + y.wingr()
            assert prod.support() == tuple(
                a + b for a, b in zip(x.support(), y.support()))


def test_length_equals_support_sum():
    for b in small_basics(9):
        assert b.total_length() == sum(b.support())


def test_one_of_each_chord_pair_vanishes():
    # used by the small-model Hochschild complex
    for i in (1, 2, 3, 4):
        for j in (1, 2, 3, 4):
            x, y = Basic.chord(i, 1), Basic.chord(j, 1)
            assert basic_multiply(x, y) is None or \
                basic_multiply(y, x) is None


def test_known_values_from_tables():
    assert parse_basic("r1").support() == (1, 0, 0, 0)
    assert parse_basic("r12341").support() == (2, 1, 1, 1)
    assert parse_basic("i0").support() == (0, 0, 0, 0)
    assert parse_basic("r123").total_length() == 3
    assert parse_basic("i1").total_length() == 0
    assert parse_basic("U^2*r4").total_length() == 9
    assert parse_basic("r4").wingr() == 1
    assert parse_basic("r123").wingr() == 0
    assert parse_basic("U*r41234").wingr() == 3


def test_parse_format_round_trip_fixed():
    for text in ("r12", "i0", "U^2*r41 + i0", "r41234", "-2*U*r12 + 3*i1"):
        elt = parse_element(text, Z)
        assert parse_element(format_element(elt), Z) == elt


def test_parse_rejects_bad_input():
    with pytest.raises(ParseError):
        parse_element("r13", F2)
    with pytest.raises(ParseError):
        parse_element("r0", F2)
    with pytest.raises(ParseError):
        parse_element("U^-1*r1", F2)
    with pytest.raises(ParseError):
        parse_element("q2", F2)


def test_ring_mismatch_raises():
    with pytest.raises(RingMismatch):
        parse_element("r1", F2) * parse_element("r2", Z)


@st.composite
def elements(draw, ring=Z):
    terms = {}
    for _ in range(draw(st.integers(0, 4))):
        u = draw(st.integers(0, 2))
        if draw(st.booleans()):
            basic = Basic.idem(draw(st.integers(0, 1)), u)
        else:
            basic = Basic(u, draw(st.integers(1, 4)), draw(st.integers(1, 6)))
        terms[basic] = draw(st.integers(-5, 5))
    return Element(ring, terms)


@settings(max_examples=150, deadline=None)
@given(elements())
def test_parse_format_round_trip_random(elt):
    assert parse_element(format_element(elt), Z) == elt


@settings(max_examples=100, deadline=None)
@given(elements(), elements(), elements())
def test_module_axioms(x, y, z):
    assert x + y == y + x
    assert (x + y) + z == x + (y + z)
    assert x + Element.zero(Z) == x
    assert (x - x).is_zero()
    assert (x + y) * z == x * z + y * z


def test_reeb_basis_counts():
    assert len(list(reeb_basis(3))) == 12
    assert all(b.is_reeb for b in reeb_basis(5))
