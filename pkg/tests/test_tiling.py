"""Tests for tiling patterns and the weighted operations."""

import pytest

from torustile.algebra import Basic, Element, F2, Z, format_element, \
    parse_basic, parse_element
from torustile.tiling import (BOUND, E, N, S, W, TilingPattern,
                              enumerate_patterns,
                              enumerate_patterns_with_reason, mu, mu_basic,
                              validate_pattern)


def chords(text):
    return tuple(parse_basic(t) for t in text.split(","))


SINGLE_SQUARE = TilingPattern(((BOUND, BOUND, BOUND, BOUND),), S, ("none", 0))
# figure (b): one square, one 2-valent vertex whose label prefixes chord 1
FIG_B = TilingPattern(((BOUND, BOUND, BOUND, BOUND),), S, ("left", 1))
# figure (e): the 2x2 block, weight 1; squares 0=(0,0),1=(-1,0),2=(-1,1),3=(0,1)
FIG_E = TilingPattern(
    ((BOUND, 3, 1, BOUND),      # square 0: E,N,W,S
     (0, 2, BOUND, BOUND),      # square 1
     (3, BOUND, BOUND, 1),      # square 2
     (BOUND, BOUND, 2, 0)),     # square 3
    S, ("none", 0))


def test_single_square_is_figure_a():
    report = validate_pattern(SINGLE_SQUARE)
    assert report.valid
    assert (report.n, report.w, report.d) == (4, 0, 1)
    assert SINGLE_SQUARE.chord_sequence() == chords("r4,r3,r2,r1")
    assert SINGLE_SQUARE.output_element() == parse_basic("U*i1")
    assert SINGLE_SQUARE.seed_label() == 4


def test_figure_b_left_extended():
    report = validate_pattern(FIG_B)
    assert report.valid and (report.n, report.w, report.d) == (4, 0, 1)
    assert FIG_B.chord_sequence() == chords("r34,r3,r2,r1")
    assert FIG_B.output_element() == parse_basic("U*r3")


def test_figure_e_weight_one():
    report = validate_pattern(FIG_E)
    assert report.valid
    assert (report.n, report.w, report.d) == (8, 1, 4)
    assert FIG_E.chord_sequence() == chords("r41,r4,r34,r3,r23,r2,r12,r1")
    out = FIG_E.output_element()
    assert out.u == 4 and out.is_idempotent


def test_invalid_gluing_rejected():
    broken = TilingPattern(((0, BOUND, BOUND, BOUND),), S, ("none", 0))
    assert not validate_pattern(broken).valid


def test_label_violation_reported():
    # claimed labels must be a global rotation of the generated ones
    labels_ok = {(0, 4): 2, (0, 3): 1, (0, 2): 4, (0, 1): 3}
    assert validate_pattern(SINGLE_SQUARE, labels=labels_ok).valid
    labels_bad = {(0, 4): 4, (0, 3): 3, (0, 2): 2, (0, 1): 2}
    report = validate_pattern(SINGLE_SQUARE, labels=labels_bad)
    assert not report.valid and "label" in report.reason


def test_json_round_trip():
    for pattern in (SINGLE_SQUARE, FIG_B, FIG_E):
        data = pattern.to_json()
        assert TilingPattern.from_json(data) == pattern
    assert FIG_B.to_json()["root_chain"] == {"side": "left", "count": 1}
    assert SINGLE_SQUARE.to_json()["seed_label"] == 4


def test_enumerate_finds_the_figures():
    found = enumerate_patterns(chords("r4,r3,r2,r1"), 0)
    assert found == [SINGLE_SQUARE]
    found = enumerate_patterns(chords("r34,r3,r2,r1"), 0)
    assert found == [FIG_B]
    found = enumerate_patterns(chords("r41,r4,r34,r3,r23,r2,r12,r1"), 1)
    assert len(found) == 1
    assert found[0].chord_sequence() == FIG_E.chord_sequence()
    assert found[0].weight == 1 and found[0].d == 4


def test_enumerate_rejects_nonvanishing_products():
    patterns, reason = enumerate_patterns_with_reason(chords("r1,r2"), 1)
    assert patterns == [] and "position 0" in reason
    for w in (0, 1, 2):
        assert enumerate_patterns(chords("r1,r2"), w) == []


def test_enumerate_determinism():
    seq = chords("r41,r4,r34,r3,r23,r2,r12,r1")
    first = enumerate_patterns(seq, 1)
    second = enumerate_patterns(seq, 1)
    assert first == second
    assert [p.to_json() for p in first] == [p.to_json() for p in second]


GOLDEN_MU = [
    (0, "r4,r3,r2,r1", "U*i1"),
    (0, "r3,r2,r1,r4", "U*i0"),
    (0, "r2,r1,r4,r3", "U*i1"),
    (0, "r1,r4,r3,r2", "U*i0"),
    (0, "r3412,r1,r4,r34,r3,r2", "U^2*r34"),
    (0, "r1234,r3,r2,r12,r1,r41,r4,r34,r3,r2", "U^4*i0"),
    (0, "r34,r3,r2,r1", "U*r3"),
    (0, "r1234,r3,r2,r1", "U*r123"),
    (0, "r3,r2,r1,r4123", "U*r123"),
    (0, "r4,r3,r2,r12", "U*r2"),
    (0, "r4,r3,r2,r123", "U*r23"),
    (0, "r234,r3,r2,r1", "U*r23"),
    (0, "r4,r3,r2,r1234", "U*r234"),
    (1, "r41,r4,r34,r3,r23,r2,r12,r1", "U^4*i1"),
]


@pytest.mark.parametrize("weight,inputs,expected", GOLDEN_MU)
def test_golden_mu_values(weight, inputs, expected):
    for ring in (F2, Z):
        value = mu(weight, [parse_element(t, ring)
                            for t in inputs.split(",")], ring)
        assert value == parse_element(expected, ring), \
            "mu_%d^%d(%s) = %s" % (len(inputs.split(",")), weight, inputs,
                                   format_element(value))


def test_curvature():
    for ring in (F2, Z):
        assert mu(1, [], ring) == parse_element(
            "r1234+r2341+r3412+r4123", ring)
        assert mu(0, [], ring).is_zero()
        assert mu(2, [], ring).is_zero()


def test_odd_arity_vanishes():
    assert mu(0, [parse_element("r1", F2)], F2).is_zero()
    assert mu(1, chords("r3,r2,r1"), F2).is_zero()
    assert mu(0, chords("r1234,r3,r2,r12,r1"), F2).is_zero()


def test_idempotent_inputs():
    i0, r1 = parse_element("i0", F2), parse_element("r1", F2)
    assert mu(0, [i0, r1], F2) == r1
    assert mu(0, [r1, i0], F2).is_zero()
    assert mu(0, [parse_element("i1", F2),
                  *chords("r4,r3,r2,r1")[1:]], F2).is_zero()
    assert mu(1, [i0, i0], F2).is_zero()
    assert mu(0, chords("i1,r4,r3,r2") + (parse_element("r1", F2),),
              F2).is_zero()


def test_u_multilinearity():
    lhs = mu(0, chords("U*r4,r3,U^2*r2,r1"), F2)
    rhs = mu(0, chords("r4,r3,r2,r1"), F2).times_u(3)
    assert lhs == rhs


def test_mu2_is_multiplication():
    for x in ("r1", "r12", "U*r4", "i0"):
        for y in ("r2", "r23", "r1", "i1"):
            ex, ey = parse_element(x, Z), parse_element(y, Z)
            assert mu(0, [ex, ey], Z) == ex * ey


def test_mu2_positive_weight_vanishes():
    assert mu(1, chords("r1,r2"), F2).is_zero()
    assert mu(2, chords("r4,r1"), F2).is_zero()


def test_length_and_u_power_laws_sampled():
    from torustile.verify import Bounds, check_structural_laws
    report = check_structural_laws(Bounds(7, 2, 0))
    assert report.ok, report.failures[:3]


def test_coefficients_agree_mod_2():
    sequences = [
        ("r4,r3,r2,r1", 0), ("r41,r4,r34,r3,r23,r2,r12,r1", 1),
        ("r1234,r3,r2,r1", 0), ("r3412,r1,r4,r34,r3,r2", 0),
        ("r4,r3,r2,r1,r4,r3,r2,r1", 1), ("r2,r1,r4,r3,r2,r1", 1),
    ]
    for text, w in sequences:
        z_val = mu(w, chords(text), Z)
        assert z_val.reduce_mod2() == mu(w, chords(text), F2)
        assert all(c > 0 for c in z_val.terms.values())


def test_mu_ring_mismatch():
    with pytest.raises(ValueError):
        mu(0, [parse_element("r1", F2), parse_element("r2", Z)], F2)


def test_enumerate_weight_budgets():
    # no patterns when d < 1 or budgets cannot balance
    assert enumerate_patterns(chords("r1,r2"), 0) == []
    assert enumerate_patterns(chords("r4,r3"), 0) == []   # d = 0
    assert enumerate_patterns(chords("r4,r3,r2,r1"), 1) == []
    patterns, reason = enumerate_patterns_with_reason(chords("r4,r3"), 0)
    assert "d = w + n/2 - 1 < 1" in reason
