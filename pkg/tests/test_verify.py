"""Tests for the A-infinity relation verifier and structural laws."""

from torustile.algebra import Basic, F2, Z, parse_basic, parse_element
from torustile.tiling import mu
from torustile.verify import (Bounds, RelationInstance, ainfty_residual,
                              check_bonsai, check_central_curvature,
                              check_gradedness, check_mod2_reduction,
                              check_relations, relation_instances)


def seq(text):
    return tuple(parse_basic(t) for t in text.split(","))


def test_weight_one_three_input_relation():
    # the (L0+)/(R0-) cancellation: two terms, both U r123
    inst = RelationInstance(seq("r3,r2,r1"), 1, F2)
    assert ainfty_residual(inst).is_zero()
    lhs = mu(0, [mu(1, [], F2)] + [parse_element(t, F2)
                                   for t in ("r3", "r2", "r1")], F2)
    rhs = mu(0, [parse_element(t, F2) for t in ("r3", "r2", "r1")]
             + [mu(1, [], F2)], F2)
    assert lhs == rhs == parse_element("U*r123", F2)


def test_idempotent_relation_instance():
    inst = RelationInstance(seq("i1,r4,r3,r2,r1"), 0, F2)
    assert ainfty_residual(inst).is_zero()
    # the two cancelling terms from the proof
    left = mu(0, [parse_element("i1", F2),
                  mu(0, [parse_element(t, F2)
                         for t in ("r4", "r3", "r2", "r1")], F2)], F2)
    right = mu(0, [mu(0, [parse_element("i1", F2),
                          parse_element("r4", F2)], F2)]
               + [parse_element(t, F2) for t in ("r3", "r2", "r1")], F2)
    assert left == right == parse_element("U*i1", F2)


def test_signed_residuals_vanish():
    for text, w in (("r3,r2,r1", 1), ("r4,r3,r2,r1,r4", 0),
                    ("r41,r4,r34,r3,r23,r2,r12,r1,r4", 1),
                    ("r1234,r3,r2,r1,r4", 0), ("r2,r1,r4,r3,r2", 2)):
        inst = RelationInstance(seq(text), w, Z)
        assert ainfty_residual(inst).is_zero(), (text, w)


def test_relation_sweep_small_box():
    for ring in (F2, Z):
        report = check_relations(Bounds(6, 2, 1), ring)
        assert report.ok, report.failures[:3]
        assert report.checked > 3000


def test_relation_instances_include_idempotents():
    instances = list(relation_instances(Bounds(2, 0, 1), F2))
    kinds = {inst.inputs[0].is_idempotent or inst.inputs[-1].is_idempotent
             for inst in instances}
    assert kinds == {True, False}


def test_mod2_reduction():
    report = check_mod2_reduction(Bounds(6, 2, 0))
    assert report.ok, report.failures[:3]


def test_gradedness_small_box():
    report = check_gradedness(Bounds(7, 2, 0))
    assert report.ok, report.failures[:3]
    assert report.checked > 50


def test_bonsai_small_box():
    report = check_bonsai(Bounds(8, 1, 0))
    assert report.ok, report.failures[:3]


def test_central_curvature():
    report = check_central_curvature(12)
    assert report.ok, report.failures[:3]
    assert report.checked > 50
