"""Tests for the small-model Hochschild complexes and their homology."""

import pytest

from torustile.algebra import Basic, F2, Z, basics_up_to, parse_basic
from torustile import hochschild as hh
from torustile.hochschild import (AssocGen, WeightedGen, assoc_differential,
                                  build_slice, enumerate_slice, homology,
                                  weighted_differential, _bodies)


def agen(a, b):
    return AssocGen(parse_basic(a), parse_basic(b))


def wgen(a, b, h=False):
    return WeightedGen(parse_basic(a), parse_basic(b), h)


def combo_of(pairs):
    return {g: c for g, c in pairs}


def test_generator_complementarity_enforced():
    with pytest.raises(ValueError):
        AssocGen(parse_basic("r1"), parse_basic("r2"))
    with pytest.raises(ValueError):
        WeightedGen(parse_basic("i0"), parse_basic("i0"), False)
    AssocGen(parse_basic("r1"), parse_basic("r1"))   # valid


def test_assoc_differential_examples():
    assert assoc_differential(agen("r123", "r123"), F2) == combo_of([
        (agen("r1234", "r4123"), 1), (agen("r4123", "r1234"), 1)])
    assert assoc_differential(agen("r123", "r123"), Z) == combo_of([
        (agen("r1234", "r4123"), 1), (agen("r4123", "r1234"), -1)])
    assert assoc_differential(agen("r12341", "r12341"), F2) == {}
    assert assoc_differential(agen("U*r1", "r12341"), Z) == {}
    assert assoc_differential(agen("U*i1", "r1234"), Z) == combo_of([
        (agen("U*r1", "r12341"), 1), (agen("U*r4", "r41234"), 1)])
    assert assoc_differential(agen("r1234", "r4123"), F2) == combo_of([
        (agen("r41234", "r41234"), 1)])
    assert assoc_differential(agen("U*r123", "r1234123"), F2) == combo_of([
        (agen("U*r1234", "r41234123"), 1), (agen("U*r4123", "r12341234"), 1)])


def test_weighted_differential_examples():
    assert weighted_differential(wgen("r1234", "i1"), F2) == combo_of([
        (wgen("r12341", "r1"), 1), (wgen("r41234", "r4"), 1),
        (wgen("U*r123", "r123"), 1), (wgen("U*r234", "r234"), 1)])
    assert weighted_differential(wgen("i0", "i1"), F2) == combo_of(
        [(wgen("r%d" % i, "r%d" % i), 1) for i in (1, 2, 3, 4)])
    assert weighted_differential(wgen("i1", "i0"), F2) == combo_of(
        [(wgen("r%d" % i, "r%d" % i), 1) for i in (1, 2, 3, 4)])
    assert weighted_differential(wgen("r1", "r1"), Z) == combo_of([
        (wgen("U*i1", "r1234"), -1), (wgen("U*i0", "r2341"), 1),
        (wgen("U*i1", "r3412"), -1), (wgen("U*i0", "r4123"), 1)])


def test_h_differential():
    # d1 replaces h by the curvature chords (with matching idempotents)
    d = weighted_differential(wgen("U^2*i0", "i1", h=True), F2)
    d1_targets = {g for g in d if not g.h and g.b.length == 4}
    assert d1_targets == {wgen("U^2*i0", "r2341"), wgen("U^2*i0", "r4123")}


def test_differentials_preserve_bigradings():
    # assoc: (n,k) -> (n+1,k-1); weighted: (W,k) -> (W,k-1)
    for gen in enumerate_slice("assoc", (4, -1), 8):
        for out in assoc_differential(gen, F2):
            assert out.bigrading() == (5, -2)
    for gen in enumerate_slice("weighted", (1, -1), 16, 2):
        for out in weighted_differential(gen, F2):
            assert out.bigrading() == (1, -2)


def d_squared_zero(model, ring, cutoff, winding=2):
    diff = assoc_differential if model == "assoc" else weighted_differential
    bad = []
    for b in _bodies(cutoff, None if model == "assoc" else winding):
        flags = (False,) if model == "assoc" else (False, True)
        for h in flags:
            for a in basics_up_to(cutoff):
                if a.left_idempotent() == b.right_idempotent():
                    continue
                if a.right_idempotent() == b.left_idempotent():
                    continue
                gen = (AssocGen(a, b) if model == "assoc"
                       else WeightedGen(a, b, h))
                acc = {}
                for g1, c1 in diff(gen, ring).items():
                    for g2, c2 in diff(g1, ring).items():
                        acc[g2] = acc.get(g2, 0) + c1 * c2
                acc = {g: (c % 2 if ring == F2 else c)
                       for g, c in acc.items() if (c % 2 if ring == F2 else c)}
                if acc:
                    bad.append(gen)
    return bad


@pytest.mark.parametrize("model", ["assoc", "weighted"])
@pytest.mark.parametrize("ring", [F2, Z])
def test_d_squared_zero(model, ring):
    assert d_squared_zero(model, ring, 8) == []


def test_slice_listings():
    weighted_11 = enumerate_slice("weighted", (1, -1), 16, 2)
    assert [str(g) for g in weighted_11] == [
        "r1234[i1]", "r2341[i0]", "r3412[i1]", "r4123[i0]",
        "U*i0[i1]", "U*i1[i0]"]
    weighted_01 = enumerate_slice("weighted", (0, 1), 16, 2)
    assert [str(g) for g in weighted_01] == ["i0[i1]", "i1[i0]"]
    assoc_4m1 = enumerate_slice("assoc", (4, -1), 10)
    names = {str(g) for g in assoc_4m1}
    assert "U*i1[r1234]" in names and "r1234[r4123]" in names
    assert len(assoc_4m1) == 12
    # |a| = |b| on every assoc generator (the grading analysis)
    for nk in ((3, 0), (4, -1), (5, -2)):
        for gen in enumerate_slice("assoc", nk, 10):
            assert gen.a.total_length() == gen.b.total_length()


def test_assoc_homology_f2():
    for n in range(3, 9):
        result = homology("assoc", (n, -1), F2, max(n + 4, 10))
        assert result.dimension == (1 if n == 4 else 0), (n, result.dimension)
        result = homology("assoc", (n, -2), F2, max(n + 4, 10))
        assert result.dimension == (1 if n == 5 else 0), (n, result.dimension)


def test_assoc_homology_representatives():
    result = homology("assoc", (4, -1), F2, 10, representatives=True)
    rep = result.representatives[0]
    expected = {AssocGen(Basic.idem(c % 2, 1), Basic.chord(c, 4)): 1
                for c in (1, 2, 3, 4)}
    assert rep == expected
    result = homology("assoc", (5, -2), F2, 10, representatives=True)
    rep = result.representatives[0]
    # the class is represented by any of the four U rho_i [rho_{i,5}]
    assert len(rep) == 1
    [(gen, coeff)] = rep.items()
    assert coeff == 1 and gen.a.u == 1 and gen.a.length == 1
    assert gen.b.length == 5 and gen.b.start == gen.a.start


def test_assoc_homology_integral():
    result = homology("assoc", (4, -1), Z, 10, representatives=True)
    assert result.dimension == 1 and not result.invariant_factors
    rep = result.representatives[0]
    # alternating signs: U[r1234] - U[r2341] + U[r3412] - U[r4123], up to
    # a global sign
    signs = {gen.b.start: coeff for gen, coeff in rep.items()}
    assert abs(signs[1]) == 1
    assert signs[2] == -signs[1] and signs[3] == signs[1] \
        and signs[4] == -signs[1]
    result = homology("assoc", (5, -2), Z, 10)
    assert result.dimension == 1 and not result.invariant_factors


def test_weighted_homology():
    result = homology("weighted", (1, -1), F2, 16, 2, representatives=True)
    assert result.dimension == 2
    reps = {frozenset((str(g), c) for g, c in rep.items())
            for rep in result.representatives}
    chords = frozenset((t, 1) for t in
                       ("r1234[i1]", "r2341[i0]", "r3412[i1]", "r4123[i0]"))
    us = frozenset((t, 1) for t in ("U*i0[i1]", "U*i1[i0]"))
    assert reps == {chords, us}

    result_z = homology("weighted", (1, -1), Z, 16, 2, representatives=True)
    assert result_z.dimension == 2 and not result_z.invariant_factors
    # the integral representatives reduce mod 2 to the two stated classes
    mods = {frozenset((str(g), c % 2) for g, c in rep.items() if c % 2)
            for rep in result_z.representatives}
    assert mods == {chords, us}

    for W in (2, 3):
        assert homology("weighted", (W, -1), F2, 16, 2).dimension == 0
        assert homology("weighted", (W, -2), F2, 16, 2).dimension == 0
        assert homology("weighted", (W, -1), Z, 16, 2).dimension == 0


def test_no_torsion_universal_coefficients():
    for model, gradletters in (("assoc", [(n, k) for n in range(3, 8)
                                          for k in (-1, -2)]),
                               ("weighted", [(W, -1) for W in (1, 2, 3)])):
        for bigrading in gradletters:
            cutoff = 16 if model == "weighted" else max(bigrading[0] + 4, 10)
            f2_result = homology(model, bigrading, F2, cutoff)
            z_result = homology(model, bigrading, Z, cutoff)
            assert not z_result.invariant_factors, (model, bigrading)
            assert f2_result.dimension == z_result.dimension, \
                (model, bigrading)


def test_cutoff_stability():
    for bigrading in ((1, -1), (2, -1), (1, -2)):
        base = homology("weighted", bigrading, F2, 16, 2)
        bigger = homology("weighted", bigrading, F2, 20, 2)
        assert (base.dimension, base.invariant_factors) == \
            (bigger.dimension, bigger.invariant_factors)
    base = homology("assoc", (4, -1), F2, 10)
    bigger = homology("assoc", (4, -1), F2, 14)
    assert base.dimension == bigger.dimension == 1


def test_cycles_hitting_u_are_homologous_to_generator():
    """Every F2 cycle in (4,-1) with coefficient 1 on U i1[r1234] is
    homologous to the canonical generator."""
    from torustile import linalg
    here = build_slice("assoc", (4, -1), F2, 10)
    prev = build_slice("assoc", (3, 0), F2, 10)
    index = {g: i for i, g in enumerate(here.basis)}
    marked = index[AssocGen(Basic.idem(1, 1), Basic.chord(1, 4))]
    kernel = linalg.f2_kernel(here.matrix, len(here.basis))
    gen_vec = 0
    for c in (1, 2, 3, 4):
        gen_vec |= 1 << index[AssocGen(Basic.idem(c % 2, 1),
                                       Basic.chord(c, 4))]
    image = []
    tgt_index = {g: i for i, g in enumerate(prev.target_basis)}
    for j, gen in enumerate(prev.basis):
        vec = 0
        for out, coeff in assoc_differential(gen, F2).items():
            if coeff % 2:
                vec |= 1 << index[out]
        image.append(vec)
    image_basis = linalg.f2_row_reduce(image)
    # enumerate the kernel and check the marked-coefficient cycles
    assert len(kernel) <= 12
    count = 0
    for mask in range(1 << len(kernel)):
        vec = 0
        for i in range(len(kernel)):
            if mask >> i & 1:
                vec ^= kernel[i]
        if vec >> marked & 1:
            count += 1
            assert linalg.f2_in_span(vec ^ gen_vec, image_basis)
    assert count > 0


def test_listing_mismatch_guard():
    # an inadequate cutoff must fail loudly, not silently truncate
    with pytest.raises(ValueError):
        enumerate_slice("assoc", (6, -2), 4)
