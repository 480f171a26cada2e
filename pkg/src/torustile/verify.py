"""Structural verification of the weighted A-infinity relations and the
grading, U-power, length, factorization and diet laws, within finite bounds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

from .algebra import Basic, Element, F2, Z, basic_multiply
from . import gradings
from .tiling import enumerate_patterns, mu, mu_basic


@dataclass(frozen=True)
class RelationInstance:
    """One weighted A-infinity relation: an input sequence and total weight."""

    inputs: Tuple[Basic, ...]
    total_weight: int
    ring: str


@dataclass
class Bounds:
    max_total_length: int = 10
    max_weight: int = 2
    max_idempotent_insertions: int = 1


@dataclass
class Report:
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def merge(self, other: "Report") -> None:
        self.checked += other.checked
        self.failures.extend(other.failures)


def ainfty_residual(inst: RelationInstance) -> Element:
    """Sum over p+q=n+1, u+v=w, i of mu_p^u(..., mu_q^v(...), ...), signed
    (-1)^i over Z (the (-1)^(r+st) sign with even inner arity).

    Parity and junction pre-filters skip the terms that vanish for
    structural reasons (odd arity, a nonzero consecutive product inside an
    operation window, strict unitality); mu_basic re-derives each skipped
    vanishing independently, so the filters are exercised by the tests.
    """
    inputs, w, ring = inst.inputs, inst.total_weight, inst.ring
    n = len(inputs)
    signed = ring == Z
    is_idem = [b.strip_u().is_idempotent for b in inputs]
    idem_positions = [i for i, flag in enumerate(is_idem) if flag]
    # prefix count of nonzero consecutive products, for O(1) window checks
    pref = [0]
    for i in range(n - 1):
        nonzero = basic_multiply(inputs[i], inputs[i + 1]) is not None
        pref.append(pref[-1] + (1 if nonzero else 0))

    def window_clean(i: int, q: int) -> bool:
        return pref[i + q - 1] - pref[i] == 0

    total = Element.zero(ring)

    def add_outer(u: int, i: int, q: int, inner: Element) -> None:
        nonlocal total
        p = n - q + 1
        if p % 2:
            return
        if (p, u) != (2, 0):
            if u > 0 and p == 2:
                return
            if any(pos < i or pos >= i + q for pos in idem_positions):
                return
        if p >= 4:
            # junctions strictly inside the prefix or suffix must vanish
            if i >= 2 and pref[i - 1] - pref[0] != 0:
                return
            if i + q <= n - 2 and pref[n - 1] - pref[i + q] != 0:
                return
        for body, coeff in inner.terms.items():
            if body.strip_u().is_idempotent and (p, u) != (2, 0):
                continue
            term = mu_basic(u, inputs[:i] + (body,) + inputs[i + q:], ring)
            if term.is_zero():
                continue
            if signed and i % 2:
                coeff = -coeff
            total = total + term.scale(coeff)

    for v in range(w + 1):
        u = w - v
        if v == 1:
            curv = mu(1, [], ring)
            for i in range(n + 1):
                add_outer(u, i, 0, curv)
        for q in range(2, n + 1, 2):
            for i in range(n - q + 1):
                if q == 2:
                    if v > 0:
                        continue
                    prod = basic_multiply(inputs[i], inputs[i + 1])
                    if prod is None:
                        continue
                    add_outer(u, i, 2, Element.of(prod, ring))
                    continue
                if any(is_idem[j] for j in range(i, i + q)):
                    continue
                if not window_clean(i, q):
                    continue
                inner = mu_basic(v, inputs[i:i + q], ring)
                if not inner.is_zero():
                    add_outer(u, i, q, inner)
    return total


def _reeb_sequences(max_total_length: int) -> Iterator[Tuple[Basic, ...]]:
    """All idempotent-composable sequences of Reeb elements with total
    length <= max_total_length (consecutive right/left idempotents match)."""

    def extend(seq: Tuple[Basic, ...], used: int) -> Iterator[Tuple[Basic, ...]]:
        if seq:
            yield seq
        last = seq[-1] if seq else None
        for length in range(1, max_total_length - used + 1):
            for start in (1, 2, 3, 4):
                chord = Basic.chord(start, length)
                if last is not None and \
                        last.right_idempotent() != chord.left_idempotent():
                    continue
                yield from extend(seq + (chord,), used + length)

    yield from extend((), 0)


def relation_instances(bounds: Bounds, ring: str) -> Iterator[RelationInstance]:
    """Composable Reeb sequences within bounds, with up to
    max_idempotent_insertions idempotents at the first/last positions."""
    for seq in _reeb_sequences(bounds.max_total_length):
        for w in range(bounds.max_weight + 1):
            yield RelationInstance(seq, w, ring)
            if bounds.max_idempotent_insertions >= 1:
                front = Basic.idem(seq[0].left_idempotent())
                back = Basic.idem(seq[-1].right_idempotent())
                yield RelationInstance((front,) + seq, w, ring)
                yield RelationInstance(seq + (back,), w, ring)


def check_relations(bounds: Bounds, ring: str,
                    progress: Optional[Callable[[int], None]] = None) -> Report:
    """The acceptance sweep: every residual within bounds must vanish; over
    Z the residual must also reduce mod 2 to the F2 residual."""
    report = Report()
    for inst in relation_instances(bounds, ring):
        residual = ainfty_residual(inst)
        report.checked += 1
        if not residual.is_zero():
            report.fail("nonzero residual for %s (w=%d): %s"
                        % (inst.inputs, inst.total_weight, residual))
            if len(report.failures) > 20:
                return report
        if progress and report.checked % 20000 == 0:
            progress(report.checked)
    return report


def check_mod2_reduction(bounds: Bounds) -> Report:
    """Spot identity: mu over Z reduces term-wise mod 2 to mu over F2."""
    report = Report()
    for seq in _reeb_sequences(bounds.max_total_length):
        for w in range(bounds.max_weight + 1):
            z_val = mu(w, list(seq), Z)
            f_val = mu(w, list(seq), F2)
            report.checked += 1
            if z_val.reduce_mod2() != f_val:
                report.fail("mod-2 reduction mismatch on %s w=%d" % (seq, w))
    return report


# ---------------------------------------------------------------------------
# gradedness and structural laws
# ---------------------------------------------------------------------------

def _graded_sides(basics: Sequence[Basic], w: int, out: Basic):
    """gr'(b) vs lambda_w^w lambda^(n-2) prod gr'(a_i), plus the projected
    and refined versions; returns list of (level, lhs, rhs)."""
    n = len(basics)
    big_rhs = gradings.LAMBDA_W_BIG.power(w) * gradings.LAMBDA_BIG.power(n - 2)
    for b in basics:
        big_rhs = big_rhs * gradings.gr_prime(b)
    rows = [("big", gradings.gr_prime(out), big_rhs)]
    mid_rhs = gradings.project_to_mid(big_rhs)
    rows.append(("mid", gradings.gr(out), mid_rhs))
    gamma_rhs = gradings.LAMBDA_W_GAMMA.power(w) * gradings.LAMBDA_GAMMA.power(n - 2)
    for b in basics:
        gamma_rhs = gamma_rhs * gradings.gamma(b)
    rows.append(("gamma", gradings.gamma(out), gamma_rhs))
    small_lhs = gradings.gr_psi(out)
    small_rhs_mid = gradings.refine(mid_rhs, basics[0].left_idempotent(),
                                    basics[-1].right_idempotent())
    rows.append(("refined", small_lhs, small_rhs_mid))
    return rows


def check_gradedness(bounds: Bounds) -> Report:
    """Every nonzero term of every operation within bounds is graded."""
    report = Report()
    for seq in _reeb_sequences(bounds.max_total_length):
        for w in range(bounds.max_weight + 1):
            value = mu(w, list(seq), F2)
            for out in value.terms:
                report.checked += 1
                for level, lhs, rhs in _graded_sides(seq, w, out):
                    if lhs != rhs:
                        report.fail("%s grading fails for mu_%d^%d%s -> %s: "
                                    "%s != %s" % (level, len(seq), w, seq,
                                                  out, lhs, rhs))
    return report


def check_structural_laws(bounds: Bounds) -> Report:
    """Odd-arity vanishing, U-power law U^(w+n/2-1), length law 4w+sum|a_i|,
    the two-factorizable-inputs property, and the diet property."""
    report = Report()
    for seq in _reeb_sequences(bounds.max_total_length):
        n = len(seq)
        for w in range(bounds.max_weight + 1):
            value = mu(w, list(seq), F2)
            report.checked += 1
            if n % 2 and not value.is_zero():
                report.fail("odd arity mu_%d^%d nonzero on %s" % (n, w, seq))
                continue
            if value.is_zero():
                continue
            for out in value.terms:
                if (n, w) != (2, 0) and out.u != w + n // 2 - 1:
                    report.fail("U-power law fails: %s w=%d -> %s" % (seq, w, out))
                if out.total_length() != 4 * w + sum(b.total_length() for b in seq):
                    report.fail("length law fails: %s w=%d -> %s" % (seq, w, out))
            if n + 2 * w > 4:
                factorable = sum(1 for b in seq if b.length >= 2)
                if factorable < 2:
                    report.fail("factorization property fails on %s w=%d"
                                % (seq, w))
            if w > 0:
                for out, coeff in value.terms.items():
                    if not _diet_witness(seq, w, out):
                        report.fail("diet property fails for term %s of %s w=%d"
                                    % (out, seq, w))
    return report


def _diet_witness(seq: Tuple[Basic, ...], w: int, out: Basic) -> bool:
    """Some factorization rho^i = rho rho' makes out a term of
    mu_{n+2}^{w-1}(..., rho, mu_0^1 summand tau, rho', ...)."""
    for i, chord in enumerate(seq):
        letters = chord.letters()
        for cut in range(1, len(letters)):
            left = Basic.from_letters(letters[:cut])
            right = Basic.from_letters(letters[cut:])
            for tau in (Basic.chord(s, 4) for s in (1, 2, 3, 4)):
                if left.right_idempotent() != tau.left_idempotent():
                    continue
                bigger = seq[:i] + (left, tau, right) + seq[i + 1:]
                value = mu(w - 1, list(bigger), F2)
                if out in value.terms:
                    return True
    return False


def check_bonsai(bounds: Bounds) -> Report:
    """Corolla terms carry exactly U^(w+n/2-1); two-corolla composites carry
    U^(dim(T)/2) with dim(T) = n + 2w - i - 1 (i = 2 internal vertices)."""
    report = Report()
    small = Bounds(min(bounds.max_total_length, 8), min(bounds.max_weight, 1),
                   0)
    for seq in _reeb_sequences(small.max_total_length):
        n = len(seq)
        for w in range(small.max_weight + 1):
            for out in mu(w, list(seq), F2).terms:
                report.checked += 1
                if (n, w) != (2, 0) and out.u != w + n // 2 - 1:
                    report.fail("corolla U-power fails on %s w=%d" % (seq, w))
            # compose two corollas: inner on a window, outer on the rest;
            # the composite tree has i=2 internal vertices, so dim(T) =
            # n + 2(u+w) - 3 and every nonzero term carries U^(dim/2)
            for u in range(small.max_weight + 1 - w):
                for q in range(0, n + 1):
                    for i in range(n - q + 1):
                        inner = mu(w, list(seq[i:i + q]), F2)
                        if inner.is_zero():
                            continue
                        outer_inputs: List = (list(seq[:i]) + [inner]
                                              + list(seq[i + q:]))
                        value = mu(u, outer_inputs, F2)
                        if value.is_zero():
                            continue
                        p = n - q + 1
                        dim = n + 2 * (u + w) - 2 - 1
                        if dim % 2:
                            report.fail("odd tree dimension for nonzero "
                                        "composite on %s" % (seq,))
                            continue
                        for out in value.terms:
                            report.checked += 1
                            if out.u != dim // 2:
                                report.fail(
                                    "composite U-power fails on %s: outer "
                                    "mu_%d^%d inner mu_%d^%d at %d -> %s"
                                    % (seq, p, u, q, w, i, out))
    return report


def check_central_curvature(max_length: int = 12) -> Report:
    """mu_2(mu_0^1, a) = mu_2(a, mu_0^1) for all basics up to max_length."""
    from .tiling import curvature
    report = Report()
    for ring in (F2, Z):
        curv = curvature(ring)
        basics = [Basic.idem(0), Basic.idem(1)]
        for u in range(max_length // 4 + 1):
            for length in range(1, max_length - 4 * u + 1):
                for start in (1, 2, 3, 4):
                    basics.append(Basic(u, start, length))
        for b in basics:
            elt = Element.of(b, ring)
            report.checked += 1
            if curv * elt != elt * curv:
                report.fail("curvature is not central on %s over %s"
                            % (b, ring))
    return report
