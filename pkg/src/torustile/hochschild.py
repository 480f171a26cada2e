"""Small-model Hochschild complexes of the torus algebra and a truncated
cochain calculus (star product, differential, obstruction cocycles).

Generators are pairs a[b] with complementary idempotents: a ranges over
basic elements of A[U]; b over basic elements of A (associative model) or
of A[h]/(h^2) (weighted model, at most one factor of h, stored as a flag).
Only the lambda-power part of the Gamma-grading survives, giving the
bigradings (n, k) (length, homological) and (W, k) (weight, homological).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .algebra import (Basic, Element, F2, Z, LENGTH4_CHORDS, basic_multiply,
                      basics_up_to)
from . import gradings
from .gradings import Gamma, MidGrading, alpha, gamma
from . import linalg
from .tiling import curvature, mu_basic

# gamma'(h) = lambda_d * lambda_w^{-1}; see the decisions ledger for why the
# inverse of the displayed value is forced by the bigrading rules
GAMMA_H = Gamma(MidGrading(2, 0, 0), -1)


def _complementary(a: Basic, left_b: int, right_b: int) -> bool:
    return (a.left_idempotent() != right_b and a.right_idempotent() != left_b)


@dataclass(frozen=True, order=True)
class AssocGen:
    """Generator a (x) [b] of the associative small model."""

    a: Basic
    b: Basic

    def __post_init__(self):
        if self.b.u:
            raise ValueError("b may not carry U factors")
        if not _complementary(self.a, self.b.left_idempotent(),
                              self.b.right_idempotent()):
            raise ValueError("idempotents of %s[%s] are not complementary"
                             % (self.a, self.b))

    def gamma_value(self) -> Gamma:
        return gradings.LAMBDA_GAMMA * gamma(self.a) * alpha(gamma(self.b))

    def bigrading(self) -> Optional[Tuple[int, int]]:
        """(n, k) with n the length of b, or None outside the Gamma part."""
        k = gradings.is_lambda_power(self.gamma_value())
        if k is None:
            return None
        return (self.b.total_length(), k)

    def __str__(self) -> str:
        return "%s[%s]" % (self.a, self.b)


@dataclass(frozen=True, order=True)
class WeightedGen:
    """Generator a [h^eps * b] of the weighted small model."""

    a: Basic
    b: Basic
    h: bool

    def __post_init__(self):
        if self.b.u:
            raise ValueError("b may not carry U factors")
        if not _complementary(self.a, self.b.left_idempotent(),
                              self.b.right_idempotent()):
            raise ValueError("idempotents of %s[%s] are not complementary"
                             % (self.a, self.b))

    def gamma_value(self) -> Gamma:
        out = gradings.LAMBDA_GAMMA * gamma(self.a)
        if self.h:
            out = out * GAMMA_H
        return out * alpha(gamma(self.b))

    def bigrading(self) -> Optional[Tuple[int, int]]:
        """(W, k) defined by gamma(a[b]) = lambda_w^W lambda_d^k."""
        value = self.gamma_value()
        if value.g.a2 or value.g.b2 or value.g.m2 % 2:
            return None
        return (value.w, value.g.m2 // 2)

    def body_parity(self) -> int:
        # Z/2 grading of b: length mod 2, with h odd
        return (self.b.length + (1 if self.h else 0)) % 2

    def __str__(self) -> str:
        inner = ("h*" if self.h else "") + str(self.b)
        return "%s[%s]" % (self.a, inner)


Combo = Dict  # {generator: coefficient}


def _add(combo: Combo, gen, coeff: int) -> None:
    combo[gen] = combo.get(gen, 0) + coeff


def _cleanup(combo: Combo, ring: str) -> Combo:
    if ring == F2:
        return {g: c % 2 for g, c in combo.items() if c % 2}
    return {g: c for g, c in combo.items() if c}


def assoc_differential(gen: AssocGen, ring: str) -> Combo:
    """d(a[b]) = sum_i (-1)^{|b|} rho_i.a [b.rho_i] + a.rho_i [rho_i.b]."""
    combo: Combo = {}
    sign_b = -1 if (ring == Z and gen.b.length % 2) else 1
    for i in (1, 2, 3, 4):
        rho = Basic.chord(i, 1)
        left = basic_multiply(rho, gen.a)
        hook = basic_multiply(gen.b, rho)
        if left is not None and hook is not None:
            _add(combo, AssocGen(left, hook), sign_b)
        right = basic_multiply(gen.a, rho)
        hook2 = basic_multiply(rho, gen.b)
        if right is not None and hook2 is not None:
            _add(combo, AssocGen(right, hook2), 1)
    return _cleanup(combo, ring)


def _bmul_right(b: Basic, h: bool, x: Basic) -> Optional[Tuple[Basic, bool, int]]:
    """(h^eps b) * x; h is rightmost-neutral so no sign appears."""
    prod = basic_multiply(b, x)
    return None if prod is None else (prod, h, 1)


def _bmul_left(x: Basic, b: Basic, h: bool) -> Optional[Tuple[Basic, bool, int]]:
    """x * (h^eps b) = (-1)^{|x| eps} h^eps (x b): h is graded-central."""
    prod = basic_multiply(x, b)
    if prod is None:
        return None
    sign = -1 if (h and x.length % 2) else 1
    return (prod, h, sign)


def weighted_differential(gen: WeightedGen, ring: str) -> Combo:
    """d = d1 (h-differential) + d2 (rho hooks) + d4 (mu_4 corrections),
    with the Z signs (-1)^{||b||} on the first and third mu_4 families and
    on the first rho-hook family."""
    combo: Combo = {}
    signed = ring == Z
    sign_b = -1 if (signed and gen.body_parity()) else 1

    # d1: replace h by the sum of the four length-4 chords
    if gen.h:
        for tau in LENGTH4_CHORDS:
            prod = basic_multiply(tau, gen.b)
            if prod is not None:
                _add(combo, WeightedGen(gen.a, prod, False), 1)

    # d2
    for i in (1, 2, 3, 4):
        rho = Basic.chord(i, 1)
        left = basic_multiply(rho, gen.a)
        if left is not None:
            hook = _bmul_right(gen.b, gen.h, rho)
            if hook is not None:
                body, hh, s = hook
                _add(combo, WeightedGen(left, body, hh), sign_b * s)
        right = basic_multiply(gen.a, rho)
        if right is not None:
            hook = _bmul_left(rho, gen.b, gen.h)
            if hook is not None:
                body, hh, s = hook
                _add(combo, WeightedGen(right, body, hh),
                     s if signed else 1)

    # d4: the eight mu_4 correction families
    def mu4(x1, x2, x3, x4) -> Element:
        return mu_basic(0, (x1, x2, x3, x4), ring)

    def chord_run(start: int, count: int) -> Basic:
        return Basic.chord(start, count)

    for i in (1, 2, 3, 4):
        r = lambda j: Basic.chord(((j - 1) % 4) + 1, 1)
        fam = [
            (mu4(r(i + 3), r(i + 2), r(i + 1), gen.a),
             _bmul_right(gen.b, gen.h, chord_run(i + 1, 3)), sign_b),
            (mu4(r(i + 2), r(i + 1), gen.a, r(i - 1)),
             _sandwich(r(i - 1), gen.b, gen.h, chord_run(i + 1, 2)), 1),
            (mu4(r(i + 1), gen.a, r(i - 1), r(i - 2)),
             _sandwich(chord_run(i - 2, 2), gen.b, gen.h, r(i + 1)), sign_b),
            (mu4(gen.a, r(i - 1), r(i - 2), r(i - 3)),
             _bmul_left(chord_run(i - 3, 3), gen.b, gen.h), 1),
        ]
        for value, hook, fam_sign in fam:
            if value.is_zero() or hook is None:
                continue
            body, hh, hook_sign = hook
            for out, coeff in value.terms.items():
                _add(combo, WeightedGen(out, body, hh),
                     coeff * fam_sign * (hook_sign if signed else 1))
    return _cleanup(combo, ring)


def _sandwich(x: Basic, b: Basic, h: bool, y: Basic
              ) -> Optional[Tuple[Basic, bool, int]]:
    right = _bmul_right(b, h, y)
    if right is None:
        return None
    body, hh, s1 = right
    left = _bmul_left(x, body, hh)
    if left is None:
        return None
    body2, hh2, s2 = left
    return (body2, hh2, s1 * s2)


# ---------------------------------------------------------------------------
# slice enumeration: brute force and classification, cross-checked
# ---------------------------------------------------------------------------

class ListingMismatch(RuntimeError):
    """Brute-force and classification listings disagree (grading bug)."""


def _bodies(cutoff: int, winding: Optional[int]) -> List[Basic]:
    out = [Basic.idem(0), Basic.idem(1)]
    for length in range(1, cutoff + 1):
        for start in (1, 2, 3, 4):
            chord = Basic.chord(start, length)
            if winding is None or chord.wingr() <= winding:
                out.append(chord)
    return out


def _assoc_brute(bigrading: Tuple[int, int], cutoff: int) -> List[AssocGen]:
    n, k = bigrading
    if n > cutoff:
        raise ValueError("cutoff %d < length grading %d" % (cutoff, n))
    gens = []
    bodies = [b for b in _bodies(cutoff, None) if b.total_length() == n]
    for b in bodies:
        for a in basics_up_to(cutoff):
            if not _complementary(a, b.left_idempotent(), b.right_idempotent()):
                continue
            gen = AssocGen(a, b)
            if gen.bigrading() == (n, k):
                gens.append(gen)
    return sorted(gens)


def _weighted_brute(bigrading: Tuple[int, int], cutoff: int,
                    winding: int) -> List[WeightedGen]:
    W, k = bigrading
    gens = []
    for b in _bodies(cutoff, winding):
        for h in (False, True):
            for a in basics_up_to(cutoff):
                if not _complementary(a, b.left_idempotent(),
                                      b.right_idempotent()):
                    continue
                gen = WeightedGen(a, b, h)
                if gen.bigrading() == (W, k):
                    gens.append(gen)
    return sorted(gens)


def _seeds() -> List[Tuple[Basic, Basic]]:
    seeds = [(Basic.idem(0), Basic.idem(1)), (Basic.idem(1), Basic.idem(0))]
    for s in (1, 2, 3, 4):
        seeds.append((Basic.chord(s, 1), Basic.chord(s, 1)))
        seeds.append((Basic.chord(s, 3), Basic.chord(s, 3)))
    return seeds


def _a_steps(a: Basic, cutoff: int) -> Iterable[Basic]:
    if a.total_length() + 4 > cutoff:
        return
    yield a.times_u(1)
    for tau in LENGTH4_CHORDS:
        left = basic_multiply(a, tau)
        if left is not None:
            yield left
        right = basic_multiply(tau, a)
        if right is not None:
            yield right


def _b_steps(b: Basic, cutoff: int) -> Iterable[Basic]:
    if b.total_length() + 4 > cutoff:
        return
    for sigma in LENGTH4_CHORDS:
        left = basic_multiply(b, sigma)
        if left is not None:
            yield left
        right = basic_multiply(sigma, b)
        if right is not None:
            yield right


def _assoc_classified(cutoff: int) -> List[AssocGen]:
    """Closure of the seed generators under simultaneous length-4
    enlargements of both sides (the classification (C-1)-(C-3))."""
    seen = set(_seeds())
    frontier = list(seen)
    while frontier:
        a, b = frontier.pop()
        for a2 in _a_steps(a, cutoff):
            for b2 in _b_steps(b, cutoff):
                if (a2, b2) not in seen:
                    seen.add((a2, b2))
                    frontier.append((a2, b2))
    return sorted(AssocGen(a, b) for a, b in seen)


def _weighted_classified(cutoff: int, winding: int) -> List[WeightedGen]:
    """Closure under independent a-side and b-side enlargements plus at
    most one factor of h (the classification (E-1)-(E-3))."""
    seen = {(a, b, False) for a, b in _seeds()}
    frontier = list(seen)
    while frontier:
        a, b, h = frontier.pop()
        nxt = []
        for a2 in _a_steps(a, cutoff):
            nxt.append((a2, b, h))
        for b2 in _b_steps(b, cutoff):
            if b2.wingr() <= winding:
                nxt.append((a, b2, h))
        if not h:
            nxt.append((a, b, True))
        for item in nxt:
            if item not in seen:
                seen.add(item)
                frontier.append(item)
    return sorted(WeightedGen(a, b, h) for a, b, h in seen)


def enumerate_slice(model: str, bigrading: Tuple[int, int], cutoff: int,
                    winding: int = 2, cross_check: bool = True):
    """Basis of one bigraded slice; both enumeration routes must agree."""
    if model == "assoc":
        brute = _assoc_brute(bigrading, cutoff)
        if cross_check:
            listed = [g for g in _assoc_classified(cutoff)
                      if g.bigrading() == bigrading
                      and g.a.total_length() <= cutoff]
            if listed != brute:
                raise ListingMismatch(
                    "assoc slice %s: classification %s vs brute force %s"
                    % (bigrading, listed, brute))
        return brute
    if model == "weighted":
        brute = _weighted_brute(bigrading, cutoff, winding)
        if cross_check:
            listed = [g for g in _weighted_classified(cutoff, winding)
                      if g.bigrading() == bigrading
                      and g.a.total_length() <= cutoff
                      and g.b.total_length() <= cutoff]
            if listed != brute:
                raise ListingMismatch(
                    "weighted slice %s: classification %s vs brute force %s"
                    % (bigrading, listed, brute))
        return brute
    raise ValueError("model must be 'assoc' or 'weighted'")


# ---------------------------------------------------------------------------
# bigraded slices and homology
# ---------------------------------------------------------------------------

@dataclass
class BigradedSlice:
    model: str
    ring: str
    bigrading: Tuple[int, int]
    basis: List
    target_basis: List
    matrix: List[List[int]]   # rows = target coords, cols = source coords

    def to_json(self) -> dict:
        triplets = [[i, j, v] for i, row in enumerate(self.matrix)
                    for j, v in enumerate(row) if v]
        return {
            "model": self.model,
            "ring": self.ring,
            "bigrading": list(self.bigrading),
            "basis": [str(g) for g in self.basis],
            "matrix": triplets,
        }


def _next_bigrading(model: str, bigrading: Tuple[int, int]) -> Tuple[int, int]:
    if model == "assoc":
        n, k = bigrading
        return (n + 1, k - 1)
    W, k = bigrading
    return (W, k - 1)


def _prev_bigrading(model: str, bigrading: Tuple[int, int]) -> Tuple[int, int]:
    if model == "assoc":
        n, k = bigrading
        return (n - 1, k + 1)
    W, k = bigrading
    return (W, k + 1)


def _differential(model: str, gen, ring: str) -> Combo:
    if model == "assoc":
        return assoc_differential(gen, ring)
    return weighted_differential(gen, ring)


def build_slice(model: str, bigrading: Tuple[int, int], ring: str,
                cutoff: int, winding: int = 2,
                cross_check: bool = True) -> BigradedSlice:
    """One slice with its differential matrix into the next bigrading."""
    source = enumerate_slice(model, bigrading, cutoff, winding, cross_check)
    target = enumerate_slice(model, _next_bigrading(model, bigrading),
                             cutoff + 4, winding + 1, cross_check)
    index = {g: i for i, g in enumerate(target)}
    matrix = [[0] * len(source) for _ in range(len(target))]
    for j, gen in enumerate(source):
        for out, coeff in _differential(model, gen, ring).items():
            if out not in index:
                raise ListingMismatch(
                    "differential image %s of %s not in the %s slice %s "
                    "(cutoff too small?)" % (out, gen, model,
                                             _next_bigrading(model, bigrading)))
            matrix[index[out]][j] = coeff
    return BigradedSlice(model, ring, bigrading, source, target, matrix)


@dataclass
class HomologyResult:
    ring: str
    dimension: int                    # F2 dimension / Z free rank
    invariant_factors: List[int]      # nontrivial torsion (Z only)
    representatives: List[Dict]       # generator -> coefficient

    def group_name(self) -> str:
        if self.ring == F2:
            return "F2^%d" % self.dimension
        parts = ["Z"] * self.dimension + ["Z/%d" % d
                                          for d in self.invariant_factors]
        return " + ".join(parts) if parts else "0"


def homology(model: str, bigrading: Tuple[int, int], ring: str,
             cutoff: int, winding: int = 2, representatives: bool = False,
             cross_check: bool = True) -> HomologyResult:
    """ker/im at one bigraded slice, via GF(2) elimination or Smith normal
    form; representatives are chosen cycle vectors."""
    here = build_slice(model, bigrading, ring, cutoff, winding, cross_check)
    prev_grading = _prev_bigrading(model, bigrading)
    prev = build_slice(model, prev_grading, ring, cutoff, winding, cross_check)
    # the previous slice must map into exactly our basis
    index = {g: i for i, g in enumerate(here.basis)}
    image_cols: List[List[int]] = []
    for j, gen in enumerate(prev.basis):
        vec = [0] * len(here.basis)
        for out, coeff in _differential(model, gen, ring).items():
            if out not in index:
                raise ListingMismatch(
                    "image term %s of %s missing from slice %s"
                    % (out, gen, bigrading))
            vec[index[out]] = coeff
        image_cols.append(vec)

    nsrc = len(here.basis)
    if nsrc == 0:
        return HomologyResult(ring, 0, [], [])

    if ring == F2:
        kernel_bits = linalg.f2_kernel(here.matrix, nsrc)
        image_bits = [sum(1 << i for i, v in enumerate(col) if v % 2)
                      for col in image_cols]
        image_basis = linalg.f2_row_reduce([b for b in image_bits if b])
        for b in image_bits:
            if not linalg.f2_in_span(b, linalg.f2_row_reduce(kernel_bits)):
                raise ArithmeticError("image is not contained in the kernel")
        reps: List[Dict] = []
        quotient_basis = list(image_basis)
        dim = 0
        for vec in kernel_bits:
            if not linalg.f2_in_span(vec, quotient_basis):
                quotient_basis = linalg.f2_row_reduce(quotient_basis + [vec])
                dim += 1
                if representatives:
                    reps.append({here.basis[i]: 1 for i in range(nsrc)
                                 if vec >> i & 1})
        return HomologyResult(F2, dim, [], reps)

    kernel_cols = linalg.integer_kernel(here.matrix, nsrc)
    kdim = len(kernel_cols)
    if kdim == 0:
        return HomologyResult(Z, 0, [], [])
    kmat = [[kernel_cols[j][i] for j in range(kdim)] for i in range(nsrc)]
    image_in_kernel: List[List[int]] = []
    for col in image_cols:
        x = linalg.solve_integer(kmat, col)
        if x is None:
            raise ArithmeticError("image vector is not in the kernel lattice")
        image_in_kernel.append(x)
    xmat = ([[image_in_kernel[j][i] for j in range(len(image_in_kernel))]
             for i in range(kdim)] if image_in_kernel else [])
    free_rank, torsion, gen_cols = linalg.cokernel_invariants(xmat, kdim)
    reps = []
    if representatives and gen_cols:
        ngen = len(gen_cols[0])
        for g in range(ngen):
            coords = [sum(kmat[i][r] * gen_cols[r][g] for r in range(kdim))
                      for i in range(nsrc)]
            reps.append({here.basis[i]: coords[i] for i in range(nsrc)
                         if coords[i]})
    return HomologyResult(Z, free_rank, torsion, reps)


# ---------------------------------------------------------------------------
# truncated cochain calculus
# ---------------------------------------------------------------------------

class DomainExceeded(Exception):
    """Evaluation requested outside the cochain's tabulated region."""


class Cochain:
    """A truncated Hochschild cochain: a Ground[U]-multilinear, strictly
    unital assignment of algebra elements to composable basic tuples with
    total length <= cutoff."""

    def __init__(self, ring: str, cutoff: int,
                 evaluator: Callable[[Tuple[Basic, ...]], Element],
                 weight: Optional[int] = None, name: str = "f"):
        self.ring = ring
        self.cutoff = cutoff
        self.weight = weight
        self.name = name
        self._eval = evaluator
        self._memo: Dict[Tuple[Basic, ...], Element] = {}

    def __call__(self, inputs: Sequence[Basic]) -> Element:
        inputs = tuple(inputs)
        total = sum(b.total_length() for b in inputs)
        if total > self.cutoff:
            raise DomainExceeded("%s on length %d > cutoff %d"
                                 % (self.name, total, self.cutoff))
        value = self._memo.get(inputs)
        if value is None:
            u_total = sum(b.u for b in inputs)
            stripped = tuple(b.strip_u() for b in inputs)
            value = self._eval(stripped).times_u(u_total)
            self._memo[inputs] = value
        return value


def mu_cochain(arity: int, weight: int, ring: str, cutoff: int) -> Cochain:
    """The operation mu_arity^weight as a truncated cochain."""

    def evaluate(inputs: Tuple[Basic, ...]) -> Element:
        if len(inputs) != arity:
            return Element.zero(ring)
        return mu_basic(weight, inputs, ring)

    return Cochain(ring, cutoff, evaluate, weight,
                   "mu_%d^%d" % (arity, weight))


def mu_total_cochain(weight: int, ring: str, cutoff: int) -> Cochain:
    """sum_n mu_n^weight as a single cochain (includes the arity-0 part)."""

    def evaluate(inputs: Tuple[Basic, ...]) -> Element:
        return mu_basic(weight, inputs, ring)

    return Cochain(ring, cutoff, evaluate, weight, "mu^%d" % weight)


def zero_cochain(ring: str, cutoff: int) -> Cochain:
    return Cochain(ring, cutoff, lambda inputs: Element.zero(ring), None, "0")


def star(f: Cochain, g: Cochain) -> Cochain:
    """(f*g)(a_1..a_n) = sum_i f(a_1..a_i, g(window), ..., a_n)."""
    if f.ring != g.ring:
        raise ValueError("ring mismatch in star")
    cutoff = min(f.cutoff, g.cutoff)
    ring = f.ring

    def evaluate(inputs: Tuple[Basic, ...]) -> Element:
        n = len(inputs)
        total = Element.zero(ring)
        for q in range(n + 1):
            for i in range(n - q + 1):
                inner = g(inputs[i:i + q])
                if inner.is_zero():
                    continue
                for body, coeff in inner.terms.items():
                    outer = f(inputs[:i] + (body,) + inputs[i + q:])
                    total = total + outer.scale(coeff)
        return total

    return Cochain(ring, cutoff, evaluate, None, "(%s*%s)" % (f.name, g.name))


def cup(f: Cochain, g: Cochain) -> Cochain:
    """mu_2(f, g): sum over splittings of mu_2(f(front), g(back))."""
    ring = f.ring
    cutoff = min(f.cutoff, g.cutoff)

    def evaluate(inputs: Tuple[Basic, ...]) -> Element:
        total = Element.zero(ring)
        for cut in range(len(inputs) + 1):
            total = total + f(inputs[:cut]) * g(inputs[cut:])
        return total

    return Cochain(ring, cutoff, evaluate, None,
                   "mu2(%s,%s)" % (f.name, g.name))


def add(f: Cochain, g: Cochain) -> Cochain:
    ring = f.ring

    def evaluate(inputs):
        return f(inputs) + g(inputs)

    return Cochain(ring, min(f.cutoff, g.cutoff), evaluate, None,
                   "(%s+%s)" % (f.name, g.name))


def cochain_delta(f: Cochain, weighted: bool = False) -> Cochain:
    """The Hochschild differential mu_2*f + f*mu_2 (associative) or
    mu^0*f + f*mu^0 (weighted base).

    The mu-cochains are exact, so the outer factor gets extra headroom:
    inserting a value of f can raise the total length (each unit of weight
    adds one U), and the outer evaluation must not hit its own cutoff.
    """
    slack = 4 * (f.weight if f.weight else 2)
    if weighted:
        base = mu_total_cochain(0, f.ring, f.cutoff + slack)
    else:
        base = mu_cochain(2, 0, f.ring, f.cutoff + slack)
    out = add(star(base, f), star(f, base))
    out.cutoff = f.cutoff
    return out.rename("delta(%s)" % f.name)


def obstruction(level: int, ring: str, cutoff: int) -> Cochain:
    """O_n = sum_{i+j=n+2, i,j>=3} mu_i * mu_j (associative chain level)."""
    total = zero_cochain(ring, cutoff)
    for i in range(3, level):
        j = level + 2 - i
        if j < 3:
            continue
        total = add(total, star(mu_cochain(i, 0, ring, cutoff),
                                mu_cochain(j, 0, ring, cutoff)))
    return total.rename("O_%d" % level)


def weighted_obstruction(weight: int, ring: str, cutoff: int) -> Cochain:
    """O^W = sum_{a+b=W, 1<=a<=W-1} mu^a * mu^b; the outer factor gets
    headroom for the U-length added by the weight-b inner values."""
    total = zero_cochain(ring, cutoff)
    for a in range(1, weight):
        b = weight - a
        total = add(total, star(mu_total_cochain(a, ring, cutoff + 4 * b),
                                mu_total_cochain(b, ring, cutoff)))
    total.cutoff = cutoff
    return total.rename("O^%d" % weight)


def _rename(self: Cochain, name: str) -> Cochain:
    self.name = name
    return self


Cochain.rename = _rename


def composable_tuples(max_total_length: int, max_arity: Optional[int] = None
                      ) -> Iterable[Tuple[Basic, ...]]:
    """Composable Reeb tuples with total length <= max_total_length."""

    def extend(seq: Tuple[Basic, ...], used: int):
        if seq:
            yield seq
        if max_arity is not None and len(seq) >= max_arity:
            return
        last = seq[-1] if seq else None
        for length in range(1, max_total_length - used + 1):
            for start in (1, 2, 3, 4):
                chord = Basic.chord(start, length)
                if last is not None and \
                        last.right_idempotent() != chord.left_idempotent():
                    continue
                yield from extend(seq + (chord,), used + length)

    yield from extend((), 0)
