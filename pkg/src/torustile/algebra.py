"""Exact arithmetic in the associative torus algebra over F2[U] and Z[U].

The algebra is the path algebra of the 4-cycle quiver on two idempotents
i0, i1 with arrows r1, r3 : i0 -> i1 and r2, r4 : i1 -> i0, modulo the
relations r2*r1 = r3*r2 = r4*r3 = r1*r4 = 0, extended by a central
variable U.  Basic elements are monomials U^d * i_k or U^d * r_{s,s+1,...}
(subscripts read mod 4 in {1,...,4}).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, Tuple
import re

F2 = "F2"
Z = "Z"
RINGS = (F2, Z)


class RingMismatch(ValueError):
    """Raised when elements over different coefficient rings are combined."""


@dataclass(frozen=True, order=True)
class Basic:
    """A basic element U^u * body.

    ``length == 0`` encodes the idempotent with index ``start`` in {0, 1};
    ``length >= 1`` encodes the chord r_{start, start+1, ..., start+length-1}
    with ``start`` in {1, 2, 3, 4}.
    """

    u: int
    start: int
    length: int

    def __post_init__(self):
        if self.u < 0:
            raise ValueError("negative U exponent")
        if self.length == 0:
            if self.start not in (0, 1):
                raise ValueError("idempotent index must be 0 or 1")
        else:
            if self.start not in (1, 2, 3, 4):
                raise ValueError("chord start must lie in 1..4")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def idem(index: int, u: int = 0) -> "Basic":
        return Basic(u, index, 0)

    @staticmethod
    def chord(start: int, length: int, u: int = 0) -> "Basic":
        return Basic(u, ((start - 1) % 4) + 1, length)

    @staticmethod
    def from_letters(letters: Iterable[int], u: int = 0) -> "Basic":
        letters = list(letters)
        for a, b in zip(letters, letters[1:]):
            if (a % 4) + 1 != b:
                raise ValueError("letters are not a consecutive run mod 4")
        return Basic.chord(letters[0], len(letters), u)

    # -- structure ---------------------------------------------------------

    @property
    def is_idempotent(self) -> bool:
        return self.length == 0

    @property
    def is_reeb(self) -> bool:
        return self.length > 0 and self.u == 0

    def letters(self) -> Tuple[int, ...]:
        return tuple(((self.start - 1 + i) % 4) + 1 for i in range(self.length))

    def strip_u(self) -> "Basic":
        return Basic(0, self.start, self.length) if self.u else self

    def times_u(self, d: int) -> "Basic":
        return Basic(self.u + d, self.start, self.length) if d else self

    def left_idempotent(self) -> int:
        if self.length == 0:
            return self.start
        return (self.start + 1) % 2

    def right_idempotent(self) -> int:
        if self.length == 0:
            return self.start
        return (self.start + self.length + 1) % 2

    def support(self) -> Tuple[int, int, int, int]:
        n = [self.u] * 4
        for letter in self.letters():
            n[letter - 1] += 1
        return tuple(n)

    def total_length(self) -> int:
        return 4 * self.u + self.length

    def wingr(self) -> int:
        # multiplicity at r4 plus the U exponent
        count4 = sum(1 for letter in self.letters() if letter == 4)
        return self.u + count4

    def __str__(self) -> str:
        body = "i%d" % self.start if self.length == 0 else "r" + "".join(
            str(l) for l in self.letters())
        if self.u == 0:
            return body
        if self.u == 1:
            return "U*" + body
        return "U^%d*%s" % (self.u, body)

    __repr__ = __str__


IDEM0 = Basic.idem(0)
IDEM1 = Basic.idem(1)
LENGTH4_CHORDS = tuple(Basic.chord(s, 4) for s in (1, 2, 3, 4))


def basic_multiply(x: Basic, y: Basic) -> Basic | None:
    """Product of basic elements; None encodes zero."""
    u = x.u + y.u
    if x.length == 0 and y.length == 0:
        return Basic.idem(x.start, u) if x.start == y.start else None
    if x.length == 0:
        return Basic(u, y.start, y.length) if x.start == y.left_idempotent() else None
    if y.length == 0:
        return Basic(u, x.start, x.length) if y.start == x.right_idempotent() else None
    # chords concatenate iff y starts right after x's last letter (mod 4)
    if ((x.start + x.length - 1) % 4) + 1 != y.start:
        return None
    return Basic(u, x.start, x.length + y.length)


def left_idempotent(b: Basic) -> int:
    return b.left_idempotent()


def right_idempotent(b: Basic) -> int:
    return b.right_idempotent()


class Element:
    """A finite linear combination of Basic elements over F2 or Z."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: str, terms: Dict[Basic, int] | None = None):
        if ring not in RINGS:
            raise ValueError("unknown ring %r" % (ring,))
        self.ring = ring
        clean: Dict[Basic, int] = {}
        if terms:
            for basic, coeff in terms.items():
                coeff = coeff % 2 if ring == F2 else coeff
                if coeff:
                    clean[basic] = coeff
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(ring: str) -> "Element":
        return Element(ring)

    @staticmethod
    def of(basic: Basic, ring: str, coeff: int = 1) -> "Element":
        return Element(ring, {basic: coeff})

    @staticmethod
    def unit(ring: str) -> "Element":
        return Element(ring, {IDEM0: 1, IDEM1: 1})

    # -- ring structure ----------------------------------------------------

    def _check(self, other: "Element") -> None:
        if self.ring != other.ring:
            raise RingMismatch("cannot mix %s and %s" % (self.ring, other.ring))

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        terms = dict(self.terms)
        for basic, coeff in other.terms.items():
            terms[basic] = terms.get(basic, 0) + coeff
        return Element(self.ring, terms)

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        terms = dict(self.terms)
        for basic, coeff in other.terms.items():
            terms[basic] = terms.get(basic, 0) - coeff
        return Element(self.ring, terms)

    def scale(self, scalar: int) -> "Element":
        return Element(self.ring, {b: scalar * c for b, c in self.terms.items()})

    def __neg__(self) -> "Element":
        return self.scale(-1)

    def times_u(self, d: int) -> "Element":
        if d == 0:
            return self
        return Element(self.ring, {b.times_u(d): c for b, c in self.terms.items()})

    def __mul__(self, other: "Element") -> "Element":
        self._check(other)
        terms: Dict[Basic, int] = {}
        for bx, cx in self.terms.items():
            for by, cy in other.terms.items():
                prod = basic_multiply(bx, by)
                if prod is not None:
                    terms[prod] = terms.get(prod, 0) + cx * cy
        return Element(self.ring, terms)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Element) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def reduce_mod2(self) -> "Element":
        return Element(F2, {b: c % 2 for b, c in self.terms.items()})

    def sorted_terms(self) -> Iterator[Tuple[Basic, int]]:
        # canonical order: U power, idempotents before chords, start, length
        def key(item):
            basic, _ = item
            return (basic.u, 0 if basic.length == 0 else 1, basic.start, basic.length)
        return iter(sorted(self.terms.items(), key=key))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for basic, coeff in self.sorted_terms():
            if coeff == 1:
                parts.append(str(basic))
            elif coeff == -1:
                parts.append("-" + str(basic))
            else:
                parts.append("%d*%s" % (coeff, basic))
        out = parts[0]
        for part in parts[1:]:
            out += " - " + part[1:] if part.startswith("-") else " + " + part
        return out

    __repr__ = __str__


# ---------------------------------------------------------------------------
# text grammar
#
# idempotents i0, i1; chords r followed by a consecutive digit string mod 4
# (r41234); monomials U^k*<basic> with U^0 omitted and ^1 optional; elements
# are +-separated monomials with optional integer coefficients (-2*U*r12).
# ---------------------------------------------------------------------------

_MONO_RE = re.compile(
    r"^(?:(?P<coeff>[+-]?\d+)\*)?(?:U(?:\^(?P<upow>-?\d+))?\*)?(?P<body>i[01]|r\d+)$")


class ParseError(ValueError):
    pass


def parse_basic(text: str) -> Basic:
    elt = parse_element(text, Z)
    if len(elt.terms) != 1:
        raise ParseError("expected a single monomial: %r" % text)
    [(basic, coeff)] = elt.terms.items()
    if coeff != 1:
        raise ParseError("expected coefficient 1 in %r" % text)
    return basic


def parse_element(text: str, ring: str = F2) -> Element:
    stripped = "".join(text.split())
    if not stripped:
        raise ParseError("empty element")
    if stripped == "0":
        return Element.zero(ring)
    # split on +/- while keeping signs attached
    chunks = re.findall(r"[+-]?[^+-]+", stripped)
    terms: Dict[Basic, int] = {}
    for chunk in chunks:
        sign = 1
        if chunk.startswith("+"):
            chunk = chunk[1:]
        elif chunk.startswith("-"):
            sign, chunk = -1, chunk[1:]
        match = _MONO_RE.match(chunk)
        if not match:
            raise ParseError("malformed monomial %r" % chunk)
        coeff = sign * int(match.group("coeff") or 1)
        upow = match.group("upow")
        if "U" in chunk:
            u = int(upow) if upow is not None else 1
        else:
            u = 0
        if u < 0:
            raise ParseError("negative U exponent in %r" % chunk)
        body = match.group("body")
        if body.startswith("i"):
            basic = Basic.idem(int(body[1]), u)
        else:
            digits = [int(ch) for ch in body[1:]]
            if not digits:
                raise ParseError("empty chord in %r" % chunk)
            if any(d not in (1, 2, 3, 4) for d in digits):
                raise ParseError("chord letters must lie in 1..4: %r" % chunk)
            for a, b in zip(digits, digits[1:]):
                if (a % 4) + 1 != b:
                    raise ParseError("indices not consecutive mod 4 in %r" % chunk)
            basic = Basic.chord(digits[0], len(digits), u)
        terms[basic] = terms.get(basic, 0) + coeff
    return Element(ring, terms)


def format_element(elt: Element) -> str:
    if not elt.terms:
        return "0"
    parts = []
    for basic, coeff in elt.sorted_terms():
        text = str(basic)
        if coeff == 1:
            parts.append(text)
        else:
            parts.append("%d*%s" % (coeff, text))
    out = parts[0]
    for part in parts[1:]:
        if part.startswith("-"):
            out += " - " + part[1:]
        else:
            out += " + " + part
    return out


def reeb_basis(max_length: int) -> Iterator[Basic]:
    """All Reeb chords of length <= max_length (no U factors)."""
    for length in range(1, max_length + 1):
        for start in (1, 2, 3, 4):
            yield Basic.chord(start, length)


def basics_up_to(max_total_length: int) -> Iterator[Basic]:
    """All basic elements of A[U] with 4u + length <= max_total_length."""
    for u in range(max_total_length // 4 + 1):
        rest = max_total_length - 4 * u
        yield Basic.idem(0, u)
        yield Basic.idem(1, u)
        for length in range(1, rest + 1):
            for start in (1, 2, 3, 4):
                yield Basic(u, start, length)
