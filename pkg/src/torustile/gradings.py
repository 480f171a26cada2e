"""Noncommutative grading groups for the torus algebra.

Three groups grade the algebra: the big group G' (ambient (1/2 Z) x Z^4),
the intermediate group G (half-integer triples), and the small group G(T2)
(half-integer Maslov over integer homology classes).  Half-integers are
stored as doubled integers throughout; no floating point or rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .algebra import Basic


@dataclass(frozen=True)
class BigGrading:
    """Element (m; a,b,c,d) of the ambient big grading group; m2 = 2m."""

    m2: int
    a: int
    b: int
    c: int
    d: int

    def __mul__(self, other: "BigGrading") -> "BigGrading":
        # m'' = m + m' + (ab'-a'b)/2 + (bc'-b'c)/2 + (cd'-c'd)/2 + (da'-d'a)/2
        corr = (self.a * other.b - other.a * self.b
                + self.b * other.c - other.b * self.c
                + self.c * other.d - other.c * self.d
                + self.d * other.a - other.d * self.a)
        return BigGrading(self.m2 + other.m2 + corr,
                          self.a + other.a, self.b + other.b,
                          self.c + other.c, self.d + other.d)

    def inverse(self) -> "BigGrading":
        # the cocycle vanishes on (v, -v), so inversion just negates
        return BigGrading(-self.m2, -self.a, -self.b, -self.c, -self.d)

    def power(self, n: int) -> "BigGrading":
        result = BIG_IDENTITY
        base = self if n >= 0 else self.inverse()
        for _ in range(abs(n)):
            result = result * base
        return result

    def spinc(self) -> Tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def to_json(self) -> dict:
        return {"m2": self.m2, "spinc": [self.a, self.b, self.c, self.d]}

    def __str__(self) -> str:
        m = self.m2 // 2 if self.m2 % 2 == 0 else "%d/2" % self.m2
        return "(%s;%d,%d,%d,%d)" % (m, self.a, self.b, self.c, self.d)


BIG_IDENTITY = BigGrading(0, 0, 0, 0, 0)
LAMBDA_BIG = BigGrading(2, 0, 0, 0, 0)        # lambda = (1;0,0,0,0)
LAMBDA_W_BIG = BigGrading(2, 1, 1, 1, 1)      # lambda_w = (1;1,1,1,1)


@dataclass(frozen=True)
class MidGrading:
    """Element (m; a,b) of the intermediate group; all coords doubled."""

    m2: int
    a2: int
    b2: int

    def __mul__(self, other: "MidGrading") -> "MidGrading":
        # (m;a,b)(n;c,d) = (m+n+ad-bc; a+c, b+d); 2(ad-bc) = (a2*d2-b2*c2)/2
        num = self.a2 * other.b2 - self.b2 * other.a2
        if num % 2:
            raise ValueError("product leaves the intermediate group")
        return MidGrading(self.m2 + other.m2 + num // 2,
                          self.a2 + other.a2, self.b2 + other.b2)

    def inverse(self) -> "MidGrading":
        return MidGrading(-self.m2, -self.a2, -self.b2)

    def power(self, n: int) -> "MidGrading":
        result = MID_IDENTITY
        base = self if n >= 0 else self.inverse()
        for _ in range(abs(n)):
            result = result * base
        return result

    def in_group(self) -> bool:
        # a+b integral and m + ((2a+1)(a+b+1)+1)/2 integral
        if (self.a2 + self.b2) % 2:
            return False
        t = (self.a2 + 1) * ((self.a2 + self.b2) // 2 + 1) + 1
        return (self.m2 + t) % 2 == 0

    def to_json(self) -> dict:
        return {"m2": self.m2, "a2": self.a2, "b2": self.b2}

    def __str__(self) -> str:
        def half(x2):
            return str(x2 // 2) if x2 % 2 == 0 else "%d/2" % x2
        return "(%s;%s,%s)" % (half(self.m2), half(self.a2), half(self.b2))


MID_IDENTITY = MidGrading(0, 0, 0)
LAMBDA_MID = MidGrading(2, 0, 0)


@dataclass(frozen=True)
class SmallGrading:
    """Element (m; a,b) of G(T2): m a half-integer, a,b integers."""

    m2: int
    a: int
    b: int

    def __mul__(self, other: "SmallGrading") -> "SmallGrading":
        det = self.a * other.b - self.b * other.a
        return SmallGrading(self.m2 + other.m2 + 2 * det,
                            self.a + other.a, self.b + other.b)

    def inverse(self) -> "SmallGrading":
        return SmallGrading(-self.m2, -self.a, -self.b)

    def power(self, n: int) -> "SmallGrading":
        result = SMALL_IDENTITY
        base = self if n >= 0 else self.inverse()
        for _ in range(abs(n)):
            result = result * base
        return result

    def in_group(self) -> bool:
        return (self.m2 + self.a + self.b) % 2 == 0

    def to_json(self) -> dict:
        return {"m2": self.m2, "a": self.a, "b": self.b}

    def __str__(self) -> str:
        m = self.m2 // 2 if self.m2 % 2 == 0 else "%d/2" % self.m2
        return "(%s;%d,%d)" % (m, self.a, self.b)


SMALL_IDENTITY = SmallGrading(0, 0, 0)
LAMBDA_SMALL = SmallGrading(2, 0, 0)


def epsilon(g: SmallGrading) -> int:
    """The mod-2 grading: eps(m;a,b) = m + (a-b)/2 + ab (mod 2)."""
    if (g.m2 + g.a + g.b) % 2:
        raise ValueError("%s is not in the small grading group" % (g,))
    return ((g.m2 + g.a - g.b) // 2 + g.a * g.b) % 2


# ---------------------------------------------------------------------------
# grading assignments
# ---------------------------------------------------------------------------

def gr_prime(basic: Basic) -> BigGrading:
    """Big grading: chords get Maslov -(L)/4 if 4|L else -1/2-floor(L/4),
    spin-c the support; idempotents map to the identity; U to (-1;1,1,1,1)."""
    u_part = BigGrading(-2 * basic.u, basic.u, basic.u, basic.u, basic.u)
    if basic.length == 0:
        return u_part
    length = basic.length
    if length % 4 == 0:
        m2 = -(length // 2)
    else:
        m2 = -1 - 2 * (length // 4)
    support = Basic(0, basic.start, basic.length).support()
    return u_part * BigGrading(m2, *support)


def project_to_mid(g: BigGrading) -> MidGrading:
    """The homomorphism G' -> G, (j;a,b,c,d) -> (j-d;(a+b-c-d)/2,(-a+b+c-d)/2)."""
    result = MidGrading(g.m2 - 2 * g.d, g.a + g.b - g.c - g.d,
                        -g.a + g.b + g.c - g.d)
    if not result.in_group():
        raise ValueError("image %s fails G membership (input outside the "
                         "index-2 subgroup?)" % (result,))
    return result


def gr(basic: Basic) -> MidGrading:
    return project_to_mid(gr_prime(basic))


# refinement data: psi(i0) = e, psi(i1) = gr(r1) = (-1/2;1/2,-1/2)
PSI = (MID_IDENTITY, MidGrading(-1, 1, -1))


def refine(g: MidGrading, left_idem: int, right_idem: int) -> SmallGrading:
    """Refined grading psi(i_l) * g * psi(i_r)^(-1), landing in G(T2)."""
    if (g.a2 + left_idem + right_idem) % 2:
        raise ValueError("parity precondition fails: %s not in Hom(%d,%d)"
                         % (g, left_idem, right_idem))
    refined = PSI[left_idem] * g * PSI[right_idem].inverse()
    if refined.a2 % 2 or refined.b2 % 2:
        raise ValueError("refinement left the small group: %s" % (refined,))
    return SmallGrading(refined.m2, refined.a2 // 2, refined.b2 // 2)


def unrefine(g: SmallGrading, left_idem: int, right_idem: int) -> MidGrading:
    mid = MidGrading(g.m2, 2 * g.a, 2 * g.b)
    return PSI[left_idem].inverse() * mid * PSI[right_idem]


def gr_psi(basic: Basic) -> SmallGrading:
    return refine(gr(basic), basic.left_idempotent(), basic.right_idempotent())


# ---------------------------------------------------------------------------
# the combined grading Gamma = G x Z (or refined G(T2) x Z)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Gamma:
    """A pair gr x wingr in G x Z (g a MidGrading or SmallGrading)."""

    g: MidGrading
    w: int

    def __mul__(self, other: "Gamma") -> "Gamma":
        return Gamma(self.g * other.g, self.w + other.w)

    def inverse(self) -> "Gamma":
        return Gamma(self.g.inverse(), -self.w)

    def power(self, n: int) -> "Gamma":
        result = GAMMA_IDENTITY
        base = self if n >= 0 else self.inverse()
        for _ in range(abs(n)):
            result = result * base
        return result

    def to_json(self) -> dict:
        out = self.g.to_json()
        out["w"] = self.w
        return out

    def __str__(self) -> str:
        return "%sx%d" % (self.g, self.w)


GAMMA_IDENTITY = Gamma(MID_IDENTITY, 0)
LAMBDA_GAMMA = Gamma(LAMBDA_MID, 0)           # lambda_d
LAMBDA_W_GAMMA = Gamma(MID_IDENTITY, 1)       # lambda_w


def gamma(basic: Basic) -> Gamma:
    return Gamma(gr(basic), basic.wingr())


def alpha(g: Gamma) -> Gamma:
    """The involution alpha((j;a,b) x i) = (j+2i;-a,-b) x (-i)."""
    return Gamma(MidGrading(g.g.m2 + 4 * g.w, -g.g.a2, -g.g.b2), -g.w)


def is_lambda_power(g: Gamma) -> int | None:
    """Return k with g = lambda^k, or None."""
    if g.w != 0 or g.g.a2 != 0 or g.g.b2 != 0 or g.g.m2 % 2:
        return None
    return g.g.m2 // 2
