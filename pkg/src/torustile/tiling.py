"""Tiling patterns in the disk and the weighted operations they define.

A tiling pattern is a rooted planar graph with 4-valent internal vertices
and 4-cycle interior faces, validly labeled by sectors in {1,...,4}.  Every
internal vertex is equivalently a unit square tile (all tiles are
translates), so a pattern is stored as a gluing of squares: each square
has four ports E,N,W,S, each glued to the opposite port of another square
or marked as a boundary leaf.  Corner labels are fixed per square
(SW=4, NW=3, NE=2, SE=1), which realizes both validity rules at once:
around an interior point the quadrants read (4,3,2,1) clockwise and the
right-hand sectors step by +1 across every edge.

The boundary walk (clockwise) visits boundary corner points; the fan of
squares at each point reads an ascending run of labels, i.e. a Reeb chord.
Extended patterns carry a chain of 2-valent vertices on the root edge
whose labels prefix the first chord (left-extended) or suffix the last
chord (right-extended); those labels form the output chord.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .algebra import Basic, Element, LENGTH4_CHORDS, basic_multiply

E, N, W, S = 0, 1, 2, 3
SIDE_NAMES = ("E", "N", "W", "S")
OPP = (W, S, E, N)
BOUND = -1

# side crossed when continuing counterclockwise around a point from the
# corner with the given label (SW=4 -> W, SE=1 -> S, NE=2 -> E, NW=3 -> N)
SIDE_OF_LABEL = {4: W, 1: S, 2: E, 3: N}
LABEL_OF_SIDE = {W: 4, S: 1, E: 2, N: 3}


def _descends(x: int, y: int) -> bool:
    """Whether label y = x - 1 mod 4 (the zero-product junction rule)."""
    return (x - 2) % 4 + 1 == y


def _label_run(end_exclusive: int, count: int) -> Tuple[int, ...]:
    """Ascending run of `count` labels ending just below `end_exclusive`."""
    return tuple((end_exclusive - 1 - count + i) % 4 + 1 for i in range(count))


@dataclass(frozen=True)
class TilingPattern:
    """A rooted tiling pattern in canonical (BFS-from-root) numbering.

    ``nbr[v][side]`` is the square glued across that side, or -1 for a
    boundary leaf.  The root leaf sits on square 0 at ``root_side``.
    ``root_chain`` is ("none", 0), ("left", k) or ("right", k) where k
    counts the 2-valent vertices on the root edge.
    """

    nbr: Tuple[Tuple[int, ...], ...]
    root_side: int
    root_chain: Tuple[str, int]

    @property
    def d(self) -> int:
        return len(self.nbr)

    def boundary_sides(self) -> List[Tuple[int, int]]:
        return [(v, s) for v in range(self.d) for s in range(4)
                if self.nbr[v][s] == BOUND]

    def boundary_fans(self) -> List[List[Tuple[int, int]]]:
        """Fans of (square, corner label) per boundary point, in walk order
        from the root.  Raises ValueError on malformed patterns."""
        fans: List[List[Tuple[int, int]]] = []
        sq, side = 0, self.root_side
        if self.nbr[sq][side] != BOUND:
            raise ValueError("root side is not a boundary leaf")
        total = len(self.boundary_sides())
        for _ in range(total):
            label = (LABEL_OF_SIDE[side] - 2) % 4 + 1
            fan = [(sq, label)]
            guard = 0
            while self.nbr[sq][SIDE_OF_LABEL[label]] != BOUND:
                sq = self.nbr[sq][SIDE_OF_LABEL[label]]
                label = label % 4 + 1
                fan.append((sq, label))
                guard += 1
                if guard > 4 * self.d:
                    raise ValueError("boundary fan does not terminate")
            fans.append(fan)
            side = SIDE_OF_LABEL[label]
            if (sq, side) == (0, self.root_side):
                break
        else:
            raise ValueError("boundary walk does not close up at the root")
        if len(fans) != total:
            raise ValueError("boundary walk missed %d leaves"
                             % (total - len(fans)))
        return fans

    def interior_points(self) -> List[List[Tuple[int, int]]]:
        """Closed corner orbits; each must have exactly 4 incidences."""
        seen = set()
        for fan in self.boundary_fans():
            seen.update(fan)
        orbits = []
        for v in range(self.d):
            for label in (1, 2, 3, 4):
                if (v, label) in seen:
                    continue
                orbit = []
                sq, lab = v, label
                while (sq, lab) not in seen:
                    seen.add((sq, lab))
                    orbit.append((sq, lab))
                    nxt = self.nbr[sq][SIDE_OF_LABEL[lab]]
                    if nxt == BOUND:
                        raise ValueError("open corner chain off the boundary walk")
                    sq, lab = nxt, lab % 4 + 1
                if (sq, lab) != (v, label):
                    raise ValueError("corner orbit does not close where it began")
                orbits.append(orbit)
        return orbits

    @property
    def weight(self) -> int:
        return len(self.interior_points())

    @property
    def n_inputs(self) -> int:
        return len(self.boundary_fans())

    def seed_label(self) -> int:
        return self.boundary_fans()[0][0][1]

    def chord_sequence(self) -> Tuple[Basic, ...]:
        """The chord at each boundary point, with root-chain letters merged
        into the first (left-extended) or last (right-extended) chord."""
        fans = self.boundary_fans()
        chords = [Basic.from_letters([lab for _, lab in fan]) for fan in fans]
        side, count = self.root_chain
        if count:
            if side == "left":
                run = _label_run(chords[0].letters()[0], count)
                chords[0] = Basic.from_letters(run + chords[0].letters())
            else:
                last = chords[-1].letters()[-1]
                run = tuple((last + i) % 4 + 1 for i in range(count))
                chords[-1] = Basic.from_letters(chords[-1].letters() + run)
        return tuple(chords)

    def output_element(self) -> Basic:
        side, count = self.root_chain
        fans = self.boundary_fans()
        if count == 0:
            first = Basic.chord(fans[0][0][1], 1)
            return Basic.idem(first.left_idempotent(), u=self.d)
        if side == "left":
            run = _label_run(fans[0][0][1], count)
        else:
            last = fans[-1][-1][1]
            run = tuple((last + i) % 4 + 1 for i in range(count))
        return Basic.from_letters(run, u=self.d)

    def to_json(self) -> dict:
        half_edges = {}
        for v in range(self.d):
            for s in range(4):
                tgt = self.nbr[v][s]
                key = "%d:%s" % (v, SIDE_NAMES[s])
                half_edges[key] = ("boundary" if tgt == BOUND
                                   else "%d:%s" % (tgt, SIDE_NAMES[OPP[s]]))
        return {
            "vertices": self.d,
            "half_edges": half_edges,
            "root": "0:%s" % SIDE_NAMES[self.root_side],
            "root_chain": {"side": self.root_chain[0], "count": self.root_chain[1]},
            "seed_label": self.seed_label(),
        }

    @staticmethod
    def from_json(data: dict) -> "TilingPattern":
        d = data["vertices"]
        nbr = [[None] * 4 for _ in range(d)]
        for key, val in data["half_edges"].items():
            v, s = key.split(":")
            v, s = int(v), SIDE_NAMES.index(s)
            if val == "boundary":
                nbr[v][s] = BOUND
            else:
                w_, t = val.split(":")
                nbr[v][s] = int(w_)
        if any(x is None for row in nbr for x in row):
            raise ValueError("half_edges does not cover every port")
        root_sq, root_side = data["root"].split(":")
        if int(root_sq) != 0:
            raise ValueError("root must sit on square 0")
        chain = data.get("root_chain", {"side": "none", "count": 0})
        return TilingPattern(tuple(tuple(row) for row in nbr),
                             SIDE_NAMES.index(root_side),
                             (chain["side"], chain["count"]))


@dataclass
class ValidityReport:
    valid: bool
    reason: str
    n: int = 0
    w: int = 0
    d: int = 0

    def __bool__(self) -> bool:
        return self.valid


def validate_pattern(pattern: TilingPattern,
                     labels: Optional[Dict[Tuple[int, int], int]] = None
                     ) -> ValidityReport:
    """Check every pattern invariant; report the first violation.

    ``labels`` optionally supplies an explicit sector labeling
    {(square, generated_label): claimed_label} to be checked against the
    labeling generated from the structure.
    """
    nbr = pattern.nbr
    d = len(nbr)
    if d < 1:
        return ValidityReport(False, "no internal vertex")
    for v in range(d):
        for s in range(4):
            tgt = nbr[v][s]
            if tgt == BOUND:
                continue
            if not (0 <= tgt < d):
                return ValidityReport(False, "dangling port %d:%s" % (v, SIDE_NAMES[s]))
            if nbr[tgt][OPP[s]] != v:
                return ValidityReport(False, "gluing at %d:%s is not involutive"
                                      % (v, SIDE_NAMES[s]))
    # connectivity
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for s in range(4):
            t = nbr[v][s]
            if t != BOUND and t not in seen:
                seen.add(t)
                stack.append(t)
    if len(seen) != d:
        return ValidityReport(False, "graph is disconnected")
    try:
        fans = pattern.boundary_fans()
        interior = pattern.interior_points()
    except ValueError as err:
        return ValidityReport(False, str(err))
    for orbit in interior:
        if len(orbit) != 4:
            return ValidityReport(False,
                                  "interior face meets %d edges" % len(orbit))
    n = len(fans)
    w = len(interior)
    n_sides = len(pattern.boundary_sides())
    if n != n_sides:
        return ValidityReport(False, "boundary walk misses some leaves")
    # Euler characteristic of the square complex must be 1 (disk)
    glued = (4 * d - n_sides) // 2
    euler = (n + w) - (glued + n_sides) + d
    if euler != 1:
        return ValidityReport(False, "complex is not a disk (chi=%d)" % euler)
    if d != w + n // 2 - 1:
        return ValidityReport(False, "d != w + n/2 - 1")
    if n % 2:
        return ValidityReport(False, "odd number of boundary arcs")
    side, count = pattern.root_chain
    if side not in ("none", "left", "right") or count < 0 or \
            (side == "none") != (count == 0):
        return ValidityReport(False, "malformed root chain")
    if labels is not None:
        # a claimed labeling is valid iff it is a global rotation of the
        # generated one (the rotation is the free choice of seed label)
        offset = None
        for (sq, generated), claimed in labels.items():
            shift = (claimed - generated) % 4
            if offset is None:
                offset = shift
            elif shift != offset:
                return ValidityReport(
                    False, "label %d at square %d violates the +1 rule "
                    "(generated label %d, expected offset %d)"
                    % (claimed, sq, generated, offset))
    return ValidityReport(True, "ok", n=n, w=w, d=d)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

_MAX_CHAIN = 32


def _chain_ok(nbr, sq: int, label: int, cap: int) -> bool:
    """Prune helper: the corner chain through (sq, label) must either stay
    open within the cap or close with exactly 4 incidences."""
    # walk backward to a chain start (or detect a cycle)
    cur, lab = sq, label
    for _ in range(_MAX_CHAIN):
        prev_side = OPP[SIDE_OF_LABEL[(lab - 2) % 4 + 1]]
        back = nbr[cur][prev_side]
        if back is None or back == BOUND:
            break
        cur, lab = back, (lab - 2) % 4 + 1
        if (cur, lab) == (sq, label):      # closed orbit: must have 4 corners
            length = 0
            c, l = sq, label
            for _ in range(_MAX_CHAIN):
                length += 1
                c = nbr[c][SIDE_OF_LABEL[l]]
                l = l % 4 + 1
                if (c, l) == (sq, label):
                    return length == 4
            return False
    # open chain: measure forward length from the start
    length = 1
    for _ in range(_MAX_CHAIN):
        step = nbr[cur][SIDE_OF_LABEL[lab]]
        if step is None or step == BOUND:
            break
        cur, lab = step, lab % 4 + 1
        length += 1
        if length > cap:
            return False
    return True


def _search_cores(fans: Sequence[Tuple[int, ...]], d: int) -> List[List[List[int]]]:
    """All gluings of d squares whose boundary walk realizes the given fans.

    Returns raw neighbor tables (square 0 carries the root side).
    """
    n = len(fans)
    cap = max(4, max(len(f) for f in fans))
    steps: List[Tuple[str, int]] = []
    for i, fan in enumerate(fans):
        for t in range(len(fan) - 1):
            steps.append(("fan", fan[t]))
        steps.append(("mark_last" if i == n - 1 else "mark", fan[-1]))
    results: List[List[List[int]]] = []

    def dfs_walk(idx: int, cur: int, nbr: List[List[Optional[int]]]):
        if idx == len(steps):
            dfs_close(nbr)
            return
        kind, label = steps[idx]
        side = SIDE_OF_LABEL[label]
        if kind == "fan":
            tgt = nbr[cur][side]
            if tgt == BOUND:
                return
            if tgt is not None:
                dfs_walk(idx + 1, tgt, nbr)
                return
            if len(nbr) < d:
                nbr2 = [row[:] for row in nbr] + [[None] * 4]
                new = len(nbr2) - 1
                nbr2[cur][side] = new
                nbr2[new][OPP[side]] = cur
                dfs_walk(idx + 1, new, nbr2)
            for b in range(len(nbr)):
                if nbr[b][OPP[side]] is None and not (b == cur and side == OPP[side]):
                    nbr2 = [row[:] for row in nbr]
                    nbr2[cur][side] = b
                    nbr2[b][OPP[side]] = cur
                    if _chain_ok(nbr2, cur, label, cap) and \
                            _chain_ok(nbr2, cur, (label - 2) % 4 + 1, cap):
                        dfs_walk(idx + 1, b, nbr2)
            return
        # mark the boundary side after the fan
        if kind == "mark_last" and cur != 0:
            return
        if nbr[cur][side] is not None:
            return
        nbr2 = [row[:] for row in nbr]
        nbr2[cur][side] = BOUND
        dfs_walk(idx + 1, cur, nbr2)

    def dfs_close(nbr: List[List[Optional[int]]]):
        spot = None
        for v in range(len(nbr)):
            for s in range(4):
                if nbr[v][s] is None:
                    spot = (v, s)
                    break
            if spot:
                break
        if spot is None:
            if len(nbr) == d:
                results.append([row[:] for row in nbr])
            return
        v, s = spot
        for b in range(len(nbr)):
            if nbr[b][OPP[s]] is None and not (b == v and s == OPP[s]):
                nbr2 = [row[:] for row in nbr]
                nbr2[v][s] = b
                nbr2[b][OPP[s]] = v
                if _chain_ok(nbr2, v, LABEL_OF_SIDE[s], cap) and \
                        _chain_ok(nbr2, v, (LABEL_OF_SIDE[s] - 2) % 4 + 1, cap):
                    dfs_close(nbr2)
        if len(nbr) < d:
            nbr2 = [row[:] for row in nbr] + [[None] * 4]
            new = len(nbr2) - 1
            nbr2[v][s] = new
            nbr2[new][OPP[s]] = v
            dfs_close(nbr2)

    dfs_walk(0, 0, [[None] * 4])
    return results


def _canonical(nbr: List[List[int]]) -> Tuple[Tuple[int, ...], ...]:
    """Deterministic BFS renumbering from square 0 (the root square)."""
    order = {0: 0}
    queue = [0]
    while queue:
        v = queue.pop(0)
        for s in range(4):
            t = nbr[v][s]
            if t != BOUND and t not in order:
                order[t] = len(order)
                queue.append(t)
    new = [[BOUND] * 4 for _ in range(len(nbr))]
    for v, nv in order.items():
        for s in range(4):
            t = nbr[v][s]
            new[nv][s] = BOUND if t == BOUND else order[t]
    return tuple(tuple(row) for row in new)


class EnumerationError(ValueError):
    pass


def enumerate_patterns(entries: Sequence[Basic], weight: int) -> List[TilingPattern]:
    """All tiling patterns (up to rooted isomorphism) with the given chord
    sequence and weight.  Entries must be Reeb elements without U factors."""
    patterns, _ = enumerate_patterns_with_reason(entries, weight)
    return patterns


def enumerate_patterns_with_reason(entries: Sequence[Basic], weight: int
                                   ) -> Tuple[List[TilingPattern], str]:
    """Like enumerate_patterns, but reports why the set is empty."""
    entries = tuple(entries)
    n = len(entries)
    for b in entries:
        if not b.is_reeb:
            raise EnumerationError("chord sequence entries must be Reeb elements")
    if n == 0:
        return [], "empty chord sequence"
    if n % 2:
        return [], "odd chord sequence length"
    if weight < 0:
        return [], "negative weight"
    d = weight + n // 2 - 1
    if d < 1:
        return [], "d = w + n/2 - 1 < 1"
    letters = [b.letters() for b in entries]
    for i in range(n - 1):
        if not _descends(letters[i][-1], letters[i + 1][0]):
            return [], ("consecutive product at position %d does not vanish "
                        "or does not compose" % i)
    total = sum(b.length for b in entries)
    k = total - 2 * n + 4
    variants: List[Tuple[str, int, List[Tuple[int, ...]]]] = []
    if k == 0:
        if _descends(letters[-1][-1], letters[0][0]):
            variants.append(("none", 0, list(letters)))
    elif k >= 1:
        if entries[0].length >= k + 1 and _descends(letters[-1][-1], letters[0][k]):
            fans = [letters[0][k:]] + list(letters[1:])
            variants.append(("left", k, fans))
        if entries[-1].length >= k + 1 and \
                _descends(letters[-1][-(k + 1)], letters[0][0]):
            fans = list(letters[:-1]) + [letters[-1][:-k]]
            variants.append(("right", k, fans))
    if not variants:
        return [], "root junction admits no centered or extended pattern"
    found: Dict[Tuple, TilingPattern] = {}
    for side, count, fans in variants:
        if sum(len(f) for f in fans) != 4 * d - 4 * weight:
            continue
        for raw in _search_cores(fans, d):
            canon = _canonical(raw)
            root_side = SIDE_OF_LABEL[fans[-1][-1]]
            pattern = TilingPattern(canon, root_side, (side, count))
            report = validate_pattern(pattern)
            if not report:
                raise EnumerationError("enumerator produced an invalid "
                                       "pattern: %s" % report.reason)
            if report.w != weight or pattern.chord_sequence() != entries:
                continue
            found[(canon, root_side, side, count)] = pattern
    patterns = sorted(found.values(), key=lambda p: (p.root_chain, p.nbr))
    return patterns, "" if patterns else "no valid filling"


# ---------------------------------------------------------------------------
# the weighted operations
# ---------------------------------------------------------------------------

_MU_CACHE: Dict[Tuple[int, Tuple[Basic, ...]], Tuple[Tuple[Basic, int], ...]] = {}


def curvature(ring: str) -> Element:
    """mu_0^1, the sum of the four length-4 chords."""
    out = Element.zero(ring)
    for chord in LENGTH4_CHORDS:
        out = out + Element.of(chord, ring)
    return out


def _mu_terms(weight: int, basics: Tuple[Basic, ...]) -> Tuple[Tuple[Basic, int], ...]:
    key = (weight, basics)
    cached = _MU_CACHE.get(key)
    if cached is None:
        counts: Dict[Basic, int] = {}
        for pattern in enumerate_patterns(basics, weight):
            out = pattern.output_element()
            counts[out] = counts.get(out, 0) + 1
        cached = tuple(sorted(counts.items(), key=lambda t: str(t[0])))
        _MU_CACHE[key] = cached
    return cached


_MU_ELT_CACHE: Dict[Tuple[str, int, Tuple[Basic, ...]], Element] = {}


def mu_basic(weight: int, basics: Sequence[Basic], ring: str) -> Element:
    """The operation mu_n^w on basic elements of A[U] (U-multilinear)."""
    basics = tuple(basics)
    n = len(basics)
    if n == 0:
        return curvature(ring) if weight == 1 else Element.zero(ring)
    if any(b.length == 0 for b in basics):
        if (n, weight) == (2, 0):
            prod = basic_multiply(basics[0], basics[1])
            return Element.of(prod, ring) if prod else Element.zero(ring)
        return Element.zero(ring)
    if (n, weight) == (2, 0):
        prod = basic_multiply(basics[0], basics[1])
        return Element.of(prod, ring) if prod else Element.zero(ring)
    if n % 2:
        return Element.zero(ring)
    key = (ring, weight, basics)
    cached = _MU_ELT_CACHE.get(key)
    if cached is None:
        u_total = sum(b.u for b in basics)
        stripped = tuple(b.strip_u() for b in basics) if u_total else basics
        terms = {b.times_u(u_total): c for b, c in _mu_terms(weight, stripped)}
        cached = Element(ring, terms)
        _MU_ELT_CACHE[key] = cached
    return cached


def mu(weight: int, inputs: Sequence, ring: str) -> Element:
    """Multilinear extension of mu_n^w to AlgebraElements."""
    elements: List[Element] = []
    for item in inputs:
        if isinstance(item, Basic):
            elements.append(Element.of(item, ring))
        else:
            if item.ring != ring:
                raise ValueError("ring mismatch in mu inputs")
            elements.append(item)
    total = Element.zero(ring)
    stack: List[Tuple[Tuple[Basic, ...], int]] = [((), 1)]
    for elt in elements:
        stack = [(chosen + (b,), coeff * c)
                 for chosen, coeff in stack for b, c in elt.terms.items()]
        if not stack:
            return total
    for basics, coeff in stack:
        total = total + mu_basic(weight, basics, ring).scale(coeff)
    return total
