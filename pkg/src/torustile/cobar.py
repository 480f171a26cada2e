"""Truncated reduced cobar algebra of the associative torus algebra and the
Koszul self-duality data (phi, j, the homotopy H).

A cobar word a_1* (x) ... (x) a_n* is stored as a tuple of Reeb basics
(no U factors, no idempotents) with the dual convention
(a_n (x) ... (x) a_1)* = a_1* (x) ... (x) a_n*: consecutive letters must
satisfy right(a_{j+1}) = left(a_j).  Linear combinations are dicts from
words to coefficients.  Over Z every letter is odd, so the differential
carries the Koszul position sign and H carries (-1)^(run length - 1).
"""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from .algebra import Basic, F2, Z, basic_multiply
from .gradings import Gamma, alpha, gamma, LAMBDA_GAMMA

Word = Tuple[Basic, ...]
Combo = Dict[Word, int]


class TruncationExceeded(Exception):
    pass


def word_valid(word: Word) -> bool:
    for b in word:
        if not b.is_reeb:
            return False
    return all(word[j + 1].right_idempotent() == word[j].left_idempotent()
               for j in range(len(word) - 1))


def word_winding(word: Word) -> int:
    return sum(b.wingr() for b in word)


def _cleanup(combo: Combo, ring: str) -> Combo:
    if ring == F2:
        return {w: c % 2 for w, c in combo.items() if c % 2}
    return {w: c for w, c in combo.items() if c}


def cobar_differential(word: Word, ring: str,
                       max_winding: Optional[int] = None) -> Combo:
    """Replace each letter by its dual comultiplication splittings
    mu_2*(a*) = sum_{a=xy} y* (x) x*, with the position sign over Z."""
    if max_winding is not None and word_winding(word) > max_winding:
        raise TruncationExceeded("word winding %d exceeds bound %d"
                                 % (word_winding(word), max_winding))
    combo: Combo = {}
    for i, letter in enumerate(word):
        letters = letter.letters()
        sign = -1 if (ring == Z and i % 2) else 1
        for cut in range(1, len(letters)):
            x = Basic.from_letters(letters[:cut])
            y = Basic.from_letters(letters[cut:])
            new = word[:i] + (y, x) + word[i + 1:]
            combo[new] = combo.get(new, 0) + sign
    return _cleanup(combo, ring)


def apply_linear(func, combo: Combo, ring: str) -> Combo:
    out: Combo = {}
    for word, coeff in combo.items():
        for new, c in func(word).items():
            out[new] = out.get(new, 0) + coeff * c
    return _cleanup(out, ring)


def _initial_run(word: Word) -> int:
    """Length of the maximal initial run rho_i*, rho_{i+1}*, ... of
    consecutive length-1 letters."""
    if not word or word[0].length != 1:
        return 0
    k = 1
    while k < len(word) and word[k].length == 1 and \
            word[k].start == word[k - 1].start % 4 + 1:
        k += 1
    return k


def in_image_of_j(word: Word) -> bool:
    return _initial_run(word) == len(word)


def koszul_phi(word: Word, ring: str) -> Dict[Basic, int]:
    """phi kills any letter of length > 1 and multiplies the images of the
    rho_i; a ring map, so the value is a single chord or zero."""
    if any(b.length > 1 for b in word):
        return {}
    acc: Optional[Basic] = None
    for letter in word:
        acc = letter if acc is None else basic_multiply(acc, letter)
        if acc is None:
            return {}
    return {acc: 1}


def koszul_j(basic: Basic) -> Combo:
    """j sends an idempotent to its complement and a chord rho_{i..l} to
    rho_i* (x) ... (x) rho_l*."""
    if basic.u:
        raise ValueError("j is defined on the U-free algebra")
    if basic.is_idempotent:
        raise ValueError("idempotent words are empty; handled separately")
    word = tuple(Basic.chord(letter, 1) for letter in basic.letters())
    return {word: 1}


def homotopy_H(word: Word, ring: str) -> Combo:
    """Absorb the trailing letter of the maximal initial run into the next
    letter; zero on the image of j; sign (-1)^(k-1) over Z."""
    k = _initial_run(word)
    if k == 0 or k == len(word):
        return {}
    run_last = word[k - 1]
    merged = basic_multiply(word[k], run_last)
    if merged is None:
        return {}
    sign = -1 if (ring == Z and (k - 1) % 2) else 1
    new = word[:k - 1] + (merged,) + word[k + 1:]
    return {new: sign}


def j_phi(word: Word, ring: str) -> Combo:
    out: Combo = {}
    for basic, coeff in koszul_phi(word, ring).items():
        for new, c in koszul_j(basic).items():
            out[new] = out.get(new, 0) + coeff * c
    return out


def gamma_cobar(word: Word) -> Gamma:
    """lambda^(-n) gamma(a_1)^(-1) ... gamma(a_n)^(-1)."""
    out = LAMBDA_GAMMA.power(-len(word))
    for letter in word:
        out = out * gamma(letter).inverse()
    return out


def enumerate_words(max_letters: int, max_winding: int) -> Iterator[Word]:
    """All valid cobar words with at most max_letters letters and total
    winding number at most max_winding."""

    def letters_with_budget(budget: int) -> Iterable[Basic]:
        for length in range(1, 4 * budget + 4):
            for start in (1, 2, 3, 4):
                chord = Basic.chord(start, length)
                if chord.wingr() <= budget:
                    yield chord

    def extend(word: Word, budget: int) -> Iterator[Word]:
        if word:
            yield word
        if len(word) >= max_letters:
            return
        for chord in letters_with_budget(budget):
            if word and chord.right_idempotent() != word[-1].left_idempotent():
                continue
            yield from extend(word + (chord,), budget - chord.wingr())

    yield from extend((), max_winding)


def verify_square_zero(max_letters: int, max_winding: int, ring: str):
    """delta_cob^2 = 0 on every generator within bounds."""
    failures = []
    count = 0
    for word in enumerate_words(max_letters, max_winding):
        count += 1
        once = cobar_differential(word, ring)
        twice = apply_linear(lambda w: cobar_differential(w, ring), once, ring)
        if twice:
            failures.append(word)
    return count, failures


def verify_homotopy(max_letters: int, max_winding: int, ring: str):
    """delta o H + H o delta = Id - j o phi (over F2 the sign is moot);
    checked word by word."""
    failures = []
    count = 0
    for word in enumerate_words(max_letters, max_winding):
        count += 1
        lhs: Combo = {}
        for new, c in apply_linear(lambda w: cobar_differential(w, ring),
                                   homotopy_H(word, ring), ring).items():
            lhs[new] = lhs.get(new, 0) + c
        for new, c in apply_linear(lambda w: homotopy_H(w, ring),
                                   cobar_differential(word, ring), ring).items():
            lhs[new] = lhs.get(new, 0) + c
        rhs: Combo = {word: 1}
        for new, c in j_phi(word, ring).items():
            rhs[new] = rhs.get(new, 0) - c
        lhs = _cleanup(lhs, ring)
        rhs = _cleanup(rhs, ring)
        if lhs != rhs:
            failures.append((word, lhs, rhs))
    return count, failures


def verify_phi_chain_map(max_letters: int, max_winding: int, ring: str):
    """phi o delta_cob = 0 (the target algebra has zero differential)."""
    failures = []
    count = 0
    for word in enumerate_words(max_letters, max_winding):
        count += 1
        acc: Dict[Basic, int] = {}
        for new, c in cobar_differential(word, ring).items():
            for basic, c2 in koszul_phi(new, ring).items():
                acc[basic] = acc.get(basic, 0) + c * c2
        acc = {b: (v % 2 if ring == F2 else v) for b, v in acc.items()
               if (v % 2 if ring == F2 else v)}
        if acc:
            failures.append((word, acc))
    return count, failures


def verify_phi_grading(max_letters: int, max_winding: int):
    """gamma_cobar(word) = alpha(gamma(phi(word))) whenever phi(word) != 0."""
    failures = []
    count = 0
    for word in enumerate_words(max_letters, max_winding):
        value = koszul_phi(word, F2)
        if not value:
            continue
        count += 1
        [(basic, _)] = value.items()
        if gamma_cobar(word) != alpha(gamma(basic)):
            failures.append(word)
    return count, failures
