"""Binary neural codes and their pseudomonomial generators.

A codeword on n neurons is a length-n bit vector; internally codewords
are ints with c_i at bit i-1 (c_1 is the leftmost character of the text
form).  A pseudomonomial is a pair of disjoint index sets (sigma, tau)
standing for prod_{i in sigma} x_i * prod_{j in tau} (1 - x_j); the
substitution (1 - x_j) -> y_j turns it into a squarefree monomial over
the paired variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .monomials import (
    Monomial,
    PolarizedNeuralIdeal,
    _check_n,
    minimalize,
    validate_polarized_neural,
)


class LengthMismatchError(ValueError):
    """Codeword length does not match the ambient neuron count."""


class CodeParseError(ValueError):
    """Malformed code file."""


@dataclass(frozen=True)
class NeuralCode:
    """A set of binary codewords of common length n (codewords as ints)."""

    n: int
    words: frozenset[int]

    def __post_init__(self):
        _check_n(self.n)
        for w in self.words:
            if w < 0 or w >> self.n:
                raise LengthMismatchError(f"codeword {w:#x} does not fit {self.n} bits")

    @classmethod
    def from_strings(cls, lines: Iterable[str]) -> "NeuralCode":
        words = set()
        n = None
        for line in lines:
            if not set(line) <= {"0", "1"}:
                raise CodeParseError(f"bad codeword {line!r}")
            if n is None:
                n = len(line)
            elif len(line) != n:
                raise CodeParseError(
                    f"codeword {line!r} has length {len(line)}, expected {n}"
                )
            words.add(word_from_string(line))
        if n is None or n == 0:
            raise CodeParseError("code file contains no codewords")
        return cls(n, frozenset(words))

    def word_strings(self) -> list[str]:
        return sorted(word_to_string(w, self.n) for w in self.words)


def word_from_string(text: str) -> int:
    """`c_1 c_2 ... c_n` with c_1 leftmost."""
    w = 0
    for i, ch in enumerate(text):
        if ch == "1":
            w |= 1 << i
    return w


def word_to_string(word: int, n: int) -> str:
    return "".join("1" if word >> i & 1 else "0" for i in range(n))


def parse_code(text: str) -> NeuralCode:
    """Parse a code file: one binary string per line, `#` comments, blanks ignored."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return NeuralCode.from_strings(lines)


@dataclass(frozen=True)
class Pseudomonomial:
    """Disjoint index sets (sigma, tau) over neurons 1..n."""

    sigma: frozenset[int]
    tau: frozenset[int]
    n: int

    def __post_init__(self):
        _check_n(self.n)
        if self.sigma & self.tau:
            raise ValueError(f"sigma and tau overlap: {sorted(self.sigma & self.tau)}")
        for i in self.sigma | self.tau:
            if not 1 <= i <= self.n:
                raise ValueError(f"index {i} out of range for n = {self.n}")


def evaluate(p: Pseudomonomial, word: int, n: int) -> int:
    """Evaluate p at a codeword: 1 iff the word is 1 on sigma and 0 on tau."""
    if n != p.n:
        raise LengthMismatchError(f"pseudomonomial over n = {p.n}, codeword over n = {n}")
    if word < 0 or word >> n:
        raise LengthMismatchError(f"codeword {word:#x} does not fit {n} bits")
    for i in p.sigma:
        if not word >> (i - 1) & 1:
            return 0
    for j in p.tau:
        if word >> (j - 1) & 1:
            return 0
    return 1


def vanishing_generators(code: NeuralCode) -> set[Pseudomonomial]:
    """One indicator pseudomonomial per non-codeword.

    For v outside the code, sigma = support(v) and tau = its complement,
    so the result is 1 exactly at v and vanishes on the whole code.
    """
    n = code.n
    out = set()
    for v in range(1 << n):
        if v in code.words:
            continue
        sigma = frozenset(i for i in range(1, n + 1) if v >> (i - 1) & 1)
        tau = frozenset(range(1, n + 1)) - sigma
        out.add(Pseudomonomial(sigma, tau, n))
    return out


def pseudo_divides(p: Pseudomonomial, q: Pseudomonomial) -> bool:
    """Containment of both index sets."""
    if p.n != q.n:
        raise LengthMismatchError("pseudomonomials over different neuron counts")
    return p.sigma <= q.sigma and p.tau <= q.tau


def minimize_pseudos(ps: set[Pseudomonomial]) -> set[Pseudomonomial]:
    """Keep only the divisibility-minimal pseudomonomials.

    Output of `vanishing_generators` is already an antichain (every
    element has sigma ∪ tau = [n]) and passes through unchanged.
    """
    return {
        p for p in ps
        if not any(q != p and pseudo_divides(q, p) for q in ps)
    }


def polarize(p: Pseudomonomial) -> Monomial:
    """x-bits at sigma, y-bits at tau; never divisible by any x_i*y_i."""
    mask = 0
    for i in p.sigma:
        mask |= 1 << (i - 1)
    for j in p.tau:
        mask |= 1 << (p.n + j - 1)
    return Monomial(mask, p.n)


def code_to_polarized_ideal(code: NeuralCode) -> PolarizedNeuralIdeal:
    """Full pipeline: vanishing generators -> minimize -> polarize -> minimalize.

    The result is generated in degree exactly n with 2^n - |code|
    generators; the full code yields the zero ideal.
    """
    pseudos = minimize_pseudos(vanishing_generators(code))
    ideal = minimalize((polarize(p) for p in pseudos), code.n)
    return validate_polarized_neural(ideal)
