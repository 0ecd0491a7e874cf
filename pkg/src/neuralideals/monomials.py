"""Squarefree monomials and monomial ideals in the paired ring k[x_1..x_n, y_1..y_n].

A monomial is a bit set over the 2n variables: bit i-1 holds x_i, bit
n+i-1 holds y_i.  All operations are exact and purely combinatorial.
Everything here is an immutable value; functions never mutate their
arguments.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional

MAX_NEURONS = 32  # 2n must fit a single machine word


class NeuronCountError(ValueError):
    """Neuron count outside [1, MAX_NEURONS]."""


class MonomialParseError(ValueError):
    """Malformed monomial or ideal text."""


class NonSquarefreeProductError(ValueError):
    """Multiplying monomials that share a variable would leave the squarefree world."""


class PairViolationError(ValueError):
    """A generator is divisible by some x_i * y_i."""

    def __init__(self, neuron: int, generator: "Monomial"):
        self.neuron = neuron
        self.generator = generator
        super().__init__(f"generator {generator} is divisible by x{neuron}*y{neuron}")


class ZeroIdealError(ValueError):
    """Operation undefined on the zero ideal."""


class UnitOrZeroIdealError(ValueError):
    """Operation undefined on the unit ideal or the zero ideal."""


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise NeuronCountError(f"neuron count must be a positive integer, got {n!r}")
    if n > MAX_NEURONS:
        raise NeuronCountError(f"neuron count {n} exceeds the supported maximum {MAX_NEURONS}")


def variable_name(bit: int, n: int) -> str:
    """Name of the variable sitting at bit position `bit` (0-based)."""
    return f"x{bit + 1}" if bit < n else f"y{bit - n + 1}"


@dataclass(frozen=True)
class Monomial:
    """A squarefree monomial over x_1..x_n, y_1..y_n, stored as a bit mask."""

    mask: int
    n: int

    def __post_init__(self):
        _check_n(self.n)
        if self.mask < 0 or self.mask >> (2 * self.n):
            raise ValueError(f"mask {self.mask:#x} does not fit 2n = {2 * self.n} bits")

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls(0, n)

    @classmethod
    def variable(cls, name_bit: int, n: int) -> "Monomial":
        return cls(1 << name_bit, n)

    @classmethod
    def x(cls, i: int, n: int) -> "Monomial":
        """The variable x_i (1-indexed)."""
        return cls(1 << (i - 1), n)

    @classmethod
    def y(cls, i: int, n: int) -> "Monomial":
        """The variable y_i (1-indexed)."""
        return cls(1 << (n + i - 1), n)

    @property
    def degree(self) -> int:
        return self.mask.bit_count()

    @property
    def is_unit(self) -> bool:
        return self.mask == 0

    def support(self) -> tuple[int, ...]:
        """Bit positions of the variables dividing this monomial."""
        return tuple(b for b in range(2 * self.n) if self.mask >> b & 1)

    def divides(self, other: "Monomial") -> bool:
        return self.mask | other.mask == other.mask

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(self.mask | other.mask, self.n)

    def gcd(self, other: "Monomial") -> "Monomial":
        return Monomial(self.mask & other.mask, self.n)

    def __mul__(self, other: "Monomial") -> "Monomial":
        shared = self.mask & other.mask
        if shared:
            raise NonSquarefreeProductError(
                f"{self} * {other} is not squarefree (shared variable "
                f"{variable_name((shared & -shared).bit_length() - 1, self.n)})"
            )
        return Monomial(self.mask | other.mask, self.n)

    def quotient_by_gcd(self, u: "Monomial") -> "Monomial":
        """self / gcd(self, u)."""
        return Monomial(self.mask & ~u.mask, self.n)

    def pair_violation(self) -> Optional[int]:
        """The least neuron i with both x_i and y_i dividing self, if any."""
        both = self.mask & (self.mask >> self.n)
        if both:
            return (both & -both).bit_length()
        return None

    def sort_key(self) -> tuple[int, int]:
        return (self.degree, self.mask)

    def __str__(self) -> str:
        if self.mask == 0:
            return "1"
        return "*".join(variable_name(b, self.n) for b in self.support())


_TOKEN_RE = re.compile(r"^([xy])(\d+)$")


def parse_monomial(text: str, n: int) -> Monomial:
    """Parse `x1*y2` / `x1 y2` style text; the literal `1` is the unit monomial."""
    tokens = [t for t in re.split(r"[*\s]+", text.strip()) if t]
    if not tokens:
        raise MonomialParseError("empty monomial")
    if tokens == ["1"]:
        return Monomial.one(n)
    mask = 0
    for tok in tokens:
        m = _TOKEN_RE.match(tok)
        if not m:
            raise MonomialParseError(f"bad variable token {tok!r}")
        i = int(m.group(2))
        if not 1 <= i <= n:
            raise MonomialParseError(f"variable index out of range in {tok!r} (n = {n})")
        bit = i - 1 if m.group(1) == "x" else n + i - 1
        if mask >> bit & 1:
            raise MonomialParseError(f"repeated variable {tok!r} (monomials are squarefree)")
        mask |= 1 << bit
    return Monomial(mask, n)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its unique minimal generating set.

    `gens` is an antichain under divisibility, sorted by (degree, mask)
    and duplicate-free.  The zero ideal has no generators; the unit
    ideal is the sentinel generator set {1}.  Use `minimalize` to build
    one from an arbitrary generator list.
    """

    n: int
    gens: tuple[Monomial, ...]

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_unit

    @property
    def is_proper_nonzero(self) -> bool:
        return bool(self.gens) and not self.is_unit

    def contains(self, m: Monomial) -> bool:
        """Monomial membership: m lies in the ideal iff some generator divides it."""
        return any(g.divides(m) for g in self.gens)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def max_degree(self) -> int:
        if self.is_zero:
            raise ZeroIdealError("the zero ideal has no generator degrees")
        return max(g.degree for g in self.gens)

    def lcm_of_gens(self) -> Monomial:
        if self.is_zero:
            raise ZeroIdealError("the zero ideal has no generators")
        mask = 0
        for g in self.gens:
            mask |= g.mask
        return Monomial(mask, self.n)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


def minimalize(gens: Iterable[Monomial], n: int) -> MonomialIdeal:
    """The ideal generated by `gens`, reduced to its minimal generating antichain.

    Idempotent and independent of input order.  An empty input yields
    the zero ideal; any unit among the generators yields the unit ideal.
    """
    _check_n(n)
    masks = set()
    for g in gens:
        if g.n != n:
            raise ValueError(f"generator {g} lives over n = {g.n}, expected {n}")
        masks.add(g.mask)
    minimal = [
        m for m in masks
        if not any(other != m and other | m == m for other in masks)
    ]
    out = [Monomial(m, n) for m in minimal]
    out.sort(key=Monomial.sort_key)
    return MonomialIdeal(n, tuple(out))


def colon(ideal: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    """The colon ideal I : u, via m -> m / gcd(u, m) over the minimal generators."""
    return minimalize((g.quotient_by_gcd(u) for g in ideal.gens), ideal.n)


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """I ∩ J, generated by the pairwise lcms of minimal generators."""
    if a.n != b.n:
        raise ValueError("intersect requires ideals over the same neuron count")
    return minimalize((g.lcm(h) for g in a.gens for h in b.gens), a.n)


def scale(u: Monomial, ideal: MonomialIdeal) -> MonomialIdeal:
    """The ideal u*I for a multiplier u sharing no variable with any generator."""
    for g in ideal.gens:
        if g.mask & u.mask:
            raise NonSquarefreeProductError(
                f"multiplier {u} shares a variable with generator {g}"
            )
    return minimalize((u * g for g in ideal.gens), ideal.n)


def restrict(ideal: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """The subideal generated by the minimal generators dividing m."""
    return minimalize((g for g in ideal.gens if g.divides(m)), ideal.n)


def is_equigenerated(ideal: MonomialIdeal) -> Optional[int]:
    """The common generator degree, or None if generators have mixed degrees."""
    if ideal.is_zero:
        raise ZeroIdealError("equigeneration is undefined for the zero ideal")
    degrees = {g.degree for g in ideal.gens}
    return degrees.pop() if len(degrees) == 1 else None


def lcm_closure(ideal: MonomialIdeal) -> list[Monomial]:
    """Closure of the generator multidegrees under pairwise lcm, sorted canonically.

    Multigraded Betti numbers vanish off this set, so it is the only
    multidegree range the homology oracle ever needs to scan.
    """
    if ideal.is_zero:
        return []
    masks = {g.mask for g in ideal.gens}
    frontier = set(masks)
    while frontier:
        new = set()
        for a in frontier:
            for b in masks:
                c = a | b
                if c not in masks and c not in new:
                    new.add(c)
        masks |= new
        frontier = new
    out = [Monomial(m, ideal.n) for m in masks]
    out.sort(key=Monomial.sort_key)
    return out


@dataclass(frozen=True)
class PolarizedNeuralIdeal:
    """A squarefree monomial ideal none of whose generators x_i*y_i divides.

    Wraps a plain MonomialIdeal; construct via `validate_polarized_neural`
    so the pair-exclusion invariant is always checked.
    """

    inner: MonomialIdeal

    @property
    def n(self) -> int:
        return self.inner.n

    def __str__(self) -> str:
        return str(self.inner)


def validate_polarized_neural(ideal: MonomialIdeal) -> PolarizedNeuralIdeal:
    """Wrap `ideal` after checking pair exclusion; report the first offending pair."""
    n = ideal.n
    for g in ideal.gens:
        both = g.mask & (g.mask >> n)
        if both:
            raise PairViolationError((both & -both).bit_length(), g)
    return PolarizedNeuralIdeal(ideal)


def parse_ideal(text: str, n: Optional[int] = None) -> MonomialIdeal:
    """Parse an ideal file: one monomial per line, `#` comments, blanks ignored.

    When `n` is not given it is inferred as the largest variable index
    seen (at least 1).
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if n is None:
        n = 1
        for line in lines:
            for tok in re.split(r"[*\s]+", line):
                m = _TOKEN_RE.match(tok)
                if m:
                    n = max(n, int(m.group(2)))
    gens = [parse_monomial(line, n) for line in lines]
    return minimalize(gens, n)


def render_ideal(ideal: MonomialIdeal) -> str:
    """One minimal generator per line, in canonical order."""
    return "\n".join(str(g) for g in ideal.gens) + ("\n" if ideal.gens else "")
