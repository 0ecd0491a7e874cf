"""Multigraded Betti numbers, projective dimension and regularity.

The oracle: for a proper nonzero monomial ideal I and a squarefree
multidegree b, the Betti number in homological index i at b is the rank
of reduced homology H_{i-1} of the upper Koszul complex

    K^b(I) = { tau ⊆ supp(b) : b / tau ∈ I }.

Only multidegrees in the lcm closure of the minimal generators can
carry a nonzero Betti number, so the table scans exactly that set.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Optional

from .homology import FieldTag, SimplicialComplex, reduced_homology_ranks
from .monomials import (
    Monomial,
    MonomialIdeal,
    UnitOrZeroIdealError,
    ZeroIdealError,
    lcm_closure,
)


class NotDominantError(ValueError):
    """The generating set is not dominant, closed-form invariants unavailable."""


def _require_proper_nonzero(ideal: MonomialIdeal) -> None:
    if ideal.is_zero:
        raise UnitOrZeroIdealError("operation undefined for the zero ideal")
    if ideal.is_unit:
        raise UnitOrZeroIdealError("operation undefined for the unit ideal")


def upper_koszul(ideal: MonomialIdeal, b: Monomial) -> SimplicialComplex:
    """The upper Koszul complex of `ideal` at the squarefree multidegree b.

    A subset tau of supp(b) is a face iff b with tau removed still lies
    in the ideal; equivalently some generator divides b and avoids tau.
    Void when b itself is outside the ideal.
    """
    _require_proper_nonzero(ideal)
    relevant = [g.mask for g in ideal.gens if g.divides(b)]
    vertices = frozenset(b.support())
    if not relevant:
        return SimplicialComplex(vertices, frozenset())
    faces = set()
    # iterate all submasks of b.mask
    sub = b.mask
    while True:
        if any(g & sub == 0 for g in relevant):
            faces.add(frozenset(i for i in vertices if sub >> i & 1))
        if sub == 0:
            break
        sub = (sub - 1) & b.mask
    return SimplicialComplex(vertices, frozenset(faces))


@dataclass
class BettiTable:
    """Fine (multigraded) and coarse Betti numbers of one ideal.

    fine maps (homological index i, multidegree mask) -> rank;
    coarse aggregates by total degree: (i, j) -> rank.
    """

    n: int
    fine: dict[tuple[int, int], int] = field(default_factory=dict)
    coarse: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def pd(self) -> int:
        return max(i for i, _ in self.coarse)

    @property
    def reg(self) -> int:
        return max(j - i for i, j in self.coarse)

    def fine_entries(self) -> list[tuple[int, Monomial, int]]:
        out = [(i, Monomial(m, self.n), r) for (i, m), r in self.fine.items()]
        out.sort(key=lambda t: (t[0], t[1].sort_key()))
        return out

    def to_json_dict(self) -> dict:
        return {
            "fine": [
                {"i": i, "b": str(m), "rank": r} for i, m, r in self.fine_entries()
            ],
            "coarse": [
                {"i": i, "j": j, "rank": r}
                for (i, j), r in sorted(self.coarse.items())
            ],
            "pd": self.pd,
            "reg": self.reg,
        }


def betti_table(ideal: MonomialIdeal, field_tag: FieldTag = FieldTag.F2) -> BettiTable:
    """Complete multigraded Betti table via upper Koszul homology.

    Homology results are memoized per call keyed by the exact face set;
    the same complex recurs across multidegrees.
    """
    _require_proper_nonzero(ideal)
    table = BettiTable(ideal.n)
    memo: dict[frozenset, dict[int, int]] = {}
    for b in lcm_closure(ideal):
        complex_ = upper_koszul(ideal, b)
        key = complex_.faces
        ranks = memo.get(key)
        if ranks is None:
            ranks = reduced_homology_ranks(complex_, field_tag)
            memo[key] = ranks
        j = b.degree
        for dim, rank in ranks.items():
            i = dim + 1
            table.fine[(i, b.mask)] = rank
            table.coarse[(i, j)] = table.coarse.get((i, j), 0) + rank
    return table


def invariants(ideal: MonomialIdeal,
               field_tag: FieldTag = FieldTag.F2) -> tuple[int, int]:
    """(projective dimension, regularity) of a proper nonzero monomial ideal."""
    t = betti_table(ideal, field_tag)
    return t.pd, t.reg


def has_linear_resolution(ideal: MonomialIdeal,
                          field_tag: FieldTag = FieldTag.F2,
                          table: Optional[BettiTable] = None) -> bool:
    """True iff the ideal is equigenerated in degree d and reg = d.

    Non-equigenerated input returns False with a warning: linearity is
    only defined in the equigenerated case.
    """
    _require_proper_nonzero(ideal)
    degrees = {g.degree for g in ideal.gens}
    if len(degrees) != 1:
        warnings.warn("linear resolution queried on a non-equigenerated ideal",
                      stacklevel=2)
        return False
    if table is None:
        table = betti_table(ideal, field_tag)
    return table.reg == degrees.pop()


def reg_upper_bound_lcm(ideal: MonomialIdeal) -> int:
    """1 + max over nonempty generator subsets A of deg(lcm(A)) - |A|.

    Always an upper bound for regularity.  Brute force over all 2^q - 1
    subsets with incremental lcms; fine at desk scale (q <= ~16).
    """
    _require_proper_nonzero(ideal)
    masks = [g.mask for g in ideal.gens]
    q = len(masks)
    lcms = [0] * (1 << q)
    best = -(2 * ideal.n)
    for s in range(1, 1 << q):
        low = (s & -s).bit_length() - 1
        m = lcms[s & (s - 1)] | masks[low]
        lcms[s] = m
        val = m.bit_count() - s.bit_count()
        if val > best:
            best = val
    return best + 1


def dominant_check(ideal: MonomialIdeal) -> Optional[dict[Monomial, int]]:
    """Assign each generator a private variable (a bit dividing no other generator).

    Returns the witness map, or None when some generator has no private
    variable.
    """
    if ideal.is_zero:
        raise ZeroIdealError("dominance is undefined for the zero ideal")
    witness = {}
    for g in ideal.gens:
        others = 0
        for h in ideal.gens:
            if h is not g:
                others |= h.mask
        private = g.mask & ~others
        if not private:
            return None
        witness[g] = (private & -private).bit_length() - 1
    return witness


def dominant_invariants(ideal: MonomialIdeal) -> tuple[int, int]:
    """Closed-form (pd, reg) for a dominant generating set.

    pd = q - 1 and reg = deg(lcm of all generators) - q + 1, where q is
    the number of minimal generators.
    """
    _require_proper_nonzero(ideal)
    if dominant_check(ideal) is None:
        raise NotDominantError(f"{ideal} is not generated by a dominant set")
    q = len(ideal.gens)
    return q - 1, ideal.lcm_of_gens().degree - q + 1


def euler_discrepancy(ideal: MonomialIdeal, table: BettiTable) -> dict[int, int]:
    """Alternating Betti sum minus the inclusion-exclusion lcm sum, per multidegree.

    Empty iff the table satisfies the Euler identity: for every
    multidegree b, sum_i (-1)^i beta_{i,b} equals the signed count of
    generator subsets with lcm b.
    """
    coeff: dict[int, int] = {}
    for (i, m), rank in table.fine.items():
        coeff[m] = coeff.get(m, 0) + (-1) ** i * rank
    masks = [g.mask for g in ideal.gens]
    q = len(masks)
    lcms = [0] * (1 << q)
    for s in range(1, 1 << q):
        low = (s & -s).bit_length() - 1
        m = lcms[s & (s - 1)] | masks[low]
        lcms[s] = m
        sign = -1 if s.bit_count() % 2 == 0 else 1
        coeff[m] = coeff.get(m, 0) - sign
    return {m: c for m, c in coeff.items() if c}
