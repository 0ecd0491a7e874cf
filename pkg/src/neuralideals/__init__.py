"""Homological invariants of polarized neural ideals.

From binary neural codes to squarefree monomial ideals in the paired
ring k[x_1..x_n, y_1..y_n], with an exact homology oracle for
multigraded Betti numbers, projective dimension and regularity, and a
verification harness for the structural results (pivot splittings,
linear quotients, the recursive linearity test, witness families).
"""

from .betti import (
    BettiTable,
    NotDominantError,
    betti_table,
    dominant_check,
    dominant_invariants,
    has_linear_resolution,
    invariants,
    reg_upper_bound_lcm,
    upper_koszul,
)
from .codes import (
    NeuralCode,
    Pseudomonomial,
    code_to_polarized_ideal,
    evaluate,
    minimize_pseudos,
    parse_code,
    polarize,
    pseudo_divides,
    vanishing_generators,
)
from .homology import FieldTag, SimplicialComplex, reduced_homology_ranks
from .monomials import (
    Monomial,
    MonomialIdeal,
    NonSquarefreeProductError,
    PairViolationError,
    PolarizedNeuralIdeal,
    UnitOrZeroIdealError,
    ZeroIdealError,
    colon,
    intersect,
    is_equigenerated,
    lcm_closure,
    minimalize,
    parse_ideal,
    parse_monomial,
    render_ideal,
    restrict,
    scale,
    validate_polarized_neural,
)
from .structure import (
    FAMILIES,
    JNotLinearError,
    NeuronSplit,
    NotEquigeneratedDegreeNError,
    NotSplittableError,
    betti_splitting_predict,
    family_prop32,
    family_prop33,
    family_prop34_pd,
    family_prop34_reg,
    family_thm36,
    linear_quotients_search,
    recursive_linear_check,
    split_at_neuron,
)
from .verify import VerificationReport, run_verification

__all__ = [name for name in dir() if not name.startswith("_")]
