"""Exact characteristic numbers for complete intersections in products of
projective spaces: s-numbers, Hurewicz vectors, mod-q t-invariants, the
lambda family for surfaces, and degree-formula verdicts.
"""

from .bundles import (
    TotalChernClass,
    line_bundle,
    opposite,
    s_alpha_class,
    tangent_class,
    trivial_bundle,
    virtual_difference,
    whitney,
)
from .charnum import (
    HurewiczVector,
    LambdaReport,
    Residue,
    SweepReport,
    complete_intersection_family,
    divisibility_sweep,
    hurewicz_vector,
    hypersurface_s_top,
    is_prime,
    lambda_integrality,
    s_number,
    surface_e1_number,
    surface_family,
    t_number,
    variety_degree,
)
from .chow import (
    AmbientSpace,
    ChowClass,
    ChowRing,
    VarietyDescriptor,
    ZeroCycle,
    ambient_ring,
    degree_of_class,
    zero_cycle_degree,
)
from .degform import (
    DegreeFormulaVerdict,
    HoffmannVerdict,
    ObstructionIdeal,
    QuadricComputation,
    degree_formula_check,
    hoffmann_verdict,
    obstruction_ideal,
    preset_point_degrees,
    quadric_chain,
    quadric_t,
)
from .errors import ConsistencyError, NonUnitError, PropertyViolation, StructureError
from .oracle import SplitBundle, equivalence_sweep, oracle_equivalence, s_alpha_split
from .poly import GradedPoly, PolyRing, poly_add, poly_invert_unit, poly_mul
from .symfunc import (
    AlphaTuple,
    SymPoly,
    elementary_expansion,
    enumerate_alpha,
    monomial_symmetric,
    to_elementary,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaTuple",
    "AmbientSpace",
    "ChowClass",
    "ChowRing",
    "ConsistencyError",
    "DegreeFormulaVerdict",
    "GradedPoly",
    "HoffmannVerdict",
    "HurewiczVector",
    "LambdaReport",
    "NonUnitError",
    "ObstructionIdeal",
    "PolyRing",
    "PropertyViolation",
    "QuadricComputation",
    "Residue",
    "SplitBundle",
    "StructureError",
    "SweepReport",
    "SymPoly",
    "TotalChernClass",
    "VarietyDescriptor",
    "ZeroCycle",
    "ambient_ring",
    "complete_intersection_family",
    "degree_formula_check",
    "degree_of_class",
    "divisibility_sweep",
    "elementary_expansion",
    "enumerate_alpha",
    "equivalence_sweep",
    "hoffmann_verdict",
    "hurewicz_vector",
    "hypersurface_s_top",
    "is_prime",
    "lambda_integrality",
    "line_bundle",
    "monomial_symmetric",
    "obstruction_ideal",
    "opposite",
    "oracle_equivalence",
    "poly_add",
    "poly_invert_unit",
    "poly_mul",
    "preset_point_degrees",
    "quadric_chain",
    "quadric_t",
    "s_alpha_class",
    "s_alpha_split",
    "s_number",
    "surface_e1_number",
    "surface_family",
    "t_number",
    "tangent_class",
    "to_elementary",
    "trivial_bundle",
    "variety_degree",
    "virtual_difference",
    "whitney",
    "zero_cycle_degree",
]
