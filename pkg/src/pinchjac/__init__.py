"""pinchjac: exact arithmetic for pinched rational curve configurations.

The package models reduced projective curves whose singularities are of
contraction type (a point of the normalization pinched along a finite
subscheme), computes their generalized Jacobians in explicit torus and
unipotent coordinates, evaluates Abel-Jacobi maps, performs modifications,
computes contraction subalgebras with membership certificates, and builds
the unit germs that obstruct extending Abel-Jacobi maps beyond the smooth
locus. Everything runs over the rationals with exact arithmetic.
"""

from .algebra import (
    INFINITY,
    FieldElem,
    Jet,
    P1Point,
    Poly,
    jet_of_rational_function,
    unit_exp,
    unit_log,
)
from .abel_jacobi import (
    SmoothDivisor,
    aj_eval,
    aj_injectivity_probe,
    cuspidal_param,
    divisor_class,
    nodal_param,
    param_inverse,
)
from .contraction import (
    ContractionResult,
    FiniteSubscheme,
    GeneratorSet,
    MembershipCertificate,
    NotMember,
    contract_p1,
    contract_with_generators,
    contraction_generators,
    finite_subscheme,
    subalgebra_membership,
    vanishing_ideal_generator,
)
from .curve_model import (
    Branch,
    Component,
    CurveConfig,
    DualGraph,
    Singularity,
    Violation,
    dual_graph,
    is_smooth_point,
    validate,
    with_basepoints,
)
from .dsl import CurveDoc, Diagnostic, DslParseError, parse_curve_dsl, print_curve_dsl
from .jacobian import (
    JacElement,
    JacobianPresentation,
    LocalUnitQuotient,
    UnitJetVector,
    change_of_basis,
    class_reduce,
    jac_add,
    jac_eq,
    jac_neg,
    jac_zero,
    jacobian_structure,
    local_unit_quotient,
    unit_jet_vector,
)
from .modification import ModificationSite, indeterminate_sites, modifiable_sites, modify
from .obstruction import (
    Liftable,
    LiftabilityProblem,
    NotFound,
    NotLiftable,
    Witness,
    liftability_problem,
    liftability_test,
    obstruction_witness,
)

__version__ = "0.1.0"
