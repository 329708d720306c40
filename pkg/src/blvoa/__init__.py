"""Exact symbolic engine for the affine Lie algebra of type B_l at the
half-integer levels n - l + 1/2: singular-vector verification, zero-weight
polynomial extraction, highest-weight classification and admissibility
certificates, all in rational arithmetic."""

from .rootsys import (
    Root,
    RootSystem,
    Weight,
    build_root_system,
    coroot_pairing,
    inner,
    weight_from_fundamental,
)
from .liealg import BasisElement, LieAlgebra
from .uea import (
    UEA,
    CartanPolynomial,
    TermGuardExceeded,
    UEAElement,
    check_commuting_monomials,
    check_identity,
    identity_suite,
    poly_echelon,
    poly_in_span,
    spans_equal,
)
from .affine import (
    AdmissibilityResult,
    AffineRealRoot,
    AffineWeight,
    SingularReport,
    VacuumModule,
    VermaVector,
    affine_bracket,
    build_singular_candidate,
    check_singular,
    dual_coxeter_number,
    fz_image,
    is_admissible,
    shifted_pairing,
)
from .zero_weight import (
    AdModuleBasis,
    OracleCeilingExceeded,
    explicit_p,
    explicit_q,
    generate_module,
    oracle_equals_explicit_span,
    p0_basis,
    singular_image,
    verify_membership,
)
from .classify import (
    ClassificationResult,
    Entry,
    certify,
    classify_category_o,
    classify_finite_dim,
    level_of,
    merge_results,
    mu_s,
    mu_s_prime,
    solve_triangular,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
