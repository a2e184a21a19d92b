"""Exact normal forms of holomorphic contractions and their invariant real hypersurfaces."""

from .hypersurface import (
    HypersurfaceModel,
    SolutionSpace,
    ansatz,
    hermitian_report,
    invariance_system,
    solve_invariant_surfaces,
    verify_invariance,
)
from .modelgeom import (
    FormalCurve,
    WeightVector,
    curve_membership,
    homogeneity_weights,
    monomial_curve_search,
    scaling_limit_curve,
)
from .normalform import NormalizationResult, centralizer_member, homological_step, normalize, verify_conjugacy
from .polyring import (
    GaussRat,
    JetMap,
    MonoKey,
    RealPoly,
    compose_jet,
    conj_poly,
    is_real_valued,
    poly_mul,
    substitute_real,
)
from .spectrum import (
    Spectrum,
    admissible_tangent_indices,
    degree_bound,
    extended_resonances,
    resonances,
)

__version__ = "0.1.0"
