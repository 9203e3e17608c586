"""Exact computation in Grassmann algebras over the rationals and odd prime
fields: arithmetic, triangular presentations, (skew) derivations and their
parity decompositions, automorphism factorization, differential ideals, and
orbit classification of generic normal elements."""

from .algebra import (
    Element,
    Subspace,
    augmentation_power,
    centre_basis,
    format_element,
    full_space,
    graded_masks,
    ideal_from_generators,
    top_monomial,
)
from .automorphisms import (
    Automorphism,
    Factorization,
    conjugate_derivation,
    conjugation,
    diagonal_scaling,
    factor_automorphism,
    generator_shift,
    is_reduced_odd,
    is_torus,
    linear_substitution,
    torus_scalars,
)
from .canonical import (
    TriangularForm,
    XaFailure,
    XaSolution,
    solve_xa_system,
    triangular_presentation,
)
from .derivations import (
    DerDecomposition,
    Derivation,
    ad,
    decompose_derivation,
    differential_closure,
    generator_projection,
    graded_parts,
    is_nilpotent,
    is_semisimple,
    lie_bracket,
    operator_matrix,
    recover_generators,
    scaled_partial,
)
from .errors import (
    DomainError,
    GrassmannError,
    LimitError,
    MismatchError,
    ParseError,
    ValidationError,
)
from .fields import QQ, GFElem, PrimeField, RationalField, parse_field
from .normal import (
    ORBIT_X1,
    ORBIT_X1_PLUS_THETA_TAIL,
    OrbitReport,
    UnitOrbit,
    classify_normal,
    classify_unit,
    is_normal,
    orbits_are_distinct,
    stabilizes_x1,
    stabilizes_x1_plus_tail,
    stratum,
)
from .parsing import parse_element, parse_element_list
from .skew import (
    SkewDecomposition,
    SkewDerivation,
    decompose_skew,
    partial_derivation,
    skew_ad,
    skew_ad_kernel,
    skew_differential_closure,
    skew_scaled_partial,
)

__version__ = "0.1.0"
