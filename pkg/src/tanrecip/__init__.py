"""Exact verification of the tangent-product proof of quadratic reciprocity."""

from .cycloroots import HalfSystem, RootPolynomial, half_system, numeric_root_check, product_identity_check, root_poly
from .errors import (
    InconsistencyError,
    InvalidInputError,
    NotAPrimeError,
    PoleError,
    UnsupportedLeadingCoefficientError,
)
from .exactmath import (
    Poly,
    PowerSums,
    companion_product,
    newton_power_sums,
    poly_eval,
    poly_mul,
    product_over_roots,
    resultant,
    sylvester_resultant,
)
from .reciprocity import (
    ReciprocityReport,
    SignedPermutation,
    compute_PQ,
    gauss_lemma_sign,
    legendre_euler,
    legendre_tangent,
    sweep,
    verify_pair,
)
from .tanmul import TangentForm, TanRational, compose_check, eisenstein_form, float_sanity, tan_multiple

__version__ = "0.1.0"

__all__ = [
    "HalfSystem",
    "InconsistencyError",
    "InvalidInputError",
    "NotAPrimeError",
    "PoleError",
    "Poly",
    "PowerSums",
    "ReciprocityReport",
    "RootPolynomial",
    "SignedPermutation",
    "TanRational",
    "TangentForm",
    "UnsupportedLeadingCoefficientError",
    "companion_product",
    "compose_check",
    "compute_PQ",
    "eisenstein_form",
    "float_sanity",
    "gauss_lemma_sign",
    "half_system",
    "legendre_euler",
    "legendre_tangent",
    "newton_power_sums",
    "numeric_root_check",
    "poly_eval",
    "poly_mul",
    "product_identity_check",
    "product_over_roots",
    "resultant",
    "root_poly",
    "sweep",
    "sylvester_resultant",
    "tan_multiple",
    "verify_pair",
]
