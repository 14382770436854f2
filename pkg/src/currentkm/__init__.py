"""Integrable highest-weight modules for current Kac-Moody algebras g' (x) A + h''.

Exact-arithmetic toolkit: Groebner bases and zero-dimensional ideals, root
multiplicities and characters, the classification pipeline, and a
brute-force oracle built on explicit PBW modules for type A.
"""
from .classify import (
    Decomposition,
    PsiSpec,
    classify_module,
    evaluation_weights,
    predicted_character,
    psi_validate,
    radical_descent,
)
from .hwchar import CharacterTable, freudenthal_character, full_character, tensor_character
from .liecore import (
    CartanData,
    RootTable,
    cartan_type_a,
    is_dominant_integral,
    roots_up_to_height,
    symmetric_form,
    validate_gcm,
    weyl_dim,
)
from .polyring import Polynomial, poly_eval, poly_mul, poly_parse, squarefree_part
from .zerodim import (
    Ideal,
    QuotientAlgebra,
    ReducedGroebnerBasis,
    buchberger,
    crt_idempotents,
    ideal_product,
    is_cofinite,
    maximal_points,
    minimal_polynomial,
    normal_form,
    quotient_algebra,
    radical_zero_dim,
)

__version__ = "0.1.0"
