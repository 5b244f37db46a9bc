"""Numerical semigroups, toric ideals of monomial curves, and the concatenation families."""

from .errors import (
    ClosedFormInconsistent,
    DimensionMismatch,
    EmptyGenerators,
    InvalidInput,
    NotCertified,
    NotCoprime,
    NotHomogeneous,
    NotInSemigroup,
    ResourceLimit,
    UnsupportedE,
    WrongE,
)
from .family import (
    FamilyParams,
    VerificationReport,
    closed_apery_e4,
    closed_apery_e5,
    closed_pf_e4,
    closed_pf_e5,
    family,
    q5_generator_set,
    verify_family,
)
from .poly import (
    Binomial,
    GroebnerBasis,
    TermOrder,
    buchberger,
    compare,
    gastinger_check,
    normal_form,
    project_to_zero,
    quotient_dimension,
    s_polynomial,
)
from .presentation import (
    FactorizationGraph,
    PresentationReport,
    factorization_graph,
    factorizations,
    lattice_kernel_basis,
    minimal_generating_set,
    minimality_check,
    mu_and_betti_degrees,
    toric_ideal_generators,
)
from .semigroup import (
    AperyTable,
    NumericalSemigroup,
    SemigroupInvariants,
    apery,
    concat_semigroup,
    contains,
    new_semigroup,
    pseudo_frobenius,
    sg_leq,
)

__version__ = "0.1.0"
