"""Exact genus spectra of finite abelian p-groups.

Minimum genus, reduced spectra, stable upper genus, spectral gaps, and
searches for non-isomorphic groups sharing a spectrum - all in unbounded
exact integer arithmetic.
"""

from .conjecture import (
    RELATION_MIXED,
    RELATION_SAME,
    CounterexamplePair,
    e3_family,
    genus_progression,
    rho,
    search_counterexamples,
    spectra_equal,
    varying_exponent_pair,
)
from .errors import (
    GenusSpectrumError,
    InputError,
    InvalidInvariantsError,
    InvalidPrimeError,
    OutOfFamilyError,
    OutOfRangeError,
    UnsupportedError,
    VerificationError,
)
from .group import (
    AbelianPGroup,
    GroupInvariants,
    e_prime,
    invariants,
    is_prime,
    new_group,
    parse_group,
)
from .halfint import HalfInt
from .mainline import (
    INFINITY,
    MainlineProfile,
    envelope,
    gap_norm,
    hull,
    is_mainline,
    mainline_profile,
    wp_eval,
)
from .mingenus import (
    IndexMinimum,
    IndexSet,
    MinGenusReport,
    attaining_datum,
    epsilon_i,
    index_set,
    maclachlan_nu,
    min_gamma_A,
    mu0,
)
from .signature import (
    PDatum,
    alpha,
    alpha_inv,
    classify_gamma_seq,
    gamma,
    genus,
    is_admissible,
    parse_datum,
    reduced_genus,
)
from .spectrum import (
    GenusView,
    SmallClass,
    SpectrumDescriptor,
    classify_small,
    closed_form_spectrum,
    full_spectrum,
    genus_view,
    group_for_spectrum,
    has_large_invariants,
    mu0_plus,
    oracle_reduced_spectrum,
    reduced_min_large,
    scan_bound,
    spectrum_bound_formula,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianPGroup",
    "CounterexamplePair",
    "GenusSpectrumError",
    "GenusView",
    "GroupInvariants",
    "HalfInt",
    "INFINITY",
    "IndexMinimum",
    "IndexSet",
    "InputError",
    "InvalidInvariantsError",
    "InvalidPrimeError",
    "MainlineProfile",
    "MinGenusReport",
    "OutOfFamilyError",
    "OutOfRangeError",
    "PDatum",
    "RELATION_MIXED",
    "RELATION_SAME",
    "SmallClass",
    "SpectrumDescriptor",
    "UnsupportedError",
    "VerificationError",
    "alpha",
    "alpha_inv",
    "attaining_datum",
    "classify_gamma_seq",
    "classify_small",
    "closed_form_spectrum",
    "e3_family",
    "e_prime",
    "envelope",
    "epsilon_i",
    "full_spectrum",
    "gamma",
    "gap_norm",
    "genus",
    "genus_progression",
    "genus_view",
    "group_for_spectrum",
    "has_large_invariants",
    "hull",
    "index_set",
    "invariants",
    "is_admissible",
    "is_mainline",
    "is_prime",
    "maclachlan_nu",
    "mainline_profile",
    "min_gamma_A",
    "mu0",
    "mu0_plus",
    "new_group",
    "oracle_reduced_spectrum",
    "parse_datum",
    "parse_group",
    "reduced_genus",
    "reduced_min_large",
    "rho",
    "scan_bound",
    "search_counterexamples",
    "spectra_equal",
    "spectrum_bound_formula",
    "varying_exponent_pair",
    "wp_eval",
]
