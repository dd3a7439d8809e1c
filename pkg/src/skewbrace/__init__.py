"""Finite skew braces on explicit Cayley tables, with constructive Sylow and
Hall sub-skew braces for the supersoluble ones."""
from . import errors
from .brace import (
    SkewBrace,
    almost_trivial_brace,
    gamma,
    gamma_kernel,
    ideals,
    is_ideal,
    is_left_ideal,
    is_sub_brace,
    left_ideals,
    opposite,
    quotient_brace,
    restrict,
    sub_braces,
    trivial_brace,
    two_of_three,
    validate_brace,
)
from .catalog import small_group, small_group_catalog
from .enumeration import braces_on_group, holomorph, regular_subgroups
from .groups import (
    CayleyGroup,
    automorphism_group,
    group_is_supersoluble,
    hall_subgroups,
    inner_automorphism,
    quotient_group,
    semidirect_product,
    subgroup_props,
    subgroups,
    validate_group,
)
from .io import format_brace, load_brace, parse_brace, save_brace
from .structure import (
    brace_is_supersoluble,
    curran_decompose,
    duality_sigma,
    fixed_sylow_under_gamma,
    hall_subbrace_bruteforce,
    hall_subbrace_constructive,
    minimal_prime_ideal,
    replay,
    solve_cocycle,
    sylow_subbrace_constructive,
    verify_theorems,
)

__version__ = "0.1.0"
