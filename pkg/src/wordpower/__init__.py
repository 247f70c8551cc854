"""Mapping words to powers under morphism families."""

from .constructions import (HighPowerWitness, construct_lower_bound_instance,
                            construct_unique_letter_morphism)
from .equations import (Equation, EquationSystem, balance_system, check_solution,
                        eqsatcf_to_eqsat, eqsatcf_to_nonprim, eqsatcf_to_pow, format_system,
                        is_balanced, nonprim_to_system, parse_system, pow_to_equation, xy_words)
from .errors import ParseError, PreconditionError, WordPowerError
from .morphisms import (Family, Morphism, apply, compose, format_morphism, in_family, is_code,
                        is_injective, is_periodic, parse_morphism)
from .pex import (Completeness, InjKind, PexQuery, PexReport, classify_injective, gex_from_pex,
                  pex_all_morphisms_closed_form, pex_bounded, pex_enlarged_domain_closed_form,
                  pex_scale_by_primitive_power)
from .solver import SolveOutcome, Status, find_nonprimitive_witness, find_power_witness, solve_bounded
from .words import (BINARY, Alphabet, Word, are_conjugate, fine_wilf_root, is_internal_factor,
                    is_primitive, primitive_root, word)

__version__ = "0.1.0"

__all__ = [
    "HighPowerWitness",
    "construct_lower_bound_instance",
    "construct_unique_letter_morphism",
    "Equation",
    "EquationSystem",
    "balance_system",
    "check_solution",
    "eqsatcf_to_eqsat",
    "eqsatcf_to_nonprim",
    "eqsatcf_to_pow",
    "format_system",
    "is_balanced",
    "nonprim_to_system",
    "parse_system",
    "pow_to_equation",
    "xy_words",
    "ParseError",
    "PreconditionError",
    "WordPowerError",
    "Family",
    "Morphism",
    "apply",
    "compose",
    "format_morphism",
    "in_family",
    "is_code",
    "is_injective",
    "is_periodic",
    "parse_morphism",
    "Completeness",
    "InjKind",
    "PexQuery",
    "PexReport",
    "classify_injective",
    "gex_from_pex",
    "pex_all_morphisms_closed_form",
    "pex_bounded",
    "pex_enlarged_domain_closed_form",
    "pex_scale_by_primitive_power",
    "SolveOutcome",
    "Status",
    "find_nonprimitive_witness",
    "find_power_witness",
    "solve_bounded",
    "BINARY",
    "Alphabet",
    "Word",
    "are_conjugate",
    "fine_wilf_root",
    "is_internal_factor",
    "is_primitive",
    "primitive_root",
    "word",
]
