"""Exact polynomial arithmetic, Groebner bases and ideal operations."""

from .coords import DEFAULT_ENTROPY_BOUND, UnipotentChange, random_unipotent
from .degeneration import DegenerationFamily, find_weight, weight_degeneration
from .groebner import (DEFAULT_SPAIR_BUDGET, groebner_basis, is_groebner, is_reduced,
                       normal_form, spoly)
from .ideal import (DEFAULT_RETRIES, Ideal, apply_change, certify, colon_var_power,
                    colon_variable, eliminate, groebner, hilbert_function_ideal,
                    ideal_intersection, initial_ideal, is_saturated, saturate)
from .polynomial import Polynomial, default_names

__all__ = [
    "DEFAULT_ENTROPY_BOUND", "DEFAULT_RETRIES", "DEFAULT_SPAIR_BUDGET",
    "DegenerationFamily", "Ideal", "Polynomial", "UnipotentChange",
    "apply_change", "certify", "colon_var_power", "colon_variable", "default_names",
    "eliminate", "find_weight", "groebner", "groebner_basis", "hilbert_function_ideal",
    "ideal_intersection", "initial_ideal", "is_groebner", "is_reduced", "is_saturated",
    "normal_form", "random_unipotent", "saturate", "spoly", "weight_degeneration",
]
