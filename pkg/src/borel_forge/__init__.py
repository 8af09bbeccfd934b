"""Exact computations with Borel sets, binomial systems and generic initial ideals."""

from .binomial import BinomialSystem, check_filtration, filtration, ideal_of, is_good
from .combinat import TermOrder, borel_closure, borel_ge, borel_witness, enumerate_U, is_borel_set
from .generic import alpha, gin, gin_certified, phi_expand, verify_alpha_shift
from .monomial import MonomialIdeal, hilbert_function, hilbert_polynomial, saturate_monomial
from .polyalg import Ideal, Polynomial, groebner, saturate, weight_degeneration

__version__ = "0.1.0"

__all__ = [
    "BinomialSystem", "Ideal", "MonomialIdeal", "Polynomial", "TermOrder", "alpha",
    "borel_closure", "borel_ge", "borel_witness", "check_filtration", "enumerate_U",
    "filtration", "gin", "gin_certified", "groebner", "hilbert_function", "hilbert_polynomial",
    "ideal_of", "is_borel_set", "is_good", "phi_expand", "saturate", "saturate_monomial",
    "verify_alpha_shift", "weight_degeneration", "__version__",
]
