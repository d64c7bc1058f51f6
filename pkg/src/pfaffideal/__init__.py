"""Pfaffian and stack-polyomino determinantal ideals: Groebner bases,
initial ideals and the simplicial complexes behind them."""

from .algebra import QQ, Monomial, PolyRing, Polynomial, PrimeField, VariableOrder, parse_field
from .complexes import SimplicialComplex, delta_complex, f_h_vectors, sigma_complex, sphere_certificate
from .groebner import GeneratorSet, buchberger, is_groebner_basis, reduce
from .monideal import MonomialIdeal, polarize, quotient_stats
from .pfaffian import PfaffianInstance, pfaffian, pfaffian_ideal_generators
from .polyomino import StackPolyomino, determinantal_generators

__version__ = "0.1.0"

__all__ = [
    "QQ",
    "GeneratorSet",
    "Monomial",
    "MonomialIdeal",
    "PfaffianInstance",
    "PolyRing",
    "Polynomial",
    "PrimeField",
    "SimplicialComplex",
    "StackPolyomino",
    "VariableOrder",
    "buchberger",
    "delta_complex",
    "determinantal_generators",
    "f_h_vectors",
    "is_groebner_basis",
    "parse_field",
    "pfaffian",
    "pfaffian_ideal_generators",
    "polarize",
    "quotient_stats",
    "reduce",
    "sigma_complex",
    "sphere_certificate",
]
