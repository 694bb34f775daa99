"""Schubert polynomials, pipe dreams, Schubert determinantal ideals, and
their desk-scale Groebner verification."""

from . import bruhatlab, checks, grobner, hilbert, ideal, perm, pipedream, poly, subword
from .perm import Perm
from .pipedream import PipeDream
from .poly import LaurentPoly

__all__ = [
    "Perm",
    "PipeDream",
    "LaurentPoly",
    "perm",
    "poly",
    "pipedream",
    "ideal",
    "grobner",
    "hilbert",
    "subword",
    "bruhatlab",
    "checks",
]
