"""Exact gamma vectors of polynomials, their sign bounds, and the
simplicial and volume-polynomial settings they come from."""

from .errors import CompositionDomainError, DomainError, HypothesisError, ReciprocityError
from .exact_series import Polynomial, TruncatedSeries
from .gamma_core import GammaMatrix, GammaVector, gamma_vector
from .bounds import SignClaim
from .simplicial import AuxDecomposition, FHVectors, SimplicialComplex
from .volume import IntersectionSequence, QNumerator

__all__ = [
    "AuxDecomposition",
    "CompositionDomainError",
    "DomainError",
    "FHVectors",
    "GammaMatrix",
    "GammaVector",
    "HypothesisError",
    "IntersectionSequence",
    "Polynomial",
    "QNumerator",
    "ReciprocityError",
    "SignClaim",
    "SimplicialComplex",
    "TruncatedSeries",
    "gamma_vector",
]
