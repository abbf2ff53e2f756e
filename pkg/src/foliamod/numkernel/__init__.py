"""Complex polynomial algebra and small dense linear algebra."""

from foliamod.numkernel.linalg import CMatrix, as_array, eig2, singular_values
from foliamod.numkernel.newton import newton_polish
from foliamod.numkernel.poly import (
    DROP_TOL,
    BiPoly,
    UniPoly,
    X,
    Y,
    monomial_index,
    monomials,
    n_monomials,
)
from foliamod.numkernel.resultant import resultant_eliminate, sylvester_matrix
from foliamod.numkernel.roots import root_residual_ok, roots_univariate

__all__ = [
    "as_array",
    "BiPoly",
    "CMatrix",
    "DROP_TOL",
    "eig2",
    "monomial_index",
    "monomials",
    "n_monomials",
    "newton_polish",
    "resultant_eliminate",
    "root_residual_ok",
    "roots_univariate",
    "singular_values",
    "sylvester_matrix",
    "UniPoly",
    "X",
    "Y",
]
