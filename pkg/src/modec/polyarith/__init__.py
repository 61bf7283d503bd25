from .factor import factor_over_Q, factor_with_multiplicity, is_irreducible, poly_gcd, squarefree_part
from .modp import factor_mod_p
from .poly import IntPoly, RatPoly, as_intpoly, format_poly
from .resultant import (bivariate_resultant, parse_bivariate, product_resultant, ratio_resultant,
                        resultant, sum_resultant, sylvester_resultant)

__all__ = [
    "factor_over_Q", "factor_with_multiplicity", "is_irreducible", "poly_gcd", "squarefree_part",
    "factor_mod_p", "IntPoly", "RatPoly", "as_intpoly", "format_poly", "bivariate_resultant",
    "parse_bivariate", "product_resultant", "ratio_resultant", "resultant", "sum_resultant",
    "sylvester_resultant",
]
