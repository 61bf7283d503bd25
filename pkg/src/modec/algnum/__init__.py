from .field import NumberField, number_field, rationals
from .number import (AlgebraicNumber, NotRealError, alg_add, alg_div, alg_mul, common_field,
                     compare_real, compose_fields, is_algebraic_integer, minimal_poly,
                     parse_algebraic, root_of)

__all__ = [
    "NumberField", "number_field", "rationals", "AlgebraicNumber", "NotRealError",
    "alg_add", "alg_div", "alg_mul", "common_field", "compare_real", "compose_fields",
    "is_algebraic_integer", "minimal_poly", "parse_algebraic", "root_of",
]
