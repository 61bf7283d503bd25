from .hnf import hnf, hnf_with_transform, smith_diagonal, solve_in_lattice
from .ideal import (ClassGroup, IntegralIdeal, PrimeIdeal, PrincipalResult, UnsupportedPrime,
                    class_group, factor_ideal, ideal_norm, minkowski_bound, primes_above,
                    principal_generator, valuation)
from .order import CapExceeded, RingOfIntegers, ring_of_integers
from .roots_of_elements import nth_root

__all__ = [
    "hnf", "hnf_with_transform", "smith_diagonal", "solve_in_lattice", "ClassGroup", "IntegralIdeal",
    "PrimeIdeal", "PrincipalResult", "UnsupportedPrime", "class_group", "factor_ideal", "ideal_norm",
    "minkowski_bound", "primes_above", "principal_generator", "valuation", "CapExceeded",
    "RingOfIntegers", "ring_of_integers", "nth_root",
]
