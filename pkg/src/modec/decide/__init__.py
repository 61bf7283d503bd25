from .inclusion import DEFAULT_COVER_CAP, InclusionResult, ResourceError, inclusion_holds
from .pairs import AlignedPair, BasicPair, ZeroElementError, make_pair, normalize_pair, pair_is_empty
from .radical import DEFAULT_BUDGET, RadicalResult, radical_member_generic
from .sentence import (And, Atom, Decision, Not, Or, SentenceSyntaxError, atoms_of, decide_sentence,
                       evaluate, parse_sentence)

__all__ = [
    "DEFAULT_COVER_CAP", "InclusionResult", "ResourceError", "inclusion_holds", "AlignedPair",
    "BasicPair", "ZeroElementError", "make_pair", "normalize_pair", "pair_is_empty", "DEFAULT_BUDGET",
    "RadicalResult", "radical_member_generic", "And", "Atom", "Decision", "Not", "Or",
    "SentenceSyntaxError", "atoms_of", "decide_sentence", "evaluate", "parse_sentence",
]
