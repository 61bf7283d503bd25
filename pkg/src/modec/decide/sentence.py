"""Sentences: Boolean combinations of invariant atoms Inv(a,b; c,d) >= k.

    sentence := disj ; disj := conj { "|" conj } ; conj := lit { "&" lit }
    lit := "~" lit | "(" sentence ")" | atom
    atom := "Inv(" elem "," elem ";" elem "," elem ")" ">=" INT

With infinite residue fields an invariant is 1 or infinite, so k = 1 atoms are
true and k >= 2 atoms say the module's support meets the pair's open set.  A
set S of such atoms is realizable iff no open set of S lies in the union of
the open sets outside S; a sentence is valid iff it holds for every
realizable S.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from .. import literals
from ..ezring.base import EffectiveRing, PrimeConstraint
from .inclusion import DEFAULT_COVER_CAP, inclusion_holds
from .pairs import BasicPair, ZeroElementError, make_pair, normalize_pair


class SentenceSyntaxError(literals.ParseError):
    pass


@dataclass(frozen=True)
class Atom:
    pair: BasicPair
    k: int
    text: str


@dataclass(frozen=True)
class Not:
    arg: object


@dataclass(frozen=True)
class And:
    args: tuple


@dataclass(frozen=True)
class Or:
    args: tuple


class _Parser:
    def __init__(self, text: str, ring: EffectiveRing):
        self.text = text
        self.ring = ring
        self.pos = 0

    def error(self, msg: str, pos: int | None = None):
        return SentenceSyntaxError(msg, self.pos if pos is None else pos, self.text)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s: str) -> bool:
        self.skip()
        return self.text.startswith(s, self.pos)

    def expect(self, s: str):
        if not self.peek(s):
            raise self.error(f"expected {s!r}")
        self.pos += len(s)

    def parse(self):
        node = self.disj()
        self.skip()
        if self.pos != len(self.text):
            raise self.error("unexpected trailing input")
        return node

    def disj(self):
        args = [self.conj()]
        while self.peek("|"):
            self.pos += 1
            args.append(self.conj())
        return args[0] if len(args) == 1 else Or(tuple(args))

    def conj(self):
        args = [self.lit()]
        while self.peek("&"):
            self.pos += 1
            args.append(self.lit())
        return args[0] if len(args) == 1 else And(tuple(args))

    def lit(self):
        if self.peek("~"):
            self.pos += 1
            return Not(self.lit())
        if self.peek("("):
            self.pos += 1
            node = self.disj()
            self.expect(")")
            return node
        if self.peek("Inv"):
            return self.atom()
        raise self.error("expected '~', '(' or an atom Inv(...)")

    def element(self, stops: str) -> tuple[str, int]:
        self.skip()
        start, depth = self.pos, 0
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if depth == 0 and ch in stops:
                break
            depth += (ch == "(") - (ch == ")")
            self.pos += 1
        else:
            raise self.error("unterminated atom")
        body = self.text[start:self.pos].strip()
        if not body:
            raise self.error("missing ring element")
        return body, start

    def atom(self) -> Atom:
        begin = self.pos
        self.expect("Inv")
        self.expect("(")
        parts = []
        for stop in (",", ";", ",", ")"):
            body, at = self.element(stop)
            try:
                parts.append(self.ring.parse(body))
            except (literals.ParseError, ValueError, ArithmeticError) as exc:
                raise self.error(f"bad ring element {body!r}: {exc}", at) from None
            self.expect(stop)
        self.expect(">=")
        self.skip()
        m = re.match(r"\d+", self.text[self.pos:])
        if not m:
            raise self.error("expected an integer threshold")
        self.pos += m.end()
        k = int(m.group())
        if k < 1:
            raise self.error("threshold must be at least 1", begin)
        try:
            pair = make_pair(self.ring, *parts)
        except ZeroElementError as exc:
            raise self.error(str(exc), begin) from None
        return Atom(pair, k, self.text[begin:self.pos].strip())


def parse_sentence(text: str, ring: EffectiveRing):
    return _Parser(text, ring).parse()


def atoms_of(node) -> list[Atom]:
    if isinstance(node, Atom):
        return [node]
    if isinstance(node, Not):
        return atoms_of(node.arg)
    out = []
    for a in node.args:
        out += atoms_of(a)
    return out


def evaluate(node, truth) -> bool:
    """truth(atom) -> bool."""
    if isinstance(node, Atom):
        return truth(node)
    if isinstance(node, Not):
        return not evaluate(node.arg, truth)
    if isinstance(node, And):
        return all(evaluate(a, truth) for a in node.args)
    return any(evaluate(a, truth) for a in node.args)


@dataclass(frozen=True)
class OpenWitness:
    atom: str
    constraint: PrimeConstraint
    reason: str


@dataclass(frozen=True)
class Decision:
    verdict: str  # "VALID" | "INVALID"
    support: tuple = ()  # atoms whose open sets the countermodel meets
    witnesses: tuple = ()  # one OpenWitness per atom in support
    subsets_checked: int = 0

    @property
    def valid(self) -> bool:
        return self.verdict == "VALID"

    def describe(self, ring: EffectiveRing) -> str:
        if self.valid:
            return "VALID"
        lines = ["INVALID", "countermodel: a direct sum of one point from each open set below"]
        if not self.witnesses:
            lines.append("  (the zero module)")
        for w in self.witnesses:
            c = w.constraint
            lines.append(f"  {w.atom}: a prime containing {ring.format(c.must_contain)} and not "
                         f"{ring.format(c.must_avoid)} ({w.reason})")
        return "\n".join(lines)


def decide_sentence(ring: EffectiveRing, sentence, cover_cap: int = DEFAULT_COVER_CAP) -> Decision:
    if not ring.hypotheses_ok:
        raise ValueError(f"ring {ring.name!r} does not meet the hypotheses of the decision procedure")
    if isinstance(sentence, str):
        sentence = parse_sentence(sentence, ring)
    keys: dict[str, int] = {}
    pairs = []
    for atom in atoms_of(sentence):
        if atom.k >= 2:
            key = atom.pair.text(ring)
            if key not in keys:
                keys[key] = len(pairs)
                pairs.append((key, normalize_pair(ring, atom.pair)))
    m = len(pairs)
    cache: dict = {}

    def open_outside(i: int, S: frozenset):
        key = (i, S)
        if key not in cache:
            rest = [pairs[j][1] for j in range(m) if j not in S]
            cache[key] = inclusion_holds(ring, pairs[i][1], rest, cover_cap)
        return cache[key]

    checked = 0
    for size in range(m + 1):
        for S in map(frozenset, combinations(range(m), size)):
            def truth(atom, S=S):
                return atom.k <= 1 or keys[atom.pair.text(ring)] in S
            if evaluate(sentence, truth):
                continue
            checked += 1
            results = [open_outside(i, S) for i in sorted(S)]
            if all(not r.holds for r in results):
                witnesses = tuple(OpenWitness(pairs[i][0], r.witness, r.reason)
                                  for i, r in zip(sorted(S), results))
                return Decision("INVALID", tuple(pairs[i][0] for i in sorted(S)), witnesses, checked)
    return Decision("VALID", subsets_checked=checked)
