import logging
import re
from dataclasses import dataclass
from typing import ClassVar, List, Optional, Sequence, Tuple

from logic.errors import ParseError, ProfileError
from logic.labels import Connective
from logic.profiles import BASE, LogicProfile, tables_for

logger = logging.getLogger(__name__)

ATOM_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
KEYWORDS = ("I", "Top", "Bot")


class Formula:
    connective: ClassVar[Connective]

    def children(self) -> Tuple["Formula", ...]:
        return ()

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True)
class Atom(Formula):
    name: str
    connective: ClassVar[Connective] = Connective.ATOM

    def __post_init__(self):
        if not ATOM_NAME.match(self.name) or self.name in KEYWORDS:
            raise ValueError(f"invalid atom name {self.name!r}")


@dataclass(frozen=True)
class Unit(Formula):
    connective: ClassVar[Connective] = Connective.UNIT


@dataclass(frozen=True)
class Top(Formula):
    connective: ClassVar[Connective] = Connective.TOP


@dataclass(frozen=True)
class Zero(Formula):
    connective: ClassVar[Connective] = Connective.ZERO


@dataclass(frozen=True)
class Tensor(Formula):
    left: Formula
    right: Formula
    connective: ClassVar[Connective] = Connective.TENSOR

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class With(Formula):
    left: Formula
    right: Formula
    connective: ClassVar[Connective] = Connective.WITH

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class Plus(Formula):
    left: Formula
    right: Formula
    connective: ClassVar[Connective] = Connective.PLUS

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class Limp(Formula):
    antecedent: Formula
    consequent: Formula
    connective: ClassVar[Connective] = Connective.LIMP

    def children(self):
        return (self.antecedent, self.consequent)


UNIT = Unit()
TOP = Top()
BOT = Zero()

Stoup = Optional[Formula]


@dataclass(frozen=True)
class Entry:
    """A context formula, optionally marked as moved there by a tagged implication-right step."""

    formula: Formula
    bullet: bool = False


@dataclass(frozen=True)
class Sequent:
    stoup: Stoup
    context: Tuple[Formula, ...]
    succedent: Formula

    def __post_init__(self):
        if not isinstance(self.context, tuple):
            object.__setattr__(self, "context", tuple(self.context))

    def __str__(self) -> str:
        return print_sequent(self)


def connectives(a: Formula) -> int:
    own = 0 if isinstance(a, Atom) else 1
    return own + sum(connectives(child) for child in a.children())


def sequent_connectives(s: Sequent) -> int:
    total = connectives(s.succedent) + sum(connectives(a) for a in s.context)
    if s.stoup is not None:
        total += connectives(s.stoup)
    return total


def validate_formula(a: Formula, profile: LogicProfile = BASE) -> None:
    if a.connective not in tables_for(profile).connectives:
        raise ProfileError(profile_gate_message(a.connective))
    for child in a.children():
        validate_formula(child, profile)


def validate_sequent(s: Sequent, profile: LogicProfile = BASE) -> None:
    if s.stoup is not None:
        validate_formula(s.stoup, profile)
    for a in s.context:
        validate_formula(a, profile)
    validate_formula(s.succedent, profile)


def profile_gate_message(connective: Connective) -> str:
    if connective is Connective.TOP:
        return "⊤ requires units profile"
    if connective is Connective.ZERO:
        return "⊥ requires units profile"
    if connective is Connective.LIMP:
        return "⊸ requires implication profile"
    return f"{connective.value} is not available"


def is_negative(a: Formula, profile: LogicProfile = BASE) -> bool:
    """Right-invertible succedent: its rule lives in the RI phase."""
    return a.connective in tables_for(profile).negative


def is_irreducible_stoup(s: Stoup, profile: LogicProfile = BASE) -> bool:
    return s is None or s.connective not in tables_for(profile).reducible_stoup


def conj(a: Formula) -> List[Formula]:
    if isinstance(a, With):
        return conj(a.left) + conj(a.right)
    return [a]


def impconj(a: Formula) -> List[Tuple[Tuple[Formula, ...], Formula]]:
    if isinstance(a, With):
        return impconj(a.left) + impconj(a.right)
    if isinstance(a, Limp):
        return [((a.antecedent,) + gamma, b) for gamma, b in impconj(a.consequent)]
    return [((), a)]


def decompose(a: Formula, profile: LogicProfile = BASE) -> List[Tuple[Tuple[Formula, ...], Formula]]:
    """Leaves of the right-invertible phase: extra context and non-negative succedent."""
    if profile.implication:
        return impconj(a)
    return [((), p) for p in conj(a)]


# ---------------------------------------------------------------------------
# concrete syntax

SYMBOLS = {Tensor: "*", With: "/\\", Plus: "\\/", Limp: "-o"}


def print_formula(a: Formula) -> str:
    if isinstance(a, Atom):
        return a.name
    if isinstance(a, Unit):
        return "I"
    if isinstance(a, Top):
        return "Top"
    if isinstance(a, Zero):
        return "Bot"
    left, right = a.children()
    return f"{_print_child(a, left, is_left=True)} {SYMBOLS[type(a)]} {_print_child(a, right, is_left=False)}"


def _print_child(parent: Formula, child: Formula, is_left: bool) -> str:
    text = print_formula(child)
    if not child.children():
        return text
    # mixed connectives are always bracketed; same-connective chains associate right
    if type(child) is not type(parent) or is_left:
        return f"({text})"
    return text


def print_sequent(s: Sequent) -> str:
    stoup = "-" if s.stoup is None else print_formula(s.stoup)
    context = ", ".join(print_formula(a) for a in s.context) if s.context else "."
    return f"{stoup} | {context} |- {print_formula(s.succedent)}"


class FormulaParser:
    """Recursive-descent parser for formulas and sequents.

    Precedence from tightest: `*`, `/\\`, `\\/`, `-o`; all four associate to the right.
    """

    def __init__(self, profile: LogicProfile = BASE):
        self.profile = profile
        self.token_pattern = re.compile(
            r"\s*(?:(?P<op>\|-|\||-o|-|/\\|\\/|\*|\(|\)|,|\.)|(?P<ident>[A-Za-z][A-Za-z0-9_]*))"
        )
        self.binary_levels = [("-o", Limp), ("\\/", Plus), ("/\\", With), ("*", Tensor)]
        self.tokens: List[Tuple[str, int]] = []
        self.index = 0
        self.text = ""

    def tokenize(self, text: str) -> List[Tuple[str, int]]:
        tokens = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            match = self.token_pattern.match(text, pos)
            if not match:
                offset = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise ParseError(f"unexpected character {text[offset]!r}", offset)
            kind = "op" if match.group("op") else "ident"
            start = match.start(kind)
            tokens.append((match.group(kind), start))
            pos = match.end()
        return tokens

    def reset(self, text: str) -> None:
        self.text = text
        self.tokens = self.tokenize(text)
        self.index = 0

    def peek(self) -> Optional[str]:
        if self.index < len(self.tokens):
            return self.tokens[self.index][0]
        return None

    def position(self) -> int:
        if self.index < len(self.tokens):
            return self.tokens[self.index][1]
        return len(self.text)

    def advance(self) -> str:
        token = self.peek()
        if token is None:
            raise ParseError("unexpected end of input", self.position())
        self.index += 1
        return token

    def expect(self, token: str) -> None:
        if self.peek() != token:
            found = self.peek() or "end of input"
            raise ParseError(f"expected {token!r}, found {found!r}", self.position())
        self.index += 1

    def finish(self) -> None:
        if self.peek() is not None:
            raise ParseError(f"unexpected token {self.peek()!r}", self.position())

    def parse_formula(self, text: str) -> Formula:
        self.reset(text)
        formula = self.formula()
        self.finish()
        return formula

    def parse_sequent(self, text: str) -> Sequent:
        self.reset(text)
        if self.peek() == "-":
            self.advance()
            stoup = None
        else:
            stoup = self.formula()
        self.expect("|")
        context: List[Formula] = []
        if self.peek() == ".":
            self.advance()
        else:
            context.append(self.formula())
            while self.peek() == ",":
                self.advance()
                context.append(self.formula())
        self.expect("|-")
        succedent = self.formula()
        self.finish()
        sequent = Sequent(stoup, tuple(context), succedent)
        logger.debug("parsed sequent %s", sequent)
        return sequent

    def formula(self, level: int = 0) -> Formula:
        if level == len(self.binary_levels):
            return self.primary()
        symbol, node = self.binary_levels[level]
        left = self.formula(level + 1)
        if self.peek() != symbol:
            return left
        if node is Limp and not self.profile.implication:
            raise ProfileError(profile_gate_message(Connective.LIMP))
        self.advance()
        right = self.formula(level)
        return node(left, right)

    def primary(self) -> Formula:
        position = self.position()
        token = self.advance()
        if token == "(":
            inner = self.formula()
            self.expect(")")
            return inner
        if token == "I":
            return UNIT
        if token in ("Top", "Bot"):
            if not self.profile.units:
                raise ProfileError(profile_gate_message(Connective.TOP if token == "Top" else Connective.ZERO))
            return TOP if token == "Top" else BOT
        if ATOM_NAME.match(token):
            return Atom(token)
        raise ParseError(f"unexpected token {token!r}", position)


def parse_formula(text: str, profile: LogicProfile = BASE) -> Formula:
    return FormulaParser(profile).parse_formula(text)


def parse_sequent(text: str, profile: LogicProfile = BASE) -> Sequent:
    return FormulaParser(profile).parse_sequent(text)


def context_formulas(entries: Sequence[Entry]) -> Tuple[Formula, ...]:
    return tuple(e.formula for e in entries)


def erase(entries: Sequence[Entry]) -> Tuple[Entry, ...]:
    return tuple(Entry(e.formula) for e in entries)


def plain_entries(context: Sequence[Formula]) -> Tuple[Entry, ...]:
    return tuple(Entry(a) for a in context)
