"""Profile deltas: which connectives, rules, equations and tags each logic carries.

Everything that differs between the base logic and its extensions (additive
units, skew exchange, linear implication) is looked up here through
`tables_for`; the other modules never test profile flags for rule sets.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Tuple

from logic.errors import ProfileError
from logic.labels import Connective, EquationId, FocusedRule, Rule, TagKind

PROFILE_NAMES = (
    "base",
    "units",
    "exchange",
    "implication",
    "units+exchange",
    "units+implication",
)

BASE_RULES = frozenset({
    Rule.AX, Rule.PASS, Rule.IL, Rule.IR, Rule.OTIMES_L, Rule.OTIMES_R,
    Rule.AND_L1, Rule.AND_L2, Rule.AND_R, Rule.OR_L, Rule.OR_R1, Rule.OR_R2,
})
UNIT_RULES = frozenset({Rule.TOP_R, Rule.BOT_L})
EXCHANGE_RULES = frozenset({Rule.EX})
IMPLICATION_RULES = frozenset({Rule.LIMP_L, Rule.LIMP_R})

BASE_FOCUSED_RULES = frozenset({
    FocusedRule.AND_R, FocusedRule.LI2RI, FocusedRule.IL, FocusedRule.OTIMES_L,
    FocusedRule.OR_L, FocusedRule.F2LI, FocusedRule.PASS, FocusedRule.AX,
    FocusedRule.IR, FocusedRule.AND_L1, FocusedRule.AND_L2, FocusedRule.OTIMES_R,
    FocusedRule.OR_R1, FocusedRule.OR_R2,
})
UNIT_FOCUSED_RULES = frozenset({FocusedRule.TOP_R, FocusedRule.BOT_L})
EXCHANGE_FOCUSED_RULES = frozenset({FocusedRule.RI2C, FocusedRule.EX})
IMPLICATION_FOCUSED_RULES = frozenset({FocusedRule.LIMP_L, FocusedRule.LIMP_R})

BASE_EQUATIONS: Tuple[EquationId, ...] = (
    EquationId.ETA_I,
    EquationId.ETA_TENSOR,
    EquationId.ETA_WITH,
    EquationId.ETA_PLUS,
    EquationId.OTIMESR_PASS,
    EquationId.OTIMESR_IL,
    EquationId.OTIMESR_OTIMESL,
    EquationId.OTIMESR_ANDL,
    EquationId.OTIMESR_ORL,
    EquationId.PASS_ANDR,
    EquationId.IL_ANDR,
    EquationId.OTIMESL_ANDR,
    EquationId.ANDL_ANDR,
    EquationId.ORL_ANDR,
    EquationId.ORR_PASS,
    EquationId.ORR_IL,
    EquationId.ORR_OTIMESL,
    EquationId.ORR_ANDL,
    EquationId.ORR_ORL,
)
UNIT_EQUATIONS: Tuple[EquationId, ...] = (
    EquationId.TOP_UNIQUE,
    EquationId.BOT_UNIQUE,
)
EXCHANGE_EQUATIONS: Tuple[EquationId, ...] = (
    EquationId.EX_INVOLUTION,
    EquationId.EX_YANG_BAXTER,
    EquationId.EX_ANDL,
    EquationId.EX_ANDR,
    EquationId.EX_ORL,
    EquationId.EX_ORR,
    EquationId.EX_COMMUTE,
    EquationId.EX_PASS,
    EquationId.EX_IL,
    EquationId.EX_OTIMESL,
    EquationId.EX_OTIMESR_LEFT,
    EquationId.EX_OTIMESR_RIGHT,
)
IMPLICATION_EQUATIONS: Tuple[EquationId, ...] = (
    EquationId.ETA_LIMP,
    EquationId.OTIMESR_LIMPL,
    EquationId.PASS_LIMPR,
    EquationId.IL_LIMPR,
    EquationId.OTIMESL_LIMPR,
    EquationId.LIMPL_LIMPR,
    EquationId.ANDL_LIMPR,
    EquationId.ORL_LIMPR,
    EquationId.ORR_LIMPL,
    EquationId.LIMPL_ANDR,
)

# clause ids of the tag-list validity predicate
VALID_R = "R"
VALID_C1C2 = "C1C2"
VALID_T = "T"
VALID_CTX = "CTX"
VALID_BULLET = "BULLET"


@dataclass(frozen=True)
class LogicProfile:
    units: bool = False
    exchange: bool = False
    implication: bool = False

    def __post_init__(self):
        if self.exchange and self.implication:
            raise ProfileError("exchange and implication cannot be combined")

    @property
    def name(self) -> str:
        parts = [flag for flag, on in (
            ("units", self.units),
            ("exchange", self.exchange),
            ("implication", self.implication),
        ) if on]
        return "+".join(parts) or "base"

    @classmethod
    def parse(cls, name: str) -> "LogicProfile":
        if name not in PROFILE_NAMES:
            raise ProfileError(
                f"unknown profile {name!r}; expected one of {', '.join(PROFILE_NAMES)}"
            )
        flags = set(name.split("+")) - {"base"}
        return cls(
            units="units" in flags,
            exchange="exchange" in flags,
            implication="implication" in flags,
        )

    def __str__(self) -> str:
        return self.name


BASE = LogicProfile()


@dataclass(frozen=True)
class ProfileTables:
    connectives: FrozenSet[Connective]
    negative: FrozenSet[Connective]
    reducible_stoup: FrozenSet[Connective]
    rules: FrozenSet[Rule]
    focused_rules: FrozenSet[FocusedRule]
    equations: Tuple[EquationId, ...]
    tag_kinds: FrozenSet[TagKind]
    validity: Tuple[str, ...]


@lru_cache(maxsize=None)
def tables_for(profile: LogicProfile) -> ProfileTables:
    connectives = {Connective.ATOM, Connective.UNIT, Connective.TENSOR, Connective.WITH, Connective.PLUS}
    negative = {Connective.WITH}
    reducible = {Connective.UNIT, Connective.TENSOR, Connective.PLUS}
    rules = set(BASE_RULES)
    focused_rules = set(BASE_FOCUSED_RULES)
    equations = list(BASE_EQUATIONS)
    tags = {TagKind.P, TagKind.C1, TagKind.C2, TagKind.R}
    validity = [VALID_R, VALID_C1C2]

    if profile.units:
        connectives |= {Connective.TOP, Connective.ZERO}
        negative.add(Connective.TOP)
        reducible.add(Connective.ZERO)
        rules |= UNIT_RULES
        focused_rules |= UNIT_FOCUSED_RULES
        equations.extend(UNIT_EQUATIONS)
        tags.add(TagKind.T)
        validity.append(VALID_T)
    if profile.exchange:
        rules |= EXCHANGE_RULES
        focused_rules |= EXCHANGE_FOCUSED_RULES
        equations.extend(EXCHANGE_EQUATIONS)
    if profile.implication:
        connectives.add(Connective.LIMP)
        negative.add(Connective.LIMP)
        rules |= IMPLICATION_RULES
        focused_rules |= IMPLICATION_FOCUSED_RULES
        equations.extend(IMPLICATION_EQUATIONS)
        tags |= {TagKind.CTX, TagKind.BULLET}
        validity.extend([VALID_CTX, VALID_BULLET])

    return ProfileTables(
        connectives=frozenset(connectives),
        negative=frozenset(negative),
        reducible_stoup=frozenset(reducible),
        rules=frozenset(rules),
        focused_rules=frozenset(focused_rules),
        equations=tuple(equations),
        tag_kinds=frozenset(tags),
        validity=tuple(validity),
    )
