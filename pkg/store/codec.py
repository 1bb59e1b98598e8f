"""JSON form of derivations and of self-describing derivation files.

A file is `{"profile", "sequent", "derivation"}` and a node is
`{"rule", "args", "premises"}`, with `args` holding `split` or `pos` where the
rule has one. Focused derivations also carry a `phase` field on every node,
which is how a reader tells the two calculi apart, and an optional `tags` list.
"""
import logging
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from logic.calculus import Derivation
from logic.errors import SkewLogicError
from logic.focused import TAG_BULLET, Focused, Tag, ctx_tag
from logic.formula import Sequent, parse_formula, parse_sequent, print_formula, print_sequent
from logic.labels import FocusedRule, Phase, Rule, TagKind
from logic.profiles import LogicProfile

logger = logging.getLogger(__name__)

AnyDerivation = Union[Derivation, Focused]


class CodecError(SkewLogicError):
    pass


class RuleArgs(BaseModel):
    model_config = ConfigDict(extra="forbid")

    split: Optional[int] = Field(None, ge=0, description="Context split of otimesR and limpL")
    pos: Optional[int] = Field(None, ge=0, description="Exchange position, or placement index in phase C")


class DerivationModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    rule: Rule
    args: RuleArgs = Field(default_factory=RuleArgs)
    premises: List["DerivationModel"] = Field(default_factory=list)


class FocusedModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    rule: FocusedRule
    phase: Phase
    tags: Optional[List[Union[str, List[str]]]] = Field(
        None, description="Annotation; a list of formulas stands for a context tag"
    )
    args: RuleArgs = Field(default_factory=RuleArgs)
    premises: List["FocusedModel"] = Field(default_factory=list)


class DerivationFile(BaseModel):
    profile: str = Field("base", description="Profile name, e.g. units+implication")
    sequent: str = Field(..., description="Sequent in the text syntax")
    derivation: Dict[str, Any] = Field(..., description="Root node of either calculus")


DerivationModel.model_rebuild()
FocusedModel.model_rebuild()


def derivation_to_model(d: Derivation) -> DerivationModel:
    return DerivationModel(
        rule=d.rule,
        args=RuleArgs(split=d.split, pos=d.pos),
        premises=[derivation_to_model(p) for p in d.premises],
    )


def derivation_from_model(m: DerivationModel) -> Derivation:
    return Derivation(m.rule, tuple(derivation_from_model(p) for p in m.premises), m.args.split, m.args.pos)


def _tag_to_json(t: Tag) -> Union[str, List[str]]:
    if t.kind is TagKind.CTX:
        return [print_formula(a) for a in t.context]
    return t.kind.value


def _tag_from_json(raw: Union[str, List[str]], profile: LogicProfile) -> Tag:
    if isinstance(raw, list):
        return ctx_tag([parse_formula(a, profile) for a in raw])
    try:
        kind = TagKind(raw)
    except ValueError:
        raise CodecError(f"unknown tag {raw!r}")
    if kind is TagKind.CTX:
        raise CodecError("context tags are written as a list of formulas")
    return TAG_BULLET if kind is TagKind.BULLET else Tag(kind)


def focused_to_model(d: Focused) -> FocusedModel:
    return FocusedModel(
        rule=d.rule,
        phase=d.phase,
        tags=None if d.tags is None else [_tag_to_json(t) for t in d.tags],
        args=RuleArgs(split=d.split, pos=d.pos),
        premises=[focused_to_model(p) for p in d.premises],
    )


def focused_from_model(m: FocusedModel, profile: LogicProfile) -> Focused:
    tags = None if m.tags is None else tuple(_tag_from_json(t, profile) for t in m.tags)
    d = Focused(m.rule, tuple(focused_from_model(p, profile) for p in m.premises), tags, m.args.split, m.args.pos)
    if d.phase is not m.phase:
        raise CodecError(f"{m.rule.value} concludes phase {d.phase.value}, file says {m.phase.value}")
    return d


def to_model(d: AnyDerivation) -> Union[DerivationModel, FocusedModel]:
    return focused_to_model(d) if isinstance(d, Focused) else derivation_to_model(d)


def from_json_object(raw: Dict[str, Any], profile: LogicProfile) -> AnyDerivation:
    try:
        if "phase" in raw:
            return focused_from_model(FocusedModel.model_validate(raw), profile)
        return derivation_from_model(DerivationModel.model_validate(raw))
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(x) for x in first["loc"])
        raise CodecError(f"malformed derivation at {where or 'root'}: {first['msg']}")


def dump_derivation(d: AnyDerivation, pretty: bool = True) -> str:
    return to_model(d).model_dump_json(indent=2 if pretty else None, exclude_none=True)


def dump_file(s: Sequent, profile: LogicProfile, d: AnyDerivation, pretty: bool = True) -> str:
    doc = DerivationFile(
        profile=profile.name,
        sequent=print_sequent(s),
        derivation=to_model(d).model_dump(mode="json", exclude_none=True),
    )
    return doc.model_dump_json(indent=2 if pretty else None)


def load_file(text: str, profile: Optional[LogicProfile] = None):
    """Returns (profile, sequent, derivation); an explicit `profile` overrides the recorded one."""
    try:
        doc = DerivationFile.model_validate_json(text)
    except ValidationError as e:
        raise CodecError(f"malformed derivation file: {e.errors()[0]['msg']}")
    profile = profile or LogicProfile.parse(doc.profile)
    s = parse_sequent(doc.sequent, profile)
    d = from_json_object(doc.derivation, profile)
    logger.debug("loaded %s derivation for %s", "focused" if isinstance(d, Focused) else "plain", s)
    return profile, s, d
