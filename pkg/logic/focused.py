"""Focused sequent calculus with tag annotations.

A focused derivation is a tree of `Focused` nodes; the phase of a node is
determined by its rule. The tag annotation of a node is the annotation of its
conclusion: `None` for untagged sequents, a tag list in phase RI and a
one-element tuple in phases LI and F. Bullet marks on context formulas are
never stored; the checker recomputes them from the tags.
"""
import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from logic import calculus as c
from logic.calculus import Derivation
from logic.errors import FocusedDerivationError, FocusError, ProfileError
from logic.formula import (
    Atom,
    Entry,
    Formula,
    Limp,
    Plus,
    Sequent,
    Stoup,
    Tensor,
    Top,
    Unit,
    With,
    Zero,
    context_formulas,
    decompose,
    erase,
    is_irreducible_stoup,
    is_negative,
    plain_entries,
    print_formula,
    validate_sequent,
)
from logic.labels import FOCUSED_PHASE, FocusedRule, Phase, Rule, TagKind
from logic.profiles import BASE, VALID_BULLET, VALID_C1C2, VALID_CTX, VALID_R, VALID_T, LogicProfile, tables_for

logger = logging.getLogger(__name__)

FR = FocusedRule


@dataclass(frozen=True)
class Tag:
    kind: TagKind
    context: Tuple[Formula, ...] = ()

    def __str__(self) -> str:
        if self.kind is TagKind.CTX:
            return "[" + ", ".join(print_formula(a) for a in self.context) + "]"
        if self.kind is TagKind.BULLET:
            return "•"
        return self.kind.value


TAG_P = Tag(TagKind.P)
TAG_C1 = Tag(TagKind.C1)
TAG_C2 = Tag(TagKind.C2)
TAG_R = Tag(TagKind.R)
TAG_T = Tag(TagKind.T)
TAG_BULLET = Tag(TagKind.BULLET)

Tags = Optional[Tuple[Tag, ...]]


def ctx_tag(gamma: Sequence[Formula]) -> Tag:
    return Tag(TagKind.CTX, tuple(gamma))


ARITY = {
    FR.AND_R: 2, FR.LIMP_R: 1, FR.TOP_R: 0, FR.LI2RI: 1,
    FR.IL: 1, FR.OTIMES_L: 1, FR.OR_L: 2, FR.BOT_L: 0, FR.F2LI: 1,
    FR.PASS: 1, FR.AX: 0, FR.IR: 0, FR.AND_L1: 1, FR.AND_L2: 1,
    FR.OTIMES_R: 2, FR.OR_R1: 1, FR.OR_R2: 1, FR.LIMP_L: 2,
    FR.RI2C: 1, FR.EX: 1,
}


@dataclass(frozen=True)
class Focused:
    rule: FocusedRule
    premises: Tuple["Focused", ...] = ()
    tags: Tags = None
    split: Optional[int] = None
    pos: Optional[int] = None

    @property
    def phase(self) -> Phase:
        return FOCUSED_PHASE[self.rule]

    def size(self) -> int:
        return 1 + sum(p.size() for p in self.premises)

    def __str__(self) -> str:
        label = self.rule.value
        if self.tags is not None:
            label += "^[" + ",".join(str(t) for t in self.tags) + "]"
        if self.split is not None:
            label += f"{{{self.split}}}"
        if self.pos is not None:
            label += f"{{{self.pos}}}"
        if not self.premises:
            return label
        return f"{label}({', '.join(str(p) for p in self.premises)})"


def retag(d: Focused, tags: Tags) -> Focused:
    return Focused(d.rule, d.premises, tags, d.split, d.pos)


def valid_tags(tags: Sequence[Tag], profile: LogicProfile = BASE) -> bool:
    if not tags:
        return False
    kinds = {t.kind for t in tags}
    for clause in tables_for(profile).validity:
        if clause == VALID_R and TagKind.R in kinds:
            return True
        if clause == VALID_C1C2 and TagKind.C1 in kinds and TagKind.C2 in kinds:
            return True
        if clause == VALID_T and TagKind.T in kinds:
            return True
        if clause == VALID_CTX and len({t.context for t in tags if t.kind is TagKind.CTX}) >= 2:
            return True
        if clause == VALID_BULLET and TagKind.BULLET in kinds:
            return True
    return False


# ---------------------------------------------------------------------------
# checking

@dataclass(frozen=True)
class Goal:
    """Conclusion of a focused premise: phase, sequent with marks, unplaced prefix length."""

    phase: Phase
    stoup: Stoup
    context: Tuple[Entry, ...]
    succedent: Formula
    unplaced: int = 0


def first_bullet(ctx: Sequence[Entry]) -> int:
    for index, entry in enumerate(ctx):
        if entry.bullet:
            return index
    return len(ctx)


def _fail(d: Focused, reason: str) -> FocusedDerivationError:
    return FocusedDerivationError(f"{d.rule.value}: {reason}")


def _single(d: Focused, allowed: Tag) -> None:
    if d.tags is not None and d.tags != (allowed,):
        raise _fail(d, f"annotation must be {allowed} or absent, found {_show(d.tags)}")


def _show(tags: Tags) -> str:
    if tags is None:
        return "no annotation"
    return "[" + ", ".join(str(t) for t in tags) + "]"


def _tagged_premise(d: Focused, premise: Focused, profile: LogicProfile) -> None:
    if premise.tags is None or not valid_tags(premise.tags, profile):
        raise _fail(d, f"premise needs a valid tag list, found {_show(premise.tags)}")


def _untagged(d: Focused, *premises: Focused) -> None:
    for p in premises:
        if p.tags is not None:
            raise _fail(d, f"premise must be untagged, found {_show(p.tags)}")


def _split(d: Focused, length: int) -> int:
    if d.split is None or not 0 <= d.split <= length:
        raise _fail(d, f"split {d.split} out of range 0..{length}")
    return d.split


def focused_premises(d: Focused, stoup: Stoup, ctx: Tuple[Entry, ...], succ: Formula,
                     unplaced: int, profile: LogicProfile = BASE) -> List[Goal]:
    """Premise goals of the last rule of `d`; raises FocusedDerivationError on any side condition."""
    rule, t, ps = d.rule, d.tags, d.premises
    tagged = t is not None
    if rule not in tables_for(profile).focused_rules:
        raise _fail(d, f"not available in the {profile.name} profile")
    if len(ps) != ARITY[rule]:
        raise _fail(d, f"expects {ARITY[rule]} premises, got {len(ps)}")
    if d.phase is not Phase.C and unplaced:
        raise _fail(d, "context formulas still waiting to be placed")

    # right invertible
    if rule is FR.AND_R:
        if not isinstance(succ, With):
            raise _fail(d, "succedent is not a conjunction")
        l1, l2 = ps[0].tags, ps[1].tags
        if (l1 is None) != (l2 is None):
            raise _fail(d, "premises must be both tagged or both untagged")
        expected = None if l1 is None else l1 + l2
        if t != expected:
            raise _fail(d, f"annotation {_show(t)} is not the concatenation {_show(expected)}")
        return [Goal(Phase.RI, stoup, ctx, succ.left), Goal(Phase.RI, stoup, ctx, succ.right)]
    if rule is FR.LIMP_R:
        if not isinstance(succ, Limp):
            raise _fail(d, "succedent is not an implication")
        if ps[0].tags != t:
            raise _fail(d, "premise annotation differs from conclusion")
        return [Goal(Phase.RI, stoup, ctx + (Entry(succ.antecedent, bullet=tagged),), succ.consequent)]
    if rule is FR.TOP_R:
        if not isinstance(succ, Top):
            raise _fail(d, "succedent is not Top")
        _single(d, TAG_T)
        return []
    if rule is FR.LI2RI:
        if is_negative(succ, profile):
            raise _fail(d, "succedent must be non-negative")
        if t is not None and len(t) != 1:
            raise _fail(d, "a single tag is needed to leave the right invertible phase")
        if ps[0].tags != t:
            raise _fail(d, "premise annotation differs from conclusion")
        return [Goal(Phase.LI, stoup, ctx, succ)]

    # left invertible
    if rule in (FR.IL, FR.OTIMES_L, FR.OR_L, FR.BOT_L) and tagged:
        raise _fail(d, "left invertible rules apply only to untagged sequents")
    if rule is FR.IL:
        if not isinstance(stoup, Unit):
            raise _fail(d, "stoup is not I")
        return [Goal(Phase.LI, None, ctx, succ)]
    if rule is FR.OTIMES_L:
        if not isinstance(stoup, Tensor):
            raise _fail(d, "stoup is not a tensor")
        extended = (Entry(stoup.right),) + ctx
        if profile.exchange:
            return [Goal(Phase.C, stoup.left, extended, succ, unplaced=1)]
        return [Goal(Phase.LI, stoup.left, extended, succ)]
    if rule is FR.OR_L:
        if not isinstance(stoup, Plus):
            raise _fail(d, "stoup is not a disjunction")
        return [Goal(Phase.LI, stoup.left, ctx, succ), Goal(Phase.LI, stoup.right, ctx, succ)]
    if rule is FR.BOT_L:
        if not isinstance(stoup, Zero):
            raise _fail(d, "stoup is not Bot")
        return []
    if rule is FR.F2LI:
        if not is_irreducible_stoup(stoup, profile):
            raise _fail(d, "stoup must be irreducible before focusing")
        if ps[0].tags != t:
            raise _fail(d, "premise annotation differs from conclusion")
        return [Goal(Phase.F, stoup, ctx, succ)]

    # focusing
    if rule is FR.PASS:
        if stoup is not None or not ctx:
            raise _fail(d, "needs an empty stoup and a nonempty context")
        first = ctx[0]
        if first.bullet and t != (TAG_BULLET,):
            raise _fail(d, "moving a marked formula requires the bullet tag")
        if not first.bullet:
            _single(d, TAG_P)
        _untagged(d, ps[0])
        return [Goal(Phase.LI, first.formula, erase(ctx[1:]), succ)]
    if rule is FR.AX:
        if not isinstance(stoup, Atom) or stoup != succ or ctx:
            raise _fail(d, "axiom needs the same atom in stoup and succedent and an empty context")
        _single(d, TAG_R)
        return []
    if rule is FR.IR:
        if stoup is not None or ctx or not isinstance(succ, Unit):
            raise _fail(d, "IR concludes - | . |- I only")
        _single(d, TAG_R)
        return []
    if rule in (FR.AND_L1, FR.AND_L2):
        if not isinstance(stoup, With):
            raise _fail(d, "stoup is not a conjunction")
        first_component = rule is FR.AND_L1
        _single(d, TAG_C1 if first_component else TAG_C2)
        _untagged(d, ps[0])
        chosen = stoup.left if first_component else stoup.right
        return [Goal(Phase.LI, chosen, erase(ctx), succ)]
    if rule is FR.OTIMES_R:
        if not isinstance(succ, Tensor):
            raise _fail(d, "succedent is not a tensor")
        _single(d, TAG_R)
        k = _split(d, len(ctx))
        _tagged_premise(d, ps[0], profile)
        _untagged(d, ps[1])
        return [
            Goal(Phase.RI, stoup, erase(ctx[:k]), succ.left),
            Goal(Phase.RI, None, erase(ctx[k:]), succ.right),
        ]
    if rule in (FR.OR_R1, FR.OR_R2):
        if not isinstance(succ, Plus):
            raise _fail(d, "succedent is not a disjunction")
        _single(d, TAG_R)
        _tagged_premise(d, ps[0], profile)
        chosen = succ.left if rule is FR.OR_R1 else succ.right
        return [Goal(Phase.RI, stoup, erase(ctx), chosen)]
    if rule is FR.LIMP_L:
        if not isinstance(stoup, Limp):
            raise _fail(d, "stoup is not an implication")
        k = _split(d, len(ctx))
        if tagged:
            if k <= first_bullet(ctx):
                expected = (ctx_tag(context_formulas(ctx[:k])),)
            else:
                expected = (TAG_BULLET,)
            if t != expected:
                raise _fail(d, f"annotation must be {_show(expected)}, found {_show(t)}")
        elif first_bullet(ctx) < len(ctx):
            raise _fail(d, "marked formulas in an untagged sequent")
        _untagged(d, *ps)
        return [
            Goal(Phase.RI, None, erase(ctx[:k]), stoup.antecedent),
            Goal(Phase.LI, stoup.consequent, erase(ctx[k:]), succ),
        ]

    # context
    if rule is FR.RI2C:
        if unplaced:
            raise _fail(d, f"{unplaced} context formulas are not placed yet")
        if tagged:
            raise _fail(d, "context phase is untagged")
        return [Goal(Phase.RI, stoup, ctx, succ)]
    if rule is FR.EX:
        if tagged:
            raise _fail(d, "context phase is untagged")
        if unplaced < 1:
            raise _fail(d, "no formula left to place")
        placed = ctx[unplaced:]
        j = d.pos
        if j is None or not 0 <= j <= len(placed):
            raise _fail(d, f"placement {j} out of range 0..{len(placed)}")
        moved = ctx[unplaced - 1]
        rearranged = ctx[:unplaced - 1] + placed[:j] + (moved,) + placed[j:]
        return [Goal(Phase.C, stoup, rearranged, succ, unplaced=unplaced - 1)]
    raise _fail(d, "unknown rule")


def check_focused(d: Focused, s: Sequent, profile: LogicProfile = BASE,
                  annotation: Tags = None, unplaced: Optional[int] = None) -> None:
    validate_sequent(s, profile)
    if d.tags != annotation:
        raise FocusedDerivationError(f"root annotation {_show(d.tags)} differs from expected {_show(annotation)}")
    if unplaced is None:
        unplaced = len(s.context) if d.phase is Phase.C else 0
    _check(d, Goal(d.phase, s.stoup, plain_entries(s.context), s.succedent, unplaced), profile)


def _check(d: Focused, goal: Goal, profile: LogicProfile) -> None:
    goals = focused_premises(d, goal.stoup, goal.context, goal.succedent, goal.unplaced, profile)
    for index, (child, sub) in enumerate(zip(d.premises, goals)):
        try:
            if child.phase is not sub.phase:
                raise FocusedDerivationError(
                    f"{child.rule.value}: premise must be in phase {sub.phase.value}, found {child.phase.value}"
                )
            _check(child, sub, profile)
        except FocusedDerivationError as e:
            raise e.under(index) from None


def is_valid_focused(d: Focused, s: Sequent, profile: LogicProfile = BASE, annotation: Tags = None) -> bool:
    try:
        check_focused(d, s, profile, annotation)
    except FocusedDerivationError:
        return False
    return True


# ---------------------------------------------------------------------------
# embedding

EMBEDDED = {
    FR.AND_R: Rule.AND_R, FR.LIMP_R: Rule.LIMP_R, FR.TOP_R: Rule.TOP_R,
    FR.IL: Rule.IL, FR.OTIMES_L: Rule.OTIMES_L, FR.OR_L: Rule.OR_L, FR.BOT_L: Rule.BOT_L,
    FR.PASS: Rule.PASS, FR.AX: Rule.AX, FR.IR: Rule.IR,
    FR.AND_L1: Rule.AND_L1, FR.AND_L2: Rule.AND_L2,
    FR.OTIMES_R: Rule.OTIMES_R, FR.OR_R1: Rule.OR_R1, FR.OR_R2: Rule.OR_R2, FR.LIMP_L: Rule.LIMP_L,
}
SWITCHES = (FR.LI2RI, FR.F2LI, FR.RI2C)


def emb(d: Focused, s: Optional[Sequent] = None) -> Derivation:
    """Erase phases and tags. The sequent is needed only for context-phase roots."""
    if d.phase is Phase.C:
        if s is None:
            raise ValueError("embedding a context-phase derivation needs its sequent")
        return _emb(d, len(s.context))
    return _emb(d, 0)


def _emb(d: Focused, unplaced: int) -> Derivation:
    if d.rule in SWITCHES:
        return _emb(d.premises[0], 0)
    if d.rule is FR.EX:
        inner = _emb(d.premises[0], unplaced - 1)
        for q in reversed(range(unplaced - 1, unplaced - 1 + d.pos)):
            inner = c.ex(q, inner)
        return inner
    if d.rule is FR.OTIMES_L and d.premises[0].phase is Phase.C:
        return c.otimes_l(_emb(d.premises[0], 1))
    premises = tuple(_emb(p, 0) for p in d.premises)
    return Derivation(EMBEDDED[d.rule], premises, split=d.split)


# ---------------------------------------------------------------------------
# big-step conjunction right and its inverse

def conj_r_star(fs: Sequence[Focused], a: Formula, profile: LogicProfile = BASE,
                tagged: bool = False) -> Focused:
    """Right invertible phase over `a` from one derivation per leaf of `decompose(a)`.

    Untagged leaves are LI derivations; tagged leaves are F derivations carrying
    their single tag. Top leaves are represented by a topR node.
    """
    leaves = iter(fs)
    result = _conj_r_star(leaves, a, profile, tagged)
    if next(leaves, None) is not None:
        raise FocusError(f"too many derivations for the leaves of {print_formula(a)}")
    return result


def _conj_r_star(leaves: Iterator[Focused], a: Formula, profile: LogicProfile, tagged: bool) -> Focused:
    if isinstance(a, With):
        left = _conj_r_star(leaves, a.left, profile, tagged)
        right = _conj_r_star(leaves, a.right, profile, tagged)
        tags = None if not tagged else left.tags + right.tags
        return Focused(FR.AND_R, (left, right), tags)
    if profile.implication and isinstance(a, Limp):
        body = _conj_r_star(leaves, a.consequent, profile, tagged)
        return Focused(FR.LIMP_R, (body,), body.tags)
    leaf = next(leaves, None)
    if leaf is None:
        raise FocusError(f"too few derivations for the leaves of {print_formula(a)}")
    if profile.units and isinstance(a, Top):
        return Focused(FR.TOP_R, tags=(TAG_T,) if tagged else None)
    if not tagged:
        return Focused(FR.LI2RI, (leaf,))
    return Focused(FR.LI2RI, (Focused(FR.F2LI, (leaf,), leaf.tags),), leaf.tags)


def invert_ri(f: Focused) -> List[Focused]:
    if f.rule is FR.AND_R:
        return invert_ri(f.premises[0]) + invert_ri(f.premises[1])
    if f.rule is FR.LIMP_R:
        return invert_ri(f.premises[0])
    if f.rule is FR.TOP_R:
        return [f]
    if f.rule is FR.LI2RI:
        return [f.premises[0]]
    raise FocusError(f"{f.rule.value} does not end a right invertible phase")


# ---------------------------------------------------------------------------
# admissible rules in phase RI

def _map_leaves(f: Focused, leaf) -> Focused:
    if f.rule in (FR.AND_R, FR.LIMP_R):
        return Focused(f.rule, tuple(_map_leaves(p, leaf) for p in f.premises))
    if f.rule is FR.TOP_R:
        return f
    if f.rule is FR.LI2RI:
        return Focused(FR.LI2RI, (leaf(f.premises[0]),))
    raise FocusError(f"{f.rule.value} does not end a right invertible phase")


def il_ri(f: Focused) -> Focused:
    return _map_leaves(f, lambda g: Focused(FR.IL, (g,)))


def otimes_l_ri(f: Focused) -> Focused:
    return _map_leaves(f, lambda g: Focused(FR.OTIMES_L, (g,)))


def pass_ri(f: Focused) -> Focused:
    return _map_leaves(f, lambda g: Focused(FR.F2LI, (Focused(FR.PASS, (g,)),)))


def and_l_ri(i: int, f: Focused) -> Focused:
    rule = FR.AND_L1 if i == 1 else FR.AND_L2
    return _map_leaves(f, lambda g: Focused(FR.F2LI, (Focused(rule, (g,)),)))


def limp_l_ri(split: int, f: Focused, g: Focused) -> Focused:
    return _map_leaves(g, lambda h: Focused(FR.F2LI, (Focused(FR.LIMP_L, (f, h), split=split),)))


def or_l_ri(f: Focused, g: Focused) -> Focused:
    if f.rule is not g.rule:
        raise FocusError("premises of orL must share their right invertible shape")
    if f.rule in (FR.AND_R, FR.LIMP_R):
        return Focused(f.rule, tuple(or_l_ri(p, q) for p, q in zip(f.premises, g.premises)))
    if f.rule is FR.TOP_R:
        return f
    if f.rule is FR.LI2RI:
        return Focused(FR.LI2RI, (Focused(FR.OR_L, (f.premises[0], g.premises[0])),))
    raise FocusError(f"{f.rule.value} does not end a right invertible phase")


def and_r_ri(f: Focused, g: Focused) -> Focused:
    return Focused(FR.AND_R, (f, g))


def limp_r_ri(f: Focused) -> Focused:
    return Focused(FR.LIMP_R, (f,))


def top_r_ri() -> Focused:
    return Focused(FR.TOP_R)


def ir_ri() -> Focused:
    return Focused(FR.LI2RI, (Focused(FR.F2LI, (Focused(FR.IR),)),))


def bot_l_ri(succ: Formula, profile: LogicProfile = BASE) -> Focused:
    leaves = [
        Focused(FR.TOP_R) if isinstance(p, Top) else Focused(FR.BOT_L)
        for _, p in decompose(succ, profile)
    ]
    return conj_r_star(leaves, succ, profile)


def ax_ri(a: Formula, profile: LogicProfile = BASE) -> Focused:
    """Identity on `a`, assembled from the admissible rules."""
    if isinstance(a, Atom):
        return Focused(FR.LI2RI, (Focused(FR.F2LI, (Focused(FR.AX),)),))
    if isinstance(a, Unit):
        return il_ri(ir_ri())
    if isinstance(a, Top):
        return top_r_ri()
    if isinstance(a, Zero):
        return bot_l_ri(a, profile)
    if isinstance(a, Tensor):
        pair = otimes_r_ri(ax_ri(a.left, profile), pass_ri(ax_ri(a.right, profile)), a.left, (), a.left, profile)
        return otimes_l_ri(pair)
    if isinstance(a, With):
        return and_r_ri(and_l_ri(1, ax_ri(a.left, profile)), and_l_ri(2, ax_ri(a.right, profile)))
    if isinstance(a, Plus):
        return or_l_ri(
            or_r_ri(1, ax_ri(a.left, profile), a.left, (), a.left, profile),
            or_r_ri(2, ax_ri(a.right, profile), a.right, (), a.right, profile),
        )
    if isinstance(a, Limp):
        return limp_r_ri(limp_l_ri(1, pass_ri(ax_ri(a.antecedent, profile)), ax_ri(a.consequent, profile)))
    raise TypeError(f"not a formula: {a!r}")


def or_r_ri(i: int, f: Focused, stoup: Stoup, gamma: Tuple[Formula, ...], a: Formula,
            profile: LogicProfile = BASE) -> Focused:
    """From S | Γ ⊢RI a build S | Γ ⊢RI a ∨ B (i = 1) or B ∨ a (i = 2)."""
    kind = FR.OR_R1 if i == 1 else FR.OR_R2
    return Focused(FR.LI2RI, (gen_right_li(kind, invert_ri(f), stoup, gamma, a, None, profile),))


def otimes_r_ri(f: Focused, g: Focused, stoup: Stoup, gamma: Tuple[Formula, ...], a: Formula,
                profile: LogicProfile = BASE) -> Focused:
    """From S | Γ ⊢RI a and - | Δ ⊢RI B build S | Γ, Δ ⊢RI a ⊗ B."""
    return Focused(FR.LI2RI, (gen_right_li(FR.OTIMES_R, invert_ri(f), stoup, gamma, a, g, profile),))


# ---------------------------------------------------------------------------
# generalized right rules

def head_tag(h: Focused, gamma: Tuple[Formula, ...]) -> Tag:
    """Tag of an F-phase derivation whose context starts with `gamma` and continues with marked formulas."""
    if h.rule is FR.PASS:
        return TAG_P if gamma else TAG_BULLET
    if h.rule is FR.AND_L1:
        return TAG_C1
    if h.rule is FR.AND_L2:
        return TAG_C2
    if h.rule is FR.LIMP_L:
        return ctx_tag(gamma[:h.split]) if h.split <= len(gamma) else TAG_BULLET
    return TAG_R


def gen_right_li(kind: FocusedRule, fs: Sequence[Focused], stoup: Stoup, gamma: Tuple[Formula, ...],
                 a: Formula, g: Optional[Focused], profile: LogicProfile = BASE) -> Focused:
    """Apply orR1, orR2 or otimesR to the LI leaves `fs` of the active formula `a`.

    `gamma` is the part of the context shared by all leaves (for otimesR the
    part going to the left premise) and `g` is the RI derivation of the right
    premise of otimesR.
    """
    fs = list(fs)
    if len(fs) != len(decompose(a, profile)):
        raise FocusError(f"expected {len(decompose(a, profile))} derivations for {print_formula(a)}, got {len(fs)}")
    if not is_irreducible_stoup(stoup, profile):
        return _permute_invertible(kind, fs, stoup, gamma, a, g, profile)

    tags = []
    for f in fs:
        if f.rule is FR.TOP_R:
            tags.append(TAG_T)
        elif f.rule is FR.F2LI:
            tags.append(head_tag(f.premises[0], gamma))
        else:
            raise FocusError(f"irreducible stoup but leaf ends with {f.rule.value}")
    if valid_tags(tags, profile):
        tagged = [
            retag(f, (t,)) if f.rule is FR.TOP_R else retag(f.premises[0], (t,))
            for f, t in zip(fs, tags)
        ]
        body = conj_r_star(tagged, a, profile, tagged=True)
        if kind is FR.OTIMES_R:
            node = Focused(FR.OTIMES_R, (body, g), split=len(gamma))
        else:
            node = Focused(kind, (body,))
        return Focused(FR.F2LI, (node,))
    return _permute_focusing(kind, fs, tags, stoup, gamma, a, g, profile)


def _permute_invertible(kind, fs, stoup, gamma, a, g, profile) -> Focused:
    if isinstance(stoup, Zero):
        return Focused(FR.BOT_L)
    expected = {Unit: FR.IL, Tensor: FR.OTIMES_L, Plus: FR.OR_L}[type(stoup)]
    for f in fs:
        if f.rule is not FR.TOP_R and f.rule is not expected:
            raise FocusError(f"leaf ends with {f.rule.value}, expected {expected.value}")

    def branch(i):
        return [f if f.rule is FR.TOP_R else f.premises[i] for f in fs]

    if expected is FR.IL:
        return Focused(FR.IL, (gen_right_li(kind, branch(0), None, gamma, a, g, profile),))
    if expected is FR.OTIMES_L:
        inner = gen_right_li(kind, branch(0), stoup.left, (stoup.right,) + gamma, a, g, profile)
        return Focused(FR.OTIMES_L, (inner,))
    return Focused(FR.OR_L, (
        gen_right_li(kind, branch(0), stoup.left, gamma, a, g, profile),
        gen_right_li(kind, branch(1), stoup.right, gamma, a, g, profile),
    ))


def _permute_focusing(kind, fs, tags, stoup, gamma, a, g, profile) -> Focused:
    heads = [f.premises[0] for f in fs if f.rule is FR.F2LI]
    if len(heads) != len(fs):
        raise FocusError("invalid tag list with Top leaves")
    rules = {h.rule for h in heads}
    if len(rules) != 1:
        raise FocusError(f"invalid tag list {_show(tuple(tags))} with mixed head rules")
    rule = rules.pop()
    logger.debug("tag list %s invalid, permuting %s down", _show(tuple(tags)), rule.value)
    uppers = [h.premises[-1] for h in heads]
    if rule is FR.PASS:
        inner = gen_right_li(kind, uppers, gamma[0], gamma[1:], a, g, profile)
        return Focused(FR.F2LI, (Focused(FR.PASS, (inner,)),))
    if rule in (FR.AND_L1, FR.AND_L2):
        component = stoup.left if rule is FR.AND_L1 else stoup.right
        inner = gen_right_li(kind, uppers, component, gamma, a, g, profile)
        return Focused(FR.F2LI, (Focused(rule, (inner,)),))
    if rule is FR.LIMP_L:
        splits = {h.split for h in heads}
        lefts = {h.premises[0] for h in heads}
        if len(splits) != 1 or len(lefts) != 1:
            raise FocusError("implication-left branches agree on the context but not on the left premise")
        k = splits.pop()
        inner = gen_right_li(kind, uppers, stoup.consequent, gamma[k:], a, g, profile)
        return Focused(FR.F2LI, (Focused(FR.LIMP_L, (lefts.pop(), inner), split=k),))
    raise FocusError(f"cannot permute {rule.value} below {kind.value}")


# ---------------------------------------------------------------------------
# focusing function

def focus(d: Derivation, s: Sequent, profile: LogicProfile = BASE) -> Focused:
    """Map an unfocused derivation to its focused normal form (phase RI, untagged)."""
    if profile.exchange:
        raise ProfileError("focus is not defined under the exchange profile; use canonicalize_exchange")
    return _focus(d, s, profile)


def _focus(d: Derivation, s: Sequent, profile: LogicProfile) -> Focused:
    rule = d.rule
    if rule is Rule.AX:
        return ax_ri(s.stoup, profile)
    if rule is Rule.IR:
        return ir_ri()
    if rule is Rule.TOP_R:
        return top_r_ri()
    if rule is Rule.BOT_L:
        return bot_l_ri(s.succedent, profile)
    seqs = c.premise_sequents(d, s, profile)
    fs = [_focus(p, q, profile) for p, q in zip(d.premises, seqs)]
    if rule is Rule.PASS:
        return pass_ri(fs[0])
    if rule is Rule.IL:
        return il_ri(fs[0])
    if rule is Rule.OTIMES_L:
        return otimes_l_ri(fs[0])
    if rule in (Rule.AND_L1, Rule.AND_L2):
        return and_l_ri(c.and_index(rule), fs[0])
    if rule is Rule.AND_R:
        return and_r_ri(fs[0], fs[1])
    if rule is Rule.OR_L:
        return or_l_ri(fs[0], fs[1])
    if rule in (Rule.OR_R1, Rule.OR_R2):
        return or_r_ri(c.and_index(rule), fs[0], s.stoup, s.context, seqs[0].succedent, profile)
    if rule is Rule.OTIMES_R:
        return otimes_r_ri(fs[0], fs[1], s.stoup, s.context[:d.split], seqs[0].succedent, profile)
    if rule is Rule.LIMP_L:
        return limp_l_ri(d.split, fs[0], fs[1])
    if rule is Rule.LIMP_R:
        return limp_r_ri(fs[0])
    raise FocusError(f"no focused counterpart for {rule.value}")
