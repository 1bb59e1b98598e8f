"""Unfocused sequent calculus: derivation trees, the checker, cut and admissible rules.

Derivations store only rule labels and the parameters the checker cannot
recover (context splits, exchange positions); premise sequents are always
recomputed from the conclusion.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from logic.errors import CutError, DerivationError
from logic.formula import (
    Atom,
    Formula,
    Limp,
    Plus,
    Sequent,
    Tensor,
    Top,
    Unit,
    With,
    Zero,
    validate_sequent,
)
from logic.labels import Rule
from logic.profiles import BASE, LogicProfile, tables_for

logger = logging.getLogger(__name__)

LEFT_RULES = frozenset({
    Rule.AX, Rule.PASS, Rule.IL, Rule.OTIMES_L, Rule.AND_L1, Rule.AND_L2,
    Rule.OR_L, Rule.BOT_L, Rule.EX, Rule.LIMP_L,
})
ARITY = {
    Rule.AX: 0, Rule.PASS: 1, Rule.IL: 1, Rule.IR: 0, Rule.OTIMES_L: 1, Rule.OTIMES_R: 2,
    Rule.AND_L1: 1, Rule.AND_L2: 1, Rule.AND_R: 2, Rule.OR_L: 2, Rule.OR_R1: 1,
    Rule.OR_R2: 1, Rule.TOP_R: 0, Rule.BOT_L: 0, Rule.EX: 1, Rule.LIMP_L: 2, Rule.LIMP_R: 1,
}


@dataclass(frozen=True)
class Derivation:
    rule: Rule
    premises: Tuple["Derivation", ...] = ()
    split: Optional[int] = None
    pos: Optional[int] = None

    def size(self) -> int:
        return 1 + sum(p.size() for p in self.premises)

    def __str__(self) -> str:
        args = []
        if self.split is not None:
            args.append(f"split={self.split}")
        if self.pos is not None:
            args.append(f"pos={self.pos}")
        label = self.rule.value + (f"[{', '.join(args)}]" if args else "")
        if not self.premises:
            return label
        return f"{label}({', '.join(str(p) for p in self.premises)})"


# constructors

def ax() -> Derivation:
    return Derivation(Rule.AX)


def pass_(f: Derivation) -> Derivation:
    return Derivation(Rule.PASS, (f,))


def il(f: Derivation) -> Derivation:
    return Derivation(Rule.IL, (f,))


def ir() -> Derivation:
    return Derivation(Rule.IR)


def otimes_l(f: Derivation) -> Derivation:
    return Derivation(Rule.OTIMES_L, (f,))


def otimes_r(split: int, f: Derivation, g: Derivation) -> Derivation:
    return Derivation(Rule.OTIMES_R, (f, g), split=split)


def and_l(i: int, f: Derivation) -> Derivation:
    return Derivation(Rule.AND_L1 if i == 1 else Rule.AND_L2, (f,))


def and_r(f: Derivation, g: Derivation) -> Derivation:
    return Derivation(Rule.AND_R, (f, g))


def or_l(f: Derivation, g: Derivation) -> Derivation:
    return Derivation(Rule.OR_L, (f, g))


def or_r(i: int, f: Derivation) -> Derivation:
    return Derivation(Rule.OR_R1 if i == 1 else Rule.OR_R2, (f,))


def top_r() -> Derivation:
    return Derivation(Rule.TOP_R)


def bot_l() -> Derivation:
    return Derivation(Rule.BOT_L)


def ex(pos: int, f: Derivation) -> Derivation:
    return Derivation(Rule.EX, (f,), pos=pos)


def limp_l(split: int, f: Derivation, g: Derivation) -> Derivation:
    return Derivation(Rule.LIMP_L, (f, g), split=split)


def limp_r(f: Derivation) -> Derivation:
    return Derivation(Rule.LIMP_R, (f,))


def and_index(rule: Rule) -> int:
    return 1 if rule in (Rule.AND_L1, Rule.OR_R1) else 2


# ---------------------------------------------------------------------------
# checking

def premise_sequents(d: Derivation, s: Sequent, profile: LogicProfile = BASE) -> Tuple[Sequent, ...]:
    """Premise sequents of the last rule of `d` concluding `s`; raises DerivationError on mismatch."""
    rule = d.rule
    if rule not in tables_for(profile).rules:
        raise DerivationError(f"rule {rule.value} is not available in the {profile.name} profile")
    if len(d.premises) != ARITY[rule]:
        raise DerivationError(f"{rule.value} expects {ARITY[rule]} premises, got {len(d.premises)}")
    stoup, ctx, succ = s.stoup, s.context, s.succedent

    def fail(reason: str) -> DerivationError:
        return DerivationError(f"{rule.value}: {reason} in {s}")

    if rule is Rule.AX:
        if stoup is None or stoup != succ or ctx:
            raise fail("axiom needs stoup equal to succedent and empty context")
        return ()
    if rule is Rule.PASS:
        if stoup is not None or not ctx:
            raise fail("pass needs an empty stoup and a nonempty context")
        return (Sequent(ctx[0], ctx[1:], succ),)
    if rule is Rule.IL:
        if not isinstance(stoup, Unit):
            raise fail("stoup is not I")
        return (Sequent(None, ctx, succ),)
    if rule is Rule.IR:
        if stoup is not None or ctx or not isinstance(succ, Unit):
            raise fail("IR concludes - | . |- I only")
        return ()
    if rule is Rule.OTIMES_L:
        if not isinstance(stoup, Tensor):
            raise fail("stoup is not a tensor")
        return (Sequent(stoup.left, (stoup.right,) + ctx, succ),)
    if rule is Rule.OTIMES_R:
        if not isinstance(succ, Tensor):
            raise fail("succedent is not a tensor")
        k = _split(d, len(ctx), fail)
        return (Sequent(stoup, ctx[:k], succ.left), Sequent(None, ctx[k:], succ.right))
    if rule in (Rule.AND_L1, Rule.AND_L2):
        if not isinstance(stoup, With):
            raise fail("stoup is not a conjunction")
        chosen = stoup.left if rule is Rule.AND_L1 else stoup.right
        return (Sequent(chosen, ctx, succ),)
    if rule is Rule.AND_R:
        if not isinstance(succ, With):
            raise fail("succedent is not a conjunction")
        return (Sequent(stoup, ctx, succ.left), Sequent(stoup, ctx, succ.right))
    if rule is Rule.OR_L:
        if not isinstance(stoup, Plus):
            raise fail("stoup is not a disjunction")
        return (Sequent(stoup.left, ctx, succ), Sequent(stoup.right, ctx, succ))
    if rule in (Rule.OR_R1, Rule.OR_R2):
        if not isinstance(succ, Plus):
            raise fail("succedent is not a disjunction")
        chosen = succ.left if rule is Rule.OR_R1 else succ.right
        return (Sequent(stoup, ctx, chosen),)
    if rule is Rule.TOP_R:
        if not isinstance(succ, Top):
            raise fail("succedent is not Top")
        return ()
    if rule is Rule.BOT_L:
        if not isinstance(stoup, Zero):
            raise fail("stoup is not Bot")
        return ()
    if rule is Rule.EX:
        p = d.pos
        if p is None or not 0 <= p < len(ctx) - 1:
            raise fail(f"exchange position {p} out of range")
        swapped = ctx[:p] + (ctx[p + 1], ctx[p]) + ctx[p + 2:]
        return (Sequent(stoup, swapped, succ),)
    if rule is Rule.LIMP_L:
        if not isinstance(stoup, Limp):
            raise fail("stoup is not an implication")
        k = _split(d, len(ctx), fail)
        return (Sequent(None, ctx[:k], stoup.antecedent), Sequent(stoup.consequent, ctx[k:], succ))
    if rule is Rule.LIMP_R:
        if not isinstance(succ, Limp):
            raise fail("succedent is not an implication")
        return (Sequent(stoup, ctx + (succ.antecedent,), succ.consequent),)
    raise fail("unknown rule")


def _split(d: Derivation, length: int, fail) -> int:
    if d.split is None or not 0 <= d.split <= length:
        raise fail(f"split {d.split} out of range 0..{length}")
    return d.split


def check(d: Derivation, s: Sequent, profile: LogicProfile = BASE) -> None:
    validate_sequent(s, profile)
    _check(d, s, profile)


def _check(d: Derivation, s: Sequent, profile: LogicProfile) -> None:
    premises = premise_sequents(d, s, profile)
    for index, (child, seq) in enumerate(zip(d.premises, premises)):
        try:
            _check(child, seq, profile)
        except DerivationError as e:
            raise e.under(index) from None


def is_valid(d: Derivation, s: Sequent, profile: LogicProfile = BASE) -> bool:
    try:
        check(d, s, profile)
    except DerivationError:
        return False
    return True


# ---------------------------------------------------------------------------
# cut admissibility

def scut_sequent(fs: Sequent, gs: Sequent) -> Sequent:
    return Sequent(fs.stoup, fs.context + gs.context, gs.succedent)


def ccut_sequent(fs: Sequent, gs: Sequent, pos: int) -> Sequent:
    return Sequent(gs.stoup, gs.context[:pos] + fs.context + gs.context[pos + 1:], gs.succedent)


def scut(f: Derivation, fs: Sequent, g: Derivation, gs: Sequent, profile: LogicProfile = BASE) -> Derivation:
    """Cut on the stoup: from S | Γ ⊢ A and A | Δ ⊢ C build S | Γ, Δ ⊢ C."""
    if gs.stoup != fs.succedent:
        raise CutError(f"stoup cut formula mismatch: {fs.succedent} against {gs.stoup}")
    return _scut(f, fs, g, gs, profile)


def _scut(f, fs, g, gs, profile) -> Derivation:
    rule = f.rule
    if rule in LEFT_RULES:
        if rule is Rule.AX:
            return g
        if rule is Rule.BOT_L:
            return bot_l()
        fps = premise_sequents(f, fs, profile)
        if rule is Rule.LIMP_L:
            return limp_l(f.split, f.premises[0], _scut(f.premises[1], fps[1], g, gs, profile))
        if rule is Rule.OR_L:
            return or_l(
                _scut(f.premises[0], fps[0], g, gs, profile),
                _scut(f.premises[1], fps[1], g, gs, profile),
            )
        inner = _scut(f.premises[0], fps[0], g, gs, profile)
        return Derivation(rule, (inner,), f.split, f.pos)

    # f ends with a right rule: case on g
    grule = g.rule
    if grule is Rule.AX:
        return f
    gps = premise_sequents(g, gs, profile)
    n = len(fs.context)
    if grule is Rule.TOP_R:
        return top_r()
    if grule is Rule.OTIMES_R:
        return otimes_r(n + g.split, _scut(f, fs, g.premises[0], gps[0], profile), g.premises[1])
    if grule is Rule.AND_R:
        return and_r(
            _scut(f, fs, g.premises[0], gps[0], profile),
            _scut(f, fs, g.premises[1], gps[1], profile),
        )
    if grule in (Rule.OR_R1, Rule.OR_R2, Rule.LIMP_R):
        return Derivation(grule, (_scut(f, fs, g.premises[0], gps[0], profile),))
    if grule is Rule.EX:
        return ex(n + g.pos, _scut(f, fs, g.premises[0], gps[0], profile))

    # principal cuts
    fps = premise_sequents(f, fs, profile)
    if rule is Rule.IR and grule is Rule.IL:
        return g.premises[0]
    if rule is Rule.OTIMES_R and grule is Rule.OTIMES_L:
        f1, f2 = f.premises
        inner = _ccut(f2, fps[1], g.premises[0], gps[0], 0, profile)
        return _scut(f1, fps[0], inner, ccut_sequent(fps[1], gps[0], 0), profile)
    if rule is Rule.AND_R and grule in (Rule.AND_L1, Rule.AND_L2):
        i = and_index(grule) - 1
        return _scut(f.premises[i], fps[i], g.premises[0], gps[0], profile)
    if rule in (Rule.OR_R1, Rule.OR_R2) and grule is Rule.OR_L:
        i = and_index(rule) - 1
        return _scut(f.premises[0], fps[0], g.premises[i], gps[i], profile)
    if rule is Rule.LIMP_R and grule is Rule.LIMP_L:
        g1, g2 = g.premises
        inner = _ccut(g1, gps[0], f.premises[0], fps[0], n, profile)
        return _scut(inner, ccut_sequent(gps[0], fps[0], n), g2, gps[1], profile)
    raise CutError(f"no cut reduction for {rule.value} against {grule.value}")


def ccut(f: Derivation, fs: Sequent, g: Derivation, gs: Sequent, pos: int,
         profile: LogicProfile = BASE) -> Derivation:
    """Cut into the context: from - | Γ ⊢ A and S | Δ0, A, Δ1 ⊢ C build S | Δ0, Γ, Δ1 ⊢ C."""
    if fs.stoup is not None:
        raise CutError("context cut needs a derivation with empty stoup")
    if not 0 <= pos < len(gs.context):
        raise CutError(f"cut position {pos} out of range for {gs}")
    if gs.context[pos] != fs.succedent:
        raise CutError(f"context cut formula mismatch at {pos}: {fs.succedent} against {gs.context[pos]}")
    return _ccut(f, fs, g, gs, pos, profile)


def _ccut(f, fs, g, gs, pos, profile) -> Derivation:
    rule = g.rule
    if rule is Rule.TOP_R:
        return top_r()
    if rule is Rule.BOT_L:
        return bot_l()
    gps = premise_sequents(g, gs, profile)
    m = len(fs.context)
    if rule is Rule.PASS:
        if pos == 0:
            return _scut(f, fs, g.premises[0], gps[0], profile)
        return pass_(_ccut(f, fs, g.premises[0], gps[0], pos - 1, profile))
    if rule is Rule.OTIMES_L:
        return otimes_l(_ccut(f, fs, g.premises[0], gps[0], pos + 1, profile))
    if rule in (Rule.OTIMES_R, Rule.LIMP_L):
        k = g.split
        g1, g2 = g.premises
        if pos < k:
            return Derivation(rule, (_ccut(f, fs, g1, gps[0], pos, profile), g2), split=k - 1 + m)
        return Derivation(rule, (g1, _ccut(f, fs, g2, gps[1], pos - k, profile)), split=k)
    if rule in (Rule.AND_R, Rule.OR_L):
        return Derivation(rule, tuple(
            _ccut(f, fs, child, seq, pos, profile) for child, seq in zip(g.premises, gps)
        ))
    if rule is Rule.EX:
        p = g.pos
        if pos == p:
            d = _ccut(f, fs, g.premises[0], gps[0], p + 1, profile)
            for q in range(p, p + m):
                d = ex(q, d)
            return d
        if pos == p + 1:
            d = _ccut(f, fs, g.premises[0], gps[0], p, profile)
            for q in reversed(range(p, p + m)):
                d = ex(q, d)
            return d
        shifted = p if p < pos else p + m - 1
        return ex(shifted, _ccut(f, fs, g.premises[0], gps[0], pos, profile))
    if rule in (Rule.IL, Rule.AND_L1, Rule.AND_L2, Rule.OR_R1, Rule.OR_R2, Rule.LIMP_R):
        return Derivation(rule, (_ccut(f, fs, g.premises[0], gps[0], pos, profile),))
    raise CutError(f"no context cut through {rule.value}")


# ---------------------------------------------------------------------------
# admissible rules and structural laws

def and_l_ctx(i: int, d: Derivation, ds: Sequent, pos: int, partner: Formula,
              profile: LogicProfile = BASE) -> Derivation:
    """Replace the context formula at `pos` by a conjunction having it as i-th component."""
    if not 0 <= pos < len(ds.context):
        raise CutError(f"position {pos} out of range for {ds}")
    component = ds.context[pos]
    conjunction = With(component, partner) if i == 1 else With(partner, component)
    projection = pass_(and_l(i, ax()))
    return ccut(projection, Sequent(None, (conjunction,), component), d, ds, pos, profile)


def and_l_ctx_sequent(i: int, ds: Sequent, pos: int, partner: Formula) -> Sequent:
    component = ds.context[pos]
    conjunction = With(component, partner) if i == 1 else With(partner, component)
    return Sequent(ds.stoup, ds.context[:pos] + (conjunction,) + ds.context[pos + 1:], ds.succedent)


def expand_ax(a: Formula) -> Derivation:
    """Identity on `a` with axioms only at atoms."""
    if isinstance(a, Atom):
        return ax()
    if isinstance(a, Unit):
        return il(ir())
    if isinstance(a, Top):
        return top_r()
    if isinstance(a, Zero):
        return bot_l()
    if isinstance(a, Tensor):
        return otimes_l(otimes_r(0, expand_ax(a.left), pass_(expand_ax(a.right))))
    if isinstance(a, With):
        return and_r(and_l(1, expand_ax(a.left)), and_l(2, expand_ax(a.right)))
    if isinstance(a, Plus):
        return or_l(or_r(1, expand_ax(a.left)), or_r(2, expand_ax(a.right)))
    if isinstance(a, Limp):
        return limp_r(limp_l(1, pass_(expand_ax(a.antecedent)), expand_ax(a.consequent)))
    raise TypeError(f"not a formula: {a!r}")


STRUCTURAL_LAWS = ("associator", "left_unitor", "right_unitor", "left_distributor")


def structural_law(name: str, a: Formula, b: Optional[Formula] = None,
                   c: Optional[Formula] = None) -> Tuple[Sequent, Derivation]:
    if name == "associator":
        sequent = Sequent(Tensor(Tensor(a, b), c), (), Tensor(a, Tensor(b, c)))
        return sequent, otimes_l(otimes_l(otimes_r(0, ax(), otimes_r(1, pass_(ax()), pass_(ax())))))
    if name == "left_unitor":
        return Sequent(Tensor(Unit(), a), (), a), otimes_l(il(pass_(ax())))
    if name == "right_unitor":
        return Sequent(a, (), Tensor(a, Unit())), otimes_r(0, ax(), ir())
    if name == "left_distributor":
        sequent = Sequent(Tensor(Plus(a, b), c), (), Plus(Tensor(a, c), Tensor(b, c)))
        branch = otimes_r(0, ax(), pass_(ax()))
        return sequent, otimes_l(or_l(or_r(1, branch), or_r(2, branch)))
    raise ValueError(f"unknown structural law {name!r}; expected one of {', '.join(STRUCTURAL_LAWS)}")
