"""Generating equations of the congruence on derivations.

Each equation is stored with its left-to-right (normalizing) and right-to-left
rewrite. Rewrites take a subderivation and the sequent it concludes and return
the list of possible results (usually zero or one). The unit equations are
only oriented left-to-right; their inverse is infinitely branching and the
oracle works modulo `collapse_units` instead.
"""
import logging
from collections import deque
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional, Set, Tuple

from logic import calculus as c
from logic.calculus import Derivation, premise_sequents
from logic.errors import BudgetExceeded, RewriteError
from logic.focused import focus
from logic.formula import Limp, Plus, Sequent, Tensor, Top, Unit, With, Zero, sequent_connectives
from logic.labels import Direction, EquationId, Rule
from logic.profiles import BASE, LogicProfile, tables_for

logger = logging.getLogger(__name__)

Rewrite = Callable[[Derivation, Sequent], List[Derivation]]
Path = Tuple[int, ...]

AND_L = (Rule.AND_L1, Rule.AND_L2)
OR_R = (Rule.OR_R1, Rule.OR_R2)


@dataclass(frozen=True)
class Equation:
    id: EquationId
    family: str
    lr: Rewrite
    rl: Rewrite
    imported: bool = False
    supplemental: bool = False


@dataclass(frozen=True)
class Redex:
    path: Path
    equation: EquationId
    direction: Direction
    variant: int = 0

    def to_dict(self) -> dict:
        return {
            "path": list(self.path),
            "equation": self.equation.value,
            "direction": self.direction.value,
            "variant": self.variant,
        }


def _none(d: Derivation, s: Sequent) -> List[Derivation]:
    return []


def _rebuild(template: Derivation, premises: Tuple[Derivation, ...]) -> Derivation:
    return Derivation(template.rule, premises, template.split, template.pos)


# ---------------------------------------------------------------------------
# rewrite builders for the regular shapes

def swap(outer: Tuple[Rule, ...], inner: Tuple[Rule, ...],
         rl_guard: Optional[Callable[[Derivation, Sequent], bool]] = None) -> Tuple[Rewrite, Rewrite]:
    """outer(inner f) -> inner(outer f) for two unary rules."""

    def lr(d, s):
        if d.rule in outer and d.premises[0].rule in inner:
            below = d.premises[0]
            return [_rebuild(below, (_rebuild(d, below.premises),))]
        return []

    def rl(d, s):
        if d.rule in inner and d.premises[0].rule in outer:
            if rl_guard is not None and not rl_guard(d, s):
                return []
            above = d.premises[0]
            return [_rebuild(above, (_rebuild(d, above.premises),))]
        return []

    return lr, rl


def distribute(outer: Tuple[Rule, ...], inner: Rule) -> Tuple[Rewrite, Rewrite]:
    """outer(inner(f, g)) -> inner(outer f, outer g) for unary outer and binary inner."""

    def lr(d, s):
        if d.rule in outer and d.premises[0].rule is inner:
            f, g = d.premises[0].premises
            return [_rebuild(d.premises[0], (_rebuild(d, (f,)), _rebuild(d, (g,))))]
        return []

    def rl(d, s):
        if d.rule is not inner:
            return []
        left, right = d.premises
        if left.rule not in outer or _rebuild(left, ()) != _rebuild(right, ()):
            return []
        return [_rebuild(left, (_rebuild(d, (left.premises[0], right.premises[0])),))]

    return lr, rl


def factor(outer: Tuple[Rule, ...], inner: Rule) -> Tuple[Rewrite, Rewrite]:
    lr, rl = distribute(outer, inner)
    return rl, lr


# ---------------------------------------------------------------------------
# eta

def eta(stoup_type: type, expansion: Derivation) -> Tuple[Rewrite, Rewrite]:
    def lr(d, s):
        if d.rule is Rule.AX and isinstance(s.stoup, stoup_type):
            return [expansion]
        return []

    def rl(d, s):
        return [c.ax()] if d == expansion else []

    return lr, rl


# ---------------------------------------------------------------------------
# tensor-right conversions

def _otimes_r_pass_lr(d, s):
    if d.rule is Rule.OTIMES_R and d.premises[0].rule is Rule.PASS:
        f, g = d.premises[0].premises[0], d.premises[1]
        return [c.pass_(c.otimes_r(d.split - 1, f, g))]
    return []


def _otimes_r_pass_rl(d, s):
    if d.rule is Rule.PASS and d.premises[0].rule is Rule.OTIMES_R:
        inner = d.premises[0]
        f, g = inner.premises
        return [c.otimes_r(inner.split + 1, c.pass_(f), g)]
    return []


def _otimes_r_otimes_l_lr(d, s):
    if d.rule is Rule.OTIMES_R and d.premises[0].rule is Rule.OTIMES_L:
        f, g = d.premises[0].premises[0], d.premises[1]
        return [c.otimes_l(c.otimes_r(d.split + 1, f, g))]
    return []


def _otimes_r_otimes_l_rl(d, s):
    if d.rule is Rule.OTIMES_L and d.premises[0].rule is Rule.OTIMES_R:
        inner = d.premises[0]
        if inner.split >= 1:
            f, g = inner.premises
            return [c.otimes_r(inner.split - 1, c.otimes_l(f), g)]
    return []


def _otimes_r_unary(left_rules: Tuple[Rule, ...]) -> Tuple[Rewrite, Rewrite]:
    """otimesR(L f, g) -> L(otimesR(f, g)) for left rules that leave the context alone."""

    def lr(d, s):
        if d.rule is Rule.OTIMES_R and d.premises[0].rule in left_rules:
            above = d.premises[0]
            return [_rebuild(above, (c.otimes_r(d.split, above.premises[0], d.premises[1]),))]
        return []

    def rl(d, s):
        if d.rule in left_rules and d.premises[0].rule is Rule.OTIMES_R:
            inner = d.premises[0]
            f, g = inner.premises
            return [c.otimes_r(inner.split, _rebuild(d, (f,)), g)]
        return []

    return lr, rl


def _otimes_r_or_l_lr(d, s):
    if d.rule is Rule.OTIMES_R and d.premises[0].rule is Rule.OR_L:
        f1, f2 = d.premises[0].premises
        g = d.premises[1]
        return [c.or_l(c.otimes_r(d.split, f1, g), c.otimes_r(d.split, f2, g))]
    return []


def _otimes_r_or_l_rl(d, s):
    if d.rule is Rule.OR_L:
        left, right = d.premises
        if (left.rule is Rule.OTIMES_R and right.rule is Rule.OTIMES_R
                and left.split == right.split and left.premises[1] == right.premises[1]):
            return [c.otimes_r(left.split, c.or_l(left.premises[0], right.premises[0]), left.premises[1])]
    return []


def _or_l_and_r_lr(d, s):
    if d.rule is Rule.OR_L and all(p.rule is Rule.AND_R for p in d.premises):
        (f1, g1), (f2, g2) = (p.premises for p in d.premises)
        return [c.and_r(c.or_l(f1, f2), c.or_l(g1, g2))]
    return []


def _or_l_and_r_rl(d, s):
    if d.rule is Rule.AND_R and all(p.rule is Rule.OR_L for p in d.premises):
        (f1, f2), (g1, g2) = (p.premises for p in d.premises)
        return [c.or_l(c.and_r(f1, g1), c.and_r(f2, g2))]
    return []


# ---------------------------------------------------------------------------
# additive units

def _top_unique_lr(d, s):
    if isinstance(s.succedent, Top) and d.rule is not Rule.TOP_R:
        return [c.top_r()]
    return []


def _bot_unique_lr(d, s):
    if isinstance(s.stoup, Zero) and d.rule not in (Rule.BOT_L, Rule.TOP_R):
        return [c.bot_l()]
    return []


# ---------------------------------------------------------------------------
# exchange

def _ex_involution_lr(d, s):
    if d.rule is Rule.EX and d.premises[0].rule is Rule.EX and d.premises[0].pos == d.pos:
        return [d.premises[0].premises[0]]
    return []


def _ex_involution_rl(d, s):
    return [c.ex(p, c.ex(p, d)) for p in range(len(s.context) - 1)]


def _ex_chain(d: Derivation, length: int) -> Optional[Tuple[List[int], Derivation]]:
    positions = []
    for _ in range(length):
        if d.rule is not Rule.EX:
            return None
        positions.append(d.pos)
        d = d.premises[0]
    return positions, d


def _ex_wrap(positions: List[int], d: Derivation) -> Derivation:
    for p in reversed(positions):
        d = c.ex(p, d)
    return d


def _yang_baxter(before: Callable[[int], List[int]], after: Callable[[int], List[int]]) -> Rewrite:
    def rewrite(d, s):
        chain = _ex_chain(d, 3)
        if chain is None:
            return []
        positions, f = chain
        p = min(positions)
        if positions != before(p):
            return []
        return [_ex_wrap(after(p), f)]

    return rewrite


_ex_yang_baxter_lr = _yang_baxter(lambda p: [p + 1, p, p + 1], lambda p: [p, p + 1, p])
_ex_yang_baxter_rl = _yang_baxter(lambda p: [p, p + 1, p], lambda p: [p + 1, p, p + 1])


def _ex_commute_lr(d, s):
    chain = _ex_chain(d, 2)
    if chain is not None:
        (q, p), f = chain
        if q >= p + 2:
            return [c.ex(p, c.ex(q, f))]
    return []


def _ex_commute_rl(d, s):
    chain = _ex_chain(d, 2)
    if chain is not None:
        (p, q), f = chain
        if q >= p + 2:
            return [c.ex(q, c.ex(p, f))]
    return []


def _ex_pass_lr(d, s):
    if d.rule is Rule.PASS and d.premises[0].rule is Rule.EX:
        inner = d.premises[0]
        return [c.ex(inner.pos + 1, c.pass_(inner.premises[0]))]
    return []


def _ex_pass_rl(d, s):
    if d.rule is Rule.EX and d.pos >= 1 and d.premises[0].rule is Rule.PASS:
        return [c.pass_(c.ex(d.pos - 1, d.premises[0].premises[0]))]
    return []


def _ex_otimes_l_lr(d, s):
    if d.rule is Rule.OTIMES_L and d.premises[0].rule is Rule.EX and d.premises[0].pos >= 1:
        inner = d.premises[0]
        return [c.ex(inner.pos - 1, c.otimes_l(inner.premises[0]))]
    return []


def _ex_otimes_l_rl(d, s):
    if d.rule is Rule.EX and d.premises[0].rule is Rule.OTIMES_L:
        return [c.otimes_l(c.ex(d.pos + 1, d.premises[0].premises[0]))]
    return []


def _ex_otimes_r_left_lr(d, s):
    if d.rule is Rule.OTIMES_R and d.premises[0].rule is Rule.EX and d.premises[0].pos + 1 < d.split:
        inner = d.premises[0]
        return [c.ex(inner.pos, c.otimes_r(d.split, inner.premises[0], d.premises[1]))]
    return []


def _ex_otimes_r_left_rl(d, s):
    if d.rule is Rule.EX and d.premises[0].rule is Rule.OTIMES_R and d.pos + 1 < d.premises[0].split:
        inner = d.premises[0]
        f, g = inner.premises
        return [c.otimes_r(inner.split, c.ex(d.pos, f), g)]
    return []


def _ex_otimes_r_right_lr(d, s):
    if d.rule is Rule.OTIMES_R and d.premises[1].rule is Rule.EX:
        inner = d.premises[1]
        return [c.ex(d.split + inner.pos, c.otimes_r(d.split, d.premises[0], inner.premises[0]))]
    return []


def _ex_otimes_r_right_rl(d, s):
    if d.rule is Rule.EX and d.premises[0].rule is Rule.OTIMES_R and d.pos >= d.premises[0].split:
        inner = d.premises[0]
        f, g = inner.premises
        return [c.otimes_r(inner.split, f, c.ex(d.pos - inner.split, g))]
    return []


# ---------------------------------------------------------------------------
# linear implication

def _otimes_r_limp_l_lr(d, s):
    if d.rule is Rule.OTIMES_R and d.premises[0].rule is Rule.LIMP_L:
        inner = d.premises[0]
        f, g = inner.premises
        return [c.limp_l(inner.split, f, c.otimes_r(d.split - inner.split, g, d.premises[1]))]
    return []


def _otimes_r_limp_l_rl(d, s):
    if d.rule is Rule.LIMP_L and d.premises[1].rule is Rule.OTIMES_R:
        f, inner = d.premises
        g, h = inner.premises
        return [c.otimes_r(d.split + inner.split, c.limp_l(d.split, f, g), h)]
    return []


def _limp_l_limp_r_lr(d, s):
    if d.rule is Rule.LIMP_L and d.premises[1].rule is Rule.LIMP_R:
        f, inner = d.premises
        return [c.limp_r(c.limp_l(d.split, f, inner.premises[0]))]
    return []


def _limp_l_limp_r_rl(d, s):
    if d.rule is Rule.LIMP_R and d.premises[0].rule is Rule.LIMP_L:
        inner = d.premises[0]
        if inner.split <= len(s.context):
            f, g = inner.premises
            return [c.limp_l(inner.split, f, c.limp_r(g))]
    return []


def _or_r_limp_l_lr(d, s):
    if d.rule in OR_R and d.premises[0].rule is Rule.LIMP_L:
        inner = d.premises[0]
        f, g = inner.premises
        return [c.limp_l(inner.split, f, _rebuild(d, (g,)))]
    return []


def _or_r_limp_l_rl(d, s):
    if d.rule is Rule.LIMP_L and d.premises[1].rule in OR_R:
        f, inner = d.premises
        return [_rebuild(inner, (c.limp_l(d.split, f, inner.premises[0]),))]
    return []


def _limp_l_and_r_lr(d, s):
    if d.rule is Rule.LIMP_L and d.premises[1].rule is Rule.AND_R:
        f, inner = d.premises
        g, h = inner.premises
        return [c.and_r(c.limp_l(d.split, f, g), c.limp_l(d.split, f, h))]
    return []


def _limp_l_and_r_rl(d, s):
    if d.rule is Rule.AND_R:
        left, right = d.premises
        if (left.rule is Rule.LIMP_L and right.rule is Rule.LIMP_L
                and left.split == right.split and left.premises[0] == right.premises[0]):
            return [c.limp_l(left.split, left.premises[0], c.and_r(left.premises[1], right.premises[1]))]
    return []


def _nonempty_context(d: Derivation, s: Sequent) -> bool:
    return bool(s.context)


def _build_equations() -> Dict[EquationId, Equation]:
    E = EquationId
    table: List[Equation] = []

    def add(eq_id, family, pair, **flags):
        table.append(Equation(eq_id, family, pair[0], pair[1], **flags))

    add(E.ETA_I, "eta", eta(Unit, c.il(c.ir())))
    add(E.ETA_TENSOR, "eta", eta(Tensor, c.otimes_l(c.otimes_r(0, c.ax(), c.pass_(c.ax())))))
    add(E.ETA_WITH, "eta", eta(With, c.and_r(c.and_l(1, c.ax()), c.and_l(2, c.ax()))))
    add(E.ETA_PLUS, "eta", eta(Plus, c.or_l(c.or_r(1, c.ax()), c.or_r(2, c.ax()))))

    add(E.OTIMESR_PASS, "permutative", (_otimes_r_pass_lr, _otimes_r_pass_rl))
    add(E.OTIMESR_IL, "permutative", _otimes_r_unary((Rule.IL,)))
    add(E.OTIMESR_OTIMESL, "permutative", (_otimes_r_otimes_l_lr, _otimes_r_otimes_l_rl))
    add(E.OTIMESR_ANDL, "permutative", _otimes_r_unary(AND_L))
    add(E.OTIMESR_ORL, "permutative", (_otimes_r_or_l_lr, _otimes_r_or_l_rl))
    add(E.PASS_ANDR, "permutative", distribute((Rule.PASS,), Rule.AND_R))
    add(E.IL_ANDR, "permutative", distribute((Rule.IL,), Rule.AND_R))
    add(E.OTIMESL_ANDR, "permutative", distribute((Rule.OTIMES_L,), Rule.AND_R))
    add(E.ANDL_ANDR, "permutative", distribute(AND_L, Rule.AND_R))
    add(E.ORL_ANDR, "permutative", (_or_l_and_r_lr, _or_l_and_r_rl))
    add(E.ORR_PASS, "permutative", swap(OR_R, (Rule.PASS,)))
    add(E.ORR_IL, "permutative", swap(OR_R, (Rule.IL,)))
    add(E.ORR_OTIMESL, "permutative", swap(OR_R, (Rule.OTIMES_L,)))
    add(E.ORR_ANDL, "permutative", swap(OR_R, AND_L))
    add(E.ORR_ORL, "permutative", distribute(OR_R, Rule.OR_L))

    add(E.TOP_UNIQUE, "units", (_top_unique_lr, _none))
    add(E.BOT_UNIQUE, "units", (_bot_unique_lr, _none))

    add(E.EX_INVOLUTION, "exchange", (_ex_involution_lr, _ex_involution_rl))
    add(E.EX_YANG_BAXTER, "exchange", (_ex_yang_baxter_lr, _ex_yang_baxter_rl))
    add(E.EX_ANDL, "exchange", swap(AND_L, (Rule.EX,)))
    add(E.EX_ANDR, "exchange", factor((Rule.EX,), Rule.AND_R))
    add(E.EX_ORL, "exchange", factor((Rule.EX,), Rule.OR_L))
    add(E.EX_ORR, "exchange", swap(OR_R, (Rule.EX,)))
    add(E.EX_COMMUTE, "exchange", (_ex_commute_lr, _ex_commute_rl))
    add(E.EX_PASS, "exchange", (_ex_pass_lr, _ex_pass_rl), imported=True)
    add(E.EX_IL, "exchange", swap((Rule.IL,), (Rule.EX,)), imported=True)
    add(E.EX_OTIMESL, "exchange", (_ex_otimes_l_lr, _ex_otimes_l_rl), imported=True)
    add(E.EX_OTIMESR_LEFT, "exchange", (_ex_otimes_r_left_lr, _ex_otimes_r_left_rl), imported=True)
    add(E.EX_OTIMESR_RIGHT, "exchange", (_ex_otimes_r_right_lr, _ex_otimes_r_right_rl), imported=True)

    add(E.ETA_LIMP, "eta", eta(Limp, c.limp_r(c.limp_l(1, c.pass_(c.ax()), c.ax()))))
    add(E.OTIMESR_LIMPL, "implication", (_otimes_r_limp_l_lr, _otimes_r_limp_l_rl))
    add(E.PASS_LIMPR, "implication", swap((Rule.PASS,), (Rule.LIMP_R,), rl_guard=_nonempty_context))
    add(E.IL_LIMPR, "implication", swap((Rule.IL,), (Rule.LIMP_R,)))
    add(E.OTIMESL_LIMPR, "implication", swap((Rule.OTIMES_L,), (Rule.LIMP_R,)))
    add(E.LIMPL_LIMPR, "implication", (_limp_l_limp_r_lr, _limp_l_limp_r_rl))
    add(E.ANDL_LIMPR, "implication", swap(AND_L, (Rule.LIMP_R,)))
    add(E.ORL_LIMPR, "implication", factor((Rule.LIMP_R,), Rule.OR_L))
    add(E.ORR_LIMPL, "implication", (_or_r_limp_l_lr, _or_r_limp_l_rl))
    add(E.LIMPL_ANDR, "implication", (_limp_l_and_r_lr, _limp_l_and_r_rl), supplemental=True)

    return {eq.id: eq for eq in table}


EQUATION_INFO: Dict[EquationId, Equation] = _build_equations()


# ---------------------------------------------------------------------------
# positions

def positions(d: Derivation, s: Sequent, profile: LogicProfile = BASE,
              path: Path = ()) -> Iterator[Tuple[Path, Derivation, Sequent]]:
    """Subderivations with their sequents, children before parents, left to right."""
    for index, (child, seq) in enumerate(zip(d.premises, premise_sequents(d, s, profile))):
        yield from positions(child, seq, profile, path + (index,))
    yield path, d, s


def subderivation(d: Derivation, s: Sequent, path: Path,
                  profile: LogicProfile = BASE) -> Tuple[Derivation, Sequent]:
    for index in path:
        if index >= len(d.premises):
            raise RewriteError(f"path {'/'.join(map(str, path))} leaves the derivation")
        s = premise_sequents(d, s, profile)[index]
        d = d.premises[index]
    return d, s


def replace(d: Derivation, path: Path, new: Derivation) -> Derivation:
    if not path:
        return new
    head, rest = path[0], path[1:]
    premises = list(d.premises)
    premises[head] = replace(premises[head], rest, new)
    return _rebuild(d, tuple(premises))


# ---------------------------------------------------------------------------
# public rewriting API

def _rewrites(eq: Equation, direction: Direction) -> Rewrite:
    return eq.lr if direction is Direction.LR else eq.rl


def applicable(d: Derivation, s: Sequent, profile: LogicProfile = BASE) -> List[Redex]:
    redexes = []
    equations = tables_for(profile).equations
    for path, sub, seq in positions(d, s, profile):
        for eq_id in equations:
            eq = EQUATION_INFO[eq_id]
            for direction in (Direction.LR, Direction.RL):
                for variant, _ in enumerate(_rewrites(eq, direction)(sub, seq)):
                    redexes.append(Redex(path, eq_id, direction, variant))
    return redexes


def rewrite_once(d: Derivation, s: Sequent, path: Path, eq: EquationId,
                 direction: Direction = Direction.LR, profile: LogicProfile = BASE,
                 variant: int = 0) -> Derivation:
    if eq not in tables_for(profile).equations:
        raise RewriteError(f"equation {eq.value} is not part of the {profile.name} profile")
    sub, seq = subderivation(d, s, path, profile)
    results = _rewrites(EQUATION_INFO[eq], direction)(sub, seq)
    if variant >= len(results):
        where = "/".join(map(str, path)) or "root"
        raise RewriteError(f"no {eq.value} {direction.value} redex at {where}")
    return replace(d, path, results[variant])


def first_redex(d: Derivation, s: Sequent, profile: LogicProfile = BASE) -> Optional[Tuple[Path, Derivation]]:
    """Leftmost-innermost left-to-right redex and its contractum."""
    equations = tables_for(profile).equations
    for path, sub, seq in positions(d, s, profile):
        for eq_id in equations:
            results = EQUATION_INFO[eq_id].lr(sub, seq)
            if results:
                logger.debug("rewrite %s at %s", eq_id.value, "/".join(map(str, path)) or "root")
                return path, results[0]
    return None


def normalize_rw(d: Derivation, s: Sequent, profile: LogicProfile = BASE, step_cap: int = 10000) -> Derivation:
    steps = 0
    while True:
        found = first_redex(d, s, profile)
        if found is None:
            return d
        steps += 1
        if steps > step_cap:
            raise RewriteError(f"rewriting did not terminate within {step_cap} steps")
        path, contractum = found
        d = replace(d, path, contractum)


def is_normal(d: Derivation, s: Sequent, profile: LogicProfile = BASE) -> bool:
    return first_redex(d, s, profile) is None


# ---------------------------------------------------------------------------
# oracle

def collapse_units(d: Derivation, s: Sequent, profile: LogicProfile = BASE) -> Derivation:
    """Apply both unit equations everywhere; the identity outside the units profile."""
    if not profile.units:
        return d
    if isinstance(s.succedent, Top):
        return c.top_r()
    if isinstance(s.stoup, Zero):
        return c.bot_l()
    if not d.premises:
        return d
    premises = tuple(
        collapse_units(child, seq, profile)
        for child, seq in zip(d.premises, premise_sequents(d, s, profile))
    )
    return _rebuild(d, premises)


def ex_count(d: Derivation) -> int:
    return (d.rule is Rule.EX) + sum(ex_count(p) for p in d.premises)


def neighbours(d: Derivation, s: Sequent, profile: LogicProfile = BASE) -> Iterator[Derivation]:
    """All results of one undirected generating-equation step."""
    equations = tables_for(profile).equations
    for path, sub, seq in positions(d, s, profile):
        for eq_id in equations:
            eq = EQUATION_INFO[eq_id]
            for result in eq.lr(sub, seq) + eq.rl(sub, seq):
                yield replace(d, path, result)


def _gate(s: Sequent, max_connectives: int) -> None:
    size = sequent_connectives(s)
    if size > max_connectives:
        raise BudgetExceeded(
            f"oracle limited to {max_connectives} connectives, sequent has {size}", max_connectives
        )


def equivalence_class(d: Derivation, s: Sequent, profile: LogicProfile = BASE,
                      class_cap: int = 50000, ex_bound: Optional[int] = None,
                      target: Optional[Derivation] = None) -> Set[Derivation]:
    """Breadth-first closure of `d` under undirected equation steps.

    Under exchange, states with more than `ex_bound` exchange nodes are not explored.
    Stops early once `target` is reached.
    """
    start = collapse_units(d, s, profile)
    if ex_bound is None:
        ex_bound = ex_count(start)
    seen = {start}
    frontier = deque([start])
    while frontier:
        current = frontier.popleft()
        if target is not None and current == target:
            break
        for nxt in neighbours(current, s, profile):
            nxt = collapse_units(nxt, s, profile)
            if nxt in seen:
                continue
            if profile.exchange and ex_count(nxt) > ex_bound:
                continue
            seen.add(nxt)
            if len(seen) > class_cap:
                raise BudgetExceeded(f"equivalence class exceeded {class_cap} derivations", class_cap)
            frontier.append(nxt)
    logger.debug("class of size %d explored for %s", len(seen), s)
    return seen


def equiv_oracle(f: Derivation, g: Derivation, s: Sequent, profile: LogicProfile = BASE,
                 max_connectives: int = 6, class_cap: int = 50000, max_exchanges: int = 2) -> bool:
    _gate(s, max_connectives)
    target = collapse_units(g, s, profile)
    if collapse_units(f, s, profile) == target:
        return True
    bound = max(ex_count(f), ex_count(g)) + max_exchanges
    return target in equivalence_class(f, s, profile, class_cap, bound, target=target)


def partition(ds: List[Derivation], s: Sequent, profile: LogicProfile = BASE,
              max_connectives: int = 6, class_cap: int = 50000,
              max_exchanges: int = 2) -> List[List[Derivation]]:
    """Group derivations of one sequent into oracle classes, in first-occurrence order."""
    _gate(s, max_connectives)
    bound = max((ex_count(d) for d in ds), default=0) + max_exchanges
    classes: List[List[Derivation]] = []
    owner: Dict[Derivation, int] = {}
    for d in ds:
        key = collapse_units(d, s, profile)
        if key in owner:
            classes[owner[key]].append(d)
            continue
        members = equivalence_class(d, s, profile, class_cap, bound)
        index = len(classes)
        for m in members:
            owner[m] = index
        classes.append([d])
    return classes


def equiv(f: Derivation, g: Derivation, s: Sequent, profile: LogicProfile = BASE, **oracle_options) -> bool:
    """Congruence test through focused normal forms."""
    if profile.exchange:
        logger.warning("no focusing function under exchange; falling back to the oracle")
        return equiv_oracle(f, g, s, profile, **oracle_options)
    return focus(f, s, profile) == focus(g, s, profile)
