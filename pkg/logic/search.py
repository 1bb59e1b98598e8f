"""Root-first proof search in the focused calculus and exhaustive enumeration in both calculi.

Search results are produced lazily and memoized per goal, so `derive` stops at
the first derivation while `enumerate_focused` drains the same streams.
"""
import logging
from itertools import islice
from typing import Dict, Iterator, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from logic import calculus as c
from logic.calculus import Derivation, check
from logic.congruence import equiv_oracle, partition
from logic.errors import BudgetExceeded, FocusError, ProfileError
from logic.focused import (
    TAG_BULLET,
    TAG_C1,
    TAG_C2,
    TAG_P,
    TAG_R,
    TAG_T,
    Focused,
    ctx_tag,
    emb,
    first_bullet,
    valid_tags,
)
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
    erase,
    is_irreducible_stoup,
    plain_entries,
    sequent_connectives,
    validate_sequent,
)
from logic.labels import FocusedRule as FR
from logic.profiles import BASE, LogicProfile

logger = logging.getLogger(__name__)


class SearchBudget(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_connectives: int = Field(8, ge=1, description="Largest sequent accepted, counted in connectives")
    node_cap: int = Field(200000, ge=1, description="Derivation nodes built before giving up")
    result_cap: int = Field(10000, ge=1, description="Derivations listed by one enumeration")


class _Stream:
    """Re-iterable view of a generator that caches what it has produced."""

    def __init__(self, source: Iterator):
        self._source = source
        self._items: List = []
        self._done = False

    def __iter__(self):
        index = 0
        while True:
            if index < len(self._items):
                yield self._items[index]
                index += 1
                continue
            if self._done:
                return
            try:
                item = next(self._source)
            except StopIteration:
                self._done = True
                return
            self._items.append(item)


Ctx = Tuple[Entry, ...]


class ProofSearch:
    """Focused proof search for one profile; memo tables live as long as the instance."""

    def __init__(self, profile: LogicProfile = BASE, budget: Optional[SearchBudget] = None):
        self.profile = profile
        self.budget = budget or SearchBudget()
        self.memo: Dict[tuple, _Stream] = {}
        self.nodes = 0

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.node_cap:
            raise BudgetExceeded(f"search built more than {self.budget.node_cap} nodes", self.budget.node_cap)

    def _memo(self, key: tuple, produce) -> _Stream:
        stream = self.memo.get(key)
        if stream is None:
            stream = _Stream(produce())
            self.memo[key] = stream
        return stream

    def root(self, s: Sequent) -> _Stream:
        validate_sequent(s, self.profile)
        size = sequent_connectives(s)
        if size > self.budget.max_connectives:
            raise BudgetExceeded(
                f"sequent has {size} connectives, limit is {self.budget.max_connectives}",
                self.budget.max_connectives,
            )
        ctx = plain_entries(s.context)
        if self.profile.exchange:
            return self.c(s.stoup, ctx, s.succedent, len(ctx))
        return self.ri(s.stoup, ctx, s.succedent, False)

    # right invertible phase
    def ri(self, stoup: Stoup, ctx: Ctx, succ: Formula, tagged: bool) -> _Stream:
        return self._memo(("RI", stoup, ctx, succ, tagged), lambda: self._ri(stoup, ctx, succ, tagged))

    def _ri(self, stoup, ctx, succ, tagged):
        if isinstance(succ, With):
            for left in self.ri(stoup, ctx, succ.left, tagged):
                for right in self.ri(stoup, ctx, succ.right, tagged):
                    self._tick()
                    tags = left.tags + right.tags if tagged else None
                    yield Focused(FR.AND_R, (left, right), tags)
        elif self.profile.implication and isinstance(succ, Limp):
            extended = ctx + (Entry(succ.antecedent, bullet=tagged),)
            for body in self.ri(stoup, extended, succ.consequent, tagged):
                self._tick()
                yield Focused(FR.LIMP_R, (body,), body.tags)
        elif self.profile.units and isinstance(succ, Top):
            self._tick()
            yield Focused(FR.TOP_R, tags=(TAG_T,) if tagged else None)
        else:
            for body in self.li(stoup, ctx, succ, tagged):
                self._tick()
                yield Focused(FR.LI2RI, (body,), body.tags)

    # left invertible phase
    def li(self, stoup: Stoup, ctx: Ctx, succ: Formula, tagged: bool) -> _Stream:
        return self._memo(("LI", stoup, ctx, succ, tagged), lambda: self._li(stoup, ctx, succ, tagged))

    def _li(self, stoup, ctx, succ, tagged):
        if is_irreducible_stoup(stoup, self.profile):
            for body in self.f(stoup, ctx, succ, tagged):
                self._tick()
                yield Focused(FR.F2LI, (body,), body.tags)
            return
        if tagged:
            return
        if isinstance(stoup, Unit):
            for body in self.li(None, ctx, succ, False):
                self._tick()
                yield Focused(FR.IL, (body,))
        elif isinstance(stoup, Tensor):
            extended = (Entry(stoup.right),) + ctx
            if self.profile.exchange:
                bodies = self.c(stoup.left, extended, succ, 1)
            else:
                bodies = self.li(stoup.left, extended, succ, False)
            for body in bodies:
                self._tick()
                yield Focused(FR.OTIMES_L, (body,))
        elif isinstance(stoup, Plus):
            for left in self.li(stoup.left, ctx, succ, False):
                for right in self.li(stoup.right, ctx, succ, False):
                    self._tick()
                    yield Focused(FR.OR_L, (left, right))
        elif isinstance(stoup, Zero):
            self._tick()
            yield Focused(FR.BOT_L)

    # focusing phase
    def f(self, stoup: Stoup, ctx: Ctx, succ: Formula, tagged: bool) -> _Stream:
        return self._memo(("F", stoup, ctx, succ, tagged), lambda: self._f(stoup, ctx, succ, tagged))

    def _f(self, stoup, ctx, succ, tagged):
        def tag(t):
            return (t,) if tagged else None

        if stoup is None and ctx:
            first = ctx[0]
            for body in self.li(first.formula, erase(ctx[1:]), succ, False):
                self._tick()
                yield Focused(FR.PASS, (body,), tag(TAG_BULLET if first.bullet else TAG_P))
        if isinstance(stoup, With):
            for rule, component, t in ((FR.AND_L1, stoup.left, TAG_C1), (FR.AND_L2, stoup.right, TAG_C2)):
                for body in self.li(component, erase(ctx), succ, False):
                    self._tick()
                    yield Focused(rule, (body,), tag(t))
        if isinstance(stoup, Atom) and stoup == succ and not ctx:
            self._tick()
            yield Focused(FR.AX, tags=tag(TAG_R))
        if stoup is None and not ctx and isinstance(succ, Unit):
            self._tick()
            yield Focused(FR.IR, tags=tag(TAG_R))
        if isinstance(succ, Plus):
            for rule, disjunct in ((FR.OR_R1, succ.left), (FR.OR_R2, succ.right)):
                for body in self.ri(stoup, erase(ctx), disjunct, True):
                    if valid_tags(body.tags, self.profile):
                        self._tick()
                        yield Focused(rule, (body,), tag(TAG_R))
        if isinstance(succ, Tensor):
            for k in range(len(ctx) + 1):
                for left in self.ri(stoup, erase(ctx[:k]), succ.left, True):
                    if not valid_tags(left.tags, self.profile):
                        continue
                    for right in self.ri(None, erase(ctx[k:]), succ.right, False):
                        self._tick()
                        yield Focused(FR.OTIMES_R, (left, right), tag(TAG_R), split=k)
        if self.profile.implication and isinstance(stoup, Limp):
            marked_from = first_bullet(ctx)
            for k in range(len(ctx) + 1):
                t = ctx_tag(context_formulas(ctx[:k])) if k <= marked_from else TAG_BULLET
                for left in self.ri(None, erase(ctx[:k]), stoup.antecedent, False):
                    for right in self.li(stoup.consequent, erase(ctx[k:]), succ, False):
                        self._tick()
                        yield Focused(FR.LIMP_L, (left, right), tag(t), split=k)

    # context phase
    def c(self, stoup: Stoup, ctx: Ctx, succ: Formula, unplaced: int) -> _Stream:
        return self._memo(("C", stoup, ctx, succ, unplaced), lambda: self._c(stoup, ctx, succ, unplaced))

    def _c(self, stoup, ctx, succ, unplaced):
        if unplaced == 0:
            for body in self.ri(stoup, ctx, succ, False):
                self._tick()
                yield Focused(FR.RI2C, (body,))
            return
        moved = ctx[unplaced - 1]
        waiting, placed = ctx[:unplaced - 1], ctx[unplaced:]
        for j in range(len(placed) + 1):
            rearranged = waiting + placed[:j] + (moved,) + placed[j:]
            for body in self.c(stoup, rearranged, succ, unplaced - 1):
                self._tick()
                yield Focused(FR.EX, (body,), pos=j)


def derive(s: Sequent, profile: LogicProfile = BASE, budget: Optional[SearchBudget] = None) -> Optional[Focused]:
    search = ProofSearch(profile, budget)
    result = next(iter(search.root(s)), None)
    logger.info("%s is %sderivable (%d nodes)", s, "" if result is not None else "not ", search.nodes)
    return result


def enumerate_focused(s: Sequent, profile: LogicProfile = BASE,
                      budget: Optional[SearchBudget] = None) -> List[Focused]:
    search = ProofSearch(profile, budget)
    cap = search.budget.result_cap
    results = list(islice(search.root(s), cap + 1))
    if len(results) > cap:
        raise BudgetExceeded(f"more than {cap} focused derivations", cap)
    return results


def is_derivable(s: Sequent, profile: LogicProfile = BASE, budget: Optional[SearchBudget] = None) -> bool:
    return derive(s, profile, budget) is not None


# ---------------------------------------------------------------------------
# unfocused enumeration

class UnfocusedEnumeration:
    """All derivations of the plain calculus, with at most `max_exchanges` exchange nodes."""

    def __init__(self, profile: LogicProfile = BASE, budget: Optional[SearchBudget] = None,
                 max_exchanges: int = 2):
        self.profile = profile
        self.budget = budget or SearchBudget()
        self.max_exchanges = max_exchanges if profile.exchange else 0
        self.memo: Dict[tuple, List[Derivation]] = {}
        self.nodes = 0

    def _count(self, n: int) -> None:
        self.nodes += n
        if self.nodes > self.budget.node_cap:
            raise BudgetExceeded(f"enumeration built more than {self.budget.node_cap} nodes", self.budget.node_cap)

    def run(self, s: Sequent) -> List[Derivation]:
        validate_sequent(s, self.profile)
        size = sequent_connectives(s)
        if size > self.budget.max_connectives:
            raise BudgetExceeded(
                f"sequent has {size} connectives, limit is {self.budget.max_connectives}",
                self.budget.max_connectives,
            )
        return self.derivations(s.stoup, tuple(s.context), s.succedent, self.max_exchanges)

    def derivations(self, stoup: Stoup, ctx: Tuple[Formula, ...], succ: Formula, exchanges: int) -> List[Derivation]:
        key = (stoup, ctx, succ, exchanges)
        if key not in self.memo:
            found = list(self._derivations(stoup, ctx, succ, exchanges))
            self._count(len(found))
            self.memo[key] = found
        return self.memo[key]

    def _derivations(self, stoup, ctx, succ, exchanges):
        p = self.profile
        go = self.derivations
        if stoup is not None and stoup == succ and not ctx:
            yield c.ax()
        if stoup is None and ctx:
            for d in go(ctx[0], ctx[1:], succ, exchanges):
                yield c.pass_(d)
        if isinstance(stoup, Unit):
            for d in go(None, ctx, succ, exchanges):
                yield c.il(d)
        if stoup is None and not ctx and isinstance(succ, Unit):
            yield c.ir()
        if isinstance(stoup, Tensor):
            for d in go(stoup.left, (stoup.right,) + ctx, succ, exchanges):
                yield c.otimes_l(d)
        if isinstance(succ, Tensor):
            for k in range(len(ctx) + 1):
                for left in go(stoup, ctx[:k], succ.left, exchanges):
                    for right in go(None, ctx[k:], succ.right, exchanges):
                        yield c.otimes_r(k, left, right)
        if isinstance(stoup, With):
            for i, component in ((1, stoup.left), (2, stoup.right)):
                for d in go(component, ctx, succ, exchanges):
                    yield c.and_l(i, d)
        if isinstance(succ, With):
            for left in go(stoup, ctx, succ.left, exchanges):
                for right in go(stoup, ctx, succ.right, exchanges):
                    yield c.and_r(left, right)
        if isinstance(stoup, Plus):
            for left in go(stoup.left, ctx, succ, exchanges):
                for right in go(stoup.right, ctx, succ, exchanges):
                    yield c.or_l(left, right)
        if isinstance(succ, Plus):
            for i, disjunct in ((1, succ.left), (2, succ.right)):
                for d in go(stoup, ctx, disjunct, exchanges):
                    yield c.or_r(i, d)
        if p.units and isinstance(succ, Top):
            yield c.top_r()
        if p.units and isinstance(stoup, Zero):
            yield c.bot_l()
        if p.exchange and exchanges > 0:
            for q in range(len(ctx) - 1):
                swapped = ctx[:q] + (ctx[q + 1], ctx[q]) + ctx[q + 2:]
                for d in go(stoup, swapped, succ, exchanges - 1):
                    yield c.ex(q, d)
        if p.implication and isinstance(stoup, Limp):
            for k in range(len(ctx) + 1):
                for left in go(None, ctx[:k], stoup.antecedent, exchanges):
                    for right in go(stoup.consequent, ctx[k:], succ, exchanges):
                        yield c.limp_l(k, left, right)
        if p.implication and isinstance(succ, Limp):
            for d in go(stoup, ctx + (succ.antecedent,), succ.consequent, exchanges):
                yield c.limp_r(d)


def enumerate_unfocused(s: Sequent, profile: LogicProfile = BASE, budget: Optional[SearchBudget] = None,
                        max_exchanges: int = 2) -> List[Derivation]:
    enumeration = UnfocusedEnumeration(profile, budget, max_exchanges)
    results = enumeration.run(s)
    cap = enumeration.budget.result_cap
    if len(results) > cap:
        raise BudgetExceeded(f"more than {cap} unfocused derivations", cap)
    return results


def count_classes(s: Sequent, profile: LogicProfile = BASE, budget: Optional[SearchBudget] = None) -> int:
    if profile.exchange:
        logger.warning("class counts under exchange count focused derivations; uniqueness per class is unproven")
    count = len(enumerate_focused(s, profile, budget))
    logger.info("%s has %d focused derivations", s, count)
    return count


def count_classes_oracle(s: Sequent, profile: LogicProfile = BASE, budget: Optional[SearchBudget] = None,
                         max_exchanges: int = 2, oracle_max_connectives: int = 6,
                         oracle_class_cap: int = 50000) -> int:
    ds = enumerate_unfocused(s, profile, budget, max_exchanges)
    classes = partition(ds, s, profile, oracle_max_connectives, oracle_class_cap, max_exchanges)
    logger.info("%s: %d unfocused derivations in %d classes", s, len(ds), len(classes))
    return len(classes)


def canonicalize_exchange(s: Sequent, d: Derivation, profile: LogicProfile,
                          budget: Optional[SearchBudget] = None, max_exchanges: int = 2,
                          oracle_max_connectives: int = 6, oracle_class_cap: int = 50000) -> Focused:
    """Context-phase focused derivation in the oracle class of `d`.

    Candidates are tried in search order (leftmost placements first) and the first
    one whose embedding is congruent to `d` is returned, so the result depends only
    on the class of `d`.
    """
    if not profile.exchange:
        raise ProfileError("canonicalize_exchange needs the exchange profile")
    check(d, s, profile)
    for candidate in enumerate_focused(s, profile, budget):
        if equiv_oracle(emb(candidate, s), d, s, profile, oracle_max_connectives, oracle_class_cap, max_exchanges):
            return candidate
    raise FocusError(f"no focused derivation of {s} is congruent to the given one")
