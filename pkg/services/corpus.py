"""Small-sequent corpus and the properties the engine is accepted against.

Every check takes one sequent and returns a `CorpusReport`; reports merge, so the
runner script and the slow tests fold them over the whole corpus.
"""
import logging
from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from logic import calculus as c
from logic import congruence
from logic.calculus import Derivation
from logic.errors import BudgetExceeded, FocusError
from logic.focused import Focused, check_focused, emb, focus
from logic.formula import (
    BOT,
    TOP,
    UNIT,
    Atom,
    Formula,
    Limp,
    Plus,
    Sequent,
    Tensor,
    With,
)
from logic.profiles import BASE, PROFILE_NAMES, LogicProfile
from logic.search import (
    SearchBudget,
    count_classes,
    derive,
    enumerate_focused,
    enumerate_unfocused,
)

logger = logging.getLogger(__name__)

DEFAULT_ATOMS = ("X", "Y")


class CorpusReport(BaseModel):
    checked: int = 0
    failures: List[str] = Field(default_factory=list)
    caveats: List[str] = Field(default_factory=list, description="Known divergences that are not failures")
    skipped: int = Field(0, description="Sequents abandoned on a budget")

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "CorpusReport") -> "CorpusReport":
        return CorpusReport(
            checked=self.checked + other.checked,
            failures=self.failures + other.failures,
            caveats=self.caveats + other.caveats,
            skipped=self.skipped + other.skipped,
        )


class CheckOptions(BaseModel):
    budget: SearchBudget = Field(default_factory=SearchBudget)
    oracle_max_connectives: int = Field(6, ge=1)
    oracle_class_cap: int = Field(50000, ge=1)
    rewrite_step_cap: int = Field(10000, ge=1)
    max_exchanges: int = Field(1, ge=0)
    partner_connectives: int = Field(1, ge=0, description="Largest formula in the sequents composed with a cut")

    def oracle(self) -> Dict[str, int]:
        return {
            "max_connectives": self.oracle_max_connectives,
            "class_cap": self.oracle_class_cap,
            "max_exchanges": self.max_exchanges,
        }


# ---------------------------------------------------------------------------
# corpus

@lru_cache(maxsize=None)
def formulas_of_size(n: int, atoms: Tuple[str, ...], profile: LogicProfile) -> Tuple[Formula, ...]:
    """All formulas with exactly `n` connectives; nullary units count as one."""
    if n == 0:
        return tuple(Atom(a) for a in atoms)
    found: List[Formula] = []
    if n == 1:
        found.append(UNIT)
        if profile.units:
            found.extend([TOP, BOT])
    binary = [Tensor, With, Plus] + ([Limp] if profile.implication else [])
    for k in range(n):
        for left in formulas_of_size(k, atoms, profile):
            for right in formulas_of_size(n - 1 - k, atoms, profile):
                found.extend(op(left, right) for op in binary)
    return tuple(found)


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def sequent_corpus(atoms: Sequence[str] = DEFAULT_ATOMS, max_connectives: int = 2, max_context: int = 2,
                   profile: LogicProfile = BASE) -> Iterator[Sequent]:
    """Every sequent over `atoms` with bounded total size and context length, smallest first."""
    atoms = tuple(atoms)
    for total in range(max_connectives + 1):
        for length in range(max_context + 1):
            for has_stoup in (False, True):
                for sizes in _compositions(total, length + 1 + int(has_stoup)):
                    pools = [formulas_of_size(n, atoms, profile) for n in sizes]
                    for formulas in product(*pools):
                        stoup = formulas[0] if has_stoup else None
                        rest = formulas[1:] if has_stoup else formulas
                        yield Sequent(stoup, rest[:-1], rest[-1])


# ---------------------------------------------------------------------------
# checks

class _Images:
    """`focus` per derivation; a FocusError becomes a caveat for that derivation only."""

    def __init__(self, profile: LogicProfile):
        self.profile = profile
        self.caveats: List[str] = []
        self._seen: Dict[Tuple[Derivation, Sequent], Optional[Focused]] = {}

    def __call__(self, d: Derivation, s: Sequent) -> Optional[Focused]:
        key = (d, s)
        if key not in self._seen:
            try:
                self._seen[key] = focus(d, s, self.profile)
            except FocusError as e:
                logger.debug("no focused form for %s: %s", d, e)
                self.caveats.append(f"{s}: no focused form for {d}: {e}")
                self._seen[key] = None
        return self._seen[key]


def _report(s: Sequent, failures: List[str], caveats: Optional[List[str]] = None) -> CorpusReport:
    for msg in failures:
        logger.warning("%s: %s", s, msg)
    return CorpusReport(checked=1, failures=failures, caveats=caveats or [])


def _budgeted(check):
    def wrapper(s: Sequent, profile: LogicProfile = BASE, opts: Optional[CheckOptions] = None) -> CorpusReport:
        try:
            return check(s, profile, opts or CheckOptions())
        except BudgetExceeded as e:
            logger.debug("skipping %s: %s", s, e)
            return CorpusReport(skipped=1)
        except FocusError as e:
            return _report(s, [f"uncaught focusing failure: {e}"])

    wrapper.__name__ = check.__name__
    wrapper.__doc__ = check.__doc__
    return wrapper


@_budgeted
def check_bijection(s: Sequent, profile: LogicProfile, opts: CheckOptions) -> CorpusReport:
    """focus inverts emb, emb(focus(f)) stays in the class of f, and classes focus to one derivation."""
    if profile.exchange:
        return CorpusReport(skipped=1)
    images = _Images(profile)
    failures = []
    for d in enumerate_focused(s, profile, opts.budget):
        check_focused(d, s, profile)
        try:
            back = focus(emb(d, s), s, profile)
        except FocusError as e:
            failures.append(f"focus fails on emb(d) for {d}: {e}")
            continue
        if back != d:
            failures.append(f"focus(emb(d)) differs from d for {d}")
    ds = enumerate_unfocused(s, profile, opts.budget, opts.max_exchanges)
    for f in ds:
        image = images(f, s)
        if image is not None and not congruence.equiv_oracle(emb(image, s), f, s, profile, **opts.oracle()):
            failures.append(f"emb(focus(f)) is not congruent to {f}")
    for members in congruence.partition(ds, s, profile, **opts.oracle()):
        found = {images(f, s) for f in members} - {None}
        if len(found) > 1:
            failures.append(f"one class focuses to {len(found)} derivations")
    return _report(s, failures, images.caveats)


@_budgeted
def check_canonicity(s: Sequent, profile: LogicProfile, opts: CheckOptions) -> CorpusReport:
    """Focused derivations and oracle classes of unfocused derivations have the same count."""
    focused = len(enumerate_focused(s, profile, opts.budget))
    ds = enumerate_unfocused(s, profile, opts.budget, opts.max_exchanges)
    parts = congruence.partition(ds, s, profile, **opts.oracle())
    if focused == len(parts):
        return _report(s, [])
    msg = f"{focused} focused derivations against {len(parts)} classes"
    if profile.exchange:
        return _report(s, [], [f"{s}: {msg}"])
    # classes with no focusable member have no focused counterpart to count
    images = _Images(profile)
    stuck = sum(1 for members in parts if all(images(f, s) is None for f in members))
    if stuck and focused == len(parts) - stuck:
        return _report(s, [], [f"{s}: {msg}"] + images.caveats)
    return _report(s, [msg])


@_budgeted
def check_rewrite_confluence(s: Sequent, profile: LogicProfile, opts: CheckOptions) -> CorpusReport:
    """Every derivation and each of its neighbours rewrite to the same normal form; focus agrees across a step."""
    images = _Images(profile)
    failures = []
    for f in enumerate_unfocused(s, profile, opts.budget, opts.max_exchanges):
        normal = congruence.collapse_units(congruence.normalize_rw(f, s, profile, opts.rewrite_step_cap), s, profile)
        image = None if profile.exchange else images(f, s)
        for g in congruence.neighbours(f, s, profile):
            g_normal = congruence.normalize_rw(g, s, profile, opts.rewrite_step_cap)
            if congruence.collapse_units(g_normal, s, profile) != normal:
                failures.append(f"{f} and its neighbour {g} rewrite apart")
            if image is None:
                continue
            g_image = images(g, s)
            if g_image is not None and g_image != image:
                failures.append(f"focus changes across the step {f} to {g}")
    return _report(s, failures, images.caveats)


@lru_cache(maxsize=None)
def _derivable(s: Sequent, profile: LogicProfile, budget: SearchBudget, max_exchanges: int) -> Tuple[Derivation, ...]:
    try:
        return tuple(enumerate_unfocused(s, profile, budget, max_exchanges))
    except BudgetExceeded:
        return ()


def _partners(a: Formula, profile: LogicProfile, opts: CheckOptions) -> List[Tuple[Sequent, Tuple[Derivation, ...]]]:
    """Derivable `a | Δ ⊢ B` with B from the corpus pools and Δ empty or a single atom."""
    atoms = DEFAULT_ATOMS
    found = []
    for n in range(opts.partner_connectives + 1):
        for b in formulas_of_size(n, atoms, profile):
            for delta in ((), (Atom(atoms[-1]),)):
                t = Sequent(a, delta, b)
                ds = _derivable(t, profile, opts.budget, opts.max_exchanges)
                if ds:
                    found.append((t, ds))
    return found


def _suppliers(a: Formula, profile: LogicProfile, opts: CheckOptions) -> List[Tuple[Sequent, Tuple[Derivation, ...]]]:
    """Derivable `- | Λ ⊢ a` for Λ = a or I, a."""
    found = []
    for lam in ((a,), (UNIT, a)):
        t = Sequent(None, lam, a)
        ds = _derivable(t, profile, opts.budget, opts.max_exchanges)
        if ds:
            found.append((t, ds))
    return found


def _agree(f: Derivation, g: Derivation, s: Sequent, profile: LogicProfile, opts: CheckOptions,
           images: _Images) -> Optional[bool]:
    """Congruence of `f` and `g`, or None when it cannot be decided here."""
    if profile.exchange:
        try:
            return congruence.equiv_oracle(f, g, s, profile, **opts.oracle())
        except BudgetExceeded:
            return None
    left, right = images(f, s), images(g, s)
    if left is None or right is None:
        return None
    return left == right


@_budgeted
def check_cut_laws(s: Sequent, profile: LogicProfile, opts: CheckOptions) -> CorpusReport:
    """Unit and associativity laws of stoup cut, unit laws of context cut, and context cut commuting with stoup cut.

    `s` is the first sequent of every composable triple; the others are drawn from
    `_partners` and `_suppliers`.
    """
    images = _Images(profile)
    failures: List[str] = []

    def same(f: Derivation, g: Derivation, t: Sequent, law: str) -> None:
        if _agree(f, g, t, profile, opts, images) is False:
            failures.append(f"{law}: {f} against {g}")

    ds = enumerate_unfocused(s, profile, opts.budget, opts.max_exchanges)
    a = s.succedent
    for f in ds:
        same(c.scut(f, s, c.ax(), Sequent(a, (), a), profile), f, s, "scut(f, ax)")
        if s.stoup is not None:
            same(c.scut(c.ax(), Sequent(s.stoup, (), s.stoup), f, s, profile), f, s, "scut(ax, f)")
        for pos, b in enumerate(s.context):
            unit = Sequent(None, (b,), b)
            same(c.ccut(c.pass_(c.ax()), unit, f, s, pos, profile), f, s, f"ccut(pass ax, f) at {pos}")
        if s.stoup is None:
            same(c.ccut(f, s, c.pass_(c.ax()), Sequent(None, (a,), a), 0, profile), f, s, "ccut(f, pass ax)")

    for gs, gds in _partners(a, profile, opts):
        fg = c.scut_sequent(s, gs)
        for hs, hds in _partners(gs.succedent, profile, opts):
            gh = c.scut_sequent(gs, hs)
            fgh = c.scut_sequent(fg, hs)
            for f, g, h in product(ds, gds, hds):
                outer = c.scut(c.scut(f, s, g, gs, profile), fg, h, hs, profile)
                inner = c.scut(f, s, c.scut(g, gs, h, hs, profile), gh, profile)
                same(outer, inner, fgh, "stoup cut associativity")
        for pos, b in enumerate(gs.context):
            shifted = len(s.context) + pos
            for es, eds in _suppliers(b, profile, opts):
                ge = c.ccut_sequent(es, gs, pos)
                target = c.ccut_sequent(es, fg, shifted)
                for f, g, e in product(ds, gds, eds):
                    first = c.scut(f, s, c.ccut(e, es, g, gs, pos, profile), ge, profile)
                    then = c.ccut(e, es, c.scut(f, s, g, gs, profile), fg, shifted, profile)
                    same(first, then, target, "ccut after scut")
    return _report(s, failures, images.caveats)


@_budgeted
def check_conservativity(s: Sequent, profile: LogicProfile, opts: CheckOptions) -> CorpusReport:
    """A sequent derivable in `profile` stays derivable in every profile extending it."""
    if derive(s, profile, opts.budget) is None:
        return CorpusReport(checked=1)
    failures = []
    for name in PROFILE_NAMES:
        wider = LogicProfile.parse(name)
        if wider == profile or not _extends(wider, profile):
            continue
        if derive(s, wider, opts.budget) is None:
            failures.append(f"derivable in {profile.name} but not in {wider.name}")
    return _report(s, failures)


def _extends(wider: LogicProfile, narrower: LogicProfile) -> bool:
    return all(getattr(wider, flag) >= getattr(narrower, flag) for flag in ("units", "exchange", "implication"))


@_budgeted
def check_unit_laws(s: Sequent, profile: LogicProfile, opts: CheckOptions) -> CorpusReport:
    """With `s` read as stoup and context: S | Γ ⊢ ⊤ and ⊥ | Γ ⊢ C each have exactly one class."""
    if not profile.units:
        return CorpusReport(skipped=1)
    failures = []
    top_seq = Sequent(s.stoup, s.context, TOP)
    n = count_classes(top_seq, profile, opts.budget)
    if n != 1:
        failures.append(f"{top_seq} has {n} classes")
    bot_seq = Sequent(BOT, s.context, s.succedent)
    n = count_classes(bot_seq, profile, opts.budget)
    if n != 1:
        failures.append(f"{bot_seq} has {n} classes")
    return _report(s, failures)


CHECKS = {
    "bijection": check_bijection,
    "canonicity": check_canonicity,
    "rewrite_confluence": check_rewrite_confluence,
    "cut_laws": check_cut_laws,
    "conservativity": check_conservativity,
    "unit_laws": check_unit_laws,
}


def run_checks(sequents: Sequence[Sequent], profile: LogicProfile = BASE,
               opts: Optional[CheckOptions] = None, names: Sequence[str] = tuple(CHECKS),
               progress=iter) -> Dict[str, CorpusReport]:
    """Fold the named checks over `sequents`; `progress` wraps the iteration (e.g. tqdm)."""
    reports = {name: CorpusReport() for name in names}
    for s in progress(sequents):
        for name in names:
            reports[name] = reports[name].merge(CHECKS[name](s, profile, opts))
    return reports
