"""Enumerated verification sweeps for the twin families.

Each family has a fixed small catalog (or, for the tame family, a birthday
bound); a sweep enumerates every multiset of components up to the bound,
applies the family's twin rule, solves all four outcomes, and reports any
position whose twin fails to verify.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .engine import Engine
from .forms import Dyadic, FormId
from .taxonomy import mutant_flower
from .twins import FamilyRule, TwinReport, twin_of

DEFAULT_BOUNDS = {
    FamilyRule.SPRIGS: 3,
    FamilyRule.FLOWERS: 3,
    FamilyRule.MUTANT_FLOWERS: 2,
    FamilyRule.TAME_IMPARTIAL: 4,
    FamilyRule.RESTRICTED_WILDFLOWERS: 3,
}

SPRIG_TOPS = (Dyadic(-1), Dyadic(-1, 1), Dyadic(0), Dyadic(1, 1), Dyadic(1))
FLOWER_HEIGHTS = (1, 2, 3)
FLOWER_TOPS = (Dyadic(-1), Dyadic(0), Dyadic(1))
MUTANT_HEAD_UNIVERSE = (0, 1, 2, 3)
MUTANT_TOPS = (Dyadic(-1), Dyadic(1))


@dataclass(frozen=True)
class SuiteResult:
    family: FamilyRule
    bound: int
    instances: int
    failures: tuple

    @property
    def ok(self) -> bool:
        return not self.failures


def sprig_catalog(engine: Engine) -> list:
    return [engine.sprig(a) for a in SPRIG_TOPS]


def flower_catalog(engine: Engine) -> list:
    return [engine.flower(n, a) for n in FLOWER_HEIGHTS for a in FLOWER_TOPS]


def mutant_catalog(engine: Engine) -> list:
    """Mutant flowers over heads from {0,1,2,3} that pass the membership
    test, with tops ±1."""
    out = []
    universe = MUTANT_HEAD_UNIVERSE
    for mask in range(1, 1 << len(universe)):
        xs = frozenset(universe[i] for i in range(len(universe)) if mask >> i & 1)
        for a in MUTANT_TOPS:
            mf = mutant_flower(engine, xs, a)
            if mf.member:
                out.append(mf.form)
    return out


def wildflower_catalog(engine: Engine) -> list:
    """Fixed mix of restricted fickle (sprigs) and restricted firm
    (height-2 flower) wildflowers."""
    return [
        engine.sprig(1),
        engine.sprig(-1),
        engine.sprig(Dyadic(1, 1)),
        engine.sprig(Dyadic(-1, 1)),
        engine.flower(2, 1),
        engine.flower(2, -1),
    ]


def impartial_forms_by_day(engine: Engine, max_day: int) -> list:
    """All impartial forms born by max_day (every option-set over the
    previous layer), as interned handles."""
    layer = [engine.zero]
    for _ in range(max_day):
        opts = sorted(layer)
        layer = []
        for mask in range(1 << len(opts)):
            chosen = tuple(opts[i] for i in range(len(opts)) if mask >> i & 1)
            layer.append(engine.arena.intern(chosen, chosen))
        layer = sorted(set(layer))
    return layer


def hereditarily_tame_forms(engine: Engine, max_day: int) -> list:
    return [
        g
        for g in impartial_forms_by_day(engine, max_day)
        if engine.misere.is_hereditarily_tame(g)
    ]


def family_positions(engine: Engine, rule: FamilyRule, bound: int):
    if rule is FamilyRule.TAME_IMPARTIAL:
        for g in hereditarily_tame_forms(engine, bound):
            yield engine.position(g)
        return
    catalog = {
        FamilyRule.SPRIGS: sprig_catalog,
        FamilyRule.FLOWERS: flower_catalog,
        FamilyRule.MUTANT_FLOWERS: mutant_catalog,
        FamilyRule.RESTRICTED_WILDFLOWERS: wildflower_catalog,
    }[rule](engine)
    for k in range(bound + 1):
        for combo in combinations_with_replacement(catalog, k):
            yield engine.position(*combo)


def run_family_suite(engine: Engine, rule: FamilyRule, bound=None) -> SuiteResult:
    if bound is None:
        bound = DEFAULT_BOUNDS[rule]
    instances = 0
    failures = []
    for p in family_positions(engine, rule, bound):
        instances += 1
        report = twin_of(engine, p, rule)
        if not report.verified:
            failures.append(report)
    return SuiteResult(rule, bound, instances, tuple(failures))
