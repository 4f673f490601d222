"""Twin selection per family, kernel predicates, and the verification
harnesses for the evil-twin property.

A position G has *evil twin* G* when o+(G) = o-(G*) and o-(G) = o+(G*).
Each supported family comes with a kernel: members inside it are their own
twin, members outside it get a star added.  Everything here is verified by
actually solving the four outcomes, never by trusting the classification.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Optional, Sequence

from .engine import Engine
from .forms import FormId, Position, flower_parts, mutant_parts
from .misere import TamenessClass
from .outcomes import LEFT, RIGHT, OutcomeClass
from .taxonomy import ComponentClass, as_mutant_flower, classify_component


class FamilyRule(Enum):
    SPRIGS = "sprigs"
    FLOWERS = "flowers"
    MUTANT_FLOWERS = "mutant-flowers"
    TAME_IMPARTIAL = "tame"
    RESTRICTED_WILDFLOWERS = "wildflowers"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class TwinReport:
    input: Position
    family: FamilyRule
    kernel_member: Optional[bool]
    twin: Position
    normal_outcomes: tuple  # (o+(G), o+(G*))
    misere_outcomes: tuple  # (o-(G), o-(G*))
    verified: bool


@dataclass(frozen=True)
class EvillyNormalReport:
    positions_checked: int
    pairs_checked: int
    twin_violations: tuple
    additivity_violations: tuple

    @property
    def ok(self) -> bool:
        return not self.twin_violations and not self.additivity_violations


# ============================================================================
# Family validation and the twin rules
# ============================================================================


def _sprig_heights(engine: Engine, p: Position) -> list:
    for c in p:
        parts = mutant_parts(engine.arena, c)
        if parts is None or parts[0] != frozenset({0}):
            raise ValueError("position is not a sum of sprigs")
    return [1] * len(p)


def _flower_heights(engine: Engine, p: Position) -> list:
    heights = []
    for c in p:
        parts = flower_parts(engine.arena, c)
        if parts is None:
            raise ValueError("position is not a sum of flowers *n:a")
        heights.append(parts[0])
    return heights


def _mutant_components(engine: Engine, p: Position) -> list:
    flowers = []
    for c in p:
        mf = as_mutant_flower(engine, c)
        if mf is None:
            raise ValueError("position is not a sum of mutant flowers")
        if not mf.member:
            raise ValueError(
                "mutant flower head is outside the certified class "
                "(height <= 1 and head minus {0,1} not star-closed)"
            )
        flowers.append(mf)
    return flowers


def add_star(engine: Engine, p: Position) -> Position:
    return engine.position(*p, engine.star)


def _twin_decision(engine: Engine, p: Position, rule: FamilyRule) -> tuple:
    """(kernel_member, twin position) per the family's rule; raises on a
    family mismatch or an unclassifiable component."""
    if rule is FamilyRule.SPRIGS:
        _sprig_heights(engine, p)
        return False, add_star(engine, p)
    if rule is FamilyRule.FLOWERS:
        m = max(_flower_heights(engine, p), default=0)
        return (True, p) if m > 1 else (False, add_star(engine, p))
    if rule is FamilyRule.MUTANT_FLOWERS:
        # Tall flowers are firm, but so are short heads with no move to 0
        # or *: the kernel test is on the heads' genus character, not on
        # the raw maximum height.
        flowers = _mutant_components(engine, p)
        if any(mf.firm_head for mf in flowers):
            return True, p
        return False, add_star(engine, p)
    if rule is FamilyRule.TAME_IMPARTIAL:
        for c in p:
            if not engine.arena.is_impartial(c):
                raise ValueError("position is not a sum of impartial forms")
            if engine.misere.classify_tameness(c) is TamenessClass.WILD:
                raise ValueError("position has a wild component")
        gen = engine.misere.genus_position(p)
        if gen.is_fickle:
            return False, add_star(engine, p)
        if gen.g_plus == gen.g_minus:
            return True, p
        raise ValueError(f"tame sum has unexpected genus {gen}")
    if rule is FamilyRule.RESTRICTED_WILDFLOWERS:
        classes = [classify_component(engine, c) for c in p]
        if any(cl is None for cl in classes):
            raise ValueError("unclassifiable component in wildflower sum")
        if any(cl is ComponentClass.FIRM for cl in classes):
            return True, p
        return False, add_star(engine, p)
    raise ValueError(f"unknown family: {rule}")


def verify_evil_twin(engine: Engine, p: Position, twin: Position) -> bool:
    """Solve all four outcomes and check both defining equalities."""
    return (
        engine.normal.outcome(p) == engine.misere.outcome(twin)
        and engine.misere.outcome(p) == engine.normal.outcome(twin)
    )


def twin_of(engine: Engine, p: Position, rule: FamilyRule) -> TwinReport:
    p = engine.position(*p)
    kernel_member, twin = _twin_decision(engine, p, rule)
    o_plus = engine.normal.outcome(p)
    o_minus = engine.misere.outcome(p)
    t_plus = engine.normal.outcome(twin)
    t_minus = engine.misere.outcome(twin)
    return TwinReport(
        input=p,
        family=rule,
        kernel_member=kernel_member,
        twin=twin,
        normal_outcomes=(o_plus, t_plus),
        misere_outcomes=(o_minus, t_minus),
        verified=o_plus == t_minus and o_minus == t_plus,
    )


# ============================================================================
# Kernel predicates on arbitrary positions of a family's closure
# ============================================================================


def kernel_member_wildflowers(engine: Engine, p: Position) -> Optional[bool]:
    """Three-valued kernel test for sums of restricted wildflowers: False
    when every summand is certified restricted fickle, True when some summand
    is certified restricted firm, None otherwise."""
    classes = [classify_component(engine, c) for c in p]
    if any(cl is ComponentClass.FIRM for cl in classes):
        return True
    if all(cl is ComponentClass.FICKLE for cl in classes):
        return False
    return None


def position_in_kernel(
    engine: Engine, p: Position, rule: FamilyRule
) -> Optional[bool]:
    """Kernel membership for positions reachable inside a family's closure
    (None when a component cannot be certified either way)."""
    if rule is FamilyRule.SPRIGS:
        return False
    if rule is FamilyRule.FLOWERS or rule is FamilyRule.MUTANT_FLOWERS:
        firm = []
        for c in p:
            mf = as_mutant_flower(engine, c)
            if mf is None:
                return None
            firm.append(mf.firm_head)
        return any(firm)
    if rule is FamilyRule.TAME_IMPARTIAL:
        gen = engine.misere.genus_position(p)
        if gen.is_fickle:
            return False
        if gen.g_plus == gen.g_minus:
            return True
        return None
    if rule is FamilyRule.RESTRICTED_WILDFLOWERS:
        return kernel_member_wildflowers(engine, p)
    raise ValueError(f"unknown family: {rule}")


# ============================================================================
# Move sweeps
# ============================================================================


def move_results(engine: Engine, p: Position, side: int) -> set:
    """All positions reachable by one move of the given side."""
    arena = engine.arena
    out = set()
    for i, c in enumerate(p):
        rest = p[:i] + p[i + 1 :]
        for o in arena.options(c, side):
            out.add(engine.position(*rest, o))
    return out


def kernel_winning_move_check(
    engine: Engine, p: Position, rule: FamilyRule
) -> bool:
    """Every normal-play winning move that lands in the family's kernel must
    also be a winning move under misère play."""
    for side in (LEFT, RIGHT):
        opp = 1 - side
        for result in move_results(engine, p, side):
            if engine.normal.win_first(result, opp):
                continue  # not a normal winning move
            if position_in_kernel(engine, result, rule) is not True:
                continue
            if engine.misere.win_first(result, opp):
                return False
    return True


def winning_move_results(
    engine: Engine, p: Position, side: int, misere: bool
) -> set:
    """Results of the winning moves for one side under one convention."""
    solver = engine.misere if misere else engine.normal
    return {
        r for r in move_results(engine, p, side) if not solver.win_first(r, 1 - side)
    }


# ============================================================================
# Evilly-normal verification over generated closures
# ============================================================================


def closure_positions(
    engine: Engine, generators: Iterable[FormId], max_summands: int
) -> list:
    """All positions with up to max_summands components drawn from the
    subpositions of the generators (0 excluded; the empty position included)."""
    pool = set()
    for g in generators:
        pool.update(engine.arena.subpositions(g))
    pool.discard(engine.zero)
    pool = sorted(pool)
    out = []
    for k in range(max_summands + 1):
        for combo in itertools.combinations_with_replacement(pool, k):
            out.append(engine.position(*combo))
    return out


def verify_evilly_normal(
    engine: Engine,
    generators: Iterable[FormId],
    kernel: Callable,
    max_summands: int,
) -> EvillyNormalReport:
    """Falsification harness for the evilly-normal property of (closure,
    kernel): (a) the kernel must define a valid twin for every enumerated
    member, (b) the kernel complement must be additively closed in the
    strong sense A+B outside iff both A and B outside."""
    members = closure_positions(engine, generators, max_summands)
    in_kernel = {p: bool(kernel(p)) for p in members}
    twin_violations = []
    for p in members:
        twin = p if in_kernel[p] else add_star(engine, p)
        if not verify_evil_twin(engine, p, twin):
            twin_violations.append(p)
    additivity_violations = []
    pairs = 0
    for a, b in itertools.combinations_with_replacement(members, 2):
        if len(a) + len(b) > max_summands:
            continue
        pairs += 1
        ab = engine.position(*a, *b)
        outside = not in_kernel.get(ab, kernel(ab))
        if outside != (not in_kernel[a] and not in_kernel[b]):
            additivity_violations.append((a, b))
    return EvillyNormalReport(
        positions_checked=len(members),
        pairs_checked=pairs,
        twin_violations=tuple(twin_violations),
        additivity_violations=tuple(additivity_violations),
    )


# ============================================================================
# The short-mutant-flower counterexample pair
# ============================================================================


def counterexample_outcomes(engine: Engine, xs) -> tuple:
    """Outcome pairs for F = {xs}:1 + {xs}:-1 and for F + *.

    Only heads of height <= 1 are admitted; the interesting split is that
    F + * is a misère P-position exactly when xs minus {0,1} is star-closed.
    Returns ((o+(F), o-(F)), (o+(F+*), o-(F+*))).
    """
    xs = frozenset(xs)
    height = 0
    while height in xs:
        height += 1
    if height > 1:
        raise ValueError("the counterexample family needs mex(xs) <= 1")
    f = engine.position(engine.mutant(xs, 1), engine.mutant(xs, -1))
    f_star = add_star(engine, f)
    return (
        (engine.normal.outcome(f), engine.misere.outcome(f)),
        (engine.normal.outcome(f_star), engine.misere.outcome(f_star)),
    )
