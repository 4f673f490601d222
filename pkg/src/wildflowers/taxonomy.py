"""Wildflower and mutant-flower taxonomy: colors, star-closure, restricted
fickle/firm classification, and admissible-top membership.

A wildflower is an ordinal sum (impartial base):(any top).  A mutant flower
is the special case where the base's options are all nimbers and the top is
a dyadic number; its *height* is the mex of the head indices.  The
*restricted* classes add star-closure conditions on the option sets of all
fickle subpositions of the base; they are what the twin-selection kernels
are made of.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from .engine import Engine
from .forms import (
    Dyadic,
    FormId,
    mutant_parts,
    superstar_indices,
    wildflower_parts,
)
from .misere import TamenessClass
from .outcomes import OutcomeClass


class Color(Enum):
    """Color of a wildflower by the normal-play outcome of its top:
    Blue for L, Red for R, Green for P, Neutral for N."""

    BLUE = "blue"
    RED = "red"
    GREEN = "green"
    NEUTRAL = "neutral"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Wildflower:
    base: FormId
    top: FormId
    whole: FormId


@dataclass(frozen=True)
class MutantFlower:
    """{*x1,...,*xn}:a together with its height and membership report.

    ``member`` says whether the flower lies in the certified twin class:
    automatic for height > 1, and otherwise requires xs minus {0,1} to be
    star-closed (as nimber indices).
    """

    xs: frozenset
    a: Dyadic
    height: int
    form: FormId
    member: bool

    @property
    def firm_head(self) -> bool:
        """Whether the head is a firm impartial game (misère genus n^n).

        A superstar head is fickle exactly when it has a move to 0 or to *
        but not both: then its normal and misère Grundy values disagree.
        With both (height > 1) or neither present the genus is n^n and the
        head anchors its sum inside the kernel.
        """
        return self.height > 1 or not (self.xs & {0, 1})


# ============================================================================
# Constructors and recognizers
# ============================================================================


def wildflower(engine: Engine, base: FormId, top: FormId) -> Wildflower:
    arena = engine.arena
    if base == arena.zero or not arena.is_impartial(base):
        raise ValueError("a wildflower needs a nonzero impartial base")
    return Wildflower(base, top, arena.ordinal_sum(base, top))


def as_wildflower(engine: Engine, g: FormId) -> Optional[Wildflower]:
    parts = wildflower_parts(engine.arena, g)
    if parts is None:
        return None
    return Wildflower(parts[0], parts[1], g)


def star_closed_indices(xs: Iterable[int]) -> bool:
    """Nimber-set star closure: indices closed under xor with 1."""
    s = set(xs)
    return all(x ^ 1 in s for x in s)


def mutant_flower(engine: Engine, xs, a) -> MutantFlower:
    xs = frozenset(xs)
    if not xs:
        raise ValueError("a mutant flower needs a nonempty head")
    if not isinstance(a, Dyadic):
        a = Dyadic(a) if isinstance(a, int) else Dyadic.parse(str(a))
    height = _mex(xs)
    member = height > 1 or star_closed_indices(xs - {0, 1})
    return MutantFlower(xs, a, height, engine.mutant(xs, a), member)


def as_mutant_flower(engine: Engine, g: FormId) -> Optional[MutantFlower]:
    parts = mutant_parts(engine.arena, g)
    if parts is None:
        return None
    xs, a = parts
    return mutant_flower(engine, xs, a)


def _mex(xs) -> int:
    s = set(xs)
    v = 0
    while v in s:
        v += 1
    return v


# ============================================================================
# Colors
# ============================================================================


def color(engine: Engine, w: Wildflower) -> Color:
    out = engine.normal.outcome_form(w.top)
    if out is OutcomeClass.L:
        return Color.BLUE
    if out is OutcomeClass.R:
        return Color.RED
    if out is OutcomeClass.P:
        return Color.GREEN
    return Color.NEUTRAL


def is_colorful(engine: Engine, w: Wildflower) -> bool:
    return color(engine, w) in (Color.BLUE, Color.RED)


# ============================================================================
# Star-closure of option sets
# ============================================================================


def is_star_closed(engine: Engine, forms: Iterable[FormId]) -> bool:
    """Is the set closed under adding * (up to normal-play equality)?"""
    forms = list(forms)
    idxs = [engine.arena.nimber_index(g) for g in forms]
    if all(k is not None for k in idxs):
        return star_closed_indices(idxs)
    star = engine.star
    normal = engine.normal
    for g in forms:
        bumped = engine.position(g, star)
        if not any(
            normal.eq_positions(bumped, engine.position(h)) for h in forms
        ):
            return False
    return True


# ============================================================================
# Restricted fickle / firm
# ============================================================================


def _fickle_subpositions_admissible(engine: Engine, g: FormId) -> bool:
    """Every fickle subposition must have a star-closed option set; the
    literal singleton {0} (the option set of *) is also admitted."""
    arena = engine.arena
    zero_only = (arena.zero,)
    for s in arena.subpositions(g):
        if engine.misere._own_tameness(s) is not TamenessClass.FICKLE:
            continue
        opts = arena.left(s)
        if not opts or opts == zero_only:
            continue
        if not is_star_closed(engine, opts):
            return False
    return True


def is_restricted_fickle(engine: Engine, g: FormId) -> bool:
    if not engine.arena.is_impartial(g):
        raise ValueError("restricted fickleness is defined for impartial forms")
    if engine.misere.classify_tameness(g) is not TamenessClass.FICKLE:
        return False
    return _fickle_subpositions_admissible(engine, g)


def is_restricted_firm(engine: Engine, g: FormId) -> bool:
    if not engine.arena.is_impartial(g):
        raise ValueError("restricted firmness is defined for impartial forms")
    if engine.misere.classify_tameness(g) is not TamenessClass.FIRM:
        return False
    return _fickle_subpositions_admissible(engine, g)


# ============================================================================
# Admissible tops
# ============================================================================


def in_R(engine: Engine, h: FormId, i: int, hereditary: bool = False):
    """Membership of a top in the admissible class for a base of Grundy
    value i: h must not be a first-player normal win, and each first-player
    -win option must be normal-equal to a nimber, with the index sets,
    shifted by i (integer addition), star-closed on both sides.

    Returns True/False, or None when some relevant option is not normal-equal
    to any nimber and membership cannot be decided here.  With hereditary=True
    the same test is applied to every subposition of h.
    """
    if i not in (0, 1):
        raise ValueError("the base Grundy value must be 0 or 1")
    arena = engine.arena
    normal = engine.normal
    if hereditary:
        result = True
        for s in arena.subpositions(h):
            sub = in_R(engine, s, i, hereditary=False)
            if sub is False:
                return False
            if sub is None:
                result = None
        return result
    if normal.outcome_form(h) is OutcomeClass.N:
        return False
    for side in (0, 1):
        indices = []
        for o in arena.options(h, side):
            if normal.outcome_form(o) is not OutcomeClass.N:
                continue
            v = normal.nimber_value(o)
            if v is None:
                return None
            indices.append(v + i)
        if not star_closed_indices(indices):
            return False
    return True


def is_restricted_fickle_wildflower(engine: Engine, w: Wildflower):
    """True/False, or None when the top's admissibility is undecidable."""
    if not is_restricted_fickle(engine, w.base):
        return False
    return in_R(engine, w.top, engine.normal.grundy(w.base))


def is_restricted_firm_wildflower(engine: Engine, w: Wildflower) -> bool:
    return is_restricted_firm(engine, w.base)


# ============================================================================
# Component classification for twin selection
# ============================================================================


class ComponentClass(Enum):
    """Where a summand sits relative to the wildflower kernel."""

    FICKLE = "restricted-fickle"
    FIRM = "restricted-firm"

    def __str__(self) -> str:
        return self.value


def classify_component(engine: Engine, g: FormId) -> Optional[ComponentClass]:
    """Classify one summand as restricted fickle (outside the kernel),
    restricted firm (inside), or None when neither can be certified."""
    arena = engine.arena
    if arena.is_impartial(g):
        if is_restricted_fickle(engine, g):
            return ComponentClass.FICKLE
        if is_restricted_firm(engine, g):
            return ComponentClass.FIRM
        return None
    parts = wildflower_parts(arena, g)
    if parts is None:
        return None
    base, top = parts
    if base == arena.zero or not arena.is_impartial(base):
        return None
    if is_restricted_firm(engine, base):
        return ComponentClass.FIRM
    if is_restricted_fickle(engine, base):
        if in_R(engine, top, engine.normal.grundy(base)) is True:
            return ComponentClass.FICKLE
    return None
