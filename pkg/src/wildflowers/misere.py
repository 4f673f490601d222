"""Misère-play solver: outcomes, misère Grundy values, genus, and the
tame/fickle/firm/wild classification.

Misère play is not invariant under normal-play simplification (*2 + *3 is N
while the normal-equal * is P), so this solver never canonicalizes, never
collapses impartial components, and keeps its memo tables entirely separate
from the normal-play engine.  Positions are memoized on the literal multiset
of component handles; the only normalization is dropping literal-0
components, which have no moves under either convention.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass
from enum import Enum

from .forms import Arena, FormId, Position
from .normal import NormalSolver
from .outcomes import LEFT, RIGHT, OutcomeClass


@dataclass(frozen=True)
class Genus:
    """The pair (normal Grundy value, misère Grundy value), written a^b."""

    g_plus: int
    g_minus: int

    def __str__(self) -> str:
        return f"{self.g_plus}^{self.g_minus}"

    @property
    def is_fickle(self) -> bool:
        return (self.g_plus, self.g_minus) in ((1, 0), (0, 1))

    @property
    def is_tame(self) -> bool:
        return self.is_fickle or self.g_plus == self.g_minus

    def to_json(self) -> dict:
        return {"g_plus": self.g_plus, "g_minus": self.g_minus}


class TamenessClass(Enum):
    FICKLE = "fickle"
    FIRM = "firm"
    WILD = "wild"

    def __str__(self) -> str:
        return self.value


def _mex(values) -> int:
    seen = set(values)
    v = 0
    while v in seen:
        v += 1
    return v


class MisereSolver:
    def __init__(self, arena: Arena, normal: NormalSolver) -> None:
        self.arena = arena
        self.normal = normal
        self._win: dict = {}  # (literal comps, side) -> mover wins
        self._gm: dict = {}
        self._gm_pos: dict = {}
        self._tame_own: dict = {}

    # ------------------------------------------------------------------
    # Outcome engine (literal; a player with no move wins)
    # ------------------------------------------------------------------

    def win_first(self, p: Position, side: int) -> bool:
        key = (p, side)
        hit = self._win.get(key)
        if hit is not None:
            return hit
        arena = self.arena
        opp = 1 - side
        zero = arena.zero
        result = None
        moved = False
        for i, c in enumerate(p):
            rest = p[:i] + p[i + 1 :]
            for o in arena.options(c, side):
                moved = True
                if o == zero:
                    child = rest
                else:
                    lst = list(rest)
                    insort(lst, o)
                    child = tuple(lst)
                if not self.win_first(child, opp):
                    result = True
                    break
            if result:
                break
        if result is None:
            # no winning reply; with no move at all the mover wins outright
            result = not moved
        self._win[key] = result
        # impartial positions are symmetric between the players
        if all(arena.is_impartial(c) for c in p):
            self._win.setdefault((p, opp), result)
        return result

    def outcome(self, p: Position) -> OutcomeClass:
        return OutcomeClass.from_first_wins(
            self.win_first(p, LEFT), self.win_first(p, RIGHT)
        )

    def outcome_form(self, g: FormId) -> OutcomeClass:
        return self.outcome(self.arena.position(g))

    # ------------------------------------------------------------------
    # Misère Grundy values and genus
    # ------------------------------------------------------------------

    def grundy_misere(self, g: FormId) -> int:
        """Misère Grundy value: mex over options, except that 0 has value 1."""
        hit = self._gm.get(g)
        if hit is not None:
            return hit
        arena = self.arena
        if not arena.is_impartial(g):
            raise ValueError("misère grundy value requires an impartial form")
        if g == arena.zero:
            v = 1
        else:
            v = _mex(self.grundy_misere(o) for o in arena.left(g))
        self._gm[g] = v
        return v

    def grundy_misere_position(self, p: Position) -> int:
        """Misère Grundy value of a multiset of impartial components."""
        hit = self._gm_pos.get(p)
        if hit is not None:
            return hit
        arena = self.arena
        if not p:
            v = 1
        else:
            for c in p:
                if not arena.is_impartial(c):
                    raise ValueError("misère grundy value requires impartial forms")
            values = []
            zero = arena.zero
            for i, c in enumerate(p):
                rest = p[:i] + p[i + 1 :]
                for o in arena.left(c):
                    if o == zero:
                        child = rest
                    else:
                        lst = list(rest)
                        insort(lst, o)
                        child = tuple(lst)
                    values.append(self.grundy_misere_position(child))
            v = _mex(values)
        self._gm_pos[p] = v
        return v

    def genus(self, g: FormId) -> Genus:
        return Genus(self.normal.grundy(g), self.grundy_misere(g))

    def genus_position(self, p: Position) -> Genus:
        return Genus(self.normal.grundy_position(p), self.grundy_misere_position(p))

    # ------------------------------------------------------------------
    # Tameness
    # ------------------------------------------------------------------

    def _own_tameness(self, g: FormId) -> TamenessClass:
        hit = self._tame_own.get(g)
        if hit is not None:
            return hit
        gen = self.genus(g)
        if gen.is_fickle:
            out = TamenessClass.FICKLE
        elif gen.g_plus == gen.g_minus:
            out = TamenessClass.FIRM
        else:
            out = TamenessClass.WILD
        self._tame_own[g] = out
        return out

    def classify_tameness(self, g: FormId, hereditary: bool = True) -> TamenessClass:
        """Fickle (genus 1^0 or 0^1), Firm (genus n^n), else Wild.  With
        hereditary=True a form with any wild subposition is itself Wild."""
        if not self.arena.is_impartial(g):
            raise ValueError("tameness is defined for impartial forms")
        if hereditary:
            for s in self.arena.subpositions(g):
                if self._own_tameness(s) is TamenessClass.WILD:
                    return TamenessClass.WILD
        return self._own_tameness(g)

    def is_hereditarily_tame(self, g: FormId) -> bool:
        return self.classify_tameness(g, hereditary=True) is not TamenessClass.WILD
