"""Normal-play solver: outcomes, order comparison, canonical forms, Grundy
values, and the atomic-weight bracket checks used by the hardness gadgets.

The solver works on positions (multisets of component forms).  Impartial
components are collapsed to their Grundy value and folded into a single nim
accumulator — sound under normal play by the Sprague-Grundy theorem — so a
position is explored as (partizan components, nim value).  Moves on the nim
accumulator are resolved through a per-state ascending scan that finds the
least losing nim target once and reuses it for every larger accumulator.
"""

from __future__ import annotations

from bisect import insort
from typing import Optional

from .forms import Arena, Dyadic, FormId, Position, mutant_parts, wildflower_parts
from .outcomes import LEFT, RIGHT, OutcomeClass


class NormalSolver:
    def __init__(self, arena: Arena) -> None:
        self.arena = arena
        self._grundy: dict = {}
        self._win: dict = {}  # (partizan comps, nim value, side) -> mover wins
        self._scan: dict = {}  # (partizan comps, side) -> [next k, least losing k]
        self._canon: dict = {}

    # ------------------------------------------------------------------
    # Grundy values
    # ------------------------------------------------------------------

    def grundy(self, g: FormId) -> int:
        """Grundy value of an impartial form."""
        arena = self.arena
        hit = self._grundy.get(g)
        if hit is not None:
            return hit
        k = arena.nimber_index(g)
        if k is not None:
            self._grundy[g] = k
            return k
        if not arena.is_impartial(g):
            raise ValueError("grundy value requires an impartial form")
        seen = {self.grundy(o) for o in arena.left(g)}
        v = 0
        while v in seen:
            v += 1
        self._grundy[g] = v
        return v

    def grundy_position(self, p: Position) -> int:
        v = 0
        for c in p:
            v ^= self.grundy(c)
        return v

    # ------------------------------------------------------------------
    # Outcome engine
    # ------------------------------------------------------------------

    def _split(self, p: Position) -> tuple:
        comps: list = []
        v = 0
        for c in p:
            if self.arena.is_impartial(c):
                v ^= self.grundy(c)
            else:
                comps.append(c)
        return tuple(sorted(comps)), v

    def win_first(self, p: Position, side: int) -> bool:
        """Does `side` win moving first in the position (normal play)?"""
        comps, v = self._split(p)
        return self._win_state(comps, v, side)

    def _win_state(self, comps: tuple, v: int, side: int) -> bool:
        key = (comps, v, side)
        hit = self._win.get(key)
        if hit is not None:
            return hit
        arena = self.arena
        opp = 1 - side
        result = False
        for i, c in enumerate(comps):
            rest = comps[:i] + comps[i + 1 :]
            for o in arena.options(c, side):
                if arena.is_impartial(o):
                    child, cv = rest, v ^ self.grundy(o)
                else:
                    lst = list(rest)
                    insort(lst, o)
                    child, cv = tuple(lst), v
                if not self._win_state(child, cv, opp):
                    result = True
                    break
            if result:
                break
        if not result and v:
            result = self._nim_move_wins(comps, v, opp)
        self._win[key] = result
        return result

    def _nim_move_wins(self, comps: tuple, v: int, opp: int) -> bool:
        """Is some nim target k < v a loss for the opponent moving next?

        The scan state per (comps, opp) advances k upward once, globally;
        re-entrant advances (the recursion below can reach this same state)
        are reconciled by always keeping the least losing k.
        """
        st = self._scan.setdefault((comps, opp), [0, None])
        while True:
            if st[1] is not None and st[1] < v:
                return True
            k = st[0]
            if k >= v:
                return False
            losing = not self._win_state(comps, k, opp)
            if losing:
                st[1] = k if st[1] is None else min(st[1], k)
            if st[0] == k:
                st[0] = k + 1

    def outcome(self, p: Position) -> OutcomeClass:
        return OutcomeClass.from_first_wins(
            self.win_first(p, LEFT), self.win_first(p, RIGHT)
        )

    def outcome_form(self, g: FormId) -> OutcomeClass:
        return self.outcome(self.arena.position(g))

    # ------------------------------------------------------------------
    # Order
    # ------------------------------------------------------------------

    def leq_positions(self, p: Position, q: Position) -> bool:
        """p <= q iff Right loses moving first in q + conjugate(p)."""
        diff = self.arena.position(*q, *self.arena.conjugate_position(p))
        return not self.win_first(diff, RIGHT)

    def leq(self, g: FormId, h: FormId) -> bool:
        return self.leq_positions(self.arena.position(g), self.arena.position(h))

    def eq(self, g: FormId, h: FormId) -> bool:
        return self.leq(g, h) and self.leq(h, g)

    def eq_positions(self, p: Position, q: Position) -> bool:
        return self.leq_positions(p, q) and self.leq_positions(q, p)

    def lt_positions(self, p: Position, q: Position) -> bool:
        return self.leq_positions(p, q) and not self.leq_positions(q, p)

    # ------------------------------------------------------------------
    # Canonical form
    # ------------------------------------------------------------------

    def canonical(self, g: FormId) -> FormId:
        """Unique simplest normal-play form: remove dominated options and
        bypass reversible ones until a fixpoint."""
        hit = self._canon.get(g)
        if hit is not None:
            return hit
        arena = self.arena
        lefts = sorted({self.canonical(o) for o in arena.left(g)})
        rights = sorted({self.canonical(o) for o in arena.right(g)})
        gpos = arena.position(g)
        for _ in range(10_000):
            # dominated options: keep Left's maximal, Right's minimal
            lefts = [
                a
                for a in lefts
                if not any(b != a and self.leq(a, b) for b in lefts)
            ]
            rights = [
                a
                for a in rights
                if not any(b != a and self.leq(b, a) for b in rights)
            ]
            changed = False
            new_lefts: list = []
            for a in lefts:
                rev = next(
                    (
                        r
                        for r in arena.right(a)
                        if self.leq_positions(arena.position(r), gpos)
                    ),
                    None,
                )
                if rev is None:
                    new_lefts.append(a)
                else:
                    new_lefts.extend(self.canonical(o) for o in arena.left(rev))
                    changed = True
            new_rights: list = []
            for a in rights:
                rev = next(
                    (
                        l
                        for l in arena.left(a)
                        if self.leq_positions(gpos, arena.position(l))
                    ),
                    None,
                )
                if rev is None:
                    new_rights.append(a)
                else:
                    new_rights.extend(self.canonical(o) for o in arena.right(rev))
                    changed = True
            lefts = sorted(set(new_lefts))
            rights = sorted(set(new_rights))
            if not changed:
                break
        else:  # pragma: no cover - termination is guaranteed by theory
            raise RuntimeError("canonicalization did not converge")
        out = arena.intern(lefts, rights)
        self._canon[g] = out
        self._canon[out] = out
        return out

    def nimber_value(self, g: FormId) -> Optional[int]:
        """Index k with g normal-equal to *k, if any (via the canonical form)."""
        return self.arena.nimber_index(self.canonical(g))

    # ------------------------------------------------------------------
    # Ordinal-sum bookkeeping checks
    # ------------------------------------------------------------------

    def colon_check(self, g: FormId, h: FormId) -> bool:
        """Does Grundy(g:h) equal Grundy(g) + Grundy(h) (integer sum)?"""
        if not (self.arena.is_impartial(g) and self.arena.is_impartial(h)):
            raise ValueError("colon_check requires impartial forms")
        return self.grundy(self.arena.ordinal_sum(g, h)) == self.grundy(
            g
        ) + self.grundy(h)

    # ------------------------------------------------------------------
    # Atomic-weight brackets and flower counting
    # ------------------------------------------------------------------

    def _bracket_indices(self, g: FormId) -> int:
        parts = mutant_parts(self.arena, g)
        if parts is not None:
            return max(parts[0])
        return max(
            (
                self.arena.nimber_index(s) or 0
                for s in self.arena.subpositions(g)
            ),
            default=0,
        )

    def verify_aw_pm1(self, g: FormId, sign: int, n: int) -> bool:
        """Check the remote-star bracket certifying atomic weight ±1:
        for sign +1, *n + down < g + down < *n + up (strictly); the -1 case
        is the mirror image.  n must clear the head indices by 3."""
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if n < self._bracket_indices(g) + 3:
            raise ValueError(f"remote star {n} too small for this flower")
        arena = self.arena
        if sign == -1:
            return self.verify_aw_pm1(arena.conjugate(g), 1, n)
        star_n = arena.nimber(n)
        dn, up = arena.down(), arena.up()
        low = arena.position(star_n, dn)
        mid = arena.position(g, dn)
        high = arena.position(star_n, up)
        return self.lt_positions(low, mid) and self.lt_positions(mid, high)

    def flower_count_aw(self, p: Position) -> int:
        """(number of blue flowers) - (number of red flowers) in a sum of
        colorful wildflowers and impartial components."""
        total = 0
        for c in p:
            if self.arena.is_impartial(c):
                continue
            parts = wildflower_parts(self.arena, c)
            if parts is None:
                raise ValueError("component is not a wildflower or impartial")
            out = self.outcome_form(parts[1])
            if out is OutcomeClass.L:
                total += 1
            elif out is OutcomeClass.R:
                total -= 1
            else:
                raise ValueError("wildflower component is not colorful")
        return total
