"""Interned game forms and the structural operations on them.

A *form* is a literal game tree ``{left options | right options}``.  Forms
live in an :class:`Arena` that hash-conses them: two forms get the same
integer handle exactly when their trees are identical, so structural equality
is pointer equality and every derived table can be keyed on small ints.

A *position* is a sorted tuple of form handles read as a multiset of
components played as a disjunctive sum.  The empty position is the game 0;
literal-0 components are dropped on construction (they contribute no moves
under either play convention).
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

FormId = int
Position = tuple  # sorted tuple of FormId

# Deep forms (long nimber chains) are built and walked recursively in places;
# the default CPython limit is too tight for e.g. *2048.
sys.setrecursionlimit(max(sys.getrecursionlimit(), 100_000))


# ============================================================================
# Dyadic rationals
# ============================================================================


@dataclass(frozen=True)
class Dyadic:
    """A dyadic rational num / 2**exp, kept in lowest terms (num odd or exp 0)."""

    num: int
    exp: int = 0

    def __post_init__(self) -> None:
        if self.exp < 0:
            raise ValueError("denominator exponent must be >= 0")
        num, exp = self.num, self.exp
        while exp > 0 and num % 2 == 0:
            num //= 2
            exp -= 1
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "exp", exp)

    # -- parsing / formatting ------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "Dyadic":
        text = text.strip()
        if "/" in text:
            p, q = text.split("/", 1)
            den = int(q)
            if den <= 0 or den & (den - 1):
                raise ValueError(f"denominator {den} is not a power of two")
            return cls(int(p), den.bit_length() - 1)
        return cls(int(text))

    def __str__(self) -> str:
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/{1 << self.exp}"

    def to_json(self) -> dict:
        return {"num": self.num, "den_exp": self.exp}

    # -- arithmetic-ish helpers ---------------------------------------------

    @property
    def is_integer(self) -> bool:
        return self.exp == 0

    @property
    def sign(self) -> int:
        return (self.num > 0) - (self.num < 0)

    def _pair(self, other: "Dyadic") -> tuple:
        return self.num << other.exp, other.num << self.exp

    def __lt__(self, other: "Dyadic") -> bool:
        a, b = self._pair(other)
        return a < b

    def __le__(self, other: "Dyadic") -> bool:
        a, b = self._pair(other)
        return a <= b

    def parents(self) -> tuple:
        """Canonical-form option values: (left parent, right parent).

        Integers have a single parent toward zero; a non-integer p/2**q has
        parents (p-1)/2**q and (p+1)/2**q.  ``None`` marks an empty side.
        """
        if self.exp == 0:
            if self.num == 0:
                return None, None
            if self.num > 0:
                return Dyadic(self.num - 1), None
            return None, Dyadic(self.num + 1)
        return Dyadic(self.num - 1, self.exp), Dyadic(self.num + 1, self.exp)

    @staticmethod
    def between(lo: "Dyadic", hi: "Dyadic") -> "Dyadic":
        """Midpoint of two dyadics (exact)."""
        e = max(lo.exp, hi.exp)
        total = (lo.num << (e - lo.exp)) + (hi.num << (e - hi.exp))
        return Dyadic(total, e + 1)


ZERO_DYADIC = Dyadic(0)


# ============================================================================
# The arena
# ============================================================================


class Arena:
    """Hash-consing store for game forms plus memoized structural operations.

    Handles index into parallel option tables.  All operations that build
    forms go through :meth:`intern`, which sorts and deduplicates each option
    list, so identical trees always share a handle.
    """

    def __init__(self) -> None:
        self._left: list = []
        self._right: list = []
        self._index: dict = {}

        self._conj: dict = {}
        self._ordsum: dict = {}
        self._ordparts: dict = {}  # whole id -> (base, top), first build wins
        self._sumtree: dict = {}
        self._subs: dict = {}
        self._birthday: dict = {}
        self._impartial: dict = {}

        self.zero: FormId = self.intern((), ())
        self._nimber_ids: list = [self.zero]
        self._nimber_of: dict = {self.zero: 0}
        self._not_nimber: set = set()
        self._number_ids: dict = {ZERO_DYADIC: self.zero}
        self._number_of: dict = {self.zero: ZERO_DYADIC}
        self._not_number: set = set()

    # -- construction --------------------------------------------------------

    def intern(self, left: Iterable[FormId], right: Iterable[FormId]) -> FormId:
        """Return the handle for {left | right}, creating it if needed."""
        size = len(self._left)
        lt = tuple(sorted(set(left)))
        rt = tuple(sorted(set(right)))
        for o in lt + rt:
            if not isinstance(o, int) or not 0 <= o < size:
                raise ValueError(f"unknown form handle: {o!r}")
        key = (lt, rt)
        hit = self._index.get(key)
        if hit is not None:
            return hit
        gid = size
        self._left.append(lt)
        self._right.append(rt)
        self._index[key] = gid
        return gid

    def left(self, g: FormId) -> tuple:
        return self._left[g]

    def right(self, g: FormId) -> tuple:
        return self._right[g]

    def options(self, g: FormId, side: int) -> tuple:
        """Options for side 0 (Left) or 1 (Right)."""
        return self._left[g] if side == 0 else self._right[g]

    def __len__(self) -> int:
        return len(self._left)

    # -- atoms ---------------------------------------------------------------

    def nimber(self, n: int) -> FormId:
        """*n = {0, *, ..., *(n-1) | same}; *0 is 0."""
        if n < 0:
            raise ValueError("nimber index must be >= 0")
        ids = self._nimber_ids
        while len(ids) <= n:
            opts = tuple(ids)
            g = self.intern(opts, opts)
            self._nimber_of.setdefault(g, len(ids))
            ids.append(g)
        return ids[n]

    @property
    def star(self) -> FormId:
        return self.nimber(1)

    def number(self, value) -> FormId:
        """Canonical form of a dyadic rational (accepts int, str or Dyadic)."""
        if isinstance(value, int):
            value = Dyadic(value)
        elif isinstance(value, str):
            value = Dyadic.parse(value)
        hit = self._number_ids.get(value)
        if hit is not None:
            return hit
        if value.is_integer:
            # build the integer ladder iteratively from 0
            n = value.num
            step = 1 if n > 0 else -1
            g = self.zero
            for k in range(step, n + step, step):
                d = Dyadic(k)
                nxt = self._number_ids.get(d)
                if nxt is None:
                    nxt = (
                        self.intern((g,), ()) if step > 0 else self.intern((), (g,))
                    )
                    self._number_ids[d] = nxt
                    self._number_of.setdefault(nxt, d)
                g = nxt
            return g
        lo, hi = value.parents()
        g = self.intern((self.number(lo),), (self.number(hi),))
        self._number_ids[value] = g
        self._number_of.setdefault(g, value)
        return g

    def up(self) -> FormId:
        return self.intern((self.zero,), (self.star,))

    def down(self) -> FormId:
        return self.intern((self.star,), (self.zero,))

    # -- recognizers ---------------------------------------------------------

    def nimber_index(self, g: FormId) -> Optional[int]:
        """n if g is literally *n (options exactly *0..*(n-1), both sides)."""
        hit = self._nimber_of.get(g)
        if hit is not None:
            return hit
        if g in self._not_nimber or self._left[g] != self._right[g]:
            self._not_nimber.add(g)
            return None
        idxs = set()
        for o in self._left[g]:
            k = self.nimber_index(o)
            if k is None:
                self._not_nimber.add(g)
                return None
            idxs.add(k)
        n = len(self._left[g])
        if idxs != set(range(n)):
            self._not_nimber.add(g)
            return None
        # Hash-consing makes the canonical *n tree unique, so this handle is
        # the one nimber(n) builds; register it under both recognizer maps.
        self._nimber_of[g] = n
        return n

    def number_value(self, g: FormId) -> Optional[Dyadic]:
        """The value of g if g is literally a canonical number form."""
        hit = self._number_of.get(g)
        if hit is not None:
            return hit
        if g in self._not_number:
            return None
        left, right = self._left[g], self._right[g]
        if len(left) > 1 or len(right) > 1:
            self._not_number.add(g)
            return None
        lo = self.number_value(left[0]) if left else None
        hi = self.number_value(right[0]) if right else None
        if (left and lo is None) or (right and hi is None):
            self._not_number.add(g)
            return None
        if lo is not None and hi is not None:
            value = Dyadic.between(lo, hi)
            if value.parents() != (lo, hi):
                self._not_number.add(g)
                return None
        elif lo is not None:
            if not lo.is_integer or lo.num < 0:
                self._not_number.add(g)
                return None
            value = Dyadic(lo.num + 1)
        else:
            if not hi.is_integer or hi.num > 0:
                self._not_number.add(g)
                return None
            value = Dyadic(hi.num - 1)
        self._number_of[g] = value
        self._number_ids.setdefault(value, g)
        return value

    def ordinal_parts(self, g: FormId) -> Optional[tuple]:
        """(base, top) if g was built as a nondegenerate ordinal sum."""
        return self._ordparts.get(g)

    # -- structural operations ----------------------------------------------

    def conjugate(self, g: FormId) -> FormId:
        """Mirror image: swap Left and Right everywhere."""
        if self.is_impartial(g):
            return g
        hit = self._conj.get(g)
        if hit is not None:
            return hit
        out = self.intern(
            tuple(self.conjugate(o) for o in self._right[g]),
            tuple(self.conjugate(o) for o in self._left[g]),
        )
        self._conj[g] = out
        self._conj[out] = g
        return out

    def ordinal_sum(self, base: FormId, top: FormId) -> FormId:
        """base : top — moves in the base wipe out what remains of the top."""
        if top == self.zero:
            return base
        if base == self.zero:
            return top
        key = (base, top)
        hit = self._ordsum.get(key)
        if hit is not None:
            return hit
        out = self.intern(
            self._left[base] + tuple(self.ordinal_sum(base, t) for t in self._left[top]),
            self._right[base] + tuple(self.ordinal_sum(base, t) for t in self._right[top]),
        )
        self._ordsum[key] = out
        self._ordparts.setdefault(out, key)
        return out

    def sum_form(self, g: FormId, h: FormId) -> FormId:
        """Disjunctive sum as a single literal tree (mostly for tests)."""
        if g == self.zero:
            return h
        if h == self.zero:
            return g
        key = (g, h) if g <= h else (h, g)
        hit = self._sumtree.get(key)
        if hit is not None:
            return hit
        out = self.intern(
            tuple(self.sum_form(o, h) for o in self._left[g])
            + tuple(self.sum_form(g, o) for o in self._left[h]),
            tuple(self.sum_form(o, h) for o in self._right[g])
            + tuple(self.sum_form(g, o) for o in self._right[h]),
        )
        self._sumtree[key] = out
        return out

    def subpositions(self, g: FormId) -> frozenset:
        """All forms reachable by sequences of moves, g included."""
        hit = self._subs.get(g)
        if hit is not None:
            return hit
        seen = set()
        stack = [g]
        while stack:
            t = stack.pop()
            if t in seen:
                continue
            seen.add(t)
            stack.extend(self._left[t])
            stack.extend(self._right[t])
        out = frozenset(seen)
        self._subs[g] = out
        return out

    def birthday(self, g: FormId) -> int:
        hit = self._birthday.get(g)
        if hit is not None:
            return hit
        # iterative post-order to keep the stack shallow on long chains
        stack = [g]
        while stack:
            t = stack[-1]
            if t in self._birthday:
                stack.pop()
                continue
            pending = [
                o for o in self._left[t] + self._right[t] if o not in self._birthday
            ]
            if pending:
                stack.extend(pending)
                continue
            stack.pop()
            kids = self._left[t] + self._right[t]
            self._birthday[t] = 1 + max(
                (self._birthday[o] for o in kids), default=-1
            )
        return self._birthday[g]

    def is_impartial(self, g: FormId) -> bool:
        """Literal impartiality: both option lists identical, hereditarily."""
        hit = self._impartial.get(g)
        if hit is not None:
            return hit
        stack = [g]
        while stack:
            t = stack[-1]
            if t in self._impartial:
                stack.pop()
                continue
            if self._left[t] != self._right[t]:
                self._impartial[t] = False
                stack.pop()
                continue
            pending = [o for o in self._left[t] if o not in self._impartial]
            if pending:
                stack.extend(pending)
                continue
            stack.pop()
            self._impartial[t] = all(self._impartial[o] for o in self._left[t])
        return self._impartial[g]

    # -- positions -----------------------------------------------------------

    def position(self, *components: FormId) -> Position:
        """Multiset of components; zeros dropped, order normalized."""
        z = self.zero
        return tuple(sorted(c for c in components if c != z))

    def position_of(self, components: Iterable[FormId]) -> Position:
        return self.position(*components)

    def conjugate_position(self, p: Position) -> Position:
        return self.position(*(self.conjugate(c) for c in p))


# ============================================================================
# Flower-shaped decompositions
# ============================================================================


def superstar_indices(arena: Arena, g: FormId) -> Optional[frozenset]:
    """Nimber indices of g's options if g is impartial with all options
    nimbers (a *superstar*; includes the nimbers themselves).  None otherwise
    or when g is 0."""
    if g == arena.zero or not arena.is_impartial(g):
        return None
    idxs = []
    for o in arena.left(g):
        k = arena.nimber_index(o)
        if k is None:
            return None
        idxs.append(k)
    return frozenset(idxs)


def _recover_top(arena: Arena, g: FormId, head: FormId, head_opts: frozenset):
    """Number a with g == head:a, walking the stem; None if the shape breaks."""
    if g == head:
        return ZERO_DYADIC
    left, right = arena.left(g), arena.right(g)
    l_extra = [o for o in left if o not in head_opts]
    r_extra = [o for o in right if o not in head_opts]
    if len(l_extra) > 1 or len(r_extra) > 1:
        return None
    if len(left) - len(l_extra) != len(head_opts) or len(right) - len(r_extra) != len(
        head_opts
    ):
        return None
    lo = _recover_top(arena, l_extra[0], head, head_opts) if l_extra else None
    hi = _recover_top(arena, r_extra[0], head, head_opts) if r_extra else None
    if l_extra and lo is None or r_extra and hi is None:
        return None
    if lo is not None and hi is not None:
        return Dyadic.between(lo, hi)
    if lo is not None:
        if not lo.is_integer or lo.num < 0:
            return None
        return Dyadic(lo.num + 1)
    if hi is not None:
        if not hi.is_integer or hi.num > 0:
            return None
        return Dyadic(hi.num - 1)
    return None


def mutant_parts(arena: Arena, g: FormId) -> Optional[tuple]:
    """Decompose g as a mutant flower {*x1,...,*xn} : a with a dyadic.

    Returns (xs, a) with xs a frozenset of nimber indices, or None.  A bare
    superstar (nimbers included) decomposes with a = 0.  The match is
    verified by rebuilding the ordinal sum, so false positives are impossible.
    """
    if g == arena.zero:
        return None
    if arena.is_impartial(g):
        xs = superstar_indices(arena, g)
        return (xs, ZERO_DYADIC) if xs else None
    # The head's options are exactly the nimbers appearing on *both* sides
    # (stem remnants are never symmetric).
    right = set(arena.right(g))
    xs = []
    for o in arena.left(g):
        if o in right and arena.nimber_index(o) is not None:
            xs.append(arena.nimber_index(o))
    if not xs:
        return None
    head_opts = tuple(arena.nimber(x) for x in sorted(xs))
    head = arena.intern(head_opts, head_opts)
    a = _recover_top(arena, g, head, frozenset(head_opts))
    if a is None:
        return None
    if arena.ordinal_sum(head, arena.number(a)) != g:
        return None
    return frozenset(xs), a


def flower_parts(arena: Arena, g: FormId) -> Optional[tuple]:
    """(n, a) if g is literally the flower *n : a with n >= 1."""
    parts = mutant_parts(arena, g)
    if parts is None:
        return None
    xs, a = parts
    n = len(xs)
    if xs != frozenset(range(n)):
        return None
    return n, a


def wildflower_parts(arena: Arena, g: FormId) -> Optional[tuple]:
    """(base, top) for a wildflower: impartial nonzero base, any top.

    Mutant-flower shapes are recognized structurally; other ordinal sums are
    found through the arena's construction registry (forms built via ':').
    """
    parts = mutant_parts(arena, g)
    if parts is not None:
        xs, a = parts
        head_opts = tuple(arena.nimber(x) for x in sorted(xs))
        return arena.intern(head_opts, head_opts), arena.number(a)
    reg = arena.ordinal_parts(g)
    if reg is not None and arena.is_impartial(reg[0]):
        return reg
    return None
