"""One-stop bundle of an arena plus both play-convention solvers."""

from __future__ import annotations

from .forms import Arena, Dyadic, FormId, Position
from .misere import MisereSolver
from .normal import NormalSolver


class Engine:
    """An arena with a normal-play and a misère-play solver attached.

    The two solvers share the arena but nothing else; their memo tables are
    disjoint by construction, so results under one convention can never leak
    into the other.
    """

    def __init__(self) -> None:
        self.arena = Arena()
        self.normal = NormalSolver(self.arena)
        self.misere = MisereSolver(self.arena, self.normal)

    # -- convenience builders ------------------------------------------------

    def nimber(self, n: int) -> FormId:
        return self.arena.nimber(n)

    @property
    def star(self) -> FormId:
        return self.arena.star

    @property
    def zero(self) -> FormId:
        return self.arena.zero

    def number(self, value) -> FormId:
        return self.arena.number(value)

    def position(self, *components: FormId) -> Position:
        return self.arena.position(*components)

    def sprig(self, a) -> FormId:
        """*:a — a star with a dyadic stem on top."""
        return self.arena.ordinal_sum(self.star, self.number(a))

    def flower(self, n: int, a) -> FormId:
        """*n:a."""
        return self.arena.ordinal_sum(self.nimber(n), self.number(a))

    def superstar(self, xs) -> FormId:
        """The impartial form whose options are exactly {*x : x in xs}."""
        opts = tuple(self.nimber(x) for x in sorted(set(xs)))
        if not opts:
            raise ValueError("a superstar needs at least one option")
        return self.arena.intern(opts, opts)

    def mutant(self, xs, a) -> FormId:
        """{*x1,...,*xn}:a."""
        return self.arena.ordinal_sum(self.superstar(xs), self.number(a))

    def parse(self, text: str) -> Position:
        from .notation import parse_expr

        return parse_expr(self.arena, text)

    def format(self, p: Position) -> str:
        from .notation import format_position

        return format_position(self.arena, p)
