"""Outcome classes shared by the normal- and misère-play solvers."""

from __future__ import annotations

from enum import Enum

LEFT = 0
RIGHT = 1


class OutcomeClass(Enum):
    """Who wins with best play: L/R win regardless of who starts, N the
    first player, P the second player."""

    L = "L"
    R = "R"
    N = "N"
    P = "P"

    def __str__(self) -> str:
        return self.value

    @staticmethod
    def from_first_wins(left_first: bool, right_first: bool) -> "OutcomeClass":
        if left_first:
            return OutcomeClass.N if right_first else OutcomeClass.L
        return OutcomeClass.R if right_first else OutcomeClass.P

    def conjugate(self) -> "OutcomeClass":
        if self is OutcomeClass.L:
            return OutcomeClass.R
        if self is OutcomeClass.R:
            return OutcomeClass.L
        return self

    def geq(self, other: "OutcomeClass") -> bool:
        """Partial order on outcomes: L on top, R on bottom, N and P
        incomparable in the middle."""
        if self is other:
            return True
        if self is OutcomeClass.L:
            return True
        if other is OutcomeClass.R:
            return True
        return False
