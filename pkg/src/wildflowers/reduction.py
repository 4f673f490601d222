"""Hardness reduction from restricted 3-SAT to sums of mutant flowers.

The input class is Tovey-restricted CNF: every variable occurs exactly three
times — once positive (clause r), twice negative (clauses s < t) — and every
clause has 2 or 3 literals.  Each variable becomes a red mutant flower X_i
whose head encodes the clause incidences as nimber indices

    a = 2^r,  b = 2^s + 2^t,  c = 2^s,  d = 2^t,  big = 2^(m+i),

plus one blue sprig *:1 per variable and a tail nimber *(2^(m+1) - 2).  The
formula is satisfiable iff per-variable head choices from {0, a, b, c, d}
can xor to the tail index, iff Left wins the built position moving second
under normal play.  All three routes are implemented so they can be checked
against each other.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .engine import Engine
from .forms import FormId, Position
from .outcomes import OutcomeClass


# ============================================================================
# CNF formulas
# ============================================================================


@dataclass(frozen=True)
class CnfFormula:
    """CNF with clauses of length 2 or 3 over variables 1..num_vars.

    Clauses are tuples of signed 1-based variable indices.
    """

    num_vars: int
    clauses: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        for clause in self.clauses:
            if len(clause) not in (2, 3):
                raise ValueError(f"clause length {len(clause)} not in {{2, 3}}")
            seen = set()
            for lit in clause:
                if lit == 0:
                    raise ValueError("literal 0 is not allowed")
                var = abs(lit)
                if var > self.num_vars:
                    raise ValueError(f"variable {var} out of range")
                if var in seen:
                    raise ValueError(f"variable {var} repeated in a clause")
                seen.add(var)

    def is_satisfied_by(self, assignment) -> bool:
        """assignment[i-1] is the truth value of variable i."""
        return all(
            any(assignment[abs(l) - 1] == (l > 0) for l in clause)
            for clause in self.clauses
        )


def parse_dimacs(text: str) -> CnfFormula:
    """Standard DIMACS CNF: 'p cnf <vars> <clauses>' then zero-terminated
    clauses; 'c' lines are comments."""
    header = None
    tokens: list = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if header is not None:
                raise ValueError("duplicate DIMACS header")
            m = re.fullmatch(r"p\s+cnf\s+(\d+)\s+(\d+)", line)
            if m is None:
                raise ValueError(f"malformed DIMACS header: {line!r}")
            header = (int(m.group(1)), int(m.group(2)))
            continue
        if header is None:
            raise ValueError("clause data before DIMACS header")
        for tok in line.split():
            try:
                tokens.append(int(tok))
            except ValueError:
                raise ValueError(f"bad literal token: {tok!r}") from None
    if header is None:
        raise ValueError("missing DIMACS header")
    clauses: list = []
    current: list = []
    for tok in tokens:
        if tok == 0:
            clauses.append(tuple(current))
            current = []
        else:
            current.append(tok)
    if current:
        raise ValueError("last clause is not zero-terminated")
    if not clauses:
        raise ValueError("no clauses in DIMACS input")
    return CnfFormula(header[0], tuple(clauses))


# ============================================================================
# Tovey validation
# ============================================================================


@dataclass(frozen=True)
class VarOccurrences:
    var: int
    positive: tuple  # 1-based clause numbers containing +var
    negative: tuple  # 1-based clause numbers containing -var, sorted
    ok: bool

    @property
    def rst(self) -> tuple:
        if not self.ok:
            raise ValueError(f"variable {self.var} is not in Tovey form")
        return self.positive[0], self.negative[0], self.negative[1]


@dataclass(frozen=True)
class ToveyReport:
    ok: bool
    occurrences: tuple
    odd_var_count: bool
    problems: tuple


def validate_tovey(f: CnfFormula, allow_even: bool = False) -> ToveyReport:
    """Check the once-positive/twice-negative occurrence pattern.  An even
    variable count is reported, and rejected unless allow_even."""
    problems: list = []
    occs: list = []
    for var in range(1, f.num_vars + 1):
        pos = tuple(
            i for i, c in enumerate(f.clauses, start=1) if var in c
        )
        neg = tuple(
            i for i, c in enumerate(f.clauses, start=1) if -var in c
        )
        ok = len(pos) == 1 and len(neg) == 2
        if not ok:
            problems.append(
                f"variable {var} occurs {len(pos)} times positive and "
                f"{len(neg)} times negative (want 1 and 2)"
            )
        occs.append(VarOccurrences(var, pos, neg, ok))
    odd = f.num_vars % 2 == 1
    if not odd and not allow_even:
        problems.append(f"variable count {f.num_vars} is even")
    ok = all(o.ok for o in occs) and (odd or allow_even)
    return ToveyReport(ok, tuple(occs), odd, tuple(problems))


# ============================================================================
# Gadget construction
# ============================================================================


@dataclass(frozen=True)
class VarGadget:
    index: int
    r: int
    s: int
    t: int
    a: int
    b: int
    c: int
    d: int
    big: int
    xs: frozenset
    form: FormId


@dataclass(frozen=True)
class ReductionOutput:
    formula: CnfFormula
    gadgets: tuple
    y_count: int
    y_form: FormId
    tail_index: int
    tail_form: FormId
    position: Position

    @property
    def target(self) -> int:
        return self.tail_index


def build_reduction(
    engine: Engine, f: CnfFormula, allow_even: bool = False
) -> ReductionOutput:
    report = validate_tovey(f, allow_even=allow_even)
    if not report.ok:
        raise ValueError(
            "formula is not in Tovey form: " + "; ".join(report.problems)
        )
    m = len(f.clauses)
    gadgets = []
    for occ in report.occurrences:
        r, s, t = occ.rst
        a, b, c, d = 1 << r, (1 << s) + (1 << t), 1 << s, 1 << t
        big = 1 << (m + occ.var)
        xs = frozenset({0, 1, a, b, c, d, big})
        gadgets.append(
            VarGadget(occ.var, r, s, t, a, b, c, d, big, xs, engine.mutant(xs, -1))
        )
    y_form = engine.sprig(1)
    tail_index = (1 << (m + 1)) - 2
    tail_form = engine.nimber(tail_index)
    components = [g.form for g in gadgets]
    components.extend([y_form] * f.num_vars)
    components.append(tail_form)
    return ReductionOutput(
        formula=f,
        gadgets=tuple(gadgets),
        y_count=f.num_vars,
        y_form=y_form,
        tail_index=tail_index,
        tail_form=tail_form,
        position=engine.position(*components),
    )


# ============================================================================
# Covers, witnesses, brute force
# ============================================================================


@dataclass(frozen=True)
class AssignmentWitness:
    choices: tuple  # per-variable head choice from {0, a, b, c, d}
    assignment: tuple  # variable i true iff choices[i-1] == a_i

    def trace(self, m: int) -> tuple:
        """Running nim values N_0..N_n with N_i = l_1 xor ... xor l_i xor
        (2^(m+1) - 2)."""
        n = (1 << (m + 1)) - 2
        out = [n]
        for c in self.choices:
            n ^= c
            out.append(n)
        return tuple(out)


def xor_cover(f: CnfFormula) -> Optional[AssignmentWitness]:
    """Find per-variable choices l_i in {0, a_i, b_i, c_i, d_i} with xor
    equal to 2^(m+1) - 2, by a backward feasibility pass and a forward
    greedy pass preferring a, b, c, d, 0 in that order."""
    report = validate_tovey(f, allow_even=True)
    if not all(o.ok for o in report.occurrences):
        raise ValueError("formula is not in Tovey form")
    m = len(f.clauses)
    per_var = []
    for occ in report.occurrences:
        r, s, t = occ.rst
        per_var.append((1 << r, (1 << s) + (1 << t), 1 << s, 1 << t, 0))
    feasible = [None] * (f.num_vars + 1)
    feasible[f.num_vars] = {0}
    for i in range(f.num_vars - 1, -1, -1):
        feasible[i] = {v ^ c for v in feasible[i + 1] for c in per_var[i]}
    target = (1 << (m + 1)) - 2
    if target not in feasible[0]:
        return None
    rest = target
    choices = []
    for i, options in enumerate(per_var):
        pick = next(c for c in options if rest ^ c in feasible[i + 1])
        choices.append(pick)
        rest ^= pick
    assignment = tuple(
        choices[i] == per_var[i][0] for i in range(f.num_vars)
    )
    return AssignmentWitness(tuple(choices), assignment)


def sat_bruteforce(f: CnfFormula) -> Optional[tuple]:
    """First satisfying assignment by exhaustive search, or None."""
    if f.num_vars > 24:
        raise ValueError("brute-force SAT is capped at 24 variables")
    for mask in range(1 << f.num_vars):
        assignment = tuple(bool(mask >> i & 1) for i in range(f.num_vars))
        if f.is_satisfied_by(assignment):
            return assignment
    return None


def verify_equivalence(
    engine: Engine, f: CnfFormula, mode: str = "oracle", allow_even: bool = False
) -> bool:
    """oracle: brute-force SAT iff an xor cover exists.  full_game: brute-
    force SAT iff Left wins the built position moving second under normal
    play (bounded to n <= 3, m <= 4)."""
    sat = sat_bruteforce(f) is not None
    if mode == "oracle":
        return sat == (xor_cover(f) is not None)
    if mode != "full_game":
        raise ValueError(f"unknown verification mode: {mode}")
    if f.num_vars > 3 or len(f.clauses) > 4:
        raise ValueError("full-game verification is bounded to n <= 3, m <= 4")
    out = build_reduction(engine, f, allow_even=allow_even)
    left_wins_second = engine.normal.outcome(out.position) in (
        OutcomeClass.L,
        OutcomeClass.P,
    )
    return sat == left_wins_second


# ============================================================================
# Instance generation (for sweeps and searches)
# ============================================================================


def _formula_from_rst(n: int, m: int, rst: list) -> Optional[CnfFormula]:
    clauses: list = [[] for _ in range(m)]
    for var, (r, s, t) in enumerate(rst, start=1):
        clauses[r - 1].append(var)
        clauses[s - 1].append(-var)
        clauses[t - 1].append(-var)
    if any(len(c) not in (2, 3) for c in clauses):
        return None
    return CnfFormula(n, tuple(tuple(c) for c in clauses))


def all_tovey_instances(n: int, m: int) -> Iterator[CnfFormula]:
    """Every Tovey-form instance with n variables and m clauses, enumerated
    by per-variable (r, {s,t}) placements."""
    placements = [
        (r, s, t)
        for r in range(1, m + 1)
        for s, t in combinations([c for c in range(1, m + 1) if c != r], 2)
    ]
    def rec(var: int, chosen: list) -> Iterator[CnfFormula]:
        if var > n:
            built = _formula_from_rst(n, m, chosen)
            if built is not None:
                yield built
            return
        for p in placements:
            chosen.append(p)
            yield from rec(var + 1, chosen)
            chosen.pop()
    yield from rec(1, [])


def random_tovey(n: int, m: int, rng) -> CnfFormula:
    """A uniformly sampled-ish Tovey instance via rejection."""
    clause_ids = list(range(1, m + 1))
    for _ in range(100_000):
        rst = []
        for _var in range(n):
            r = rng.choice(clause_ids)
            s, t = sorted(rng.sample([c for c in clause_ids if c != r], 2))
            rst.append((r, s, t))
        built = _formula_from_rst(n, m, rst)
        if built is not None:
            return built
    raise RuntimeError(f"could not sample a Tovey instance with n={n}, m={m}")
