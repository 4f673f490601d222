"""Exact combinatorial-game toolkit for wildflowers and their evil twins.

The library solves short partizan games under both normal and misère play,
classifies wildflower and mutant-flower positions, selects and verifies
misère "evil twin" forms per family, and builds the 3-SAT hardness
reduction over mutant-flower sums.
"""

from .engine import Engine
from .forms import (
    Arena,
    Dyadic,
    FormId,
    Position,
    flower_parts,
    mutant_parts,
    superstar_indices,
    wildflower_parts,
)
from .misere import Genus, MisereSolver, TamenessClass
from .normal import NormalSolver
from .notation import ParseError, format_form, format_position, parse_expr
from .outcomes import LEFT, RIGHT, OutcomeClass
from .reduction import (
    AssignmentWitness,
    CnfFormula,
    ReductionOutput,
    ToveyReport,
    all_tovey_instances,
    build_reduction,
    parse_dimacs,
    random_tovey,
    sat_bruteforce,
    validate_tovey,
    verify_equivalence,
    xor_cover,
)
from .suites import SuiteResult, hereditarily_tame_forms, run_family_suite
from .taxonomy import (
    Color,
    ComponentClass,
    MutantFlower,
    Wildflower,
    as_mutant_flower,
    as_wildflower,
    classify_component,
    color,
    in_R,
    is_restricted_fickle,
    is_restricted_fickle_wildflower,
    is_restricted_firm,
    is_restricted_firm_wildflower,
    is_star_closed,
    mutant_flower,
    star_closed_indices,
    wildflower,
)
from .twins import (
    EvillyNormalReport,
    FamilyRule,
    TwinReport,
    counterexample_outcomes,
    kernel_member_wildflowers,
    kernel_winning_move_check,
    position_in_kernel,
    twin_of,
    verify_evil_twin,
    verify_evilly_normal,
    winning_move_results,
)

__version__ = "0.1.0"

__all__ = [
    "Arena",
    "AssignmentWitness",
    "CnfFormula",
    "Color",
    "ComponentClass",
    "Dyadic",
    "Engine",
    "EvillyNormalReport",
    "FamilyRule",
    "FormId",
    "Genus",
    "LEFT",
    "MisereSolver",
    "MutantFlower",
    "NormalSolver",
    "OutcomeClass",
    "ParseError",
    "Position",
    "ReductionOutput",
    "RIGHT",
    "SuiteResult",
    "TamenessClass",
    "ToveyReport",
    "TwinReport",
    "Wildflower",
    "all_tovey_instances",
    "as_mutant_flower",
    "as_wildflower",
    "build_reduction",
    "classify_component",
    "color",
    "counterexample_outcomes",
    "flower_parts",
    "format_form",
    "format_position",
    "hereditarily_tame_forms",
    "in_R",
    "is_restricted_fickle",
    "is_restricted_fickle_wildflower",
    "is_restricted_firm",
    "is_restricted_firm_wildflower",
    "is_star_closed",
    "kernel_member_wildflowers",
    "kernel_winning_move_check",
    "mutant_flower",
    "mutant_parts",
    "parse_dimacs",
    "parse_expr",
    "position_in_kernel",
    "random_tovey",
    "run_family_suite",
    "sat_bruteforce",
    "star_closed_indices",
    "superstar_indices",
    "twin_of",
    "validate_tovey",
    "verify_equivalence",
    "verify_evil_twin",
    "verify_evilly_normal",
    "wildflower",
    "wildflower_parts",
    "winning_move_results",
    "xor_cover",
]
