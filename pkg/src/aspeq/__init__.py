"""Equivalence checking for propositional disjunctive logic programs.

The library decides ordinary, strong, uniform, and relativized
strong/uniform equivalence under answer-set semantics, enumerates the
model-theoretic characterizations (SE-, UE-, A-SE-, A-UE-models), and
produces counterexample witnesses when equivalence fails.
"""

from .syntax import Atom, Rule, Program, Universe, ParseError, parse_program, render, var_of
from .semantics import (
    CapacityError,
    answer_sets,
    bound_sets,
    classical_models,
    horn_least_model,
    reduct,
    satisfies,
)
from .se import (
    decide_strong,
    decide_uniform,
    is_se_model,
    se_consequence,
    se_models,
    ue_class_check,
    ue_consequence,
    ue_models,
)
from .relativized import (
    ASEPair,
    a_minimal_models,
    ase_check_normal,
    ase_models,
    aue_check_hcf,
    aue_models,
    is_ase_model,
)
from .equivalence import (
    Verdict,
    Witness,
    brute_force_oracle,
    build_strong_witness,
    build_uniform_witness,
    decide_horn_bounded,
    decide_horn_rel,
    decide_ordinary,
    decide_rel_strong,
    decide_rel_uniform,
)
from .transforms import (
    check_shift_safe,
    eliminate_constraints_negation,
    eliminate_constraints_positive,
    is_a_hcf,
    is_hcf,
    s_r,
    shift_one,
    shift_program,
    shift_rule,
)
from .classify import ProgramClass, classify
from .harness import GeneratorConfig, SweepReport, exhaustive_sweep, random_program

__all__ = [
    "ASEPair",
    "Atom",
    "CapacityError",
    "GeneratorConfig",
    "ParseError",
    "Program",
    "ProgramClass",
    "Rule",
    "SweepReport",
    "Universe",
    "Verdict",
    "Witness",
    "a_minimal_models",
    "answer_sets",
    "ase_check_normal",
    "ase_models",
    "aue_check_hcf",
    "aue_models",
    "bound_sets",
    "brute_force_oracle",
    "build_strong_witness",
    "build_uniform_witness",
    "check_shift_safe",
    "classical_models",
    "classify",
    "decide_horn_bounded",
    "decide_horn_rel",
    "decide_ordinary",
    "decide_rel_strong",
    "decide_rel_uniform",
    "decide_strong",
    "decide_uniform",
    "eliminate_constraints_negation",
    "eliminate_constraints_positive",
    "exhaustive_sweep",
    "horn_least_model",
    "is_a_hcf",
    "is_ase_model",
    "is_hcf",
    "is_se_model",
    "parse_program",
    "random_program",
    "reduct",
    "render",
    "s_r",
    "satisfies",
    "se_consequence",
    "se_models",
    "shift_one",
    "shift_program",
    "shift_rule",
    "ue_class_check",
    "ue_consequence",
    "ue_models",
    "var_of",
]
