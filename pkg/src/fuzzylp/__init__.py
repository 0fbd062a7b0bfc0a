"""Fuzzy logic programming with truth degrees and similarity-based unification.

Programs are rule sets over a complete lattice of truth degrees, enriched
with a similarity relation between symbols.  Queries are answered by
building derivation trees whose truth-literal leaves are the fuzzy computed
answers.
"""

from .engine import (
    FS,
    IS,
    SS,
    DerivationTree,
    FuzzyComputedAnswer,
    GoalState,
    Program,
    build_tree,
    fcas,
    fs_step,
    is_step,
    iter_answers,
    select_atom,
    ss_step,
)
from .errors import (
    EvalError,
    FuzzylpError,
    LatticeError,
    ParseError,
    SessionError,
    SimilarityError,
)
from .lattice import (
    AxiomReport,
    Connective,
    FiniteCarrier,
    Lattice,
    UnitInterval,
    builtin_unit_interval,
    check_axioms,
    parse_lattice,
)
from .parser import parse_goal, parse_program
from .session import Session
from .similarity import (
    SimilarityEquation,
    SimilarityRelation,
    close,
    identity_relation,
    parse_sim,
)
from .terms import (
    Atom,
    Compound,
    ConnApp,
    ConnectiveRef,
    FreshCounter,
    Rule,
    Substitution,
    Symbol,
    TruthLit,
    Var,
    format_value,
    rename_apart,
    variables,
)
from .unification import UnifState, WmguResult, occurs, step, transition_states, weak_unify

__version__ = "0.1.0"

__all__ = [
    "Atom", "AxiomReport", "Compound", "ConnApp", "Connective", "ConnectiveRef",
    "DerivationTree", "EvalError", "FS", "FiniteCarrier", "FreshCounter",
    "FuzzyComputedAnswer", "FuzzylpError", "GoalState", "IS", "Lattice",
    "LatticeError", "ParseError", "Program", "Rule", "SS", "Session",
    "SessionError", "SimilarityEquation", "SimilarityError",
    "SimilarityRelation", "Substitution", "Symbol", "TruthLit", "UnifState",
    "UnitInterval", "Var", "WmguResult", "build_tree", "builtin_unit_interval",
    "check_axioms", "close", "fcas", "format_value", "fs_step",
    "identity_relation", "is_step", "iter_answers", "occurs", "parse_goal",
    "parse_lattice", "parse_program", "parse_sim", "rename_apart",
    "select_atom", "ss_step", "step", "transition_states", "variables",
    "weak_unify",
]
