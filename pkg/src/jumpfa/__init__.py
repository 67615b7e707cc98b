"""Executable semantics for one-way jumping finite automata.

Seven models interpret the same rule set: letter-rule ``rowj``/``lowj``,
generalized linear ``grl``/``gll``, generalized circular ``grc``/``glc``
and the unrestricted ``gjfa`` baseline.
"""

from ._kernel import DEFAULT_BACKEND as KERNEL_BACKEND
from .core import (
    RETURN,
    Automaton,
    CircularConfig,
    LinearConfig,
    ModelKind,
    Rule,
    StepResult,
    Trace,
    check_model_compatibility,
    rule_words_of,
    validate_automaton,
)
from .engine import (
    LanguageSample,
    SearchStats,
    accepts,
    enumerate_language,
    reachable_configurations,
    search,
    trace,
)
from .errors import (
    AlphabetMismatch,
    BoundViolation,
    BudgetExceeded,
    DeterminismViolation,
    EmptyRuleWord,
    IncompleteDfa,
    JumpfaError,
    ModelMismatch,
    ParseError,
    UnknownOracle,
    UnknownState,
    UnknownSymbol,
    WordOverAlphabet,
)
from .fileformat import dump_automaton, load_automaton, parse_automaton
from .oracles import DiffReport, diff_sample, oracle, predicate_sample
from .transforms import (
    Dfa,
    import_dfa,
    reverse_automaton,
    sample_concat,
    sample_intersect,
    sample_reverse,
    sample_star,
    sample_union,
)

__version__ = "0.1.0"


__all__ = [
    "KERNEL_BACKEND",
    "RETURN",
    "Automaton",
    "CircularConfig",
    "LinearConfig",
    "ModelKind",
    "Rule",
    "StepResult",
    "Trace",
    "check_model_compatibility",
    "rule_words_of",
    "validate_automaton",
    "LanguageSample",
    "SearchStats",
    "accepts",
    "enumerate_language",
    "reachable_configurations",
    "search",
    "trace",
    "AlphabetMismatch",
    "BoundViolation",
    "BudgetExceeded",
    "DeterminismViolation",
    "EmptyRuleWord",
    "IncompleteDfa",
    "JumpfaError",
    "ModelMismatch",
    "ParseError",
    "UnknownOracle",
    "UnknownState",
    "UnknownSymbol",
    "WordOverAlphabet",
    "dump_automaton",
    "load_automaton",
    "parse_automaton",
    "DiffReport",
    "diff_sample",
    "oracle",
    "predicate_sample",
    "Dfa",
    "import_dfa",
    "reverse_automaton",
    "sample_concat",
    "sample_intersect",
    "sample_reverse",
    "sample_star",
    "sample_union",
    "__version__",
]
