"""Exception hierarchy shared by every jumpfa module."""


class JumpfaError(ValueError):
    """Base class for all errors raised by jumpfa."""


class ParseError(JumpfaError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DeterminismViolation(JumpfaError):
    pass


class UnknownSymbol(JumpfaError):
    pass


class UnknownState(JumpfaError):
    pass


class EmptyRuleWord(JumpfaError):
    pass


class ModelMismatch(JumpfaError):
    def __init__(self, message, rule=None):
        super().__init__(message)
        self.rule = rule


class WordOverAlphabet(JumpfaError):
    """The input word uses a symbol outside the automaton's alphabet."""


class BudgetExceeded(JumpfaError):
    pass


class UnknownOracle(JumpfaError):
    pass


class AlphabetMismatch(JumpfaError):
    pass


class BoundViolation(JumpfaError):
    pass


class IncompleteDfa(JumpfaError):
    pass
