"""Exception types shared across the package."""


class JanowskiError(Exception):
    """Base class for every package-specific error."""


class ZeroConstantTerm(JanowskiError):
    """Division by a series whose constant term vanishes."""


class NonzeroInnerConstant(JanowskiError):
    """Composition with an inner series that does not vanish at the origin."""


class DomainError(JanowskiError):
    """Constant-term precondition of exp/log/rational power violated."""


class NotNormalized(JanowskiError):
    """Operation requires a normalized series: f(0) = 0 and f'(0) = 1."""


class ZeroIndex(JanowskiError):
    """Index n = 0 requested where only n != 0 is defined."""


class ParameterOutOfRange(JanowskiError):
    """Schwarz-family parameter outside its legal range."""


class InvalidSpec(JanowskiError):
    """Class specification outside every supported parameter regime."""


class NonSchwarz(JanowskiError):
    """Series used as a Schwarz function does not vanish at the origin."""


class RegimeError(JanowskiError):
    """Bound evaluated outside the parameter regime it is proved for."""


class ConditionNotMet(JanowskiError):
    """Power-coefficient bound requested below its validity threshold."""


class ConfigError(JanowskiError):
    """Malformed or inconsistent suite configuration."""
