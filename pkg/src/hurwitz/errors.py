"""Exception hierarchy shared by every module of the package."""


class HurwitzError(Exception):
    pass


class RingMismatchError(HurwitzError, ValueError):
    """Operands live over different coefficient rings."""


class PrecisionError(HurwitzError, ValueError):
    """Not enough known coefficients to carry out the operation."""


class NotInvertibleError(HurwitzError, ArithmeticError):
    pass


class DomainError(HurwitzError, ValueError):
    """Argument outside the domain of a partial operation (e.g. exp off H0)."""


class CapabilityError(HurwitzError, ValueError):
    """The coefficient ring lacks a required capability (e.g. 1/n for all n)."""


class NotASolutionError(HurwitzError, ValueError):
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class ConfigError(HurwitzError, ValueError):
    pass
