class PicodError(Exception):
    pass


class ParameterError(PicodError, ValueError):
    pass


class DimensionMismatch(PicodError, ValueError):
    pass


class InfeasibleInstance(PicodError):
    """No valid code exists; ``clause`` names the impossibility condition hit."""

    def __init__(self, clause: str):
        super().__init__(f"infeasible: {clause}")
        self.clause = clause


class Unsupported(PicodError):
    pass


class SchemeError(PicodError):
    """A constructor produced a code that failed certification."""


class NoSchemeFound(PicodError):
    pass


class CapExceeded(PicodError):
    pass
