"""Exception hierarchy shared by every module."""


class DVError(Exception):
    """Base class for all errors raised by the toolkit."""


class DomainError(DVError, ValueError):
    """An argument lies outside the domain of the operation."""


class ContractError(DVError):
    """An input contract or an internal structural claim was violated."""


class MatrixParseError(DVError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class RefusalError(DVError):
    """The operation declines to run; ``verdict`` carries a known answer if any."""

    def __init__(self, message: str, verdict: bool | None = None):
        self.verdict = verdict
        super().__init__(message)
