"""Exception hierarchy shared by every layer of the workbench."""


class WindlabError(Exception):
    """Base class for all errors raised by the workbench."""


class WordSyntaxError(WindlabError, ValueError):
    """Malformed word text; `position` is the 0-based offset of the fault."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class LaurentSyntaxError(WindlabError, ValueError):
    """Text that does not denote a Laurent polynomial in X and Y."""


class CoefficientOverflowError(WindlabError, ArithmeticError):
    """A coefficient left the signed 64-bit range."""


class NotInCommutatorSubgroupError(WindlabError, ValueError):
    """A word with nonzero exponent sums was given where [F,F] is required."""


class RankError(WindlabError, ValueError):
    """An operation defined on the rank-2 free group met other generators."""


class DimensionError(WindlabError, ValueError):
    """Matrix shapes do not fit the requested operation."""


class NonUnitError(WindlabError, ValueError):
    """A Laurent polynomial expected to be a unit of R is not one."""


class InvalidMoveError(WindlabError, ValueError):
    """A move cannot be applied to the given presentation."""


class InvalidFactorError(WindlabError, ValueError):
    """A GE factor violates its shape or unit constraints."""


class CertificateIndexError(WindlabError, IndexError):
    """A certificate step refers to a relator the presentation does not have."""


class PreconditionError(WindlabError, ValueError):
    """An operation was called outside its documented precondition."""


class FileFormatError(WindlabError, ValueError):
    """A presentation, script or certificate file line could not be read; `line` is 1-based."""

    def __init__(self, message: str, line: int, path: str = ""):
        self.message = message
        self.line = line
        self.path = path
        where = f"{path}:{line}" if path else f"line {line}"
        super().__init__(f"{where}: {message}")
