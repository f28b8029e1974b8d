"""Exception hierarchy shared by every module."""


class LpStabError(Exception):
    """Base class for all errors raised by lpstab."""


class InputError(LpStabError, ValueError):
    """Malformed input: wrong shapes, non-finite values, mismatched spaces."""


class DomainError(LpStabError, ValueError):
    """Well-formed input outside the domain where an inequality is stated."""


class ZeroFunctionError(DomainError):
    """A function that must have positive norm is identically zero."""


class UnsupportedCaseError(DomainError):
    """A case for which no result is proved (complex values with p < 2)."""


class DegenerateSumError(DomainError):
    """f + h vanishes identically, so angles against f + h are undefined."""
