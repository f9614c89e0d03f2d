"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`MilnorError`.
Input problems (bad syntax, unknown names) additionally derive from
``ValueError`` so callers can treat them like any other malformed argument.
"""


class MilnorError(Exception):
    """Base class for all library errors."""


class InputError(MilnorError, ValueError):
    """Malformed user input."""


class PolySyntaxError(InputError):
    """Polynomial text does not follow the grammar."""

    def __init__(self, text, position, expected):
        self.text = text
        self.position = position
        self.expected = expected
        super().__init__(f"at position {position}: expected {expected} in {text!r}")


class UnknownVariable(InputError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"unknown variable {name!r}")


class VariableMismatch(InputError):
    pass


class IndexOutOfRange(InputError, IndexError):
    pass


class ZeroPolynomial(InputError):
    pass


class NotWeightedHomogeneous(MilnorError):
    pass


class NotHomogeneous(MilnorError):
    """A polynomial is not homogeneous for the weight system it was given."""


class AmbiguousWeights(MilnorError):
    """The support of a polynomial admits a positive-dimensional family of weights."""

    def __init__(self, dimension, message=None):
        self.dimension = dimension
        super().__init__(message or f"weight system not unique (solution space of dimension {dimension})")


class DegreeUnderflow(MilnorError):
    pass


class SubsetOverflow(MilnorError):
    pass


class NotPolynomial(MilnorError):
    """Exact series division left a nonzero remainder."""

    def __init__(self, message, remainder=None):
        self.remainder = remainder
        super().__init__(message)


class NotIsolated(MilnorError):
    """The Jacobian ideal does not have finite colength."""

    def __init__(self, message, dims=None):
        self.dims = dims
        super().__init__(message)
