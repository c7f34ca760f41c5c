"""Exception types shared across the package."""


class QSphereError(Exception):
    """Base class for errors raised by this package."""


class DegreeCapError(QSphereError, ArithmeticError):
    """A product produced a monomial beyond the configured degree cap."""


class ScalarZeroDivision(QSphereError, ZeroDivisionError):
    """Inversion or division by the zero scalar."""


class PoleError(QSphereError, ArithmeticError):
    """Evaluation at a point where the denominator vanishes."""


class RankMismatch(QSphereError, ValueError):
    """Module vectors, forms or connections of incompatible rank."""


class PreconditionError(QSphereError, ValueError):
    """An exactly-checked precondition (idempotence, hermiticity, ...) failed."""


class ParseError(QSphereError, ValueError):
    """Lexing or parsing failure; ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
