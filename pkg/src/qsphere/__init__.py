"""Exact q-deformed differential geometry on S³_q and the Podleś sphere."""
from .algebra import A, AS, C, CS, ONE, ZERO, AlgebraElement, elem
from .errors import (
    DegreeCapError,
    ParseError,
    PoleError,
    PreconditionError,
    QSphereError,
    RankMismatch,
    ScalarZeroDivision,
)
from .kernel import BACKEND
from .parser import parse_element, parse_scalar
from .scalar import QScalar, qint

__all__ = [
    "A", "AS", "C", "CS", "ONE", "ZERO", "AlgebraElement", "elem",
    "QScalar", "qint", "parse_element", "parse_scalar", "BACKEND",
    "QSphereError", "DegreeCapError", "ParseError", "PoleError",
    "PreconditionError", "RankMismatch", "ScalarZeroDivision",
]
