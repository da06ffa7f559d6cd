"""Supercongruence verification toolkit.

Thin re-export of the compiled ``_supercong`` extension.
"""

from ._supercong import *  # noqa: F401,F403
from ._supercong import (  # noqa: F401
    BadResidueClass,
    CheckRecord,
    Error,
    InvalidArgument,
    NegativeValuation,
    NotInvertible,
    QuadraticPartition,
    RangeExhausted,
    UnknownKind,
    WrongResidueClass,
)

__version__ = "0.1.0"
