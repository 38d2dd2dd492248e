"""Pommaret bases of polynomial ideals and the invariants read off them.

Conventions: exponent vectors are tuples indexed x1..xn, the term order is
reverse lexicographic with x1 < x2 < ... < xn, and the class of a term is the
index of its first variable.
"""

__version__ = "0.1.0"

from .groebner import GroebnerBasis, buchberger  # noqa: E402
from .involutive import (  # noqa: E402
    CompletionOutcome,
    DeltaSingular,
    DeltaSingularError,
    PommaretBasis,
    closure_check,
    involutive_normal_form,
    pommaret_basis,
    pommaret_complete,
)
from .monomial import MonomialIdeal, MonomialPommaretBasis, is_quasi_stable, is_stable  # noqa: E402
from .parser import parse_ideal_file  # noqa: E402
from .polynomial import Polynomial  # noqa: E402
from .ring import LinearChange, Ring  # noqa: E402
from .terms import TermOrder  # noqa: E402

__all__ = [
    "CompletionOutcome",
    "DeltaSingular",
    "DeltaSingularError",
    "GroebnerBasis",
    "LinearChange",
    "MonomialIdeal",
    "MonomialPommaretBasis",
    "PommaretBasis",
    "Polynomial",
    "Ring",
    "TermOrder",
    "buchberger",
    "closure_check",
    "involutive_normal_form",
    "is_quasi_stable",
    "is_stable",
    "parse_ideal_file",
    "pommaret_basis",
    "pommaret_complete",
]
