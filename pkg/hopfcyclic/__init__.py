"""
hopfcyclic

Exact construction and verification of para-cocyclic and para-cyclic modules
built from Hopf algebroid data, together with the functorial machinery behind
them and their Connes duals.

Key Features:
- Exact linear algebra over the rationals and prime fields
- Hopf algebroid presentations, validators and shipped fixtures
- Sixteen families of para-(co)cyclic complexes from closed formulas
- Generic construction through monads, comonads and distributive laws
- Connes duality, the tau comparison and pairing checks
- Command-line and library interfaces

Example usage:
    from hopfcyclic import build_family, builtin, check_laws, make_coefficient, make_datum

    H = builtin("kc2")
    X = make_datum(H, "module-algebra-left", "adjoint")
    M = make_coefficient(H, "comodule-left", "trivial")
    records = check_laws(build_family("A1", H, X, M, top=2))
"""

from .config import EngineConfig
from .duality import connes_hat, pairing_check, tau_compare, triangle
from .exceptions import (
    DimensionGuard,
    DoesNotDescend,
    HopfCyclicError,
    KindMismatch,
    MissingInverse,
    ParseError,
    PrerequisiteMissing,
    SingularMap,
)
from .families import build_family
from .fixtures import builtin, make_coefficient, make_datum
from .functors import build_generic, realize, validate_laws
from .models import CheckRecord, Report
from .paracyc import ParaComplex, check_laws
from .serializer import dump_complex, load_complex, load_presentation

__version__ = "1.0.0"
__all__ = [
    "EngineConfig",
    "HopfCyclicError",
    "ParseError",
    "SingularMap",
    "DoesNotDescend",
    "MissingInverse",
    "KindMismatch",
    "PrerequisiteMissing",
    "DimensionGuard",
    "builtin",
    "make_datum",
    "make_coefficient",
    "build_family",
    "realize",
    "build_generic",
    "validate_laws",
    "ParaComplex",
    "check_laws",
    "connes_hat",
    "triangle",
    "tau_compare",
    "pairing_check",
    "CheckRecord",
    "Report",
    "load_presentation",
    "dump_complex",
    "load_complex",
]
