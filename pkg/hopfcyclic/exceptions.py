"""
hopfcyclic Exception Classes
"""

from typing import Any, Dict, Optional


class HopfCyclicError(Exception):
    """Base exception"""

    def __init__(self, message: str, source_file: Optional[str] = None,
                 line: Optional[int] = None, context: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.source_file = source_file
        self.line = line
        self.context = context or {}

    def __str__(self) -> str:
        parts = [self.message]
        if self.source_file:
            parts.append(f"File: {self.source_file}")
        if self.line is not None:
            parts.append(f"Line: {self.line}")
        return " - ".join(parts)


class ParseError(HopfCyclicError):
    """Presentation or dump file could not be read"""

    def __init__(self, message: str, source_file: Optional[str] = None,
                 line: Optional[int] = None, field: Optional[str] = None,
                 token: Optional[str] = None):
        super().__init__(message, source_file, line)
        self.field = field
        self.token = token

    def __str__(self) -> str:
        result = super().__str__()
        if self.field:
            result += f" - Field: {self.field}"
        if self.token:
            result += f" - Token: {self.token}"
        return result


class SingularMap(HopfCyclicError):
    """A map that must be invertible is not"""

    def __init__(self, message: str, degree: Optional[int] = None,
                 rank: Optional[int] = None, dimension: Optional[int] = None):
        super().__init__(message)
        self.degree = degree
        self.rank = rank
        self.dimension = dimension

    def __str__(self) -> str:
        result = super().__str__()
        if self.degree is not None:
            result += f" - Degree: {self.degree}"
        if self.rank is not None and self.dimension is not None:
            result += f" - Rank: {self.rank}/{self.dimension}"
        return result


class DoesNotDescend(HopfCyclicError):
    """A map does not respect the relations of a quotient or the constraints of a subspace"""

    def __init__(self, message: str, witness: Optional[str] = None):
        super().__init__(message)
        self.witness = witness

    def __str__(self) -> str:
        result = super().__str__()
        if self.witness:
            result += f" - Witness: {self.witness}"
        return result


class MissingInverse(HopfCyclicError):
    """An inverse (antipode inverse, Phi^-1, i^-1, w^-1) is required but absent"""

    def __init__(self, message: str, structure: Optional[str] = None):
        super().__init__(message)
        self.structure = structure

    def __str__(self) -> str:
        result = super().__str__()
        if self.structure:
            result += f" - Structure: {self.structure}"
        return result


class KindMismatch(HopfCyclicError):
    """Coefficient or datum of the wrong kind"""

    def __init__(self, message: str, expected: Optional[str] = None,
                 actual: Optional[str] = None):
        super().__init__(message)
        self.expected = expected
        self.actual = actual

    def __str__(self) -> str:
        result = super().__str__()
        if self.expected:
            result += f" - Expected: {self.expected}"
        if self.actual:
            result += f" - Actual: {self.actual}"
        return result


class PrerequisiteMissing(HopfCyclicError):
    """A family needs data the presentation does not provide"""

    def __init__(self, message: str, family: Optional[str] = None,
                 missing: Optional[str] = None):
        super().__init__(message)
        self.family = family
        self.missing = missing

    def __str__(self) -> str:
        result = super().__str__()
        if self.family:
            result += f" - Family: {self.family}"
        if self.missing:
            result += f" - Missing: {self.missing}"
        return result


class DimensionGuard(HopfCyclicError):
    """A space would exceed the configured dimension cap"""

    def __init__(self, message: str, dimension: int, limit: int):
        super().__init__(message)
        self.dimension = dimension
        self.limit = limit

    def __str__(self) -> str:
        return f"{super().__str__()} - Dimension: {self.dimension} - Limit: {self.limit}"


class FieldMismatch(HopfCyclicError):
    """Operands live over different ground fields"""

    def __init__(self, message: str, left: Optional[str] = None,
                 right: Optional[str] = None):
        super().__init__(message)
        self.left = left
        self.right = right

    def __str__(self) -> str:
        result = super().__str__()
        if self.left and self.right:
            result += f" - Fields: {self.left} vs {self.right}"
        return result


class ConfigurationError(HopfCyclicError):
    """Configuration error"""

    def __init__(self, message: str, config_key: Optional[str] = None):
        super().__init__(message)
        self.config_key = config_key

    def __str__(self) -> str:
        result = super().__str__()
        if self.config_key:
            result += f" - Config key: {self.config_key}"
        return result
