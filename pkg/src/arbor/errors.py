"""Error model shared by every stage of the compiler.

Every failure that can reach a user — from the CLI or the compile service —
is a DiagramError subclass carrying a stable machine-readable code and, when
the failure is tied to a place in the source text, a 1-based line/column.
The wire shape is always ``{code, message, line, column}``.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ErrorRecord:
    """The serialized form of a DiagramError."""

    code: str
    message: str
    line: int | None = None
    column: int | None = None

    def to_dict(self) -> dict:
        return {
            "code": self.code,
            "message": self.message,
            "line": self.line,
            "column": self.column,
        }


class DiagramError(Exception):
    """Base class for all compile-pipeline failures."""

    code = "DiagramError"

    def __init__(self, message: str, *, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    @property
    def record(self) -> ErrorRecord:
        return ErrorRecord(self.code, self.message, self.line, self.column)


class DiagramSyntaxError(DiagramError):
    code = "SyntaxError"


class UnsupportedConstruct(DiagramError):
    code = "UnsupportedConstruct"


class StructureMismatch(DiagramError):
    code = "StructureMismatch"


class DuplicateNode(DiagramError):
    code = "DuplicateNode"


class EmptyDiagram(DiagramError):
    code = "EmptyDiagram"


class NotATree(DiagramError):
    code = "NotATree"


class ArityExceeded(DiagramError):
    code = "ArityExceeded"

    def __init__(self, message: str, *, node_id: str, **kw):
        super().__init__(message, **kw)
        self.node_id = node_id


class PositionConflict(DiagramError):
    code = "PositionConflict"


class NotAChain(DiagramError):
    code = "NotAChain"


class NonNumericValue(DiagramError):
    code = "NonNumericValue"

    def __init__(self, message: str, *, element_id: str, **kw):
        super().__init__(message, **kw)
        self.element_id = element_id


class UnknownNode(DiagramError):
    code = "UnknownNode"


class EmptyTree(DiagramError):
    code = "EmptyTree"


class JsonSyntaxError(DiagramError):
    code = "JsonSyntax"


class SchemaViolation(DiagramError):
    code = "SchemaViolation"


class IrViolation(DiagramError):
    code = "IrViolation"

    def __init__(self, message: str, *, violations=(), **kw):
        super().__init__(message, **kw)
        self.violations = tuple(violations)


class LabelTooLong(DiagramError):
    code = "LabelTooLong"


class UntranscribableCharacter(DiagramError):
    code = "UntranscribableCharacter"


class PageOverflow(DiagramError):
    code = "PageOverflow"


class UnsupportedStructure(DiagramError):
    code = "UnsupportedStructure"
