"""
Error types raised by the model checker.\n
Every error derives from `EpikitError` so callers (the CLI above all) can catch the family at once.
Report-valued operations (dynamic model validation, fuzzing, check runs) return their findings instead of raising.
"""
from typing import Any, Iterable, Sequence


class EpikitError(Exception):
    pass

# =========================
# Formulas
# =========================

class FormulaSyntaxError(EpikitError):
    def __init__(self, text: str, position: int, line: int, column: int, expected: Iterable[str]):
        self.text = text
        self.position = position
        self.line = line
        self.column = column
        self.expected = sorted(set(expected))
        hint = f", expected one of: {', '.join(self.expected)}" if self.expected else ""
        super().__init__(f"Syntax error at line {line}, column {column}{hint}")


class UnknownIdentifier(EpikitError):
    kind = "identifier"

    def __init__(self, name: Any, kind: str | None = None):
        self.name = name
        if kind is not None:
            self.kind = kind
        super().__init__(f"Unknown {self.kind}: {name}")


class UnknownAction(UnknownIdentifier):
    kind = "action"


class UnknownWorld(UnknownIdentifier):
    kind = "world"


class UnsupportedFragment(EpikitError):
    pass


class FragmentMismatch(EpikitError):
    pass


class FuelExhausted(EpikitError):
    pass


class MissingBinding(EpikitError):
    def __init__(self, schema: str, name: str):
        self.schema = schema
        self.name = name
        super().__init__(f"Schema {schema} needs a binding for '{name}'")

# =========================
# Models
# =========================

class EmptyModel(EpikitError):
    pass


class EmptyRestriction(EpikitError):
    pass


class EmptyActionSet(EpikitError):
    pass


class EmptyProduct(EpikitError):
    pass


class NameCollision(EpikitError):
    def __init__(self, names: Sequence[str]):
        self.names = list(names)
        super().__init__(f"Action names used by more than one action model: {', '.join(self.names)}")


class C1Violation(EpikitError):
    def __init__(self, violations: Sequence[Any]):
        self.violations = list(violations)
        detail = "; ".join(str(v) for v in self.violations)
        super().__init__(f"Dynamic model is not well-formed: {detail}")


class UnboundActionModel(EpikitError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Action model '{name}' is not bound in this context")

# =========================
# Scenarios and output
# =========================

class ScenarioParseError(EpikitError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{where}")


class ScenarioValidationError(EpikitError):
    def __init__(self, message: str, witness: Any = None):
        self.witness = witness
        super().__init__(message if witness is None else f"{message}: {witness}")


class ExportError(EpikitError):
    pass
