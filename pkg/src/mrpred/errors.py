"""Exception types raised across the pipeline."""


class MrpredError(Exception):
    """Base class; the CLI maps subclasses of ``ValidationError`` to exit code 1."""


class ValidationError(MrpredError):
    pass


class LexError(ValidationError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class UnbalancedDelimiters(ValidationError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class UnsupportedLanguage(ValidationError):
    pass


class NoMinableFiles(ValidationError):
    pass


class SchemaError(ValidationError):
    def __init__(self, message: str, column: str | None = None):
        super().__init__(message)
        self.column = column


class ParseError(ValidationError):
    def __init__(self, message: str, row: int, column: str):
        super().__init__(f"row {row}, column {column!r}: {message}")
        self.row = row
        self.column = column


class JoinError(ValidationError):
    def __init__(self, missing: list[str]):
        super().__init__("labeled methods missing from metrics: " + ", ".join(missing))
        self.missing = list(missing)


class UnknownFeature(ValidationError):
    pass


class DegenerateData(MrpredError):
    pass


class DimensionMismatch(ValidationError):
    pass


class Unsupported(MrpredError):
    pass


class FoldError(ValidationError):
    pass


class LengthMismatch(ValidationError):
    pass


class SingleClass(MrpredError):
    pass


class MissingCell(MrpredError):
    pass


class LabelValueError(ValidationError, ValueError):
    """A label cell holds something other than 0 or 1."""
