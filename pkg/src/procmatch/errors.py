"""Exception hierarchy shared by all procmatch modules."""


class ProcMatchError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class EmptyActions(ProcMatchError):
    """The text contains no verb that could become a process step."""


class MalformedCondition(ProcMatchError):
    """A conditional sentence has an empty guard."""


class PetriNetError(ProcMatchError):
    pass


class BipartiteViolation(PetriNetError):
    pass


class DuplicateId(PetriNetError):
    pass


class UnknownNode(PetriNetError, KeyError):
    def __str__(self) -> str:  # KeyError would repr() the message
        return str(self.args[0]) if self.args else ""


class EmptyLabel(PetriNetError, ValueError):
    pass


class NotEnabled(PetriNetError):
    pass


class NotWorkflowNet(PetriNetError):
    pass


class EmbeddingError(ProcMatchError):
    pass


class EmptyFile(EmbeddingError):
    pass


class DimensionMismatch(EmbeddingError, ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        super().__init__(message)
        self.line = line


class ParseError(EmbeddingError, ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        super().__init__(message)
        self.line = line


class ModelIOError(ProcMatchError):
    pass


class SchemaVersionUnsupported(ModelIOError):
    pass


class SchemaViolation(ModelIOError):
    """Malformed net document; ``pointer`` locates the offending value."""

    def __init__(self, message: str, pointer: str = "") -> None:
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer
        self.reason = message
