"""Exception types shared across the engine.

Every error carries a stable ``code`` string (its class name). The service
layer maps codes onto HTTP statuses and the CLI onto exit codes, so the
class names here are part of the public contract and must not be renamed
casually.
"""
from __future__ import annotations


class ArtemusError(Exception):
    """Base class for all engine errors."""

    def __init__(self, detail: str = "", *, subject: str | None = None):
        super().__init__(detail or self.__class__.__name__)
        self.detail = detail
        self.subject = subject

    @property
    def code(self) -> str:
        return self.__class__.__name__


# --- strict document parsing -------------------------------------------------


class GraphParseError(ArtemusError):
    """A pathway or journey document failed strict structural parsing."""


class MalformedJson(GraphParseError):
    pass


class SchemaVersionMismatch(GraphParseError):
    pass


class MissingField(GraphParseError):
    pass


class UnexpectedField(GraphParseError):
    pass


class InvalidValue(GraphParseError):
    pass


class DuplicateId(GraphParseError):
    pass


class DanglingReference(GraphParseError):
    pass


class MissingTranslation(GraphParseError):
    pass


# --- journeys ------------------------------------------------------------------


class UnknownEntryPoint(ArtemusError):
    pass


class UnpublishableGraph(ArtemusError):
    pass


class GraphMismatch(ArtemusError):
    pass


class JourneyConcluded(ArtemusError):
    pass


class IndexOutOfRange(ArtemusError):
    pass


class InvalidPrefix(ArtemusError):
    """A step sequence does not replay cleanly against its graph."""


class ChoiceNotEnabled(ArtemusError):
    """The chosen option is not currently enabled.

    Carries the option's disable reason (when one exists) so callers can
    surface the authored explanation rather than a bare refusal.
    """

    def __init__(self, detail: str = "", *, reason=None):
        super().__init__(detail)
        self.reason = reason


# --- datasets / service ----------------------------------------------------------


class UnknownDataset(ArtemusError):
    pass


class UnknownGraph(ArtemusError):
    pass
