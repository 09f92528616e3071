"""Exception hierarchy for hop_toolkit."""

from typing import Optional


class HopToolkitError(Exception):
    """Base exception for all toolkit errors."""

    pass


class ConfigError(HopToolkitError):
    """Invalid configuration, lexicon or policy setup."""

    pass


class KBError(HopToolkitError):
    """Knowledge base could not be loaded or is inconsistent."""

    pass


class GraphBuildError(HopToolkitError):
    """Error while building the entity-document graph."""

    pass


class NodeNotFoundError(GraphBuildError, KeyError):
    """Lookup of a node that is not part of the graph."""

    def __str__(self) -> str:
        return Exception.__str__(self)


class SubjectAbsentError(HopToolkitError):
    """The query subject is not a node of the graph."""

    pass


class DatasetFormatError(HopToolkitError):
    """A JSON Lines record does not follow the expected schema."""

    def __init__(
        self,
        message: str,
        path: Optional[str] = None,
        line: Optional[int] = None,
        field: Optional[str] = None,
    ):
        self.path = path
        self.line = line
        self.field = field
        location = ""
        if path is not None:
            location = f"{path}:"
        if line is not None:
            location += f"{line}:"
        if field is not None:
            message = f"field '{field}': {message}"
        super().__init__(f"{location} {message}".strip())


class MaskingError(HopToolkitError):
    """Candidate masking cannot be applied to a sample."""

    pass


class ScoringError(HopToolkitError):
    """Predictions cannot be scored against the gold data."""

    pass


class ExportError(HopToolkitError):
    """A sample cannot be exported as a superdocument."""

    pass


class FixtureError(HopToolkitError):
    """A synthetic fixture specification cannot be satisfied."""

    pass


class OracleSizeError(FixtureError):
    """Graph is too large for exhaustive path enumeration."""

    pass
