"""Exception hierarchy shared across the package."""


class RetroRankError(Exception):
    """Base class for all errors raised by this package."""


class XmlParseError(RetroRankError):
    """Raised when an input document is not well-formed XML."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class StorageError(RetroRankError):
    """Raised on I/O failures against the on-disk bug store."""


class ConfigError(RetroRankError):
    """Raised when a required configuration file or value is missing or invalid."""


class LexiconError(RetroRankError):
    """Raised when a sentiment lexicon file cannot be loaded."""


class EmptyCorpusError(RetroRankError):
    """Raised when an index build is attempted over an empty comment stream."""


class MissingArtifactError(RetroRankError):
    """Raised when a pipeline stage runs before its prerequisites were built.

    ``stage`` names the CLI command that produces the missing artifact.
    """

    def __init__(self, message: str, stage: str):
        super().__init__(message)
        self.stage = stage
