"""Custom exceptions for supercode-mlsd."""


class SupercodeDecoderError(Exception):
    """Base exception for all supercode-mlsd errors."""

    pass


class InputError(SupercodeDecoderError):
    """Base exception for errors caused by user-supplied input (CLI exit code 2)."""

    pass


class ConfigurationError(InputError):
    """Raised when there is a configuration issue."""

    pass


class DimensionMismatchError(InputError):
    """Raised when vector or matrix dimensions do not agree."""

    pass


class InvalidCodeError(InputError):
    """Raised when code parameters or parity-check matrices are invalid."""

    pass


class BasisExtensionError(InvalidCodeError):
    """Raised when a smaller row space is not contained in the larger one."""

    pass


class MetricError(InputError):
    """Raised when bit metrics are malformed (e.g. negative reliabilities)."""

    pass


class EnumerationLimitError(InputError):
    """Raised when an exhaustive enumeration would exceed its guard."""

    pass


class TrellisTooLargeError(InputError):
    """Raised when a trellis exceeds the configured state guard."""

    pass


class ParityCheckFileError(InputError):
    """Raised when a parity-check file cannot be parsed."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None) -> None:
        """Initialize with an optional 1-based source position."""
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" if column is None else f"line {line}, column {column}"
            message = f"{where}: {message}"
        super().__init__(message)


class ReceivedVectorError(InputError):
    """Raised when a received-vector file is malformed or has the wrong length."""

    pass


class ExperimentFileError(InputError):
    """Raised when an input or output file cannot be read or written."""

    pass


class ExperimentFileNotFoundError(ExperimentFileError):
    """Raised when an input file does not exist."""

    pass


class TrellisError(SupercodeDecoderError):
    """Raised when a trellis is internally inconsistent."""

    pass


class DecodingError(SupercodeDecoderError):
    """Base exception for decoder failures."""

    pass


class SearchExhaustedError(DecodingError):
    """Raised when the priority-first search ends without any full-length path."""

    pass
