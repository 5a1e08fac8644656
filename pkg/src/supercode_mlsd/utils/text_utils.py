"""Text formats: parity-check matrices, received vectors and 0/1 strings."""

import math
from collections.abc import Iterable

from ..domain.gf2 import BinaryMatrix
from ..exceptions import ParityCheckFileError, ReceivedVectorError


def bits_to_string(bits: Iterable[int]) -> str:
    """Render bits as a ``"0101"`` string."""
    return "".join("1" if b else "0" for b in bits)


def _content_lines(text: str) -> Iterable[tuple[int, str]]:
    """Yield ``(line_number, stripped_line)`` for non-blank, non-comment lines."""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line


def parse_parity_check(text: str) -> BinaryMatrix:
    """Parse one matrix row per line of ``0``/``1`` characters.

    Blank lines and lines starting with ``#`` are ignored; surrounding whitespace is
    stripped. Positions in errors are 1-based and refer to the original text.

    Args:
    ----
        text: File content.

    Returns:
    -------
        BinaryMatrix: The parsed matrix.

    Raises:
    ------
        ParityCheckFileError: On a character other than 0/1, rows of different widths,
            or a file without rows.

    """
    rows: list[str] = []
    width: int | None = None
    for number, line in _content_lines(text):
        for offset, ch in enumerate(line):
            if ch not in "01":
                raw = text.splitlines()[number - 1]
                column = len(raw) - len(raw.lstrip()) + offset + 1
                raise ParityCheckFileError(f"invalid character {ch!r}, expected '0' or '1'", number, column)
        if width is None:
            width = len(line)
        elif len(line) != width:
            raise ParityCheckFileError(f"row has {len(line)} entries, expected {width}", number)
        rows.append(line)
    if not rows:
        raise ParityCheckFileError("no matrix rows found")
    return BinaryMatrix.from_rows(rows)


def render_parity_check(H: BinaryMatrix, comment: str | None = None) -> str:
    """Render ``H`` in the format read by :func:`parse_parity_check`."""
    lines = [f"# {comment}"] if comment else []
    lines.extend(H.to_strings())
    return "\n".join(lines) + "\n"


def parse_received(text: str) -> list[float]:
    """Parse one real number per line; blank lines and ``#`` comments are ignored.

    Raises
    ------
        ReceivedVectorError: On a line that is not a single finite real, or an empty file.

    """
    values: list[float] = []
    for number, line in _content_lines(text):
        try:
            value = float(line)
        except ValueError as e:
            raise ReceivedVectorError(f"line {number}: not a real number: {line!r}") from e
        if not math.isfinite(value):
            raise ReceivedVectorError(f"line {number}: received values must be finite")
        values.append(value)
    if not values:
        raise ReceivedVectorError("no received values found")
    return values
