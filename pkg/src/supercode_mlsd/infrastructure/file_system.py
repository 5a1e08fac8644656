"""File system operations for parity-check matrices, received vectors and results."""

import logging
from pathlib import Path

import aiofiles

from ..domain.gf2 import BinaryMatrix, rank
from ..exceptions import ExperimentFileError, ExperimentFileNotFoundError
from ..utils import parse_parity_check, parse_received

logger = logging.getLogger(__name__)


class ExperimentFileRepository:
    """Repository for the text files read and written by the decoder tools."""

    async def read_text(self, file_path: Path) -> str:
        """Read a UTF-8 text file asynchronously.

        Args:
        ----
            file_path: Path to the file.

        Returns:
        -------
            str: The file content.

        Raises:
        ------
            ExperimentFileNotFoundError: If the file doesn't exist.
            ExperimentFileError: If there's an error reading the file.

        """
        if not file_path.exists() or not file_path.is_file():
            raise ExperimentFileNotFoundError(f"File not found: {file_path}")

        try:
            async with aiofiles.open(file_path, encoding="utf-8") as f:
                return await f.read()
        except Exception as e:
            raise ExperimentFileError(f"Failed to read '{file_path}': {e}") from e

    async def write_text(self, file_path: Path, content: str) -> None:
        """Write text to a file asynchronously, creating parent directories.

        Raises
        ------
            ExperimentFileError: If there's an error writing the file.

        """
        try:
            file_path.parent.mkdir(parents=True, exist_ok=True)

            async with aiofiles.open(file_path, "w", encoding="utf-8") as f:
                await f.write(content)
        except Exception as e:
            raise ExperimentFileError(f"Failed to write '{file_path}': {e}") from e

    async def load_parity_check(self, file_path: Path) -> BinaryMatrix:
        """Load a parity-check matrix file.

        A rank-deficient matrix is returned with a warning; callers that need full rank
        reject it themselves.

        Raises
        ------
            ExperimentFileNotFoundError: If the file doesn't exist.
            ParityCheckFileError: If the content is malformed.

        """
        H = parse_parity_check(await self.read_text(file_path))
        matrix_rank = rank(H)
        if matrix_rank < H.rows:
            logger.warning(
                "[ExperimentFileRepository] Parity-check matrix in '%s' has rank %d < %d rows",
                file_path,
                matrix_rank,
                H.rows,
            )
        return H

    async def load_received(self, file_path: Path) -> list[float]:
        """Load a received vector, one real per line."""
        return parse_received(await self.read_text(file_path))

    def get_mtime(self, file_path: Path) -> float:
        """Modification time of ``file_path``, used as a cache key.

        Raises
        ------
            ExperimentFileNotFoundError: If the file doesn't exist.

        """
        try:
            return file_path.stat().st_mtime
        except FileNotFoundError as e:
            raise ExperimentFileNotFoundError(f"File not found: {file_path}") from e
