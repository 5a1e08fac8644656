"""Dense GF(2) vectors and matrices (pure logic, no I/O).

Matrices keep their rows bit-packed (``numpy.packbits``, eight columns per byte,
most significant bit first) so row additions are byte-wise XORs. Vectors are plain
``uint8`` arrays of zeros and ones.
"""

from collections.abc import Iterable, Sequence
from functools import cached_property
from typing import NamedTuple, Union

import numpy as np
import numpy.typing as npt

from ..exceptions import BasisExtensionError, DimensionMismatchError

BinaryVector = npt.NDArray[np.uint8]
BitsLike = Union[Sequence[int], npt.NDArray[np.integer], str]


def as_binary_vector(bits: BitsLike) -> BinaryVector:
    """Validate and convert a bit sequence (or a ``"0101"`` string) to a read-only vector.

    Raises
    ------
        ValueError: If an element is not 0 or 1 or the input is not one-dimensional.

    """
    if isinstance(bits, str):
        if any(ch not in "01" for ch in bits):
            raise ValueError(f"Bit string may only contain '0' and '1': {bits!r}")
        arr = np.frombuffer(bits.encode("ascii"), dtype=np.uint8) - ord("0")
    else:
        arr = np.asarray(bits)
    if arr.ndim != 1:
        raise ValueError(f"Expected a one-dimensional bit sequence, got shape {arr.shape}")
    if arr.size and not np.isin(arr, (0, 1)).all():
        raise ValueError("Every element of a binary vector must be 0 or 1")
    out = arr.astype(np.uint8, copy=True)
    out.setflags(write=False)
    return out


def vector_to_int(v: BinaryVector) -> int:
    """Pack a bit vector into an integer with component ``i`` at bit ``i``."""
    if v.size == 0:
        return 0
    return int.from_bytes(np.packbits(v, bitorder="little").tobytes(), "little")


def int_to_vector(value: int, length: int) -> BinaryVector:
    """Unpack an integer (component ``i`` at bit ``i``) into a bit vector of ``length``."""
    nbytes = max(1, (length + 7) // 8)
    raw = np.frombuffer(value.to_bytes(nbytes, "little"), dtype=np.uint8)
    out = np.unpackbits(raw, bitorder="little", count=length)
    out.setflags(write=False)
    return out


class BinaryMatrix:
    """Immutable dense GF(2) matrix with bit-packed rows."""

    def __init__(self, packed: npt.NDArray[np.uint8], cols: int) -> None:
        """Wrap an already packed ``(rows, ceil(cols / 8))`` array.

        Prefer :meth:`from_rows` unless the data is packed already.
        """
        if packed.ndim != 2 or packed.shape[1] != (cols + 7) // 8:
            raise DimensionMismatchError(f"Packed array of shape {packed.shape} does not hold {cols} columns")
        self._packed = packed.copy()
        self._packed.setflags(write=False)
        self._cols = cols

    @classmethod
    def from_rows(
        cls,
        rows: Union[Iterable[BitsLike], npt.NDArray[np.integer]],
        cols: int | None = None,
    ) -> "BinaryMatrix":
        """Build a matrix from a 2-D array or an iterable of bit rows.

        Args:
        ----
            rows: Row data; each row a bit sequence or ``"0101"`` string.
            cols: Column count, required only when there are no rows.

        Raises:
        ------
            DimensionMismatchError: If the rows have different lengths.
            ValueError: If an entry is not 0 or 1.

        """
        if isinstance(rows, np.ndarray) and rows.ndim == 2:
            dense = rows
        else:
            row_list = [as_binary_vector(r) for r in rows]
            widths = {len(r) for r in row_list}
            if len(widths) > 1:
                raise DimensionMismatchError(f"Rows have inconsistent widths: {sorted(widths)}")
            if not row_list:
                if cols is None:
                    raise DimensionMismatchError("An empty matrix needs an explicit column count")
                return cls.zeros(0, cols)
            dense = np.vstack(row_list)
        if cols is not None and dense.shape[1] != cols:
            raise DimensionMismatchError(f"Expected {cols} columns, got {dense.shape[1]}")
        if dense.size and not np.isin(dense, (0, 1)).all():
            raise ValueError("Every matrix entry must be 0 or 1")
        return cls(np.packbits(dense.astype(np.uint8), axis=1), dense.shape[1])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BinaryMatrix":
        """Return the all-zero ``rows x cols`` matrix."""
        return cls(np.zeros((rows, (cols + 7) // 8), dtype=np.uint8), cols)

    @classmethod
    def identity(cls, n: int) -> "BinaryMatrix":
        """Return the ``n x n`` identity matrix."""
        return cls.from_rows(np.eye(n, dtype=np.uint8)) if n else cls.zeros(0, 0)

    @property
    def rows(self) -> int:
        """Number of rows."""
        return int(self._packed.shape[0])

    @property
    def cols(self) -> int:
        """Number of columns."""
        return self._cols

    @property
    def shape(self) -> tuple[int, int]:
        """``(rows, cols)``."""
        return self.rows, self._cols

    @property
    def packed(self) -> npt.NDArray[np.uint8]:
        """Read-only packed row storage."""
        return self._packed

    @cached_property
    def dense(self) -> npt.NDArray[np.uint8]:
        """Read-only unpacked ``uint8`` view of the entries."""
        if self.rows == 0:
            out = np.zeros((0, self._cols), dtype=np.uint8)
        else:
            out = np.unpackbits(self._packed, axis=1, count=self._cols)
        out.setflags(write=False)
        return out

    def __getitem__(self, index: tuple[int, int]) -> int:
        """Return entry ``(i, j)``."""
        i, j = index
        return int(self.dense[i, j])

    def row(self, i: int) -> BinaryVector:
        """Return row ``i`` as a vector."""
        return self.dense[i]

    def take_rows(self, start: int, stop: int) -> "BinaryMatrix":
        """Return the sub-matrix made of rows ``start`` to ``stop - 1``."""
        return BinaryMatrix(self._packed[start:stop], self._cols)

    def vstack(self, other: "BinaryMatrix") -> "BinaryMatrix":
        """Stack ``other`` below this matrix."""
        if other.cols != self._cols:
            raise DimensionMismatchError(f"Cannot stack {self.shape} on {other.shape}")
        return BinaryMatrix(np.vstack([self._packed, other.packed]), self._cols)

    def transpose(self) -> "BinaryMatrix":
        """Return the transposed matrix."""
        if self._cols == 0:
            return BinaryMatrix.zeros(0, self.rows)
        return BinaryMatrix.from_rows(self.dense.T.copy(), self.rows)

    def column_ints(self) -> tuple[int, ...]:
        """Return every column packed into an integer (row ``i`` at bit ``i``)."""
        return tuple(vector_to_int(self.dense[:, j]) for j in range(self._cols))

    def row_ints(self) -> tuple[int, ...]:
        """Return every row packed into an integer (column ``j`` at bit ``j``)."""
        return tuple(vector_to_int(self.dense[i]) for i in range(self.rows))

    def to_strings(self) -> list[str]:
        """Render each row as a ``"0101"`` string."""
        return ["".join("1" if b else "0" for b in row) for row in self.dense]

    def __eq__(self, other: object) -> bool:
        """Compare shape and entries."""
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._packed, other.packed))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        """Short representation with the shape."""
        return f"BinaryMatrix({self.rows}x{self._cols})"


class RowReduction(NamedTuple):
    """Result of :func:`row_reduce`."""

    reduced: BinaryMatrix
    rank: int
    pivot_cols: list[int]


def _column_bits(packed: npt.NDArray[np.uint8], col: int) -> npt.NDArray[np.uint8]:
    return (packed[:, col >> 3] >> (7 - (col & 7))) & 1


def _eliminate(m: BinaryMatrix, full: bool) -> tuple[npt.NDArray[np.uint8], list[int]]:
    """Gaussian elimination on packed rows; row-echelon, or fully reduced when ``full``."""
    work = m.packed.copy()
    nrows = work.shape[0]
    pivots: list[int] = []
    pivot_row = 0
    for col in range(m.cols):
        if pivot_row == nrows:
            break
        below = np.flatnonzero(_column_bits(work[pivot_row:], col))
        if below.size == 0:
            continue
        found = pivot_row + int(below[0])
        if found != pivot_row:
            work[[pivot_row, found]] = work[[found, pivot_row]]
        hits = np.flatnonzero(_column_bits(work, col))
        targets = hits[hits != pivot_row] if full else hits[hits > pivot_row]
        if targets.size:
            work[targets] ^= work[pivot_row]
        pivots.append(col)
        pivot_row += 1
    return work, pivots


def row_reduce(m: BinaryMatrix) -> RowReduction:
    """Row-reduce ``m`` over GF(2) to row-echelon form.

    The row space is preserved; nonzero rows come first and ``rank`` counts them.
    """
    work, pivots = _eliminate(m, full=False)
    return RowReduction(BinaryMatrix(work, m.cols), len(pivots), pivots)


def rank(m: BinaryMatrix) -> int:
    """GF(2) rank of ``m``."""
    return row_reduce(m).rank


def is_full_row_rank(m: BinaryMatrix) -> bool:
    """True if the rows of ``m`` are linearly independent."""
    return rank(m) == m.rows


def mat_vec_mul(m: BinaryMatrix, v: BitsLike) -> BinaryVector:
    """Return ``M v^T`` over GF(2).

    Raises
    ------
        DimensionMismatchError: If ``len(v) != m.cols``.

    """
    vec = as_binary_vector(v)
    if vec.size != m.cols:
        raise DimensionMismatchError(f"Vector of length {vec.size} cannot multiply a {m.rows}x{m.cols} matrix")
    out = (m.dense.astype(np.int64) @ vec.astype(np.int64)) & 1
    result = out.astype(np.uint8)
    result.setflags(write=False)
    return result


def mat_mul(a: BinaryMatrix, b: BinaryMatrix) -> BinaryMatrix:
    """Return the GF(2) product ``A B``."""
    if a.cols != b.rows:
        raise DimensionMismatchError(f"Cannot multiply {a.shape} by {b.shape}")
    if a.rows == 0 or b.cols == 0:
        return BinaryMatrix.zeros(a.rows, b.cols)
    prod = (a.dense.astype(np.int64) @ b.dense.astype(np.int64)) & 1
    return BinaryMatrix.from_rows(prod.astype(np.uint8))


def null_space(m: BinaryMatrix) -> BinaryMatrix:
    """Return a basis (as rows) of ``{v : M v^T = 0}``."""
    work, pivots = _eliminate(m, full=True)
    reduced = BinaryMatrix(work, m.cols).dense
    pivot_set = set(pivots)
    free_cols = [c for c in range(m.cols) if c not in pivot_set]
    basis = np.zeros((len(free_cols), m.cols), dtype=np.uint8)
    for k, free in enumerate(free_cols):
        basis[k, free] = 1
        for i, p in enumerate(pivots):
            basis[k, p] = reduced[i, free]
    if not free_cols:
        return BinaryMatrix.zeros(0, m.cols)
    return BinaryMatrix.from_rows(basis)


class EchelonBasis:
    """Incrementally grown GF(2) basis over integer-packed vectors, keyed by leading bit."""

    def __init__(self) -> None:
        """Start with the zero space."""
        self._by_pivot: dict[int, int] = {}

    def reduce(self, value: int) -> int:
        """Return the residue of ``value`` modulo the span (zero iff it lies in the span)."""
        while value:
            lead = value.bit_length() - 1
            row = self._by_pivot.get(lead)
            if row is None:
                return value
            value ^= row
        return 0

    def add(self, value: int) -> bool:
        """Add ``value`` to the span; True if it was independent of it."""
        residue = self.reduce(value)
        if residue == 0:
            return False
        self._by_pivot[residue.bit_length() - 1] = residue
        return True

    def __len__(self) -> int:
        """Dimension of the span."""
        return len(self._by_pivot)


def extend_basis(small: BinaryMatrix, large: BinaryMatrix) -> BinaryMatrix:
    """Complete ``small`` to a basis of ``rowspace(large)``.

    Returns ``E`` with ``rowspace([small; E]) == rowspace(large)`` and ``[small; E]`` of
    full row rank. Rows of ``E`` are taken from ``large`` in their original order.

    Raises
    ------
        DimensionMismatchError: If the column counts differ.
        BasisExtensionError: If ``small`` is rank deficient or not inside ``rowspace(large)``.

    """
    if small.cols != large.cols:
        raise DimensionMismatchError(f"Cannot extend a {small.shape} basis with {large.shape}")
    large_span = EchelonBasis()
    for row in large.row_ints():
        large_span.add(row)

    current = EchelonBasis()
    for i, row in enumerate(small.row_ints()):
        if large_span.reduce(row) != 0:
            raise BasisExtensionError(f"Row {i} of the smaller basis is not in the larger row space")
        if not current.add(row):
            raise BasisExtensionError(f"The smaller basis is not full row rank (row {i} is dependent)")

    chosen = [i for i, row in enumerate(large.row_ints()) if current.add(row)]
    if not chosen:
        return BinaryMatrix.zeros(0, large.cols)
    return BinaryMatrix(large.packed[chosen], large.cols)


def in_row_space(m: BinaryMatrix, v: BitsLike) -> bool:
    """True if ``v`` is a GF(2) combination of the rows of ``m``."""
    vec = as_binary_vector(v)
    if vec.size != m.cols:
        raise DimensionMismatchError(f"Vector of length {vec.size} vs {m.cols} columns")
    span = EchelonBasis()
    for row in m.row_ints():
        span.add(row)
    return span.reduce(vector_to_int(vec)) == 0
