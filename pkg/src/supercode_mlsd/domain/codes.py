"""Linear codes, Reed-Muller constructions and code/supercode pairs."""

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from ..exceptions import InvalidCodeError
from .gf2 import BinaryMatrix, BinaryVector, BitsLike, extend_basis, mat_mul, mat_vec_mul, null_space, rank


@dataclass(frozen=True)
class LinearCode:
    """An ``(n, k)`` binary linear block code given by its parity-check matrix.

    Attributes
    ----------
        n: Block length.
        k: Dimension.
        H: ``(n - k) x n`` parity-check matrix of full row rank.
        G: Optional ``k x n`` generator matrix with ``G H^T = 0``.

    """

    n: int
    k: int
    H: BinaryMatrix
    G: BinaryMatrix | None = None

    def __post_init__(self) -> None:
        """Check the rank and orthogonality invariants."""
        if self.H.cols != self.n:
            raise InvalidCodeError(f"Parity-check matrix has {self.H.cols} columns, expected n={self.n}")
        if self.H.rows != self.n - self.k:
            raise InvalidCodeError(f"Parity-check matrix has {self.H.rows} rows, expected n-k={self.n - self.k}")
        if rank(self.H) != self.H.rows:
            raise InvalidCodeError("Parity-check matrix is not full row rank")
        if self.G is not None:
            if self.G.shape != (self.k, self.n) or rank(self.G) != self.k:
                raise InvalidCodeError(f"Generator matrix {self.G.shape} is not a full-rank {self.k}x{self.n} matrix")
            if self.H.rows and mat_mul(self.G, self.H.transpose()).dense.any():
                raise InvalidCodeError("Generator and parity-check matrices are not orthogonal (G H^T != 0)")

    @classmethod
    def from_parity_check(cls, H: BinaryMatrix) -> "LinearCode":
        """Build a code from a full-rank ``H``, solving for the generator as its null space."""
        if rank(H) != H.rows:
            raise InvalidCodeError("Parity-check matrix is not full row rank")
        return cls(n=H.cols, k=H.cols - H.rows, H=H, G=null_space(H))

    def syndrome(self, v: BitsLike) -> BinaryVector:
        """Return ``H v^T``."""
        return mat_vec_mul(self.H, v)

    def is_codeword(self, v: BitsLike) -> bool:
        """True if ``v`` has zero syndrome."""
        return not self.syndrome(v).any()


@dataclass(frozen=True)
class CodePair:
    """A code ``C`` and a supercode whose parity checks are a row prefix of ``C``'s.

    ``code.H`` is exactly ``[supercode.H; p_rows]`` row for row.
    """

    code: LinearCode
    supercode: LinearCode
    p_rows: BinaryMatrix

    def __post_init__(self) -> None:
        """Check the stacked parity-check form and code containment."""
        if self.code.n != self.supercode.n:
            raise InvalidCodeError(f"Block lengths differ: {self.code.n} vs {self.supercode.n}")
        if self.supercode.k <= self.code.k:
            raise InvalidCodeError(f"Supercode dimension {self.supercode.k} must exceed code dimension {self.code.k}")
        if self.code.H != self.supercode.H.vstack(self.p_rows):
            raise InvalidCodeError("Code parity checks are not [supercode checks; P]")
        if self.code.G is not None and mat_mul(self.code.G, self.supercode.H.transpose()).dense.any():
            raise InvalidCodeError("Some codeword of the code is not a codeword of the supercode")

    @property
    def n(self) -> int:
        """Shared block length."""
        return self.code.n

    @property
    def num_super_checks(self) -> int:
        """Number of supercode parity checks, ``n - k_bar``."""
        return self.supercode.H.rows


def rm_dimension(r: int, m: int) -> int:
    """Dimension ``1 + sum_{i=1..r} C(m, i)`` of the Reed-Muller code RM(r, m)."""
    if m < 0 or r < 0 or r > m:
        raise InvalidCodeError(f"Reed-Muller order must satisfy 0 <= r <= m, got r={r}, m={m}")
    return 1 + sum(comb(m, i) for i in range(1, r + 1))


def rm_generator(r: int, m: int) -> BinaryMatrix:
    """Generator matrix of RM(r, m).

    Rows are evaluations over F_2^m of the monomials of degree <= r, in ascending degree
    then lexicographic variable order. Point ``i`` has coordinate ``j`` equal to bit ``j``
    of ``i``.
    """
    rm_dimension(r, m)
    n = 1 << m
    points = np.arange(n)
    coords = ((points[None, :] >> np.arange(m)[:, None]) & 1).astype(np.uint8)
    rows = [np.ones(n, dtype=np.uint8)]
    for degree in range(1, r + 1):
        for variables in combinations(range(m), degree):
            rows.append(np.bitwise_and.reduce(coords[list(variables)], axis=0))
    return BinaryMatrix.from_rows(np.vstack(rows))


def rm_code_pair(r: int, rbar: int, m: int) -> CodePair:
    """Build RM(r, m) with supercode RM(rbar, m) in the stacked parity-check form.

    The supercode checks are a generator of the dual RM(m - rbar - 1, m); they are completed
    to the checks of RM(r, m) with rows of a generator of RM(m - r - 1, m).

    Raises
    ------
        InvalidCodeError: Unless ``0 <= r < rbar <= m - 1``.

    """
    if not 0 <= r < rbar <= m:
        raise InvalidCodeError(f"Orders must satisfy 0 <= r < rbar <= m, got r={r}, rbar={rbar}, m={m}")
    if rbar == m:
        raise InvalidCodeError(f"RM({m},{m}) is the whole space and has no parity checks to search over")
    n = 1 << m
    h_super = rm_generator(m - rbar - 1, m)
    p_rows = extend_basis(h_super, rm_generator(m - r - 1, m))
    code = LinearCode(n=n, k=rm_dimension(r, m), H=h_super.vstack(p_rows), G=rm_generator(r, m))
    supercode = LinearCode(n=n, k=rm_dimension(rbar, m), H=h_super, G=rm_generator(rbar, m))
    return CodePair(code=code, supercode=supercode, p_rows=p_rows)


def pair_from_parity_check(H: BinaryMatrix, t: int) -> CodePair:
    """Split a full-rank ``H`` into supercode checks (first ``t`` rows) and ``P``.

    Raises
    ------
        InvalidCodeError: If ``H`` is rank deficient or ``t`` is not in ``[1, rows(H))``.

    """
    if not 1 <= t < H.rows:
        raise InvalidCodeError(f"Supercode prefix must satisfy 1 <= t < {H.rows}, got {t}")
    code = LinearCode.from_parity_check(H)
    supercode = LinearCode.from_parity_check(H.take_rows(0, t))
    return CodePair(code=code, supercode=supercode, p_rows=H.take_rows(t, H.rows))


def random_parity_check(rows: int, n: int, rng: np.random.Generator) -> BinaryMatrix:
    """Draw a uniformly random full-row-rank ``rows x n`` matrix."""
    if not 0 < rows <= n:
        raise InvalidCodeError(f"Cannot draw a full-rank {rows}x{n} parity-check matrix")
    while True:
        candidate = BinaryMatrix.from_rows(rng.integers(0, 2, size=(rows, n), dtype=np.uint8))
        if rank(candidate) == rows:
            return candidate


def random_code_pair(rng: np.random.Generator, max_n: int = 16, max_super_k: int = 12, min_n: int = 4) -> CodePair:
    """Draw a random pair with ``n <= max_n`` and supercode dimension at most ``max_super_k``.

    ``H`` is a random full-rank matrix and the supercode keeps a random row prefix of it.

    Raises
    ------
        InvalidCodeError: If ``max_n < min_n``, ``min_n < 3`` or ``max_super_k < 2``.

    """
    if min_n < 3 or max_n < min_n or max_super_k < 2:
        raise InvalidCodeError(
            f"Cannot draw pairs with {min_n} <= n <= {max_n} and supercode dimension at most {max_super_k}"
        )
    n = int(rng.integers(min_n, max_n + 1))
    rows = int(rng.integers(max(2, n - max_super_k + 1), n))
    t = int(rng.integers(max(1, n - max_super_k), rows))
    return pair_from_parity_check(random_parity_check(rows, n, rng), t)
