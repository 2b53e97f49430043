# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.
"""Exact integer linear algebra: matrices, Smith normal form and pairings."""

import logging
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Any, Iterable, Iterator, List, NamedTuple, Optional, Tuple

import numpy as np

from slide_screen.errors import (
    ArithmeticOverflowError,
    DimensionError,
    InvalidMatrixError,
)

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

INT_MIN = int(np.iinfo(np.int64).min)
INT_MAX = int(np.iinfo(np.int64).max)


def checked(value: Any) -> int:
    """Return the value as an int, failing if it leaves the 64-bit range."""
    number = int(value)
    if number < INT_MIN or number > INT_MAX:
        raise ArithmeticOverflowError(f"{number} does not fit in a signed 64-bit")
    return number


def _as_int(value: Any) -> int:
    """Accept Python and numpy integers only."""
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise InvalidMatrixError(f"Matrix entries must be integers, got {value!r}")
    return checked(value)


class IntMatrix:
    """An immutable integer matrix with checked arithmetic."""

    def __init__(self, rows: Iterable[Iterable[Any]], cols: Optional[int] = None):
        """Create an IntMatrix from a list of rows."""
        data = [[_as_int(entry) for entry in row] for row in rows]

        widths = {len(row) for row in data}
        if len(widths) > 1:
            raise DimensionError(f"Matrix rows have different lengths: {widths}")

        width = widths.pop() if widths else (cols or 0)
        if cols is not None and cols != width:
            raise DimensionError(f"Expected {cols} columns, got {width}")

        self._data = np.array(data, dtype=np.int64).reshape(len(data), width)
        self._data.setflags(write=False)

    @classmethod
    def _from_objects(cls, array: np.ndarray) -> "IntMatrix":
        """Build a matrix from an object array of Python ints, checking range."""
        rows, cols = array.shape
        return cls(
            [[checked(array[i, j]) for j in range(cols)] for i in range(rows)],
            cols=cols,
        )

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        """Return the n×n identity."""
        return cls([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        """Return the rows×cols zero matrix."""
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def block_diagonal(cls, blocks: Iterable["IntMatrix"]) -> "IntMatrix":
        """Assemble square blocks along the diagonal, first block first."""
        blocks = list(blocks)
        size = sum(block.rows for block in blocks)
        data = [[0] * size for _ in range(size)]
        offset = 0
        for block in blocks:
            if not block.is_square():
                raise DimensionError("Diagonal blocks must be square")
            for i in range(block.rows):
                for j in range(block.cols):
                    data[offset + i][offset + j] = block[i, j]
            offset += block.rows
        return cls(data, cols=size)

    @property
    def rows(self) -> int:
        """Number of rows."""
        return int(self._data.shape[0])

    @property
    def cols(self) -> int:
        """Number of columns."""
        return int(self._data.shape[1])

    @property
    def shape(self) -> Tuple[int, int]:
        """The (rows, cols) pair."""
        return (self.rows, self.cols)

    def __getitem__(self, index: Tuple[int, int]) -> int:
        """Return a single entry as a Python int."""
        i, j = index
        return int(self._data[i, j])

    def to_list(self) -> List[List[int]]:
        """Return the entries as nested lists of Python ints."""
        return [[int(entry) for entry in row] for row in self._data]

    def to_numpy(self) -> np.ndarray:
        """Return a read-only int64 view of the entries."""
        return self._data

    def _objects(self) -> np.ndarray:
        return self._data.astype(object)

    def transpose(self) -> "IntMatrix":
        """Return the transpose."""
        return IntMatrix(self._data.T.tolist(), cols=self.rows)

    @property
    def T(self) -> "IntMatrix":  # pylint: disable=invalid-name
        """Shorthand for transpose()."""
        return self.transpose()

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        """Multiply exactly."""
        if self.cols != other.rows:
            raise DimensionError(f"Cannot multiply {self.shape} by {other.shape}")
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return IntMatrix.zeros(self.rows, other.cols)
        return IntMatrix._from_objects(self._objects() @ other._objects())

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        """Add exactly."""
        if self.shape != other.shape:
            raise DimensionError(f"Cannot add {self.shape} to {other.shape}")
        return IntMatrix._from_objects(self._objects() + other._objects())

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        """Subtract exactly."""
        if self.shape != other.shape:
            raise DimensionError(f"Cannot subtract {other.shape} from {self.shape}")
        return IntMatrix._from_objects(self._objects() - other._objects())

    def __neg__(self) -> "IntMatrix":
        """Negate exactly."""
        return IntMatrix._from_objects(-self._objects())

    def __eq__(self, other: object) -> bool:
        """Compare shape and entries."""
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and bool((self._data == other._data).all())

    def __hash__(self) -> int:
        """Hash shape and entries."""
        return hash((self.shape, self._data.tobytes()))

    def __repr__(self) -> str:
        """Return a string representation of the matrix."""
        return f"{self.__class__.__name__}({self.to_list()})"

    def apply(self, vector: Iterable[int]) -> Tuple[int, ...]:
        """Multiply a column vector on the left."""
        values = [checked(entry) for entry in vector]
        if len(values) != self.cols:
            raise DimensionError(
                f"Cannot apply a {self.shape} matrix to a vector of length "
                f"{len(values)}"
            )
        return tuple(
            checked(sum(self[i, j] * values[j] for j in range(self.cols)))
            for i in range(self.rows)
        )

    def power(self, exponent: int) -> "IntMatrix":
        """Raise a square matrix to a nonnegative power."""
        if not self.is_square():
            raise DimensionError("Only square matrices have powers")
        if exponent < 0:
            raise ValueError("Use unimodular_inverse() for negative powers")
        result = IntMatrix.identity(self.rows)
        base = self
        while exponent:
            if exponent & 1:
                result = result @ base
            exponent >>= 1
            if exponent:
                base = base @ base
        return result

    def is_square(self) -> bool:
        """Check for a square shape."""
        return self.rows == self.cols

    def is_zero(self) -> bool:
        """Check whether every entry is zero."""
        return not self._data.any()

    def is_symmetric(self) -> bool:
        """Check whether the matrix equals its transpose."""
        return self.is_square() and bool((self._data == self._data.T).all())

    def is_diagonal(self) -> bool:
        """Check whether every off-diagonal entry is zero."""
        off_diagonal = self._data.copy()
        np.fill_diagonal(off_diagonal, 0)
        return not off_diagonal.any()

    def diagonal(self) -> List[int]:
        """Return the main diagonal."""
        return [self[i, i] for i in range(min(self.shape))]

    def determinant(self) -> int:
        """Compute the determinant with fraction-free Bareiss elimination."""
        if not self.is_square():
            raise DimensionError("Only square matrices have determinants")
        n = self.rows
        if n == 0:
            return 1

        m = self.to_list()
        sign = 1
        previous = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
                if swap is None:
                    return 0
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // previous
            previous = m[k][k]
        return checked(sign * m[n - 1][n - 1])

    def is_unimodular(self) -> bool:
        """Check for a square matrix of determinant ±1."""
        return self.is_square() and abs(self.determinant()) == 1


class SmithDecomposition(NamedTuple):
    """A certified Smith normal form U·A·V = D."""

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix
    source_dims: Tuple[int, int]

    def invariant_factors(self) -> List[int]:
        """Return the diagonal d₁ | d₂ | … of D."""
        return self.d.diagonal()

    def rank(self) -> int:
        """Return the number of nonzero invariant factors."""
        return sum(1 for factor in self.invariant_factors() if factor)


class AbelianGroupInvariants(NamedTuple):
    """A finitely generated abelian group Z^r ⊕ Z/t₁ ⊕ … in canonical form."""

    torsion: Tuple[int, ...]
    free_rank: int

    def is_trivial(self) -> bool:
        """Check for the trivial group."""
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        """Render as, for example, Z^2 + Z/5."""
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"Z/{order}" for order in self.torsion)
        return " + ".join(parts) if parts else "0"


def _swap_rows(d: List[List[int]], u: List[List[int]], a: int, b: int) -> None:
    if a != b:
        d[a], d[b] = d[b], d[a]
        u[a], u[b] = u[b], u[a]


def _swap_cols(d: List[List[int]], v: List[List[int]], a: int, b: int) -> None:
    if a != b:
        for matrix in (d, v):
            for row in matrix:
                row[a], row[b] = row[b], row[a]


def _add_row(
    d: List[List[int]], u: List[List[int]], target: int, source: int, k: int
) -> None:
    """Row target += k · row source, on D and on U."""
    for matrix in (d, u):
        matrix[target] = [
            checked(a + k * b) for a, b in zip(matrix[target], matrix[source])
        ]


def _add_col(
    d: List[List[int]], v: List[List[int]], target: int, source: int, k: int
) -> None:
    """Column target += k · column source, on D and on V."""
    for matrix in (d, v):
        for row in matrix:
            row[target] = checked(row[target] + k * row[source])


def _pivot(d: List[List[int]], t: int) -> Optional[Tuple[int, int]]:
    """Smallest nonzero |entry| in the lower-right block, lowest (row, col) on ties."""
    best: Optional[Tuple[int, int, int]] = None
    for i in range(t, len(d)):
        for j in range(t, len(d[i])):
            if d[i][j] and (best is None or abs(d[i][j]) < best[0]):
                best = (abs(d[i][j]), i, j)
    return None if best is None else (best[1], best[2])


def smith_normal_form(a: IntMatrix) -> SmithDecomposition:
    """Diagonalise A by unimodular row and column operations."""
    m, n = a.shape
    d = a.to_list()
    u = IntMatrix.identity(m).to_list()
    v = IntMatrix.identity(n).to_list()

    for t in range(min(m, n)):
        pivot = _pivot(d, t)
        if pivot is None:
            break

        while pivot is not None:
            _swap_rows(d, u, t, pivot[0])
            _swap_cols(d, v, t, pivot[1])
            p = d[t][t]

            clear = True
            for r in range(t + 1, m):
                quotient = d[r][t] // p
                if quotient:
                    _add_row(d, u, r, t, -quotient)
                clear = clear and d[r][t] == 0
            for c in range(t + 1, n):
                quotient = d[t][c] // p
                if quotient:
                    _add_col(d, v, c, t, -quotient)
                clear = clear and d[t][c] == 0

            if clear:
                # Every remaining entry must be a multiple of the pivot; if not,
                # fold the offending row into row t and reduce again.
                offender = next(
                    (
                        r
                        for r in range(t + 1, m)
                        for c in range(t + 1, n)
                        if d[r][c] % p
                    ),
                    None,
                )
                if offender is None:
                    break
                _add_row(d, u, t, offender, 1)

            pivot = _pivot(d, t)

        if d[t][t] < 0:
            d[t] = [-entry for entry in d[t]]
            u[t] = [-entry for entry in u[t]]

    decomposition = SmithDecomposition(
        u=IntMatrix(u, cols=m),
        d=IntMatrix(d, cols=n),
        v=IntMatrix(v, cols=n),
        source_dims=(m, n),
    )
    log.debug("Smith form of %s: %s", a, decomposition.invariant_factors())
    return decomposition


def rank(a: IntMatrix) -> int:
    """Rank of A over the rationals."""
    return smith_normal_form(a).rank()


def cokernel_invariants(a: IntMatrix) -> AbelianGroupInvariants:
    """Invariants of Z^n / A·Z^n for a square A."""
    if not a.is_square():
        raise DimensionError(f"Cokernel needs a square matrix, got {a.shape}")

    factors = smith_normal_form(a).invariant_factors()
    torsion = tuple(factor for factor in factors if factor > 1)
    free_rank = a.rows - sum(1 for factor in factors if factor)
    return AbelianGroupInvariants(torsion=torsion, free_rank=free_rank)


def unimodular_inverse(a: IntMatrix) -> IntMatrix:
    """Exact inverse of a unimodular matrix, read off its Smith form."""
    if not a.is_square():
        raise DimensionError(f"Only square matrices are invertible, got {a.shape}")
    decomposition = smith_normal_form(a)
    if decomposition.d != IntMatrix.identity(a.rows):
        raise InvalidMatrixError(f"{a} is not unimodular")
    # U·A·V = I, so A⁻¹ = V·U.
    return decomposition.v @ decomposition.u


@dataclass(frozen=True, order=True)
class HomologyClass:
    """An integer class in H₁ of a closed surface, in (a₁, b₁, a₂, b₂, …)."""

    coords: Tuple[int, ...]

    def __post_init__(self):
        """Validate and freeze the coordinates."""
        coords = tuple(_as_int(entry) for entry in self.coords)
        if not coords or len(coords) % 2:
            raise DimensionError(
                f"A homology class needs a positive even length, got {len(coords)}"
            )
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, *coords: int) -> "HomologyClass":
        """Build a class from its coordinates."""
        return cls(tuple(coords))

    @property
    def genus(self) -> int:
        """Genus of the surface this class lives on."""
        return len(self.coords) // 2

    def __len__(self) -> int:
        """Return the number of coordinates."""
        return len(self.coords)

    def __iter__(self) -> Iterator[int]:
        """Iterate over the coordinates."""
        return iter(self.coords)

    def __neg__(self) -> "HomologyClass":
        """Reverse orientation."""
        return HomologyClass(tuple(checked(-entry) for entry in self.coords))

    def is_zero(self) -> bool:
        """Check for the zero class."""
        return not any(self.coords)

    def normalized(self) -> "HomologyClass":
        """Flip sign so the first nonzero coordinate is positive."""
        leading = next((entry for entry in self.coords if entry), 0)
        return -self if leading < 0 else self

    def to_list(self) -> List[int]:
        """Return the coordinates as a list."""
        return list(self.coords)

    def __str__(self) -> str:
        """Render as a coordinate tuple."""
        return "(" + ", ".join(str(entry) for entry in self.coords) + ")"


def standard_symplectic_form(genus: int) -> IntMatrix:
    """Block-diagonal J with [[0, 1], [-1, 0]] on each genus-one block."""
    if genus < 1:
        raise DimensionError(f"Genus must be positive, got {genus}")
    block = IntMatrix([[0, 1], [-1, 0]])
    return IntMatrix.block_diagonal([block] * genus)


def symplectic_pairing(x: HomologyClass, y: HomologyClass) -> int:
    """Algebraic intersection xᵀ·J·y, with a_i · b_i = 1."""
    if len(x) != len(y):
        raise DimensionError(f"Cannot pair classes of lengths {len(x)} and {len(y)}")
    total = 0
    for k in range(0, len(x), 2):
        total += x.coords[k] * y.coords[k + 1] - x.coords[k + 1] * y.coords[k]
    return checked(total)


def is_symplectic(m: IntMatrix) -> bool:
    """Check Mᵀ·J·M = J."""
    if not m.is_square():
        raise DimensionError(f"A symplectic matrix must be square, got {m.shape}")
    if m.rows == 0 or m.rows % 2:
        raise DimensionError(f"Symplectic dimension must be even, got {m.rows}")
    j = standard_symplectic_form(m.rows // 2)
    return m.T @ j @ m == j


def symplectic_inverse(m: IntMatrix) -> IntMatrix:
    """Inverse of a symplectic matrix, −J·Mᵀ·J."""
    j = standard_symplectic_form(m.rows // 2)
    return -(j @ m.T @ j)


def is_primitive(x: HomologyClass) -> bool:
    """Check that the coordinates are coprime."""
    return reduce(gcd, (abs(entry) for entry in x.coords), 0) == 1
