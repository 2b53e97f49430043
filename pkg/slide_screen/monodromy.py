# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.
"""Monodromies of fibered manifolds, acting on H₁ of the closed fiber."""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

from slide_screen.errors import DimensionError, InvalidMatrixError, SchemaError
from slide_screen.lattice import (
    HomologyClass,
    IntMatrix,
    checked,
    is_symplectic,
    standard_symplectic_form,
    symplectic_inverse,
)

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

DERIVED = "derived"
PRINTED = "printed"


class FiberedMonodromy:
    """The action of a monodromy on H₁ of a closed genus-g fiber."""

    def __init__(self, matrix: IntMatrix, name: Optional[str] = None):
        """Create a FiberedMonodromy, rejecting non-symplectic matrices."""
        if not matrix.is_square() or matrix.rows < 2 or matrix.rows % 2:
            raise DimensionError(
                f"A monodromy must be 2g x 2g with g >= 1, got {matrix.shape}"
            )
        if not is_symplectic(matrix):
            raise InvalidMatrixError(f"Monodromy is not symplectic: {matrix}")
        self.matrix = matrix
        self.name = name

    @classmethod
    def identity(cls, genus: int) -> "FiberedMonodromy":
        """The identity monodromy of a genus-g fiber."""
        return cls(IntMatrix.identity(2 * genus), name="identity")

    @classmethod
    def from_dict(cls, data: Any) -> "FiberedMonodromy":
        """Parse the monodromy file format {"genus": int, "matrix": [[int]]}."""
        if not isinstance(data, dict) or "genus" not in data or "matrix" not in data:
            raise SchemaError('A monodromy must be an object with "genus" and "matrix"')

        genus = data["genus"]
        rows = data["matrix"]
        if not isinstance(genus, int) or isinstance(genus, bool) or genus < 1:
            raise SchemaError(f'"genus" must be a positive integer, got {genus!r}')
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise SchemaError('"matrix" must be a list of lists')
        size = 2 * genus
        if len(rows) != size or any(len(row) != size for row in rows):
            raise SchemaError(f'"matrix" must be {size}x{size} for genus {genus}')

        return cls(IntMatrix(rows, cols=size), name=data.get("name"))

    def to_dict(self) -> Dict[str, Any]:
        """Render in the monodromy file format."""
        data: Dict[str, Any] = {"genus": self.genus, "matrix": self.matrix.to_list()}
        if self.name:
            data["name"] = self.name
        return data

    @property
    def genus(self) -> int:
        """Genus of the fiber."""
        return self.matrix.rows // 2

    @property
    def trace(self) -> int:
        """Trace of the action."""
        return sum(self.matrix.diagonal())

    def act(self, x: HomologyClass) -> HomologyClass:
        """Image of a class, M·x."""
        if len(x) != self.matrix.cols:
            raise DimensionError(
                f"Class of length {len(x)} does not live on a genus {self.genus} fiber"
            )
        return HomologyClass(self.matrix.apply(x.coords))

    def inverse(self) -> "FiberedMonodromy":
        """The inverse monodromy."""
        name = f"{self.name}^-1" if self.name else None
        return FiberedMonodromy(symplectic_inverse(self.matrix), name=name)

    def power(self, exponent: int) -> "FiberedMonodromy":
        """h^k, for any integer k."""
        base = self if exponent >= 0 else self.inverse()
        return FiberedMonodromy(base.matrix.power(abs(exponent)))

    def order(self, limit: int = 12) -> Optional[int]:
        """Smallest k <= limit with h^k = 1 on homology, or None."""
        identity = IntMatrix.identity(self.matrix.rows)
        current = self.matrix
        for k in range(1, limit + 1):
            if current == identity:
                return k
            current = current @ self.matrix
        return None

    def __eq__(self, other: object) -> bool:
        """Monodromies are equal when their matrices are."""
        if not isinstance(other, FiberedMonodromy):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        """Hash the matrix."""
        return hash(self.matrix)

    def __repr__(self) -> str:
        """Return a string representation of the monodromy."""
        return f"{self.__class__.__name__}({self.matrix.to_list()}, name={self.name!r})"


@dataclass(frozen=True)
class ConnectedSumDecomposition:
    """A monodromy that is block diagonal, one block per summand.

    The invariant separating curve is implicit: it is the boundary between
    consecutive blocks of coordinates.
    """

    blocks: Tuple[FiberedMonodromy, ...]

    def __post_init__(self):
        """Freeze the blocks."""
        blocks = tuple(self.blocks)
        if not blocks:
            raise DimensionError("A connected sum needs at least one summand")
        object.__setattr__(self, "blocks", blocks)

    @property
    def genus(self) -> int:
        """Total genus."""
        return sum(block.genus for block in self.blocks)

    def offsets(self) -> List[Tuple[int, int]]:
        """The (start, stop) coordinate range of each block."""
        ranges = []
        start = 0
        for block in self.blocks:
            ranges.append((start, start + 2 * block.genus))
            start += 2 * block.genus
        return ranges

    def assemble(self) -> FiberedMonodromy:
        """The block-diagonal monodromy."""
        matrix = IntMatrix.block_diagonal(block.matrix for block in self.blocks)
        names = [block.name or "?" for block in self.blocks]
        return FiberedMonodromy(matrix, name=" # ".join(names))


def connected_sum(
    parts: Iterable[FiberedMonodromy],
) -> Tuple[FiberedMonodromy, ConnectedSumDecomposition]:
    """Glue monodromies along an invariant separating curve."""
    decomposition = ConnectedSumDecomposition(tuple(parts))
    if len(decomposition.blocks) == 1:
        return decomposition.blocks[0], decomposition

    total = decomposition.assemble()
    log.info(
        "Connected sum of %d monodromies has genus %d",
        len(decomposition.blocks),
        total.genus,
    )
    return total, decomposition


class QuadraticForm:
    """Q(x) = xᵀ·B·x on H₁ of a genus-g fiber."""

    def __init__(self, matrix: IntMatrix, provenance: str = DERIVED, name: str = ""):
        """Create a QuadraticForm from its (not necessarily symmetric) matrix."""
        if not matrix.is_square() or matrix.rows < 2 or matrix.rows % 2:
            raise DimensionError(f"A form needs a 2g x 2g matrix, got {matrix.shape}")
        self.matrix = matrix
        self.provenance = provenance
        self.name = name

    @property
    def genus(self) -> int:
        """Genus of the fiber the form lives on."""
        return self.matrix.rows // 2

    def evaluate(self, x: HomologyClass) -> int:
        """Q(x)."""
        if len(x) != self.matrix.rows:
            raise DimensionError(
                f"Class of length {len(x)} does not fit a genus {self.genus} form"
            )
        image = self.matrix.apply(x.coords)
        return checked(sum(a * b for a, b in zip(x.coords, image)))

    def restrict(self, start: int, stop: int) -> "QuadraticForm":
        """The form on the coordinates start..stop-1."""
        rows = [row[start:stop] for row in self.matrix.to_list()[start:stop]]
        return QuadraticForm(IntMatrix(rows), self.provenance, self.name)

    def symmetric_coefficients(self) -> List[List[int]]:
        """Coefficient of x_i·x_j (i <= j), as an upper-triangular table."""
        size = self.matrix.rows
        return [
            [
                0
                if j < i
                else self.matrix[i, i]
                if i == j
                else self.matrix[i, j] + self.matrix[j, i]
                for j in range(size)
            ]
            for i in range(size)
        ]

    def polynomial(self) -> str:
        """Render as a polynomial, in m, n for genus one."""
        size = self.matrix.rows
        names = ["m", "n"] if size == 2 else [f"x{i + 1}" for i in range(size)]
        coefficients = self.symmetric_coefficients()

        terms = []
        for i in range(size):
            for j in range(i, size):
                coefficient = coefficients[i][j]
                if not coefficient:
                    continue
                monomial = f"{names[i]}^2" if i == j else f"{names[i]}{names[j]}"
                magnitude = "" if abs(coefficient) == 1 else str(abs(coefficient))
                sign = "-" if coefficient < 0 else "+"
                terms.append((sign, magnitude + monomial))

        if not terms:
            return "0"
        text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, term in terms[1:]:
            text += f" {sign} {term}"
        return text

    def to_dict(self) -> Dict[str, Any]:
        """Render for reports."""
        return {
            "matrix": self.matrix.to_list(),
            "polynomial": self.polynomial(),
            "provenance": self.provenance,
        }

    def __repr__(self) -> str:
        """Return a string representation of the form."""
        return f"{self.__class__.__name__}({self.polynomial()!r}, {self.provenance})"


def screening_form(h: FiberedMonodromy) -> QuadraticForm:
    """The form x ↦ [h(x)]·[x] that the arc constraint bounds.

    B = Jᵀ·M, so Q(x) = pairing(M·x, x). For the figure-eight this is
    −m² + mn + n²; the form is invariant under h.
    """
    j = standard_symplectic_form(h.genus)
    return QuadraticForm(j.T @ h.matrix, provenance=DERIVED, name=h.name or "")


def act(h: FiberedMonodromy, x: HomologyClass) -> HomologyClass:
    """Image of a class under a monodromy."""
    return h.act(x)


def make_figure_eight() -> FiberedMonodromy:
    """Figure-eight monodromy [[2, 1], [1, 1]]."""
    return FiberedMonodromy(IntMatrix([[2, 1], [1, 1]]), name="figure8")


def make_trefoil() -> FiberedMonodromy:
    """Trefoil monodromy [[0, 1], [-1, 1]], of order 6."""
    return FiberedMonodromy(IntMatrix([[0, 1], [-1, 1]]), name="trefoil")


BUILTIN_MONODROMIES: Dict[str, Callable[[], FiberedMonodromy]] = {
    "figure8": make_figure_eight,
    "trefoil": make_trefoil,
}

# The forms as printed alongside the matrices. The trefoil one differs from the
# derived m² − mn + n² by n ↦ −n.
_PRINTED_FORMS = {
    "figure8": [[-1, 1], [0, 1]],
    "trefoil": [[1, 1], [0, 1]],
}


def builtin_monodromy(name: str) -> FiberedMonodromy:
    """Look up a built-in monodromy by name."""
    try:
        return BUILTIN_MONODROMIES[name]()
    except KeyError as e:
        raise SchemaError(
            f"Unknown monodromy {name!r}; choose from {sorted(BUILTIN_MONODROMIES)}"
        ) from e


def printed_form(name: str) -> QuadraticForm:
    """The printed screening form of a built-in monodromy."""
    if name not in _PRINTED_FORMS:
        raise SchemaError(f"No printed form for {name!r}")
    return QuadraticForm(IntMatrix(_PRINTED_FORMS[name]), provenance=PRINTED, name=name)


def printed_trefoil_form() -> QuadraticForm:
    """m² + mn + n², the trefoil form as printed."""
    return printed_form("trefoil")
