# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.
"""Framed links as framing/linking matrices, and handle slides on them."""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Iterator, List, Tuple

from slide_screen.errors import InvalidMatrixError, InvalidMoveError, SchemaError
from slide_screen.lattice import (
    AbelianGroupInvariants,
    IntMatrix,
    cokernel_invariants,
)

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())


class FramedLink:
    """A framed link, recorded only by its symmetric framing/linking matrix.

    The diagonal holds the framing of each component and the off-diagonal
    entries hold pairwise linking numbers. Components are indexed from 0 and
    keep their index across slides.
    """

    def __init__(self, matrix: IntMatrix):
        """Create a FramedLink from its matrix."""
        if not matrix.is_square() or matrix.rows < 1:
            raise InvalidMatrixError(
                f"A link matrix must be square with at least one row, got "
                f"{matrix.shape}"
            )
        if not matrix.is_symmetric():
            raise InvalidMatrixError(f"Link matrix is not symmetric: {matrix}")
        self.matrix = matrix

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "FramedLink":
        """Create a FramedLink from nested lists."""
        return cls(IntMatrix(rows))

    @classmethod
    def unlink(cls, n: int) -> "FramedLink":
        """The 0-framed unlink of n components."""
        return cls(IntMatrix.zeros(n, n))

    @classmethod
    def from_dict(cls, data: Any) -> "FramedLink":
        """Parse the link file format {"n": int, "matrix": [[int]]}."""
        if not isinstance(data, dict) or "n" not in data or "matrix" not in data:
            raise SchemaError('A link must be an object with "n" and "matrix"')

        n = data["n"]
        rows = data["matrix"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise SchemaError(f'"n" must be a positive integer, got {n!r}')
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise SchemaError('"matrix" must be a list of lists')
        if len(rows) != n or any(len(row) != n for row in rows):
            raise SchemaError(f'"matrix" must be {n}x{n}')

        return cls(IntMatrix(rows, cols=n))

    def to_dict(self) -> Dict[str, Any]:
        """Render in the link file format."""
        return {"n": self.n, "matrix": self.matrix.to_list()}

    @property
    def n(self) -> int:
        """Number of components."""
        return self.matrix.rows

    def framing(self, i: int) -> int:
        """Framing of component i."""
        return self.matrix[i, i]

    def linking_number(self, i: int, j: int) -> int:
        """Linking number of components i and j."""
        return self.matrix[i, j]

    def __eq__(self, other: object) -> bool:
        """Links are equal when their matrices are."""
        if not isinstance(other, FramedLink):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        """Hash the matrix."""
        return hash(self.matrix)

    def __repr__(self) -> str:
        """Return a string representation of the link."""
        return f"{self.__class__.__name__}({self.matrix.to_list()})"


def square_knot_and_unknot() -> FramedLink:
    """The 0-framed square knot beside an unlinked 0-framed unknot.

    Sliding the square knot over the unknot turns this link into the
    two-component unlink, so its surgery is #₂(S¹×S²). Only the matrix is
    kept, which is the zero matrix.
    """
    return FramedLink.unlink(2)


@dataclass(frozen=True)
class SlideMove:
    """Slide component `slider` over component `over`, with band sign `sign`."""

    slider: int
    over: int
    sign: int = 1

    def __post_init__(self):
        """Validate the move on its own."""
        for name in ("slider", "over", "sign"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise InvalidMoveError(f"{name} must be an integer, got {value!r}")
        if self.sign not in (1, -1):
            raise InvalidMoveError(f"sign must be +1 or -1, got {self.sign}")
        if self.slider == self.over:
            raise InvalidMoveError(f"Cannot slide component {self.slider} over itself")
        if self.slider < 0 or self.over < 0:
            raise InvalidMoveError(f"Component indices must be >= 0: {self}")

    def check(self, link: FramedLink) -> None:
        """Check the indices against a link."""
        if self.slider >= link.n or self.over >= link.n:
            raise InvalidMoveError(
                f"{self} is out of range for a {link.n}-component link"
            )

    def to_list(self) -> List[int]:
        """Render as [slider, over, sign]."""
        return [self.slider, self.over, self.sign]


@dataclass(frozen=True)
class SlideSequence:
    """An ordered list of slides, applied first to last."""

    moves: Tuple[SlideMove, ...] = ()

    def __post_init__(self):
        """Freeze the moves."""
        object.__setattr__(self, "moves", tuple(self.moves))

    def __iter__(self) -> Iterator[SlideMove]:
        """Iterate over the moves."""
        return iter(self.moves)

    def __len__(self) -> int:
        """Return the number of moves."""
        return len(self.moves)

    @classmethod
    def from_list(cls, data: Any) -> "SlideSequence":
        """Parse [[slider, over, sign], ...] (sign may be omitted)."""
        if isinstance(data, dict):
            data = data.get("moves")
        if not isinstance(data, list):
            raise SchemaError(
                'A slide sequence must be a list of moves or {"moves": [...]}'
            )

        moves = []
        for entry in data:
            if not isinstance(entry, list) or len(entry) not in (2, 3):
                raise SchemaError(f"A move must be [slider, over, sign], got {entry!r}")
            moves.append(SlideMove(*entry))
        return cls(tuple(moves))

    def to_list(self) -> List[List[int]]:
        """Render as [[slider, over, sign], ...]."""
        return [move.to_list() for move in self.moves]


def _elementary(n: int, move: SlideMove) -> IntMatrix:
    """E = I + ε·(unit at row `over`, column `slider`)."""
    rows = IntMatrix.identity(n).to_list()
    rows[move.over][move.slider] = move.sign
    return IntMatrix(rows, cols=n)


def apply_slide(link: FramedLink, move: SlideMove) -> FramedLink:
    """Slide one component over another: A′ = Eᵀ·A·E.

    The slider's framing becomes u + v + 2ε·link(U, V) and its linking with
    every other component k becomes link(U, k) + ε·link(V, k).
    """
    move.check(link)
    e = _elementary(link.n, move)
    result = FramedLink(e.T @ link.matrix @ e)
    log.debug(
        "Slid %d over %d (sign %+d): framing %d -> %d",
        move.slider,
        move.over,
        move.sign,
        link.framing(move.slider),
        result.framing(move.slider),
    )
    return result


def apply_sequence(link: FramedLink, sequence: SlideSequence) -> FramedLink:
    """Apply every move of a sequence in order."""
    for move in sequence:
        link = apply_slide(link, move)
    log.debug("Applied %d slides", len(sequence))
    return link


def invert_move(move: SlideMove) -> SlideMove:
    """The slide that undoes `move`."""
    return SlideMove(move.slider, move.over, -move.sign)


def inverse_slide_sequence(sequence: SlideSequence) -> SlideSequence:
    """The sequence that undoes `sequence`."""
    return SlideSequence(tuple(invert_move(move) for move in reversed(sequence.moves)))


def dual_slide_sequence(sequence: SlideSequence) -> SlideSequence:
    """Read the slides from the dual link's side.

    A slide of i over j corresponds to a slide of the dual of j over the dual
    of i, and the order of the sequence is reversed. Applying this twice
    returns the original sequence.
    """
    return SlideSequence(
        tuple(
            SlideMove(move.over, move.slider, move.sign)
            for move in reversed(sequence.moves)
        )
    )


def is_gpr_admissible(link: FramedLink) -> bool:
    """Whether surgery on the link can possibly be #ₙ(S¹×S²).

    This is the necessary condition that every framing and every linking
    number vanishes; it is preserved by slides in both directions.
    """
    return link.matrix.is_zero()


def surgery_homology(link: FramedLink) -> AbelianGroupInvariants:
    """H₁ of the surgered manifold, the cokernel of the link matrix."""
    invariants = cokernel_invariants(link.matrix)
    log.debug("Surgery on %s has H_1 = %s", link, invariants)
    return invariants
