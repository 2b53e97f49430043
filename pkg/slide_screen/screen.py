# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.
"""Screening homology classes against the arc-monodromy constraint."""

import concurrent.futures
import logging
from dataclasses import dataclass, field
from typing import (
    Any,
    Dict,
    Iterable,
    Iterator,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
)

import numpy as np

from slide_screen.errors import ArithmeticOverflowError, ConstraintError, DimensionError
from slide_screen.lattice import (
    INT_MAX,
    HomologyClass,
    is_primitive,
    symplectic_pairing,
)
from slide_screen.monodromy import (
    ConnectedSumDecomposition,
    FiberedMonodromy,
    QuadraticForm,
    make_figure_eight,
    screening_form,
)

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

# Largest box (in lattice points) a brute-force scan will walk.
MAX_BOX_POINTS = 50_000_000

# Lattice points handed to numpy at once inside a single worker.
_SLAB_POINTS = 2_000_000


@dataclass(frozen=True)
class ScreenConstraint:
    """lower <= Q(x) <= upper."""

    lower: int = -1
    upper: int = 1

    def __post_init__(self):
        """Validate the bounds."""
        if self.lower > self.upper:
            raise ConstraintError(
                f"Constraint lower bound {self.lower} exceeds upper bound {self.upper}"
            )

    def contains(self, value: int) -> bool:
        """Check a screening value."""
        return self.lower <= value <= self.upper

    def to_dict(self) -> Dict[str, int]:
        """Render for reports."""
        return {"lower": self.lower, "upper": self.upper}


@dataclass(frozen=True)
class SolutionSet:
    """Sign-normalised classes passing a constraint, sorted, with their values."""

    classes: Tuple[HomologyClass, ...]
    values: Tuple[int, ...]
    bound: int
    constraint: ScreenConstraint = field(default_factory=ScreenConstraint)

    def __len__(self) -> int:
        """Return the number of classes."""
        return len(self.classes)

    def __iter__(self):
        """Iterate over the classes."""
        return iter(self.classes)

    def __contains__(self, item: object) -> bool:
        """Membership by class."""
        return item in self.classes

    def as_tuples(self) -> List[Tuple[int, ...]]:
        """The classes as coordinate tuples."""
        return [x.coords for x in self.classes]

    def to_dict(self) -> Dict[str, Any]:
        """Render in the report format."""
        return {
            "bound": self.bound,
            "constraint": self.constraint.to_dict(),
            "solutions": [x.to_list() for x in self.classes],
            "values": list(self.values),
        }


def normalize(x: HomologyClass) -> HomologyClass:
    """Sign-normalise: the first nonzero coordinate becomes positive."""
    return x.normalized()


def evaluate(q: QuadraticForm, x: HomologyClass) -> int:
    """Q(x)."""
    return q.evaluate(x)


def _check_box(q: QuadraticForm, bound: int) -> None:
    """Refuse boxes that are too large or whose values could overflow."""
    if bound < 1:
        raise ConstraintError(f"Bound must be at least 1, got {bound}")

    dim = q.matrix.rows
    points = (2 * bound + 1) ** dim
    if points > MAX_BOX_POINTS:
        raise ConstraintError(
            f"A box of bound {bound} in dimension {dim} has {points} points; "
            f"the limit is {MAX_BOX_POINTS}"
        )

    weight = int(np.abs(q.matrix.to_numpy().astype(object)).sum())
    if weight * bound * bound > INT_MAX:
        raise ArithmeticOverflowError(
            f"Values of {q.polynomial()} on a box of bound {bound} may overflow"
        )


def _slabs(bound: int, dim: int, workers: int) -> List[Tuple[int, int]]:
    """Split first-coordinate values 0..bound into contiguous ranges."""
    per_value = (2 * bound + 1) ** (dim - 1)
    values = bound + 1
    pieces = max(workers, -(-values * per_value // _SLAB_POINTS))
    pieces = min(pieces, values)
    step = -(-values // pieces)
    return [(start, min(start + step, values)) for start in range(0, values, step)]


def _scan_slab(
    form: np.ndarray,
    first: Tuple[int, int],
    bound: int,
    constraint: ScreenConstraint,
    allow_imprimitive: bool,
    allow_zero: bool,
) -> Tuple[np.ndarray, np.ndarray]:
    """Evaluate the form on one slab of the half-box and filter it."""
    dim = form.shape[0]
    axes = [np.arange(first[0], first[1], dtype=np.int64)]
    axes += [np.arange(-bound, bound + 1, dtype=np.int64)] * (dim - 1)
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, dim)

    values = np.einsum("ki,ij,kj->k", grid, form, grid)

    nonzero = grid != 0
    has_nonzero = nonzero.any(axis=1)
    leading = grid[np.arange(len(grid)), nonzero.argmax(axis=1)]
    normalized = has_nonzero & (leading > 0)

    if allow_imprimitive:
        keep = normalized
    else:
        keep = normalized & (np.gcd.reduce(np.abs(grid), axis=1) == 1)
    if allow_zero:
        keep = keep | ~has_nonzero

    keep &= (values >= constraint.lower) & (values <= constraint.upper)
    return grid[keep], values[keep]


def brute_force_solutions(
    q: QuadraticForm,
    bound: int,
    constraint: Optional[ScreenConstraint] = None,
    allow_imprimitive: bool = False,
    allow_zero: bool = False,
    workers: int = 1,
) -> SolutionSet:
    """Every sign-normalised class in the box |x_i| <= bound passing the constraint.

    This is the reference enumeration that the parametrised families are
    checked against. The scan is split into slabs of the first coordinate and
    may run on several threads; the merged result is deduplicated and sorted,
    so it does not depend on the number of workers.
    """
    constraint = constraint or ScreenConstraint()
    _check_box(q, bound)

    dim = q.matrix.rows
    form = q.matrix.to_numpy()
    slabs = _slabs(bound, dim, max(1, workers))
    log.debug("Scanning bound %d in dimension %d as %d slabs", bound, dim, len(slabs))

    def scan(first: Tuple[int, int]) -> Tuple[np.ndarray, np.ndarray]:
        return _scan_slab(form, first, bound, constraint, allow_imprimitive, allow_zero)

    if workers > 1 and len(slabs) > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(scan, slabs))
    else:
        results = [scan(slab) for slab in slabs]

    points = np.concatenate([points for points, _ in results])
    values = np.concatenate([values for _, values in results])

    if len(points):
        points, index = np.unique(points, axis=0, return_index=True)
        values = values[index]

    solutions = SolutionSet(
        classes=tuple(HomologyClass(tuple(int(c) for c in row)) for row in points),
        values=tuple(int(value) for value in values),
        bound=bound,
        constraint=constraint,
    )
    log.info(
        "Found %d classes with %d <= %s <= %d in the box of bound %d",
        len(solutions),
        constraint.lower,
        q.polynomial(),
        constraint.upper,
        bound,
    )
    return solutions


def fibonacci(count: int) -> List[int]:
    """The first `count` Fibonacci numbers, starting f₀ = 0, f₁ = 1."""
    numbers = [0, 1]
    while len(numbers) < count:
        numbers.append(numbers[-1] + numbers[-2])
    return numbers[:count]


@dataclass(frozen=True)
class FibonacciFamily:
    """The Fibonacci numbers f₀ .. f_max_index and their successive pairs."""

    max_index: int

    def __post_init__(self):
        """Validate the index."""
        if self.max_index < 1:
            raise ConstraintError(
                f"A family needs max_index >= 1, got {self.max_index}"
            )

    @classmethod
    def covering(cls, bound: int) -> "FibonacciFamily":
        """The shortest family whose last number exceeds bound."""
        numbers = [0, 1]
        while numbers[-1] <= bound:
            numbers.append(numbers[-1] + numbers[-2])
        return cls(len(numbers) - 1)

    def numbers(self) -> List[int]:
        """f₀ .. f_max_index."""
        return fibonacci(self.max_index + 1)

    def pairs(self) -> Iterator[Tuple[int, int]]:
        """Successive pairs (f_{k+1}, f_k)."""
        f = self.numbers()
        return zip(f[1:], f)


def fibonacci_solutions(bound: int) -> SolutionSet:
    """The figure-eight solutions predicted by successive Fibonacci numbers.

    With m·n >= 0 the larger number is |m|, giving (f_{k+1}, f_k); with
    m·n <= 0 it is |n|, giving (f_k, -f_{k+1}). Both are sign-normalised and
    kept when they fit in the box.
    """
    if bound < 1:
        raise ConstraintError(f"Bound must be at least 1, got {bound}")

    found = set()
    for larger, smaller in FibonacciFamily.covering(bound).pairs():
        if larger > bound:
            break
        found.add(HomologyClass.of(larger, smaller).normalized())
        found.add(HomologyClass.of(smaller, -larger).normalized())

    q = screening_form(make_figure_eight())
    classes = tuple(sorted(found))
    return SolutionSet(
        classes=classes,
        values=tuple(q.evaluate(x) for x in classes),
        bound=bound,
        constraint=ScreenConstraint(),
    )


def fibonacci_family(k: int) -> List[HomologyClass]:
    """Three successive Fibonacci pairs (f_k, f_{k+1}) .. (f_{k+2}, f_{k+3})."""
    if k < 0:
        raise ConstraintError(f"Fibonacci index must be >= 0, got {k}")
    f = FibonacciFamily(k + 3).numbers()
    return [HomologyClass.of(f[i], f[i + 1]) for i in range(k, k + 3)]


def _measure(x: HomologyClass) -> int:
    return max(abs(entry) for entry in x.coords)


def _neighbours(
    h: FiberedMonodromy, inverse: FiberedMonodromy, x: HomologyClass
) -> Iterator[HomologyClass]:
    """h(x) and h⁻¹(x), leaving out an image that does not fit in 64 bits."""
    for step in (h, inverse):
        try:
            yield step.act(x)
        except ArithmeticOverflowError:
            continue


def descent_reduce(h: FiberedMonodromy, x: HomologyClass) -> HomologyClass:
    """Walk x down its h-orbit to a smallest representative.

    h or h⁻¹ is applied while it strictly shrinks max|coordinate|. Where the
    walk stops, the classes reachable without changing that size form a
    finite plateau; the lexicographically greatest sign-normalised class on it
    is returned, so every orbit has one answer.
    """
    if h.genus != 1:
        raise DimensionError(f"Descent works on genus one blocks, got genus {h.genus}")
    if len(x) != 2:
        raise DimensionError(f"Expected a class of length 2, got {len(x)}")
    if x.is_zero():
        raise ConstraintError("Cannot descend the zero class")

    inverse = h.inverse()
    current = x
    steps = 0
    while True:
        size = _measure(current)
        smaller = [
            image
            for image in _neighbours(h, inverse, current)
            if _measure(image) < size
        ]
        if not smaller:
            break
        current = min(smaller, key=_measure)
        steps += 1

    size = _measure(current)
    plateau = {current}
    frontier = [current]
    while frontier:
        y = frontier.pop()
        for image in _neighbours(h, inverse, y):
            if _measure(image) == size and image not in plateau:
                plateau.add(image)
                frontier.append(image)

    terminal = max(y.normalized() for y in plateau)
    log.debug("Descended %s to %s in %d steps", x, terminal, steps)
    return terminal


class PairingTable(NamedTuple):
    """Pairwise intersections of a family of classes."""

    table: List[List[int]]
    admissible: bool
    primitive: List[bool]

    def to_dict(self) -> Dict[str, Any]:
        """Render for reports."""
        return {
            "admissible": self.admissible,
            "note": "necessary condition for disjoint arc representatives",
            "primitive": self.primitive,
            "table": self.table,
        }


def family_pairing_table(classes: Sequence[HomologyClass]) -> PairingTable:
    """Pair every two classes; admissible iff off-diagonal entries are in {-1, 0, 1}."""
    lengths = {len(x) for x in classes}
    if len(lengths) > 1:
        raise DimensionError(f"Family classes have different lengths: {lengths}")

    table = [[symplectic_pairing(x, y) for y in classes] for x in classes]
    admissible = all(
        abs(table[i][j]) <= 1
        for i in range(len(classes))
        for j in range(len(classes))
        if i != j
    )
    return PairingTable(
        table=table,
        admissible=admissible,
        primitive=[is_primitive(x) for x in classes],
    )


class ClassVerdict(NamedTuple):
    """A class, its screening value and whether it passed."""

    homology_class: HomologyClass
    value: int
    passed: bool


class BlockReport(NamedTuple):
    """Screening results for one summand of a connected sum."""

    index: int
    monodromy: FiberedMonodromy
    verdicts: Tuple[ClassVerdict, ...]

    @property
    def passed(self) -> bool:
        """True when every class in the block passes."""
        return all(verdict.passed for verdict in self.verdicts)


class ConnectedSumReport(NamedTuple):
    """Screening results for every summand."""

    blocks: Tuple[BlockReport, ...]
    constraint: ScreenConstraint

    @property
    def passed(self) -> bool:
        """True when every class in every block passes."""
        return all(block.passed for block in self.blocks)

    def to_dict(self) -> Dict[str, Any]:
        """Render for reports."""
        return {
            "blocks": [
                {
                    "index": block.index,
                    "monodromy": block.monodromy.name,
                    "passed": block.passed,
                    "classes": [v.homology_class.to_list() for v in block.verdicts],
                    "values": [v.value for v in block.verdicts],
                    "verdicts": [v.passed for v in block.verdicts],
                }
                for block in self.blocks
            ],
            "constraint": self.constraint.to_dict(),
            "passed": self.passed,
        }


def screen_connected_sum(
    decomposition: ConnectedSumDecomposition,
    per_block_classes: Sequence[Iterable[HomologyClass]],
    constraint: Optional[ScreenConstraint] = None,
) -> ConnectedSumReport:
    """Screen the arc classes of each summand against its own monodromy."""
    constraint = constraint or ScreenConstraint()
    if len(per_block_classes) != len(decomposition.blocks):
        raise DimensionError(
            f"{len(decomposition.blocks)} blocks but {len(per_block_classes)} "
            "class lists"
        )

    blocks = []
    for index, (block, classes) in enumerate(
        zip(decomposition.blocks, per_block_classes)
    ):
        q = screening_form(block)
        verdicts = []
        for x in classes:
            if len(x) != 2 * block.genus:
                raise DimensionError(
                    f"Class {x} does not live on block {index} of genus {block.genus}"
                )
            value = q.evaluate(x)
            verdicts.append(ClassVerdict(x, value, constraint.contains(value)))
        blocks.append(BlockReport(index, block, tuple(verdicts)))

    report = ConnectedSumReport(tuple(blocks), constraint)
    log.info("Connected sum screen %s", "passed" if report.passed else "failed")
    return report
