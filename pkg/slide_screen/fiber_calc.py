# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.
"""Genus bookkeeping for compressing a fiber along a curve, and what it implies."""

import logging
from dataclasses import dataclass
from typing import Any, Dict, NamedTuple, Optional, Tuple

from slide_screen.errors import InvalidSurfaceError

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

S3 = "S^3"
LENS = "Lens"
S1XS2 = "S^1xS^2"
TORUS_BUNDLE = "torus-bundle"
MANIFOLD_VOCABULARY = (S3, LENS, S1XS2, TORUS_BUNDLE)

N_SUM_S1XS2 = "N # S^1xS^2"
FIBERED_SUM = "M1 # M2"
L_SUM_S1XS2 = "L # S^1xS^2"


@dataclass(frozen=True)
class FiberSurface:
    """A closed orientable surface, possibly disconnected, by component genus."""

    genera: Tuple[int, ...]

    def __post_init__(self):
        """Validate the genera."""
        genera = tuple(self.genera)
        if not genera:
            raise InvalidSurfaceError("A surface needs at least one component")
        if any(g < 0 for g in genera):
            raise InvalidSurfaceError(f"Genus cannot be negative: {genera}")
        object.__setattr__(self, "genera", genera)

    @classmethod
    def closed(cls, genus: int) -> "FiberSurface":
        """A connected closed surface of the given genus."""
        return cls((genus,))

    @property
    def genus(self) -> int:
        """Total genus."""
        return sum(self.genera)

    @property
    def components(self) -> int:
        """Number of components."""
        return len(self.genera)

    def to_dict(self) -> Dict[str, Any]:
        """Render for reports."""
        return {
            "components": self.components,
            "euler_characteristic": euler_characteristic(self),
            "genera": list(self.genera),
            "genus": self.genus,
        }


@dataclass(frozen=True)
class CurveOnFiber:
    """An essential simple closed curve c on the fiber, and what h does to it."""

    separating: bool
    split: Optional[Tuple[int, int]] = None
    isotopy_class_fixed: Optional[bool] = None
    orientation_preserved: Optional[bool] = None

    def __post_init__(self):
        """A split is given exactly when the curve separates."""
        if self.separating and self.split is None:
            raise InvalidSurfaceError("A separating curve needs its split (g1, g2)")
        if not self.separating and self.split is not None:
            raise InvalidSurfaceError("Only a separating curve has a split")
        if self.split is not None:
            split = tuple(self.split)
            if len(split) != 2:
                raise InvalidSurfaceError(f"A split has two genera, got {split}")
            object.__setattr__(self, "split", split)


def euler_characteristic(surface: FiberSurface) -> int:
    """χ = Σ (2 − 2gᵢ)."""
    return sum(2 - 2 * g for g in surface.genera)


def _single_genus(surface: FiberSurface) -> int:
    if surface.components != 1:
        raise InvalidSurfaceError(
            f"Expected a connected fiber, got {surface.components} components"
        )
    return surface.genera[0]


def compress(surface: FiberSurface, curve: CurveOnFiber) -> FiberSurface:
    """Compress a connected fiber along c.

    A non-separating curve drops the genus by one; a separating curve with
    split (g1, g2) leaves two components of genera g1 and g2. Either way χ
    rises by 2.
    """
    genus = _single_genus(surface)
    if genus < 1:
        raise InvalidSurfaceError("A sphere has no essential curve to compress")

    if not curve.separating:
        result = FiberSurface((genus - 1,))
    else:
        assert curve.split is not None
        g1, g2 = curve.split
        if g1 < 1 or g2 < 1 or g1 + g2 != genus:
            raise InvalidSurfaceError(
                f"Split {curve.split} is not an essential separation of genus {genus}"
            )
        result = FiberSurface((g1, g2))

    log.debug("Compressed genus %d along %s to %s", genus, curve, result.genera)
    return result


def genus_drop_check(genus_before: int, genus_after: int) -> bool:
    """Whether the surface left after compressing has lower genus."""
    if genus_before < 0 or genus_after < 0:
        raise InvalidSurfaceError(
            f"Genera must be >= 0, got {genus_before} and {genus_after}"
        )
    return genus_after < genus_before


class CaseReport(NamedTuple):
    """The shape of M_surg for one branch of the structural case analysis."""

    branch: str
    description: str
    fiber: FiberSurface
    summands: Tuple[str, ...]
    consistent_with_target: Optional[bool]
    notes: Tuple[str, ...]

    def to_dict(self) -> Dict[str, Any]:
        """Render for reports."""
        return {
            "branch": self.branch,
            "consistent_with_target": self.consistent_with_target,
            "description": self.description,
            "fiber": self.fiber.to_dict(),
            "notes": list(self.notes),
            "summands": list(self.summands),
        }


def _double_s1xs2_verdict(surface: FiberSurface) -> Tuple[bool, str]:
    if surface.genus == 1:
        return True, "F is a torus, so F' is a sphere and N is S^1xS^2"
    return False, (
        f"impossible: surgery giving #2(S^1xS^2) with h(c) isotopic to c "
        f"forces F to be a torus, but F has genus {surface.genus}"
    )


def isotopic_case_classify(
    surface: FiberSurface,
    curve: CurveOnFiber,
    target_double_s1xs2: bool = False,
) -> CaseReport:
    """Decide the structure of M_surg when h(c) is isotopic to c.

    Non-separating curves, and separating curves whose isotopy reverses c,
    give N # S¹×S² with N fibered. Separating curves whose isotopy preserves
    c give M₁ # M₂ with each Mᵢ fibered by one side of c. With
    `target_double_s1xs2` the report also says whether #₂(S¹×S²) is
    possible, which needs F to be a torus.
    """
    if curve.isotopy_class_fixed is not True:
        raise InvalidSurfaceError("This case analysis assumes h(c) is isotopic to c")

    compressed = compress(surface, curve)
    notes = []

    if not curve.separating:
        fiber = compressed
        branch = N_SUM_S1XS2
        description = (
            f"M_surg = N # S^1xS^2, N fibers over the circle with fiber of "
            f"genus {fiber.genus}"
        )
        summands: Tuple[str, ...] = ("N", S1XS2)
        if fiber.genus == 0:
            notes.append("the fiber of N is a sphere, so N is S^1xS^2")
    elif curve.orientation_preserved is None:
        raise InvalidSurfaceError(
            "A separating curve needs to know whether the isotopy preserves it"
        )
    elif not curve.orientation_preserved:
        g1, g2 = compressed.genera
        if g1 != g2:
            raise InvalidSurfaceError(
                f"h reverses c and so exchanges its sides, which needs equal "
                f"genera, got {compressed.genera}"
            )
        fiber = FiberSurface((g1,))
        branch = N_SUM_S1XS2
        description = (
            f"M_surg = N # S^1xS^2, N fibers over the circle with fiber of "
            f"genus {g1} (h exchanges the two sides)"
        )
        summands = ("N", S1XS2)
    else:
        fiber = compressed
        branch = FIBERED_SUM
        g1, g2 = compressed.genera
        description = (
            f"M_surg = M1 # M2, M1 and M2 fiber over the circle with fibers of "
            f"genus {g1} and {g2}"
        )
        summands = ("M1", "M2")

    consistent: Optional[bool] = None
    if target_double_s1xs2:
        consistent, note = _double_s1xs2_verdict(surface)
        notes.append(note)

    report = CaseReport(branch, description, fiber, summands, consistent, tuple(notes))
    log.info("Isotopic case: %s", description)
    return report


def nonisotopic_case_classify(
    surface: FiberSurface,
    curve: CurveOnFiber,
    target_double_s1xs2: bool = False,
) -> CaseReport:
    """Decide the structure of M_surg on a genus-two fiber when h(c) misses c.

    The hypothesis is that h(c) can be isotoped off c but is not isotopic to
    it. Then c does not separate and M_surg = L # S¹×S² for L one of S³,
    S¹×S² or a Lens space. Only L = S¹×S² is compatible with #₂(S¹×S²). This
    describes the possible outcomes; it does not compute L.
    """
    if curve.isotopy_class_fixed is not False:
        raise InvalidSurfaceError(
            "This case analysis assumes h(c) is not isotopic to c"
        )
    genus = _single_genus(surface)
    if genus != 2:
        raise InvalidSurfaceError(
            f"The disjoint, non-isotopic case is only described for genus 2, "
            f"got {genus}"
        )
    if curve.separating:
        raise InvalidSurfaceError(
            "On a genus-2 fiber, a curve disjoint from but not isotopic to its "
            "image cannot separate"
        )

    notes = [
        "if M_surg is only known to be reducible, it is L # M' with M' "
        f"either {S1XS2} or a {TORUS_BUNDLE}",
    ]
    consistent: Optional[bool] = None
    if target_double_s1xs2:
        consistent = True
        notes.append(f"#2(S^1xS^2) requires L to be {S1XS2}")

    report = CaseReport(
        branch=L_SUM_S1XS2,
        description=f"M_surg = L # S^1xS^2 with L one of {S3}, {S1XS2}, {LENS}",
        fiber=compress(surface, curve),
        summands=("L", S1XS2),
        consistent_with_target=consistent,
        notes=tuple(notes),
    )
    log.info("Non-isotopic case: %s", report.description)
    return report
