# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.
"""Tests for fiber compression and the structural case analysis."""


import logging

import pytest

from slide_screen import (
    CurveOnFiber,
    FiberSurface,
    compress,
    euler_characteristic,
    genus_drop_check,
    isotopic_case_classify,
    nonisotopic_case_classify,
)
from slide_screen.errors import InvalidSurfaceError
from slide_screen.fiber_calc import FIBERED_SUM, L_SUM_S1XS2, N_SUM_S1XS2, S1XS2

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())


def all_compressions():
    """Every connected fiber of genus 1..10 with every essential curve type."""
    for genus in range(1, 11):
        yield genus, CurveOnFiber(separating=False)
        for g1 in range(1, genus):
            yield genus, CurveOnFiber(separating=True, split=(g1, genus - g1))


def test_compression_bookkeeping() -> None:
    """χ rises by 2 and every resulting component has smaller genus."""
    cases = 0
    for genus, curve in all_compressions():
        surface = FiberSurface.closed(genus)
        result = compress(surface, curve)

        assert euler_characteristic(result) == euler_characteristic(surface) + 2
        assert all(genus_drop_check(genus, g) for g in result.genera)
        assert result.components == (2 if curve.separating else 1)
        cases += 1
    assert cases == 55


def test_compression_errors() -> None:
    """Spheres, bad splits and disconnected inputs are refused."""
    with pytest.raises(InvalidSurfaceError):
        compress(FiberSurface.closed(0), CurveOnFiber(separating=False))
    with pytest.raises(InvalidSurfaceError):
        compress(FiberSurface.closed(3), CurveOnFiber(separating=True, split=(0, 3)))
    with pytest.raises(InvalidSurfaceError):
        compress(FiberSurface.closed(3), CurveOnFiber(separating=True, split=(1, 1)))
    with pytest.raises(InvalidSurfaceError):
        compress(FiberSurface((1, 1)), CurveOnFiber(separating=False))
    with pytest.raises(InvalidSurfaceError):
        CurveOnFiber(separating=True)
    with pytest.raises(InvalidSurfaceError):
        CurveOnFiber(separating=False, split=(1, 1))
    with pytest.raises(InvalidSurfaceError):
        FiberSurface((-1,))


def test_euler_characteristic() -> None:
    """χ = Σ (2 - 2g)."""
    assert euler_characteristic(FiberSurface.closed(0)) == 2
    assert euler_characteristic(FiberSurface.closed(1)) == 0
    assert euler_characteristic(FiberSurface((1, 2))) == -2


def test_isotopic_non_separating() -> None:
    """N # S^1xS^2 with N fibered by the compressed fiber."""
    report = isotopic_case_classify(
        FiberSurface.closed(3), CurveOnFiber(separating=False, isotopy_class_fixed=True)
    )
    assert report.branch == N_SUM_S1XS2
    assert report.summands == ("N", S1XS2)
    assert report.fiber.genera == (2,)
    assert report.consistent_with_target is None


def test_isotopic_separating_preserved() -> None:
    """M1 # M2, each fibered by one side of the curve."""
    report = isotopic_case_classify(
        FiberSurface.closed(3),
        CurveOnFiber(
            separating=True,
            split=(1, 2),
            isotopy_class_fixed=True,
            orientation_preserved=True,
        ),
    )
    assert report.branch == FIBERED_SUM
    assert report.summands == ("M1", "M2")
    assert report.fiber.genera == (1, 2)


def test_isotopic_separating_reversed() -> None:
    """h exchanges the sides, so N is fibered by one of them."""
    report = isotopic_case_classify(
        FiberSurface.closed(4),
        CurveOnFiber(
            separating=True,
            split=(2, 2),
            isotopy_class_fixed=True,
            orientation_preserved=False,
        ),
    )
    assert report.branch == N_SUM_S1XS2
    assert report.fiber.genera == (2,)

    with pytest.raises(InvalidSurfaceError):
        isotopic_case_classify(
            FiberSurface.closed(3),
            CurveOnFiber(
                separating=True,
                split=(1, 2),
                isotopy_class_fixed=True,
                orientation_preserved=False,
            ),
        )
    with pytest.raises(InvalidSurfaceError):
        isotopic_case_classify(
            FiberSurface.closed(4),
            CurveOnFiber(separating=True, split=(2, 2), isotopy_class_fixed=True),
        )


def test_isotopic_target_double_s1xs2() -> None:
    """#2(S^1xS^2) is only possible on a torus fiber."""
    curve = CurveOnFiber(separating=False, isotopy_class_fixed=True)

    torus = isotopic_case_classify(FiberSurface.closed(1), curve, True)
    assert torus.consistent_with_target is True
    assert torus.fiber.genus == 0

    for genus in range(2, 11):
        report = isotopic_case_classify(FiberSurface.closed(genus), curve, True)
        assert report.consistent_with_target is False
        assert any("impossible" in note for note in report.notes)


def test_isotopic_requires_hypothesis() -> None:
    """The isotopic analysis refuses curves without the isotopy hypothesis."""
    with pytest.raises(InvalidSurfaceError):
        isotopic_case_classify(FiberSurface.closed(2), CurveOnFiber(separating=False))
    with pytest.raises(InvalidSurfaceError):
        isotopic_case_classify(
            FiberSurface.closed(2),
            CurveOnFiber(separating=False, isotopy_class_fixed=False),
        )


def test_nonisotopic_genus_two() -> None:
    """L # S^1xS^2 with L one of S^3, S^1xS^2, Lens."""
    curve = CurveOnFiber(separating=False, isotopy_class_fixed=False)
    report = nonisotopic_case_classify(FiberSurface.closed(2), curve, True)

    assert report.branch == L_SUM_S1XS2
    assert report.summands == ("L", S1XS2)
    assert report.fiber.genera == (1,)
    assert report.consistent_with_target is True
    assert report.to_dict()["fiber"]["genus"] == 1

    with pytest.raises(InvalidSurfaceError):
        nonisotopic_case_classify(FiberSurface.closed(3), curve)
    with pytest.raises(InvalidSurfaceError):
        nonisotopic_case_classify(
            FiberSurface.closed(2),
            CurveOnFiber(separating=True, split=(1, 1), isotopy_class_fixed=False),
        )
    with pytest.raises(InvalidSurfaceError):
        nonisotopic_case_classify(
            FiberSurface.closed(2),
            CurveOnFiber(separating=False, isotopy_class_fixed=True),
        )


@pytest.mark.parametrize("before, after", [(-1, 0), (2, -1), (-3, -4)])
def test_genus_drop_check_refuses_negative_genus(before, after) -> None:
    """Genera are never negative."""
    with pytest.raises(InvalidSurfaceError):
        genus_drop_check(before, after)


def test_genus_drop_check_bounds() -> None:
    """Zero is a genus; equal genus is no drop."""
    assert genus_drop_check(1, 0)
    assert not genus_drop_check(0, 0)
    assert not genus_drop_check(2, 2)
