# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.
"""Tests for screening classes against the arc constraint."""


import logging
import random
from typing import List, Tuple

import pytest

from slide_screen import (
    FiberedMonodromy,
    FibonacciFamily,
    HomologyClass,
    IntMatrix,
    QuadraticForm,
    ScreenConstraint,
    brute_force_solutions,
    connected_sum,
    descent_reduce,
    evaluate,
    family_pairing_table,
    fibonacci_family,
    fibonacci_solutions,
    make_figure_eight,
    make_trefoil,
    normalize,
    printed_trefoil_form,
    screen_connected_sum,
    screening_form,
)
from slide_screen.errors import ArithmeticOverflowError, ConstraintError, DimensionError
from slide_screen.screen import fibonacci

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

FIGURE_EIGHT_BOUND_3: List[Tuple[int, ...]] = [
    (0, 1),
    (1, -2),
    (1, -1),
    (1, 0),
    (1, 1),
    (2, -3),
    (2, 1),
    (3, 2),
]


def test_figure_eight_small_box() -> None:
    """Every solution with |m|, |n| <= 3, sorted, with values in {-1, 1}."""
    q = screening_form(make_figure_eight())
    solutions = brute_force_solutions(q, 3)

    assert solutions.as_tuples() == FIGURE_EIGHT_BOUND_3
    for x, value in zip(solutions.classes, solutions.values):
        assert value == evaluate(q, x)
        assert value in (-1, 1)
    assert HomologyClass.of(3, 2) in solutions
    assert HomologyClass.of(2, 3) not in solutions


def test_fibonacci_matches_brute_force() -> None:
    """For every bound up to 200 the Fibonacci pairs are exactly the solutions."""
    q = screening_form(make_figure_eight())
    for bound in range(1, 201):
        brute = brute_force_solutions(q, bound)
        predicted = fibonacci_solutions(bound)
        assert brute.as_tuples() == predicted.as_tuples(), bound
        assert brute.values == predicted.values


@pytest.mark.parametrize("bound", [1, 10, 100, 1000])
def test_trefoil_has_three_classes(bound: int) -> None:
    """Only three curves survive, and the printed form gives their mirror."""
    derived = brute_force_solutions(screening_form(make_trefoil()), bound)
    assert derived.as_tuples() == [(0, 1), (1, 0), (1, 1)]

    printed = brute_force_solutions(printed_trefoil_form(), bound)
    assert printed.as_tuples() == [(0, 1), (1, -1), (1, 0)]
    mirrored = sorted(
        normalize(HomologyClass.of(m, -n)) for m, n in derived.as_tuples()
    )
    assert list(printed.classes) == mirrored


def test_worker_count_does_not_change_result() -> None:
    """Threads only split the scan."""
    q = screening_form(make_figure_eight())
    single = brute_force_solutions(q, 300, workers=1)
    several = brute_force_solutions(q, 300, workers=4)
    assert single == several


def test_flags_and_constraints() -> None:
    """Zero and imprimitive classes only appear when asked for."""
    q = screening_form(make_figure_eight())

    with_zero = brute_force_solutions(q, 2, allow_zero=True)
    assert with_zero.as_tuples()[0] == (0, 0)
    assert with_zero.values[0] == 0

    wide = ScreenConstraint(-4, 4)
    assert (2, 0) not in brute_force_solutions(q, 2, wide).as_tuples()
    imprimitive = brute_force_solutions(q, 2, wide, allow_imprimitive=True)
    assert (2, 0) in imprimitive.as_tuples()

    positive = brute_force_solutions(q, 3, ScreenConstraint(1, 1))
    assert positive.as_tuples() == [(0, 1), (1, -2), (1, 1), (3, 2)]
    assert positive.to_dict()["constraint"] == {"lower": 1, "upper": 1}


def test_screen_errors() -> None:
    """Bad constraints, bounds and boxes are refused."""
    q = screening_form(make_figure_eight())
    with pytest.raises(ConstraintError):
        ScreenConstraint(2, 1)
    with pytest.raises(ConstraintError):
        brute_force_solutions(q, 0)
    with pytest.raises(ConstraintError):
        fibonacci_solutions(0)

    total, _ = connected_sum([make_figure_eight(), make_trefoil()])
    with pytest.raises(ConstraintError):
        brute_force_solutions(screening_form(total), 100)

    steep = QuadraticForm(IntMatrix([[2**45, 0], [0, 1]]))
    with pytest.raises(ArithmeticOverflowError):
        brute_force_solutions(steep, 1000)


def test_genus_two_brute_force() -> None:
    """A small box on a connected sum is scanned in four dimensions."""
    total, _ = connected_sum([make_figure_eight(), make_trefoil()])
    solutions = brute_force_solutions(screening_form(total), 1, ScreenConstraint(0, 0))
    # Q vanishes on (1, 0, 1, 0): -1 from the first block, +1 from the second.
    assert (1, 0, 1, 0) in solutions.as_tuples()
    assert all(value == 0 for value in solutions.values)


def test_fibonacci_numbers() -> None:
    """f_0 = 0, f_1 = 1."""
    assert fibonacci(8) == [0, 1, 1, 2, 3, 5, 8, 13]
    assert fibonacci(1) == [0]


@pytest.mark.parametrize(
    "start, terminal",
    [
        ((5, 3), (1, 0)),
        ((8, 5), (1, 1)),
        ((1, 0), (1, 0)),
        ((-3, -2), (1, 1)),
        ((2, -3), (1, 0)),
    ],
)
def test_descent_examples(start, terminal) -> None:
    """Known orbit representatives."""
    h = make_figure_eight()
    assert descent_reduce(h, HomologyClass(start)) == HomologyClass(terminal)


def test_descent_orbits() -> None:
    """Every figure-eight solution in the box of 200 lands on one of two classes."""
    h = make_figure_eight()
    q = screening_form(h)
    terminals = set()
    for x in brute_force_solutions(q, 200):
        terminal = descent_reduce(h, x)
        assert q.evaluate(terminal) == q.evaluate(x)
        terminals.add(terminal)
    assert terminals == {HomologyClass.of(1, 0), HomologyClass.of(1, 1)}


def test_descent_errors() -> None:
    """Zero classes and higher genus are refused."""
    with pytest.raises(ConstraintError):
        descent_reduce(make_figure_eight(), HomologyClass.of(0, 0))
    total, _ = connected_sum([make_figure_eight(), make_trefoil()])
    with pytest.raises(DimensionError):
        descent_reduce(total, HomologyClass.of(1, 0, 0, 0))


def test_family_pairing_table() -> None:
    """Three successive Fibonacci pairs pair to ±1; a stray class breaks it."""
    family = fibonacci_family(2)
    assert [x.to_list() for x in family] == [[1, 2], [2, 3], [3, 5]]

    table = family_pairing_table(family)
    assert table.admissible
    assert table.table == [[0, -1, -1], [1, 0, 1], [1, -1, 0]]
    assert table.primitive == [True, True, True]

    broken = family_pairing_table(
        [HomologyClass.of(1, 2), HomologyClass.of(3, 5), HomologyClass.of(2, 0)]
    )
    assert not broken.admissible
    assert broken.primitive == [True, True, False]

    with pytest.raises(DimensionError):
        family_pairing_table([HomologyClass.of(1, 2), HomologyClass.of(1, 0, 0, 0)])


def test_fibonacci_families_are_admissible() -> None:
    """Every window of three successive pairs is admissible."""
    for k in range(30):
        assert family_pairing_table(fibonacci_family(k)).admissible


def test_screen_connected_sum() -> None:
    """Each block is screened against its own monodromy."""
    _, decomposition = connected_sum([make_figure_eight(), make_trefoil()])

    report = screen_connected_sum(
        decomposition,
        [[HomologyClass.of(1, 0), HomologyClass.of(2, 1)], [HomologyClass.of(1, 1)]],
    )
    assert report.passed
    assert [block.passed for block in report.blocks] == [True, True]

    failing = screen_connected_sum(
        decomposition, [[HomologyClass.of(1, 2)], [HomologyClass.of(1, 1)]]
    )
    assert not failing.passed
    assert failing.to_dict()["blocks"][0]["values"] == [5]

    with pytest.raises(DimensionError):
        screen_connected_sum(decomposition, [[HomologyClass.of(1, 0)]])
    with pytest.raises(DimensionError):
        screen_connected_sum(decomposition, [[HomologyClass.of(1, 0, 0, 0)], []])


def test_small_boxes() -> None:
    """The box of bound 1 for the figure-eight and for the identity."""
    figure_eight = brute_force_solutions(screening_form(make_figure_eight()), 1)
    assert figure_eight.as_tuples() == [(0, 1), (1, -1), (1, 0), (1, 1)]
    assert figure_eight.values == (1, -1, -1, 1)

    # The identity monodromy moves nothing, so Q vanishes everywhere.
    identity = screening_form(FiberedMonodromy.identity(1))
    everything = brute_force_solutions(identity, 1, ScreenConstraint(0, 0))
    assert everything.as_tuples() == [(0, 1), (1, -1), (1, 0), (1, 1)]


def test_solutions_are_closed_under_negation() -> None:
    """x passes exactly when -x does."""
    q = screening_form(make_figure_eight())
    solutions = brute_force_solutions(q, 50)
    for x in solutions:
        assert q.evaluate(-x) == q.evaluate(x)
        assert normalize(-x) in solutions


def test_fibonacci_family_type() -> None:
    """The family covering a bound ends just past it."""
    family = FibonacciFamily.covering(3)
    assert family.numbers() == [0, 1, 1, 2, 3, 5]
    assert list(family.pairs())[:3] == [(1, 0), (1, 1), (2, 1)]
    with pytest.raises(ConstraintError):
        FibonacciFamily(0)


def test_pairing_table_is_antisymmetric(rng: random.Random) -> None:
    """table[i][j] = -table[j][i] with a zero diagonal."""
    for _ in range(200):
        classes = [
            HomologyClass.of(rng.randint(-20, 20), rng.randint(-20, 20))
            for _ in range(rng.randint(1, 5))
        ]
        table = family_pairing_table(classes).table
        for i, row in enumerate(table):
            assert row[i] == 0
            for j, entry in enumerate(row):
                assert entry == -table[j][i]


def test_small_families() -> None:
    """Equal classes pair to zero; (1, 0) and (0, 2) pair to 2."""
    same = family_pairing_table([HomologyClass.of(1, 0), HomologyClass.of(1, 0)])
    assert same.admissible
    apart = family_pairing_table([HomologyClass.of(1, 0), HomologyClass.of(0, 2)])
    assert apart.table[0][1] == 2
    assert not apart.admissible


def test_connected_sum_examples() -> None:
    """Two trefoils pass, a stray figure-eight class fails, no classes pass."""
    _, trefoils = connected_sum([make_trefoil(), make_trefoil()])
    assert screen_connected_sum(
        trefoils, [[HomologyClass.of(1, 0)], [HomologyClass.of(0, 1)]]
    ).passed

    _, single = connected_sum([make_figure_eight()])
    failing = screen_connected_sum(single, [[HomologyClass.of(2, 3)]])
    assert not failing.passed
    assert failing.blocks[0].verdicts[0].value == 11

    assert screen_connected_sum(single, [[]]).passed


def test_descent_near_the_int64_limit() -> None:
    """(F_92, F_91) descends through h⁻¹ although h would leave 64 bits."""
    h = make_figure_eight()
    f = fibonacci(93)
    start = HomologyClass.of(f[92], f[91])
    assert start.to_list() == [7540113804746346429, 4660046610375530309]

    with pytest.raises(ArithmeticOverflowError):
        h.act(start)
    assert descent_reduce(h, start) == HomologyClass.of(1, 1)
    assert descent_reduce(h, HomologyClass.of(f[91], f[90])) == HomologyClass.of(1, 0)
