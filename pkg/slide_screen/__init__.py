# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.
"""Framed-link calculus and monodromy screening of fiber surface classes."""


from .errors import (
    ArithmeticOverflowError,
    ConstraintError,
    DimensionError,
    InvalidMatrixError,
    InvalidMoveError,
    InvalidSurfaceError,
    SchemaError,
    SlideScreenError,
)
from .fiber_calc import (
    CaseReport,
    CurveOnFiber,
    FiberSurface,
    compress,
    euler_characteristic,
    genus_drop_check,
    isotopic_case_classify,
    nonisotopic_case_classify,
)
from .framed_link import (
    FramedLink,
    SlideMove,
    SlideSequence,
    apply_sequence,
    apply_slide,
    dual_slide_sequence,
    inverse_slide_sequence,
    invert_move,
    is_gpr_admissible,
    square_knot_and_unknot,
    surgery_homology,
)
from .lattice import (
    AbelianGroupInvariants,
    HomologyClass,
    IntMatrix,
    SmithDecomposition,
    cokernel_invariants,
    is_primitive,
    is_symplectic,
    rank,
    smith_normal_form,
    standard_symplectic_form,
    symplectic_inverse,
    symplectic_pairing,
    unimodular_inverse,
)
from .monodromy import (
    ConnectedSumDecomposition,
    FiberedMonodromy,
    QuadraticForm,
    act,
    builtin_monodromy,
    connected_sum,
    make_figure_eight,
    make_trefoil,
    printed_trefoil_form,
    screening_form,
)
from .screen import (
    ConnectedSumReport,
    FibonacciFamily,
    PairingTable,
    ScreenConstraint,
    SolutionSet,
    brute_force_solutions,
    descent_reduce,
    evaluate,
    family_pairing_table,
    fibonacci_family,
    fibonacci_solutions,
    normalize,
    screen_connected_sum,
)

__all__ = [
    "AbelianGroupInvariants",
    "ArithmeticOverflowError",
    "CaseReport",
    "ConnectedSumDecomposition",
    "ConnectedSumReport",
    "ConstraintError",
    "CurveOnFiber",
    "DimensionError",
    "FiberSurface",
    "FiberedMonodromy",
    "FibonacciFamily",
    "FramedLink",
    "HomologyClass",
    "IntMatrix",
    "InvalidMatrixError",
    "InvalidMoveError",
    "InvalidSurfaceError",
    "PairingTable",
    "QuadraticForm",
    "SchemaError",
    "ScreenConstraint",
    "SlideMove",
    "SlideScreenError",
    "SlideSequence",
    "SmithDecomposition",
    "SolutionSet",
    "act",
    "apply_sequence",
    "apply_slide",
    "brute_force_solutions",
    "builtin_monodromy",
    "cokernel_invariants",
    "compress",
    "connected_sum",
    "descent_reduce",
    "dual_slide_sequence",
    "euler_characteristic",
    "evaluate",
    "family_pairing_table",
    "fibonacci_family",
    "fibonacci_solutions",
    "genus_drop_check",
    "inverse_slide_sequence",
    "invert_move",
    "is_gpr_admissible",
    "is_primitive",
    "is_symplectic",
    "isotopic_case_classify",
    "make_figure_eight",
    "make_trefoil",
    "nonisotopic_case_classify",
    "normalize",
    "printed_trefoil_form",
    "rank",
    "screen_connected_sum",
    "screening_form",
    "smith_normal_form",
    "square_knot_and_unknot",
    "standard_symplectic_form",
    "surgery_homology",
    "symplectic_inverse",
    "symplectic_pairing",
    "unimodular_inverse",
]
