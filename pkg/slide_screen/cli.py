#!/usr/bin/env python3
# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.
"""Command line front end for slide-screen."""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from slide_screen.config import resolve_workers
from slide_screen.errors import SchemaError, SlideScreenError
from slide_screen.fiber_calc import (
    CurveOnFiber,
    FiberSurface,
    compress,
    genus_drop_check,
    isotopic_case_classify,
    nonisotopic_case_classify,
)
from slide_screen.framed_link import (
    FramedLink,
    SlideMove,
    SlideSequence,
    apply_sequence,
    apply_slide,
    dual_slide_sequence,
    inverse_slide_sequence,
    is_gpr_admissible,
    surgery_homology,
)
from slide_screen.lattice import (
    HomologyClass,
    IntMatrix,
    cokernel_invariants,
    is_symplectic,
    smith_normal_form,
)
from slide_screen.monodromy import (
    BUILTIN_MONODROMIES,
    FiberedMonodromy,
    QuadraticForm,
    builtin_monodromy,
    connected_sum,
    printed_form,
    screening_form,
)
from slide_screen.screen import (
    ScreenConstraint,
    brute_force_solutions,
    descent_reduce,
    family_pairing_table,
    fibonacci_solutions,
    screen_connected_sum,
)
from slide_screen.tooling import common_logging
from slide_screen.utils import load_json_file, parse_json_text

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

SCHEMA_VERSION = 1
DOUBLE_S1XS2 = "double-s1xs2"


def _positive_int(text: str) -> int:
    """Argparse type for integers >= 1."""
    try:
        value = int(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from e
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} must be at least 1")
    return value


def _int_list(data: Any, what: str) -> List[int]:
    if not isinstance(data, list) or not all(
        isinstance(entry, int) and not isinstance(entry, bool) for entry in data
    ):
        raise SchemaError(f"{what} must be a list of integers, got {data!r}")
    return data


def _parse_class(text: str) -> HomologyClass:
    return HomologyClass(tuple(_int_list(parse_json_text(text, "--class"), "--class")))


def _parse_classes(data: Any, what: str) -> List[HomologyClass]:
    if not isinstance(data, list):
        raise SchemaError(f"{what} must be a list of classes")
    return [HomologyClass(tuple(_int_list(entry, what))) for entry in data]


class Command:
    """Base class for subcommands."""

    group: Optional[str] = None
    name: str = ""
    help: str = ""

    @property
    def path(self) -> str:
        """The words that select this command."""
        return f"{self.group} {self.name}" if self.group else self.name

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Add the command's own arguments."""

    def execute(self, args: argparse.Namespace) -> Dict[str, Any]:
        """Run the command and return the JSON payload."""
        raise NotImplementedError


class LinkArgumentsMixin:
    """Reading the --link-file argument."""

    def add_link_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Add --link-file."""
        parser.add_argument(
            "--link-file",
            type=Path,
            required=True,
            help='JSON link file: {"n": int, "matrix": [[int]]}, symmetric n x n.',
        )

    def load_link(self, args: argparse.Namespace) -> FramedLink:
        """Load the link named by --link-file."""
        return FramedLink.from_dict(load_json_file(args.link_file))


class SequenceArgumentsMixin:
    """Reading a slide sequence from --moves or --sequence-file."""

    def add_sequence_arguments(
        self, parser: argparse.ArgumentParser, required: bool = True
    ) -> None:
        """Add --moves and --sequence-file."""
        group = parser.add_mutually_exclusive_group(required=required)
        group.add_argument(
            "--moves", help="JSON list of [slider, over, sign] moves, applied in order."
        )
        group.add_argument(
            "--sequence-file",
            type=Path,
            help='JSON file: {"moves": [[slider, over, sign], ...]}.',
        )

    def load_sequence(self, args: argparse.Namespace) -> SlideSequence:
        """Load the sequence from whichever argument was given."""
        if args.sequence_file is not None:
            return SlideSequence.from_list(load_json_file(args.sequence_file))
        return SlideSequence.from_list(parse_json_text(args.moves, "--moves"))


class MonodromyArgumentsMixin:
    """Reading monodromies from --monodromy and --monodromy-file."""

    def add_monodromy_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Add --monodromy and --monodromy-file (both repeatable)."""
        parser.add_argument(
            "--monodromy",
            action="append",
            choices=sorted(BUILTIN_MONODROMIES),
            default=[],
            help="Built-in monodromy. Repeat to form a connected sum.",
        )
        parser.add_argument(
            "--monodromy-file",
            action="append",
            type=Path,
            default=[],
            help='JSON file: {"genus": int, "matrix": [[int]]}, symplectic.',
        )

    def load_monodromies(self, args: argparse.Namespace) -> List[FiberedMonodromy]:
        """Built-ins first, then files, in the order given."""
        monodromies = [builtin_monodromy(name) for name in args.monodromy]
        monodromies += [
            FiberedMonodromy.from_dict(load_json_file(path))
            for path in args.monodromy_file
        ]
        if not monodromies:
            raise SchemaError("Give --monodromy or --monodromy-file")
        return monodromies

    def load_monodromy(self, args: argparse.Namespace) -> FiberedMonodromy:
        """Exactly one monodromy."""
        monodromies = self.load_monodromies(args)
        if len(monodromies) != 1:
            raise SchemaError(f"Expected one monodromy, got {len(monodromies)}")
        return monodromies[0]

    def builtin_name(self, args: argparse.Namespace) -> str:
        """The one built-in monodromy named on the command line."""
        if args.monodromy_file or len(args.monodromy) != 1:
            raise SchemaError(
                "--paper-form only applies to a single built-in monodromy"
            )
        return args.monodromy[0]


class ConstraintArgumentsMixin:
    """Reading --lower and --upper."""

    def add_constraint_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Add --lower and --upper."""
        parser.add_argument(
            "--lower",
            type=int,
            default=-1,
            help="Least allowed value of Q(x) = [h(x)].[x] = -[x].[h(x)]. Default -1.",
        )
        parser.add_argument(
            "--upper",
            type=int,
            default=1,
            help="Greatest allowed value of Q(x) = [h(x)].[x]. Default 1.",
        )

    def load_constraint(self, args: argparse.Namespace) -> ScreenConstraint:
        """Build the constraint."""
        return ScreenConstraint(args.lower, args.upper)


class SnfCommand(Command):
    """Smith normal form, and the cokernel when the matrix is square."""

    name = "snf"
    help = "Smith normal form U.A.V = D of an integer matrix."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Add --matrix and --matrix-file."""
        group = parser.add_mutually_exclusive_group(required=True)
        group.add_argument("--matrix", help="JSON list of rows.")
        group.add_argument("--matrix-file", type=Path, help="JSON file with rows.")

    def execute(self, args: argparse.Namespace) -> Dict[str, Any]:
        """Decompose the matrix."""
        if args.matrix_file is not None:
            rows = load_json_file(args.matrix_file)
        else:
            rows = parse_json_text(args.matrix, "--matrix")
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise SchemaError("A matrix must be a list of lists")

        a = IntMatrix(rows)
        decomposition = smith_normal_form(a)
        payload: Dict[str, Any] = {
            "d": decomposition.d.to_list(),
            "invariant_factors": decomposition.invariant_factors(),
            "matrix": a.to_list(),
            "u": decomposition.u.to_list(),
            "v": decomposition.v.to_list(),
            "cokernel": None,
        }
        if a.is_square():
            invariants = cokernel_invariants(a)
            payload["cokernel"] = {
                "free_rank": invariants.free_rank,
                "group": str(invariants),
                "torsion": list(invariants.torsion),
            }
        return payload


class LinkCheckCommand(LinkArgumentsMixin, Command):
    """Check the necessary condition for surgery to be #n(S^1xS^2)."""

    group = "link"
    name = "check"
    help = "Check that every framing and linking number is zero."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Add --link-file."""
        self.add_link_arguments(parser)

    def execute(self, args: argparse.Namespace) -> Dict[str, Any]:
        """Check the link."""
        link = self.load_link(args)
        return {"gpr_admissible": is_gpr_admissible(link), "link": link.to_dict()}


class LinkSlideCommand(LinkArgumentsMixin, SequenceArgumentsMixin, Command):
    """Apply a handle slide, or a sequence of them, to a link."""

    group = "link"
    name = "slide"
    help = "Slide one component over another (or apply a sequence of slides)."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Add the link and the move(s)."""
        self.add_link_arguments(parser)
        parser.add_argument("--slider", type=int, help="Component that slides.")
        parser.add_argument("--over", type=int, help="Component slid over.")
        parser.add_argument("--sign", type=int, choices=[1, -1], default=1)
        self.add_sequence_arguments(parser, required=False)

    def execute(self, args: argparse.Namespace) -> Dict[str, Any]:
        """Slide."""
        link = self.load_link(args)
        if args.moves is not None or args.sequence_file is not None:
            if args.slider is not None or args.over is not None:
                raise SchemaError("Give --slider and --over, or a sequence, not both")
            sequence = self.load_sequence(args)
            result = apply_sequence(link, sequence)
        else:
            if args.slider is None or args.over is None:
                raise SchemaError("Give --slider and --over, or a sequence of moves")
            sequence = SlideSequence((SlideMove(args.slider, args.over, args.sign),))
            result = apply_slide(link, sequence.moves[0])
        return {
            "gpr_admissible": is_gpr_admissible(result),
            "link": result.to_dict(),
            "moves": sequence.to_list(),
        }


class LinkHomologyCommand(LinkArgumentsMixin, Command):
    """First homology of the surgered manifold."""

    group = "link"
    name = "homology"
    help = "H_1 of the manifold obtained by surgery on the link."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Add --link-file."""
        self.add_link_arguments(parser)

    def execute(self, args: argparse.Namespace) -> Dict[str, Any]:
        """Compute H_1."""
        invariants = surgery_homology(self.load_link(args))
        return {
            "homology": {
                "free_rank": invariants.free_rank,
                "group": str(invariants),
                "torsion": list(invariants.torsion),
            }
        }


class SeqDualCommand(SequenceArgumentsMixin, Command):
    """The dual of a slide sequence."""

    group = "seq"
    name = "dual"
    help = "Dualise a slide sequence (or, with --inverse, undo it)."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Add the sequence."""
        self.add_sequence_arguments(parser)
        parser.add_argument(
            "--inverse",
            action="store_true",
            help="Return the sequence that undoes the input instead of its dual.",
        )

    def execute(self, args: argparse.Namespace) -> Dict[str, Any]:
        """Dualise or invert."""
        sequence = self.load_sequence(args)
        if args.inverse:
            return {"inverse": inverse_slide_sequence(sequence).to_list()}
        return {"dual": dual_slide_sequence(sequence).to_list()}


def _printed_form_payload(name: str) -> Dict[str, Any]:
    form = printed_form(name)
    if name == "trefoil":
        note = (
            "printed form m^2 + mn + n^2; the matrix gives m^2 - mn + n^2, "
            "related by n -> -n"
        )
    else:
        note = "printed form coincides with the form derived from the matrix"
    return {"form": form, "note": note}


class MonodromyShowCommand(MonodromyArgumentsMixin, Command):
    """Describe a monodromy and its screening form."""

    group = "monodromy"
    name = "show"
    help = "Show a monodromy, check it is symplectic, and give its screening form."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Add the monodromy."""
        self.add_monodromy_arguments(parser)
        parser.add_argument("--paper-form", action="store_true")

    def execute(self, args: argparse.Namespace) -> Dict[str, Any]:
        """Describe."""
        h = self.load_monodromy(args)
        payload: Dict[str, Any] = {
            "monodromy": h.to_dict(),
            "order": h.order(),
            "screening_form": screening_form(h).to_dict(),
            "symplectic": is_symplectic(h.matrix),
            "trace": h.trace,
        }
        if args.paper_form:
            printed = _printed_form_payload(self.builtin_name(args))
            payload["printed_form"] = printed["form"].to_dict()
            payload["note"] = printed["note"]
        return payload


class MonodromySumCommand(MonodromyArgumentsMixin, Command):
    """Connected sum of monodromies."""

    group = "monodromy"
    name = "sum"
    help = "Block-diagonal connected sum of monodromies, first summand first."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Add the monodromies."""
        self.add_monodromy_arguments(parser)

    def execute(self, args: argparse.Namespace) -> Dict[str, Any]:
        """Sum."""
        total, decomposition = connected_sum(self.load_monodromies(args))
        return {
            "blocks": [block.to_dict() for block in decomposition.blocks],
            "monodromy": total.to_dict(),
            "offsets": [list(offset) for offset in decomposition.offsets()],
        }


class MonodromyActCommand(MonodromyArgumentsMixin, Command):
    """Image of a class under a monodromy."""

    group = "monodromy"
    name = "act"
    help = "Apply a monodromy to a homology class."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Add the monodromy and the class."""
        self.add_monodromy_arguments(parser)
        parser.add_argument("--class", dest="homology_class", required=True)

    def execute(self, args: argparse.Namespace) -> Dict[str, Any]:
        """Act."""
        total, _ = connected_sum(self.load_monodromies(args))
        x = _parse_class(args.homology_class)
        return {"class": x.to_list(), "image": total.act(x).to_list()}


class ScreenBruteCommand(MonodromyArgumentsMixin, ConstraintArgumentsMixin, Command):
    """Exhaustive screen of a box of classes."""

    group = "screen"
    name = "brute"
    help = "Enumerate every class with |coordinate| <= bound passing the constraint."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Add the monodromy, box and constraint."""
        self.add_monodromy_arguments(parser)
        self.add_constraint_arguments(parser)
        parser.add_argument(
            "--bound",
            type=_positive_int,
            required=True,
            help="Inclusive bound on the absolute value of every coordinate.",
        )
        parser.add_argument("--allow-imprimitive", action="store_true")
        parser.add_argument("--allow-zero", action="store_true")
        parser.add_argument(
            "--paper-form",
            action="store_true",
            help="Use the printed trefoil form m^2 + mn + n^2.",
        )
        parser.add_argument(
            "--threads",
            type=_positive_int,
            help="Worker threads (capped by SLIDE_SCREEN_THREADS).",
        )

    def execute(self, args: argparse.Namespace) -> Dict[str, Any]:
        """Screen."""
        monodromies = self.load_monodromies(args)
        total, _ = connected_sum(monodromies)

        note = None
        form: QuadraticForm
        if args.paper_form:
            printed = _printed_form_payload(self.builtin_name(args))
            form, note = printed["form"], printed["note"]
        else:
            form = screening_form(total)

        solutions = brute_force_solutions(
            form,
            args.bound,
            self.load_constraint(args),
            allow_imprimitive=args.allow_imprimitive,
            allow_zero=args.allow_zero,
            workers=resolve_workers(args.threads),
        )
        payload = solutions.to_dict()
        payload["form"] = form.to_dict()
        if note:
            payload["note"] = note
        return payload


class ScreenFibCommand(Command):
    """Figure-eight solutions from successive Fibonacci numbers."""

    group = "screen"
    name = "fib"
    help = "List the Fibonacci-pair figure-eight solutions inside the box."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Add --bound."""
        parser.add_argument("--bound", type=_positive_int, required=True)

    def execute(self, args: argparse.Namespace) -> Dict[str, Any]:
        """List."""
        payload = fibonacci_solutions(args.bound).to_dict()
        payload["family"] = "fibonacci"
        return payload


class ScreenDescendCommand(MonodromyArgumentsMixin, Command):
    """Descent of a class to its orbit representative."""

    group = "screen"
    name = "descend"
    help = "Reduce a class along its h-orbit to the smallest representative."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Add the monodromy and the class."""
        self.add_monodromy_arguments(parser)
        parser.add_argument("--class", dest="homology_class", required=True)

    def execute(self, args: argparse.Namespace) -> Dict[str, Any]:
        """Descend."""
        h = self.load_monodromy(args)
        x = _parse_class(args.homology_class)
        terminal = descent_reduce(h, x)
        q = screening_form(h)
        return {
            "class": x.to_list(),
            "terminal": terminal.to_list(),
            "value": q.evaluate(x),
        }


class ScreenFamilyCommand(Command):
    """Pairing table of a family of classes."""

    group = "screen"
    name = "family"
    help = "Pairwise intersections of classes, and whether all are in {-1, 0, 1}."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Add --classes."""
        parser.add_argument(
            "--classes", required=True, help="JSON list of classes, e.g. [[1,2],[2,3]]."
        )

    def execute(self, args: argparse.Namespace) -> Dict[str, Any]:
        """Tabulate."""
        data = parse_json_text(args.classes, "--classes")
        classes = _parse_classes(data, "--classes")
        payload = family_pairing_table(classes).to_dict()
        payload["classes"] = [x.to_list() for x in classes]
        return payload


class ScreenSumCommand(MonodromyArgumentsMixin, ConstraintArgumentsMixin, Command):
    """Screen arc classes block by block on a connected sum."""

    group = "screen"
    name = "sum"
    help = "Screen classes of each summand against that summand's monodromy."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Add the summands, the classes and the constraint."""
        self.add_monodromy_arguments(parser)
        self.add_constraint_arguments(parser)
        parser.add_argument(
            "--classes",
            required=True,
            help="JSON list with one list of classes per summand.",
        )

    def execute(self, args: argparse.Namespace) -> Dict[str, Any]:
        """Screen each block."""
        _, decomposition = connected_sum(self.load_monodromies(args))
        data = parse_json_text(args.classes, "--classes")
        if not isinstance(data, list):
            raise SchemaError("--classes must be a list of lists of classes")
        per_block = [_parse_classes(entry, "--classes") for entry in data]
        report = screen_connected_sum(
            decomposition, per_block, self.load_constraint(args)
        )
        return report.to_dict()


class FiberArgumentsMixin:
    """Describing a connected fiber and a curve on it."""

    def add_fiber_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Add --genus, --separating and --split."""
        parser.add_argument("--genus", type=int, required=True)
        parser.add_argument("--separating", action="store_true")
        parser.add_argument(
            "--split", type=int, nargs=2, metavar=("G1", "G2"), default=None
        )

    def load_surface(self, args: argparse.Namespace) -> FiberSurface:
        """The connected fiber."""
        return FiberSurface.closed(args.genus)

    def load_curve(self, args: argparse.Namespace, **kwargs: Any) -> CurveOnFiber:
        """The curve, with whatever monodromy data the command adds."""
        split = tuple(args.split) if args.split else None
        return CurveOnFiber(separating=args.separating, split=split, **kwargs)


class FiberCompressCommand(FiberArgumentsMixin, Command):
    """Compress a fiber along a curve."""

    group = "fiber"
    name = "compress"
    help = "Compress a connected fiber along an essential curve."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Add the fiber and curve."""
        self.add_fiber_arguments(parser)

    def execute(self, args: argparse.Namespace) -> Dict[str, Any]:
        """Compress."""
        surface = self.load_surface(args)
        result = compress(surface, self.load_curve(args))
        return {
            "genus_drop": all(
                genus_drop_check(surface.genus, genus) for genus in result.genera
            ),
            "input": surface.to_dict(),
            "output": result.to_dict(),
        }


class FiberClassifyCommand(FiberArgumentsMixin, Command):
    """Structure of the surgered manifold from how h moves c."""

    group = "fiber"
    name = "classify"
    help = "Case analysis of surgery on a fiber curve by how the monodromy moves it."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Add the fiber, curve and monodromy data."""
        self.add_fiber_arguments(parser)
        parser.add_argument(
            "--not-isotopic",
            action="store_true",
            help="h(c) misses c but is not isotopic to it (genus 2 only).",
        )
        parser.add_argument(
            "--orientation-reversing",
            action="store_true",
            help="The isotopy from h(c) to c reverses c.",
        )
        parser.add_argument(
            "--target",
            choices=[DOUBLE_S1XS2],
            help="Check whether this surgery result is possible.",
        )

    def execute(self, args: argparse.Namespace) -> Dict[str, Any]:
        """Classify."""
        surface = self.load_surface(args)
        target = args.target == DOUBLE_S1XS2
        if args.orientation_reversing and (args.not_isotopic or not args.separating):
            raise SchemaError(
                "--orientation-reversing needs --separating and an isotopic curve"
            )
        if args.not_isotopic:
            curve = self.load_curve(args, isotopy_class_fixed=False)
            report = nonisotopic_case_classify(surface, curve, target)
        else:
            orientation = not args.orientation_reversing if args.separating else None
            curve = self.load_curve(
                args, isotopy_class_fixed=True, orientation_preserved=orientation
            )
            report = isotopic_case_classify(surface, curve, target)
        return report.to_dict()


COMMANDS: List[Command] = [
    SnfCommand(),
    LinkCheckCommand(),
    LinkSlideCommand(),
    LinkHomologyCommand(),
    SeqDualCommand(),
    MonodromyShowCommand(),
    MonodromySumCommand(),
    MonodromyActCommand(),
    ScreenBruteCommand(),
    ScreenFibCommand(),
    ScreenDescendCommand(),
    ScreenFamilyCommand(),
    ScreenSumCommand(),
    FiberCompressCommand(),
    FiberClassifyCommand(),
]


def build_parser() -> argparse.ArgumentParser:
    """Build the parser for every command."""
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument(
        "--json",
        dest="text",
        action="store_false",
        default=False,
        help="Write JSON to standard output (the default).",
    )
    output.add_argument(
        "--text", action="store_true", help="Write key: value lines instead of JSON."
    )
    output.add_argument("--verbose", action="store_true", help="Log at DEBUG.")

    parser = argparse.ArgumentParser(
        prog="slide-screen",
        description=(
            "Framed-link calculus, surgery homology and monodromy screening of "
            "fiber surface classes."
        ),
    )
    top = parser.add_subparsers(dest="group", metavar="COMMAND", required=True)

    groups: Dict[str, Any] = {}
    for command in COMMANDS:
        if command.group is None:
            leaf = top.add_parser(command.name, help=command.help, parents=[output])
        else:
            if command.group not in groups:
                group_parser = top.add_parser(command.group)
                groups[command.group] = group_parser.add_subparsers(
                    dest="action", metavar="ACTION", required=True
                )
            leaf = groups[command.group].add_parser(
                command.name, help=command.help, parents=[output]
            )
        command.add_arguments(leaf)
        leaf.set_defaults(command=command)

    return parser


def render_text(payload: Dict[str, Any]) -> str:
    """Render a payload as sorted key: value lines."""
    return "\n".join(
        f"{key}: {json.dumps(value, sort_keys=True)}"
        for key, value in sorted(payload.items())
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)
        for handler in logging.getLogger().handlers:
            if not isinstance(handler, logging.FileHandler):
                handler.setLevel(logging.DEBUG)

    command: Command = args.command
    log.debug("Running %s", command.path)
    try:
        payload = command.execute(args)
    except SchemaError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except SlideScreenError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1

    payload["schema"] = SCHEMA_VERSION
    if args.text:
        print(render_text(payload))
    else:
        print(json.dumps(payload, sort_keys=True, indent=2))
    return 0


def run() -> None:
    """Entrypoint which sets up logging."""
    common_logging(__name__, __file__, stream=sys.stderr)
    sys.exit(main())


if __name__ == "__main__":
    run()
