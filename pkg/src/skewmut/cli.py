"""Command-line front end.

Input is a matrix (leading line "n", then n rows) or a diagram (leading line
"n m", then m edge lines); the mode is detected from the shape of the first
line.  Reads stdin when no path is given.  Exit codes: 0 success, 1 refuted
verification, 2 bad input, 3 exploration budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .classify import (
    classify,
    admissible_companion,
    markov_constant,
    radical_weights,
)
from .diagram import Diagram, format_diagram, parse_diagram
from .explore import (
    BudgetExceeded,
    Verdict,
    exploration_to_text,
    explore,
    save_exploration,
    verify_unique_minimum,
)
from .invariants import Flavor, gcd_invariant
from .matrix import SkewSymmetrizableMatrix, format_matrix, parse_matrix
from .triple import RadicalTriple


class InputError(ValueError):
    pass


def _read_source(path: Optional[str]) -> str:
    if path is None:
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as f:
            return f.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _detect_mode(text: str) -> str:
    for line in text.splitlines():
        if line.strip():
            tokens = line.split()
            if len(tokens) == 1:
                return "matrix"
            if len(tokens) == 2:
                return "diagram"
            raise InputError(f"cannot tell matrix from diagram by first line {line!r}")
    raise InputError("empty input")


def _parse_any(text: str):
    if _detect_mode(text) == "matrix":
        return parse_matrix(text)
    return parse_diagram(text)


def _as_diagram(obj) -> Diagram:
    if isinstance(obj, SkewSymmetrizableMatrix):
        return obj.diagram()
    return obj


def _default_bound(g: Diagram) -> int:
    return 64 * max(g.max_weight(), 1)


def cmd_mutate(args) -> int:
    obj = _parse_any(_read_source(args.input))
    mutated = obj.mutate(args.k)
    if isinstance(mutated, SkewSymmetrizableMatrix):
        sys.stdout.write(format_matrix(mutated))
    else:
        sys.stdout.write(format_diagram(mutated))
    return 0


def cmd_minimize(args) -> int:
    g = _as_diagram(_parse_any(_read_source(args.input)))
    form, witness = RadicalTriple.from_diagram(g).descend_to_minimum()
    print(form)
    print(("witness " + " ".join(str(k) for k in witness)).rstrip())
    return 0


def cmd_classify(args) -> int:
    obj = _parse_any(_read_source(args.input))
    if not isinstance(obj, SkewSymmetrizableMatrix):
        raise InputError("classify needs a matrix: a diagram does not pin one down")
    kind = classify(obj)
    det_a = admissible_companion(obj).determinant()
    line = f"{kind.value}, det(A)={det_a}"
    if obj.is_skew_symmetric() and not obj.diagram().is_acyclic():
        x, y, z = radical_weights(obj)
        line += f", C={markov_constant(x, y, z)}"
    print(line)
    return 0


def cmd_invariant(args) -> int:
    g = _as_diagram(_parse_any(_read_source(args.input)))
    flavor = Flavor.RADICAL if args.radical else Flavor.WEIGHT
    print(gcd_invariant(g, flavor))
    return 0


def cmd_explore(args) -> int:
    g = _as_diagram(_parse_any(_read_source(args.input)))
    expl = explore(g, args.bound, modulo_reversal=args.modulo_reversal)
    if args.output is not None:
        save_exploration(expl, args.output)
    else:
        sys.stdout.write(exploration_to_text(expl))
    return 0


def cmd_verify(args) -> int:
    g = _as_diagram(_parse_any(_read_source(args.input)))
    bound = args.bound if args.bound is not None else _default_bound(g)
    verdict = verify_unique_minimum(g, bound)
    if verdict is Verdict.CONFIRMED:
        form, _ = RadicalTriple.from_diagram(g).descend_to_minimum()
        print(f"confirmed: {form}")
        return 0
    print(verdict.value)
    return 1 if verdict is Verdict.REFUTED else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewmut",
        description="Exact mutation of skew-symmetrizable matrices and diagrams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mutate", help="mutate the input at one vertex/index")
    p.add_argument("-k", type=int, required=True, help="vertex or matrix index")
    p.add_argument("input", nargs="?", help="input path (stdin when omitted)")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("minimize", help="canonical minimal form and a witness sequence")
    p.add_argument("input", nargs="?")
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("classify", help="mutation-class kind of a 3x3 matrix")
    p.add_argument("input", nargs="?")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("invariant", help="per-vertex gcd invariant")
    p.add_argument("--radical", action="store_true", help="gcd of the weight square roots")
    p.add_argument("input", nargs="?")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("explore", help="bounded BFS over the mutation class")
    p.add_argument("--bound", type=int, required=True, help="edge-weight bound")
    p.add_argument("--modulo-reversal", action="store_true", help="identify reversed diagrams")
    p.add_argument("--output", help="write the exploration file here instead of stdout")
    p.add_argument("input", nargs="?")
    p.set_defaults(func=cmd_explore)

    p = sub.add_parser("verify", help="oracle-check the unique-minimum claims")
    p.add_argument("--bound", type=int, help="edge-weight bound (default: 64x the seed's max weight)")
    p.add_argument("input", nargs="?")
    p.set_defaults(func=cmd_verify)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
