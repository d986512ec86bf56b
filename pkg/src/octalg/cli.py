"""Command-line front end.

Subcommands:

* ``eval EXPR [--let name=OCTONION]...`` - parse and evaluate an expression
* ``commutator X Y [--additive|--multiplicative]``
* ``associator X Y Z [--additive|--multiplicative]`` - the multiplicative
  flavor also verifies both conversion identities on the result
* ``orders X1 X2 ... [--matrix]`` - every evaluation order of the product,
  optionally with the full order-conversion matrix
* ``check [--cases N] [--seed S]`` - run the randomized identity suite

Global flags (per subcommand): ``--backend exact|float``, ``--tolerance``
(float backend only), ``--format text|machine``.  Machine output is TSV:
``key<TAB>value`` lines, with octonions rendered as the 8 comma-separated
coefficients; matrix entries are ``i<TAB>j<TAB>coefficients`` lines with
1-based indices.

Exit codes: 0 success, 1 usage or syntax error, 2 evaluation error (zero
inverse, unbound variable), 3 identity-check failure, which the exact
backend should never produce.
"""

from __future__ import annotations

import argparse
import sys

from .brackets import (
    ADDITIVE_ASSOCIATOR,
    ADDITIVE_COMMUTATOR,
    MULTIPLICATIVE_ASSOCIATOR,
    MULTIPLICATIVE_COMMUTATOR,
    compute_bracket,
)
from .checks import run_checks
from .core import EXACT, FLOAT, Octonion
from .errors import (
    BackendMismatchError,
    InvalidToleranceError,
    UnboundVariableError,
    ZeroInverseError,
)
from .exprs import Environment, eval_expr, parse_with_info
from .sampling import DEFAULT_SEED
from .textform import format_coefficients, format_octonion, parse_octonion
from .trees import (
    associator_matrix,
    enumerate_trees,
    evaluate,
    format_matrix_machine,
    format_matrix_text,
    render_tree,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_EVAL = 2
EXIT_CHECK = 3

DEFAULT_FLOAT_TOLERANCE = 1e-12


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage by default; this tool reserves 2 for
    # evaluation errors.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--backend", choices=(EXACT, FLOAT), default=EXACT,
        help="scalar backend (default: exact rationals)",
    )
    common.add_argument(
        "--tolerance", type=float, default=None, metavar="T",
        help="comparison tolerance, float backend only (default 1e-12)",
    )
    common.add_argument(
        "--format", choices=("text", "machine"), default="text", dest="fmt",
        help="output format",
    )

    parser = _Parser(
        prog="octalg",
        description="Octonion products, commutators, associators and "
        "evaluation-order conversion factors.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_eval = sub.add_parser("eval", parents=[common], help="evaluate an expression")
    p_eval.add_argument("expr", help="expression, e.g. '(e1*e2)*e4' or 'x*y~'")
    p_eval.add_argument(
        "--let", action="append", default=[], metavar="NAME=OCTONION",
        help="bind a variable (repeatable)",
    )

    p_comm = sub.add_parser("commutator", parents=[common], help="commutator of two octonions")
    p_comm.add_argument("x")
    p_comm.add_argument("y")
    _flavor_flags(p_comm)

    p_assoc = sub.add_parser("associator", parents=[common], help="associator of three octonions")
    p_assoc.add_argument("x")
    p_assoc.add_argument("y")
    p_assoc.add_argument("z")
    _flavor_flags(p_assoc)

    p_orders = sub.add_parser(
        "orders", parents=[common], help="all evaluation orders of a product"
    )
    p_orders.add_argument("factors", nargs="+", metavar="FACTOR")
    p_orders.add_argument(
        "--matrix", action="store_true",
        help="also print the full order-conversion matrix",
    )

    p_check = sub.add_parser(
        "check", parents=[common], help="run the randomized identity suite"
    )
    p_check.add_argument("--cases", type=int, default=100, help="cases per identity")
    p_check.add_argument("--seed", type=int, default=DEFAULT_SEED, help="random seed")

    return parser


def _flavor_flags(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group()
    group.add_argument(
        "--multiplicative", dest="flavor", action="store_const",
        const="multiplicative", default="multiplicative",
        help="unit-norm conversion factor (default)",
    )
    group.add_argument(
        "--additive", dest="flavor", action="store_const", const="additive",
        help="difference bracket",
    )


def _resolve_tolerance(args) -> float:
    if args.backend == EXACT:
        if args.tolerance not in (None, 0):
            raise InvalidToleranceError(
                "--tolerance only applies to the float backend (exact compares exactly)"
            )
        return 0
    if args.tolerance is None:
        return DEFAULT_FLOAT_TOLERANCE
    if args.tolerance < 0:
        raise InvalidToleranceError("tolerance must be nonnegative")
    return args.tolerance


def _emit_value(value: Octonion, fmt: str, key: str = "result") -> None:
    if fmt == "machine":
        print(f"{key}\t{format_coefficients(value)}")
    else:
        print(format_octonion(value))


class UsageError(ValueError):
    pass


def _cmd_eval(args, tolerance) -> int:
    env = Environment()
    for binding in args.let:
        name, sep, text = binding.partition("=")
        if not sep:
            raise UsageError(f"--let expects NAME=OCTONION, got {binding!r}")
        env.bind(name.strip(), parse_octonion(text, args.backend))
    expr, chains = parse_with_info(args.expr, args.backend)
    value = eval_expr(expr, env)
    _warn_defaulted_chains(chains, env, tolerance)
    _emit_value(value, args.fmt)
    return EXIT_OK


def _warn_defaulted_chains(chains, env, tolerance) -> None:
    # Silent defaulting is a correctness hazard in a non-associative algebra:
    # always flag it, and cite both bracketings when they disagree.
    for factors in chains:
        print(
            "warning: unparenthesized '*' chain of length "
            f"{len(factors)} groups to the left by default",
            file=sys.stderr,
        )
        try:
            values = [eval_expr(f, env) for f in factors]
            left = values[0]
            for v in values[1:]:
                left = left * v
            right = values[-1]
            for v in reversed(values[:-1]):
                right = v * right
        except (ZeroInverseError, UnboundVariableError, BackendMismatchError):
            continue
        if not left.equals(right, tolerance):
            print(
                "warning: the grouping changes the value here:", file=sys.stderr
            )
            print(f"  left-to-right: {format_octonion(left)}", file=sys.stderr)
            print(f"  right-to-left: {format_octonion(right)}", file=sys.stderr)


def _cmd_commutator(args, tolerance) -> int:
    x = parse_octonion(args.x, args.backend)
    y = parse_octonion(args.y, args.backend)
    kind = (
        MULTIPLICATIVE_COMMUTATOR if args.flavor == "multiplicative"
        else ADDITIVE_COMMUTATOR
    )
    result = compute_bracket(kind, (x, y))
    _emit_value(result.value, args.fmt)
    if kind == MULTIPLICATIVE_COMMUTATOR:
        ok = ((x * y) * result.value).equals(y * x, tolerance)
        _emit_check_line("(x*y)*c = y*x", ok, args.fmt)
        if not ok:
            return EXIT_CHECK
    return EXIT_OK


def _cmd_associator(args, tolerance) -> int:
    x = parse_octonion(args.x, args.backend)
    y = parse_octonion(args.y, args.backend)
    z = parse_octonion(args.z, args.backend)
    kind = (
        MULTIPLICATIVE_ASSOCIATOR if args.flavor == "multiplicative"
        else ADDITIVE_ASSOCIATOR
    )
    result = compute_bracket(kind, (x, y, z))
    _emit_value(result.value, args.fmt)
    if kind == MULTIPLICATIVE_ASSOCIATOR:
        a = result.value
        forward = (((x * y) * z) * a).equals(x * (y * z), tolerance)
        backward = ((x * y) * z).equals((x * (y * z)) * a.conjugate(), tolerance)
        _emit_check_line("((x*y)*z)*a = x*(y*z)", forward, args.fmt)
        _emit_check_line("(x*y)*z = (x*(y*z))*a~", backward, args.fmt)
        if not (forward and backward):
            return EXIT_CHECK
    return EXIT_OK


def _emit_check_line(label: str, ok: bool, fmt: str) -> None:
    status = "OK" if ok else "FAIL"
    if fmt == "machine":
        key = label.replace(" ", "")
        print(f"verify:{key}\t{status}")
    else:
        print(f"{label}: {status}")


def _cmd_orders(args, tolerance) -> int:
    factors = [parse_octonion(text, args.backend) for text in args.factors]
    n = len(factors)
    trees = enumerate_trees(n)
    labels = [f"x{k}" for k in range(1, n + 1)]
    if args.fmt == "machine":
        print(f"n\t{n}")
        print(f"orders\t{len(trees)}")
        for k, tree in enumerate(trees, start=1):
            value = evaluate(tree, factors)
            print(f"order_{k}\t{render_tree(tree, labels)}\t{format_coefficients(value)}")
    else:
        plural = "s" if len(trees) != 1 else ""
        print(f"{n} factor product, {len(trees)} evaluation order{plural}:")
        for k, tree in enumerate(trees, start=1):
            value = evaluate(tree, factors)
            print(f"  {k}: {render_tree(tree, labels)} = {format_octonion(value)}")
    if not args.matrix:
        return EXIT_OK

    matrix = associator_matrix(factors)
    if args.fmt == "machine":
        print(format_matrix_machine(matrix))
    else:
        print("order-conversion matrix (entry i j converts order i into order j):")
        print(format_matrix_text(matrix))
    one = Octonion.one(args.backend)
    diagonal_ok = all(
        matrix.entry(i, i).equals(one, tolerance) for i in range(matrix.size)
    )
    symmetry_ok = all(
        matrix.entry(j, i).equals(matrix.entry(i, j).conjugate(), tolerance)
        for i in range(matrix.size)
        for j in range(matrix.size)
    )
    _emit_check_line("diagonal all 1", diagonal_ok, args.fmt)
    _emit_check_line("entry(j,i) = entry(i,j)~", symmetry_ok, args.fmt)
    return EXIT_OK if diagonal_ok and symmetry_ok else EXIT_CHECK


def _cmd_check(args, tolerance) -> int:
    if args.cases < 1:
        raise UsageError("--cases must be at least 1")
    reports = run_checks(
        cases=args.cases, seed=args.seed, backend=args.backend, tolerance=tolerance
    )
    all_ok = True
    for report in reports:
        if args.fmt == "machine":
            print(f"{report.name}\t{report.passed}/{report.cases}")
        else:
            status = "ok" if report.ok else "FAIL"
            print(f"{report.name}: {report.passed}/{report.cases} passed [{status}]")
            if report.first_failure:
                print(f"  first failure: {report.first_failure}")
        all_ok = all_ok and report.ok
    if args.fmt == "machine":
        print(f"result\t{'pass' if all_ok else 'fail'}")
    else:
        total = len(reports)
        if all_ok:
            print(f"all {total} identities passed ({args.cases} cases each)")
        else:
            print("identity failures detected: this is an implementation bug")
    return EXIT_OK if all_ok else EXIT_CHECK


_COMMANDS = {
    "eval": _cmd_eval,
    "commutator": _cmd_commutator,
    "associator": _cmd_associator,
    "orders": _cmd_orders,
    "check": _cmd_check,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        tolerance = _resolve_tolerance(args)
        return _COMMANDS[args.command](args, tolerance)
    except (ZeroInverseError, UnboundVariableError, BackendMismatchError) as exc:
        print(f"octalg: error: {exc}", file=sys.stderr)
        return EXIT_EVAL
    except ValueError as exc:
        # ParseError, InvalidToleranceError, ReservedIdentifierError,
        # OutOfRangeError, ShapeMismatchError, bad bindings: all user input.
        print(f"octalg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
