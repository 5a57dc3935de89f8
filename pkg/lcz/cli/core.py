# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
lcz.cli.core
============

The ``lcz`` command.

Subcommands ``suite``, ``check``, ``conv``, ``generate``, ``oracle`` and
``classify`` read series, functions and binomial types from JSON files
and write JSON (``--format json``) or aligned text reports.

Exit status: 0 on success, including a consistent suite whose conditions
all fail; 1 on invalid input; 2 when a suite's conditions disagree on a
series with a_1 != 0.

"""

__all__ = [
    "RunConfig",
    "build_parser",
    "main",
    "cmd_suite",
    "cmd_check",
    "cmd_conv",
    "cmd_generate",
    "cmd_oracle",
    "cmd_classify",
    "EXIT_OK",
    "EXIT_INPUT_ERROR",
    "EXIT_INCONSISTENT",
]

import argparse
import json
import sys
from dataclasses import dataclass, fields
from typing import List, Optional

from astropy import log
from astropy.table import Table

from ..defaults import (
    default_bound, seed_from_environment, working_order
)
from ..exceptions import LczException
from ..exactnum import format_rational, parse_rational
from ..utils import write_json
from ..series import TruncatedSeries
from ..arithfun import (
    ArithFun, BUILTINS, CLASSIFY_KINDS, builtin, classify, dirichlet_conv,
    unitary_conv
)
from ..bintype import (
    BinomialArithFun, BinomialType, binomial_classify, closed_form_series,
    m_convolution
)
from ..characterize import (
    CONDITIONS, VARIANTS, check_condition, check_dirichlet, run_suite
)
from ..oracle import run_oracle

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_INCONSISTENT = 2

BINOMIAL_KINDS = ("binomial_multiplicative", "binomial_additive")


@dataclass
class RunConfig:
    """Settings of one command-line run, after defaults are resolved."""

    command: str
    series: Optional[str] = None
    function: Optional[str] = None
    builtin: Optional[str] = None
    k: Optional[int] = None
    f: Optional[str] = None
    g: Optional[str] = None
    kind: Optional[str] = None
    type: str = "factorial"
    variant: str = "multiplicative"
    condition: Optional[str] = None
    mode: str = "auto"
    order: Optional[int] = None
    bound: Optional[int] = None
    trials: Optional[int] = None
    seed: Optional[int] = None
    a1: Optional[str] = None
    n: Optional[int] = None
    q: Optional[int] = None
    format: str = "text"
    out: Optional[str] = None

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> "RunConfig":
        values = {f.name: getattr(args, f.name) for f in fields(cls)
                  if getattr(args, f.name, None) is not None}
        config = cls(**values)
        config.seed = seed_from_environment(config.seed)
        return config


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors; exit status 2 is reserved
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text} is not a positive integer")
    return value


def _natural(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text} is negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default: text)")
    common.add_argument("--out", metavar="PATH",
                        help="write output to PATH instead of stdout")
    common.add_argument("--seed", type=_natural,
                        help="random seed; overrides LCZ_SEED (default: 42)")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", "-v", action="store_true",
                           help="log debugging detail")
    verbosity.add_argument("--quiet", action="store_true",
                           help="log warnings and errors only")

    series_options = argparse.ArgumentParser(add_help=False)
    series_options.add_argument(
        "--type", default="factorial",
        help="binomial type: factorial, ones, q:<rational>, or a JSON file "
        "(default: factorial)")
    series_options.add_argument("--variant", choices=VARIANTS,
                                default="multiplicative")
    series_options.add_argument("--order", type=_positive,
                                help="working order (default: the series "
                                "order)")
    series_options.add_argument("--trials", type=_positive,
                                help="randomized trials (default: 50)")
    series_options.add_argument(
        "--mode", choices=("auto", "binomial", "classical"), default="auto",
        help="embedding used by the embedded condition")

    function_options = argparse.ArgumentParser(add_help=False)
    function_options.add_argument("--builtin", choices=tuple(BUILTINS),
                                  help="use a built-in function")
    function_options.add_argument("--bound", type=_positive,
                                  help="bound of a built-in function "
                                  "(default: 200)")
    function_options.add_argument("--k", type=_natural,
                                  help="exponent of nth_power")

    parser = _Parser(
        prog="lcz",
        description="Exact checks of characterizations of exponential-type "
        "series and multiplicative arithmetical functions.")
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    suite = commands.add_parser(
        "suite", parents=[common, series_options, function_options],
        help="run all conditions of a suite")
    source = suite.add_mutually_exclusive_group()
    source.add_argument("--series", metavar="PATH", help="series JSON file")
    source.add_argument("--function", metavar="PATH",
                        help="arithmetical function JSON file; runs the "
                        "Dirichlet suite, as does --builtin")

    check = commands.add_parser(
        "check", parents=[common, series_options],
        help="run a single condition on a series")
    check.add_argument("--series", metavar="PATH", required=True)
    check.add_argument("--condition", required=True,
                       help="condition number 1-5 or name: "
                       + ", ".join(CONDITIONS.values()))

    conv = commands.add_parser(
        "conv", parents=[common], help="convolve two functions")
    conv.add_argument("--kind", choices=("dirichlet", "unitary", "binomial"),
                      required=True)
    conv.add_argument("--f", metavar="PATH", required=True)
    conv.add_argument("--g", metavar="PATH", required=True)
    conv.add_argument("--type", default="factorial",
                      help="binomial type of --kind binomial")

    generate = commands.add_parser(
        "generate", parents=[common],
        help="write the closed-form series of a binomial type")
    generate.add_argument("--type", default="factorial")
    generate.add_argument("--variant", choices=VARIANTS,
                          default="multiplicative")
    generate.add_argument("--a1", required=True,
                          help="nonzero rational a_1, e.g., 3 or --a1=-1/2")
    generate.add_argument("--order", type=_positive,
                          help="series order (default: 16)")

    oracle = commands.add_parser(
        "oracle", parents=[common],
        help="count chains, flags, or subspaces by enumeration")
    oracle.add_argument("kind", choices=("chains", "flags", "subspaces",
                                         "galois"))
    oracle.add_argument("--n", type=_natural, required=True)
    oracle.add_argument("--k", type=_natural)
    oracle.add_argument("--q", type=_positive)

    classify_parser = commands.add_parser(
        "classify", parents=[common, function_options],
        help="test a multiplicativity or additivity equation")
    classify_parser.add_argument(
        "--kind", choices=CLASSIFY_KINDS + BINOMIAL_KINDS, required=True)
    classify_parser.add_argument(
        "--function", metavar="PATH",
        help="function JSON file; binomial kinds read functions on 0..N")

    return parser


def _emit(config: RunConfig, document, text: str) -> None:
    output = write_json(document) if config.format == "json" else text + "\n"
    if config.out is None:
        sys.stdout.write(output)
    else:
        with open(config.out, "w") as outf:
            outf.write(output)
        log.debug(f"Wrote {config.out}.")


def _load_function(config: RunConfig) -> ArithFun:
    if config.function is not None:
        return ArithFun.read(config.function)
    if config.builtin is not None:
        bound = default_bound.get() if config.bound is None else config.bound
        return builtin(config.builtin, bound, k=config.k)
    raise ValueError("give --function or --builtin")


def _load_series_and_type(config: RunConfig):
    F = TruncatedSeries.read(config.series)
    B = BinomialType.from_spec(
        config.type, F.order if config.order is None else config.order)
    return F, B


def cmd_suite(config: RunConfig) -> int:
    """Run a series suite (``--series``) or a Dirichlet suite."""

    if config.series is not None:
        if config.builtin is not None:
            raise ValueError("give either --series or --builtin")
        F, B = _load_series_and_type(config)
        verdict = run_suite(F, B, config.variant, trials=config.trials,
                            seed=config.seed, order=config.order,
                            mode=config.mode)
    else:
        verdict = check_dirichlet(_load_function(config), config.variant,
                                  trials=config.trials, seed=config.seed)

    _emit(config, verdict.to_dict(), verdict.pformat())

    if verdict.consistent:
        return EXIT_OK
    if verdict.hypothesis_violated:
        log.warning("conditions disagree, but a_1 = 0 lies outside the "
                    "characterizations")
        return EXIT_OK
    log.error(f"{verdict.label}: conditions disagree")
    return EXIT_INCONSISTENT


def cmd_check(config: RunConfig) -> int:
    """Run one condition on a series."""

    F, B = _load_series_and_type(config)
    condition = config.condition
    if condition.isdigit():
        condition = int(condition)
    report = check_condition(condition, F, B, config.variant,
                             trials=config.trials, seed=config.seed,
                             order=config.order, mode=config.mode)

    lines = [f"suite: {report.suite} (theorem {report.theorem})",
             f"condition ({report.condition}) {report.name}: "
             f"{report.verdict}"]
    if report.witness is not None:
        lines.append("witness: " + json.dumps(report.witness))
    document = {"theorem": report.theorem, "suite": report.suite,
                "variant": report.variant, "conditions": [report.to_dict()]}
    _emit(config, document, "\n".join(lines))
    return EXIT_OK


def _function_table(values, first: int) -> Table:
    return Table([list(range(first, first + len(values))),
                  [format_rational(v) for v in values]],
                 names=("n", "value"))


def cmd_conv(config: RunConfig) -> int:
    """Dirichlet, unitary, or binomial-type convolution of two files."""

    if config.kind == "binomial":
        f = BinomialArithFun.read(config.f)
        g = BinomialArithFun.read(config.g)
        B = BinomialType.from_spec(config.type, max(f.bound, g.bound, 1))
        result = m_convolution(B, f, g)
        first = 0
    else:
        f, g = ArithFun.read(config.f), ArithFun.read(config.g)
        conv = dirichlet_conv if config.kind == "dirichlet" else unitary_conv
        result = conv(f, g)
        first = 1

    table = _function_table(result.values, first)
    _emit(config, result.to_dict(),
          "\n".join(table.pformat(max_lines=-1, max_width=-1)))
    return EXIT_OK


def cmd_generate(config: RunConfig) -> int:
    """Write the closed-form series of a type and variant."""

    a1 = parse_rational(config.a1)
    if a1 == 0:
        raise ValueError("a_1 must be nonzero")
    order = working_order.get() if config.order is None else config.order
    B = BinomialType.from_spec(config.type, order)
    F = closed_form_series(B, config.variant, a1, order=order)
    # a file written with --out is the input of later suites, so it is
    # always JSON
    if config.out is not None:
        config.format = "json"
    _emit(config, F.to_dict(), str(F))
    return EXIT_OK


def cmd_oracle(config: RunConfig) -> int:
    """Enumerate a count and print it beside its closed form."""

    result = run_oracle(config.kind, config.n, k=config.k, q=config.q)
    params = ", ".join(f"{k}={v}" for k, v in result.params.items())
    text = (f"{result.kind}({params}): count {result.count}, closed form "
            f"{result.expected}, {'agree' if result.agrees else 'DISAGREE'}")
    _emit(config, result.to_dict(), text)
    return EXIT_OK if result.agrees else EXIT_INCONSISTENT


def cmd_classify(config: RunConfig) -> int:
    """Test a functional equation on a function file or built-in."""

    if config.kind in BINOMIAL_KINDS:
        if config.function is None:
            raise ValueError("binomial kinds need --function")
        result = binomial_classify(BinomialArithFun.read(config.function),
                                   config.kind)
    else:
        result = classify(_load_function(config), config.kind)

    document = {"kind": result.kind, "holds": result.holds,
                "witness": None if result.witness is None
                else list(result.witness),
                "vacuous": result.vacuous}
    text = f"{result.kind}: {'holds' if result.holds else 'fails'}"
    if result.witness is not None:
        text += f", witness (m, n) = {tuple(result.witness)}"
    if result.vacuous:
        text += " (identically zero)"
    _emit(config, document, text)
    return EXIT_OK


_COMMANDS = {
    "suite": cmd_suite,
    "check": cmd_check,
    "conv": cmd_conv,
    "generate": cmd_generate,
    "oracle": cmd_oracle,
    "classify": cmd_classify,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point of the ``lcz`` command; returns the exit status."""

    parser = build_parser()
    args = parser.parse_args(argv)

    previous_level = log.level
    if args.verbose:
        log.setLevel("DEBUG")
    elif args.quiet:
        log.setLevel("WARNING")

    try:
        config = RunConfig.from_namespace(args)
        return _COMMANDS[config.command](config)
    except (LczException, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"lcz: error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    finally:
        log.setLevel(previous_level)
