"""
Command-line front end.

    chaincalc verify algebra --seed 7
    chaincalc converge stokes --levels 3..8
    chaincalc demo cantor --dump chains/
    chaincalc norm refinement:1,4 --r 1
    chaincalc flow ftc --level 6 --intervals 64

Exit codes: 0 pass, 1 verification failure, 2 usage or parse error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, List, Optional, Sequence

from chaincalc.chains import DiracChain, loads
from chaincalc.data_types.config.convergence import ConvergenceConfig
from chaincalc.data_types.config.flow import FlowConfig
from chaincalc.data_types.config.verify import VerifyConfig
from chaincalc.data_types.flow import FlowReport
from chaincalc.data_types.report import Case, Report
from chaincalc.exceptions import (
    CertificateViolationError,
    ChainCalcError,
    UnknownDemoError,
    UnknownSuiteError,
    UnknownTheoremError,
)
from chaincalc.exterior import KVector, basis_indices
from chaincalc.expression import parse_components
from chaincalc.factories.convergence_factory import ConvergenceFactory
from chaincalc.factories.demo_factory import DemoFactory
from chaincalc.factories.suite_factory import SuiteFactory
from chaincalc.fields.vector_field import VectorFieldSpec
from chaincalc.flow.theorems import (
    TimeForm,
    flow_leibniz_verify,
    ftc_flow_verify,
    refinement_table,
    reynolds_verify,
    stokes_flow_verify,
)
from chaincalc.forms import Form
from chaincalc.norms import CertifiedForm, norm_bound
from chaincalc.reports import FORMATS, render, write_output
from chaincalc.represent.cubes import cube_chain
from chaincalc.represent.fractals import cantor_chain
from chaincalc.utils import get_thread_count, parse_levels, utc_timestamp

_log = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

FLOW_CHAINS = ("segment", "square")
FLOW_EXPERIMENTS = ("ftc", "stokes", "leibniz", "reynolds")


class UsageError(Exception):
    """Bad user input detected after argument parsing."""


def _unit_cube(dim: int, level: int) -> DiracChain:
    return cube_chain((0.0,) * dim, 1.0, tuple(range(dim)), level=level)


def _ints(text: str, count: int, spec: str) -> List[int]:
    try:
        values = [int(v) for v in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"chain spec {spec!r} needs {count} integers") from exc
    if len(values) != count:
        raise UsageError(f"chain spec {spec!r} needs {count} integers")
    return values


def parse_chain_spec(spec: str) -> DiracChain:
    """
    ``cube:n,j``, ``refinement:n,j`` (P_j - P_{j+1}), ``zero:n,k``,
    ``cantor:m`` or ``@path`` to a chain dump.
    """
    if spec.startswith("@"):
        return loads(Path(spec[1:]).read_text())
    kind, _, rest = spec.partition(":")
    if kind == "cube":
        n, j = _ints(rest, 2, spec)
        return _unit_cube(n, j)
    if kind == "refinement":
        n, j = _ints(rest, 2, spec)
        return _unit_cube(n, j) - _unit_cube(n, j + 1)
    if kind == "zero":
        n, k = _ints(rest, 2, spec)
        return DiracChain.zero(n, k)
    if kind == "cantor":
        (m,) = _ints(rest, 1, spec)
        return cantor_chain(m)
    raise UsageError(f"unknown chain spec {spec!r}, expected cube, refinement, zero, cantor or @path")


def _emit(result, args: argparse.Namespace) -> None:
    write_output(render(result, args.format), args.out)


def cmd_verify(args: argparse.Namespace) -> int:
    config = VerifyConfig(
        seed=args.seed,
        oracle=args.oracle,
        tolerance=args.tol,
        samples=args.samples,
        threads=get_thread_count(),
    )
    report = SuiteFactory.create_suite(args.name, config).run()
    _emit(report, args)
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_converge(args: argparse.Namespace) -> int:
    lo, hi = parse_levels(args.levels)
    config = ConvergenceConfig(
        form=args.form,
        field=args.field,
        domain=args.domain,
        power=args.power,
        seed=args.seed,
    )
    table = ConvergenceFactory.create_theorem(args.name, config).table(range(lo, hi + 1))
    _emit(table, args)
    return EXIT_PASS


def cmd_demo(args: argparse.Namespace) -> int:
    demo = DemoFactory.create_demo(args.name, args.tol)
    report = demo.run()
    if args.dump is not None:
        for path in demo.dump(args.dump):
            _log.info("dumped %s", path)
    _emit(report, args)
    return EXIT_PASS if report.passed else EXIT_FAIL


def _dictionary(chain: DiracChain, form: Optional[str], bound: float) -> List[CertifiedForm]:
    dictionary: List[CertifiedForm] = [
        (Form.constant(KVector.basis(chain.dim, index)), 1.0)
        for index in basis_indices(chain.dim, chain.grade)
    ]
    if form is not None:
        dictionary.append((Form.parse(form, chain.dim), bound))
    return dictionary


def cmd_norm(args: argparse.Namespace) -> int:
    chain = parse_chain_spec(args.chain)
    try:
        bound = norm_bound(chain, args.r, _dictionary(chain, args.form, args.form_bound), args.strategy)
    except CertificateViolationError as exc:
        print(f"chaincalc: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(bound, args)
    return EXIT_PASS


def _flow_chain(name: str, level: int) -> DiracChain:
    if name == "segment":
        return cube_chain((0.0, 0.0), 1.0, (0,), level=level)
    return _unit_cube(2, level)


def cmd_flow(args: argparse.Namespace) -> int:
    cfg = FlowConfig(step=args.step, intervals=args.intervals, time_step=args.time_step)
    V = VectorFieldSpec.from_expressions(parse_components(args.field, 2))
    chain = _flow_chain(args.chain, args.level)
    report: FlowReport
    if args.name in ("ftc", "stokes"):
        harness = ftc_flow_verify if args.name == "ftc" else stokes_flow_verify
        w = Form.parse(args.form, 2)
        if args.refine > 0:
            counts = [args.intervals * 2**i for i in range(args.refine + 1)]
            report = refinement_table(harness, chain, V, w, args.a, args.b, counts, cfg)
        else:
            report = harness(chain, V, w, args.a, args.b, cfg)
    elif args.name == "leibniz":
        report = flow_leibniz_verify(chain, V, TimeForm.parse(args.form, 2), args.t, cfg)
    else:
        report = reynolds_verify(chain, V, TimeForm.parse(args.form, 2), args.t, cfg)
    case = Case(
        id=args.name,
        expected=report.rhs,
        computed=report.lhs,
        tol=args.tol,
        params={"chain": args.chain, "level": args.level},
    )
    result = Report(
        suite=f"flow/{args.name}",
        cases=[case],
        seed=0,
        config={"field": args.field, "form": args.form},
        timestamp=utc_timestamp(),
        extra=report.to_dict(),
    )
    if args.format == "csv":
        _emit(report, args)
    else:
        _emit(result, args)
    return EXIT_PASS if result.passed else EXIT_FAIL


def _add_output(parser: argparse.ArgumentParser, default_format: str = "json") -> None:
    parser.add_argument("--out", type=Path, default=None, help="Write to PATH instead of stdout.")
    parser.add_argument(
        "--format",
        choices=FORMATS,
        default=default_format,
        help=f"Output format (default: {default_format}).",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chaincalc",
        description="Differential chains: verification suites, convergence tables, demos, norms and flows.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    p_verify = subparsers.add_parser("verify", help="Run a randomized identity suite")
    p_verify.add_argument("name", help="Suite name (algebra, duality, commutators, cartesian, norms)")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--oracle", choices=["analytic", "fd"], default="analytic")
    p_verify.add_argument("--tol", type=float, default=None, help="Override the suite tolerance.")
    p_verify.add_argument("--samples", type=int, default=None, help="Override the sample count.")
    _add_output(p_verify)
    p_verify.set_defaults(handler=cmd_verify)

    p_converge = subparsers.add_parser("converge", help="Per-level convergence table of a theorem")
    p_converge.add_argument(
        "name", help="Theorem (stokes, gauss-green, kelvin-stokes, higher-div, change-of-vars)"
    )
    p_converge.add_argument("--levels", default="3..8", help="Level range a..b (default: 3..8).")
    p_converge.add_argument("--form", default=None, help="Form spec, e.g. 'x @ 2'.")
    p_converge.add_argument("--field", default=None, help="Vector field components, e.g. 'x, y'.")
    p_converge.add_argument("--domain", default=None, help="Domain spec, e.g. 'disk: 0, 0, 1'.")
    p_converge.add_argument("--power", type=int, default=1, help="s in □^s for higher-div.")
    p_converge.add_argument("--seed", type=int, default=0)
    _add_output(p_converge, "csv")
    p_converge.set_defaults(handler=cmd_converge)

    p_demo = subparsers.add_parser("demo", help="Reproduce a worked example")
    p_demo.add_argument("name", help="Demo (cantor, sierpinski, slit-disk, dipole-sphere, vectorfield)")
    p_demo.add_argument("--dump", type=Path, default=None, help="Write the demo chains to DIR.")
    p_demo.add_argument("--tol", type=float, default=None)
    _add_output(p_demo)
    p_demo.set_defaults(handler=cmd_demo)

    p_norm = subparsers.add_parser("norm", help="Certified B^r norm bracket of a chain")
    p_norm.add_argument("chain", help="cube:n,j | refinement:n,j | zero:n,k | cantor:m | @path")
    p_norm.add_argument("--r", type=int, default=1)
    p_norm.add_argument("--strategy", choices=["pairing", "trivial"], default="pairing")
    p_norm.add_argument("--form", default=None, help="Extra lower-bound form spec.")
    p_norm.add_argument("--form-bound", type=float, default=1.0, help="Certified norm of --form.")
    _add_output(p_norm)
    p_norm.set_defaults(handler=cmd_norm)

    p_flow = subparsers.add_parser("flow", help="Check a flow theorem")
    p_flow.add_argument("name", choices=FLOW_EXPERIMENTS)
    p_flow.add_argument("--chain", choices=FLOW_CHAINS, default="segment")
    p_flow.add_argument("--level", type=int, default=6)
    p_flow.add_argument("--field", default="-y, x", help="Planar vector field (default: rotation).")
    p_flow.add_argument("--form", default="x @ 2", help="Form spec; leibniz/reynolds may use t.")
    p_flow.add_argument("--a", type=float, default=0.0)
    p_flow.add_argument("--b", type=float, default=1.0)
    p_flow.add_argument("--t", type=float, default=0.5)
    p_flow.add_argument("--intervals", type=int, default=64)
    p_flow.add_argument("--step", type=float, default=1e-3)
    p_flow.add_argument("--time-step", type=float, default=1e-4)
    p_flow.add_argument("--refine", type=int, default=0, help="Also run 2x, 4x, ... intervals.")
    p_flow.add_argument("--tol", type=float, default=1e-3)
    _add_output(p_flow)
    p_flow.set_defaults(handler=cmd_flow)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    handler: Callable[[argparse.Namespace], int] = args.handler
    try:
        return handler(args)
    except (UnknownSuiteError, UnknownDemoError, UnknownTheoremError) as exc:
        print(f"chaincalc: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    except (ChainCalcError, UsageError, ValueError, OSError) as exc:
        print(f"chaincalc: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
