"""
Command-line interface.

    spreadcheck audit graphs.g6 --json report.json
    spreadcheck enumerate --order 7 --threads 4 --equality-out eq7.g6
    spreadcheck spectrum p4.g6
    spreadcheck resistance c6.txt --format edges --pair 0,3
    spreadcheck family --name remark --order 10 --audit
    spreadcheck random --count 1000 --max-order 32 --seed 7

Exit codes: 0 when every check passes, 1 when a check fails, 2 for usage
errors and unreadable or malformed input. Reports go to stdout and logs to
stderr.
"""

import argparse
import logging
import sys
from functools import partial
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, TextIO, Tuple

import pandas as pd

from . import __version__
from .certificates.base import Certificate
from .certificates.theorems import audit_graph
from .config import DEFAULT_TOLERANCES, Tolerances
from .enumeration.exhaustive import exhaustive_audit, ordered_map
from .enumeration.generate import RNG_ALGORITHM, random_graphs
from .exceptions import (
    CertificateError,
    EigenSolverError,
    EnumerationError,
    FormatError,
    GraphError,
    PreconditionError,
)
from .graphs.core import Graph, complement
from .graphs.families import FAMILY_REGISTRY, FamilySpec, make, remark_lambda
from .io.documents import certificate_document, dumps, to_json_safe
from .io.edge_list import parse_edge_lists
from .io.graph6 import MAX_SHORT_ORDER, emit_graph6, read_graph6_lines
from .spectra.laplacian import algebraic_connectivity, laplacian_spectrum
from .spectra.resistance import resistance_matrix, resistance_variational_oracle

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

FLOAT_FORMAT = "%.17g"


def _pair(text: str) -> Tuple[int, int]:
    try:
        r, s = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"Expected 'r,s' with integer indices, got {text!r}")
    return r, s


def _positive_float(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"Expected a positive number, got {text}")
    return value


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write_text(text: str, target: str) -> None:
    if target == "-":
        sys.stdout.write(text)
    else:
        Path(target).write_text(text)
        logger.info(f"Wrote {target}")


def read_graphs(path: str, source_format: str) -> List[Graph]:
    """
    Read every graph in a graph6 or edge-list file ('-' for stdin).

    Raises:
        OSError: Unreadable file
        FormatError: Malformed content or no graphs
    """
    text = _read_text(path)
    if source_format == "graph6":
        graphs = list(read_graph6_lines(text.splitlines()))
    else:
        graphs = parse_edge_lists(text)
    if not graphs:
        raise FormatError(f"No graphs found in {path}")
    logger.info(f"Read {len(graphs)} graph(s) from {path} ({source_format})")
    return graphs


def _tolerances(args: argparse.Namespace) -> Tolerances:
    return DEFAULT_TOLERANCES.with_audit(args.tol)


def _audit_all(graphs: Sequence[Graph], args: argparse.Namespace) -> List[Certificate]:
    audit = partial(audit_graph, tolerances=_tolerances(args))
    return list(ordered_map(audit, graphs, workers=args.threads, chunk_size=16))


def _certificate_table(graphs: Sequence[Graph], certificates: Sequence[Certificate]) -> str:
    rows = [
        {
            "index": index,
            "n": G.n,
            "case": cert.case.value,
            "lambda": cert.lambda_g,
            "lambda_complement": cert.lambda_complement,
            "sum": cert.total,
            "status": "pass" if cert.passed else "fail",
        }
        for index, (G, cert) in enumerate(zip(graphs, certificates))
    ]
    return pd.DataFrame(rows).to_string(index=False, float_format=lambda v: f"{v:.12f}")


def _text_stream(args: argparse.Namespace) -> TextIO:
    """Tables go to stderr when the JSON document is written to stdout."""
    return sys.stderr if getattr(args, "json", None) == "-" else sys.stdout


def _write_documents(
    graphs: Sequence[Graph],
    certificates: Sequence[Certificate],
    source_format: str,
    args: argparse.Namespace,
) -> None:
    documents = [
        certificate_document(G, cert, source_format, _tolerances(args), index=index)
        for index, (G, cert) in enumerate(zip(graphs, certificates))
    ]
    _write_text(dumps(documents) + "\n", args.json)


def cmd_audit(args: argparse.Namespace) -> int:
    graphs = read_graphs(args.file, args.format)
    certificates = _audit_all(graphs, args)
    print(_certificate_table(graphs, certificates), file=_text_stream(args))
    if args.json:
        _write_documents(graphs, certificates, args.format, args)
    failed = [index for index, cert in enumerate(certificates) if not cert.passed]
    if failed:
        logger.error(f"{len(failed)} of {len(certificates)} graph(s) failed: indices {failed}")
        return EXIT_FAIL
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    report = exhaustive_audit(
        args.order,
        workers=args.threads,
        tolerances=_tolerances(args),
        allow_long=args.long,
        progress=args.progress,
    )
    out = _text_stream(args)
    print(report.headline(), file=out)
    summary = report.summary_frame().to_string(index=False, float_format=lambda v: f"{v:.12f}")
    print(summary, file=out)
    print(file=out)
    print(report.case_frame().to_string(index=False), file=out)
    for line in report.violations:
        print(f"violation {line}", file=out)
    for code in report.equality_mismatches:
        print(f"equality mismatch {code}", file=out)
    if args.equality_out:
        _write_text("".join(f"{code}\n" for code in report.equality_cases), args.equality_out)
    if args.json:
        _write_text(dumps(report.to_dict()) + "\n", args.json)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_spectrum(args: argparse.Namespace) -> int:
    graphs = read_graphs(args.file, args.format)
    blocks = []
    for G in graphs:
        spectrum = laplacian_spectrum(G, _tolerances(args), method=args.method)
        frame = pd.DataFrame(
            {"index": range(1, G.n + 1), "eigenvalue": spectrum.eigenvalues}
        )
        blocks.append(frame.to_csv(index=False, float_format=FLOAT_FORMAT))
    sys.stdout.write("\n".join(blocks))
    return EXIT_OK


def cmd_resistance(args: argparse.Namespace) -> int:
    graphs = read_graphs(args.file, args.format)
    tolerances = _tolerances(args)
    r, s = args.pair
    status = EXIT_OK
    for index, G in enumerate(graphs):
        R = resistance_matrix(G, tolerances)
        value = R[r, s]
        oracle = resistance_variational_oracle(G, r, s)
        difference = abs(value - oracle)
        agrees = difference <= tolerances.oracle
        print(f"graph {index}: R[{r},{s}] = {value!r}")
        print(f"graph {index}: oracle = {oracle!r} difference = {difference:.3e}")
        print(f"graph {index}: kirchhoff_index = {R.kirchhoff_index()!r}")
        if not agrees:
            logger.error(f"Graph {index}: spectral and variational resistance disagree")
            status = EXIT_FAIL
    return status


def cmd_family(args: argparse.Namespace) -> int:
    G = make(FamilySpec(args.name, args.order))
    tolerances = _tolerances(args)
    out = _text_stream(args)
    print(f"family = {args.name} n = {G.n} edges = {G.num_edges}", file=out)
    if G.n <= MAX_SHORT_ORDER:
        print(f"graph6 = {emit_graph6(G)}", file=out)
    if G.n < 2:
        return EXIT_OK
    lam = algebraic_connectivity(G, tolerances).lambda2
    lam_bar = algebraic_connectivity(complement(G), tolerances).lambda2
    print(f"lambda = {lam!r}", file=out)
    print(f"lambda_complement = {lam_bar!r}", file=out)
    print(f"max = {max(lam, lam_bar)!r} ({'< 1' if max(lam, lam_bar) < 1 else '>= 1'})", file=out)
    if args.name == "remark":
        print(f"closed_form = {remark_lambda(G.n)!r}", file=out)
    if not args.audit:
        return EXIT_OK

    certificate = audit_graph(G, tolerances)
    print(_certificate_table([G], [certificate]), file=out)
    if args.json:
        _write_documents([G], [certificate], "family", args)
    return EXIT_OK if certificate.passed else EXIT_FAIL


def cmd_random(args: argparse.Namespace) -> int:
    graphs = list(
        random_graphs(args.count, args.min_order, args.max_order, p=args.p, seed=args.seed)
    )
    certificates = _audit_all(graphs, args)
    failed = [index for index, cert in enumerate(certificates) if not cert.passed]
    min_sum = min(cert.total for cert in certificates) if certificates else float("nan")
    cases: Dict[str, int] = {}
    for cert in certificates:
        cases[cert.case.value] = cases.get(cert.case.value, 0) + 1

    out = _text_stream(args)
    print(f"rng = {RNG_ALGORITHM} seed = {args.seed}", file=out)
    print(f"{len(graphs)} graphs, {len(failed)} failures, min sum = {min_sum!r}", file=out)
    case_table = pd.DataFrame(sorted(cases.items()), columns=["case", "graphs"])
    print(case_table.to_string(index=False), file=out)
    if args.json:
        summary = {
            "rng": RNG_ALGORITHM,
            "seed": args.seed,
            "count": len(graphs),
            "failures": [emit_graph6(graphs[i]) for i in failed],
            "min_sum": min_sum,
            "case_counts": cases,
        }
        _write_text(dumps(to_json_safe(summary)) + "\n", args.json)
    return EXIT_FAIL if failed else EXIT_OK


def _add_global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument(
        "--tol",
        type=_positive_float,
        default=default(DEFAULT_TOLERANCES.audit),
        help="Slack tolerance for certificate checks (default: 1e-7)",
    )
    parser.add_argument(
        "--seed", type=int, default=default(0), help="Seed for random graphs (default: 0)"
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=default(1),
        help="Worker processes for audits; results do not depend on it (default: 1)",
    )
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default=default("WARNING"),
        help="Logging level on stderr (default: WARNING)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spreadcheck",
        description="Audit lambda(G) + lambda(complement G) >= 1 with per-graph certificates",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _add_global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def file_command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("file", help="Input file, '-' for stdin")
        p.add_argument(
            "--format",
            choices=["graph6", "edges"],
            default="graph6",
            help="Input format (default: graph6)",
        )
        return p

    p = file_command("audit", "Audit every graph in a file")
    p.add_argument("--json", metavar="OUT", help="Write certificate documents ('-' for stdout)")
    p.set_defaults(handler=cmd_audit)

    p = sub.add_parser("enumerate", parents=[common], help="Audit all graphs of one order")
    p.add_argument("--order", type=int, required=True, help="Number of vertices")
    p.add_argument("--long", action="store_true", help="Allow orders 9 and 10")
    p.add_argument("--equality-out", metavar="FILE", help="Write equality cases as graph6")
    p.add_argument("--json", metavar="OUT", help="Write the report as JSON ('-' for stdout)")
    p.add_argument("--progress", action="store_true", help="Show a progress bar on stderr")
    p.set_defaults(handler=cmd_enumerate)

    p = file_command("spectrum", "Print Laplacian eigenvalues as CSV")
    p.add_argument("--method", choices=["lapack", "jacobi"], default="lapack")
    p.set_defaults(handler=cmd_spectrum)

    p = file_command("resistance", "Effective resistance with an independent cross-check")
    p.add_argument("--pair", type=_pair, required=True, metavar="R,S", help="Vertex pair")
    p.set_defaults(handler=cmd_resistance)

    p = sub.add_parser("family", parents=[common], help="Construct a named graph")
    p.add_argument("--name", choices=sorted(FAMILY_REGISTRY), required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--audit", action="store_true", help="Audit the constructed graph")
    p.add_argument("--json", metavar="OUT", help="Write the certificate document with --audit")
    p.set_defaults(handler=cmd_family)

    p = sub.add_parser("random", parents=[common], help="Audit seeded random graphs")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--min-order", type=int, default=2)
    p.add_argument("--max-order", type=int, default=32)
    p.add_argument("--p", type=float, default=None, help="Edge probability (default: random)")
    p.add_argument("--json", metavar="OUT", help="Write a JSON summary ('-' for stdout)")
    p.set_defaults(handler=cmd_random)
    return parser


HANDLED_INPUT_ERRORS = (OSError, FormatError, GraphError, PreconditionError, EnumerationError)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse argv, dispatch to the subcommand and return the exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    handler: Callable[[argparse.Namespace], int] = args.handler
    try:
        return handler(args)
    except HANDLED_INPUT_ERRORS as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_USAGE
    except ValueError as e:
        # unknown family names and similar lookups
        logger.error(f"{args.command}: {e}")
        return EXIT_USAGE
    except (EigenSolverError, CertificateError) as e:
        logger.error(f"{args.command}: check failed: {e}")
        return EXIT_FAIL


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
