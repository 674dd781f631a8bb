"""
Exhaustive audits over all graphs of a fixed order.

Graphs are streamed from the generator, audited in chunks (inline or on a
process pool) and reduced in input order, so the report does not depend on
the number of workers.
"""

import logging
import time
from collections import deque
from concurrent.futures import Future, ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from itertools import islice
from typing import Any, Callable, Deque, Dict, Iterable, Iterator, List, NamedTuple, Optional

import pandas as pd
from tqdm import tqdm

from ..certificates.base import CaseTag
from ..certificates.theorems import audit_graph
from ..config import AUDIT_CHUNK_SIZE, DEFAULT_TOLERANCES, KNOWN_CLASS_COUNTS, Tolerances
from ..exceptions import EnumerationError
from ..graphs.core import Graph
from ..io.graph6 import emit_graph6
from .generate import enumerate_graphs

logger = logging.getLogger(__name__)


def _apply_chunk(func: Callable[[Any], Any], chunk: List[Any]) -> List[Any]:
    return [func(item) for item in chunk]


def ordered_map(
    func: Callable[[Any], Any],
    items: Iterable[Any],
    workers: int = 1,
    chunk_size: int = AUDIT_CHUNK_SIZE,
) -> Iterator[Any]:
    """
    Lazily map func over items, yielding results in input order.

    With workers > 1 chunks go to a process pool; at most 2 * workers chunks
    are in flight. func must be picklable (a module-level function or a
    partial of one).
    """
    if workers <= 1:
        for item in items:
            yield func(item)
        return

    iterator = iter(items)
    pending: Deque[Future] = deque()
    with ProcessPoolExecutor(max_workers=workers) as executor:
        while True:
            while len(pending) < 2 * workers:
                chunk = list(islice(iterator, chunk_size))
                if not chunk:
                    break
                pending.append(executor.submit(_apply_chunk, func, chunk))
            if not pending:
                return
            yield from pending.popleft().result()


class GraphAuditSummary(NamedTuple):
    """Per-graph outcome kept by the exhaustive reduction."""
    graph6: str
    total: float
    max_lambda: float
    case: str
    equality: bool
    structural: bool
    failures: tuple
    theorem2_in_case: bool


def summarize(G: Graph, tolerances: Tolerances = DEFAULT_TOLERANCES) -> GraphAuditSummary:
    """Run audit_graph (both theorems) on G and keep what the report needs."""
    certificate = audit_graph(G, tolerances)
    return GraphAuditSummary(
        graph6=emit_graph6(G),
        total=certificate.total,
        max_lambda=certificate.max_lambda,
        case=certificate.case.value,
        equality=certificate.equality.flag,
        structural=certificate.equality.structural,
        failures=tuple(check.name for check in certificate.failures()),
        theorem2_in_case=bool(certificate.theorem2 and certificate.theorem2.in_case),
    )


@dataclass
class EnumReport:
    """
    Result of an exhaustive audit.

    Attributes:
        n: Order
        count: Number of classes audited
        expected_count: Known number of classes of order n
        min_sum: Smallest lambda + lambda-bar
        min_sum_witness: graph6 of the first graph attaining min_sum
        equality_cases: graph6 of the graphs with |sum - 1| <= tol, in enumeration order
        equality_mismatches: graph6 of graphs where the equality flag and the
            structural characterization disagree
        c_n: Smallest max{lambda, lambda-bar}
        c_n_witness: graph6 of the first graph attaining c_n
        violations: 'graph6: check, check, ...' for every graph with a failed check
        case_counts: Number of graphs per case tag
        theorem2_in_case: Graphs meeting the hypotheses of the max-lambda bound
        wall_time: Seconds; logged, excluded from to_dict()
    """
    n: int
    count: int = 0
    expected_count: Optional[int] = None
    min_sum: float = float("inf")
    min_sum_witness: str = ""
    equality_cases: List[str] = field(default_factory=list)
    equality_mismatches: List[str] = field(default_factory=list)
    c_n: float = float("inf")
    c_n_witness: str = ""
    violations: List[str] = field(default_factory=list)
    case_counts: Dict[str, int] = field(default_factory=lambda: {tag.value: 0 for tag in CaseTag})
    theorem2_in_case: int = 0
    wall_time: float = 0.0

    def add(self, summary: GraphAuditSummary) -> None:
        self.count += 1
        self.case_counts[summary.case] += 1
        if summary.total < self.min_sum:
            self.min_sum, self.min_sum_witness = summary.total, summary.graph6
        if summary.max_lambda < self.c_n:
            self.c_n, self.c_n_witness = summary.max_lambda, summary.graph6
        if summary.equality:
            self.equality_cases.append(summary.graph6)
        if summary.equality != summary.structural:
            self.equality_mismatches.append(summary.graph6)
        if summary.failures:
            self.violations.append(f"{summary.graph6}: {', '.join(summary.failures)}")
        self.theorem2_in_case += summary.theorem2_in_case

    @property
    def count_matches(self) -> bool:
        return self.expected_count is None or self.count == self.expected_count

    @property
    def passed(self) -> bool:
        return not self.violations and not self.equality_mismatches and self.count_matches

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "count": self.count,
            "expected_count": self.expected_count,
            "passed": self.passed,
            "min_sum": self.min_sum,
            "min_sum_witness": self.min_sum_witness,
            "c_n": self.c_n,
            "c_n_witness": self.c_n_witness,
            "equality_cases": list(self.equality_cases),
            "equality_mismatches": list(self.equality_mismatches),
            "violations": list(self.violations),
            "case_counts": dict(self.case_counts),
            "theorem2_in_case": self.theorem2_in_case,
        }

    def summary_frame(self) -> pd.DataFrame:
        """One-row table of the headline numbers."""
        return pd.DataFrame(
            [
                {
                    "n": self.n,
                    "graphs": self.count,
                    "expected": self.expected_count,
                    "violations": len(self.violations),
                    "min_sum": self.min_sum,
                    "equality_cases": len(self.equality_cases),
                    "c_n": self.c_n,
                    "theorem2_in_case": self.theorem2_in_case,
                }
            ]
        )

    def case_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            sorted(self.case_counts.items()), columns=["case", "graphs"]
        )

    def headline(self) -> str:
        return (
            f"{self.count} graphs, {len(self.violations)} violations, "
            f"c_{self.n} = {self.c_n!r}"
        )


def exhaustive_audit(
    n: int,
    workers: int = 1,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    allow_long: bool = False,
    progress: bool = False,
) -> EnumReport:
    """
    Audit both theorems on every isomorphism class of order n.

    Args:
        n: Order, at least 2
        workers: Worker processes (1 = inline); the report is identical for any value
        tolerances: Audit tolerances
        allow_long: Permit n = 9 and n = 10
        progress: Show a tqdm progress bar on stderr

    Returns:
        EnumReport

    Raises:
        EnumerationError: Order outside the supported range
    """
    if n < 2:
        raise EnumerationError(f"Exhaustive audit needs n >= 2, got n = {n}")
    report = EnumReport(n=n, expected_count=KNOWN_CLASS_COUNTS.get(n))
    started = time.perf_counter()

    graphs = enumerate_graphs(n, allow_long=allow_long)
    summaries = ordered_map(partial(summarize, tolerances=tolerances), graphs, workers)
    with tqdm(total=report.expected_count, desc=f"n={n}", disable=not progress) as bar:
        for summary in summaries:
            report.add(summary)
            bar.update(1)

    report.wall_time = time.perf_counter() - started
    logger.info(
        f"Order {n}: {report.headline()} in {report.wall_time:.1f}s with {workers} worker(s)"
    )
    if not report.count_matches:
        logger.warning(f"Order {n}: {report.count} classes, expected {report.expected_count}")
    if report.violations:
        logger.warning(f"Order {n}: {len(report.violations)} graphs with failed checks")
    return report
