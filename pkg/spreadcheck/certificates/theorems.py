"""
Graph-level audits.

audit_theorem1 routes a graph through the case analysis of
lambda(G) + lambda(complement G) >= 1 and evaluates every inequality the
branch relies on. audit_theorem2 evaluates the max{lambda, lambda-bar} chain
when the graph falls into its case. audit_graph runs both on one shared
spectral analysis.
"""

import logging
import math
from dataclasses import dataclass, field, replace
from typing import Iterable, List, NamedTuple, Optional

from ..config import DEFAULT_TOLERANCES, Tolerances
from ..exceptions import PreconditionError
from ..graphs.core import Graph, complement, diameter, distance, is_connected
from ..spectra.eigen import Spectrum
from ..spectra.laplacian import (
    FiedlerData,
    algebraic_connectivity,
    check_complement_duality,
    laplacian_spectrum,
)
from ..spectra.resistance import conductance_lower_bound, resistance_from_spectrum
from .base import CaseData, CaseTag, Certificate, Check, EqualityWitness, Theorem2Report
from .case_analysis import (
    build_case_data,
    case_table_applies,
    deep_check_step22,
    eq8_bound,
    eq10_bound,
    orient,
)
from .lemmas import (
    is_join_of_cone_and_disconnected,
    lemma_diameter_check,
    lemma_disconnected_check,
    lemma_identity_check,
    neighbor_bound_check,
    step1_bound,
)

logger = logging.getLogger(__name__)

THEOREM2_GAP_SQUARED = 0.5
THEOREM2_MAX_PATHS = 5


@dataclass
class PairAnalysis:
    """
    Spectral data of a graph and its complement, shared by both audits.

    Attributes:
        graph: Input graph
        complement_graph: Its complement
        spectrum / complement_spectrum: Laplacian spectra
        fiedler / complement_fiedler: Fiedler data
        connected / complement_connected: BFS connectivity
    """
    graph: Graph
    complement_graph: Graph
    spectrum: Spectrum
    complement_spectrum: Spectrum
    fiedler: FiedlerData
    complement_fiedler: FiedlerData
    connected: bool
    complement_connected: bool
    tolerances: Tolerances
    _case_data: Optional[CaseData] = field(default=None, repr=False)

    @classmethod
    def of(cls, G: Graph, tolerances: Tolerances = DEFAULT_TOLERANCES) -> "PairAnalysis":
        if G.n < 2:
            raise PreconditionError(f"Audits require n >= 2, got n = {G.n}")
        Gc = complement(G)
        spectrum = laplacian_spectrum(G, tolerances)
        complement_spectrum = laplacian_spectrum(Gc, tolerances)
        return cls(
            graph=G,
            complement_graph=Gc,
            spectrum=spectrum,
            complement_spectrum=complement_spectrum,
            fiedler=algebraic_connectivity(G, tolerances, spectrum),
            complement_fiedler=algebraic_connectivity(Gc, tolerances, complement_spectrum),
            connected=is_connected(G),
            complement_connected=is_connected(Gc),
            tolerances=tolerances,
        )

    @property
    def total(self) -> float:
        return self.fiedler.lambda2 + self.complement_fiedler.lambda2

    def oriented(self):
        """(graph carrying x, x data, y data, swapped)."""
        return orient(self.graph, self.fiedler, self.complement_fiedler)

    def case_data(self) -> CaseData:
        if self._case_data is None:
            self._case_data = build_case_data(self.graph, self.fiedler, self.complement_fiedler)
        return self._case_data


class MinMaxReport(NamedTuple):
    n: int
    count: int
    c_n: float
    witness: Graph


def theorem2_floor(n: int) -> float:
    """1 - 110 n^(-1/3); negative (vacuous) below n = 110^3."""
    if n < 1:
        raise PreconditionError(f"Floor needs n >= 1, got n = {n}")
    return 1.0 - 110.0 / n ** (1.0 / 3.0)


def _equality(analysis: PairAnalysis) -> EqualityWitness:
    flag = abs(analysis.total - 1.0) <= analysis.tolerances.audit
    own = is_join_of_cone_and_disconnected(analysis.graph)
    if own.holds:
        return EqualityWitness(flag, True, "original", own.vertex)
    other = is_join_of_cone_and_disconnected(analysis.complement_graph)
    if other.holds:
        return EqualityWitness(flag, True, "complement", other.vertex)
    return EqualityWitness(flag, False)


def _connected_side_checks(label: str, G: Graph, f: FiedlerData, tol: float) -> List[Check]:
    """Extreme-distance lemma and neighbour bound for one connected side."""
    lemma = lemma_diameter_check(G, fiedler=f)
    checks = []
    if lemma.extreme_distance <= 2:
        checks.append(
            Check.at_least(f"lemma_diameter.{label}", f.lambda2, 1.0, tol, note="extremes within 2")
        )
    else:
        checks.append(Check.not_applicable(f"lemma_diameter.{label}", note="extremes beyond 2"))
    if lemma.diameter < 3:
        name = f"lemma_diameter.{label}.diameter_below_3"
        checks.append(Check.at_least(name, f.lambda2, 1.0, tol))
    else:
        checks.append(Check.not_applicable(f"lemma_diameter.{label}.diameter_below_3"))
    checks.append(Check.at_least(f"neighbor_bound.{label}", neighbor_bound_check(G, f), 0.0, tol))
    return checks


def _step1_checks(x: FiedlerData, y: FiedlerData, tolerances: Tolerances) -> List[Check]:
    tol = tolerances.audit
    chain = step1_bound(x, y, tolerances)
    identity = lemma_identity_check(x.vector, y.vector)
    total = x.lambda2 + y.lambda2
    return [
        Check.at_least("step1.sum_vs_minsum", total, chain.minsum, tol),
        Check.at_least("step1.minsum_vs_weighted", chain.minsum, chain.weighted, tol),
        Check.at_least("step1.weighted_vs_inverse_M", chain.weighted, chain.bound, tol),
        Check.at_least("step1.identity", identity.lhs, identity.rhs, tol),
        Check.at_most("step1.identity_expansion", identity.expansion_error, 0.0, 1e-8),
        Check.at_least("step1.inverse_M_vs_gap", chain.bound, 1.0 / x.gap ** 2, tol),
    ]


def _distance3_checks(
    analysis: PairAnalysis, G: Graph, x: FiedlerData, y: FiedlerData, cd: CaseData
) -> List[Check]:
    tol = analysis.tolerances.audit
    n, s, l = G.n, cd.s, cd.l
    spectrum = analysis.complement_spectrum if cd.swapped else analysis.spectrum
    R = resistance_from_spectrum(G, spectrum, analysis.tolerances)[cd.v1, cd.v2]
    conductance = conductance_lower_bound(s, l)
    eq10 = eq10_bound(n, s, l)
    checks = [
        Check.at_least("eq9.energy_vs_resistance", x.lambda2, cd.gap ** 2 / R, tol),
        Check.at_least("eq9.gap_at_least_one", cd.gap ** 2 / R, 1.0 / R, tol),
        Check.at_least("eq9.conductance", 1.0 / R, conductance, tol, note=f"s = {s}, l = {l}"),
        Check.at_least("eq8", y.lambda2, eq8_bound(n, s, l), tol),
        Check.at_least("eq10", x.lambda2 + y.lambda2, eq10, tol),
    ]
    if s >= 3:
        checks.append(Check.at_least("eq9.s_at_least_three", x.lambda2, 1.0, tol))
    else:
        checks.append(Check.not_applicable("eq9.s_at_least_three", note=f"s = {s}"))
    if case_table_applies(n, s, l):
        checks.append(Check.at_least("case_table.eq10_above_one", eq10, 1.0, tol))
    else:
        checks.append(Check.not_applicable("case_table.eq10_above_one", note="small n"))
    return checks


def audit_theorem1(
    G: Graph,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    analysis: Optional[PairAnalysis] = None,
) -> Certificate:
    """
    Route G through the case analysis and verify each step.

    Args:
        G: Graph with n >= 2
        tolerances: Tolerance set; tolerances.audit is the check slack
        analysis: Precomputed PairAnalysis of G

    Returns:
        Certificate with the case tag, checks, and equality witness

    Raises:
        PreconditionError: If n < 2
    """
    if analysis is None:
        analysis = PairAnalysis.of(G, tolerances)
    tol = analysis.tolerances.audit
    n = G.n
    checks: List[Check] = []
    case_data = None
    deep = None
    orientation = "original"

    if n == 2:
        case = CaseTag.TRIVIAL
    elif not analysis.connected:
        case = CaseTag.DISCONNECTED
        lemma = lemma_disconnected_check(G, analysis.tolerances, analysis.complement_fiedler)
        checks.append(Check.at_least("lemma_disconnected", lemma.lambda_complement, 1.0, tol))
        checks.append(
            Check.holds("lemma_disconnected.equality_structure", lemma.equality == lemma.structural)
        )
    elif not analysis.complement_connected:
        case = CaseTag.COMPLEMENT_DISCONNECTED
        lemma = lemma_disconnected_check(
            analysis.complement_graph, analysis.tolerances, analysis.fiedler
        )
        checks.append(Check.at_least("lemma_disconnected", lemma.lambda_complement, 1.0, tol))
        checks.append(
            Check.holds("lemma_disconnected.equality_structure", lemma.equality == lemma.structural)
        )
    else:
        Gx, x, y, swapped = analysis.oriented()
        Gy = G if swapped else analysis.complement_graph
        orientation = "complement" if swapped else "original"
        checks += _step1_checks(x, y, analysis.tolerances)
        checks += _connected_side_checks("x", Gx, x, tol)
        checks += _connected_side_checks("y", Gy, y, tol)

        d = distance(Gx, x.v1, x.v2)
        if x.gap < 1.0:
            case = CaseTag.STEP1
            checks.append(Check.at_least("step1.sum_above_one", x.lambda2 + y.lambda2, 1.0, tol))
        elif max(x.lambda2, y.lambda2) >= 1.0 - tol:
            case = CaseTag.LAMBDA_AT_LEAST_ONE
            side = "original" if (x.lambda2 >= y.lambda2) != swapped else "complement"
            checks.append(
                Check.at_least(
                    "step2.witness_at_least_one", max(x.lambda2, y.lambda2), 1.0, tol, note=side
                )
            )
        elif d <= 2:
            case = CaseTag.DISTANCE_AT_MOST_2
            checks.append(Check.at_least("step21.lemma_diameter", x.lambda2, 1.0, tol))
        elif d > 3:
            case = CaseTag.DISTANCE_ABOVE_3
            checks.append(Check.holds("step21.complement_diameter_at_most_2", diameter(Gy) <= 2))
            checks.append(Check.at_least("step21.complement_lambda", y.lambda2, 1.0, tol))
        else:
            case = CaseTag.DISTANCE_3
            case_data = analysis.case_data()
            checks += _distance3_checks(analysis, Gx, x, y, case_data)
            deep = deep_check_step22(Gx, y, case_data, analysis.tolerances)

    duality = check_complement_duality(
        G, analysis.tolerances, analysis.spectrum, analysis.complement_spectrum
    )
    oracle_tol = analysis.tolerances.oracle
    checks.append(Check.at_most("spectra.complement_duality", duality, 0.0, oracle_tol))
    checks.append(Check.at_least("theorem1.sum", analysis.total, 1.0, tol))
    equality = _equality(analysis)
    checks.append(
        Check.holds(
            "theorem1.equality_structure",
            equality.consistent,
            note=f"spectral={equality.flag} structural={equality.structural}",
        )
    )

    certificate = Certificate(
        n=n,
        case=case,
        lambda_g=analysis.fiedler.lambda2,
        lambda_complement=analysis.complement_fiedler.lambda2,
        total=analysis.total,
        orientation=orientation,
        checks=checks,
        equality=equality,
        case_data=case_data,
        deep=deep,
    )
    if not certificate.passed:
        names = ", ".join(check.name for check in certificate.failures())
        logger.warning(f"Certificate for n={n} ({case.value}) has failing checks: {names}")
    logger.debug(f"n={n} routed to {case.value}, sum={analysis.total:.12f}")
    return certificate


def audit_theorem2(
    G: Graph,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    analysis: Optional[PairAnalysis] = None,
) -> Theorem2Report:
    """
    Evaluate the max{lambda, lambda-bar} chain.

    In case (both lambdas below 1, gap^2 >= 1/2, extreme distance 3) the checks
    are s <= 5, lambda >= s/6, lambda >= 1 - 2/sqrt(l+1) and
    lambda-bar >= n/(n + 80 + 30l). The floor 1 - 110 n^(-1/3) is checked
    for every graph. Out-of-case graphs get not-applicable markers.
    """
    if analysis is None:
        analysis = PairAnalysis.of(G, tolerances)
    tol = analysis.tolerances.audit
    n = G.n
    floor = theorem2_floor(n)
    max_lambda = max(analysis.fiedler.lambda2, analysis.complement_fiedler.lambda2)
    checks = [Check.at_least("theorem2.floor", max_lambda, floor, tol)]

    reason = ""
    if not (analysis.connected and analysis.complement_connected):
        reason = "disconnected side"
    else:
        Gx, x, y, _ = analysis.oriented()
        if max(x.lambda2, y.lambda2) >= 1.0 - tol:
            reason = "lambda at least one"
        elif x.gap ** 2 < THEOREM2_GAP_SQUARED:
            reason = "gap squared below 1/2"
        elif distance(Gx, x.v1, x.v2) != 3:
            reason = "extreme distance not 3"

    in_case_names = (
        "theorem2.s_at_most_5",
        "theorem2.s_over_six",
        "theorem2.lambda_vs_l",
        "theorem2.complement_vs_l",
    )
    if reason:
        checks += [Check.not_applicable(name, note=reason) for name in in_case_names]
        return Theorem2Report(False, reason, max_lambda, floor, None, None, checks)

    cd = analysis.case_data()
    s, l = cd.s, cd.l
    checks += [
        Check.at_most("theorem2.s_at_most_5", s, THEOREM2_MAX_PATHS, 0.0),
        Check.at_least("theorem2.s_over_six", x.lambda2, s / 6.0, tol),
        Check.at_least("theorem2.lambda_vs_l", x.lambda2, 1.0 - 2.0 / math.sqrt(l + 1), tol),
        Check.at_least("theorem2.complement_vs_l", y.lambda2, n / (n + 80 + 30 * l), tol),
    ]
    return Theorem2Report(True, "", max_lambda, floor, s, l, checks)


def audit_graph(G: Graph, tolerances: Tolerances = DEFAULT_TOLERANCES) -> Certificate:
    """Both audits on one PairAnalysis; the Theorem-2 report is attached."""
    analysis = PairAnalysis.of(G, tolerances)
    certificate = audit_theorem1(G, tolerances, analysis)
    return replace(certificate, theorem2=audit_theorem2(G, tolerances, analysis))


def minmax_report(
    graphs: Iterable[Graph], tolerances: Tolerances = DEFAULT_TOLERANCES
) -> MinMaxReport:
    """
    Empirical c_n = min over the collection of max{lambda(G), lambda(complement G)}.

    Raises:
        PreconditionError: Empty collection or mixed orders
    """
    n = None
    count = 0
    best = math.inf
    witness = None
    for G in graphs:
        if n is None:
            n = G.n
        elif G.n != n:
            raise PreconditionError(f"All graphs must share one order, got {n} and {G.n}")
        analysis = PairAnalysis.of(G, tolerances)
        value = max(analysis.fiedler.lambda2, analysis.complement_fiedler.lambda2)
        count += 1
        if value < best:
            best, witness = value, G
    if n is None or witness is None:
        raise PreconditionError("minmax_report needs at least one graph")
    return MinMaxReport(n, count, best, witness)
