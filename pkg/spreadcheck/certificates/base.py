"""
Value records produced by the audits.

A Certificate is the per-graph output: which branch of the case analysis the
graph fell into, the spectral quantities, the combinatorial case data where it
exists, and every checked inequality with its slack. All records serialize to
plain dicts through to_dict().
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from ..graphs.core import Graph


class CheckStatus(Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not-applicable"


class CaseTag(Enum):
    """Branch of the lambda(G) + lambda(complement G) >= 1 case analysis."""
    TRIVIAL = "Trivial-n2"
    DISCONNECTED = "Disconnected"
    COMPLEMENT_DISCONNECTED = "ComplementDisconnected"
    STEP1 = "Step1-GapBelowOne"
    LAMBDA_AT_LEAST_ONE = "LambdaAtLeastOne"
    DISTANCE_AT_MOST_2 = "DistanceAtMost2"
    DISTANCE_ABOVE_3 = "DistanceAbove3"
    DISTANCE_3 = "Distance3"


@dataclass(frozen=True)
class Check:
    """
    One verified inequality "measured >= bound".

    Attributes:
        name: Dotted identifier, e.g. 'eq9.conductance'
        bound: Right-hand side
        measured: Left-hand side
        slack: measured - bound
        status: pass / fail / not-applicable
        note: Free-form context (which side, which vertex, ...)
    """
    name: str
    bound: float
    measured: float
    slack: float
    status: CheckStatus
    note: str = ""

    @classmethod
    def at_least(
        cls, name: str, measured: float, bound: float, tol: float, note: str = ""
    ) -> "Check":
        """measured >= bound, passing when the slack is at least -tol."""
        slack = measured - bound
        status = CheckStatus.PASS if slack >= -tol else CheckStatus.FAIL
        return cls(name, float(bound), float(measured), float(slack), status, note)

    @classmethod
    def at_most(
        cls, name: str, measured: float, bound: float, tol: float, note: str = ""
    ) -> "Check":
        """measured <= bound; slack is bound - measured."""
        slack = bound - measured
        status = CheckStatus.PASS if slack >= -tol else CheckStatus.FAIL
        return cls(name, float(bound), float(measured), float(slack), status, note)

    @classmethod
    def holds(cls, name: str, condition: bool, note: str = "") -> "Check":
        """Structural (true/false) check, encoded as measured in {0, 1} against bound 1."""
        measured = 1.0 if condition else 0.0
        status = CheckStatus.PASS if condition else CheckStatus.FAIL
        return cls(name, 1.0, measured, measured - 1.0, status, note)

    @classmethod
    def not_applicable(cls, name: str, note: str = "") -> "Check":
        return cls(name, math.nan, math.nan, math.nan, CheckStatus.NOT_APPLICABLE, note)

    @property
    def failed(self) -> bool:
        return self.status is CheckStatus.FAIL

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "bound": self.bound,
            "measured": self.measured,
            "slack": self.slack,
            "status": self.status.value,
            "note": self.note,
        }


@dataclass(frozen=True)
class CaseData:
    """
    Combinatorial state of the distance-3 branch.

    Vertex sets refer to the oriented graph: the input graph, or its complement
    when the complement's Fiedler vector has the larger spread (swapped=True).
    S2 holds the path vertices adjacent to v1, S1 those adjacent to v2.
    """
    graph: Graph = field(repr=False, compare=False)
    swapped: bool
    v1: int
    v2: int
    gap: float
    distance: int
    s: int
    matching: Tuple[Tuple[int, int], ...]
    S1: Tuple[int, ...]
    S2: Tuple[int, ...]
    A: Tuple[int, ...]
    B: Tuple[int, ...]
    C: Tuple[int, ...]
    l: int
    relabelled: bool = False

    @property
    def a(self) -> int:
        return len(self.A)

    @property
    def b(self) -> int:
        return len(self.B)

    @property
    def c(self) -> int:
        return len(self.C)

    @property
    def S(self) -> Tuple[int, ...]:
        return tuple(sorted(self.S1 + self.S2 + (self.v1, self.v2)))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "oriented_graph": "complement" if self.swapped else "original",
            "extreme_pair": [self.v1, self.v2],
            "gap": self.gap,
            "distance": self.distance,
            "s": self.s,
            "l": self.l,
            "matching": [list(pair) for pair in self.matching],
            "partition_sizes": {
                "A": self.a,
                "B": self.b,
                "C": self.c,
                "S1": len(self.S1),
                "S2": len(self.S2),
            },
            "partition": {
                "A": list(self.A),
                "B": list(self.B),
                "C": list(self.C),
                "S1": list(self.S1),
                "S2": list(self.S2),
            },
        }


@dataclass(frozen=True)
class StarSubgraph:
    """A star of the complement used in the distance-3 aggregate."""
    name: str
    center: int
    leaves: Tuple[int, ...]
    coefficient: int
    edge_energy: float
    lambda2: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "center": self.center,
            "leaves": list(self.leaves),
            "coefficient": self.coefficient,
            "edge_energy": self.edge_energy,
            "lambda2": self.lambda2,
        }


@dataclass(frozen=True)
class DeepCheckReport:
    """
    Inequality-by-inequality evaluation of the complement bound in the
    distance-3 branch.

    Attributes:
        stars: H1, H2, H3
        pair_family: Pairs (i < j) of X, i.e. all pairs except A x B, S1 x S2,
            S1 x A and S2 x B
        A_sets: For each v in S1, its G-neighbours in A
        B_sets: For each v in S2, its G-neighbours in B
        M: max over pairs of max{(x_i - x_j)^2, (y_i - y_j)^2}
        checks: Evaluated inequalities
    """
    stars: Tuple[StarSubgraph, ...]
    pair_family: Tuple[Tuple[int, int], ...]
    A_sets: Dict[int, Tuple[int, ...]]
    B_sets: Dict[int, Tuple[int, ...]]
    M: float
    checks: List[Check]

    @property
    def passed(self) -> bool:
        return not any(check.failed for check in self.checks)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "stars": [star.to_dict() for star in self.stars],
            "pair_family_size": len(self.pair_family),
            "A_sets": {str(v): list(vs) for v, vs in self.A_sets.items()},
            "B_sets": {str(v): list(vs) for v, vs in self.B_sets.items()},
            "M": self.M,
            "checks": [check.to_dict() for check in self.checks],
        }


@dataclass(frozen=True)
class EqualityWitness:
    """
    Spectral equality flag next to the structural characterization.

    Attributes:
        flag: |sum - 1| <= tol
        structural: G or its complement is K1 joined to a disconnected graph
        side: 'original' or 'complement' when structural holds
        vertex: The dominating vertex of that side
    """
    flag: bool
    structural: bool
    side: Optional[str] = None
    vertex: Optional[int] = None

    @property
    def consistent(self) -> bool:
        return self.flag == self.structural

    def to_dict(self) -> Dict[str, Any]:
        return {
            "flag": self.flag,
            "structural": self.structural,
            "witness": None if self.side is None else {"side": self.side, "vertex": self.vertex},
        }


@dataclass(frozen=True)
class Theorem2Report:
    """
    max{lambda, lambda-bar} audit.

    Attributes:
        in_case: Both lambdas below 1, gap^2 >= 1/2 and extreme distance 3
        reason: Why the graph is out of case (empty when in case)
        max_lambda: max{lambda(G), lambda(complement G)}
        floor: 1 - 110 n^(-1/3), usually vacuous
        s: Path count when in case
        l: Gadget parameter when in case
        checks: Evaluated inequalities
    """
    in_case: bool
    reason: str
    max_lambda: float
    floor: float
    s: Optional[int]
    l: Optional[int]
    checks: List[Check]

    @property
    def passed(self) -> bool:
        return not any(check.failed for check in self.checks)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "in_case": self.in_case,
            "reason": self.reason,
            "max_lambda": self.max_lambda,
            "floor": self.floor,
            "s": self.s,
            "l": self.l,
            "checks": [check.to_dict() for check in self.checks],
        }


@dataclass(frozen=True)
class Certificate:
    """
    Per-graph audit result.

    Attributes:
        n: Order
        case: Branch the graph was routed to
        lambda_g: lambda_2(G)
        lambda_complement: lambda_2(complement G)
        total: lambda_g + lambda_complement
        orientation: 'original' or 'complement' (graph carrying the larger Fiedler gap)
        checks: Evaluated inequalities, in routing order
        equality: Equality flag and structural witness
        case_data: Distance-3 partition data
        deep: Inequality-level report of the complement bound
        theorem2: max{lambda, lambda-bar} audit, when requested
    """
    n: int
    case: CaseTag
    lambda_g: float
    lambda_complement: float
    total: float
    orientation: str
    checks: List[Check]
    equality: EqualityWitness
    case_data: Optional[CaseData] = None
    deep: Optional[DeepCheckReport] = None
    theorem2: Optional[Theorem2Report] = None

    @property
    def max_lambda(self) -> float:
        return max(self.lambda_g, self.lambda_complement)

    def all_checks(self) -> List[Check]:
        checks = list(self.checks)
        if self.deep is not None:
            checks += self.deep.checks
        if self.theorem2 is not None:
            checks += self.theorem2.checks
        return checks

    def failures(self) -> List[Check]:
        return [check for check in self.all_checks() if check.failed]

    @property
    def passed(self) -> bool:
        return not self.failures()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "case": self.case.value,
            "lambda": self.lambda_g,
            "lambda_complement": self.lambda_complement,
            "sum": self.total,
            "orientation": self.orientation,
            "case_data": None if self.case_data is None else self.case_data.to_dict(),
            "checks": [check.to_dict() for check in self.checks],
            "deep": None if self.deep is None else self.deep.to_dict(),
            "theorem2": None if self.theorem2 is None else self.theorem2.to_dict(),
            "equality": self.equality.to_dict(),
        }
