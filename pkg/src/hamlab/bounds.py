"""Evaluators for every degree/imbalance bound formula, plus consistency
checks of measured constructions against them.

Rational-valued bounds are computed exactly.  Irrational bounds (square
roots, logarithms) are floats with absolute error well under 1e-9 and are
compared conservatively: a lower bound is rounded down by that slack before
comparing against a measured degree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .encoding import value_token
from .errors import BoundNotApplicableError, DEFAULT_VERTEX_CAP, InvalidInputError
from .graph import VertexSet, induced_max_degree
from .partitions import PartitionMetrics

FLOAT_SLACK = 1e-9

BoundValue = Union[Fraction, int, float]

REPORT_FIELDS = ("bound", "m", "n", "d_or_eps", "value", "measured", "verdict")


@dataclass(frozen=True)
class BoundsReport:
    """One evaluated bound, optionally checked against a measured quantity."""

    bound: str
    m: int
    n: int
    d_or_eps: str
    value: BoundValue
    measured: Optional[int] = None
    satisfied: Optional[bool] = None

    @property
    def verdict(self) -> str:
        if self.satisfied is None:
            return "NA"
        return "PASS" if self.satisfied else "FAIL"

    def to_record(self) -> dict:
        return {
            "bound": self.bound,
            "m": self.m,
            "n": self.n,
            "d_or_eps": self.d_or_eps,
            "value": value_token(self.value),
            "measured": self.measured,
            "verdict": self.verdict,
        }


def theorem_imbalance_bound(m: int, d: int, n: int) -> tuple[Fraction, int]:
    """The closed-form imbalance the main partition theorem promises for
    (m, d, n), alongside the value the construction actually achieves.

    The two coincide for d < n.  For d >= n the closed form
    2 m^n q/(q+1) with q = floor(d/n) exceeds the construction whenever q+1
    does not divide m; callers flag (not fail) that gap.
    """
    if m < 3:
        raise InvalidInputError(f"need m >= 3, got {m}")
    if d < 1 or n < 1:
        raise InvalidInputError(f"need d >= 1 and n >= 1, got d={d}, n={n}")
    if d < n:
        parity_term = m - 2 if m % 2 == 0 else m - 1
        value = parity_term * m ** (n * (d - 1) // d)
        return Fraction(value), value
    q = d // n
    paper = Fraction(2 * m ** n * q, q + 1)
    achieved = m ** (n - 1) * 2 * (m * q // (q + 1))
    return paper, achieved


def markov_degree_lower_bound(m: int, n: int, subgraph_size: int) -> Fraction:
    """Exact lower bound on the maximum degree of any induced subgraph of the
    given size, from the supersaturation / averaging argument.

    With eps = size/m^n - 1/m the bound is 2*eps*n / ((m-1)(1/m + eps));
    applicable only when the size exceeds the balanced size m^(n-1).
    """
    if m < 2 or n < 1:
        raise InvalidInputError(f"need m >= 2 and n >= 1, got m={m}, n={n}")
    if not 0 <= subgraph_size <= m ** n:
        raise InvalidInputError(f"size {subgraph_size} outside 0..{m ** n}")
    eps = Fraction(subgraph_size, m ** n) - Fraction(1, m)
    if eps <= 0:
        raise BoundNotApplicableError(
            f"size {subgraph_size} does not exceed the balanced size {m ** (n - 1)}"
        )
    return 2 * eps * n / ((m - 1) * (Fraction(1, m) + eps))


def construction_degree_upper_bound(m: int, n: int, eps: Fraction) -> BoundValue:
    """Upper bound on the achievable maximum degree of a subgraph on at least
    (1/m + eps) m^n vertices: n / log_m(1/eps) below eps = 1/m, ceil(eps*m)*n
    from there up to (m-1)/m."""
    if m < 3 or n < 1:
        raise InvalidInputError(f"need m >= 3 and n >= 1, got m={m}, n={n}")
    eps = Fraction(eps)
    if not 0 < eps <= Fraction(m - 1, m):
        raise InvalidInputError(f"need 0 < eps <= (m-1)/m, got {eps}")
    if eps < Fraction(1, m):
        return n / math.log(1 / float(eps), m)
    return math.ceil(eps * m) * n


def cayley_degree_bound(m: int, n: int) -> float:
    """Lower bound sqrt((m-1) n / 2) on the maximum degree of any induced
    subgraph on more than half of the vertices."""
    if m < 3 or n < 1:
        raise InvalidInputError(f"need m >= 3 and n >= 1, got m={m}, n={n}")
    return math.sqrt((m - 1) * n / 2)


def domination_threshold(m: int, n: int) -> tuple[Fraction, int]:
    """Size threshold above which an induced subgraph must attain the full
    degree (m-1)*n, from covering-code domination numbers.

    For n = 1 the m^(n-1)/(n-1) term is undefined and only the second term
    applies.
    """
    if m < 2 or n < 1:
        raise InvalidInputError(f"need m >= 2 and n >= 1, got m={m}, n={n}")
    second = Fraction(m ** n, (m - 1) * n + 1)
    if n == 1:
        gamma_bound = second
    else:
        gamma_bound = max(Fraction(m ** (n - 1), n - 1), second)
    return m ** n - gamma_bound, (m - 1) * n


@dataclass(frozen=True)
class SubgraphStats:
    """Measured size and induced maximum degree of one vertex set."""

    m: int
    n: int
    size: int
    max_degree: int


def subgraph_stats(vset: VertexSet, cap: int = DEFAULT_VERTEX_CAP) -> SubgraphStats:
    return SubgraphStats(
        vset.params.m, vset.params.n, vset.size, induced_max_degree(vset, cap=cap)
    )


def _check_one(m: int, n: int, size: int, measured_degree: int) -> list[BoundsReport]:
    reports = []
    if size > m ** (n - 1):
        value = markov_degree_lower_bound(m, n, size)
        reports.append(
            BoundsReport(
                "markov", m, n, f"size={size}", value, measured_degree,
                Fraction(measured_degree) >= value,
            )
        )
    if m >= 3 and 2 * size > m ** n:
        value = cayley_degree_bound(m, n)
        reports.append(
            BoundsReport(
                "cayley", m, n, f"size={size}", value, measured_degree,
                measured_degree >= value - FLOAT_SLACK,
            )
        )
    threshold, implied = domination_threshold(m, n)
    if size > threshold:
        reports.append(
            BoundsReport(
                "domination", m, n, f"size={size}", implied, measured_degree,
                measured_degree >= implied,
            )
        )
    return reports


def consistency_check(
    measured: Union[SubgraphStats, PartitionMetrics],
    m: Optional[int] = None,
    n: Optional[int] = None,
) -> list[BoundsReport]:
    """Check every applicable lower bound against a measured degree.

    Accepts the stats of a single vertex set, or partition metrics (with the
    graph parameters supplied); for a partition, each part must respect every
    bound applicable at its size, using the partition-wide maximum degree.
    Failures come back as report entries, never as exceptions.
    """
    if isinstance(measured, SubgraphStats):
        return _check_one(measured.m, measured.n, measured.size, measured.max_degree)
    if isinstance(measured, PartitionMetrics):
        if m is None or n is None:
            raise InvalidInputError("partition metrics need explicit m and n")
        reports = [
            BoundsReport(
                "partition-total", m, n, f"parts={len(measured.part_sizes)}",
                m ** n, sum(measured.part_sizes), sum(measured.part_sizes) == m ** n,
            )
        ]
        for size in measured.part_sizes:
            reports.extend(_check_one(m, n, size, measured.max_degree))
        return reports
    raise InvalidInputError(f"cannot check object of type {type(measured).__name__}")
