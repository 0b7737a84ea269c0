"""Brute-force ground truth for tiny instances.

Everything here recomputes quantities from the definitions: subset
enumeration for graph sensitivity, all-pairs scans for partition metrics,
full function-space sweeps for the sensitivity/degree inequality.  Results
are the reference the fast paths and closed forms must match.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import InvalidInputError, ResourceLimitError
from .functions import (
    FiniteFunction,
    boolean_restriction_witness,
    degree,
    sensitivity,
    verify_sensitivity_bound,
)
from .graph import GraphParams, VertexSet, neighbors, rank, unrank
from .partitions import Partition, PartitionMetrics


@dataclass(frozen=True)
class SearchBudget:
    """Hard limits enforced before any enumeration begins."""

    max_vertices: int = 32
    max_subsets: int = 1_000_000
    max_functions: int = 1_000_000

    def __post_init__(self) -> None:
        if min(self.max_vertices, self.max_subsets, self.max_functions) <= 0:
            raise InvalidInputError("budget limits must be positive")


def _neighbor_ranks(params: GraphParams) -> list[tuple[int, ...]]:
    table = []
    for r in range(params.vertex_count):
        digits = unrank(r, params)
        table.append(tuple(rank(v, params) for v in neighbors(digits, params)))
    return table


def min_max_degree_subsets(
    m: int,
    n: int,
    k: int,
    budget: SearchBudget = SearchBudget(),
    fix_first_vertex: bool = False,
) -> tuple[int, VertexSet]:
    """Exact minimum of the induced maximum degree over all k-subsets, with
    the first optimal subset in enumeration order as witness.

    ``fix_first_vertex`` restricts the search to subsets containing rank 0;
    vertex-transitivity makes the minimum identical (the witness may differ),
    which the test suite verifies against the unpruned search.
    """
    params = GraphParams(m, n)
    count = params.vertex_count
    if count > budget.max_vertices:
        raise ResourceLimitError(f"graph has {count} vertices, budget allows {budget.max_vertices}")
    if not 0 <= k <= count:
        raise InvalidInputError(f"need 0 <= k <= {count}, got k={k}")
    if k == 0:
        return 0, VertexSet(params, frozenset())
    total = (
        math.comb(count - 1, k - 1) if fix_first_vertex else math.comb(count, k)
    )
    if total > budget.max_subsets:
        raise ResourceLimitError(f"{total} subsets exceed the budget {budget.max_subsets}")
    neighbor_table = _neighbor_ranks(params)
    if fix_first_vertex:
        candidates = ((0,) + rest for rest in itertools.combinations(range(1, count), k - 1))
    else:
        candidates = itertools.combinations(range(count), k)
    best = count  # above any possible degree
    witness: tuple[int, ...] = ()
    for subset in candidates:
        members = set(subset)
        subset_max = 0
        for r in subset:
            deg = sum(1 for u in neighbor_table[r] if u in members)
            if deg > subset_max:
                subset_max = deg
                if subset_max >= best:
                    break
        if subset_max < best:
            best = subset_max
            witness = subset
            if best == 0:
                break
    return best, VertexSet(params, frozenset(witness))


def sigma_exact(m: int, n: int, budget: SearchBudget = SearchBudget()) -> int:
    """Graph sensitivity: minimum induced maximum degree over all subsets one
    larger than the independence number m^(n-1)."""
    return min_max_degree_subsets(m, n, m ** (n - 1) + 1, budget=budget)[0]


@dataclass
class FunctionCheckReport:
    """Outcome of sweeping a function space against the sensitivity bound and
    the restriction pipeline."""

    functions_checked: int = 0
    violations: int = 0
    violation_tables: list[tuple[int, ...]] = field(default_factory=list)
    min_ratio: Optional[float] = None
    min_ratio_table: Optional[tuple[int, ...]] = None

    def to_doc(self) -> dict:
        return {
            "functionsChecked": self.functions_checked,
            "violations": self.violations,
            "violationTables": [list(t) for t in self.violation_tables],
            "minRatio": self.min_ratio,
            "minRatioTable": list(self.min_ratio_table)
            if self.min_ratio_table is not None
            else None,
        }


def exhaustive_function_check(
    domain,
    arity: int,
    codomain,
    budget: SearchBudget = SearchBudget(),
    samples: Optional[int] = None,
    seed: Optional[int] = None,
) -> FunctionCheckReport:
    """Sweep all functions domain^arity -> codomain (or a seeded sample) and
    verify the sensitivity bound plus the restriction pipeline guarantees on
    each; any failure counts as a violation.

    Sampling requires an explicit seed; full enumeration must fit the
    function budget.
    """
    domain = tuple(Fraction(v) for v in domain)
    codomain = tuple(Fraction(v) for v in codomain)
    m, k = len(domain), len(codomain)
    point_count = m ** arity
    if point_count > budget.max_vertices:
        raise ResourceLimitError(
            f"grid has {point_count} points, budget allows {budget.max_vertices}"
        )
    total = k ** point_count
    if samples is None:
        if total > budget.max_functions:
            raise ResourceLimitError(
                f"{total} functions exceed the budget {budget.max_functions}; "
                "use sampling with an explicit seed"
            )
        tables = _all_tables(k, point_count)
    else:
        if seed is None:
            raise InvalidInputError("sampling requires an explicit seed")
        if samples <= 0 or samples > budget.max_functions:
            raise InvalidInputError(f"bad sample count {samples}")
        rng = random.Random(seed)
        tables = (
            tuple(rng.randrange(k) for _ in range(point_count)) for _ in range(samples)
        )

    report = FunctionCheckReport()
    best_key: Optional[Fraction] = None
    for table in tables:
        f = FiniteFunction(domain, codomain, arity, table)
        bound = verify_sensitivity_bound(f)
        ok = bound.holds
        if bound.degree >= 1:
            witness = boolean_restriction_witness(f)
            g = witness.boolean_function
            g_sensitivity, _ = sensitivity(g)
            g_degree = degree(g)
            if g_degree < witness.target_support:
                ok = False
            if g_sensitivity > bound.sensitivity:
                ok = False
            if g_sensitivity * g_sensitivity < witness.target_support:
                ok = False  # would contradict the Boolean base case
            ratio_key = Fraction(
                bound.sensitivity * bound.sensitivity * (m - 1), bound.degree
            )
            if best_key is None or ratio_key < best_key:
                best_key = ratio_key
                report.min_ratio = math.sqrt(ratio_key)
                report.min_ratio_table = table
        report.functions_checked += 1
        if not ok:
            report.violations += 1
            if len(report.violation_tables) < 10:
                report.violation_tables.append(table)
    return report


def _all_tables(k: int, length: int):
    return itertools.product(range(k), repeat=length)


def brute_force_metrics(part: Partition, cap: int = 10_000) -> PartitionMetrics:
    """Recompute partition metrics by scanning all vertex pairs; must agree
    with the fast path."""
    params = part.params
    count = params.vertex_count
    if count > cap:
        raise ResourceLimitError(f"{count} vertices exceed the oracle cap {cap}")
    words = [unrank(r, params) for r in range(count)]
    degrees = [0] * count
    for i in range(count):
        for j in range(i + 1, count):
            if part.assignment[i] != part.assignment[j]:
                continue
            differing = 0
            for a, b in zip(words[i], words[j]):
                if a != b:
                    differing += 1
                    if differing > 1:
                        break
            if differing == 1:
                degrees[i] += 1
                degrees[j] += 1
    sizes = [0] * params.m
    for a in part.assignment:
        sizes[a] += 1
    balanced = params.m ** (params.n - 1)
    max_degree = max(degrees)
    witness = words[degrees.index(max_degree)]
    return PartitionMetrics(
        max_degree,
        sum(abs(s - balanced) for s in sizes),
        tuple(sizes),
        witness,
    )
