"""Bound formula evaluators and consistency checks."""

import math
from fractions import Fraction
from io import StringIO

import pytest

from hamlab import (
    BoundNotApplicableError,
    GraphParams,
    InvalidInputError,
    PartitionMetrics,
    SubgraphStats,
    VertexSet,
    cayley_degree_bound,
    consistency_check,
    construction_degree_upper_bound,
    domination_threshold,
    low_degree_subgraph,
    markov_degree_lower_bound,
    subgraph_stats,
    theorem_imbalance_bound,
)
from hamlab.bounds import REPORT_FIELDS
from hamlab.encoding import write_csv, write_records


def test_theorem_bound_cases():
    paper, achieved = theorem_imbalance_bound(3, 2, 4)
    assert paper == 18 and achieved == 18
    paper, achieved = theorem_imbalance_bound(4, 1, 3)
    assert paper == 2 and achieved == 2
    paper, achieved = theorem_imbalance_bound(4, 5, 2)
    assert paper == Fraction(64, 3) and achieved == 16


def test_theorem_bound_rejects_bad_input():
    with pytest.raises(InvalidInputError):
        theorem_imbalance_bound(2, 1, 3)


def test_markov_full_graph_simplifies():
    # size m^n gives eps = (m-1)/m and the bound collapses to 2n/m
    for m, n in [(2, 5), (3, 4), (4, 8)]:
        assert markov_degree_lower_bound(m, n, m ** n) == Fraction(2 * n, m)
    assert markov_degree_lower_bound(2, 5, 2 ** 5) == 5  # Q^n regular degree


def test_markov_direct_example():
    assert markov_degree_lower_bound(4, 8, 2 * 4 ** 7) == Fraction(8, 3)


def test_markov_not_applicable_at_balanced_size():
    with pytest.raises(BoundNotApplicableError):
        markov_degree_lower_bound(3, 3, 9)


def test_markov_monotone_in_size():
    previous = Fraction(0)
    for size in range(28, 82):
        value = markov_degree_lower_bound(3, 4, size)
        assert value > previous
        previous = value


def test_construction_upper_bound():
    assert construction_degree_upper_bound(3, 9, Fraction(1, 9)) == pytest.approx(4.5, abs=1e-9)
    assert construction_degree_upper_bound(3, 7, Fraction(1, 3)) == 7
    with pytest.raises(InvalidInputError):
        construction_degree_upper_bound(3, 5, Fraction(3, 4))  # above (m-1)/m
    with pytest.raises(InvalidInputError):
        construction_degree_upper_bound(3, 5, Fraction(0))


def test_cayley_bound_values():
    assert cayley_degree_bound(3, 8) == pytest.approx(math.sqrt(8), abs=1e-9)
    assert cayley_degree_bound(5, 10) == pytest.approx(math.sqrt(20), abs=1e-9)
    assert cayley_degree_bound(3, 2) == pytest.approx(math.sqrt(2), abs=1e-9)


def test_domination_thresholds():
    assert domination_threshold(2, 3) == (6, 3)
    assert domination_threshold(3, 2) == (6, 4)
    assert domination_threshold(5, 1) == (4, 4)


def _brute_force_domination_number(m, n):
    from hamlab.graph import hamming_distance, iter_vertices
    import itertools

    vertices = list(iter_vertices(GraphParams(m, n)))
    count = len(vertices)
    for size in range(1, count + 1):
        for subset in itertools.combinations(range(count), size):
            if all(
                any(
                    i == j or hamming_distance(vertices[i], vertices[j]) == 1
                    for j in subset
                )
                for i in range(count)
            ):
                return size
    return count


@pytest.mark.parametrize("m,n,gamma", [(2, 3, 2), (3, 2, 3), (4, 1, 1)])
def test_domination_threshold_consistent_with_true_domination_number(m, n, gamma):
    assert _brute_force_domination_number(m, n) == gamma
    threshold, implied = domination_threshold(m, n)
    # any set larger than |V| - gamma forces the full degree; the formula's
    # threshold must never fall below that sound value, and is tight here
    assert threshold >= m ** n - gamma
    assert threshold == m ** n - gamma
    assert implied == (m - 1) * n


def test_consistency_check_subgraph_pass():
    vset = low_degree_subgraph(4, 3, 1)
    stats = subgraph_stats(vset)
    assert stats.size == 17
    reports = consistency_check(stats)
    markov = [r for r in reports if r.bound == "markov"]
    assert len(markov) == 1
    assert markov[0].value == Fraction(2, 17)
    assert all(r.satisfied for r in reports)


def test_consistency_check_full_vertex_set():
    params = GraphParams(3, 2)
    everything = VertexSet(params, frozenset(range(9)))
    reports = consistency_check(subgraph_stats(everything))
    assert {r.bound for r in reports} == {"markov", "cayley", "domination"}
    assert all(r.satisfied for r in reports)


def test_consistency_check_flags_understated_degree():
    # a corrupted record claiming degree 0 for the full graph must fail
    corrupted = SubgraphStats(3, 2, 9, 0)
    reports = consistency_check(corrupted)
    assert any(r.satisfied is False for r in reports)
    assert any(r.verdict == "FAIL" for r in reports)


def test_consistency_check_partition_metrics():
    metrics = PartitionMetrics(1, 2, (16, 17, 16, 15), (0, 0, 0))
    reports = consistency_check(metrics, m=4, n=3)
    assert reports[0].bound == "partition-total" and reports[0].satisfied
    assert all(r.satisfied for r in reports)
    with pytest.raises(InvalidInputError):
        consistency_check(metrics)


def test_report_emission_formats():
    stats = SubgraphStats(3, 2, 9, 4)
    rows = [r.to_record() for r in consistency_check(stats)]
    records = StringIO()
    write_records(rows, records)
    assert len(records.getvalue().strip().splitlines()) == len(rows)
    csv_out = StringIO()
    write_csv(rows, REPORT_FIELDS, csv_out)
    header = csv_out.getvalue().splitlines()[0]
    assert header == "bound,m,n,d_or_eps,value,measured,verdict"
