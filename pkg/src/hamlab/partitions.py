"""Constructions of imbalanced low-degree partitions of Hamming graphs.

A partition assigns every vertex of the graph on (m, n) to one of m parts
(parts may be empty).  Its maximum degree is the largest induced degree over
the parts, and its imbalance is the total absolute deviation of the part
sizes from the balanced size m^(n-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import (
    DEFAULT_VERTEX_CAP,
    ContractViolationError,
    InvalidInputError,
    check_enumeration,
)
from .graph import Digits, GraphParams, VertexSet, iter_vertices


@dataclass(frozen=True)
class Partition:
    """Total assignment of every rank to a part index in 0..m-1."""

    params: GraphParams
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "assignment", tuple(self.assignment))
        if len(self.assignment) != self.params.vertex_count:
            raise InvalidInputError(
                f"assignment length {len(self.assignment)} != vertex count "
                f"{self.params.vertex_count}"
            )
        for a in self.assignment:
            if not 0 <= a < self.params.m:
                raise InvalidInputError(f"part index {a} outside 0..{self.params.m - 1}")

    def to_doc(self) -> dict:
        return {"m": self.params.m, "n": self.params.n, "assignment": list(self.assignment)}

    @classmethod
    def from_doc(cls, doc: dict) -> "Partition":
        try:
            params = GraphParams(int(doc["m"]), int(doc["n"]))
            assignment = tuple(int(a) for a in doc["assignment"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInputError(f"malformed partition document: {exc}") from exc
        return cls(params, assignment)


@dataclass(frozen=True)
class PartitionMetrics:
    """Exact maximum degree, imbalance, and part sizes of a partition."""

    max_degree: int
    imbalance: int
    part_sizes: tuple[int, ...]
    witness: Optional[Digits] = None

    def to_doc(self) -> dict:
        return {
            "maxDegree": self.max_degree,
            "imbalance": self.imbalance,
            "partSizes": list(self.part_sizes),
            "witness": list(self.witness) if self.witness is not None else None,
        }


def _trailing_decomposition(digits: Digits) -> Optional[tuple[int, int, int]]:
    """Split a nonzero word as prefix-sum, last nonzero digit, trailing-zero
    count; None for the all-zeros word."""
    i = len(digits) - 1
    while i >= 0 and digits[i] == 0:
        i -= 1
    if i < 0:
        return None
    return sum(digits[:i]), digits[i], len(digits) - 1 - i


def degree_one_part_index(digits: Digits, m: int) -> int:
    """Part index of a vertex under the degree-1 construction."""
    decomp = _trailing_decomposition(digits)
    if decomp is None:
        return 0
    prefix_sum, last_nonzero, _ = decomp
    return (prefix_sum + (last_nonzero + 1) // 2) % m


def degree_one_partition(m: int, n: int, cap: int = DEFAULT_VERTEX_CAP) -> Partition:
    """Partition with maximum degree at most 1 and imbalance exactly m-2 for
    even m, m-1 for odd m.

    Every nonzero vertex decomposes uniquely as a prefix, its last nonzero
    digit b, and a run of trailing zeros; it joins the part congruent to
    (sum of prefix) + floor((b+1)/2) mod m.  The all-zeros vertex joins part 0.
    For n = 1 the construction degenerates to the complete-graph partition
    with per-part size cap 2.
    """
    if m < 2:
        raise InvalidInputError(f"need m >= 2, got {m}")
    if n < 1:
        raise InvalidInputError(f"need n >= 1, got {n}")
    if n == 1:
        return complete_graph_partition(m, 1)
    params = GraphParams(m, n)
    check_enumeration(params.vertex_count, cap)
    assignment = tuple(degree_one_part_index(v, m) for v in iter_vertices(params))
    return Partition(params, assignment)


def complete_graph_partition(m: int, d: int) -> Partition:
    """Partition of the m-vertex complete graph into blocks of size at most
    d+1: full blocks first, then the remainder block, then empty parts.

    Achieves maximum degree at most d and imbalance exactly 2*floor(d*m/(d+1)).
    """
    if not 0 <= d <= m:
        raise InvalidInputError(f"need 0 <= d <= m, got d={d}, m={m}")
    params = GraphParams(m, 1)
    assignment = tuple(v // (d + 1) for v in range(m))
    return Partition(params, assignment)


def coordinate_blocks(n: int, pieces: int) -> list[range]:
    """Split coordinates 0..n-1 into contiguous blocks of near-equal size,
    larger blocks first."""
    if not 1 <= pieces <= n:
        raise InvalidInputError(f"need 1 <= pieces <= n, got pieces={pieces}, n={n}")
    q, s = divmod(n, pieces)
    blocks = []
    start = 0
    for j in range(pieces):
        width = q + 1 if j < s else q
        blocks.append(range(start, start + width))
        start += width
    return blocks


def block_sum_map(params_hi: GraphParams, params_lo: GraphParams) -> list[int]:
    """For each rank of the larger graph, the rank of its image under the
    coordinate-block summation map (block sums reduced mod m)."""
    m = params_hi.m
    blocks = coordinate_blocks(params_hi.n, params_lo.n)
    block_of = [0] * params_hi.n
    for j, blk in enumerate(blocks):
        for i in blk:
            block_of[i] = j
    image = []
    for digits in iter_vertices(params_hi):
        sums = [0] * params_lo.n
        for i, d in enumerate(digits):
            sums[block_of[i]] += d
        r = 0
        for s in sums:
            r = r * m + s % m
        image.append(r)
    return image


def lift_partition(
    base: Partition, n: int, degree_cap: int, cap: int = DEFAULT_VERTEX_CAP
) -> Partition:
    """Pull a partition back through the coordinate-block summation map.

    Every fiber of the map has size m^(n-n'), so the imbalance scales by
    exactly that factor, and the maximum degree grows by at most the largest
    block width ceil(n/n').  Raises if that worst case would exceed
    ``degree_cap``.
    """
    m = base.params.m
    n_base = base.params.n
    if n < n_base:
        raise InvalidInputError(f"cannot lift from n'={n_base} to smaller n={n}")
    target = GraphParams(m, n)
    check_enumeration(target.vertex_count, cap)
    widest = -(-n // n_base)
    base_degree = partition_metrics(base, cap=cap).max_degree
    if base_degree * widest > degree_cap:
        raise ContractViolationError(
            f"lift would only guarantee degree {base_degree * widest}, "
            f"above the cap {degree_cap}"
        )
    image = block_sum_map(target, base.params)
    assignment = tuple(base.assignment[r] for r in image)
    return Partition(target, assignment)


def theorem_partition(
    m: int, d: int, n: int, cap: int = DEFAULT_VERTEX_CAP
) -> tuple[Partition, int]:
    """Partition with maximum degree at most d and the largest imbalance the
    lifted constructions achieve.

    For d < n, lifts the degree-1 construction on ceil(n/d) coordinates and
    achieves (m-2 or m-1, by parity) * m^floor(n(d-1)/d) exactly.  For d >= n,
    lifts a complete-graph partition and achieves
    m^(n-1) * 2*floor(m*floor(d/n) / (floor(d/n)+1)) exactly.  Returns the
    partition together with the achieved imbalance.
    """
    if m < 3:
        raise InvalidInputError(f"need m >= 3, got {m}")
    if d < 1 or n < 1:
        raise InvalidInputError(f"need d >= 1 and n >= 1, got d={d}, n={n}")
    if d < n:
        base = degree_one_partition(m, -(-n // d), cap=cap)
        lifted = lift_partition(base, n, degree_cap=d, cap=cap)
        parity_term = m - 2 if m % 2 == 0 else m - 1
        achieved = parity_term * m ** (n - base.params.n)
    else:
        q = d // n
        # the complete-graph lemma needs its degree parameter <= m; beyond
        # that the single-part layout is already optimal for this family
        base = complete_graph_partition(m, min(q, m))
        lifted = lift_partition(base, n, degree_cap=d, cap=cap)
        achieved = m ** (n - 1) * 2 * (m * q // (q + 1))
    return lifted, achieved


def partition_metrics(part: Partition, cap: int = DEFAULT_VERTEX_CAP) -> PartitionMetrics:
    """Exact maximum degree, imbalance, and part sizes, with a witness vertex
    attaining the maximum degree (first such vertex in rank order)."""
    params = part.params
    check_enumeration(params.vertex_count, cap)
    m, n = params.m, params.n
    places = params.place_values()
    sizes = [0] * m
    for a in part.assignment:
        sizes[a] += 1
    best = -1
    witness: Optional[Digits] = None
    for r, digits in enumerate(iter_vertices(params)):
        own = part.assignment[r]
        deg = 0
        for i in range(n):
            base = r - digits[i] * places[i]
            for b in range(m):
                if b != digits[i] and part.assignment[base + b * places[i]] == own:
                    deg += 1
        if deg > best:
            best = deg
            witness = digits
    balanced = m ** (n - 1)
    imbalance = sum(abs(s - balanced) for s in sizes)
    return PartitionMetrics(best, imbalance, tuple(sizes), witness)


def part_vertex_set(part: Partition, index: int) -> VertexSet:
    """The vertex set of one part."""
    if not 0 <= index < part.params.m:
        raise InvalidInputError(f"part index {index} outside 0..{part.params.m - 1}")
    ranks = frozenset(r for r, a in enumerate(part.assignment) if a == index)
    return VertexSet(part.params, ranks)


def low_degree_subgraph(m: int, n: int, d: int, cap: int = DEFAULT_VERTEX_CAP) -> VertexSet:
    """Large vertex set inducing a subgraph of maximum degree at most d.

    For d < n the lift of the largest degree-1 part, of size
    m^(n-1) + m^floor((d-1)n/d); for d >= n the lift of one full block of the
    complete-graph partition, of size ceil((d+1)/n) * m^(n-1).
    """
    if m < 3:
        raise InvalidInputError(f"need m >= 3, got {m}")
    if not 1 <= d <= (m - 1) * n:
        raise InvalidInputError(f"need 1 <= d <= (m-1)n = {(m - 1) * n}, got d={d}")
    if d < n:
        base = degree_one_partition(m, -(-n // d), cap=cap)
        part_index = 1
    else:
        base = complete_graph_partition(m, d // n)
        part_index = 0
    lifted = lift_partition(base, n, degree_cap=d, cap=cap)
    return part_vertex_set(lifted, part_index)
