"""Hamming graph core: vertex encoding, adjacency, induced-subgraph degree.

The Hamming graph on parameters (m, n) has vertex set {0..m-1}^n with edges
between words that differ in exactly one coordinate.  Vertices are identified
with their big-endian mixed-radix rank, so rank((2,3,0)) = 2*16 + 3*4 + 0 = 44
for m=4, n=3; all file formats rely on this encoding.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import DEFAULT_VERTEX_CAP, InvalidInputError, check_enumeration

Digits = tuple[int, ...]


@dataclass(frozen=True)
class GraphParams:
    """Alphabet size m and word length n of a Hamming graph."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise InvalidInputError(f"need m >= 1 and n >= 1, got m={self.m}, n={self.n}")

    @property
    def vertex_count(self) -> int:
        return self.m ** self.n

    @property
    def regular_degree(self) -> int:
        return (self.m - 1) * self.n

    def place_values(self) -> tuple[int, ...]:
        # leftmost digit most significant
        return tuple(self.m ** (self.n - 1 - i) for i in range(self.n))


def validate_vertex(digits: Digits, params: GraphParams) -> None:
    if len(digits) != params.n:
        raise InvalidInputError(f"vertex has {len(digits)} digits, expected {params.n}")
    for d in digits:
        if not 0 <= d < params.m:
            raise InvalidInputError(f"digit {d} outside the alphabet 0..{params.m - 1}")


def rank(digits: Digits, params: GraphParams) -> int:
    """Big-endian mixed-radix rank of a vertex."""
    validate_vertex(digits, params)
    value = 0
    for d in digits:
        value = value * params.m + d
    return value


def unrank(value: int, params: GraphParams) -> Digits:
    """Inverse of :func:`rank`."""
    if not 0 <= value < params.vertex_count:
        raise InvalidInputError(f"rank {value} outside 0..{params.vertex_count - 1}")
    digits = [0] * params.n
    for i in range(params.n - 1, -1, -1):
        value, digits[i] = divmod(value, params.m)
    return tuple(digits)


def iter_vertices(params: GraphParams) -> Iterator[Digits]:
    """All vertices in rank order."""
    return itertools.product(range(params.m), repeat=params.n)


def neighbors(digits: Digits, params: GraphParams) -> Iterator[Digits]:
    """The (m-1)*n vertices at Hamming distance 1, coordinate-major then value
    ascending."""
    validate_vertex(digits, params)
    for i in range(params.n):
        for b in range(params.m):
            if b != digits[i]:
                yield digits[:i] + (b,) + digits[i + 1:]


def hamming_distance(x: Digits, y: Digits) -> int:
    """Number of coordinates where two equal-length words differ."""
    if len(x) != len(y):
        raise InvalidInputError(f"length mismatch: {len(x)} vs {len(y)}")
    return sum(1 for a, b in zip(x, y) if a != b)


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices of a Hamming graph, carried as a rank set."""

    params: GraphParams
    ranks: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "ranks", frozenset(self.ranks))
        count = self.params.vertex_count
        for r in self.ranks:
            if not 0 <= r < count:
                raise InvalidInputError(f"member rank {r} outside 0..{count - 1}")

    @property
    def size(self) -> int:
        return len(self.ranks)

    def __contains__(self, r: int) -> bool:
        return r in self.ranks

    def to_doc(self) -> dict:
        return {"m": self.params.m, "n": self.params.n, "ranks": sorted(self.ranks)}

    @classmethod
    def from_doc(cls, doc: dict) -> "VertexSet":
        try:
            params = GraphParams(int(doc["m"]), int(doc["n"]))
            ranks = frozenset(int(r) for r in doc["ranks"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInputError(f"malformed vertex-set document: {exc}") from exc
        return cls(params, ranks)


def induced_max_degree(vset: VertexSet, cap: int = DEFAULT_VERTEX_CAP) -> int:
    """Maximum number of in-set neighbors over the members of the set.

    0 for empty or singleton sets.
    """
    params = vset.params
    check_enumeration(params.vertex_count, cap)
    if vset.size <= 1:
        return 0
    places = params.place_values()
    best = 0
    for r in sorted(vset.ranks):
        digits = unrank(r, params)
        deg = 0
        for i in range(params.n):
            base = r - digits[i] * places[i]
            for b in range(params.m):
                if b != digits[i] and base + b * places[i] in vset.ranks:
                    deg += 1
        if deg > best:
            best = deg
    return best


def independence_number(params: GraphParams) -> int:
    """Size of a largest independent set: m^(n-1).

    Closed form; cross-validated against exhaustive search in the test suite
    for tiny instances.
    """
    return params.m ** (params.n - 1)
