"""Exact degree and sensitivity of functions on finite grids.

A function maps length-``arity`` words over a finite rational alphabet into a
finite rational range.  Its degree is the total degree of the unique
interpolating polynomial with per-variable degree below the alphabet size;
its sensitivity counts value changes across Hamming-distance-1 neighbors.
The restriction pipeline shrinks every coordinate domain to two values while
preserving a monomial on at least ceil(degree/(m-1)) coordinates, producing a
Boolean function that certifies the sensitivity/degree inequality.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Optional, Sequence

from .encoding import rational_from_token, rational_to_token
from .errors import (
    DEFAULT_VERTEX_CAP,
    ContractViolationError,
    InvalidInputError,
    check_enumeration,
)

Point = tuple[Fraction, ...]
Exponents = tuple[int, ...]


def _as_rationals(values) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(v) for v in values)
    except (TypeError, ValueError) as exc:
        raise InvalidInputError(f"expected rational values: {exc}") from exc


@dataclass(frozen=True)
class FiniteFunction:
    """Value table of a function on words over a finite rational alphabet.

    ``domain`` is the per-coordinate value set (the function's full domain is
    its ``arity``-fold product) and ``codomain`` lists the possible outputs.
    ``values[i]`` is the codomain index of the output at the point of rank i,
    where points are ranked big-endian by per-coordinate domain index.
    """

    domain: tuple[Fraction, ...]
    codomain: tuple[Fraction, ...]
    arity: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        domain = _as_rationals(self.domain)
        codomain = _as_rationals(self.codomain)
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "codomain", codomain)
        object.__setattr__(self, "values", tuple(self.values))
        if self.arity < 1:
            raise InvalidInputError(f"need arity >= 1, got {self.arity}")
        if not domain or len(set(domain)) != len(domain):
            raise InvalidInputError("domain values must be nonempty and pairwise distinct")
        if not codomain or len(set(codomain)) != len(codomain):
            raise InvalidInputError("codomain values must be nonempty and pairwise distinct")
        if len(self.values) != len(domain) ** self.arity:
            raise InvalidInputError(
                f"value table length {len(self.values)} != "
                f"{len(domain)}^{self.arity}"
            )
        for v in self.values:
            if not 0 <= v < len(codomain):
                raise InvalidInputError(f"value index {v} outside the codomain")

    @property
    def point_count(self) -> int:
        return len(self.domain) ** self.arity

    def points(self) -> Iterator[Point]:
        """All domain points in rank order."""
        return itertools.product(self.domain, repeat=self.arity)

    def point_rank(self, point: Sequence) -> int:
        index_of = {v: i for i, v in enumerate(self.domain)}
        r = 0
        for x in point:
            try:
                r = r * len(self.domain) + index_of[Fraction(x)]
            except (KeyError, TypeError, ValueError):
                raise InvalidInputError(f"point coordinate {x!r} outside the domain")
        if len(point) != self.arity:
            raise InvalidInputError(f"point has {len(point)} coordinates, expected {self.arity}")
        return r

    def value_at(self, point: Sequence) -> Fraction:
        return self.codomain[self.values[self.point_rank(point)]]

    def is_constant(self) -> bool:
        return len(set(self.values)) <= 1

    @classmethod
    def from_callable(
        cls,
        domain,
        arity: int,
        fn: Callable[..., object],
        codomain=None,
    ) -> "FiniteFunction":
        """Tabulate a callable; the codomain defaults to the sorted distinct
        outputs."""
        domain = _as_rationals(domain)
        outputs = [Fraction(fn(*point)) for point in itertools.product(domain, repeat=arity)]
        if codomain is None:
            codomain = tuple(sorted(set(outputs)))
        else:
            codomain = _as_rationals(codomain)
        index_of = {v: i for i, v in enumerate(codomain)}
        try:
            values = tuple(index_of[v] for v in outputs)
        except KeyError as exc:
            raise InvalidInputError(f"output {exc.args[0]} outside the codomain") from exc
        return cls(domain, codomain, arity, values)

    def to_doc(self) -> dict:
        return {
            "A": [rational_to_token(v) for v in self.domain],
            "B": [rational_to_token(v) for v in self.codomain],
            "n": self.arity,
            "values": list(self.values),
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "FiniteFunction":
        try:
            domain = tuple(rational_from_token(v) for v in doc["A"])
            codomain = tuple(rational_from_token(v) for v in doc["B"])
            arity = int(doc["n"])
            values = tuple(int(v) for v in doc["values"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInputError(f"malformed function document: {exc}") from exc
        return cls(domain, codomain, arity, values)


@dataclass(frozen=True)
class GridPolynomial:
    """Multivariate polynomial with exact rational coefficients, stored as a
    map from exponent vectors to nonzero coefficients."""

    arity: int
    terms: dict[Exponents, Fraction]

    def __post_init__(self) -> None:
        cleaned = {}
        for exps, coeff in self.terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.arity or any(e < 0 for e in exps):
                raise InvalidInputError(f"bad exponent vector {exps}")
            coeff = Fraction(coeff)
            if coeff:
                cleaned[exps] = coeff
        object.__setattr__(self, "terms", cleaned)

    def degree(self) -> int:
        """Total degree; 0 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=0)

    def max_support(self) -> int:
        """Largest number of variables appearing in a single monomial."""
        return max((sum(1 for e in exps if e) for exps in self.terms), default=0)

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.arity:
            raise InvalidInputError(f"point has {len(point)} coordinates, expected {self.arity}")
        xs = _as_rationals(point)
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for x, e in zip(xs, exps):
                if e:
                    term *= x ** e
            total += term
        return total

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]))

    def to_doc(self) -> list[dict]:
        return [
            {"exponents": list(exps), "coefficient": rational_to_token(coeff)}
            for exps, coeff in self.sorted_terms()
        ]

    @classmethod
    def from_doc(cls, doc: list, arity: Optional[int] = None) -> "GridPolynomial":
        terms = {}
        for entry in doc:
            try:
                exps = tuple(int(e) for e in entry["exponents"])
                coeff = rational_from_token(entry["coefficient"])
            except (KeyError, TypeError, ValueError) as exc:
                raise InvalidInputError(f"malformed polynomial document: {exc}") from exc
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
        if arity is None:
            if not terms:
                raise InvalidInputError("cannot infer arity of an empty polynomial document")
            arity = len(next(iter(terms)))
        return cls(arity, terms)


def _poly_mul_linear(coeffs: list[Fraction], root: Fraction) -> list[Fraction]:
    # multiply a coefficient list (ascending powers) by (x - root)
    out = [Fraction(0)] * (len(coeffs) + 1)
    for i, c in enumerate(coeffs):
        out[i] -= c * root
        out[i + 1] += c
    return out


def _lagrange_matrix(nodes: Sequence[Fraction]) -> list[list[Fraction]]:
    """Rows indexed by power, columns by node: column i holds the coefficients
    of the basis polynomial that is 1 at node i and 0 at the others."""
    size = len(nodes)
    columns = []
    for i, node in enumerate(nodes):
        num = [Fraction(1)]
        denom = Fraction(1)
        for j, other in enumerate(nodes):
            if j != i:
                num = _poly_mul_linear(num, other)
                denom *= node - other
        columns.append([c / denom for c in num])
    return [[columns[i][k] for i in range(size)] for k in range(size)]


def _grid_terms(
    values: Sequence[Fraction], axes: Sequence[Sequence[Fraction]]
) -> dict[Exponents, Fraction]:
    """Coefficients of the unique polynomial matching ``values`` on the
    product grid of the per-axis node lists, with per-axis degree below the
    axis length.  Values are laid out big-endian over the axes."""
    sizes = [len(a) for a in axes]
    tensor = [Fraction(v) for v in values]
    total = len(tensor)
    matrices: dict[tuple[Fraction, ...], list[list[Fraction]]] = {}
    stride = total
    for nodes in axes:
        size = len(nodes)
        stride //= size
        key = tuple(nodes)
        matrix = matrices.get(key)
        if matrix is None:
            matrix = _lagrange_matrix(list(nodes))
            matrices[key] = matrix
        block = stride * size
        for start in range(0, total, block):
            for offset in range(stride):
                base = start + offset
                column = [tensor[base + t * stride] for t in range(size)]
                for k in range(size):
                    row = matrix[k]
                    acc = Fraction(0)
                    for t in range(size):
                        if column[t]:
                            acc += row[t] * column[t]
                    tensor[base + k * stride] = acc
    terms = {}
    for flat, exps in enumerate(itertools.product(*(range(s) for s in sizes))):
        if tensor[flat]:
            terms[exps] = tensor[flat]
    return terms


def interpolate(f: FiniteFunction, cap: int = DEFAULT_VERTEX_CAP) -> GridPolynomial:
    """The unique polynomial agreeing with f on every grid point, with
    per-variable degree at most len(domain)-1 and exact rational
    coefficients."""
    check_enumeration(f.point_count, cap, "grid points")
    values = [f.codomain[v] for v in f.values]
    return GridPolynomial(f.arity, _grid_terms(values, [f.domain] * f.arity))


def degree(f: FiniteFunction, cap: int = DEFAULT_VERTEX_CAP) -> int:
    """Total degree of the interpolating polynomial; 0 for constants."""
    return interpolate(f, cap=cap).degree()


def local_sensitivity(f: FiniteFunction, point: Sequence) -> int:
    """Number of Hamming-distance-1 neighbors on which f takes a different
    value."""
    m = len(f.domain)
    base_rank = f.point_rank(point)
    own = f.values[base_rank]
    strides = [m ** (f.arity - 1 - j) for j in range(f.arity)]
    index_of = {v: i for i, v in enumerate(f.domain)}
    idxs = [index_of[Fraction(x)] for x in point]
    count = 0
    for j in range(f.arity):
        start = base_rank - idxs[j] * strides[j]
        for t in range(m):
            if t != idxs[j] and f.values[start + t * strides[j]] != own:
                count += 1
    return count


def sensitivity(f: FiniteFunction, cap: int = DEFAULT_VERTEX_CAP) -> tuple[int, Point]:
    """Maximum local sensitivity and the first point (in rank order)
    attaining it."""
    check_enumeration(f.point_count, cap, "grid points")
    m = len(f.domain)
    strides = [m ** (f.arity - 1 - j) for j in range(f.arity)]
    best = -1
    witness: tuple[int, ...] = ()
    for flat, idxs in enumerate(itertools.product(range(m), repeat=f.arity)):
        own = f.values[flat]
        count = 0
        for j in range(f.arity):
            start = flat - idxs[j] * strides[j]
            for t in range(m):
                if t != idxs[j] and f.values[start + t * strides[j]] != own:
                    count += 1
        if count > best:
            best = count
            witness = idxs
    return best, tuple(f.domain[i] for i in witness)


def indicator_decomposition(f: FiniteFunction) -> list[FiniteFunction]:
    """The 0/1 indicator of each output value, in codomain order.

    The indicators sum to 1 pointwise, their codomain-weighted sum recovers f,
    and the largest indicator degree is at least deg(f).
    """
    zero_one = (Fraction(0), Fraction(1))
    return [
        FiniteFunction(
            f.domain, zero_one, f.arity,
            tuple(1 if v == b else 0 for v in f.values),
        )
        for b in range(len(f.codomain))
    ]


@dataclass(frozen=True)
class RestrictionWitness:
    """Certificate that a two-values-per-coordinate restriction of f keeps a
    monomial on at least ``target_support`` coordinates.

    ``boolean_function`` is the restricted function with every retained pair
    relabeled to {0, 1} in index order; its degree is at least
    ``target_support`` and its sensitivity is at most the sensitivity of f.
    """

    range_value: Fraction
    retained_pairs: tuple[tuple[Fraction, Fraction], ...]
    target_support: int
    boolean_function: FiniteFunction

    def to_doc(self) -> dict:
        return {
            "rangeValue": rational_to_token(self.range_value),
            "pairs": [
                [rational_to_token(a), rational_to_token(b)]
                for a, b in self.retained_pairs
            ],
            "targetSupport": self.target_support,
            "g": self.boolean_function.to_doc(),
        }


def _restrict_axis(
    values: list[Fraction], sizes: list[int], axis: int, keep: tuple[int, int]
) -> list[Fraction]:
    # keep the sub-table where the axis takes the given domain indices
    stride = 1
    for s in sizes[axis + 1:]:
        stride *= s
    block = stride * sizes[axis]
    out: list[Fraction] = []
    for start in range(0, len(values), block):
        for t in keep:
            lo = start + t * stride
            out.extend(values[lo:lo + stride])
    return out


def _max_support(terms: dict[Exponents, Fraction]) -> int:
    return max((sum(1 for e in exps if e) for exps in terms), default=0)


def boolean_restriction_witness(
    f: FiniteFunction, cap: int = DEFAULT_VERTEX_CAP
) -> RestrictionWitness:
    """Reduce f to a Boolean function while certifying a degree floor.

    Picks the output value whose indicator has the largest degree, sets the
    support target D = ceil(deg(f)/(m-1)), then walks the coordinates in
    order: for each coordinate still carrying more than two values, the
    lexicographically first pair of domain values whose restriction keeps a
    monomial on at least D coordinates is retained.  Such a pair always
    exists; running out of pairs would contradict the degree/support
    invariant and raises a contract violation.
    """
    m = len(f.domain)
    if m < 2:
        raise InvalidInputError("need at least two domain values to restrict")
    total_degree = degree(f, cap=cap)
    if total_degree < 1:
        raise InvalidInputError("constant functions admit no restriction certificate")
    components = indicator_decomposition(f)
    component_degrees = [degree(c, cap=cap) for c in components]
    pick = max(range(len(components)), key=lambda i: component_degrees[i])
    target = -(-total_degree // (m - 1))

    values = [components[pick].codomain[v] for v in components[pick].values]
    axes: list[list[Fraction]] = [list(f.domain) for _ in range(f.arity)]
    sizes = [m] * f.arity
    if _max_support(_grid_terms(values, axes)) < target:
        raise ContractViolationError(
            "chosen indicator exposes no monomial on the target support"
        )

    retained: list[tuple[Fraction, Fraction]] = []
    for coord in range(f.arity):
        if sizes[coord] <= 2:
            retained.append((axes[coord][0], axes[coord][1]))
            continue
        found = False
        for s, t in itertools.combinations(range(sizes[coord]), 2):
            candidate_values = _restrict_axis(values, sizes, coord, (s, t))
            candidate_axes = (
                axes[:coord] + [[axes[coord][s], axes[coord][t]]] + axes[coord + 1:]
            )
            if _max_support(_grid_terms(candidate_values, candidate_axes)) >= target:
                values = candidate_values
                axes = candidate_axes
                sizes[coord] = 2
                retained.append((axes[coord][0], axes[coord][1]))
                found = True
                break
        if not found:
            raise ContractViolationError(
                f"no two-value restriction of coordinate {coord} preserves "
                f"support {target}"
            )

    zero_one = (Fraction(0), Fraction(1))
    table = tuple(int(v) for v in values)
    boolean = FiniteFunction(zero_one, zero_one, f.arity, table)
    return RestrictionWitness(
        f.codomain[pick], tuple(retained), target, boolean
    )


@dataclass(frozen=True)
class SensitivityBoundReport:
    """Both sides of the sensitivity/degree inequality for one function."""

    sensitivity: int
    degree: int
    alphabet_size: int
    holds: bool
    ratio: Optional[float]
    witness: Point

    def to_doc(self) -> dict:
        return {
            "sensitivity": self.sensitivity,
            "degree": self.degree,
            "alphabetSize": self.alphabet_size,
            "holds": self.holds,
            "ratio": self.ratio,
            "witness": [rational_to_token(x) for x in self.witness],
        }


def verify_sensitivity_bound(
    f: FiniteFunction, cap: int = DEFAULT_VERTEX_CAP
) -> SensitivityBoundReport:
    """Check s(f)^2 * (m-1) >= deg(f) in exact integers and report the ratio
    of s(f) to the degree-based floor."""
    s, witness = sensitivity(f, cap=cap)
    d = degree(f, cap=cap)
    m = len(f.domain)
    holds = s * s * (m - 1) >= d
    ratio = None if d == 0 else math.sqrt(s * s * (m - 1) / d)
    return SensitivityBoundReport(s, d, m, holds, ratio, witness)


def tribes(tribe_count: int) -> FiniteFunction:
    """Boolean OR of ``tribe_count`` disjoint ANDs over consecutive blocks of
    ``tribe_count`` bits, with every input outside the first block
    complemented so the all-ones point carries the maximum local sensitivity.

    Degree tribe_count^2, sensitivity tribe_count.
    """
    if tribe_count < 1:
        raise InvalidInputError(f"need at least one tribe, got {tribe_count}")
    width = tribe_count * tribe_count
    table = []
    for bits in itertools.product((0, 1), repeat=width):
        hit = False
        for block in range(tribe_count):
            lo = block * tribe_count
            chunk = bits[lo:lo + tribe_count]
            if block:
                chunk = tuple(1 - b for b in chunk)
            if all(chunk):
                hit = True
                break
        table.append(1 if hit else 0)
    zero_one = (Fraction(0), Fraction(1))
    return FiniteFunction(zero_one, zero_one, width, tuple(table))


def lifted_tribes(
    domain, marked, tribe_count: int, cap: int = DEFAULT_VERTEX_CAP
) -> FiniteFunction:
    """Compose the tribes function with per-coordinate indicators of one
    marked alphabet value.

    For alphabet size m the result has degree (m-1)*tribe_count^2 and
    sensitivity (m-1)*tribe_count, meeting s = sqrt((m-1)*deg).
    """
    dom = _as_rationals(domain)
    if len(set(dom)) != len(dom) or len(dom) < 2:
        raise InvalidInputError("domain must hold at least two distinct values")
    marked = Fraction(marked)
    if marked not in dom:
        raise InvalidInputError(f"marked value {marked} outside the domain")
    base = tribes(tribe_count)
    width = base.arity
    check_enumeration(len(dom) ** width, cap, "grid points")
    flags = [1 if v == marked else 0 for v in dom]
    table = []
    for idxs in itertools.product(range(len(dom)), repeat=width):
        r = 0
        for i in idxs:
            r = (r << 1) | flags[i]
        table.append(base.values[r])
    return FiniteFunction(dom, (Fraction(0), Fraction(1)), width, tuple(table))
