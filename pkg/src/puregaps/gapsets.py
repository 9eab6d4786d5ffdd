"""Pure-gap boxes, the enumeration stream, and exact cardinality formulas.

The pure gaps at n ramified places decompose into disjoint grid cells of side
m.  The cell at the origin of level k is the permutation union of the product
box B_k with bounds a_j = m - ceil(m*(k+j)/r); every other cell of level
k_1 + ... + k_n = k is its translate by (k_1*m, ..., k_n*m).  Counting uses
the recursion

    D_1(a_1) = a_1
    D_n(a) = a_n^n + sum_{i<n} C(n,i) * a_n^(n-i) * D_i(a_1 - a_n, ..., a_i - a_n)

which gives |union over permutations of B| for non-increasing positive bounds
and is checked against explicit set enumeration in the tests.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import permutations, product
from math import comb
from typing import Iterator, Sequence

from .boxes import TupleZ, compositions
from .curves import KummerCurve
from .errors import NOutOfRangeError
from .maximals import lambda_star


@dataclass(frozen=True)
class BkBox:
    """Product box of pure-gap offsets at one level.

    bounds are non-increasing; the box counts as empty past the last level
    that admits pure gaps, even though the bound formula still evaluates.
    """

    level: int
    bounds: tuple[int, ...]
    empty: bool

    @property
    def size(self) -> int:
        if self.empty:
            return 0
        out = 1
        for b in self.bounds:
            out *= max(b, 0)
        return out

    def tuples(self) -> Iterator[TupleZ]:
        """Lex-ordered contents: products of [1, a_j]."""
        if self.empty or any(b < 1 for b in self.bounds):
            return iter(())
        return product(*(range(1, b + 1) for b in self.bounds))


def _require_places(curve: KummerCurve, n: int) -> None:
    if not 2 <= n <= curve.r:
        raise NOutOfRangeError(
            f"need 2 <= n <= r = {curve.r} branch places, got n={n}"
        )


def max_level(curve: KummerCurve, n: int) -> int:
    """Largest level whose cells contain pure gaps; negative means none at all."""
    return curve.r - n - 1 - curve.r // curve.m


def b_k(curve: KummerCurve, n: int, k: int) -> BkBox:
    """The offset box at level k, with bounds m - ceil(m*(k+j)/r) for j = 1..n."""
    _require_places(curve, n)
    if k < 0:
        raise ValueError(f"level must be nonnegative, got {k}")
    m, r = curve.m, curve.r
    bounds = tuple(m - -(-(m * (k + j)) // r) for j in range(1, n + 1))
    return BkBox(level=k, bounds=bounds, empty=k > max_level(curve, n))


def _sigma_union(box: BkBox) -> list[TupleZ]:
    """Union of the box over all coordinate permutations, sorted, no duplicates."""
    return sorted({p for t in box.tuples() for p in permutations(t)})


def g_k_zero(curve: KummerCurve, n: int, k: int) -> list[TupleZ]:
    """The pure gaps in the level-k cell on the first axis: (k*m, 0, ..., 0) + union."""
    m = curve.m
    return [(k * m + t[0],) + t[1:] for t in _sigma_union(b_k(curve, n, k))]


def _shifted(origin: TupleZ, tuples: Sequence[TupleZ]) -> Iterator[TupleZ]:
    for t in tuples:
        yield tuple(o + x for o, x in zip(origin, t))


def pure_gaps(curve: KummerCurve, n: int) -> Iterator[TupleZ]:
    """Lexicographically ordered stream of every pure gap at P_1, ..., P_n.

    Cells are generated one level box at a time and merged lazily, so the full
    set is never materialized here; cells are pairwise disjoint, hence no
    cross-cell deduplication is needed.
    """
    _require_places(curve, n)
    m = curve.m
    streams = []
    for k in range(max_level(curve, n) + 1):
        union = _sigma_union(b_k(curve, n, k))
        if not union:
            continue
        for comp in compositions(k, n):
            streams.append(_shifted(tuple(c * m for c in comp), union))
    return heapq.merge(*streams)


def union_count(bounds: Sequence[int]) -> int:
    """The box permutation-union count, by the exact recursion.

    Evaluates the recursion as written on any integer input (intermediate
    calls can receive non-monotone arguments); counting semantics hold for
    non-increasing positive bounds.
    """
    a = tuple(int(x) for x in bounds)
    n = len(a)
    if n == 0:
        raise ValueError("need at least one bound")
    if n == 1:
        return a[0]
    last = a[-1]
    total = last**n
    for i in range(1, n):
        total += comb(n, i) * last ** (n - i) * union_count(tuple(x - last for x in a[:i]))
    return total


def union_count_bruteforce(bounds: Sequence[int]) -> int:
    """|union over permutations of the box| by explicit set enumeration.

    Independent oracle for union_count; limited to n <= 5 and bounds <= 8 to
    keep the enumeration budget explicit.
    """
    a = tuple(int(x) for x in bounds)
    n = len(a)
    if n < 1:
        raise ValueError("need at least one bound")
    if any(a[i] < a[i + 1] for i in range(n - 1)) or a[-1] < 1:
        raise ValueError(f"bounds must be non-increasing and positive, got {a}")
    if n > 5 or a[0] > 8:
        raise ValueError(f"enumeration budget exceeded for bounds {a} (n <= 5, max 8)")
    box = product(*(range(1, b + 1) for b in a))
    return len({p for t in box for p in permutations(t)})


def pure_gap_count(curve: KummerCurve, n: int) -> int:
    """Exact number of pure gaps at n places, by the level-sum closed form."""
    _require_places(curve, n)
    total = 0
    for k in range(max_level(curve, n) + 1):
        total += comb(k + n - 1, n - 1) * union_count(b_k(curve, n, k).bounds)
    return total


def pure_gap_count_two_places(curve: KummerCurve) -> int:
    """The n = 2 specialization as a single explicit sum over levels."""
    m, r = curve.m, curve.r
    total = 0
    for k in range(1, r - 1 - r // m):
        low = -(-(m * k) // r)
        high = -(-(m * (k + 1)) // r)
        total += k * ((m - low) ** 2 - (high - low) ** 2)
    return total


def pure_gap_count_multiple_plus_one(curve: KummerCurve, n: int, u: int) -> int:
    """Closed-form count for the special shape m = u*r + 1.

    The ceilings collapse, leaving u^n * sum_k C(k+n-1, n-1) (r-k-n) (r-k)^(n-1).
    """
    m, r = curve.m, curve.r
    if u < 1:
        raise ValueError(f"u must be positive, got {u}")
    if m != u * r + 1:
        raise ValueError(f"curve has m={m}, r={r}; the shape m = u*r + 1 needs m = {u * r + 1}")
    _require_places(curve, n)
    total = 0
    for k in range(0, r - n):
        total += comb(k + n - 1, n - 1) * (r - k - n) * (r - k) ** (n - 1)
    return u**n * total


@dataclass(frozen=True)
class Cube:
    """One side-m grid cell of the three-place pure-gap diagram."""

    origin: TupleZ
    side: int
    count: int
    level: int

    def to_json(self) -> dict:
        return {
            "origin": list(self.origin),
            "side": self.side,
            "count": self.count,
            "class": self.level,
        }


@dataclass(frozen=True)
class CubeData:
    """Plot payload: all nonempty cells plus the positive relative maximal points."""

    cubes: tuple[Cube, ...]
    relative_maximals: tuple[TupleZ, ...]

    def to_json(self) -> dict:
        return {
            "cubes": [c.to_json() for c in self.cubes],
            "lambda_star": [list(t) for t in self.relative_maximals],
        }


def plot_data(curve: KummerCurve, n: int = 3) -> CubeData:
    """Cube inventory of the three-place pure-gap set, for external plotting.

    Each cell of level k = k_1 + k_2 + k_3 gets its origin, its side m, and
    its pure-gap count; cube counts across a level share one box count.
    """
    if n != 3:
        raise NOutOfRangeError(f"plot data is defined for n = 3 places, got n={n}")
    _require_places(curve, n)
    m, r = curve.m, curve.r
    cubes = []
    for k in range(max_level(curve, n) + 1):
        count = union_count(b_k(curve, n, k).bounds)
        for comp in compositions(k, n):
            cubes.append(Cube(tuple(c * m for c in comp), m, count, k))
    maximals: tuple[TupleZ, ...] = ()
    if n <= r - r // m:
        maximals = tuple(lambda_star(curve, n))
    return CubeData(tuple(sorted(cubes, key=lambda c: (c.level, c.origin))), maximals)
