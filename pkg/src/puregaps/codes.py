"""Differential AG-code parameter design from pure-gap boxes.

A level-k cell of pure gaps with offsets a in B_k yields the one-point-per-
place divisor

    G = sum_j (2*k_j*m + a_j + m - 1 - ceil(m*(k+j)/r)) * P_j,

whose code has dimension given by the genus-degree count and a minimum
distance floor improved by the width of the pure-gap box between a and the
box bounds.  Only parameters are designed here: no generator matrices, no
field arithmetic, no encoding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .curves import KummerCurve
from .errors import DegreeWindowError
from .gapsets import b_k


@dataclass(frozen=True)
class CodeSpec:
    """Inputs of one design: curve, places used, cell, offsets, and code length.

    partition splits the level k across the n places; a must lie in the level
    box B_k.  length is the number of rational points used as evaluation
    places (all rational points minus the n code places).
    """

    curve: KummerCurve
    n: int
    k: int
    partition: tuple[int, ...]
    a: tuple[int, ...]
    length: int

    def __post_init__(self):
        if len(self.partition) != self.n or len(self.a) != self.n:
            raise ValueError("partition and a must both have one entry per place")
        if any(p < 0 for p in self.partition):
            raise ValueError("partition entries must be nonnegative")
        if sum(self.partition) != self.k:
            raise ValueError(f"partition {self.partition} does not sum to k={self.k}")
        box = b_k(self.curve, self.n, self.k)
        if box.empty:
            raise ValueError(f"level k={self.k} has no pure gaps on this curve")
        if any(not 1 <= ai <= bi for ai, bi in zip(self.a, box.bounds)):
            raise ValueError(f"offsets {self.a} leave the level box with bounds {box.bounds}")


@dataclass(frozen=True)
class CodeParams:
    """Designed parameters [N, k, d>=d_lb] of a differential AG code.

    rate_sum is the exact rational (k + d_lb) / N; clamped marks specs whose
    raw distance bound was nonpositive and got floored at 1.
    """

    length: int
    dimension: int
    distance_lb: int
    degree: int
    rate_sum: Fraction
    clamped: bool = False


def _params(length: int, dimension: int, distance_lb: int, degree: int) -> CodeParams:
    clamped = distance_lb < 1
    d = max(distance_lb, 1)
    return CodeParams(length, dimension, d, degree, Fraction(dimension + d, length), clamped)


def _check_window(degree: int, genus: int, length: int) -> None:
    if degree <= 2 * genus - 2:
        raise DegreeWindowError(
            f"deg(G) = {degree} must exceed 2g-2 = {2 * genus - 2}", degree, "lower"
        )
    if degree >= length:
        raise DegreeWindowError(
            f"deg(G) = {degree} must stay below N = {length}", degree, "upper"
        )


def goppa_params(length: int, degree: int, genus: int) -> tuple[int, int]:
    """Baseline dimension and distance floor: (N - deg(G) - 1 + g, deg(G) - (2g-2))."""
    _check_window(degree, genus, length)
    return length - degree - 1 + genus, degree - (2 * genus - 2)


def carvalho_torres_bound(
    genus: int, degree: int, n: int, alpha: Sequence[int], beta: Sequence[int]
) -> int:
    """Distance floor from a componentwise interval of pure gaps.

    Requires alpha <= beta componentwise and every tuple between them to be a
    pure gap (the caller certifies the box property); the floor is
    deg(G) - (2g-2) + n + sum(beta_i - alpha_i).
    """
    if len(alpha) != n or len(beta) != n:
        raise ValueError("alpha and beta must have one entry per place")
    if any(a > b for a, b in zip(alpha, beta)):
        raise ValueError(f"need alpha <= beta componentwise, got {tuple(alpha)} and {tuple(beta)}")
    return degree - (2 * genus - 2) + n + sum(b - a for a, b in zip(alpha, beta))


def design_code(spec: CodeSpec) -> CodeParams:
    """Parameters of the differential code built on the spec's pure-gap cell."""
    curve, n, k = spec.curve, spec.n, spec.k
    m, r, g = curve.m, curve.r, curve.genus
    ceils = [-(-(m * (k + j)) // r) for j in range(1, n + 1)]
    degree = sum(
        2 * kj * m + aj + m - 1 - cj for kj, aj, cj in zip(spec.partition, spec.a, ceils)
    )
    _check_window(degree, g, spec.length)
    dimension = spec.length + n - 2 * k * m - n * m - 1 + g - sum(spec.a) + sum(ceils)
    distance = 2 * k * m + 2 * n * m - m * r + m + r + 1 - 2 * sum(ceils)
    return _params(spec.length, dimension, distance, degree)


def shorten(params: CodeParams, s: int) -> CodeParams:
    """The [N-s, k-s, d] code obtained by shortening s coordinates."""
    if s < 0:
        raise ValueError("can only shorten by a nonnegative number of coordinates")
    if s >= params.dimension:
        raise ValueError(f"cannot shorten {s} coordinates out of dimension {params.dimension}")
    return CodeParams(
        params.length - s,
        params.dimension - s,
        params.distance_lb,
        params.degree,
        Fraction(params.dimension - s + params.distance_lb, params.length - s),
        params.clamped,
    )


def hermitian_subcover_points(q: int, m: int) -> int:
    """Rational points of y^m = x^q + x over the degree-two extension field.

    The curve is maximal there; requires m to divide q + 1.
    """
    if m < 2 or q < 2:
        raise ValueError("need q >= 2 and m >= 2")
    if (q + 1) % m != 0:
        raise ValueError(f"m = {m} must divide q + 1 = {q + 1}")
    return q + 1 + m * (q * q - q)


def norm_trace_like_points(q: int, t: int, m: int) -> int:
    """Rational points of y^m = (x^(q^(t/2)) - x)^(q^(t/2) - 1) over the field with q^t elements."""
    if t < 2 or t % 2 != 0:
        raise ValueError(f"t must be a positive even integer, got {t}")
    if (q**t - 1) % m != 0:
        raise ValueError(f"m = {m} must divide q^t - 1 = {q**t - 1}")
    root = q ** (t // 2)
    if gcd(m, root - 1) != 1:
        raise ValueError(f"m = {m} must be coprime to q^(t/2) - 1 = {root - 1}")
    return (q**t - root) * m + root + 1


@dataclass(frozen=True)
class TableRowSpec:
    """One family instance and cell choice, expanded into one row per offset sum."""

    family: str  # "hermitian-subcover" | "norm-trace-like"
    q: int
    m: int
    n: int
    k: int
    a_values: tuple[int, ...]
    t: int | None = None

    def curve(self) -> KummerCurve:
        if self.family == "hermitian-subcover":
            return KummerCurve(self.m, self.q)
        if self.family == "norm-trace-like":
            root = self.q ** (self.t // 2)
            return KummerCurve(self.m, root, root - 1)
        raise ValueError(f"unknown family {self.family!r}")

    def points(self) -> int:
        if self.family == "hermitian-subcover":
            return hermitian_subcover_points(self.q, self.m)
        return norm_trace_like_points(self.q, self.t, self.m)


HERMITIAN_SUBCOVER_ROWS = (
    TableRowSpec("hermitian-subcover", 7, 4, 2, 3, (2,)),
    TableRowSpec("hermitian-subcover", 8, 3, 2, 3, (2,)),
    TableRowSpec("hermitian-subcover", 9, 5, 2, 5, (2,)),
    TableRowSpec("hermitian-subcover", 9, 5, 3, 4, (3, 4)),
)

NORM_TRACE_LIKE_ROWS = (
    TableRowSpec("norm-trace-like", 2, 3, 2, 3, (2,), t=6),
    TableRowSpec("norm-trace-like", 2, 9, 2, 5, (2, 3), t=6),
    TableRowSpec("norm-trace-like", 2, 9, 3, 4, (3, 4, 5), t=6),
    TableRowSpec("norm-trace-like", 3, 5, 3, 4, (3, 4), t=4),
)


def _offsets_with_sum(curve: KummerCurve, n: int, k: int, target: int) -> tuple[int, ...]:
    for a in b_k(curve, n, k).tuples():
        if sum(a) == target:
            return a
    raise ValueError(f"no offset vector in the level-{k} box sums to {target}")


def generate_tables(row_specs: Iterable[TableRowSpec]) -> list[dict]:
    """Expand row specs into concrete parameter rows, one per offset sum."""
    rows = []
    for spec in row_specs:
        curve = spec.curve()
        length = spec.points() - spec.n
        partition = (spec.k,) + (0,) * (spec.n - 1)
        for a_sum in spec.a_values:
            a = _offsets_with_sum(curve, spec.n, spec.k, a_sum)
            params = design_code(CodeSpec(curve, spec.n, spec.k, partition, a, length))
            rows.append(
                {
                    "family": spec.family,
                    "q": spec.q,
                    "t": spec.t,
                    "m": spec.m,
                    "n": spec.n,
                    "k": spec.k,
                    "a": a_sum,
                    "N": params.length,
                    "kdim": params.dimension,
                    "dlb": params.distance_lb,
                    "degG": params.degree,
                    "ratesum": str(params.rate_sum),
                }
            )
    return rows
