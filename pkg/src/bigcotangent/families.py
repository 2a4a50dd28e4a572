"""Explicit families of canonical surfaces and their closed-form thresholds.

Three constructions are covered:

* degree-d hypersurfaces in P^3 carrying ell points of type A_k;
* n-cyclic covers of P^2 branched along a nodal union of smooth curves,
  whose nodes lift to A_{n-1} points;
* the n = d special case, which is again a degree-d hypersurface.

Literature node counts (Chmutov's table, Segre's lower bound) are kept as
plain data so the thresholds can be compared against them.
"""

from __future__ import annotations

import bisect
import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .chern_core import (
    ADESingularity,
    DomainError,
    SingularityProfile,
    SurfaceRecord,
    evaluate_criterion,
)

__all__ = [
    "EXCLUDED_PAIRS",
    "CHMUTOV_TABLE",
    "CyclicCoverSpec",
    "HypersurfaceAk",
    "NodeRecord",
    "NodeSource",
    "UnsupportedError",
    "ak_least_count",
    "ak_threshold",
    "branch_node_count",
    "chmutov_mu",
    "chmutov_records",
    "cyclic_cover_chern",
    "hypersurface_chern",
    "least_positive_count",
    "line_cover_criterion",
    "line_cover_exceptions",
    "make_branched_cover_nd",
    "make_cyclic_cover",
    "make_hypersurface_ak",
    "make_line_cover",
    "ram_cover_test",
    "segre_node_bound",
    "segre_record",
    "small_n_criterion",
]

# (d, n) for which the cyclic cover is not of general type
EXCLUDED_PAIRS = frozenset({(2, 2), (4, 2), (6, 2), (3, 3), (4, 4)})

CHMUTOV_TABLE = {13: 732, 14: 949, 15: 1155, 16: 1450, 17: 1728, 18: 2097, 19: 2457}


class UnsupportedError(DomainError):
    """The requested value is not available (e.g. outside a tabulated range)."""


def _require_int(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an integer, got {type(value).__name__}")


# -- hypersurfaces with A_k points -----------------------------------------


def hypersurface_chern(d: int) -> tuple[Fraction, Fraction]:
    """(c1^2, c2) of the minimal resolution of a canonical degree-d surface in P^3."""
    _require_int("d", d)
    if d < 5:
        raise DomainError(f"degree d={d} < 5 is not of general type")
    return Fraction(d * (d - 4) ** 2), Fraction(d * (d * d - 4 * d + 6))


@dataclass(frozen=True)
class HypersurfaceAk:
    d: int
    k: int
    ell: int

    def __post_init__(self) -> None:
        for name in ("d", "k", "ell"):
            _require_int(name, getattr(self, name))
        if self.d < 5:
            raise DomainError(f"degree d={self.d} < 5 is not of general type")
        if self.k < 1:
            raise DomainError(f"A_k requires k >= 1, got k={self.k}")
        if self.ell < 0:
            raise DomainError(f"point count ell={self.ell} is negative")


def make_hypersurface_ak(spec: HypersurfaceAk) -> SurfaceRecord:
    c1_sq, c2 = hypersurface_chern(spec.d)
    profile = SingularityProfile.single(ADESingularity("A", spec.k), spec.ell)
    return SurfaceRecord(f"hypersurface d={spec.d} A_{spec.k} x {spec.ell}", c1_sq, c2, profile)


def ak_threshold(d: int, k: int) -> Fraction:
    """Count of A_k points above which a degree-d hypersurface is certified.

    The criterion is positive iff ell exceeds 4(k+1)(2d^2-5d) / (k(k+2)).
    """
    _require_int("d", d)
    _require_int("k", k)
    if d < 5:
        raise DomainError(f"degree d={d} < 5 is not of general type")
    if k < 1:
        raise DomainError(f"A_k requires k >= 1, got k={k}")
    return Fraction(4 * (k + 1) * (2 * d * d - 5 * d), k * (k + 2))


def ak_least_count(d: int, k: int) -> int:
    """Least integer ell strictly above :func:`ak_threshold`."""
    return math.floor(ak_threshold(d, k)) + 1


def least_positive_count(d: int, k: int) -> int:
    """Least ell giving a positive criterion, found by bisection on the pipeline.

    Works directly on :func:`evaluate_criterion` and never consults the
    closed-form threshold; the criterion is strictly increasing in ell.
    """

    def positive(ell: int) -> bool:
        return evaluate_criterion(make_hypersurface_ak(HypersurfaceAk(d, k, ell))).is_big

    hi = 1
    while not positive(hi):
        hi *= 2
    return bisect.bisect_left(range(hi + 1), True, key=positive)


# -- node-count records ------------------------------------------------------


class NodeSource(str, enum.Enum):
    CHMUTOV = "CHMUTOV"
    SEGRE_BOUND = "SEGRE_BOUND"


@dataclass(frozen=True)
class NodeRecord:
    d: int
    count: int
    source: NodeSource

    def __post_init__(self) -> None:
        if self.count <= 0:
            raise DomainError(f"node count must be positive, got {self.count}")


def chmutov_mu(d: int) -> int:
    """Number of nodes on Chmutov's degree-d surfaces, for 13 <= d <= 19 only."""
    try:
        return CHMUTOV_TABLE[d]
    except KeyError:
        raise UnsupportedError(f"no tabulated Chmutov node count for d={d} (range 13..19)") from None


def chmutov_records() -> list[NodeRecord]:
    return [NodeRecord(d, mu, NodeSource.CHMUTOV) for d, mu in sorted(CHMUTOV_TABLE.items())]


def segre_node_bound(d: int) -> Fraction:
    """Segre's lower bound d^2(d-1)/4 on attainable node counts."""
    _require_int("d", d)
    if d < 1:
        raise DomainError(f"degree must be positive, got d={d}")
    return Fraction(d * d * (d - 1), 4)


def segre_record(d: int) -> NodeRecord:
    return NodeRecord(d, math.ceil(segre_node_bound(d)), NodeSource.SEGRE_BOUND)


# -- cyclic covers of the plane ---------------------------------------------


def _check_cover_pair(d: int, n: int) -> None:
    _require_int("d", d)
    _require_int("n", n)
    if n <= 1:
        raise DomainError(f"cover degree n={n} must exceed 1")
    if d < 1 or d % n:
        raise DomainError(f"cover degree n={n} does not divide branch degree d={d}")
    if (d, n) in EXCLUDED_PAIRS:
        raise DomainError(f"(d, n) = ({d}, {n}) is an excluded non-general-type pair")


@dataclass(frozen=True)
class CyclicCoverSpec:
    """An n-cyclic cover of P^2 branched along smooth curves of the given degrees.

    When ``degrees`` is omitted the branch curve is d lines in general position.
    """

    d: int
    n: int
    degrees: Optional[tuple[int, ...]] = None

    def __post_init__(self) -> None:
        if self.degrees is not None:
            object.__setattr__(self, "degrees", tuple(self.degrees))
            for dj in self.degrees:
                _require_int("branch degree", dj)
                if dj < 1:
                    raise DomainError(f"branch degrees must be positive, got {dj}")
            if sum(self.degrees) != self.d:
                raise DomainError(f"branch degrees sum to {sum(self.degrees)}, not d={self.d}")
        _check_cover_pair(self.d, self.n)

    @property
    def v(self) -> int:
        return self.d // self.n

    @property
    def branch_degrees(self) -> tuple[int, ...]:
        return self.degrees if self.degrees is not None else (1,) * self.d


def cyclic_cover_chern(d: int, n: int) -> tuple[Fraction, Fraction]:
    _check_cover_pair(d, n)
    v = d // n
    # n(-3 + (1 - 1/n) d)^2 with d = nv
    c1_sq = n * ((n - 1) * v - 3) ** 2
    c2 = 3 * n + (n - 1) * (d * d - 3 * d)
    return Fraction(c1_sq), Fraction(c2)


def branch_node_count(degrees: Sequence[int]) -> int:
    """Nodes of a general union of smooth curves: sum of d_i d_j over i < j."""
    return sum(a * b for a, b in combinations(degrees, 2))


def make_cyclic_cover(spec: CyclicCoverSpec) -> SurfaceRecord:
    c1_sq, c2 = cyclic_cover_chern(spec.d, spec.n)
    nodes = branch_node_count(spec.branch_degrees)
    profile = SingularityProfile.single(ADESingularity("A", spec.n - 1), nodes)
    degs = ",".join(map(str, spec.branch_degrees))
    return SurfaceRecord(f"cyclic cover n={spec.n} of P^2 along degrees [{degs}]", c1_sq, c2, profile)


def make_branched_cover_nd(degrees: Sequence[int]) -> SurfaceRecord:
    """Degree-d cover of P^2 with n = d; a hypersurface with A_{d-1} points."""
    degrees = tuple(degrees)
    if len(degrees) < 2:
        raise DomainError(f"need at least two branch components, got {len(degrees)}")
    for dj in degrees:
        _require_int("branch degree", dj)
        if dj < 1:
            raise DomainError(f"branch degrees must be positive, got {dj}")
    d = sum(degrees)
    c1_sq, c2 = hypersurface_chern(d)
    profile = SingularityProfile.single(ADESingularity("A", d - 1), branch_node_count(degrees))
    return SurfaceRecord(f"degree {d} cover of P^2 along degrees {list(degrees)}", c1_sq, c2, profile)


def ram_cover_test(d: int, c: int, k: int) -> bool:
    """Sufficient test for bigness when each of k branch curves has degree >= c."""
    for name, value in (("d", d), ("c", c), ("k", k)):
        _require_int(name, value)
    if d < 5:
        raise DomainError(f"degree d={d} < 5 is not of general type")
    if c < 1:
        raise DomainError(f"minimal branch degree c={c} must be positive")
    if k < 2:
        raise DomainError(f"need at least two branch components, got k={k}")
    return k * (k - 1) > Fraction(8 * d * d * (2 * d - 5), c * c * (d * d - 1))


# -- covers branched along lines ---------------------------------------------


def _line_cover_closed_form(v: int, n: int) -> Fraction:
    return 2 * n * (6 - (n - 1) * (3 * v + v * v)) + Fraction((n * v - 1) * (n * n - 1) * v, 2)


def _check_line_cover(v: int, n: int) -> None:
    _require_int("v", v)
    _require_int("n", n)
    if v < 1:
        raise DomainError(f"v={v} must be positive")
    if n < 2:
        raise DomainError(f"cover degree n={n} must be at least 2")
    if n * v <= 4:
        raise DomainError(f"need d = nv > 4 lines, got d={n * v}")
    if (n * v, n) in EXCLUDED_PAIRS:
        raise DomainError(f"(d, n) = ({n * v}, {n}) is an excluded non-general-type pair")


def make_line_cover(v: int, n: int) -> SurfaceRecord:
    _check_line_cover(v, n)
    return make_cyclic_cover(CyclicCoverSpec(n * v, n))


def line_cover_criterion(v: int, n: int) -> Fraction:
    """s2(Y) + s2(orbifold) for the n-cyclic cover branched along nv general lines."""
    _check_line_cover(v, n)
    return _line_cover_closed_form(v, n)


def small_n_criterion(n: int, v: int) -> Fraction:
    """Line-cover criterion for n = 2 or 3, where it is never positive."""
    if n not in (2, 3):
        raise DomainError(f"small-n criterion is defined for n in {{2, 3}}, got n={n}")
    return line_cover_criterion(v, n)


def line_cover_exceptions(v_max: int, n_max: int) -> list[tuple[int, int]]:
    """Pairs (v, n), n >= 4, nv > 4, inside the grid whose criterion is <= 0.

    Only the finite grid 1 <= v <= v_max, 4 <= n <= n_max is examined.
    """
    if v_max < 1:
        raise DomainError(f"v_max={v_max} must be at least 1")
    if n_max < 4:
        raise DomainError(f"n_max={n_max} must be at least 4")
    return [
        (v, n)
        for v in range(1, v_max + 1)
        for n in range(4, n_max + 1)
        if n * v > 4 and _line_cover_closed_form(v, n) <= 0
    ]
