"""Orbifold Chern and Segre numbers of canonical surfaces.

A canonical surface X carries two smooth models: its minimal resolution Y
and the orbifold attached to its ADE points.  Both share c1^2; they differ
in c2 by a local correction at every singular point.  This module computes
that correction exactly and evaluates the bigness test

    s2(Y) + s2(orbifold) > 0,

which certifies that h^0(Y, S^m Omega_Y) grows at least like
(s2(Y) + s2(orbifold)) / 12 * m^3.

Every number here is a :class:`fractions.Fraction`; floats are refused.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Optional, Union

__all__ = [
    "ADESingularity",
    "CriterionVerdict",
    "DomainError",
    "Rational",
    "SingularityProfile",
    "SurfaceRecord",
    "Verdict",
    "evaluate_criterion",
    "group_order",
    "jump_coefficient",
    "local_defect",
    "orbifold_c2",
    "segre",
    "to_rational",
]

Rational = Fraction
RationalLike = Union[int, Fraction]


class DomainError(ValueError):
    """Raised when an input lies outside the range where a formula applies."""


def to_rational(x: RationalLike) -> Fraction:
    """Coerce an int or exact rational to a reduced Fraction; refuse floats."""
    if isinstance(x, bool):
        raise TypeError("booleans are not Chern numbers")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


@dataclass(frozen=True, order=True)
class ADESingularity:
    kind: str
    n: int

    def __post_init__(self) -> None:
        if self.kind not in ("A", "D", "E"):
            raise DomainError(f"unknown singularity kind {self.kind!r}")
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise TypeError("singularity index must be an integer")
        if self.kind == "A" and self.n < 1:
            raise DomainError(f"A_n requires n >= 1, got n={self.n}")
        if self.kind == "D" and self.n < 4:
            raise DomainError(f"D_n requires n >= 4, got n={self.n}")
        if self.kind == "E" and self.n not in (6, 7, 8):
            raise DomainError(f"E_n requires n in {{6, 7, 8}}, got n={self.n}")

    @classmethod
    def parse(cls, text: str) -> "ADESingularity":
        """Parse labels such as ``"A1"``, ``"A_1"`` or ``"E8"``."""
        label = text.strip().replace("_", "")
        if len(label) < 2 or not label[1:].isdigit():
            raise DomainError(f"cannot parse singularity label {text!r}")
        return cls(label[0].upper(), int(label[1:]))

    def __str__(self) -> str:
        return f"{self.kind}_{self.n}"


def group_order(s: ADESingularity) -> int:
    """Order of the finite subgroup of SL(2, C) giving the singularity.

    Cyclic of order n+1 for A_n, binary dihedral of order 4(n-2) for D_n,
    binary tetrahedral/octahedral/icosahedral (24/48/120) for E_6/E_7/E_8.
    """
    if s.kind == "A":
        return s.n + 1
    if s.kind == "D":
        return 4 * (s.n - 2)
    return {6: 24, 7: 48, 8: 120}[s.n]


def local_defect(s: ADESingularity) -> Fraction:
    """Amount by which one point of type ``s`` lowers c2 of the orbifold.

    Equivalently the increase of s2(orbifold) over s2(Y): the Euler number
    n+1 of the exceptional tree minus 1/|G|.
    """
    return (s.n + 1) - Fraction(1, group_order(s))


def jump_coefficient(s: ADESingularity) -> Fraction:
    """Gain in the certified m^3-coefficient from one extra point of type ``s``."""
    return local_defect(s) / 12


class SingularityProfile(Mapping):
    """Immutable multiset of ADE points.

    Duplicates are merged and zero counts dropped at construction, so two
    profiles compare equal exactly when they describe the same points.
    """

    __slots__ = ("_counts",)

    def __init__(
        self,
        entries: Union[Mapping[ADESingularity, int], Iterable[tuple[ADESingularity, int]], None] = None,
    ) -> None:
        if entries is None:
            entries = ()
        elif isinstance(entries, Mapping):
            entries = entries.items()
        counts: dict[ADESingularity, int] = {}
        for sing, count in entries:
            if not isinstance(sing, ADESingularity):
                raise TypeError(f"expected ADESingularity, got {type(sing).__name__}")
            if isinstance(count, bool) or not isinstance(count, int):
                raise TypeError("singularity counts must be integers")
            if count < 0:
                raise DomainError(f"negative count {count} for {sing}")
            counts[sing] = counts.get(sing, 0) + count
        self._counts = {s: c for s, c in sorted(counts.items()) if c}

    @classmethod
    def single(cls, sing: ADESingularity, count: int) -> "SingularityProfile":
        return cls([(sing, count)])

    def __getitem__(self, key: ADESingularity) -> int:
        return self._counts[key]

    def __iter__(self) -> Iterator[ADESingularity]:
        return iter(self._counts)

    def __len__(self) -> int:
        return len(self._counts)

    def __hash__(self) -> int:
        return hash(frozenset(self._counts.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{s} x {c}" for s, c in self._counts.items())
        return f"SingularityProfile({{{inner}}})"

    def __add__(self, other: "SingularityProfile") -> "SingularityProfile":
        if not isinstance(other, SingularityProfile):
            return NotImplemented
        return SingularityProfile([*self.items(), *other.items()])

    def total_defect(self) -> Fraction:
        return sum((c * local_defect(s) for s, c in self._counts.items()), Fraction(0))


@dataclass(frozen=True)
class SurfaceRecord:
    """Chern numbers of the minimal resolution plus the ADE points of X.

    c1^2 of the orbifold equals ``c1_sq``; it is never stored separately.
    """

    name: str
    c1_sq: Fraction
    c2: Fraction
    profile: SingularityProfile = field(default_factory=SingularityProfile)

    def __post_init__(self) -> None:
        object.__setattr__(self, "c1_sq", to_rational(self.c1_sq))
        object.__setattr__(self, "c2", to_rational(self.c2))
        if not isinstance(self.profile, SingularityProfile):
            object.__setattr__(self, "profile", SingularityProfile(self.profile))

    @property
    def c2_orb(self) -> Fraction:
        return orbifold_c2(self.c2, self.profile)


class Verdict(str, enum.Enum):
    BIG = "BIG"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class CriterionVerdict:
    s2_Y: Fraction
    s2_orb: Fraction
    criterion: Fraction
    verdict: Verdict
    growth_coeff: Optional[Fraction] = None

    @property
    def is_big(self) -> bool:
        return self.verdict is Verdict.BIG


def orbifold_c2(c2_Y: RationalLike, profile: SingularityProfile) -> Fraction:
    return to_rational(c2_Y) - profile.total_defect()


def segre(c1_sq: RationalLike, c2: RationalLike) -> Fraction:
    return to_rational(c1_sq) - to_rational(c2)


def evaluate_criterion(surface: SurfaceRecord) -> CriterionVerdict:
    s2_Y = segre(surface.c1_sq, surface.c2)
    s2_orb = segre(surface.c1_sq, orbifold_c2(surface.c2, surface.profile))
    criterion = s2_Y + s2_orb
    # strict: a zero criterion certifies nothing
    if criterion > 0:
        return CriterionVerdict(s2_Y, s2_orb, criterion, Verdict.BIG, criterion / 12)
    return CriterionVerdict(s2_Y, s2_orb, criterion, Verdict.INCONCLUSIVE)
