"""Chern-number inequalities and parameter sweeps over the surface families."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .chern_core import (
    DomainError,
    RationalLike,
    SurfaceRecord,
    evaluate_criterion,
    orbifold_c2,
    to_rational,
)
from . import families

__all__ = [
    "Family",
    "GeographyReport",
    "NoetherClass",
    "SweepResult",
    "SweepRow",
    "bmy_check",
    "chern_35_check",
    "geography_report",
    "noether_classify",
    "record_for",
    "sweep",
]


class NoetherClass(str, enum.Enum):
    ABOVE = "ABOVE"
    ON_LINE = "ON_LINE"
    BELOW = "BELOW"


def bmy_check(c1_sq: RationalLike, c2_orb: RationalLike) -> bool:
    """Orbifold Bogomolov-Miyaoka-Yau: c1^2 <= 3 c2(orbifold)."""
    return to_rational(c1_sq) <= 3 * to_rational(c2_orb)


def chern_35_check(c1_sq: RationalLike, c2_Y: RationalLike) -> bool:
    """Strict inequality c1^2(Y) > (3/5) c2(Y)."""
    return 5 * to_rational(c1_sq) > 3 * to_rational(c2_Y)


def noether_classify(c1_sq: RationalLike, c2_Y: RationalLike) -> NoetherClass:
    """Position relative to the Noether line 5 c1^2 = c2 - 36."""
    lhs = 5 * to_rational(c1_sq)
    rhs = to_rational(c2_Y) - 36
    if lhs > rhs:
        return NoetherClass.ABOVE
    if lhs == rhs:
        return NoetherClass.ON_LINE
    return NoetherClass.BELOW


@dataclass(frozen=True)
class GeographyReport:
    bmy_ok: bool
    chern_35_ok: bool
    noether_class: NoetherClass
    ratio_sum: Fraction
    c2_ratio: Fraction


def geography_report(surface: SurfaceRecord) -> GeographyReport:
    c1_sq = surface.c1_sq
    if c1_sq <= 0:
        raise DomainError(f"geography needs c1^2 > 0, got {c1_sq}")
    c2_orb = orbifold_c2(surface.c2, surface.profile)
    return GeographyReport(
        bmy_ok=bmy_check(c1_sq, c2_orb),
        chern_35_ok=chern_35_check(c1_sq, surface.c2),
        noether_class=noether_classify(c1_sq, surface.c2),
        ratio_sum=(surface.c2 + c2_orb) / c1_sq,
        c2_ratio=surface.c2 / c1_sq,
    )


# -- sweeps --------------------------------------------------------------------


class Family(str, enum.Enum):
    AK = "AK"
    CYCLIC = "CYCLIC"
    LINES = "LINES"
    BRANCH = "BRANCH"


# parameter names in iteration (and lexicographic) order
FAMILY_PARAMS = {
    Family.AK: ("d", "k", "ell"),
    Family.CYCLIC: ("d", "n"),
    Family.LINES: ("v", "n"),
    Family.BRANCH: ("k", "c"),
}

# symbolic choices for the AK point count, resolved per (d, k)
ELL_RULES = {
    "chmutov": lambda d, k: families.chmutov_mu(d),
    "segre": lambda d, k: families.segre_record(d).count,
    "least": lambda d, k: families.ak_least_count(d, k),
}


def record_for(family: Union[Family, str], params: Mapping[str, int]) -> SurfaceRecord:
    """Build the surface of ``family`` with the given integer parameters.

    BRANCH means the n = d cover branched along k smooth curves of degree c.
    """
    family = Family(family)
    if family is Family.AK:
        return families.make_hypersurface_ak(
            families.HypersurfaceAk(params["d"], params["k"], params["ell"])
        )
    if family is Family.CYCLIC:
        return families.make_cyclic_cover(families.CyclicCoverSpec(params["d"], params["n"]))
    if family is Family.LINES:
        return families.make_line_cover(params["v"], params["n"])
    return families.make_branched_cover_nd((params["c"],) * params["k"])


@dataclass(frozen=True)
class SweepRow:
    family: Family
    params: tuple[tuple[str, int], ...]
    c1_sq: Fraction
    c2_Y: Fraction
    c2_orb: Fraction
    s2_Y: Fraction
    s2_orb: Fraction
    criterion: Fraction
    verdict: str

    @classmethod
    def from_record(cls, family: Family, params: Mapping[str, int], record: SurfaceRecord) -> "SweepRow":
        v = evaluate_criterion(record)
        return cls(
            family=family,
            params=tuple(params.items()),
            c1_sq=record.c1_sq,
            c2_Y=record.c2,
            c2_orb=record.c2_orb,
            s2_Y=v.s2_Y,
            s2_orb=v.s2_orb,
            criterion=v.criterion,
            verdict=v.verdict.value,
        )


@dataclass(frozen=True)
class SweepResult:
    rows: tuple[SweepRow, ...]
    skipped: int


RangeSpec = Union[Sequence[int], str]


def sweep(family: Union[Family, str], ranges: Mapping[str, RangeSpec]) -> SweepResult:
    """Evaluate every parameter tuple of ``family`` in ``ranges``.

    Each range is a sequence of integers (e.g. ``range(13, 20)``); the AK point
    count may instead be one of ``"chmutov"``, ``"segre"`` or ``"least"``.
    Tuples outside a family's domain are skipped and counted.
    """
    family = Family(family)
    names = FAMILY_PARAMS[family]
    missing = [p for p in names if p not in ranges]
    if missing:
        raise DomainError(f"missing range for {', '.join(missing)} in {family.value} sweep")
    unknown = sorted(set(ranges) - set(names))
    if unknown:
        raise DomainError(f"unknown parameter(s) {', '.join(unknown)} for {family.value} sweep")

    rule = None
    axes = []
    for name in names:
        spec = ranges[name]
        if isinstance(spec, str):
            if family is not Family.AK or name != "ell" or spec not in ELL_RULES:
                raise DomainError(f"symbolic range {spec!r} not allowed for {name}")
            rule = ELL_RULES[spec]
            axes.append([None])
        else:
            axes.append(sorted(set(spec)))

    rows = []
    skipped = 0
    for values in itertools.product(*axes):
        params = dict(zip(names, values))
        try:
            if rule is not None:
                params["ell"] = rule(params["d"], params["k"])
            record = record_for(family, params)
        except DomainError:
            skipped += 1
            continue
        rows.append(SweepRow.from_record(family, params, record))
    return SweepResult(tuple(rows), skipped)
