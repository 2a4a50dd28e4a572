"""Exit criteria; each test records one PASS/FAIL line for the terminal summary."""

import math
import random
from fractions import Fraction

import pytest

from bigcotangent import families as fam
from bigcotangent.chern_core import (
    ADESingularity,
    SingularityProfile,
    SurfaceRecord,
    evaluate_criterion,
    jump_coefficient,
    local_defect,
)
from bigcotangent.cli import main
from bigcotangent.geography import bmy_check, chern_35_check, geography_report

from conftest import ACCEPTANCE_RESULTS

A1 = ADESingularity("A", 1)


@pytest.fixture
def record(request):
    key = request.node.get_closest_marker("criterion").args[0]
    ACCEPTANCE_RESULTS[key] = (False, "did not complete")

    def _record(detail):
        ACCEPTANCE_RESULTS[key] = (True, detail)

    return _record


def pipeline_line_cover(v, n):
    d = n * v
    c1, c2 = fam.cyclic_cover_chern(d, n)
    profile = SingularityProfile({ADESingularity("A", n - 1): d * (d - 1) // 2})
    return evaluate_criterion(SurfaceRecord("pipeline", c1, c2, profile)).criterion


def paper_exception_set():
    rows = [((1, 1), range(5, 15)), ((2, 2), range(4, 9)), ((3, 3), range(4, 7)), ((4, 6), (4, 5)), ((7, 12), (4,))]
    return {(v, n) for (lo, hi), ns in rows for v in range(lo, hi + 1) for n in ns}


@pytest.mark.criterion("1 corollary-nodes table")
def test_corollary_nodes_table(record, capsys):
    least = [math.floor(Fraction(8, 3) * (2 * d * d - 5 * d)) + 1 for d in range(13, 20)]
    assert least == [729, 859, 1001, 1153, 1315, 1489, 1673]
    assert [fam.ak_least_count(d, 1) for d in range(13, 20)] == least
    for d, bound in zip(range(13, 20), least):
        assert fam.chmutov_mu(d) > fam.ak_threshold(d, 1)
        assert fam.chmutov_mu(d) >= bound
    assert main(["tables", "corollary-nodes"]) == 0
    capsys.readouterr()
    record("least counts 729..1673 exact, mu(d) exceeds each, `tables corollary-nodes` exits 0")


@pytest.mark.criterion("2 exceptional (v, n) table")
def test_exceptional_pairs(record):
    got = fam.line_cover_exceptions(12, 14)
    assert set(got) == paper_exception_set()
    assert len(got) == 30
    assert set(fam.line_cover_exceptions(50, 50)) == paper_exception_set()
    record("30 pairs match on v<=12, n<=14; no new pair on v<=50, n<=50")


@pytest.mark.criterion("3 dual-derivation oracle")
def test_dual_derivation(record):
    checked = mismatches = 0
    for v in range(1, 31):
        for n in range(2, 31):
            if n * v <= 4 or (n * v, n) in fam.EXCLUDED_PAIRS:
                continue
            checked += 1
            if fam.line_cover_criterion(v, n) != pipeline_line_cover(v, n):
                mismatches += 1
    assert mismatches == 0
    assert checked > 800
    record(f"{checked} (v, n) pairs, 0 mismatches")


@pytest.mark.criterion("4 threshold soundness")
def test_threshold_soundness(record):
    cases = 0
    for d in range(5, 41):
        for k in range(1, 11):
            least = fam.least_positive_count(d, k)
            assert least == math.floor(fam.ak_threshold(d, k)) + 1
            below = fam.make_hypersurface_ak(fam.HypersurfaceAk(d, k, least - 1))
            assert evaluate_criterion(below).criterion <= 0
            cases += 1
    at_728 = evaluate_criterion(fam.make_hypersurface_ak(fam.HypersurfaceAk(13, 1, 728)))
    assert at_728.criterion == 0
    record(f"{cases} (d, k) cases; criterion at d=13, ell=728 is exactly 0")


@pytest.mark.criterion("5 landmark values")
def test_landmarks(record):
    assert fam.line_cover_criterion(1, 15) == 68
    assert fam.line_cover_criterion(1, 14) == Fraction(-41, 2)
    for v in range(2, 21):
        assert fam.small_n_criterion(3, v) == 36 - 40 * v
    record("(1,15) -> 68, (1,14) -> -41/2, n=3 gives 36-40v for v=2..20")


@pytest.mark.criterion("6 defect jump")
def test_defect_jump(record):
    assert local_defect(A1) == Fraction(3, 2)
    assert jump_coefficient(A1) == Fraction(1, 8)
    base = SurfaceRecord("s", 1053, 1599, {A1: 800})
    more = SurfaceRecord("s", 1053, 1599, {A1: 801})
    jump = evaluate_criterion(more).growth_coeff - evaluate_criterion(base).growth_coeff
    assert jump == Fraction(1, 8)
    record("one A_1 adds 3/2 to the criterion and 1/8 to the growth coefficient")


@pytest.mark.criterion("7 conditional 3/5 inequality")
def test_conditional_three_fifths(record):
    rng = random.Random(20131015)
    kinds = [("A", lambda: rng.randint(1, 40)), ("D", lambda: rng.randint(4, 40)), ("E", lambda: rng.choice((6, 7, 8)))]
    hypothesis_hits = ratio_checks = counterexamples = 0
    n_records = 3000
    for _ in range(n_records):
        pairs = []
        for _ in range(rng.randint(0, 50)):
            kind, idx = rng.choice(kinds)
            pairs.append((ADESingularity(kind, idx()), rng.randint(1, 100)))
        rec = SurfaceRecord("r", rng.randint(-10**4, 10**4), rng.randint(-10**4, 10**4), SingularityProfile(pairs))
        v = evaluate_criterion(rec)
        if v.is_big and bmy_check(rec.c1_sq, rec.c2_orb):
            hypothesis_hits += 1
            counterexamples += not chern_35_check(rec.c1_sq, rec.c2)
        if rec.c1_sq > 0:
            ratio_checks += 1
            counterexamples += (geography_report(rec).ratio_sum < 2) != (v.criterion > 0)
    assert counterexamples == 0
    assert hypothesis_hits > 0 and ratio_checks >= 1000
    record(f"{n_records} records, {hypothesis_hits} under the hypothesis, {ratio_checks} ratio checks, 0 counterexamples")


@pytest.mark.criterion("8 Segre crossover")
def test_segre_crossover(record):
    least_d = next(d for d in range(5, 1000) if fam.segre_node_bound(d) > fam.ak_threshold(d, 1))
    assert least_d == 20
    assert all(fam.segre_node_bound(d) > fam.ak_threshold(d, 1) for d in range(20, 1000))
    record("least d with Segre bound above threshold is 20")


@pytest.mark.criterion("9 non-reproducible existence claims")
def test_nonreproducible_claims_documented(record):
    # The surfaces themselves are not constructed; this criterion is discharged
    # by the oracle, monotonicity and exactness suites in the other modules.
    for d in range(13, 20):
        rec = fam.make_hypersurface_ak(fam.HypersurfaceAk(d, 1, fam.chmutov_mu(d)))
        assert evaluate_criterion(rec).is_big
    record("existence not reproducible; covered by property suites, tabulated counts certify BIG")
