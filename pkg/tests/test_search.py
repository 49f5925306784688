"""Enumeration, oracle scan, sieve and parallel range search."""

import pytest

from squarepoint.filters import FilterConfig, FilterId
from squarepoint.model import Candidate, canonicalize, distance_profile, orbit
from squarepoint.search import (
    BudgetExceededError,
    ScanRequest,
    enumerate_candidates,
    oracle_scan,
    search_range,
    sieve_z,
)


def naive_scan_hits(z_max, min_count):
    """Reference double loop: primitive interior canonical points only."""
    hits = []
    for z in range(1, z_max + 1):
        for x in range(1, z):
            for y in range(1, z):
                c = Candidate(x, y, z)
                if not c.is_primitive or canonicalize(c) != c:
                    continue
                profile = distance_profile(c)
                if profile.integer_count >= min_count:
                    hits.append((c, profile))
    return hits


def test_enumerate_examples():
    assert list(enumerate_candidates(2)) == [Candidate(1, 1, 2)]
    assert len(list(enumerate_candidates(3))) == 4  # all four interior points
    assert list(enumerate_candidates(4, dedup=True)) == [
        Candidate(1, 1, 4), Candidate(1, 2, 4)
    ]
    with pytest.raises(ValueError):
        list(enumerate_candidates(0))


def test_enumerate_dedup_matches_filtering():
    for z in range(1, 61):
        plain = list(enumerate_candidates(z))
        dedup = list(enumerate_candidates(z, dedup=True))
        assert dedup == [c for c in plain if canonicalize(c) == c], z
        assert dedup == sorted(dedup), z


def test_dedup_orbit_sizes_account_for_everything():
    for z in (13, 24, 36, 60, 97):
        plain = sum(1 for _ in enumerate_candidates(z))
        total = sum(len(orbit(c)) for c in enumerate_candidates(z, dedup=True))
        assert total == plain, z


def test_scan_request_validation():
    with pytest.raises(ValueError):
        ScanRequest(z_min=5, z_max=4)
    with pytest.raises(ValueError):
        ScanRequest(z_min=0, z_max=4)
    with pytest.raises(ValueError):
        ScanRequest(z_max=10, min_count=5)
    with pytest.raises(ValueError):
        ScanRequest(z_max=24, min_count=3, mod12_only=True)
    ScanRequest(z_max=24, min_count=4, mod12_only=True)


def test_oracle_scan_matches_naive_reference():
    report = oracle_scan(ScanRequest(z_min=1, z_max=120, min_count=3))
    expected = naive_scan_hits(120, 3)
    assert [(h.candidate, h.profile) for h in report.hits] == expected


def test_oracle_scan_finds_first_triple():
    report = oracle_scan(ScanRequest(z_min=1, z_max=60, min_count=3))
    cs = [tuple(h.candidate) for h in report.hits]
    assert (7, 24, 52) in cs
    hit = next(h for h in report.hits if tuple(h.candidate) == (7, 24, 52))
    assert hit.profile.roots == (25, None, 53, 51)
    assert hit.orbit_size == 8


def test_oracle_scan_boundary_and_scaled_points():
    # corners always have three integer distances; scaled copies of
    # (7, 24, 52) appear once primitivity is not required
    report = oracle_scan(
        ScanRequest(z_min=1, z_max=8, min_count=3, include_boundary=True,
                    primitive_only=False)
    )
    assert any(h.candidate.x in (0, h.candidate.z) or
               h.candidate.y in (0, h.candidate.z) for h in report.hits)
    report = oracle_scan(
        ScanRequest(z_min=104, z_max=104, min_count=3, primitive_only=False)
    )
    assert (14, 48, 104) in {tuple(h.candidate) for h in report.hits}


def test_oracle_scan_orders_hits():
    report = oracle_scan(ScanRequest(z_min=1, z_max=200, min_count=2))
    keys = [(h.candidate.z, h.candidate.x, h.candidate.y) for h in report.hits]
    assert keys == sorted(keys)


def test_oracle_scan_budget():
    with pytest.raises(BudgetExceededError):
        oracle_scan(ScanRequest(z_min=1, z_max=100, min_count=3, budget=10**3))


def test_sieve_z60_closes_without_prime_filters():
    cfg = FilterConfig.only(
        FilterId.PARITY_RESIDUE, FilterId.LEMMA3, FilterId.THEOREM5
    )
    result = sieve_z(60, cfg)
    assert result.survivors == ()
    assert result.candidates == 292
    counts = dict(result.eliminated)
    assert counts[FilterId.PARITY_RESIDUE] == 240
    assert counts[FilterId.LEMMA3] == 22
    assert counts[FilterId.THEOREM5] == 30


def test_sieve_small_goldens():
    result = sieve_z(12)
    assert result.candidates == 13 and not result.survivors
    counts = {fid.value: n for fid, n in result.eliminated if n}
    assert counts == {"boundary": 4, "lemma3": 3, "parity_residue": 6}
    assert sieve_z(1).candidates == 0
    assert sieve_z(60).survivors == ()


def test_sieve_counts_add_up():
    for z in (45, 60, 72, 96):
        result = sieve_z(z)
        assert result.candidates == (
            len(result.survivors) + sum(n for _, n in result.eliminated)
        )
        for survivor in result.survivors:
            c = survivor.candidate
            assert c.is_primitive and c.is_interior and canonicalize(c) == c
            assert len(survivor.attribution.entries) == len(FilterId)


def test_sieve_survivor_oracle_summary():
    result = sieve_z(72)
    assert [tuple(s.candidate) for s in result.survivors] == [
        (21, 20, 72), (21, 28, 72)
    ]
    assert result.max_count == 1
    assert all(w.profile.integer_count == 1 for w in result.witnesses)
    empty = sieve_z(60)
    assert empty.max_count is None and empty.witnesses == ()


def test_search_range_cardinality_and_golden():
    results = search_range(12, 120, workers=4)
    assert len(results) == 109
    assert [r.z for r in results] == list(range(12, 121))
    assert search_range(60, 60, workers=2)[0] == sieve_z(60)


def test_oracle_scan_four_distance_empty_to_1000():
    report = oracle_scan(ScanRequest(z_min=1, z_max=1000, min_count=4))
    assert report.hits == ()


def test_search_range_matches_workers():
    seq = search_range(12, 72, workers=1)
    par = search_range(12, 72, workers=4)
    assert seq == par


def test_search_range_mod12_only():
    results = search_range(10, 60, mod12_only=True)
    assert [r.z for r in results] == [12, 24, 36, 48, 60]


def test_search_range_validation_and_budget():
    with pytest.raises(ValueError):
        search_range(10, 5)
    with pytest.raises(ValueError):
        search_range(1, 10, workers=0)
    with pytest.raises(BudgetExceededError):
        search_range(1, 100, budget=10**3)


def test_search_range_worker_failure_aborts():
    bad = object.__new__(FilterConfig)  # bypass validation on purpose
    object.__setattr__(bad, "enabled", frozenset(FilterId))
    object.__setattr__(bad, "theorem2_primes", (7,))  # (2/7) = +1
    object.__setattr__(bad, "theorem4_primes", ())
    object.__setattr__(bad, "lemma3_bound", 10_000)
    with pytest.raises((RuntimeError, ValueError)):
        search_range(50, 60, bad, workers=2)


def test_oracle_hits_survive_sieve():
    # filters never kill an oracle-certified four-distance point (vacuous so
    # far) nor, at these z, the best three-distance survivors they protect
    hits = oracle_scan(ScanRequest(z_min=1, z_max=200, min_count=4)).hits
    for hit in hits:
        survivors = {s.candidate for s in sieve_z(hit.candidate.z).survivors}
        assert hit.candidate in survivors
