"""Candidate enumeration, the brute-force distance oracle, and the sieve.

The oracle is exact integer arithmetic throughout: a corner distance is an
integer iff the matching leg pair appears in the partner table built with
pythagorean_partners.  Work over a z-range partitions by whole z values, so
any worker count produces identical results.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from math import gcd
from typing import Iterator, NamedTuple

from .arith import pythagorean_partners
from .filters import (
    FIRST_HIT,
    FULL,
    Attribution,
    FilterConfig,
    FilterId,
    full_attribution,
    run_pipeline,
)
from .model import (
    Candidate,
    DistanceProfile,
    canonical_interior_pairs,
    canonicalize,
    distance_profile,
    orbit,
)

DEFAULT_BUDGET = 10**9


class BudgetExceededError(RuntimeError):
    """The requested region exceeds the candidate budget."""


@dataclass(frozen=True)
class ScanRequest:
    """Region and options for an oracle scan.

    mod12_only restricts to z = 0 (mod 12), which is only sound when hunting
    four-distance points (three-distance witnesses such as (7, 24, 52) live
    at other z), so it requires min_count >= 4.
    """

    z_min: int = 1
    z_max: int = 1
    min_count: int = 3
    include_boundary: bool = False
    primitive_only: bool = True
    mod12_only: bool = False
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.z_min < 1 or self.z_min > self.z_max:
            raise ValueError("need 1 <= z_min <= z_max")
        if not 0 <= self.min_count <= 4:
            raise ValueError("min_count must be within 0..4")
        if self.mod12_only and self.min_count < 4:
            raise ValueError("mod12_only is only valid for four-distance hunts")


class ScanHit(NamedTuple):
    candidate: Candidate
    profile: DistanceProfile
    orbit_size: int


@dataclass(frozen=True)
class ScanReport:
    request: ScanRequest
    hits: tuple[ScanHit, ...]


class Survivor(NamedTuple):
    candidate: Candidate
    attribution: Attribution


@dataclass(frozen=True)
class SieveResult:
    """Per-z sieve outcome: first-hit elimination counts and the survivors.

    candidates == survivors + sum of eliminated counts.  Survivors carry a
    full attribution over every filter (not only the enabled ones) so the
    report can explain near-misses; the oracle fields summarize the exact
    distance profiles of the survivors only.
    """

    z: int
    candidates: int
    eliminated: tuple[tuple[FilterId, int], ...]
    survivors: tuple[Survivor, ...]
    max_count: int | None
    witnesses: tuple[ScanHit, ...]


def enumerate_candidates(z: int, dedup: bool = False) -> Iterator[Candidate]:
    """All primitive interior candidates at side z, ascending (x, y).

    With dedup, exactly one canonical representative per symmetry orbit.
    """
    if z < 1:
        raise ValueError("z must be positive")
    if dedup:
        for x, y in canonical_interior_pairs(z):
            if gcd(x, y, z) == 1:
                yield Candidate(x, y, z)
    else:
        for x in range(1, z):
            for y in range(1, z):
                if gcd(x, y, z) == 1:
                    yield Candidate(x, y, z)


def _region_pairs(req: ScanRequest) -> int:
    total = 0
    for z in range(req.z_min, req.z_max + 1):
        if req.mod12_only and z % 12:
            continue
        total += (z + 1) ** 2 if req.include_boundary else (z - 1) ** 2
    return total


def _interior_hits(z: int, min_count: int) -> Iterator[tuple[int, int, int]]:
    """(x, y, integer corner count) for interior points with count >= min_count.

    A corner is integral iff its vertical leg lies in the partner table of
    its horizontal leg, so the count at (x, y) is the multiplicity of y
    among four partner streams (corners A, B, D, C).
    """
    if min_count == 0:
        for x in range(1, z):
            for y in range(1, z):
                yield x, y, distance_profile(Candidate(x, y, z)).integer_count
        return
    for x in range(1, z):
        counts: dict[int, int] = {}
        for y in pythagorean_partners(x):
            if y < z:
                counts[y] = counts.get(y, 0) + 1  # corner A
            if 0 < z - y:
                counts[z - y] = counts.get(z - y, 0) + 1  # corner B
        for y in pythagorean_partners(z - x):
            if y < z:
                counts[y] = counts.get(y, 0) + 1  # corner D
            if 0 < z - y:
                counts[z - y] = counts.get(z - y, 0) + 1  # corner C
        for y in sorted(counts):
            if counts[y] >= min_count:
                yield x, y, counts[y]


def _boundary_points(z: int) -> Iterator[tuple[int, int]]:
    for y in range(z + 1):
        yield 0, y
        yield z, y
    for x in range(1, z):
        yield x, 0
        yield x, z


def oracle_scan(req: ScanRequest) -> ScanReport:
    """Exhaustive scan for points with at least min_count integer corner
    distances; emits one canonical representative per orbit, ascending
    (z, x, y), each with its exact profile and orbit size."""
    if _region_pairs(req) > req.budget:
        raise BudgetExceededError(
            f"scan region holds more than budget={req.budget} candidate pairs"
        )
    hits = []
    for z in range(req.z_min, req.z_max + 1):
        if req.mod12_only and z % 12:
            continue
        z_hits = []
        for x, y, _count in _interior_hits(z, req.min_count):
            z_hits.append(Candidate(x, y, z))
        if req.include_boundary:
            for x, y in _boundary_points(z):
                z_hits.append(Candidate(x, y, z))
        for c in sorted(set(z_hits)):
            if req.primitive_only and not c.is_primitive:
                continue
            if canonicalize(c) != c:
                continue
            profile = distance_profile(c)
            if profile.integer_count >= req.min_count:
                hits.append(ScanHit(c, profile, len(orbit(c))))
    hits.sort(key=lambda h: (h.candidate.z, h.candidate.x, h.candidate.y))
    return ScanReport(req, tuple(hits))


def sieve_z(z: int, cfg: FilterConfig | None = None, mode: str = FIRST_HIT) -> SieveResult:
    """Run the filter pipeline over every deduplicated primitive interior
    candidate at side z; the oracle then profiles the survivors only."""
    if z < 1:
        raise ValueError("z must be positive")
    cfg = cfg if cfg is not None else FilterConfig()
    counts = dict.fromkeys(FilterId, 0)
    survivors = []
    total = 0
    for c in enumerate_candidates(z, dedup=True):
        total += 1
        attribution = run_pipeline(c, cfg, mode)
        hit = attribution.eliminated_by
        if hit is None:
            survivors.append(Survivor(c, full_attribution(c, cfg)))
        else:
            counts[hit] += 1
    witnesses = [
        ScanHit(s.candidate, distance_profile(s.candidate), len(orbit(s.candidate)))
        for s in survivors
    ]
    max_count = max((w.profile.integer_count for w in witnesses), default=None)
    return SieveResult(
        z=z,
        candidates=total,
        eliminated=tuple(counts.items()),
        survivors=tuple(survivors),
        max_count=max_count,
        witnesses=tuple(w for w in witnesses if w.profile.integer_count == max_count),
    )


def _sieve_task(args: tuple[int, FilterConfig, str]) -> SieveResult:
    z, cfg, mode = args
    return sieve_z(z, cfg, mode)


def search_range(
    z_min: int,
    z_max: int,
    cfg: FilterConfig | None = None,
    workers: int = 1,
    mod12_only: bool = False,
    mode: str = FIRST_HIT,
    budget: int = DEFAULT_BUDGET,
) -> list[SieveResult]:
    """Sieve every z in [z_min, z_max], in ascending z.

    Work is partitioned by whole z values, so results are identical for any
    worker count; a worker failure aborts the whole range.
    """
    if z_min < 1 or z_min > z_max:
        raise ValueError("need 1 <= z_min <= z_max")
    if workers < 1:
        raise ValueError("workers must be positive")
    cfg = cfg if cfg is not None else FilterConfig()
    zs = [z for z in range(z_min, z_max + 1) if not mod12_only or z % 12 == 0]
    if sum((z - 1) ** 2 for z in zs) > budget:
        raise BudgetExceededError(
            f"range holds more than budget={budget} candidate pairs"
        )
    tasks = [(z, cfg, mode) for z in zs]
    if workers == 1:
        return [_sieve_task(t) for t in tasks]
    try:
        with multiprocessing.Pool(workers) as pool:
            return pool.map(_sieve_task, tasks)
    except Exception as exc:
        raise RuntimeError(f"sieve worker failed, range aborted: {exc}") from exc
