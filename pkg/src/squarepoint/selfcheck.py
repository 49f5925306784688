"""Built-in verification suites behind the `verify` CLI subcommand.

Quick, self-contained cross-checks of the arithmetic layer, the filter
witnesses, and the classic z=60 worked example.  The pytest suite runs the
same checks at larger bounds; these are sized to finish in seconds.
"""

from __future__ import annotations

from typing import Callable, NamedTuple

from .arith import (
    is_prime,
    is_qr_bruteforce,
    isqrt,
    jacobi,
    odd_leg_decompositions,
    pythagorean_partners,
)
from .filters import FilterConfig, FilterId, recheck_witness, run_pipeline
from .model import Candidate, distance_profile
from .report import unavailable_lists
from .search import ScanRequest, enumerate_candidates, oracle_scan, sieve_z


class CheckResult(NamedTuple):
    name: str
    ok: bool
    detail: str = ""


def _check(name: str, ok: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, bool(ok), "" if ok else detail)


def suite_arith() -> list[CheckResult]:
    results = []

    bad = []
    for p in range(3, 200, 2):
        if not is_prime(p):
            continue
        for a in range(1, p):
            if (jacobi(a, p) == -1) == is_qr_bruteforce(a, p):
                bad.append((a, p))
    results.append(_check("jacobi matches residue enumeration (p < 200)", not bad,
                          f"mismatches: {bad[:3]}"))

    bad = [p for p in range(3, 2000, 2)
           if is_prime(p) and (jacobi(2, p) == -1) != (p % 8 in (3, 5))]
    results.append(_check("(2/p) = -1 iff p = 3,5 (mod 8) (p < 2000)", not bad,
                          f"mismatches: {bad[:5]}"))

    bad = []
    for a in range(1, 80):
        naive = tuple(
            b for b in range(1, (a * a - 1) // 2 + 1) if isqrt(a * a + b * b)[1]
        )
        if pythagorean_partners(a) != naive:
            bad.append(a)
    results.append(_check("partner table matches naive scan (a < 80)", not bad,
                          f"mismatches at a={bad[:5]}"))

    bad = []
    for a in range(3, 200, 2):
        evens = {2 * k * u * v for k, u, v in odd_leg_decompositions(a)}
        partners = set(pythagorean_partners(a))
        if evens != partners or max(partners) != (a * a - 1) // 2:
            bad.append(a)
    results.append(_check("leg decompositions give the partner set (odd a < 200)",
                          not bad, f"mismatches at a={bad[:5]}"))
    return results


def suite_filters() -> list[CheckResult]:
    results = []
    cfg = FilterConfig()

    bad = None
    checked = 0
    for z in range(1, 151):
        for c in enumerate_candidates(z, dedup=True):
            attribution = run_pipeline(c, cfg, "first")
            for fid, verdict in attribution.entries:
                if verdict.eliminated:
                    checked += 1
                    if not recheck_witness(c, fid, verdict.witness):
                        bad = (c, fid, verdict.witness)
            if bad:
                break
        if bad:
            break
    results.append(_check(f"every witness re-validates (z <= 150, {checked} checked)",
                          bad is None, f"first failure: {bad}"))

    scan = oracle_scan(ScanRequest(z_min=1, z_max=150, min_count=4))
    unsound = []
    for hit in scan.hits:
        survivors = {s.candidate for s in sieve_z(hit.candidate.z, cfg).survivors}
        if hit.candidate not in survivors:
            unsound.append(hit.candidate)
    results.append(_check("four-distance oracle hits survive the sieve (z <= 150)",
                          not unsound, f"filtered out: {unsound[:3]}"))

    agree = all(
        run_pipeline(c, cfg, "first").survived == run_pipeline(c, cfg, "full").survived
        for z in (60, 84)
        for c in enumerate_candidates(z, dedup=True)
    )
    results.append(_check("first-hit and full modes agree on survival", agree))
    return results


def suite_paper() -> list[CheckResult]:
    results = []
    lists = unavailable_lists(60)

    results.append(_check(
        "z=60 combined prime list for x",
        lists.theorem3_x.combined
        == (1, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 49, 53, 55, 57, 59),
        f"got {lists.theorem3_x.combined}"))
    results.append(_check(
        "z=60 power-of-two shape list for y",
        lists.theorem5_y.direct == (4, 8, 16, 24, 32, 48)
        and lists.theorem5_y.combined == (4, 8, 12, 16, 24, 28, 32, 36, 44, 48, 52, 56),
        f"got {lists.theorem5_y}"))
    results.append(_check(
        "z=60 side-multiple list for y", lists.lemma3_y.combined == (20, 40),
        f"got {lists.lemma3_y.combined}"))
    results.append(_check(
        "z=60 prime-power list contains 3, 5, 9, 25, 27",
        {3, 5, 9, 25, 27} <= set(lists.theorem4_x.direct),
        f"got {lists.theorem4_x.direct}"))

    cfg = FilterConfig.only(
        FilterId.PARITY_RESIDUE, FilterId.LEMMA3, FilterId.THEOREM5
    )
    result = sieve_z(60, cfg)
    results.append(_check(
        "z=60 sieve closes with parity, lemma3 and theorem5 alone",
        not result.survivors, f"{len(result.survivors)} survivors"))

    for triple, roots in (((7, 24, 52), (25, None, 53, 51)),
                          ((297, 304, 700), (425, 495, 565, None))):
        profile = distance_profile(Candidate(*triple))
        results.append(_check(
            f"three-distance witness {triple}",
            profile.roots == roots and profile.integer_count == 3,
            f"got roots {profile.roots}"))
    return results


SUITES: dict[str, Callable[[], list[CheckResult]]] = {
    "arith": suite_arith,
    "filters": suite_filters,
    "paper": suite_paper,
}
