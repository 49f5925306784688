"""Serialization of sieve, scan and list results (json, csv, text), plus the
per-z tables of values the filters rule out for x and y.

Output is deterministic: identical inputs give identical bytes.  JSON
round-trips losslessly through the parse_* functions; unknown or
inapplicable CSV cells are empty strings.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .arith import is_prime, prime_power_root
from .filters import (
    FULL,
    Attribution,
    FilterConfig,
    FilterId,
    Verdict,
    _lemma3_divisors,
    theorem5_shape,
)
from .model import CORNERS, Candidate, DistanceProfile, distance_profile
from .search import ScanHit, ScanReport, ScanRequest, SieveResult, Survivor

FORMATS = ("json", "csv", "text")

# human labels for the text renderer, for traceability of each list
_SOURCE_LABELS = {
    FilterId.BOUNDARY: "Lemmas 1-2",
    FilterId.LEMMA3: "Lemma 3",
    FilterId.PARITY_RESIDUE: "parity and residue constraints",
    FilterId.THEOREM1: "Theorem 1",
    FilterId.THEOREM2: "Theorem 2",
    FilterId.THEOREM3: "Theorem 3",
    FilterId.THEOREM4: "Theorem 4",
    FilterId.THEOREM5: "Theorem 5",
    FilterId.COROLLARY52: "Corollaries 5.2-5.3",
    FilterId.THEOREM6: "Theorem 6",
}


class ValueLists(NamedTuple):
    direct: tuple[int, ...]
    combined: tuple[int, ...]


@dataclass(frozen=True)
class UnavailableLists:
    """Values of x and y ruled out at side z, per source filter.

    Each combined list is the direct list united with its reflection
    {z - v}; the x lists hold odd values, the y lists even values.  The
    lemma3 list keeps only values the theorem5 shape did not already rule
    out, matching how the two conditions divide the work at z = 60.
    """

    z: int
    theorem3_x: ValueLists
    theorem4_x: ValueLists
    theorem5_y: ValueLists
    lemma3_y: ValueLists


def _with_reflection(z: int, direct: list[int]) -> ValueLists:
    return ValueLists(
        tuple(sorted(direct)), tuple(sorted(set(direct) | {z - v for v in direct}))
    )


def unavailable_lists(z: int, cfg: FilterConfig | None = None) -> UnavailableLists:
    if z < 2 or z % 2:
        raise ValueError("unavailable lists are defined for even z >= 2")
    cfg = cfg if cfg is not None else FilterConfig()
    t4_primes = set(cfg.theorem4_primes)

    t3 = [x for x in range(1, z, 2) if is_prime(x)]
    t4 = []
    for x in range(3, z, 2):
        root = prime_power_root(x)
        if root is not None and root[0] in t4_primes:
            t4.append(x)
    t5 = [y for y in range(2, z, 2) if theorem5_shape(y) is not None]
    t5_lists = _with_reflection(z, t5)

    dangerous = _lemma3_divisors(z, cfg.lemma3_bound)
    l3 = [
        y
        for y in range(2, z, 2)
        if y in dangerous and y not in t5_lists.combined
    ]
    return UnavailableLists(
        z=z,
        theorem3_x=_with_reflection(z, t3),
        theorem4_x=_with_reflection(z, t4),
        theorem5_y=t5_lists,
        lemma3_y=_with_reflection(z, l3),
    )


# ---------------------------------------------------------------------------
# dict conversion (the JSON layer)


def _verdict_to_dict(fid: FilterId, verdict: Verdict) -> dict:
    return {
        "filter": fid.value,
        "eliminated": verdict.eliminated,
        "witness": verdict.witness,
    }


def _attribution_to_list(attribution: Attribution) -> list[dict]:
    return [_verdict_to_dict(fid, v) for fid, v in attribution.entries]


def _hit_to_dict(hit: ScanHit) -> dict:
    c, profile = hit.candidate, hit.profile
    return {
        "z": c.z,
        "x": c.x,
        "y": c.y,
        "count": profile.integer_count,
        "orbit": hit.orbit_size,
        "squared": dict(zip(CORNERS, profile.squared)),
        "roots": dict(zip(CORNERS, profile.roots)),
    }


def sieve_result_to_dict(result: SieveResult) -> dict:
    return {
        "z": result.z,
        "totals": {
            "candidates": result.candidates,
            "eliminated": {fid.value: n for fid, n in result.eliminated},
            "survivors": len(result.survivors),
        },
        "survivors": [
            {
                "x": s.candidate.x,
                "y": s.candidate.y,
                "attribution": _attribution_to_list(s.attribution),
            }
            for s in result.survivors
        ],
        "oracle": {
            "max_count": result.max_count,
            "witnesses": [_hit_to_dict(w) for w in result.witnesses],
        },
    }


def scan_report_to_dict(report: ScanReport) -> dict:
    req = report.request
    return {
        "request": {
            "z_min": req.z_min,
            "z_max": req.z_max,
            "min_count": req.min_count,
            "include_boundary": req.include_boundary,
            "primitive_only": req.primitive_only,
            "mod12_only": req.mod12_only,
            "budget": req.budget,
        },
        "hits": [_hit_to_dict(h) for h in report.hits],
    }


def unavailable_to_dict(lists: UnavailableLists) -> dict:
    return {
        "z": lists.z,
        "lists": {
            fid.value: {"direct": list(vl.direct), "combined": list(vl.combined)}
            for fid, vl in _named_lists(lists)
        },
    }


def _named_lists(lists: UnavailableLists):
    return (
        (FilterId.THEOREM3, lists.theorem3_x),
        (FilterId.THEOREM4, lists.theorem4_x),
        (FilterId.THEOREM5, lists.theorem5_y),
        (FilterId.LEMMA3, lists.lemma3_y),
    )


# ---------------------------------------------------------------------------
# parsing (JSON -> result objects)


def _load(data: bytes | str | dict) -> dict:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    if isinstance(data, str):
        data = json.loads(data)
    return data


def _attribution_from_list(c: Candidate, entries: list[dict]) -> Attribution:
    parsed = []
    for entry in entries:
        fid = FilterId(entry["filter"])
        if entry["eliminated"]:
            parsed.append((fid, Verdict(fid, entry["witness"])))
        else:
            parsed.append((fid, Verdict(None, None)))
    return Attribution(c, FULL, tuple(parsed))


def parse_sieve_result(data: bytes | str | dict) -> SieveResult:
    obj = _load(data)
    z = obj["z"]
    survivors = tuple(
        Survivor(
            Candidate(s["x"], s["y"], z),
            _attribution_from_list(Candidate(s["x"], s["y"], z), s["attribution"]),
        )
        for s in obj["survivors"]
    )
    return SieveResult(
        z=z,
        candidates=obj["totals"]["candidates"],
        eliminated=tuple(
            (FilterId(name), n) for name, n in obj["totals"]["eliminated"].items()
        ),
        survivors=survivors,
        max_count=obj["oracle"]["max_count"],
        witnesses=tuple(_hit_from_dict(w) for w in obj["oracle"]["witnesses"]),
    )


def _hit_from_dict(data: dict) -> ScanHit:
    c = Candidate(data["x"], data["y"], data["z"])
    profile = DistanceProfile(
        tuple(data["squared"][k] for k in CORNERS),
        tuple(data["roots"][k] for k in CORNERS),
    )
    return ScanHit(c, profile, data["orbit"])


def parse_scan_report(data: bytes | str | dict) -> ScanReport:
    obj = _load(data)
    return ScanReport(
        ScanRequest(**obj["request"]),
        tuple(_hit_from_dict(h) for h in obj["hits"]),
    )


def parse_unavailable_lists(data: bytes | str | dict) -> UnavailableLists:
    obj = _load(data)
    lists = {
        name: ValueLists(tuple(vl["direct"]), tuple(vl["combined"]))
        for name, vl in obj["lists"].items()
    }
    return UnavailableLists(
        z=obj["z"],
        theorem3_x=lists["theorem3"],
        theorem4_x=lists["theorem4"],
        theorem5_y=lists["theorem5"],
        lemma3_y=lists["lemma3"],
    )


def parse_search_results(data: bytes | str) -> list[SieveResult]:
    obj = _load(data)
    return [parse_sieve_result(entry) for entry in obj["results"]]


# ---------------------------------------------------------------------------
# rendering


def _roots_detail(profile: DistanceProfile) -> str:
    return ";".join(
        f"{corner}={'-' if root is None else root}"
        for corner, root in zip(CORNERS, profile.roots)
    )


CSV_HEADER = ("z", "x", "y", "verdict", "filter_id", "detail")


def _csv_rows(result) -> list[tuple]:
    if isinstance(result, ScanReport):
        return [
            (h.candidate.z, h.candidate.x, h.candidate.y, h.profile.integer_count, "",
             _roots_detail(h.profile))
            for h in result.hits
        ]
    if isinstance(result, SieveResult):
        return [
            (result.z, s.candidate.x, s.candidate.y, "survivor", "",
             _roots_detail(distance_profile(s.candidate)))
            for s in result.survivors
        ]
    if isinstance(result, UnavailableLists):
        rows = []
        for fid, vl in _named_lists(result):
            axis = "x" if fid in (FilterId.THEOREM3, FilterId.THEOREM4) else "y"
            for v in vl.combined:
                membership = "direct" if v in vl.direct else "reflected"
                if axis == "x":
                    rows.append((result.z, v, "", "unavailable", fid.value, membership))
                else:
                    rows.append((result.z, "", v, "unavailable", fid.value, membership))
        return rows
    raise TypeError(f"no CSV rendering for {type(result).__name__}")


def _render_csv(results) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for result in results:
        writer.writerows(_csv_rows(result))
    return buf.getvalue()


def _render_text(result) -> str:
    lines = []
    if isinstance(result, SieveResult):
        lines.append(f"sieve z={result.z}")
        lines.append(f"  candidates examined: {result.candidates}")
        for fid, n in result.eliminated:
            if n:
                lines.append(f"  eliminated by {fid.value}: {n}")
        lines.append(f"  survivors: {len(result.survivors)}")
        for s in result.survivors:
            profile = distance_profile(s.candidate)
            near = ",".join(
                fid.value for fid, v in s.attribution.entries if v.eliminated
            )
            lines.append(
                f"    x={s.candidate.x} y={s.candidate.y}"
                f" roots {_roots_detail(profile)}"
                + (f" (would fall to: {near})" if near else "")
            )
        if result.max_count is not None:
            lines.append(f"  best survivor integer count: {result.max_count}")
    elif isinstance(result, ScanReport):
        req = result.request
        lines.append(
            f"scan z={req.z_min}..{req.z_max} min_count={req.min_count}: "
            f"{len(result.hits)} hit(s)"
        )
        for h in result.hits:
            c = h.candidate
            lines.append(
                f"  z={c.z} x={c.x} y={c.y} count={h.profile.integer_count}"
                f" roots {_roots_detail(h.profile)} orbit={h.orbit_size}"
            )
    elif isinstance(result, UnavailableLists):
        lines.append(f"unavailable values at z={result.z}")
        for fid, vl in _named_lists(result):
            axis = "x" if fid in (FilterId.THEOREM3, FilterId.THEOREM4) else "y"
            label = f"{fid.value} ({_SOURCE_LABELS[fid]}), {axis}"
            lines.append(f"  {label}, direct:   " + " ".join(map(str, vl.direct)))
            lines.append(f"  {label}, combined: " + " ".join(map(str, vl.combined)))
    else:
        raise TypeError(f"no text rendering for {type(result).__name__}")
    return "\n".join(lines) + "\n"


def serialize(result, fmt: str = "json") -> bytes:
    """Render a SieveResult, ScanReport, UnavailableLists, or sequence of
    SieveResults as json, csv or text bytes."""
    if fmt not in FORMATS:
        raise ValueError(f"unsupported format {fmt!r}; expected one of {FORMATS}")
    is_range = isinstance(result, Sequence) and not isinstance(result, (str, bytes))
    if fmt == "json":
        if is_range:
            payload = {"results": [sieve_result_to_dict(r) for r in result]}
        elif isinstance(result, SieveResult):
            payload = sieve_result_to_dict(result)
        elif isinstance(result, ScanReport):
            payload = scan_report_to_dict(result)
        elif isinstance(result, UnavailableLists):
            payload = unavailable_to_dict(result)
        else:
            raise TypeError(f"cannot serialize {type(result).__name__}")
        return (json.dumps(payload, indent=2) + "\n").encode("utf-8")
    if fmt == "csv":
        return _render_csv(result if is_range else [result]).encode("utf-8")
    text = (
        "".join(_render_text(r) for r in result) if is_range else _render_text(result)
    )
    return text.encode("utf-8")
