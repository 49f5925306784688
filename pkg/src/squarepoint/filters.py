"""Elimination filters: each named necessary condition a candidate must fail
to be ruled out as a point with four integer corner distances.

Every filter returns a Verdict.  An Eliminated verdict carries a witness, a
small JSON-friendly record from which the eliminating condition can be
re-derived independently (see recheck_witness).  Filters only assert that
the candidate cannot have four integer corner distances; eliminating a
known three-distance point is legitimate.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Callable, NamedTuple

from .arith import (
    divisors,
    factorize,
    is_prime,
    jacobi,
    prime_power_root,
    two_nonresidue_primes,
)
from .model import CORNERS, Candidate, corner_legs, is_primitive_interior

FIRST_HIT = "first"
FULL = "full"


class FilterId(enum.Enum):
    """Filter identifiers, in fixed evaluation (and report) order."""

    BOUNDARY = "boundary"
    LEMMA3 = "lemma3"
    PARITY_RESIDUE = "parity_residue"
    THEOREM1 = "theorem1"
    THEOREM2 = "theorem2"
    THEOREM3 = "theorem3"
    THEOREM4 = "theorem4"
    THEOREM5 = "theorem5"
    COROLLARY52 = "corollary52"
    THEOREM6 = "theorem6"


class Verdict(NamedTuple):
    """Either undecided (both fields None) or eliminated by one filter."""

    filter_id: FilterId | None
    witness: dict | None

    @property
    def eliminated(self) -> bool:
        return self.filter_id is not None


UNDECIDED = Verdict(None, None)


class Attribution(NamedTuple):
    """Pipeline outcome for one candidate.

    In first-hit mode `entries` holds at most the eliminating
    (filter, verdict) pair; in full mode it holds one pair per evaluated
    filter.  Both modes agree on survival.
    """

    candidate: Candidate
    mode: str
    entries: tuple[tuple[FilterId, Verdict], ...]

    @property
    def eliminated_by(self) -> FilterId | None:
        for fid, verdict in self.entries:
            if verdict.eliminated:
                return fid
        return None

    @property
    def survived(self) -> bool:
        return self.eliminated_by is None


@lru_cache(maxsize=32)
def _check_nonresidue_primes(primes: tuple[int, ...]) -> None:
    for p in primes:
        if not is_prime(p) or p % 2 == 0 or jacobi(2, p) != -1:
            raise ValueError(f"{p} is not an odd prime with (2/p) = -1")


def _default_primes() -> tuple[int, ...]:
    return two_nonresidue_primes(100)


@dataclass(frozen=True)
class FilterConfig:
    """Which filters run and with which (finite) prime lists.

    The congruence and prime-power conditions quantify over all primes p
    with (2/p) = -1; a sieve must truncate the list, which only weakens
    elimination, never falsifies it.
    """

    enabled: frozenset[FilterId] = frozenset(FilterId)
    theorem2_primes: tuple[int, ...] = field(default_factory=_default_primes)
    theorem4_primes: tuple[int, ...] = field(default_factory=_default_primes)
    lemma3_bound: int = 10_000

    def __post_init__(self):
        object.__setattr__(self, "enabled", frozenset(self.enabled))
        object.__setattr__(self, "theorem2_primes", tuple(self.theorem2_primes))
        object.__setattr__(self, "theorem4_primes", tuple(self.theorem4_primes))
        _check_nonresidue_primes(self.theorem2_primes)
        _check_nonresidue_primes(self.theorem4_primes)

    @classmethod
    def only(cls, *filter_ids: FilterId, **kwargs) -> "FilterConfig":
        return cls(enabled=frozenset(filter_ids), **kwargs)


def filter_boundary(c: Candidate, cfg: FilterConfig | None = None) -> Verdict:
    """Edges, midlines and diagonals carry no four-distance point."""
    x, y, z = c
    if x == 0 or x == z or y == 0 or y == z:
        tag = "edge"
    elif 2 * x == z or 2 * y == z:
        tag = "midline"
    elif x == y or x + y == z:
        tag = "diagonal"
    else:
        return UNDECIDED
    return Verdict(FilterId.BOUNDARY, {"kind": "boundary", "tag": tag})


@lru_cache(maxsize=1 << 12)
def _lemma3_divisors(z: int, bound: int) -> frozenset[int]:
    """Divisors d of z (0 < d < z) with n = z/d and n*n + 4 both prime."""
    out = set()
    for d in divisors(z):
        if d == z:
            continue
        n = z // d
        if n <= bound and is_prime(n) and is_prime(n * n + 4):
            out.add(d)
    return frozenset(out)


def filter_lemma3(c: Candidate, cfg: FilterConfig) -> Verdict:
    """No side distance d may satisfy z = n*d with n and n*n + 4 both prime."""
    x, y, z = c
    dangerous = _lemma3_divisors(z, cfg.lemma3_bound)
    for side, d in (("x", x), ("y", y), ("z-x", z - x), ("z-y", z - y)):
        if d in dangerous:
            n = z // d
            return Verdict(
                FilterId.LEMMA3, {"kind": "lemma3", "side": side, "d": d, "n": n}
            )
    return UNDECIDED


def filter_parity_residue(c: Candidate, cfg: FilterConfig | None = None) -> Verdict:
    """Parity and residue constraints: one coordinate odd, the even one a
    multiple of 4, z a multiple of 12, and every corner owning a leg
    divisible by 3 (otherwise that squared distance is 2 mod 3).
    """
    x, y, z = c
    if x % 2 == y % 2:
        return Verdict(
            FilterId.PARITY_RESIDUE, {"kind": "parity", "clause": "one_odd_one_even"}
        )
    even = y if x % 2 else x
    if even % 4:
        return Verdict(
            FilterId.PARITY_RESIDUE,
            {"kind": "parity", "clause": "even_coordinate_mod_4", "value": even},
        )
    if z % 12:
        return Verdict(
            FilterId.PARITY_RESIDUE, {"kind": "parity", "clause": "side_mod_12"}
        )
    for corner, (a, b) in zip(CORNERS, corner_legs(c)):
        if a % 3 and b % 3:
            return Verdict(
                FilterId.PARITY_RESIDUE,
                {
                    "kind": "parity",
                    "clause": "corner_mod_3",
                    "corner": corner,
                    "legs": [a, b],
                },
            )
    return UNDECIDED


def filter_theorem1(c: Candidate, cfg: FilterConfig | None = None) -> Verdict:
    """At each corner with legs (a, b): a*a >= 2b+1 and b*b >= 2a+1, because
    the corner distance is an integer exceeding both legs."""
    names = (("x", "y"), ("x", "z-y"), ("z-x", "z-y"), ("z-x", "y"))
    for corner, (a, b), (na, nb) in zip(CORNERS, corner_legs(c), names):
        for leg, val, other in ((na, a, b), (nb, b, a)):
            if val * val < 2 * other + 1:
                return Verdict(
                    FilterId.THEOREM1,
                    {
                        "kind": "inequality",
                        "corner": corner,
                        "leg": leg,
                        "lhs": val * val,
                        "rhs": 2 * other + 1,
                    },
                )
    return UNDECIDED


def filter_theorem2(c: Candidate, cfg: FilterConfig) -> Verdict:
    """No corner's legs may be congruent mod a prime p with (2/p) = -1.

    The four corner pairs collapse to two congruences: x = y and
    x + y = z (mod p).
    """
    _check_nonresidue_primes(cfg.theorem2_primes)
    x, y, z = c
    for p in cfg.theorem2_primes:
        if (x - y) % p == 0:
            return Verdict(
                FilterId.THEOREM2,
                {"kind": "congruence", "p": p, "corner": "A", "legs": [x, y]},
            )
        if (x + y - z) % p == 0:
            return Verdict(
                FilterId.THEOREM2,
                {"kind": "congruence", "p": p, "corner": "B", "legs": [x, z - y]},
            )
    return UNDECIDED


def filter_theorem3(c: Candidate, cfg: FilterConfig | None = None) -> Verdict:
    """Neither x nor z - x may be an odd prime: an odd prime leg forces the
    even partner (p*p - 1)/2 at two corners, putting the point on a midline."""
    x, _, z = c
    for side, t in (("x", x), ("z-x", z - x)):
        if t % 2 and is_prime(t):
            return Verdict(
                FilterId.THEOREM3, {"kind": "prime", "side": side, "value": t}
            )
    return UNDECIDED


def filter_theorem4(c: Candidate, cfg: FilterConfig) -> Verdict:
    """Neither x nor z - x may be p**e for a configured prime with (2/p) = -1."""
    _check_nonresidue_primes(cfg.theorem4_primes)
    x, _, z = c
    allowed = set(cfg.theorem4_primes)
    for side, t in (("x", x), ("z-x", z - x)):
        if t < 2 or t % 2 == 0:
            continue
        root = prime_power_root(t)
        if root is not None and root[0] in allowed:
            return Verdict(
                FilterId.THEOREM4,
                {"kind": "prime_power", "side": side, "p": root[0], "e": root[1]},
            )
    return UNDECIDED


def shape5_prime_allowed(p: int) -> bool:
    """Fast form of the prime condition in the power-of-two shape: p % 8 != 7."""
    return p % 8 != 7


def shape5_prime_allowed_literal(p: int) -> bool:
    """Literal form: p = 1 (mod 4) or (2/p) = -1.  Ground truth for the fast
    form; their equality over odd primes is a unit test."""
    return p % 4 == 1 or jacobi(2, p) == -1


@lru_cache(maxsize=1 << 16)
def theorem5_shape(t: int) -> tuple[int, int, tuple[tuple[int, int], ...]] | None:
    """If t = 2**(h+1) * m with h >= 1, 2**h > m, and every prime factor of m
    allowed, return (h, m, factorization of m); otherwise None."""
    if t < 4 or t % 2:
        return None
    h = (t & -t).bit_length() - 2
    if h < 1:
        return None
    m = t >> (h + 1)
    if (1 << h) <= m:
        return None
    fact = factorize(m)
    if all(shape5_prime_allowed(p) for p, _ in fact):
        return h, m, fact
    return None


def filter_theorem5(c: Candidate, cfg: FilterConfig | None = None) -> Verdict:
    """Neither y nor z - y may equal 2**(h+1) * m with 2**h > m and every
    prime factor of m either 1 (mod 4) or a non-residue modulus for 2."""
    _, y, z = c
    for target, t in (("y", y), ("z-y", z - y)):
        shape = theorem5_shape(t)
        if shape is not None:
            h, m, fact = shape
            return Verdict(
                FilterId.THEOREM5,
                {
                    "kind": "shape5",
                    "target": target,
                    "value": t,
                    "h": h,
                    "m": m,
                    "m_factors": [[p, e] for p, e in fact],
                },
            )
    return UNDECIDED


def filter_cor52(c: Candidate, cfg: FilterConfig | None = None) -> Verdict:
    """Neither x nor z - x may split as q1*q2 (q1 > q2 >= 1 odd, both
    non-residue moduli for 2) with (q1**2 - q2**2)/4 passing the theorem5
    shape test; the split would force an excluded even partner."""
    x, _, z = c
    for target, t in (("x", x), ("z-x", z - x)):
        if t < 3 or t % 2 == 0:
            continue
        for q2 in divisors(t):
            q1 = t // q2
            if q1 <= q2:
                break
            if jacobi(2, q2) != -1 or jacobi(2, q1) != -1:
                continue
            # (q1*q1 - q2*q2) // 4 = 2**h * m; reuse the y-shape test on its double
            shape = theorem5_shape((q1 * q1 - q2 * q2) // 2)
            if shape is not None:
                h, m, _ = shape
                return Verdict(
                    FilterId.COROLLARY52,
                    {
                        "kind": "cor52",
                        "target": target,
                        "value": t,
                        "q1": q1,
                        "q2": q2,
                        "h": h,
                        "m": m,
                    },
                )
    return UNDECIDED


def _odd_semiprime(t: int) -> tuple[int, int] | None:
    """(p, q) with t = p*q, p > q distinct odd primes, both (2/.) = -1."""
    if t < 15 or t % 2 == 0:
        return None
    fact = factorize(t)
    if len(fact) != 2 or fact[0][1] != 1 or fact[1][1] != 1:
        return None
    q, p = fact[0][0], fact[1][0]
    if jacobi(2, p) == -1 and jacobi(2, q) == -1:
        return p, q
    return None


def filter_theorem6(c: Candidate, cfg: FilterConfig | None = None) -> Verdict:
    """x and z - x may not both be products of two distinct odd primes that
    are all non-residue moduli for 2: the forced even partners would make
    x = z - x, a midline point."""
    x, _, z = c
    first = _odd_semiprime(x)
    if first is None:
        return UNDECIDED
    second = _odd_semiprime(z - x)
    if second is None:
        return UNDECIDED
    return Verdict(
        FilterId.THEOREM6,
        {
            "kind": "theorem6",
            "p1": first[0],
            "p2": first[1],
            "q1": second[0],
            "q2": second[1],
        },
    )


_FILTER_FUNCS: dict[FilterId, Callable[[Candidate, FilterConfig], Verdict]] = {
    FilterId.BOUNDARY: filter_boundary,
    FilterId.LEMMA3: filter_lemma3,
    FilterId.PARITY_RESIDUE: filter_parity_residue,
    FilterId.THEOREM1: filter_theorem1,
    FilterId.THEOREM2: filter_theorem2,
    FilterId.THEOREM3: filter_theorem3,
    FilterId.THEOREM4: filter_theorem4,
    FilterId.THEOREM5: filter_theorem5,
    FilterId.COROLLARY52: filter_cor52,
    FilterId.THEOREM6: filter_theorem6,
}


@lru_cache(maxsize=32)
def _enabled_in_order(enabled: frozenset) -> tuple[tuple[FilterId, Callable], ...]:
    return tuple((fid, _FILTER_FUNCS[fid]) for fid in FilterId if fid in enabled)


def run_pipeline(c: Candidate, cfg: FilterConfig, mode: str = FIRST_HIT) -> Attribution:
    """Evaluate the enabled filters on a primitive interior candidate.

    First-hit mode stops at the first elimination (filters run in FilterId
    order); full mode records every enabled filter's verdict.
    """
    if mode not in (FIRST_HIT, FULL):
        raise ValueError(f"unknown pipeline mode {mode!r}")
    if not is_primitive_interior(c):
        raise ValueError(f"candidate {c} is not primitive interior")
    entries = []
    for fid, func in _enabled_in_order(cfg.enabled):
        verdict = func(c, cfg)
        if mode == FIRST_HIT:
            if verdict.eliminated:
                return Attribution(c, mode, ((fid, verdict),))
        else:
            entries.append((fid, verdict))
    return Attribution(c, mode, tuple(entries))


def full_attribution(c: Candidate, cfg: FilterConfig) -> Attribution:
    """Full-mode verdicts of every filter (ignoring cfg.enabled), so that
    reports can explain near-misses of survivors."""
    return run_pipeline(c, _all_enabled(cfg), FULL)


@lru_cache(maxsize=32)
def _all_enabled(cfg: FilterConfig) -> FilterConfig:
    return replace(cfg, enabled=frozenset(FilterId))


def recheck_witness(c: Candidate, fid: FilterId, witness: dict) -> bool:
    """Re-derive an elimination witness from the candidate alone.

    Independent of the filter implementations: uses only arithmetic
    primitives, and the literal (not the fast) prime condition for the
    power-of-two shapes.
    """
    x, y, z = c
    kind = witness.get("kind")
    if fid is FilterId.BOUNDARY and kind == "boundary":
        return {
            "edge": x in (0, z) or y in (0, z),
            "midline": 2 * x == z or 2 * y == z,
            "diagonal": x == y or x + y == z,
        }.get(witness["tag"], False)
    if fid is FilterId.LEMMA3 and kind == "lemma3":
        d, n = witness["d"], witness["n"]
        return (
            d in (x, y, z - x, z - y)
            and d >= 1
            and n * d == z
            and is_prime(n)
            and is_prime(n * n + 4)
        )
    if fid is FilterId.PARITY_RESIDUE and kind == "parity":
        clause = witness["clause"]
        if clause == "one_odd_one_even":
            return x % 2 == y % 2
        if clause == "even_coordinate_mod_4":
            even = witness["value"]
            return even in (x, y) and even % 2 == 0 and even % 4 != 0
        if clause == "side_mod_12":
            return z % 12 != 0
        if clause == "corner_mod_3":
            a, b = _legs_at(c, witness["corner"])
            return [a, b] == witness["legs"] and a % 3 != 0 and b % 3 != 0
        return False
    if fid is FilterId.THEOREM1 and kind == "inequality":
        a, b = _legs_at(c, witness["corner"])
        val, other = (a, b) if witness["leg"] in ("x", "z-x") else (b, a)
        return (
            witness["lhs"] == val * val
            and witness["rhs"] == 2 * other + 1
            and val * val < 2 * other + 1
        )
    if fid is FilterId.THEOREM2 and kind == "congruence":
        p = witness["p"]
        a, b = _legs_at(c, witness["corner"])
        return (
            is_prime(p)
            and jacobi(2, p) == -1
            and [a, b] == witness["legs"]
            and (a - b) % p == 0
        )
    if fid is FilterId.THEOREM3 and kind == "prime":
        t = witness["value"]
        return t == _side_value(c, witness["side"]) and t % 2 == 1 and is_prime(t)
    if fid is FilterId.THEOREM4 and kind == "prime_power":
        p, e = witness["p"], witness["e"]
        return (
            is_prime(p)
            and jacobi(2, p) == -1
            and e >= 1
            and p**e == _side_value(c, witness["side"])
        )
    if fid is FilterId.THEOREM5 and kind == "shape5":
        t = witness["value"]
        if t != _side_value(c, witness["target"]):
            return False
        return _recheck_shape(t, witness["h"], witness["m"])
    if fid is FilterId.COROLLARY52 and kind == "cor52":
        t, q1, q2 = witness["value"], witness["q1"], witness["q2"]
        if t != _side_value(c, witness["target"]):
            return False
        if q1 * q2 != t or q1 <= q2 or q2 < 1 or q1 % 2 == 0 or q2 % 2 == 0:
            return False
        if jacobi(2, q1) != -1 or jacobi(2, q2) != -1:
            return False
        s = (q1 * q1 - q2 * q2) // 4
        return _recheck_shape(2 * s, witness["h"], witness["m"])
    if fid is FilterId.THEOREM6 and kind == "theorem6":
        p1, p2, q1, q2 = (witness[k] for k in ("p1", "p2", "q1", "q2"))
        return (
            p1 * p2 == x
            and q1 * q2 == z - x
            and p1 != p2
            and q1 != q2
            and all(
                t % 2 and is_prime(t) and jacobi(2, t) == -1 for t in (p1, p2, q1, q2)
            )
        )
    return False


def _recheck_shape(t: int, h: int, m: int) -> bool:
    if h < 1 or m < 1 or m % 2 == 0 or t != (1 << (h + 1)) * m or (1 << h) <= m:
        return False
    return all(shape5_prime_allowed_literal(p) for p, _ in factorize(m))


def _side_value(c: Candidate, side: str) -> int | None:
    return {"x": c.x, "y": c.y, "z-x": c.z - c.x, "z-y": c.z - c.y}.get(side)


def _legs_at(c: Candidate, corner: str) -> tuple[int, int]:
    legs = corner_legs(c)
    return dict(zip(CORNERS, legs))[corner]
