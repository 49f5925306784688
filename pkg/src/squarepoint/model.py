"""Candidate points inside an integer-sided square and their vertex distances.

The square of side z has corners A=(0,0), B=(0,z), C=(z,z), D=(z,0); a
candidate P=(x,y) measures x to the side through A and B and y to the side
through A and D.  All reports use the fixed corner order A, B, C, D.
"""

from __future__ import annotations

from math import gcd
from typing import Iterator, NamedTuple

from .arith import isqrt

CORNERS = ("A", "B", "C", "D")


class Candidate(NamedTuple):
    x: int
    y: int
    z: int

    @property
    def is_interior(self) -> bool:
        return 0 < self.x < self.z and 0 < self.y < self.z

    @property
    def is_primitive(self) -> bool:
        return gcd(self.x, self.y, self.z) == 1


class CornerLegs(NamedTuple):
    """Axis-parallel leg pairs at each corner, in A, B, C, D order."""

    a: tuple[int, int]
    b: tuple[int, int]
    c: tuple[int, int]
    d: tuple[int, int]


class DistanceProfile(NamedTuple):
    """Squared corner distances and their exact roots where square (A, B, C, D)."""

    squared: tuple[int, int, int, int]
    roots: tuple[int | None, int | None, int | None, int | None]

    @property
    def integer_count(self) -> int:
        return sum(r is not None for r in self.roots)


def _check_bounds(c: Candidate) -> None:
    if c.z < 1 or not (0 <= c.x <= c.z and 0 <= c.y <= c.z):
        raise ValueError(f"candidate {c} outside its square")


def corner_legs(c: Candidate) -> CornerLegs:
    """Leg pairs (x,y), (x,z-y), (z-x,z-y), (z-x,y) at corners A, B, C, D."""
    _check_bounds(c)
    x, y, z = c
    return CornerLegs((x, y), (x, z - y), (z - x, z - y), (z - x, y))


def distance_profile(c: Candidate) -> DistanceProfile:
    """Exact squared distances to the four corners, with roots where square."""
    legs = corner_legs(c)
    squared = []
    roots = []
    for a, b in legs:
        s = a * a + b * b
        r, exact = isqrt(s)
        squared.append(s)
        roots.append(r if exact else None)
    return DistanceProfile(tuple(squared), tuple(roots))


def orbit(c: Candidate) -> set[Candidate]:
    """Images of c under the square's symmetries (reflections and the swap)."""
    _check_bounds(c)
    x, y, z = c
    pts = set()
    for a in (x, z - x):
        for b in (y, z - y):
            pts.add((a, b))
            pts.add((b, a))
    return {Candidate(a, b, z) for a, b in pts}


def _canonical_xy(x: int, y: int, z: int) -> tuple[int, int]:
    best = None
    best_any = None
    for a in (x, z - x):
        for b in (y, z - y):
            for p in ((a, b), (b, a)):
                if best_any is None or p < best_any:
                    best_any = p
                if p[0] % 2 and (best is None or p < best):
                    best = p
    return best if best is not None else best_any


def canonicalize(c: Candidate) -> Candidate:
    """The designated orbit representative.

    Images with odd x are preferred (mirroring the normalization that the
    odd coordinate comes first); among those, the lexicographically least
    (x, y) wins.  Idempotent and constant on orbits.
    """
    _check_bounds(c)
    return Candidate(*_canonical_xy(c.x, c.y, c.z), c.z)


def is_primitive_interior(c: Candidate) -> bool:
    """True iff 0 < x < z, 0 < y < z and gcd(x, y, z) = 1."""
    return 0 < c.x < c.z and 0 < c.y < c.z and gcd(c.x, c.y, c.z) == 1


def canonical_interior_pairs(z: int) -> Iterator[tuple[int, int]]:
    """Yield the (x, y) of every canonical interior point of the square of
    side z, ascending in (x, y).  Primitivity is NOT filtered here.

    Derived from canonicalize(): for even z the representatives are exactly
    (x odd, 2x <= z, y even, 2y <= z) plus (x, y same parity, x <= y,
    2y <= z); for odd z they are (x, y odd, x <= y, 2y < z) plus (x odd,
    y even, 2y < z, x <= z - y).  Verified against the orbit partition in
    tests.  (Same-parity pairs with x, y even are orbit representatives
    too, though never primitive when z is even.)
    """
    if z < 2:
        return
    if z % 2 == 0:
        half = z // 2
        for x in range(1, half + 1):
            if x % 2:
                same_parity_ys = range(x, half + 1, 2)
                even_ys = range(2, half + 1, 2)
                for y in sorted([*same_parity_ys, *even_ys]):
                    yield x, y
            else:
                for y in range(x, half + 1, 2):
                    yield x, y
    else:
        ymax = (z - 1) // 2  # 2y < z
        for x in range(1, z - 1, 2):
            odd_ys = range(x, ymax + 1, 2) if x <= ymax else range(0)
            even_ys = range(2, min(ymax, z - x) + 1, 2)
            for y in sorted([*odd_ys, *even_ys]):
                yield x, y
