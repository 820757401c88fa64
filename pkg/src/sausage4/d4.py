"""Exact integer model of the scaled D4 lattice and the truncated 24-cell.

Scaling: minimal lattice distance 2, so lattice points are unit-ball centers.
A point is in D4 iff its four integer coordinates share one parity.  The
24-cell Y_m is the intersection of the 24 half-spaces n.x <= 2m where n runs
over the signed permutations of (1,1,0,0); truncating facet i by h_i layers
tightens its bound to n.x <= 2(m - h_i).  Facets 1, 16 and 17 (the pairwise
disjoint triple that gets truncated) are pinned to the normals derived from
their vertex sets; a few neighbours are pinned likewise, the rest of the
numbering is arbitrary.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError, ResourceError, VerificationFailure

ORACLE_CAP_DEFAULT = 17

_PINNED: dict[tuple[int, int, int, int], int] = {
    (1, 1, 0, 0): 1,
    (1, 0, 0, 1): 2,
    (1, 0, 1, 0): 3,
    (1, -1, 0, 0): 10,
    (-1, 0, -1, 0): 16,
    (0, -1, 1, 0): 17,
}


def is_d4_point(x) -> bool:
    """True iff the 4 integer coordinates are all even or all odd."""
    x = tuple(int(v) for v in x)
    if len(x) != 4:
        raise DomainError("D4 points have exactly 4 coordinates")
    p = x[0] & 1
    return all((v & 1) == p for v in x)


@dataclass(frozen=True)
class FacetNormal:
    """Integer normal n = sqrt(2) * (unit outward normal) of facet `index`."""

    index: int
    n: tuple[int, int, int, int]


@lru_cache(maxsize=1)
def facet_normals() -> tuple[FacetNormal, ...]:
    """All 24 facet normals, indexed 1..24 with the pinned assignments."""
    all_normals = []
    for i, j in itertools.combinations(range(4), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            n = [0, 0, 0, 0]
            n[i], n[j] = si, sj
            all_normals.append(tuple(n))
    free = sorted(n for n in all_normals if n not in _PINNED)
    free_indices = [i for i in range(1, 25) if i not in _PINNED.values()]
    table = dict(_PINNED)
    table.update(zip(free, free_indices))
    out = sorted((FacetNormal(idx, n) for n, idx in table.items()), key=lambda f: f.index)
    assert len(out) == 24
    return tuple(out)


@dataclass(frozen=True)
class Truncation:
    """A truncated 24-cell: scale m, layers (h1, h16, h17) off facets 1/16/17."""

    m: int
    h: tuple[int, int, int]

    def __post_init__(self):
        if self.m < 1:
            raise DomainError("m must be a positive integer")
        if len(self.h) != 3 or any(v < 0 for v in self.h):
            raise DomainError("h must be three nonnegative integers")
        cap = (self.m - 1) // 2
        if any(v > cap for v in self.h):
            raise DomainError(
                f"h={self.h} leaves the three truncations overlapping; "
                f"disjointness requires h_i <= {cap} at m={self.m}"
            )

    @property
    def is_untruncated(self) -> bool:
        return self.h == (0, 0, 0)

    def canonical(self) -> "Truncation":
        return Truncation(self.m, tuple(sorted(self.h)))

    def moments(self) -> tuple[int, int, int, int]:
        """Power sums sum(h_i^k) for k = 1..4; the formulas depend only on these."""
        return tuple(sum(v**k for v in self.h) for k in (1, 2, 3, 4))


def _parity_box_points(m: int) -> np.ndarray:
    """All D4 points in [-2m, 2m]^4 (even and odd parity classes)."""
    even = np.arange(-m, m + 1, dtype=np.int64) * 2
    odd = np.arange(-m, m, dtype=np.int64) * 2 + 1
    blocks = []
    for ax in (even, odd):
        grid = np.meshgrid(ax, ax, ax, ax, indexing="ij")
        blocks.append(np.stack([g.ravel() for g in grid], axis=1))
    return np.concatenate(blocks)


def count_lattice_points(spec: Truncation, cap: int = ORACLE_CAP_DEFAULT) -> int:
    """Brute-force |t_h^3(Y_m) ∩ D4| by integer enumeration over the box.

    This is the ground-truth oracle for the closed-form count: every candidate
    is tested against all 24 facet inequalities in exact int64 arithmetic.
    """
    if spec.m > cap:
        raise ResourceError(
            f"m={spec.m} exceeds the enumeration cap {cap}; "
            f"the box holds {(4 * spec.m + 1) ** 4} candidates"
        )
    h_by_index = {1: spec.h[0], 16: spec.h[1], 17: spec.h[2]}
    pts = _parity_box_points(spec.m)
    keep = np.ones(len(pts), dtype=bool)
    for facet in facet_normals():
        bound = 2 * (spec.m - h_by_index.get(facet.index, 0))
        keep &= pts @ np.array(facet.n, dtype=np.int64) <= bound
    return int(np.count_nonzero(keep))


def enumerate_lattice_points(spec: Truncation, cap: int = ORACLE_CAP_DEFAULT) -> np.ndarray:
    """The actual point set behind `count_lattice_points` (for small m)."""
    if spec.m > cap:
        raise ResourceError(f"m={spec.m} exceeds the enumeration cap {cap}")
    h_by_index = {1: spec.h[0], 16: spec.h[1], 17: spec.h[2]}
    pts = _parity_box_points(spec.m)
    keep = np.ones(len(pts), dtype=bool)
    for facet in facet_normals():
        bound = 2 * (spec.m - h_by_index.get(facet.index, 0))
        keep &= pts @ np.array(facet.n, dtype=np.int64) <= bound
    return pts[keep]


def _sq_dist(a, b) -> int:
    return sum((x - y) ** 2 for x, y in zip(a, b))


@dataclass(frozen=True)
class RepresentativeReport:
    m: int
    h: int
    checks: tuple[str, ...]


def check_representative_points(m: int, h: int) -> RepresentativeReport:
    """Exact-integer verification of the representative membership claims.

    Verifies, on the cut facet at depth h: (1) the representative vertex lies
    in D4 on the cut hyperplane; (2) each new edge type carries a D4 point at
    distance 2 from its vertex; (3) the square face holds a side-2 lattice
    square and the hexagonal face a side-2 equilateral lattice triangle.
    Raises VerificationFailure naming the first failed claim.

    Valid for 1 <= h <= m (single-facet truncation range; the triple
    truncation only ever uses h <= (m-1)/2).
    """
    if not (1 <= h <= m):
        raise DomainError("representative checks require 1 <= h <= m")
    done = []

    def need(cond: bool, claim: str):
        if not cond:
            raise VerificationFailure(f"representative-point check failed: {claim}")
        done.append(claim)

    v0 = (2 * m - h, -h, h, -h)
    need(is_d4_point(v0), "claim1: cut vertex in D4")
    need(v0[0] + v0[1] == 2 * (m - h), "claim1: cut vertex on the facet hyperplane")

    # claim 2, square-type edge: from v0 toward (2m-h, -h, h, h)
    v1 = (2 * m - h, -h, h, h)
    vsq = (2 * m - h, -h, h, 2 - h)
    need(is_d4_point(v1), "claim2: square-edge far vertex in D4")
    need(is_d4_point(vsq), "claim2: square-edge interior point in D4")
    need(-h <= 2 - h <= h, "claim2: square-edge interior point on the edge")
    need(_sq_dist(vsq, v0) == 4, "claim2: square-edge point at distance 2")

    # claim 2, hexagon-type edge: from v0 toward (m, m-2h, m, -m)
    w1 = (m, m - 2 * h, m, -m)
    whex = (2 * m - h - 1, 1 - h, h + 1, -h - 1)
    need(is_d4_point(whex), "claim2: hexagon-edge interior point in D4")
    step = tuple(a - b for a, b in zip(whex, v0))
    span = tuple(a - b for a, b in zip(w1, v0))
    need(
        m - h >= 1 and all(s * (m - h) == t for s, t in zip(step, span)),
        "claim2: hexagon-edge point is 1/(m-h) along the edge",
    )
    need(_sq_dist(whex, v0) == 4, "claim2: hexagon-edge point at distance 2")

    # claim 3, square face: side-2 lattice square
    sq = [
        (2 * m - h, -h, h, h),
        (2 * m - h, -h, h, h - 2),
        (2 * m - h, -h, h - 2, h),
        (2 * m - h, -h, h - 2, h - 2),
    ]
    need(all(is_d4_point(p) for p in sq), "claim3: square corners in D4")
    need(
        _sq_dist(sq[0], sq[1]) == 4 and _sq_dist(sq[0], sq[2]) == 4
        and _sq_dist(sq[1], sq[3]) == 4 and _sq_dist(sq[2], sq[3]) == 4
        and _sq_dist(sq[0], sq[3]) == 8 and _sq_dist(sq[1], sq[2]) == 8,
        "claim3: square has side 2 and diagonal 2*sqrt(2)",
    )

    # claim 3, hexagonal face: side-2 equilateral lattice triangle
    t0 = (2 * m - h, -h, h, h)
    t1 = (2 * m - h - 1, 1 - h, h + 1, h + 1)
    t2 = (2 * m - h - 1, 1 - h, h + 1, h - 1)
    need(all(is_d4_point(p) for p in (t0, t1, t2)), "claim3: triangle vertices in D4")
    need(
        _sq_dist(t0, t1) == 4 and _sq_dist(t1, t2) == 4 and _sq_dist(t0, t2) == 4,
        "claim3: triangle equilateral with side 2",
    )

    return RepresentativeReport(m=m, h=h, checks=tuple(done))
