"""Lattice polytopes: vertex normalization, facets, lattice points in dilates.

All arithmetic is on Python integers.  Facets are found by brute force over
d-subsets of the input points, which is fine at the intended scale
(dimension at most 5, a few dozen points).
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .exact import determinant, primitive, rank

Point = tuple[int, ...]
Facet = tuple[Point, int]


class DegeneratePolytopeError(ValueError):
    """The input points do not span the ambient space affinely."""


class RedundantPointWarning(UserWarning):
    """Input contained duplicate points or points that are not vertices."""


def affine_dimension(points: Sequence[Sequence[int]]) -> int:
    """Rank of the difference vectors ``p_i - p_0``."""
    if len(points) == 0:
        raise ValueError("no points")
    p0 = points[0]
    diffs = [[a - b for a, b in zip(p, p0)] for p in points[1:]]
    return rank(diffs)


def _hyperplane_normal(base: Sequence[Point]) -> Point:
    """Integer normal of the affine hull of ``d`` points in Z^d.

    This is the generalized cross product of the ``d - 1`` difference
    vectors: component ``k`` is the signed minor with column ``k`` removed.
    A zero vector means the points are affinely dependent.
    """
    p0 = base[0]
    d = len(p0)
    diffs = [[a - b for a, b in zip(p, p0)] for p in base[1:]]
    normal = []
    for k in range(d):
        minor = [row[:k] + row[k + 1:] for row in diffs]
        normal.append((-1) ** k * determinant(minor))
    return primitive(normal)


def _facets_of(points: Sequence[Point], d: int) -> list[Facet]:
    found: set[Facet] = set()
    for base in combinations(points, d):
        normal = _hyperplane_normal(base)
        if not any(normal):
            continue
        offset = sum(a * x for a, x in zip(normal, base[0]))
        values = [sum(a * x for a, x in zip(normal, p)) for p in points]
        if all(v <= offset for v in values):
            found.add((normal, offset))
        elif all(v >= offset for v in values):
            found.add((tuple(-a for a in normal), -offset))
    return sorted(found)


@dataclass(frozen=True)
class HalfspaceRep:
    """Irredundant facet list; each entry ``(a, b)`` means ``<a, x> <= b``."""

    facets: tuple[Facet, ...]

    def contains(self, x: Sequence[int], k: int = 1) -> bool:
        return all(sum(a * xi for a, xi in zip(n, x)) <= k * b for n, b in self.facets)

    def contains_strictly(self, x: Sequence[int], k: int = 1) -> bool:
        return all(sum(a * xi for a, xi in zip(n, x)) < k * b for n, b in self.facets)


@dataclass(frozen=True)
class LatticePolytope:
    """A full-dimensional lattice polytope given by its vertices.

    The constructor accepts any finite point list.  Duplicates and points that
    are not vertices of the convex hull are dropped with a
    :class:`RedundantPointWarning`; the stored vertices are sorted
    lexicographically, so two polytopes compare equal iff they have the same
    vertex set.
    """

    ambient_dim: int
    vertices: tuple[Point, ...]
    _hrep: HalfspaceRep = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        d = self.ambient_dim
        if d < 1:
            raise ValueError("ambient dimension must be positive")
        pts = [tuple(int(x) for x in p) for p in self.vertices]
        if not pts:
            raise ValueError("no points")
        if any(len(p) != d for p in pts):
            raise ValueError(f"every point must have {d} coordinates")
        unique = sorted(set(pts))
        if len(unique) < len(pts):
            warnings.warn(f"dropped {len(pts) - len(unique)} duplicate point(s)",
                          RedundantPointWarning, stacklevel=3)
        if affine_dimension(unique) != d:
            raise DegeneratePolytopeError("degenerate polytope")
        facets = _facets_of(unique, d)
        verts = [p for p in unique if _is_vertex(p, facets, d)]
        if len(verts) < len(unique):
            warnings.warn(f"dropped {len(unique) - len(verts)} non-vertex point(s)",
                          RedundantPointWarning, stacklevel=3)
            facets = _facets_of(verts, d)
        object.__setattr__(self, "vertices", tuple(verts))
        object.__setattr__(self, "_hrep", HalfspaceRep(tuple(facets)))

    @classmethod
    def from_points(cls, points: Iterable[Sequence[int]]) -> "LatticePolytope":
        pts = [tuple(p) for p in points]
        if not pts:
            raise ValueError("no points")
        return cls(len(pts[0]), tuple(pts))

    @property
    def dim(self) -> int:
        return self.ambient_dim

    def to_json(self) -> dict:
        return {"dim": self.ambient_dim, "vertices": [list(v) for v in self.vertices]}

    def transform(self, matrix: Sequence[Sequence[int]], shift: Sequence[int] | None = None) -> "LatticePolytope":
        """Image under ``x -> matrix @ x + shift``."""
        shift = shift or [0] * self.ambient_dim
        image = [tuple(sum(a * x for a, x in zip(row, v)) + t for row, t in zip(matrix, shift))
                 for v in self.vertices]
        return LatticePolytope(len(matrix), tuple(image))


def _is_vertex(p: Point, facets: Sequence[Facet], d: int) -> bool:
    tight = [n for n, b in facets if sum(a * x for a, x in zip(n, p)) == b]
    return len(tight) >= d and rank(tight) == d


def polytope_from_json(data: dict) -> LatticePolytope:
    """Build a polytope from the ``{"dim": d, "vertices": [...]}`` format."""
    try:
        d = data["dim"]
        rows = data["vertices"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed polytope JSON: missing {exc}") from None
    if not isinstance(d, int) or not isinstance(rows, list):
        raise ValueError("malformed polytope JSON: 'dim' must be an int, 'vertices' a list")
    for row in rows:
        if not isinstance(row, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in row):
            raise ValueError("malformed polytope JSON: vertices must be integer lists")
    return LatticePolytope(d, tuple(tuple(r) for r in rows))


def load_polytope(path) -> LatticePolytope:
    with open(path) as fh:
        return polytope_from_json(json.load(fh))


def facet_representation(P: LatticePolytope) -> HalfspaceRep:
    """Complete irredundant facet list, sorted by normal then offset."""
    return P._hrep


def _box(P: LatticePolytope, k: int) -> tuple[list[int], list[int]]:
    lo = [k * min(v[i] for v in P.vertices) for i in range(P.ambient_dim)]
    hi = [k * max(v[i] for v in P.vertices) for i in range(P.ambient_dim)]
    return lo, hi


def _scan(P: LatticePolytope, k: int) -> Iterator[tuple[tuple[int, ...], int, int]]:
    """Yield ``(prefix, lo, hi)`` such that the points ``prefix + (t,)``,
    ``lo <= t <= hi``, are exactly ``kP`` cap ``Z^d`` in permuted coordinates.

    Coordinates are fixed one at a time inside the scaled bounding box, the
    widest one last; the admissible range of each coordinate is cut down by
    every facet, using the least value the remaining coordinates could
    contribute within the box.  See :func:`_scan_order` for the permutation.
    """
    d = P.ambient_dim
    order = _scan_order(P)
    facets = [(tuple(n[i] for i in order), k * b) for n, b in P._hrep.facets]
    lo0, hi0 = _box(P, k)
    lo = [lo0[i] for i in order]
    hi = [hi0[i] for i in order]
    # rest[f][i]: smallest possible sum_{t >= i} a_t x_t over the box
    rest = []
    for n, _ in facets:
        suffix = [0] * (d + 1)
        for i in range(d - 1, -1, -1):
            suffix[i] = suffix[i + 1] + min(n[i] * lo[i], n[i] * hi[i])
        rest.append(suffix)

    def rec(i: int, prefix: tuple[int, ...], partial: list[int]):
        a, b = lo[i], hi[i]
        for f, (n, rhs) in enumerate(facets):
            c = n[i]
            slack = rhs - partial[f] - rest[f][i + 1]
            if c > 0:
                b = min(b, slack // c)
            elif c < 0:
                a = max(a, -(slack // -c))
            elif slack < 0:
                return
            if a > b:
                return
        if i == d - 1:
            yield prefix, a, b
            return
        for x in range(a, b + 1):
            yield from rec(i + 1, prefix + (x,),
                           [s + n[i] * x for s, (n, _) in zip(partial, facets)])

    yield from rec(0, (), [0] * len(facets))


def _scan_order(P: LatticePolytope) -> list[int]:
    widths = [max(v[i] for v in P.vertices) - min(v[i] for v in P.vertices) for i in range(P.ambient_dim)]
    return sorted(range(P.ambient_dim), key=lambda i: (widths[i], i))


def lattice_points_in_dilate(P: LatticePolytope, k: int) -> frozenset[Point]:
    """The set ``kP`` cap ``Z^d``; ``k = 0`` gives the origin only."""
    if k < 0:
        raise ValueError("dilation factor must be nonnegative")
    if k == 0:
        return frozenset({(0,) * P.ambient_dim})
    inverse = [0] * P.ambient_dim
    for pos, i in enumerate(_scan_order(P)):
        inverse[i] = pos
    return frozenset(tuple((prefix + (t,))[j] for j in inverse)
                     for prefix, a, b in _scan(P, k) for t in range(a, b + 1))


def count_lattice_points_in_dilate(P: LatticePolytope, k: int) -> int:
    """``#(kP`` cap ``Z^d)`` without materializing the points."""
    if k < 0:
        raise ValueError("dilation factor must be nonnegative")
    if k == 0:
        return 1
    return sum(b - a + 1 for _, a, b in _scan(P, k))


def lattice_points(P: LatticePolytope) -> list[Point]:
    """Lattice points of ``P`` in lexicographic order."""
    return sorted(lattice_points_in_dilate(P, 1))


def interior_lattice_points(P: LatticePolytope) -> list[Point]:
    return [p for p in lattice_points(P) if P._hrep.contains_strictly(p)]
