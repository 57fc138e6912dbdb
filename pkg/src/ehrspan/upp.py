"""Hilbert functions of finite point sets in weighted projective space.

A point set ``G`` in ``P(1^n, a_1..a_r)`` has Hilbert function
``h_G(l) = rank`` of the matrix that evaluates every degree-``l`` monomial at
every point.  Ranks are exact (fraction-free elimination), so the lab can
decide uniform position by brute force over subsets.

Uniform position is only checked up to the stabilization degree ``l_0``, the
least ``l`` with ``h_G(l) = #G``: from there on every subset ``G'`` has
``h_G'(l) = #G'`` (a restriction of a surjective evaluation map stays
surjective), so larger degrees cannot distinguish subsets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import lcm
from typing import Iterable, Sequence

from .constructions import SplitMix64
from .exact import nullspace, rank

EXHAUSTIVE_BOUND = 12
MIN_FORMULA_BOUND = 10


class HypothesisViolated(ValueError):
    """A bound was requested for a set that is not in uniform position."""


@dataclass(frozen=True)
class WeightedSpace:
    """``P(1, .., 1, a_1, .., a_r)`` with ``n`` weight-one variables."""

    n: int
    weights: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one weight-one variable")
        if any(a < 2 for a in self.weights):
            raise ValueError("extra weights must be >= 2")

    @property
    def all_weights(self) -> tuple[int, ...]:
        return (1,) * self.n + tuple(self.weights)

    @classmethod
    def from_weights(cls, weights: Sequence[int]) -> "WeightedSpace":
        weights = list(weights)
        n = 0
        while n < len(weights) and weights[n] == 1:
            n += 1
        return cls(n, tuple(weights[n:]))


def _as_fraction(x) -> Fraction:
    if isinstance(x, bool):
        raise ValueError("booleans are not coordinates")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise ValueError(f"cannot read {x!r} as an exact rational")


@dataclass(frozen=True)
class ProjectivePoint:
    """A point, stored with its first nonzero weight-one coordinate equal to 1."""

    space: WeightedSpace
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(_as_fraction(c) for c in self.coords)
        w = self.space.all_weights
        if len(coords) != len(w):
            raise ValueError(f"expected {len(w)} coordinates, got {len(coords)}")
        lead = next((c for c in coords[: self.space.n] if c != 0), None)
        if lead is None:
            raise ValueError("point has all weight-one coordinates zero")
        lam = 1 / lead
        object.__setattr__(self, "coords", tuple(c * lam**a for c, a in zip(coords, w)))

    def rescaled(self, lam: Fraction) -> tuple[Fraction, ...]:
        """Another representative ``(lam^w_i x_i)``, before normalization."""
        return tuple(c * lam**a for c, a in zip(self.coords, self.space.all_weights))


def weighted_monomial_basis(space: WeightedSpace, degree: int) -> list[tuple[int, ...]]:
    """Exponent vectors of total weighted degree ``degree``, lexicographic."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    w = space.all_weights
    out: list[tuple[int, ...]] = []

    def rec(i: int, left: int, prefix: tuple[int, ...]):
        if i == len(w) - 1:
            if left % w[i] == 0:
                out.append(prefix + (left // w[i],))
            return
        for e in range(left // w[i] + 1):
            rec(i + 1, left - e * w[i], prefix + (e,))

    rec(0, degree, ())
    return sorted(out)


def _evaluate(monomial: Sequence[int], coords: Sequence[Fraction]) -> Fraction:
    v = Fraction(1)
    for c, e in zip(coords, monomial):
        if e:
            v *= c**e
    return v


class ProjectivePointSet:
    """A finite set of distinct points in one weighted projective space."""

    def __init__(self, space: WeightedSpace, points: Iterable):
        self.space = space
        pts = [p if isinstance(p, ProjectivePoint) else ProjectivePoint(space, tuple(p)) for p in points]
        if not pts:
            raise ValueError("empty point set")
        if len({p.coords for p in pts}) != len(pts):
            raise ValueError("points are not pairwise distinct")
        self.points: tuple[ProjectivePoint, ...] = tuple(pts)
        self._matrices: dict[int, list[list[Fraction]]] = {}
        self._h: dict[tuple[tuple[int, ...], int], int] = {}

    def __len__(self) -> int:
        return len(self.points)

    def __repr__(self) -> str:
        return f"ProjectivePointSet({self.space.all_weights}, {[list(map(str, p.coords)) for p in self.points]})"

    def evaluation_matrix(self, degree: int) -> list[list[Fraction]]:
        """Rows are degree-``degree`` monomials, columns are points."""
        if degree not in self._matrices:
            monos = weighted_monomial_basis(self.space, degree)
            self._matrices[degree] = [[_evaluate(m, p.coords) for p in self.points] for m in monos]
        return self._matrices[degree]

    def subset_hilbert(self, subset: Sequence[int], degree: int) -> int:
        key = (tuple(subset), degree)
        if key not in self._h:
            M = self.evaluation_matrix(degree)
            self._h[key] = rank([[row[j] for j in subset] for row in M])
        return self._h[key]

    def hilbert(self, degree: int) -> int:
        return self.subset_hilbert(range(len(self)), degree)

    @cached_property
    def stabilization_degree(self) -> int:
        """Least ``l`` with ``h(l) = #points``."""
        # point separation needs at most degree lcm(weights) per point
        cap = len(self) * lcm(*self.space.all_weights) + 1
        for degree in range(cap + 1):
            if self.hilbert(degree) == len(self):
                return degree
        raise RuntimeError("Hilbert function did not reach the number of points")

    def to_json(self) -> dict:
        return {"weights": list(self.space.all_weights),
                "points": [[str(c) for c in p.coords] for p in self.points]}


def point_set_from_json(data: dict) -> ProjectivePointSet:
    try:
        weights, points = data["weights"], data["points"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed point-set JSON: missing {exc}") from None
    if not isinstance(weights, list) or not all(isinstance(a, int) for a in weights):
        raise ValueError("malformed point-set JSON: 'weights' must be an integer list")
    space = WeightedSpace.from_weights(weights)
    if space.n + len(space.weights) != len(weights):
        raise ValueError("weights must list the 1s first")
    if not isinstance(points, list) or not all(isinstance(p, list) for p in points):
        raise ValueError("malformed point-set JSON: 'points' must be a list of lists")
    return ProjectivePointSet(space, points)


def load_point_set(path) -> ProjectivePointSet:
    with open(path) as fh:
        return point_set_from_json(json.load(fh))


def hilbert_function(G: ProjectivePointSet, degree: int) -> int:
    """``h_G(degree)`` as the rank of the evaluation matrix."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    return G.hilbert(degree)


@dataclass(frozen=True)
class UppWitness:
    degree: int
    first: tuple[int, ...]
    second: tuple[int, ...]
    first_value: int
    second_value: int

    def to_json(self) -> dict:
        return {"degree": self.degree, "subsets": [list(self.first), list(self.second)],
                "values": [self.first_value, self.second_value]}


def is_uniform_position(G: ProjectivePointSet) -> tuple[bool, UppWitness | None]:
    """Decide uniform position by comparing all same-size subsets.

    Degrees run from 1 to the stabilization degree, subset sizes from 1 up;
    the first disagreement found is returned, so the witness has the least
    degree and then the least size.  Subsets are tuples of point indices.
    """
    N = len(G)
    if N > EXHAUSTIVE_BOUND:
        raise ValueError("exhaustive bound exceeded")
    for degree in range(1, G.stabilization_degree + 1):
        for size in range(1, N):
            subsets = list(combinations(range(N), size))
            ref = G.subset_hilbert(subsets[0], degree)
            for s in subsets[1:]:
                v = G.subset_hilbert(s, degree)
                if v != ref:
                    return False, UppWitness(degree, subsets[0], s, ref, v)
    return True, None


@dataclass(frozen=True)
class UppBoundReport:
    i: int
    j: int
    lhs: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs >= self.rhs

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "lhs": self.lhs, "rhs": self.rhs, "pass": self.passed}


def check_upp_bound(G: ProjectivePointSet, i: int, j: int) -> UppBoundReport:
    """``h(i+j) >= min(#G, h(i) + h(j) - 1)`` for a set in uniform position."""
    if i < 0 or j < 0:
        raise ValueError("degrees must be nonnegative")
    ok, _ = is_uniform_position(G)
    if not ok:
        raise HypothesisViolated("hypothesis violated: point set is not in uniform position")
    return UppBoundReport(i, j, G.hilbert(i + j), min(len(G), G.hilbert(i) + G.hilbert(j) - 1))


@dataclass(frozen=True)
class MinFormulaReport:
    uniform_position: bool
    min_formula: bool
    upp_witness: UppWitness | None
    min_formula_witness: tuple[tuple[int, ...], int, int, int] | None

    @property
    def agree(self) -> bool:
        return self.uniform_position == self.min_formula

    def to_json(self) -> dict:
        w = self.min_formula_witness
        return {
            "uniform_position": self.uniform_position,
            "min_formula": self.min_formula,
            "agree": self.agree,
            "upp_witness": self.upp_witness.to_json() if self.upp_witness else None,
            "min_formula_witness": None if w is None else
            {"subset": list(w[0]), "degree": w[1], "value": w[2], "expected": w[3]},
        }


def check_min_formula(G: ProjectivePointSet) -> MinFormulaReport:
    """Evaluate both characterizations of uniform position independently.

    The min-formula side asks whether ``h_G'(l) = min(h_G(l), #G')`` for every
    nonempty subset ``G'`` and every ``l <= l_0``; the first failing subset
    (by size, then lexicographically) is the witness.
    """
    N = len(G)
    if N > MIN_FORMULA_BOUND:
        raise ValueError("exhaustive bound exceeded")
    upp, upp_witness = is_uniform_position(G)
    witness = None
    for degree in range(1, G.stabilization_degree + 1):
        full = G.hilbert(degree)
        for size in range(1, N + 1):
            for s in combinations(range(N), size):
                v = G.subset_hilbert(s, degree)
                if v != min(full, size):
                    witness = (s, degree, v, min(full, size))
                    break
            if witness:
                break
        if witness:
            break
    return MinFormulaReport(upp, witness is None, upp_witness, witness)


def separating_form(G: ProjectivePointSet, subset: Sequence[int], point: int, degree: int) -> list[Fraction] | None:
    """Coefficients of a degree-``degree`` form vanishing on ``subset`` minus
    ``point`` but not at ``point``, or None if no such form exists.
    """
    M = G.evaluation_matrix(degree)
    others = [q for q in subset if q != point]
    nmono = len(M)
    # one row per point to vanish at; unknowns are the monomial coefficients
    rows = [[M[m][q] for m in range(nmono)] for q in others]
    for vec in nullspace(rows, nmono) if rows else [[Fraction(int(i == k)) for i in range(nmono)]
                                                      for k in range(nmono)]:
        if sum(c * M[m][point] for m, c in enumerate(vec)) != 0:
            return vec
    return None


def random_point_set(rng: SplitMix64, space: WeightedSpace, size: int, bound: int = 2) -> ProjectivePointSet:
    """Distinct random points with coordinates ``a/b``, ``|a| <= bound``, ``b in {1, 2}``."""
    pts: list[ProjectivePoint] = []
    seen = set()
    width = space.n + len(space.weights)
    attempts = 0
    while len(pts) < size:
        attempts += 1
        if attempts > 1000 * size:
            raise RuntimeError("degenerate draw")
        coords = [Fraction(rng.integer(-bound, bound), rng.integer(1, 2)) for _ in range(width)]
        if not any(coords[: space.n]):
            continue
        p = ProjectivePoint(space, tuple(coords))
        if p.coords in seen:
            continue
        seen.add(p.coords)
        pts.append(p)
    return ProjectivePointSet(space, pts)
