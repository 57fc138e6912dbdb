"""Ehrhart polynomial and h*-vector of a lattice polytope."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .exact import solve
from .geometry import LatticePolytope, count_lattice_points_in_dilate, facet_representation, lattice_points


class InterpolationMismatch(RuntimeError):
    """The interpolated polynomial disagrees with a direct count."""


class HStarTransformError(RuntimeError):
    """The h* transform produced a negative or non-integral entry."""


@dataclass(frozen=True)
class EhrhartPolynomial:
    coefficients: tuple[Fraction, ...]

    def __call__(self, k: int) -> Fraction:
        return sum((c * k**i for i, c in enumerate(self.coefficients)), Fraction(0))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def normalized_volume(self) -> int:
        return int(self.coefficients[-1] * factorial(self.degree))

    def __str__(self) -> str:
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            coef = str(c) if (c != 1 or i == 0) else ""
            terms.append(f"({coef}){mono}" if "/" in coef else f"{coef}{mono}")
        return " + ".join(terms) or "0"


@dataclass(frozen=True)
class HStarVector:
    """h*-coefficients ``h*_0 .. h*_d`` stored at full length ``d + 1``."""

    coeffs: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        return max(i for i, h in enumerate(self.coeffs) if h != 0)

    @property
    def normalized_volume(self) -> int:
        return sum(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def ehrhart_value(self, k: int) -> int:
        """``ehr(k) = sum_i h*_i C(k + d - i, d)``."""
        d = self.dim
        return sum(h * comb(k + d - i, d) for i, h in enumerate(self.coeffs) if k + d - i >= 0)


@lru_cache(maxsize=4096)
def _counts(P: LatticePolytope, kmax: int) -> tuple[int, ...]:
    return tuple(count_lattice_points_in_dilate(P, k) for k in range(kmax + 1))


def ehrhart_counts(P: LatticePolytope) -> tuple[int, ...]:
    """``(ehr(0), ..., ehr(d))`` by direct enumeration."""
    return _counts(P, P.ambient_dim)


def ehrhart_polynomial(P: LatticePolytope) -> EhrhartPolynomial:
    """Interpolate through ``(k, ehr(k))`` for ``k = 0..d``.

    The result is always checked against direct counts at ``k = d+1`` and
    ``k = d+2``.
    """
    d = P.ambient_dim
    counts = _counts(P, d + 2)
    vandermonde = [[k**i for i in range(d + 1)] for k in range(d + 1)]
    coeffs = tuple(solve(vandermonde, counts[: d + 1]))
    poly = EhrhartPolynomial(coeffs)
    for k in (d + 1, d + 2):
        if poly(k) != counts[k]:
            raise InterpolationMismatch(
                f"interpolation mismatch at k={k}: polynomial gives {poly(k)}, count is {counts[k]}")
    return poly


def hstar_from_counts(counts: tuple[int, ...], d: int) -> tuple[int, ...]:
    """``h*_i = sum_{j<=i} (-1)^j C(d+1, j) ehr(i - j)`` for ``i = 0..d``."""
    return tuple(sum((-1) ** j * comb(d + 1, j) * counts[i - j] for j in range(i + 1))
                 for i in range(d + 1))


def hstar_vector(P: LatticePolytope) -> HStarVector:
    d = P.ambient_dim
    poly = ehrhart_polynomial(P)
    h = hstar_from_counts(_counts(P, d), d)
    if h[0] != 1 or any(x < 0 for x in h):
        raise HStarTransformError(f"h* transform failed: {h}")
    if sum(h) != poly.coefficients[-1] * factorial(d):
        raise HStarTransformError(f"h* transform failed: sum {sum(h)} != normalized volume")
    return HStarVector(h)


def normalized_volume(P: LatticePolytope) -> int:
    return hstar_vector(P).normalized_volume


def has_interior_lattice_point(P: LatticePolytope) -> bool:
    hrep = facet_representation(P)
    return any(hrep.contains_strictly(p) for p in lattice_points(P))
