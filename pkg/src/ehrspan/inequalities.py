"""Checkers for the h*-vector inequality families.

Every checker records all violations, each as ``(params, lhs, rhs)`` with the
claim being ``lhs <= rhs``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .ehrhart import HStarVector, has_interior_lattice_point, hstar_vector
from .geometry import LatticePolytope
from .lattice import coarsen, spanning_index

FAMILIES = ("stanley", "strong", "hibi", "spc_i1", "no_internal_zeros")


@dataclass(frozen=True)
class Violation:
    params: tuple[int, ...]
    lhs: int
    rhs: int


@dataclass(frozen=True)
class InequalityReport:
    family: str
    violations: tuple[Violation, ...]
    degree: int
    dim: int
    spanning: bool | None = None
    applicable: bool = True
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "pass": self.passed,
            "applicable": self.applicable,
            "violations": [{"params": list(v.params), "lhs": v.lhs, "rhs": v.rhs}
                           for v in self.violations],
            "context": {"degree": self.degree, "dim": self.dim, "spanning": self.spanning, **self.extra},
        }


def check_stanley(h: HStarVector, spanning: bool | None = None) -> InequalityReport:
    """``h*_0 + .. + h*_i <= h*_{s-i} + .. + h*_s`` for ``0 <= i <= s/2``."""
    s = h.degree
    bad = []
    for i in range(s // 2 + 1):
        lhs = sum(h[: i + 1])
        rhs = sum(h[s - i: s + 1])
        if lhs > rhs:
            bad.append(Violation((i,), lhs, rhs))
    return InequalityReport("stanley", tuple(bad), s, h.dim, spanning)


def check_strong(h: HStarVector, spanning: bool | None = None) -> InequalityReport:
    """``h*_1 + .. + h*_i <= h*_{j+1} + .. + h*_{j+i}`` for ``i >= 1, j >= 0, i + j < s``."""
    s = h.degree
    bad = []
    for i in range(1, s):
        for j in range(0, s - i):
            lhs = sum(h[1: i + 1])
            rhs = sum(h[j + 1: j + i + 1])
            if lhs > rhs:
                bad.append(Violation((i, j), lhs, rhs))
    return InequalityReport("strong", tuple(bad), s, h.dim, spanning)


def check_lower_bounds(P: LatticePolytope) -> list[InequalityReport]:
    """The three lower-bound families for a polytope.

    ``spc_i1``: ``h*_1 <= h*_j`` for ``1 <= j < deg(coarsen(P))``, always.
    ``hibi``: ``h*_1 <= h*_j`` for ``1 <= j < d``, if ``P`` has an interior
    lattice point.  ``no_internal_zeros``: ``1 <= h*_j`` for ``0 <= j <= s``,
    if ``P`` is spanning.  Families whose hypothesis fails are reported with
    ``applicable=False`` and no violations.
    """
    h = hstar_vector(P)
    d, s = h.dim, h.degree
    spanning = spanning_index(P).spanning
    coarse_deg = hstar_vector(coarsen(P)).degree

    spc = [Violation((j,), h[1], h[j]) for j in range(1, coarse_deg) if h[1] > h[j]]
    reports = [InequalityReport("spc_i1", tuple(spc), s, d, spanning,
                                extra={"coarsened_degree": coarse_deg})]

    interior = has_interior_lattice_point(P)
    hibi = [Violation((j,), h[1], h[j]) for j in range(1, d) if h[1] > h[j]] if interior else []
    reports.append(InequalityReport("hibi", tuple(hibi), s, d, spanning, applicable=interior,
                                    extra={"interior_point": interior}))

    zeros = [Violation((j,), 1, h[j]) for j in range(s + 1) if h[j] < 1] if spanning else []
    reports.append(InequalityReport("no_internal_zeros", tuple(zeros), s, d, spanning,
                                    applicable=spanning))
    return reports
