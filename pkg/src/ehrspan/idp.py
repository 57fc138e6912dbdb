"""Integer decomposition property by incremental Minkowski sums of lattice points."""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import LatticePolytope, Point, lattice_points, lattice_points_in_dilate


@dataclass(frozen=True)
class IdpVerdict:
    is_idp: bool
    checked_up_to: int
    counterexample: tuple[int, Point] | None = None

    def to_json(self) -> dict:
        out = {"is_idp": self.is_idp, "checked_up_to": self.checked_up_to, "counterexample": None}
        if self.counterexample is not None:
            k, x = self.counterexample
            out["counterexample"] = {"k": k, "point": list(x)}
        return out


def default_kmax(P: LatticePolytope) -> int:
    # kP cap Z^d = ((k-1)P cap Z^d) + (P cap Z^d) once k >= d - 1
    return max(2, P.ambient_dim - 1)


def is_idp(P: LatticePolytope, k_max: int | None = None) -> IdpVerdict:
    """Compare ``k``-fold sums of lattice points with ``kP`` for ``k = 2..k_max``.

    The sum sets are built as ``S_k = S_{k-1} + (P cap Z^d)``.  A returned
    counterexample is the lexicographically smallest point of ``kP`` missed by
    ``S_k`` at the first failing ``k``.
    """
    if k_max is None:
        k_max = default_kmax(P)
    if k_max < 2:
        raise ValueError("trivial range")
    base = lattice_points(P)
    sums = set(base)
    for k in range(2, k_max + 1):
        sums = {tuple(a + b for a, b in zip(s, p)) for s in sums for p in base}
        missing = lattice_points_in_dilate(P, k) - sums
        if missing:
            return IdpVerdict(False, k, (k, min(missing)))
    return IdpVerdict(True, k_max)
