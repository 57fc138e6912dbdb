"""Named polytope families, joins, and seeded random corpora.

Random corpora use SplitMix64 so that a given seed produces the same corpus
in any language: the state advances by ``0x9E3779B97F4A7C15`` per draw and
the output is the standard xor-shift-multiply finalizer.  Bounded integers are
drawn by rejection sampling, so no modulo bias.  Stream discipline per
instance: one draw for the dimension, then ``d`` draws per point, point by
point; a rejected (degenerate) attempt consumes its draws and redraws.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .geometry import LatticePolytope, RedundantPointWarning, affine_dimension

MASK64 = (1 << 64) - 1
MAX_ATTEMPTS = 1000


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)``."""
        if n <= 0:
            raise ValueError("empty range")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def integer(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)


def _unit(d: int, i: int, scale: int = 1) -> tuple[int, ...]:
    return tuple(scale if j == i else 0 for j in range(d))


def segment(n: int) -> LatticePolytope:
    return LatticePolytope(1, ((0,), (n,)))


def cube(d: int, side: int = 1) -> LatticePolytope:
    return LatticePolytope(d, tuple(product((0, side), repeat=d)))


def unimodular_simplex(d: int) -> LatticePolytope:
    return LatticePolytope(d, ((0,) * d,) + tuple(_unit(d, i) for i in range(d)))


def reeve_simplex(r: int) -> LatticePolytope:
    return LatticePolytope(3, ((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, r)))


def reeve_bipyramid(r: int) -> LatticePolytope:
    return LatticePolytope(3, ((0, 0, -1), (0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, r)))


def dilate(P: LatticePolytope, c: int) -> LatticePolytope:
    if c < 1:
        raise ValueError("dilation factor must be positive")
    return LatticePolytope(P.ambient_dim, tuple(tuple(c * x for x in v) for v in P.vertices))


FAMILIES = {
    "segment": (segment, 1, 1),
    "cube": (cube, 1, 2),
    "unimodular_simplex": (unimodular_simplex, 1, 1),
    "reeve_simplex": (reeve_simplex, 1, 1),
    "reeve_bipyramid": (reeve_bipyramid, 1, 1),
}


def standard_family(name: str, params: Sequence[int], base: LatticePolytope | None = None) -> LatticePolytope:
    """Look up a named family.

    ``cube`` takes ``[d]`` or ``[d, side]``; ``dilate`` takes ``[c]`` and a
    ``base`` polytope.  Every parameter must be a positive integer.
    """
    params = list(params)
    if any(not isinstance(p, int) or p < 1 for p in params):
        raise ValueError(f"parameters must be positive integers, got {params}")
    if name == "dilate":
        if base is None or len(params) != 1:
            raise ValueError("dilate needs a base polytope and one factor")
        return dilate(base, params[0])
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}; choose from {sorted(FAMILIES) + ['dilate']}")
    fn, lo, hi = FAMILIES[name]
    if not lo <= len(params) <= hi:
        raise ValueError(f"{name} takes {lo}..{hi} parameters, got {len(params)}")
    return fn(*params)


def join(P: LatticePolytope, Q: LatticePolytope) -> LatticePolytope:
    """``conv(P x {0} x {0}  cup  {0} x Q x {1})`` in dimension ``p + q + 1``."""
    p, q = P.ambient_dim, Q.ambient_dim
    verts = [v + (0,) * q + (0,) for v in P.vertices]
    verts += [(0,) * p + w + (1,) for w in Q.vertices]
    return LatticePolytope(p + q + 1, tuple(verts))


def pyramid(P: LatticePolytope) -> LatticePolytope:
    """Lattice pyramid: the join with a single point."""
    d = P.ambient_dim
    return LatticePolytope(d + 1, tuple(v + (0,) for v in P.vertices) + ((0,) * d + (1,),))


@dataclass(frozen=True)
class CorpusSpec:
    seed: int
    count: int
    dim_range: tuple[int, int] = (2, 3)
    coordinate_bound: int = 6
    family: str = "random_simplex"

    def __post_init__(self):
        lo, hi = self.dim_range
        if not 1 <= lo <= hi:
            raise ValueError("dim_range must satisfy 1 <= min <= max")
        if self.count < 0 or self.coordinate_bound < 1:
            raise ValueError("count must be >= 0 and coordinate_bound >= 1")
        if self.family not in ("random_simplex", "random_polytope"):
            raise ValueError(f"unknown corpus family {self.family!r}")


def _draw(rng: SplitMix64, d: int, npts: int, bound: int) -> list[tuple[int, ...]]:
    return [tuple(rng.integer(0, bound) for _ in range(d)) for _ in range(npts)]


def iter_corpus(spec: CorpusSpec) -> Iterator[LatticePolytope]:
    rng = SplitMix64(spec.seed)
    lo, hi = spec.dim_range
    for _ in range(spec.count):
        d = rng.integer(lo, hi)
        npts = d + 1 if spec.family == "random_simplex" else d + 3
        for _attempt in range(MAX_ATTEMPTS):
            pts = _draw(rng, d, npts, spec.coordinate_bound)
            if affine_dimension(pts) == d:
                break
        else:
            raise RuntimeError("degenerate draw")
        yield LatticePolytope(d, tuple(sorted(set(pts))))


def random_corpus(spec: CorpusSpec) -> list[LatticePolytope]:
    with warnings.catch_warnings():
        # interior draws of random_polytope are expected
        warnings.simplefilter("ignore", RedundantPointWarning)
        return list(iter_corpus(spec))
