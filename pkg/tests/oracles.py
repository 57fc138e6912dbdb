"""Independent reference computations used as test oracles.

None of these touch the package's elimination, facet, or enumeration code.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import comb, factorial

import numpy as np
import sympy
from scipy.spatial import ConvexHull


def simplex_contains(vertices, x, k=1) -> bool:
    """Barycentric membership test ``x in k * conv(vertices)`` for a simplex."""
    d = len(x)
    M = sympy.Matrix([[1] * (d + 1)] + [[v[i] for v in vertices] for i in range(d)])
    lam = M.LUsolve(sympy.Matrix([k] + list(x)))
    return all(l >= 0 for l in lam)


def hull_contains_all(vertices, points, k=1):
    """Membership via scipy's floating hull; safe for small integer data."""
    V = np.array(vertices, dtype=float) * k
    if V.shape[1] == 1:
        lo, hi = V.min(), V.max()
        return [lo - 1e-9 <= p[0] <= hi + 1e-9 for p in points]
    eq = ConvexHull(V).equations
    P = np.array(points, dtype=float)
    return list(np.all(P @ eq[:, :-1].T + eq[:, -1] <= 1e-9, axis=1))


def brute_dilate(vertices, k):
    """``kP`` cap ``Z^d`` by a full bounding-box scan against scipy's hull."""
    d = len(vertices[0])
    if k == 0:
        return {(0,) * d}
    ranges = [range(k * min(v[i] for v in vertices), k * max(v[i] for v in vertices) + 1) for i in range(d)]
    box = list(product(*ranges))
    return {p for p, inside in zip(box, hull_contains_all(vertices, box, k)) if inside}


def simplex_hstar(vertices):
    """h* of a lattice simplex by counting lattice points of the half-open
    fundamental parallelepiped of its cone, sorted by height."""
    d = len(vertices[0])
    gens = [(1,) + tuple(v) for v in vertices]
    M = sympy.Matrix(gens).T  # columns are the generators
    det = int(M.det())
    adj = M.adjugate()
    lo = [sum(min(0, g[i]) for g in gens) for i in range(d + 1)]
    hi = [sum(max(0, g[i]) for g in gens) for i in range(d + 1)]
    h = [0] * (d + 1)
    A = [[int(adj[i, j]) for j in range(d + 1)] for i in range(d + 1)]
    for x in product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
        num = [sum(A[i][j] * x[j] for j in range(d + 1)) for i in range(d + 1)]
        # lambda_i = num_i / det must lie in [0, 1)
        if det > 0:
            ok = all(0 <= n < det for n in num)
        else:
            ok = all(det < n <= 0 for n in num)
        if ok:
            h[x[0]] += 1
    return tuple(h)


def simplex_normalized_volume(vertices) -> int:
    v0 = vertices[0]
    return abs(int(sympy.Matrix([[a - b for a, b in zip(v, v0)] for v in vertices[1:]]).det()))


def multiset_sums(points, k):
    return {tuple(map(sum, zip(*combo))) for combo in combinations_with_replacement(points, k)}


def interpolate_coeffs(counts):
    t = sympy.Symbol("t")
    poly = sympy.Poly(sympy.interpolate(list(enumerate(counts)), t), t)
    coeffs = poly.all_coeffs()[::-1]
    return [Fraction(int(c.p), int(c.q)) for c in coeffs]


def hstar_from_ehrhart_series(counts, d):
    """Multiply the truncated series by ``(1 - t)^{d+1}`` with sympy."""
    t = sympy.Symbol("t")
    series = sum(c * t**k for k, c in enumerate(counts))
    prod = sympy.expand(series * (1 - t) ** (d + 1))
    return tuple(int(prod.coeff(t, i)) for i in range(d + 1))


def matrix_rank(rows):
    return sympy.Matrix(rows).rank()


def smith_diagonal(rows):
    from sympy.matrices.normalforms import smith_normal_form
    S = smith_normal_form(sympy.Matrix(rows), domain=sympy.ZZ)
    return tuple(abs(int(S[i, i])) for i in range(min(S.shape)))


def evaluation_rank(points, weights, degree):
    """Hilbert function value with sympy: all weighted monomials, evaluated."""
    mons = [e for e in product(*[range(degree // w + 1) for w in weights])
            if sum(a * w for a, w in zip(e, weights)) == degree]
    rows = [[sympy.prod([sympy.Rational(str(c)) ** a for c, a in zip(p, e)]) for p in points] for e in mons]
    return sympy.Matrix(rows).rank() if rows else 0


def ehrhart_from_hstar(h, k):
    d = len(h) - 1
    return sum(hi * comb(k + d - i, d) for i, hi in enumerate(h))


def factorial_volume(leading, d):
    return leading * factorial(d)
