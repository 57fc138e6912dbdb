"""Hermite and Smith normal forms, the spanning index, and lattice coarsening."""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Sequence

from .exact import Matrix, identity, solve
from .geometry import LatticePolytope, lattice_points


def hermite_normal_form(M: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``H = U M``, ``U`` unimodular, ``H`` upper echelon
    with positive pivots and the entries above each pivot reduced into
    ``[0, pivot)``.  Zero rows end up at the bottom.
    """
    if not M or not M[0]:
        raise ValueError("empty matrix")
    H = [list(map(int, row)) for row in M]
    m, n = len(H), len(H[0])
    U = identity(m)

    def swap(i, j):
        H[i], H[j] = H[j], H[i]
        U[i], U[j] = U[j], U[i]

    def addmul(dst, src, q):
        # row dst -= q * row src
        H[dst] = [a - q * b for a, b in zip(H[dst], H[src])]
        U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if H[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(H[i][c]))
            if p != r:
                swap(p, r)
            if len(nz) == 1:
                break
            for i in range(r + 1, m):
                if H[i][c]:
                    addmul(i, r, H[i][c] // H[r][c])
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-a for a in H[r]]
            U[r] = [-a for a in U[r]]
        for i in range(r):
            addmul(i, r, H[i][c] // H[r][c])
        r += 1
    return H, U


@dataclass(frozen=True)
class SmithForm:
    """``U @ M @ V`` is the diagonal matrix with entries ``diagonal``."""

    diagonal: tuple[int, ...]
    left: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]
    source_shape: tuple[int, int]

    def matrix(self) -> Matrix:
        m, n = self.source_shape
        return [[self.diagonal[i] if i == j and i < len(self.diagonal) else 0 for j in range(n)]
                for i in range(m)]


def smith_normal_form(M: Sequence[Sequence[int]]) -> SmithForm:
    """Smith normal form by alternating row and column gcd elimination."""
    if not M or not M[0]:
        raise ValueError("empty matrix")
    A = [list(map(int, row)) for row in M]
    m, n = len(A), len(A[0])
    U, V = identity(m), identity(n)

    def row_addmul(dst, src, q):
        A[dst] = [a - q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def col_addmul(dst, src, q):
        for row in A:
            row[dst] -= q * row[src]
        for row in V:
            row[dst] -= q * row[src]

    def row_swap(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
            if not entries:
                break
            _, i, j = min(entries)
            row_swap(t, i)
            col_swap(t, j)
            piv = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    row_addmul(i, t, A[i][t] // piv)
                    dirty = dirty or A[i][t] != 0
            for j in range(t + 1, n):
                if A[t][j]:
                    col_addmul(j, t, A[t][j] // piv)
                    dirty = dirty or A[t][j] != 0
            if dirty:
                continue
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % piv), None)
            if bad is None:
                break
            # pull a non-multiple into row t, then re-eliminate
            A[t] = [a + b for a, b in zip(A[t], A[bad])]
            U[t] = [a + b for a, b in zip(U[t], U[bad])]
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
    diag = tuple(A[i][i] for i in range(min(m, n)))
    return SmithForm(diag, tuple(map(tuple, U)), tuple(map(tuple, V)), (m, n))


@dataclass(frozen=True)
class PointLatticeInfo:
    """Lattice ``L`` spanned by ``{1} x (P cap Z^d)`` inside ``Z^{d+1}``."""

    index: int
    snf_diagonal: tuple[int, ...]
    basis_of_L: tuple[tuple[int, ...], ...]

    @property
    def spanning(self) -> bool:
        return self.index == 1


def spanning_index(P: LatticePolytope) -> PointLatticeInfo:
    """Index of the height-one lattice of ``P``; it is 1 iff ``P`` is spanning."""
    gens = [(1,) + p for p in lattice_points(P)]
    snf = smith_normal_form(gens)
    nonzero = [x for x in snf.diagonal if x]
    if len(nonzero) != P.ambient_dim + 1:
        raise AssertionError("height-one lattice is not full rank")
    H, _ = hermite_normal_form(gens)
    basis = tuple(tuple(row) for row in H[: P.ambient_dim + 1])
    return PointLatticeInfo(prod(nonzero), snf.diagonal, basis)


def affine_lattice_basis(P: LatticePolytope) -> tuple[tuple[int, ...], list[list[int]]]:
    """Anchor and basis of the affine lattice generated by ``P cap Z^d``.

    The anchor is the lexicographically smallest lattice point; the basis rows
    are the nonzero rows of the HNF of the difference vectors.
    """
    pts = lattice_points(P)
    anchor = pts[0]
    diffs = [[a - b for a, b in zip(p, anchor)] for p in pts[1:]]
    H, _ = hermite_normal_form(diffs)
    return anchor, H[: P.ambient_dim]


def coarsen(P: LatticePolytope) -> LatticePolytope:
    """``P`` re-read in the lattice spanned by its own lattice points.

    Only defined up to unimodular equivalence; compare invariants, not
    coordinates.
    """
    anchor, basis = affine_lattice_basis(P)
    # vertex - anchor = c @ basis, so c solves basis^T c = vertex - anchor
    basis_t = [list(col) for col in zip(*basis)]
    coords = []
    for v in P.vertices:
        c = solve(basis_t, [a - b for a, b in zip(v, anchor)])
        if any(x.denominator != 1 for x in c):
            raise AssertionError("vertex outside the affine lattice of its own lattice points")
        coords.append(tuple(int(x) for x in c))
    return LatticePolytope(P.ambient_dim, tuple(coords))
