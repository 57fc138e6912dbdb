"""Acceptance criteria, one test each.  All checks are exact (zero tolerance);
runtime budgets are wall-clock limits on the stated computation."""

import json
import time
from dataclasses import dataclass

import pytest

from ehrspan import constructions as C
from ehrspan.cli import run
from ehrspan.ehrhart import _counts, ehrhart_polynomial, has_interior_lattice_point, hstar_vector
from ehrspan.geometry import count_lattice_points_in_dilate, lattice_points
from ehrspan.idp import is_idp
from ehrspan.inequalities import check_lower_bounds, check_stanley, check_strong
from ehrspan.lattice import coarsen, spanning_index
from ehrspan.upp import (ProjectivePointSet, WeightedSpace, check_min_formula, check_upp_bound, hilbert_function,
                         is_uniform_position, random_point_set)

from conftest import ACCEPTANCE_SEED, CORPUS_SIZE
from oracles import brute_dilate, multiset_sums, simplex_hstar, simplex_normalized_volume

UPP_SEED = 4242
UPP_SETS = 200


@dataclass
class Instance:
    P: object
    hstar: object
    index: int
    coarse_hstar: object
    npoints: int


@pytest.fixture(scope="module")
def corpus_data(corpus):
    _counts.cache_clear()
    start = time.perf_counter()
    data = []
    for P in corpus:
        Q = coarsen(P)
        data.append(Instance(P, hstar_vector(P), spanning_index(P).index, hstar_vector(Q), len(lattice_points(P))))
        assert len(lattice_points(Q)) == data[-1].npoints
    return data, time.perf_counter() - start


def test_corpus_shape(corpus):
    assert len(corpus) == CORPUS_SIZE
    assert {P.dim for P in corpus} == {2, 3, 4}
    assert all(len(P.vertices) == P.dim + 1 for P in corpus)
    assert all(0 <= x <= 6 for P in corpus for v in P.vertices for x in v)


def test_1_join_counterexample(criterion, tmp_path, capsys):
    start = time.perf_counter()
    J = C.join(C.segment(3), C.reeve_simplex(2))
    h = hstar_vector(J)
    report = check_strong(h)
    s = h.degree
    expected = [(i, j) for i in range(1, s) for j in range(s - i) if sum(h[1:i + 1]) > sum(h[j + 1:j + i + 1])]
    path = tmp_path / "join.json"
    path.write_text(json.dumps(J.to_json()))
    code = run(["check", str(path), "--family", "strong"])
    cli = json.loads(capsys.readouterr().out)["results"][0]
    elapsed = time.perf_counter() - start
    ok = (h.coeffs == (1, 2, 1, 2, 0, 0)
          and [v.params for v in report.violations] == expected == [(1, 1)]
          and code == 1 and [v["params"] for v in cli["violations"]] == [[1, 1]]
          and not spanning_index(J).spanning
          and elapsed < 2)
    criterion(1, "join(segment(3), reeve(2)) has h*=(1,2,1,2,0,0); strong fails exactly at (1,1)", ok,
              f"{elapsed:.2f}s")


def test_2_spanning_flags(criterion):
    start = time.perf_counter()
    reeve = [spanning_index(C.reeve_simplex(r)).index for r in range(1, 7)]
    bipyr = [spanning_index(C.reeve_bipyramid(r)).index for r in range(2, 7)]
    elapsed = time.perf_counter() - start
    ok = reeve == [1, 2, 3, 4, 5, 6] and bipyr == [1] * 5 and elapsed < 1
    criterion(2, "reeve_simplex(r) index r for r=1..6; reeve_bipyramid(r) spanning for r=2..6", ok,
              f"{elapsed:.2f}s")


def test_3_coarsening_identities(criterion, corpus_data):
    data, elapsed = corpus_data
    bad = []
    for i, inst in enumerate(data):
        if inst.hstar.normalized_volume != inst.index * inst.coarse_hstar.normalized_volume:
            bad.append((i, "volume"))
        if any(a < b for a, b in zip(inst.hstar, inst.coarse_hstar)):
            bad.append((i, "monotone"))
    nonspanning = sum(inst.index > 1 for inst in data)
    ok = not bad and elapsed < 120 and len(data) == CORPUS_SIZE
    criterion(3, "vol(P) = index * vol(coarsen P), h*_j(P) >= h*_j(coarsen P), equal lattice point counts",
              ok, f"{len(data)} simplices, {nonspanning} non-spanning, {elapsed:.1f}s, failures {bad[:3]}")


def test_4_stanley_unconditional(criterion, corpus_data, named_polytopes):
    data, _ = corpus_data
    vectors = [inst.hstar for inst in data] + [hstar_vector(P) for P in named_polytopes.values()]
    failures = [h.coeffs for h in vectors if not check_stanley(h).passed]
    criterion(4, "Stanley's inequalities on the corpus and every named family", not failures,
              f"{len(vectors)} vectors")


def test_5_main_theorem_on_spanning(criterion, corpus_data):
    data, _ = corpus_data
    spanning = [inst for inst in data if inst.index == 1]
    failures = []
    for inst in spanning:
        if not check_strong(inst.hstar).passed:
            failures.append(("strong", inst.hstar.coeffs))
        h = inst.hstar
        if any(h[j] < 1 for j in range(h.degree + 1)):
            failures.append(("no_internal_zeros", h.coeffs))
    for inst in spanning[:60]:
        zeros = [r for r in check_lower_bounds(inst.P) if r.family == "no_internal_zeros"][0]
        if not (zeros.applicable and zeros.passed):
            failures.append(("lower_bounds report", inst.hstar.coeffs))
    dim2_ok = all(inst.index == 1 for inst in data if inst.P.dim == 2)
    criterion(5, "strong inequalities and no internal zeros on spanning members; dim 2 always spanning",
              not failures and dim2_ok, f"{len(spanning)} spanning members")


def test_6_ehrhart_oracle(criterion, corpus_data):
    data, _ = corpus_data
    bad = []
    for i, inst in enumerate(data):
        P = inst.P
        poly = ehrhart_polynomial(P)
        d = P.dim
        for k in (d + 1, d + 2):
            if poly(k) != count_lattice_points_in_dilate(P, k):
                bad.append((i, k))
    # full-box scan against an independent floating hull on a sample
    sample = [inst.P for inst in data if inst.P.dim <= 3][:30]
    for P in sample:
        if ehrhart_polynomial(P)(P.dim + 1) != len(brute_dilate(P.vertices, P.dim + 1)):
            bad.append(("box", P.vertices))
    criterion(6, "interpolated Ehrhart polynomial matches direct counts at k=d+1, d+2", not bad,
              f"{len(data)} polytopes + {len(sample)} box-scan checks")


def test_7_idp_oracle(criterion, corpus_data):
    data, _ = corpus_data
    start = time.perf_counter()
    compared = 0
    bad = []
    for i, inst in enumerate(data):
        P = inst.P
        verdict = is_idp(P)
        if verdict.is_idp and inst.index != 1:
            bad.append((i, "idp but not spanning"))
        if P.dim <= 3 and inst.npoints <= 10:
            pts = lattice_points(P)
            oracle = all(multiset_sums(pts, k) == set(brute_dilate(P.vertices, k))
                         for k in range(2, verdict.checked_up_to + 1))
            compared += 1
            if oracle != verdict.is_idp:
                bad.append((i, "disagrees"))
    elapsed = time.perf_counter() - start
    criterion(7, "is_idp agrees with multiset-sum oracle; IDP implies spanning", not bad and elapsed < 120,
              f"{compared} compared, {elapsed:.1f}s")


def test_8_example_mechanism(criterion):
    P1112 = WeightedSpace(3, (2,))
    same = ProjectivePointSet(P1112, [(1, 1, 1, 1), (1, 1, 1, -1)])
    distinct = ProjectivePointSet(P1112, [(1, 1, 1, 1), (1, 0, 1, -1)])
    # two fibres of the 2:1 projection of x*y + y*z = z^2, a^2 = x^2*y*z
    both = ProjectivePointSet(P1112, [(12, 1, 4, 24), (12, 1, 4, -24), (72, 1, 9, 216), (72, 1, 9, -216)])
    upp, witness = is_uniform_position(both)
    ok = (hilbert_function(same, 1) == 1 and hilbert_function(distinct, 1) == 2
          and both.subset_hilbert((0, 1), 1) == 1 and both.subset_hilbert((0, 2), 1) == 2
          and not upp and witness.degree == 1 and sorted([witness.first_value, witness.second_value]) == [1, 2])
    criterion(8, "same-projection pair h(1)=1, distinct-projection pair h(1)=2; union not in uniform position",
              ok)


def test_9_uniform_position_characterization(criterion):
    start = time.perf_counter()
    rng = C.SplitMix64(UPP_SEED)
    spaces = [WeightedSpace(3), WeightedSpace(2, (2,))]
    disagreements, bound_failures = [], []
    n_upp = bounds_checked = 0
    for t in range(UPP_SETS):
        space = spaces[t % 2]
        G = random_point_set(rng, space, rng.integer(1, 8), bound=2)
        r = check_min_formula(G)
        if not r.agree:
            disagreements.append(G)
        if r.uniform_position:
            n_upp += 1
            l0 = G.stabilization_degree
            for i in range(l0 + 1):
                for j in range(l0 + 1 - i):
                    bounds_checked += 1
                    if not check_upp_bound(G, i, j).passed:
                        bound_failures.append((G, i, j))
    elapsed = time.perf_counter() - start
    ok = not disagreements and not bound_failures and 0 < n_upp < UPP_SETS and elapsed < 180
    criterion(9, "uniform position agrees with the min-formula; UPP Hilbert bound holds", ok,
              f"{UPP_SETS} sets, {n_upp} in uniform position, {bounds_checked} bounds, {elapsed:.1f}s")


def test_10_hstar_structure(criterion, corpus_data):
    data, _ = corpus_data
    bad = []
    for i, inst in enumerate(data):
        P, h = inst.P, inst.hstar
        d = P.dim
        if h[0] != 1 or h[1] != inst.npoints - d - 1:
            bad.append((i, "h0/h1"))
        if h.normalized_volume != simplex_normalized_volume(P.vertices):
            bad.append((i, "volume"))
        if (h.degree == d) != has_interior_lattice_point(P):
            bad.append((i, "degree"))
    sample = [inst for inst in data if inst.P.dim <= 3][:40]
    for inst in sample:
        if simplex_hstar(inst.P.vertices) != inst.hstar.coeffs:
            bad.append(("parallelepiped", inst.P.vertices))
    criterion(10, "h*_0=1, h*_1=#points-d-1, sum h* = d! vol, degree d iff interior point", not bad,
              f"{len(data)} polytopes, {len(sample)} parallelepiped cross-checks")
