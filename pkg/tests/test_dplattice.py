import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from elldp import dplattice as dp
from elldp import reference as ref
from elldp.rootdata import TYPES, root_system
from elldp.snf import det, invariant_factors, smith_normal_form, matmul


@pytest.fixture(scope="module", params=TYPES)
def L(request):
    return dp.build_dplattice(root_system(request.param))


def geometric_classes(l, square, degree):
    """Oracle: a h - sum b_i e_i with a^2 - sum b^2 = square and 3a - sum b = degree.

    Searched directly in blow-up coordinates; b is generated as a
    nonincreasing sequence and then every distinct permutation is taken.
    """
    from itertools import permutations

    out = set()
    for a in range(-6, 7):
        target_sq = a * a - square
        target_sum = 3 * a - degree

        def rec(prefix, lo_sq, lo_sum, cap):
            if len(prefix) == l:
                if lo_sq == 0 and lo_sum == 0:
                    for p in set(permutations(prefix)):
                        out.add((a, p))
                return
            for b in range(cap, -7, -1):
                if b * b <= lo_sq:
                    rec(prefix + (b,), lo_sq - b * b, lo_sum - b, b)

        rec((), target_sq, target_sum, 6)
    return out


def test_enumeration_matches_blowup_oracle(L):
    B = dp.geometric_basis(L)
    lines, cert = dp.enumerate_lines(L)
    roots, rcert = dp.enumerate_roots(L)
    assert len(lines) == ref.LINE_COUNT[L.tag] == cert.to_json()["found"]
    assert len(roots) == ref.ROOT_COUNT[L.tag]
    oracle_lines = geometric_classes(L.l, -1, 1)
    oracle_roots = geometric_classes(L.l, -2, 0)
    assert {dp.to_geometric(L, B, m) for m in lines} == oracle_lines
    assert {dp.to_geometric(L, B, r) for r in roots} == oracle_roots


def test_certificate_fields(L):
    _, cert = dp.enumerate_lines(L)
    j = cert.to_json()
    assert j["kappa_pairing"] == 1 and j["square"] == -1
    assert j["nodes_visited"] <= j["box_size"]


def test_lattice_invariants(L):
    assert abs(det(L.gram)) == 1
    assert L.dot(L.kappa, L.kappa) == 9 - L.l == L.degree
    assert all(L.dot(L.kappa, L.delta(i)) == 0 for i in range(1, L.l + 1))
    assert L.dot(L.kappa, L.gamma) == 1
    assert L.kappa[-1] == 9 - L.l


def test_roots_closed_and_dominant_line(L):
    roots, _ = dp.enumerate_roots(L)
    lines, _ = dp.enumerate_lines(L)
    assert dp.closed_under_reflections(L, roots)
    assert dp.dominant_line(L, lines) == L.gamma
    # lines form one Weyl orbit
    assert dp.orbit_closure(L, L.gamma) == set(lines)


def test_geometric_basis(L):
    B = dp.geometric_basis(L)
    assert L.dot(B.h, B.h) == 1
    for i, ei in enumerate(B.e):
        assert L.dot(B.h, ei) == 0
        for j, ej in enumerate(B.e):
            assert L.dot(ei, ej) == -(i == j)
    assert L.delta(2) == dp.from_geometric(L, B, 1, (1, 1, 1) + (0,) * (L.l - 3))
    assert abs(det(B.matrix())) == 1
    # kappa = 3h - sum e_i
    assert L.kappa == dp.from_geometric(L, B, 3, (1,) * L.l)


def test_quotient_by_kappa(L):
    q = dp.kappa_quotient(L)
    assert q.root_index == ref.DISCRIMINANT[L.tag]
    assert all(f == 1 for f in q.pairing_factors)
    assert q.coords(L.kappa) == (0,) * L.l


def test_cartan_of_simple_subsystem(L):
    roots, _ = dp.enumerate_roots(L)
    rng = random.Random(5)
    for _ in range(3):
        functional = [rng.randint(1, 10**6) for _ in range(L.dim)]
        simple = dp.simple_system(L, roots, functional)
        assert len(simple) == L.l
        assert dp.cartan_isomorphic(dp.cartan_of(L, simple), root_system(L.tag).cartan)
    assert dp.relabelled_cartan(L, root_system(L.tag)) == [
        [-L.dot(L.delta(i), L.delta(j)) for j in range(1, L.l + 1)] for i in range(1, L.l + 1)]


def test_dominant_representative_example(L):
    x = L.reflect(L.delta(L.l), L.gamma)
    assert x == tuple(a + b for a, b in zip(L.gamma, L.delta(L.l)))
    rep, word = dp.dominant_representative(L, x)
    assert rep == L.gamma and word == [L.l]
    with pytest.raises(ValueError):
        dp.dominant_representative(L, tuple(-c for c in L.kappa))


def test_nef_examples(L):
    roots, _ = dp.enumerate_roots(L)
    lines, _ = dp.enumerate_lines(L)
    # -K is ample on a smooth del Pezzo surface
    rep = dp.nef_report(L, L.kappa, [], lines)
    assert rep.nef and rep.nef_weak and not rep.boundary_lines
    # h pulls back from the plane: nef, zero on the exceptional curves
    B = dp.geometric_basis(L)
    rep = dp.nef_report(L, B.h, [], lines)
    assert rep.nef_weak and not rep.nef
    assert set(B.e) <= set(rep.boundary_lines)
    # kappa is orthogonal to every root, so effective roots cannot spoil it
    assert dp.nef_report(L, L.kappa, roots, lines).nef
    # 2h - e_1 pairs to -1 with the root e_2 - e_1 once that root is effective
    x = dp.from_geometric(L, B, 2, (1,) + (0,) * (L.l - 1))
    r = dp.from_geometric(L, B, 0, (1, -1) + (0,) * (L.l - 2))
    assert r in roots
    rep = dp.nef_report(L, x, [r], lines)
    assert rep.negative_roots == (r,) and not rep.nef_weak
    assert dp.nef_report(L, x, [], lines).nef_weak
    with pytest.raises(ValueError):
        dp.nef_report(L, L.gamma, [], lines)


@settings(max_examples=60, deadline=None)
@given(tag=st.sampled_from(TYPES), data=st.data())
def test_reflections_are_isometries(tag, data):
    L = dp.build_dplattice(root_system(tag))
    x = tuple(data.draw(st.lists(st.integers(-4, 4), min_size=L.dim, max_size=L.dim)))
    y = tuple(data.draw(st.lists(st.integers(-4, 4), min_size=L.dim, max_size=L.dim)))
    i = data.draw(st.integers(1, L.l))
    d = L.delta(i)
    assert L.dot(L.reflect(d, x), L.reflect(d, y)) == L.dot(x, y)
    assert L.reflect(d, L.reflect(d, x)) == x
    assert L.reflect(d, L.kappa) == L.kappa


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_snf_matches_sympy(n, m, data):
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import smith_normal_form as sympy_snf

    A = [data.draw(st.lists(st.integers(-9, 9), min_size=m, max_size=m)) for _ in range(n)]
    U, S, V = smith_normal_form(A)
    assert matmul(matmul(U, A), V) == S
    assert abs(det(U)) == 1 and abs(det(V)) == 1
    ours = [S[i][i] for i in range(min(n, m))]
    theirs = sympy_snf(Matrix(A), domain=ZZ)
    assert [abs(x) for x in ours] == [abs(int(theirs[i, i])) for i in range(min(n, m))]
    assert invariant_factors(A) == ours
