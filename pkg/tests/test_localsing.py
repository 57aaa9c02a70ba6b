import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from elldp.localsing import (
    CapTooSmall,
    family_member,
    milnor_number,
    parse_poly,
    quotient_dimension,
    substitute_linear,
)


def newton_number_2d(monomials):
    """Kouchnirenko oracle for a convenient nondegenerate f(x, y).

    nu = 2 V - a - b + 1, V the area under the Newton polygon and a, b its
    intercepts on the axes.
    """
    pts = sorted(set(monomials))
    a = min(i for i, j in pts if j == 0)
    b = min(j for i, j in pts if i == 0)
    # lower convex hull from (0, b) to (a, 0)
    hull = []
    for P in sorted(pts):
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (P[1] - y1) - (y2 - y1) * (P[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(P)
    hull = [P for P in hull if P[0] <= a]
    poly = [(0, 0)] + hull
    area = Fraction(0)
    for (x1, y1), (x2, y2) in zip(poly, poly[1:] + poly[:1]):
        area += Fraction(x1 * y2 - x2 * y1, 2)
    return int(2 * abs(area) - a - b + 1)


def brieskorn(a, b, c):
    return {(a, 0, 0): 1, (0, b, 0): 1, (0, 0, c): 1}


def test_a1():
    r = milnor_number(parse_poly("x^2+y^2+z^2"))
    assert (r.mu, r.stabilized_at) == (1, 1)


def test_simply_elliptic():
    assert milnor_number(family_member(0)).mu == 10 == 1 * 2 * 5


@pytest.mark.parametrize("t", [1, 2, 17])
@pytest.mark.parametrize("delta", [0, 3, 101])
def test_family_jump_matches_newton_oracle(t, delta):
    nu = newton_number_2d([(6, 0), (3, 1), (0, 3)])
    assert nu == 7
    r = milnor_number(family_member(t, delta))
    assert r.mu == nu
    assert r.dims[-1] == r.dims[-2]


def test_family_rational_mode():
    f = parse_poly("z^2+y^3+x^6+x^3*y", None)
    assert milnor_number(f, p=None).mu == 7


def test_newton_oracle_on_two_variable_brieskorn():
    for a, b in product(range(2, 7), repeat=2):
        nu = newton_number_2d([(a, 0), (0, b)])
        assert nu == (a - 1) * (b - 1)
        assert milnor_number({(a, 0, 0): 1, (0, b, 0): 1, (0, 0, 2): 1}).mu == nu


def test_brieskorn_grid():
    for a, b, c in product(range(2, 7), repeat=3):
        assert milnor_number(brieskorn(a, b, c)).mu == (a - 1) * (b - 1) * (c - 1)


def random_invertible(rng, p):
    while True:
        M = [[rng.randrange(p) for _ in range(3)] for _ in range(3)]
        d = (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
             - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
             + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0])) % p
        if d:
            return M


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([(2, 3, 4), (2, 3, 5), (3, 3, 3), (2, 2, 6)]))
def test_linear_coordinate_change(seed, abc):
    rng = random.Random(seed)
    p = 10007
    f = brieskorn(*abc)
    g = substitute_linear(f, random_invertible(rng, p), p)
    a, b, c = abc
    assert milnor_number(g).mu == (a - 1) * (b - 1) * (c - 1)


def test_non_isolated():
    r = milnor_number(parse_poly("x^2+y^2"))
    assert not r.isolated and r.mu is None


def test_errors():
    with pytest.raises(ValueError):
        milnor_number(parse_poly("x+y^2"))
    with pytest.raises(ValueError):
        milnor_number(parse_poly("1+x^2"))
    with pytest.raises(CapTooSmall):
        milnor_number(brieskorn(2, 3, 30), degree_cap=20)
    # too small a cap must not pass for a non-isolated point
    with pytest.raises(CapTooSmall):
        milnor_number(parse_poly("z^2+y^3+x^5"), degree_cap=3)
    assert milnor_number(parse_poly("z^2+y^3+x^5")).mu == 8


def test_quotient_dimension_counts_monomials():
    # J = 0 is impossible, but x^2+y^2+z^2 gives J = m
    assert quotient_dimension(parse_poly("x^2+y^2+z^2"), 5) == 1
    assert parse_poly("2*x^2 + x*y/3", 7) == {(2, 0, 0): 2, (1, 1, 0): 5}
