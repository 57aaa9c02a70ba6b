"""Elliptic curves over F_p and marked del Pezzo surfaces.

A marking is encoded by a homomorphism psi from I_{1,l} to Pic(E), with
Pic(E) written in Abel-Jacobi normal form: the class of degree n whose
divisor is [pt] + (n-1)[O] is stored as ``PicClass(pt, n)``.  psi is fixed by
psi(gamma) = [O] and the images of the delta_i, which are degree-0 classes,
i.e. points.

``construct_marked_dp`` sends psi to the ordered list of blow-up centres
(points of psi(e_1), ..., psi(e_l)) together with the plane cubic class
psi(h).  ``recover_psi`` reads psi back from that data.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from sympy.ntheory import sqrt_mod

from .dplattice import DPLattice, GeometricBasis, KappaQuotient, Vector, geometric_basis, kappa_quotient

# affine point (x, y) or None for the point at infinity
Point = Optional[tuple[int, int]]
O: Point = None


class NotOnCurve(ValueError):
    pass


@dataclass(frozen=True)
class EllipticCurve:
    p: int
    a: int
    b: int

    def __post_init__(self):
        if self.p <= 3:
            raise ValueError("p must be a prime > 3")
        if (4 * self.a ** 3 + 27 * self.b ** 2) % self.p == 0:
            raise ValueError("singular curve")

    def contains(self, P: Point) -> bool:
        if P is None:
            return True
        x, y = P
        return (y * y - (x * x * x + self.a * x + self.b)) % self.p == 0

    def check(self, P: Point) -> Point:
        if not self.contains(P):
            raise NotOnCurve(f"{P} is not on {self}")
        return P

    def neg(self, P: Point) -> Point:
        self.check(P)
        if P is None:
            return None
        return (P[0], -P[1] % self.p)

    def add(self, P: Point, Q: Point) -> Point:
        self.check(P)
        self.check(Q)
        return self._add(P, Q)

    def _add(self, P: Point, Q: Point) -> Point:
        if P is None:
            return Q
        if Q is None:
            return P
        p = self.p
        (x1, y1), (x2, y2) = P, Q
        if x1 == x2:
            if (y1 + y2) % p == 0:
                return None
            s = (3 * x1 * x1 + self.a) * pow(2 * y1, -1, p) % p
        else:
            s = (y2 - y1) * pow(x2 - x1, -1, p) % p
        x3 = (s * s - x1 - x2) % p
        return (x3, (s * (x1 - x3) - y1) % p)

    def sub(self, P: Point, Q: Point) -> Point:
        return self.add(P, self.neg(Q))

    def mul(self, n: int, P: Point) -> Point:
        self.check(P)
        if n < 0:
            n, P = -n, self.neg(P)
        R: Point = None
        while n:
            if n & 1:
                R = self._add(R, P)
            P = self._add(P, P)
            n >>= 1
        return R

    def points(self) -> list[Point]:
        """All points, by naive enumeration (small p only)."""
        p = self.p
        squares: dict[int, list[int]] = {}
        for y in range(p):
            squares.setdefault(y * y % p, []).append(y)
        pts: list[Point] = [None]
        for x in range(p):
            for y in squares.get((x ** 3 + self.a * x + self.b) % p, []):
                pts.append((x, y))
        return pts

    def random_point(self, rng: random.Random) -> Point:
        while True:
            x = rng.randrange(self.p)
            rhs = (x ** 3 + self.a * x + self.b) % self.p
            if rhs == 0:
                return (x, 0)
            roots = sqrt_mod(rhs, self.p, all_roots=True)
            if roots:
                return (x, rng.choice(sorted(roots)))

    def linear_combination(self, coeffs: Iterable[int], pts: Iterable[Point]) -> Point:
        R: Point = None
        for c, P in zip(coeffs, pts):
            if c:
                R = self._add(R, self.mul(c, P))
        return R


def ec_add(E: EllipticCurve, P: Point, Q: Point) -> Point:
    return E.add(P, Q)


def ec_neg(E: EllipticCurve, P: Point) -> Point:
    return E.neg(P)


def ec_mul(E: EllipticCurve, n: int, P: Point) -> Point:
    return E.mul(n, P)


@dataclass(frozen=True)
class PicClass:
    curve: EllipticCurve
    pt: Point
    deg: int

    def __add__(self, other: "PicClass") -> "PicClass":
        return pic_add(self, other)

    def to_json(self):
        return {"point": point_json(self.pt), "deg": self.deg}


def pic_add(c1: PicClass, c2: PicClass) -> PicClass:
    if c1.curve != c2.curve:
        raise ValueError("classes live on different curves")
    return PicClass(c1.curve, c1.curve.add(c1.pt, c2.pt), c1.deg + c2.deg)


def pic_zero(E: EllipticCurve) -> PicClass:
    return PicClass(E, O, 0)


@dataclass(frozen=True)
class PsiHom:
    """psi: I_{1,l} -> Pic(E) with psi(gamma) = [O] and psi(delta_i) = (q_i, 0)."""

    curve: EllipticCurve
    lattice: DPLattice
    delta_images: tuple[Point, ...]

    def __post_init__(self):
        if len(self.delta_images) != self.lattice.l:
            raise ValueError(f"need {self.lattice.l} delta images")
        for q in self.delta_images:
            self.curve.check(q)

    def __call__(self, v: Sequence[int]) -> PicClass:
        l = self.lattice.l
        pt = self.curve.linear_combination(v[:l], self.delta_images)
        # only gamma carries degree
        return PicClass(self.curve, pt, v[l])

    def to_json(self):
        return [point_json(q) for q in self.delta_images]


@dataclass(frozen=True)
class MarkedDelPezzo:
    """Blow-up data: centres p_1..p_l (p_1 blown up first) on the plane cubic.

    ``plane_class`` is the degree-3 class cut by lines; when its point is O
    the cubic is the Weierstrass model itself.
    """

    curve: EllipticCurve
    points: tuple[Point, ...]
    lattice: DPLattice
    plane_class: PicClass

    def __post_init__(self):
        if len(self.points) != self.lattice.l:
            raise ValueError(f"need {self.lattice.l} points")
        if self.plane_class.deg != 3:
            raise ValueError("plane class must have degree 3")

    def to_json(self):
        return {"points": [point_json(P) for P in self.points],
                "plane_class": self.plane_class.to_json()}


def construct_marked_dp(psi: PsiHom, basis: GeometricBasis | None = None) -> MarkedDelPezzo:
    """psi -> blow-up centres psi(e_1), ..., psi(e_l) and plane class psi(h)."""
    B = basis or geometric_basis(psi.lattice)
    pts = []
    for e in B.e:
        c = psi(e)
        assert c.deg == 1
        pts.append(c.pt)
    return MarkedDelPezzo(psi.curve, tuple(pts), psi.lattice, psi(B.h))


def recover_psi(M: MarkedDelPezzo) -> PsiHom:
    """Read psi back from blow-up data.

    delta_1 = e_1 - e_2, delta_i = e_{i-1} - e_i for i >= 3 and
    delta_2 = h - e_1 - e_2 - e_3, so the delta images are differences of
    centres, and for delta_2 the plane-class point minus p_1 + p_2 + p_3.
    """
    E, p, l = M.curve, M.points, M.lattice.l
    if p[-1] is not O:
        raise ValueError("the last centre must be the origin (psi(gamma) = [O])")
    q: list[Point] = [None] * l
    q[0] = E.sub(p[0], p[1])
    for i in range(3, l + 1):
        q[i - 1] = E.sub(p[i - 2], p[i - 1])
    q[1] = E.sub(M.plane_class.pt, E.add(E.add(p[0], p[1]), p[2]))
    return PsiHom(E, M.lattice, tuple(q))


def effective_roots(psi: PsiHom, roots: Iterable[Vector]) -> list[Vector]:
    """Roots delta with psi(delta) = 0 (the kernel of the period map)."""
    return sorted(r for r in roots if psi(r).pt is O)


def random_psi(E: EllipticCurve, L: DPLattice, rng: random.Random) -> PsiHom:
    return PsiHom(E, L, tuple(E.random_point(rng) for _ in range(L.l)))


def zero_psi(E: EllipticCurve, L: DPLattice) -> PsiHom:
    return PsiHom(E, L, (O,) * L.l)


def subgroup_psi_basis(L: DPLattice) -> KappaQuotient:
    return kappa_quotient(L)


def psi_from_quotient_basis(E: EllipticCurve, L: DPLattice, images: Sequence[Point],
                            quotient: KappaQuotient | None = None) -> PsiHom:
    """Build psi from the values of psi' on the quotient basis of I/Z kappa."""
    q = quotient or kappa_quotient(L)
    if len(images) != L.l:
        raise ValueError(f"need {L.l} images")
    deltas = tuple(E.linear_combination(q.coords(L.delta(i)), images)
                   for i in range(1, L.l + 1))
    return PsiHom(E, L, deltas)


def point_json(P: Point):
    return "infinity" if P is None else {"x": P[0], "y": P[1]}


def point_from_json(obj) -> Point:
    if obj in ("infinity", None):
        return None
    if isinstance(obj, dict):
        return (int(obj["x"]), int(obj["y"]))
    x, y = obj
    return (int(x), int(y))
