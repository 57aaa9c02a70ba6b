"""The odd unimodular lattice I_{1,l} on the basis (delta_1..delta_l, gamma).

The delta_i are (-2)-classes meeting along a Dynkin diagram of type E_l and
gamma is the unique line, meeting only delta_l.  Vectors are integer tuples
of length l+1 with the gamma coefficient last.

Node numbering here follows the blow-up chain gamma, delta_l, ..., delta_3,
delta_1 with delta_2 attached to delta_4, i.e. the E8 numbering truncated to
l nodes.  For E6-E8 this is the root-system numbering.  For D5 it differs
from :mod:`elldp.rootdata` by swapping nodes 2 and 3; ``DPLattice.node_map``
records the correspondence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .rootdata import RootSystem, Vector
from .snf import det, inverse_unimodular, rational_inverse, smith_normal_form

_CHAIN_EDGES = ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4))


@dataclass(frozen=True)
class DPLattice:
    tag: str
    l: int
    gram: tuple[Vector, ...]
    kappa: Vector
    # node_map[i-1] = root-system node carried by delta_i
    node_map: tuple[int, ...]
    edges: tuple[tuple[int, int], ...] = field(repr=False)

    @property
    def dim(self) -> int:
        return self.l + 1

    @property
    def degree(self) -> int:
        return 9 - self.l

    def dot(self, x: Sequence[int], y: Sequence[int]) -> int:
        return sum(x[i] * g * y[j] for i, row in enumerate(self.gram)
                   for j, g in enumerate(row) if g)

    def delta(self, i: int) -> Vector:
        return tuple(int(k == i - 1) for k in range(self.dim))

    @property
    def gamma(self) -> Vector:
        return tuple(int(k == self.l) for k in range(self.dim))

    def reflect(self, root: Sequence[int], x: Sequence[int]) -> Vector:
        """Reflection in a (-2)-class: x + (x.root) root."""
        k = self.dot(x, root)
        return tuple(a + k * b for a, b in zip(x, root))

    def to_json(self) -> dict:
        return {"type": self.tag, "gram": [list(r) for r in self.gram],
                "kappa": list(self.kappa), "node_map": list(self.node_map)}


def add(*vs: Sequence[int]) -> Vector:
    return tuple(map(sum, zip(*vs)))


def scale(k: int, v: Sequence[int]) -> Vector:
    return tuple(k * a for a in v)


def _node_map(rs: RootSystem, edges) -> tuple[int, ...]:
    if rs.tag == "D5":
        return (1, 3, 2, 4, 5)
    assert set(edges) == {tuple(sorted(e)) for e in rs.diagram.edges}
    return tuple(rs.diagram.nodes)


def build_dplattice(rs: RootSystem) -> DPLattice:
    l = rs.rank
    edges = tuple(e for e in _CHAIN_EDGES if max(e) <= l)
    node_map = _node_map(rs, edges)
    # the relabelled diagram must be the root system's
    for a, b in edges:
        if not rs.diagram.adjacent(node_map[a - 1], node_map[b - 1]):
            raise ValueError(f"node map does not carry edge {a}-{b} for {rs.tag}")
    n = l + 1
    g = [[0] * n for _ in range(n)]
    for i in range(l):
        g[i][i] = -2
    for a, b in edges:
        g[a - 1][b - 1] = g[b - 1][a - 1] = 1
    g[l][l] = -1
    g[l][l - 1] = g[l - 1][l] = 1
    if abs(det(g)) != 1:
        raise ArithmeticError(f"gram matrix of {rs.tag} is not unimodular")
    # kappa: the class with kappa.delta_i = 0 and kappa.gamma = 1
    inv = inverse_unimodular(g)
    kappa = tuple(row[l] for row in inv)
    L = DPLattice(rs.tag, l, tuple(map(tuple, g)), kappa, node_map, edges)
    if L.dot(kappa, kappa) != 9 - l:
        raise ArithmeticError(f"kappa^2 = {L.dot(kappa, kappa)} for {rs.tag}")
    return L


# -- exhaustive enumeration --------------------------------------------------

@dataclass
class SearchCertificate:
    """Why an enumeration is complete.

    Every x with x.kappa = k splits as (k/d) kappa + y with y in the negative
    definite lattice kappa^perp = span(delta_i).  Writing y = sum y_i delta_i,
    x^2 = n forces y^T C y = k^2/d - n =: norm_bound with C the Cartan matrix,
    so |y_i| <= sqrt(norm_bound * (C^-1)_ii).  The search walks that box with
    exact pruning.
    """

    kappa_pairing: int
    square: int
    norm_bound: Fraction
    center: tuple[Fraction, ...]
    half_widths: tuple[float, ...]
    box: tuple[tuple[int, int], ...]
    nodes_visited: int = 0
    found: int = 0

    def to_json(self) -> dict:
        return {
            "kappa_pairing": self.kappa_pairing,
            "square": self.square,
            "norm_bound": str(self.norm_bound),
            "center": [str(c) for c in self.center],
            "half_widths": [round(h, 6) for h in self.half_widths],
            "box": [list(b) for b in self.box],
            "box_size": math.prod(hi - lo + 1 for lo, hi in self.box),
            "nodes_visited": self.nodes_visited,
            "found": self.found,
        }


def _ldl(c: Sequence[Sequence[int]]):
    n = len(c)
    L = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    D = [Fraction(0)] * n
    for j in range(n):
        D[j] = Fraction(c[j][j]) - sum(L[j][k] ** 2 * D[k] for k in range(j))
        for i in range(j + 1, n):
            L[i][j] = (Fraction(c[i][j]) - sum(L[i][k] * L[j][k] * D[k] for k in range(j))) / D[j]
    return L, D


def _isqrt_frac_ceil(q: Fraction) -> int:
    """Smallest integer s with s*s >= q, q >= 0."""
    s = math.isqrt(q.numerator // q.denominator)
    while s * s < q:
        s += 1
    return s


def enumerate_classes(L: DPLattice, kappa_pairing: int, square: int
                      ) -> tuple[list[Vector], SearchCertificate]:
    """All x with x.kappa = kappa_pairing and x.x = square, sorted."""
    l, d = L.l, L.degree
    k = kappa_pairing
    cartan = [[-L.gram[i][j] for j in range(l)] for i in range(l)]
    t = tuple(Fraction(k * L.kappa[i], d) for i in range(l))
    N = Fraction(k * k, d) - square
    cinv = rational_inverse(cartan)
    half = tuple(math.sqrt(N * cinv[i][i]) if N > 0 else 0.0 for i in range(l))
    box = []
    for i in range(l):
        r = N * cinv[i][i]
        lo = math.floor(t[i]) - _isqrt_frac_ceil(r) - 1 if N >= 0 else 0
        hi = math.ceil(t[i]) + _isqrt_frac_ceil(r) + 1 if N >= 0 else -1
        # tighten to the exact box |c_i - t_i|^2 <= N (C^-1)_ii
        while lo <= hi and (lo - t[i]) ** 2 > r:
            lo += 1
        while hi >= lo and (hi - t[i]) ** 2 > r:
            hi -= 1
        box.append((lo, hi))
    cert = SearchCertificate(k, square, N, t, half, tuple(box))
    if N < 0:
        return [], cert
    Lm, D = _ldl(cartan)
    found: list[Vector] = []
    c = [0] * l

    # q(y) = sum_i D_i (y_i + sum_{j>i} L_ji y_j)^2, enumerated from i = l-1 down
    def walk(i: int, budget: Fraction) -> None:
        cert.nodes_visited += 1
        if i < 0:
            x = tuple(c) + (k,)
            if L.dot(x, x) == square:
                found.append(x)
            return
        shift = sum(Lm[j][i] * (c[j] - t[j]) for j in range(i + 1, l))
        center = t[i] - shift
        rad = math.sqrt(max(budget / D[i], 0))
        lo = max(box[i][0], math.floor(center - rad) - 1)
        hi = min(box[i][1], math.ceil(center + rad) + 1)
        for v in range(lo, hi + 1):
            u = v - center
            used = D[i] * u * u
            if used <= budget:
                c[i] = v
                walk(i - 1, budget - used)
        c[i] = 0

    walk(l - 1, N)
    found.sort()
    cert.found = len(found)
    return found, cert


def enumerate_lines(L: DPLattice) -> tuple[list[Vector], SearchCertificate]:
    return enumerate_classes(L, 1, -1)


def enumerate_roots(L: DPLattice) -> tuple[list[Vector], SearchCertificate]:
    return enumerate_classes(L, 0, -2)


def closed_under_reflections(L: DPLattice, roots: Iterable[Vector]) -> bool:
    roots = set(roots)
    return all(L.reflect(a, b) in roots for a in roots for b in roots)


def dominant_lines(L: DPLattice, lines: Iterable[Vector]) -> list[Vector]:
    return [m for m in lines if all(L.dot(m, L.delta(i)) >= 0 for i in range(1, L.l + 1))]


def dominant_line(L: DPLattice, lines: Iterable[Vector] | None = None) -> Vector:
    """The unique line pairing nonnegatively with every delta_i; it must be gamma."""
    if lines is None:
        lines, _ = enumerate_lines(L)
    dom = dominant_lines(L, lines)
    if len(dom) != 1:
        raise ArithmeticError(f"{L.tag}: {len(dom)} dominant lines")
    m = dom[0]
    profile = [L.dot(m, L.delta(i)) for i in range(1, L.l + 1)]
    if m != L.gamma or profile != [0] * (L.l - 1) + [1]:
        raise ArithmeticError(f"{L.tag}: dominant line {m} with profile {profile}")
    return m


@dataclass(frozen=True)
class GeometricBasis:
    h: Vector
    e: tuple[Vector, ...]

    def matrix(self) -> list[list[int]]:
        """Rows are h, e_1, ..., e_l in (delta, gamma) coordinates."""
        return [list(self.h)] + [list(v) for v in self.e]


def geometric_basis(L: DPLattice) -> GeometricBasis:
    """Hyperplane class and exceptional curves of the l-fold blow-up.

    e_l = gamma, e_{i-1} = e_i + delta_i for i = l..3, e_1 = e_2 + delta_1,
    and 3h = kappa + sum e_i.
    """
    l = L.l
    e = {l: L.gamma}
    for i in range(l, 2, -1):
        e[i - 1] = add(e[i], L.delta(i))
    e[1] = add(e[2], L.delta(1))
    es = tuple(e[i] for i in range(1, l + 1))
    three_h = add(L.kappa, *es)
    if any(a % 3 for a in three_h):
        raise ArithmeticError(f"{L.tag}: kappa + sum e_i = {three_h} is not divisible by 3")
    return GeometricBasis(tuple(a // 3 for a in three_h), es)


def from_geometric(L: DPLattice, B: GeometricBasis, a: int, b: Sequence[int]) -> Vector:
    """The class a h - sum b_i e_i in (delta, gamma) coordinates."""
    return add(scale(a, B.h), *(scale(-bi, ei) for bi, ei in zip(b, B.e)))


def to_geometric(L: DPLattice, B: GeometricBasis, x: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Inverse of :func:`from_geometric`, using h^2 = 1 and e_i^2 = -1."""
    return L.dot(x, B.h), tuple(L.dot(x, ei) for ei in B.e)


# -- cones and chambers ------------------------------------------------------

def in_positive_cone(L: DPLattice, x: Sequence[int]) -> bool:
    return L.dot(x, x) > 0 and L.dot(x, L.kappa) > 0


@dataclass(frozen=True)
class NefReport:
    nef: bool
    nef_weak: bool
    boundary_lines: tuple[Vector, ...]
    negative_roots: tuple[Vector, ...]

    def to_json(self) -> dict:
        return {"nef": self.nef, "nef_weak": self.nef_weak,
                "on_boundary": bool(self.boundary_lines),
                "boundary_lines": [list(m) for m in self.boundary_lines],
                "violating_roots": [list(r) for r in self.negative_roots]}


def nef_report(L: DPLattice, x: Sequence[int], effective_roots: Iterable[Vector],
               lines: Iterable[Vector] | None = None) -> NefReport:
    """Test the nef criterion for x in the positive cone.

    ``nef`` uses x.m > 0 for every line m; ``nef_weak`` relaxes it to
    x.m >= 0.  Both require x.delta >= 0 on the effective roots.
    """
    if not in_positive_cone(L, x):
        raise ValueError(f"{list(x)} is not in the positive cone")
    if lines is None:
        lines, _ = enumerate_lines(L)
    pairings = [(m, L.dot(x, m)) for m in lines]
    bad_roots = tuple(r for r in effective_roots if L.dot(x, r) < 0)
    boundary = tuple(m for m, p in pairings if p == 0)
    strict = all(p > 0 for _, p in pairings) and not bad_roots
    weak = all(p >= 0 for _, p in pairings) and not bad_roots
    return NefReport(strict, weak, boundary, bad_roots)


def is_nef(L: DPLattice, x: Sequence[int], effective_roots: Iterable[Vector],
           lines: Iterable[Vector] | None = None) -> bool:
    return nef_report(L, x, effective_roots, lines).nef


def dominant_representative(L: DPLattice, x: Sequence[int], max_steps: int = 100_000
                            ) -> tuple[Vector, list[int]]:
    """Reflect in simple roots until x.delta_i >= 0 for all i."""
    if L.dot(x, L.kappa) < 0:
        raise ValueError("x.kappa must be nonnegative")
    x = tuple(x)
    word: list[int] = []
    for _ in range(max_steps):
        i = next((i for i in range(1, L.l + 1) if L.dot(x, L.delta(i)) < 0), None)
        if i is None:
            return x, word
        x = L.reflect(L.delta(i), x)
        word.append(i)
    raise RuntimeError("reflection walk did not terminate")


def orbit_closure(L: DPLattice, start: Vector) -> set[Vector]:
    seen = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        for i in range(1, L.l + 1):
            w = L.reflect(L.delta(i), v)
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


# -- the quotient by kappa ---------------------------------------------------

@dataclass(frozen=True)
class KappaQuotient:
    """I_{1,l} / Z kappa with explicit lifts of a basis.

    ``lifts[j]`` is a lattice vector whose class is the j-th basis element of
    the free quotient; ``coords(x)`` expresses the class of x in that basis.
    ``root_index`` is the index of the image of span(delta_i), and
    ``discriminant`` lists the invariant factors of that finite quotient.
    """

    lifts: tuple[Vector, ...]
    _V: tuple[Vector, ...] = field(repr=False)
    root_image: tuple[Vector, ...]
    root_index: int
    discriminant: tuple[int, ...]
    pairing_factors: tuple[int, ...]

    def coords(self, x: Sequence[int]) -> Vector:
        y = [sum(a * row[j] for a, row in zip(x, self._V)) for j in range(len(x))]
        return tuple(y[1:])


def kappa_quotient(L: DPLattice) -> KappaQuotient:
    U, S, V = smith_normal_form([list(L.kappa)])
    if S[0][0] != 1:
        raise ArithmeticError("kappa is not primitive")
    # in coordinates y = x V the sublattice Z kappa is Z e_0
    Vinv = inverse_unimodular(V)
    lifts = tuple(tuple(r) for r in Vinv[1:])
    q = KappaQuotient(lifts, tuple(map(tuple, V)), (), 0, (), ())
    img = [q.coords(L.delta(i)) for i in range(1, L.l + 1)]
    _, Sd, _ = smith_normal_form(img)
    factors = tuple(Sd[i][i] for i in range(L.l))
    index = abs(det(img))
    # x -> (x.delta_i)_i is onto Z^l with kernel Z kappa
    pairing = [[L.dot(L.delta(i), L.delta(j) if j <= L.l else L.gamma)
                for j in range(1, L.l + 2)] for i in range(1, L.l + 1)]
    pf = tuple(smith_normal_form(pairing)[1][i][i] for i in range(L.l))
    return KappaQuotient(lifts, tuple(map(tuple, V)), tuple(img), index,
                         tuple(f for f in factors if f != 1), pf)


def weight_coordinates(L: DPLattice, x: Sequence[int]) -> Vector:
    """Image of x in the weight lattice, in fundamental-weight coordinates.

    delta_j maps to the simple root alpha_j, so x maps to (-x.delta_i)_i.
    Coordinates follow the lattice node numbering.
    """
    return tuple(-L.dot(x, L.delta(i)) for i in range(1, L.l + 1))


def simple_system(L: DPLattice, roots: Iterable[Vector], functional: Sequence[int]) -> list[Vector]:
    """Simple roots of a root subsystem for the chamber where ``functional`` is positive.

    ``functional`` is a weight vector (one entry per delta_i) that must not
    vanish on any root.
    """
    def f(x):
        return sum(a * b for a, b in zip(functional, x))

    pos = [r for r in roots if f(r) > 0]
    if any(f(r) == 0 for r in roots):
        raise ValueError("functional vanishes on a root")
    pset = set(pos)
    simple = [r for r in pos
              if not any(tuple(a - b for a, b in zip(r, s)) in pset for s in pos)]
    return sorted(simple, key=f)


def cartan_of(L: DPLattice, simple: Sequence[Vector]) -> list[list[int]]:
    return [[-L.dot(a, b) for b in simple] for a in simple]


def cartan_isomorphic(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> bool:
    """Whether B is A with rows and columns simultaneously permuted."""
    n = len(A)
    if len(B) != n:
        return False
    perm: list[int] = []

    def extend() -> bool:
        i = len(perm)
        if i == n:
            return True
        for j in range(n):
            if j in perm:
                continue
            if all(A[i][k] == B[j][perm[k]] and A[k][i] == B[perm[k]][j] for k in range(i)) \
                    and A[i][i] == B[j][j]:
                perm.append(j)
                if extend():
                    return True
                perm.pop()
        return False

    return extend()


def relabelled_cartan(L: DPLattice, rs: RootSystem) -> list[list[int]]:
    """The root-system Cartan matrix rewritten in the lattice node numbering."""
    m = L.node_map
    return [[rs.cartan[m[i] - 1][m[j] - 1] for j in range(L.l)] for i in range(L.l)]


def canonical(vs: Iterable[Sequence[int]]) -> list[list[int]]:
    return [list(v) for v in sorted(set(map(tuple, vs)))]
