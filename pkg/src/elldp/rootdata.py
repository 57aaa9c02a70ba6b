"""Exact root systems of types D5, E6, E7, E8.

Nodes use Bourbaki numbering for E6-E8: the chain 1-3-4-5-6-7-8 with node 2
attached to the branch node 4.  D5 is labelled so that node 4 is still the
branch node and node 5 sits on one of the short arms: the long arm is
1-2-4 and nodes 3 and 5 are the two leaves on 4, i.e. the edges are
{1,2}, {2,4}, {3,4}, {4,5}.  This is *not* Bourbaki's D5 numbering; it is the
numbering in which the m-vector reads (8,7,8,6,8).  The Picard lattice uses
a different D5 numbering (see :mod:`elldp.dplattice`).

Roots are integer coefficient vectors over the simple roots.  Weights are
integer vectors in the fundamental-weight basis, so pairing a coroot vector
against a weight is a plain dot product.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

Vector = tuple[int, ...]

TYPES = ("D5", "E6", "E7", "E8")

_E8_EDGES = ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4))


def _edges_for(tag: str) -> tuple[tuple[int, int], ...]:
    if tag == "D5":
        return ((1, 2), (2, 4), (3, 4), (4, 5))
    rank = int(tag[1])
    return tuple(e for e in _E8_EDGES if max(e) <= rank)


@dataclass(frozen=True)
class DynkinDiagram:
    tag: str
    rank: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, tag: str) -> "DynkinDiagram":
        if tag not in TYPES:
            raise ValueError(f"unsupported type {tag!r}")
        return cls(tag, 5 if tag == "D5" else int(tag[1]), _edges_for(tag))

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    def neighbours(self, i: int) -> list[int]:
        return sorted(b if a == i else a for a, b in self.edges if i in (a, b))

    def adjacent(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in {(min(e), max(e)) for e in self.edges}


@dataclass(frozen=True)
class RootSystem:
    diagram: DynkinDiagram
    cartan: tuple[Vector, ...]
    positive_roots: tuple[Vector, ...]
    highest_root: Vector
    two_rho: Vector

    @property
    def tag(self) -> str:
        return self.diagram.tag

    @property
    def rank(self) -> int:
        return self.diagram.rank

    def to_weight(self, root: Sequence[int]) -> Vector:
        """Fundamental-weight coordinates of a simple-root combination."""
        return tuple(sum(c * r for c, r in zip(row, root)) for row in self.cartan)

    def simple_root(self, i: int) -> Vector:
        _check_node(self, i)
        return tuple(int(k == i) for k in self.diagram.nodes)

    def to_json(self) -> dict:
        return {
            "type": self.tag,
            "cartan": [list(r) for r in self.cartan],
            "positive_roots": [list(r) for r in self.positive_roots],
            "highest_root": list(self.highest_root),
            "m_vector": list(m_vector(self)),
        }


def _check_node(rs: RootSystem, i: int) -> None:
    if not 1 <= i <= rs.rank:
        raise IndexError(f"node {i} out of range 1..{rs.rank}")


def cartan_matrix(diagram: DynkinDiagram) -> tuple[Vector, ...]:
    n = diagram.rank
    rows = []
    for i in range(1, n + 1):
        rows.append(tuple(2 if i == j else (-1 if diagram.adjacent(i, j) else 0)
                          for j in range(1, n + 1)))
    return tuple(rows)


def _close_roots(cartan: tuple[Vector, ...]) -> list[Vector]:
    # alpha + alpha_i is a root iff q > 0 in the alpha_i-string p - q = <alpha, alpha_i^v>
    n = len(cartan)
    simple = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for a in layer:
            for i in range(n):
                p = 0
                down = list(a)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                pairing = sum(cartan[i][j] * a[j] for j in range(n))
                if p - pairing > 0:
                    b = list(a)
                    b[i] += 1
                    b = tuple(b)
                    if b not in roots:
                        roots.add(b)
                        nxt.append(b)
        layer = nxt
    return sorted(roots, key=lambda r: (sum(r), r))


def build_root_system(tag: str) -> RootSystem:
    diagram = DynkinDiagram.of(tag)
    cartan = cartan_matrix(diagram)
    roots = tuple(_close_roots(cartan))
    highest = max(roots, key=sum)
    # the maximum must dominate every root coefficientwise
    assert all(all(h >= c for h, c in zip(highest, r)) for r in roots)
    two_rho = tuple(sum(col) for col in zip(*(
        tuple(sum(c * x for c, x in zip(row, r)) for row in cartan) for r in roots)))
    return RootSystem(diagram, cartan, roots, highest, two_rho)


_CACHE: dict[str, RootSystem] = {}


def root_system(tag: str) -> RootSystem:
    """Cached :func:`build_root_system`; root systems are immutable."""
    if tag not in _CACHE:
        _CACHE[tag] = build_root_system(tag)
    return _CACHE[tag]


def pair(rs: RootSystem, v: Sequence[int], w: Sequence[int]) -> int:
    """Pair a coroot-coordinate vector with a weight-coordinate vector."""
    if len(v) != rs.rank or len(w) != rs.rank:
        raise ValueError("dimension mismatch")
    return sum(a * b for a, b in zip(v, w))


def two_rho_J(rs: RootSystem, J: Iterable[int]) -> Vector:
    """Sum of the positive roots with positive coefficient at some node of J.

    These are the roots of the unipotent radical of the standard parabolic
    attached to J; the sum is returned in fundamental-weight coordinates and
    is supported on J.
    """
    J = sorted(set(J))
    if not J:
        raise ValueError("J must be nonempty")
    for j in J:
        _check_node(rs, j)
    total = [0] * rs.rank
    for r in rs.positive_roots:
        if any(r[j - 1] > 0 for j in J):
            for k, c in enumerate(rs.to_weight(r)):
                total[k] += c
    return tuple(total)


def m_vector(rs: RootSystem) -> Vector:
    out = []
    for j in rs.diagram.nodes:
        w = two_rho_J(rs, [j])
        if any(c for k, c in enumerate(w, 1) if k != j):
            raise ArithmeticError(f"2rho_J for J={{{j}}} is not a multiple of the weight {j}")
        out.append(w[j - 1])
    return tuple(out)


def reflect(rs: RootSystem, i: int, w: Sequence[int]) -> Vector:
    _check_node(rs, i)
    k = w[i - 1]
    col = [row[i - 1] for row in rs.cartan]
    return tuple(a - k * c for a, c in zip(w, col))


def subsets(rs: RootSystem) -> Iterable[tuple[int, ...]]:
    """All nonempty subsets of the node set, smallest first."""
    nodes = list(rs.diagram.nodes)
    for k in range(1, len(nodes) + 1):
        yield from combinations(nodes, k)
