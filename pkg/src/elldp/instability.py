"""Cocharacter descent and the instability classification of cocharacters."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .rootdata import RootSystem, Vector, pair, subsets, two_rho_J


def is_nonpositive(v: Sequence[int]) -> bool:
    # pairing with every fundamental weight is just the coordinate itself
    return all(c <= 0 for c in v)


def descend(rs: RootSystem, v: Sequence[int]) -> tuple[Vector, list[int]]:
    """Subtract simple coroots until every coordinate is <= 0.

    At each step the smallest node j with <v, alpha_j> > 0 is chosen and
    alpha_j^v is subtracted.  Returns the endpoint and the list of chosen
    nodes.  Each step lowers <v, 2rho> by exactly 2, which bounds the loop.
    """
    if len(v) != rs.rank:
        raise ValueError("dimension mismatch")
    v = list(v)
    trace: list[int] = []
    while not is_nonpositive(v):
        # <v, alpha_j> = (C v)_j with C symmetric
        for j, row in enumerate(rs.cartan):
            if sum(a * b for a, b in zip(row, v)) > 0:
                break
        else:
            # v has a positive coordinate but pairs <= 0 with every simple
            # root; impossible because C is positive definite
            raise AssertionError(f"descent stuck at {v}")
        v[j] -= 1
        trace.append(j + 1)
    return tuple(v), trace


def deg_u(rs: RootSystem, r: Sequence[int], J: Iterable[int]) -> int:
    """Degree pairing <sum r_i alpha_i^v, 2rho_J> for a nonnegative r."""
    if any(c < 0 for c in r):
        raise ValueError("r must be nonnegative")
    return pair(rs, r, two_rho_J(rs, J))


@dataclass
class Classification:
    bound: int
    require_node5: bool
    box: Vector
    cocharacters: list[Vector]
    # candidate r -> first subset J with deg_u(r, J) >= bound
    rejected_by: dict[Vector, tuple[int, ...]] = field(default_factory=dict)
    rejected_node5: list[Vector] = field(default_factory=list)
    # same enumeration, filtered by singletons and pairs only
    small_filter: list[Vector] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "bound": self.bound,
            "require_node5": self.require_node5,
            "box": list(self.box),
            "cocharacters": [list(v) for v in self.cocharacters],
            "singleton_pair_filter": [list(v) for v in self.small_filter],
            "filters_agree": self.small_filter == self.cocharacters,
            "ledger": [
                {"r": list(r), "rejected_by": list(J)}
                for r, J in sorted(self.rejected_by.items())
            ] + [{"r": list(r), "rejected_by": "r_5 = 0"} for r in self.rejected_node5],
        }


def classify_unstable(rs: RootSystem, h0_bound: int, require_node5: bool) -> Classification:
    """Cocharacters -sum r_i alpha_i^v passing deg_u(r, J) < h0_bound for all J.

    Candidates range over the box r_i <= (h0_bound - 1) // m_i; the filter is
    applied to every nonempty J.  In the subregular case ``require_node5``
    additionally demands r_5 >= 1.
    """
    if h0_bound <= 0:
        raise ValueError("bound must be positive")
    all_J = list(subsets(rs))
    rho = {J: two_rho_J(rs, J) for J in all_J}
    box = tuple(rho[(j,)][j - 1] for j in rs.diagram.nodes)
    box = tuple((h0_bound - 1) // m for m in box)
    out = Classification(h0_bound, require_node5, box, [])
    for r in product(*(range(b + 1) for b in box)):
        if not any(r):
            continue
        if require_node5 and r[4] < 1:
            out.rejected_node5.append(r)
            continue
        bad = next((J for J in all_J if pair(rs, r, rho[J]) >= h0_bound), None)
        neg = tuple(-c for c in r)
        if bad is None:
            out.cocharacters.append(neg)
        else:
            out.rejected_by[r] = bad
        if all(pair(rs, r, rho[J]) < h0_bound for J in all_J if len(J) <= 2):
            out.small_filter.append(neg)
    out.cocharacters.sort()
    out.small_filter.sort()
    return out


def regular_bound(rs: RootSystem) -> int:
    return rs.rank + 2


def subregular_bound(rs: RootSystem) -> int:
    return rs.rank + 4


def classify(rs: RootSystem, mode: str) -> Classification:
    if mode == "regular":
        return classify_unstable(rs, regular_bound(rs), False)
    if mode == "subregular":
        return classify_unstable(rs, subregular_bound(rs), True)
    raise ValueError(f"unknown mode {mode!r}")
