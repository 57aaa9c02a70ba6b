"""Gm-weight bookkeeping: affine weights, Z-weights and the complete-intersection cone."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .rootdata import RootSystem
from .snf import rational_inverse

NODE5 = 5


class WeightMultiset(Counter):
    """Multiset of positive integer weights, weight -> multiplicity."""

    def __init__(self, weights: Iterable[int] | Mapping[int, int] = ()):
        super().__init__(weights)
        for w, k in self.items():
            if w < 1 or k < 0:
                raise ValueError(f"bad weight {w} with multiplicity {k}")

    @property
    def size(self) -> int:
        return sum(self.values())

    def as_list(self) -> list[int]:
        return sorted(self.elements())

    def __str__(self) -> str:
        parts = []
        for w in sorted(self):
            k = self[w]
            if k:
                parts.append(str(w) if k == 1 else f"{w}^{k}")
        return " ".join(parts)


@dataclass(frozen=True)
class CIPresentation:
    ambient: tuple[int, ...]
    relations: tuple[int, ...]
    e: int = 1

    @property
    def embedding_dimension(self) -> int:
        return len(self.ambient)

    @property
    def codimension(self) -> int:
        return len(self.relations)

    @property
    def dimension(self) -> int:
        return self.embedding_dimension - self.codimension

    def multiplicity(self) -> int:
        """Multiplicity at the vertex of a general CI with these weights.

        A general relation of weighted degree D has order equal to the least
        total degree of a monomial of weighted degree D; the orders multiply.
        """
        out = 1
        for D in self.relations:
            out *= _least_total_degree(D, self.ambient)
        return out

    def __str__(self) -> str:
        rel = ",".join(map(str, self.relations))
        amb = ",".join(map(str, self.ambient))
        return f"X0 = ({rel}) in A{len(self.ambient)}({amb})"


def _least_total_degree(D: int, weights: tuple[int, ...]) -> int:
    # coin-change minimum over the distinct weights
    INF = D + 1
    best = [0] + [INF] * D
    for t in range(1, D + 1):
        for w in set(weights):
            if w <= t and best[t - w] + 1 < best[t]:
                best[t] = best[t - w] + 1
    if best[D] == INF:
        raise ValueError(f"no monomial of degree {D} in weights {weights}")
    return best[D]


def degree(rs: RootSystem) -> int:
    """Expected del Pezzo degree 9 - l."""
    return 9 - rs.rank


def embdim_cap(rs: RootSystem) -> int:
    return max(degree(rs), 3)


def looijenga_weights(rs: RootSystem) -> WeightMultiset:
    return WeightMultiset([1, *rs.highest_root])


def z_weights(rs: RootSystem) -> tuple[WeightMultiset, list[int]]:
    """Weights of Gm acting through the fundamental coweight at node 5.

    Positive roots are graded by their alpha_5 coefficient i.  For each
    grade the root sum must be an exact multiple n_i of the fundamental
    weight at node 5; the degree d_i is that multiple, and grade i occurs
    with multiplicity d_i.
    """
    k = NODE5 - 1
    by_grade: dict[int, list] = {}
    for r in rs.positive_roots:
        if r[k] > 0:
            by_grade.setdefault(r[k], []).append(r)
    top = rs.highest_root[k]
    if sorted(by_grade) != list(range(1, top + 1)):
        raise ArithmeticError(f"grades {sorted(by_grade)} do not run 1..{top}")
    d = []
    for i in range(1, top + 1):
        total = [0] * rs.rank
        for r in by_grade[i]:
            for j, c in enumerate(rs.to_weight(r)):
                total[j] += c
        if any(c for j, c in enumerate(total) if j != k):
            raise ArithmeticError(f"grade {i} root sum {total} is not a multiple of the node-5 weight")
        n_i = total[k]
        # n_i <w5, w5> = i * #I(i); <w5, w5> is the (5,5) entry of C^-1
        if n_i * _inverse_cartan_diag(rs, k) != i * len(by_grade[i]):
            raise ArithmeticError(f"grade {i}: n_i = {n_i} fails the counting identity")
        d.append(n_i)
    return WeightMultiset({i: n for i, n in enumerate(d, 1)}), d


def _inverse_cartan_diag(rs: RootSystem, k: int) -> Fraction:
    return rational_inverse(rs.cartan)[k][k]


def h0_dimension(rs: RootSystem) -> int:
    _, d = z_weights(rs)
    return 1 + sum(d)


def ci_presentation(A: WeightMultiset, B: WeightMultiset, e: int,
                    cap: int | None = None) -> CIPresentation | None:
    """Cancel each weight n of A against a copy of e*n in B.

    Unmatched scaled A-weights become relation degrees and leftover
    B-weights become ambient weights.  Returns None when ``cap`` is given and
    more than ``cap`` ambient weights survive.
    """
    if not A or not B:
        raise ValueError("weight multisets must be nonempty")
    if e < 1:
        raise ValueError("e must be positive")
    left = Counter(B)
    relations = []
    for n in sorted(A.elements()):
        if left[e * n] > 0:
            left[e * n] -= 1
        else:
            relations.append(e * n)
    ambient = tuple(sorted(left.elements()))
    if cap is not None and len(ambient) > cap:
        return None
    return CIPresentation(ambient, tuple(relations), e)


def scan_e(rs: RootSystem) -> list[int]:
    """Values of e for which the cancellation leaves at most max(9-l, 3) weights."""
    A = looijenga_weights(rs)
    B, _ = z_weights(rs)
    # beyond max(B) / min(A) nothing cancels and all l+3 weights survive
    top = max(B) // min(A)
    return [e for e in range(1, top + 1)
            if ci_presentation(A, B, e, embdim_cap(rs)) is not None]


def presentation(rs: RootSystem) -> CIPresentation:
    A = looijenga_weights(rs)
    B, _ = z_weights(rs)
    ci = ci_presentation(A, B, 1, embdim_cap(rs))
    if ci is None:
        raise ArithmeticError(f"{rs.tag}: e = 1 leaves too many ambient weights")
    return ci
