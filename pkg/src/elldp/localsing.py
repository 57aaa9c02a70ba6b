"""Milnor numbers of isolated hypersurface singularities in x, y, z.

mu = dim O/J, with O the local ring at the origin and J the Jacobian ideal.
We compute dim K[x,y,z]/(J + m^N) for N = 1, 2, ... by linear algebra on
monomials of degree < N.  If two consecutive values agree then
m^N is contained in J + m^(N+1), hence in J O by Nakayama, and the common
value is mu.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Optional

Monomial = tuple[int, int, int]
Poly = dict[Monomial, int]

DEFAULT_P = 10007
VARS = ("x", "y", "z")


class CapTooSmall(RuntimeError):
    pass


def parse_poly(text: str, p: Optional[int] = DEFAULT_P) -> Poly:
    """Parse a polynomial string such as ``"z^2+y^3+x^6+1*x^3*y"``."""
    import sympy

    x, y, z = sympy.symbols("x y z")
    expr = sympy.sympify(text.replace("^", "**"), locals={"x": x, "y": y, "z": z})
    poly = sympy.Poly(sympy.expand(expr), x, y, z)
    out: Poly = {}
    for mono, c in poly.terms():
        c = sympy.Rational(c)
        if p is None:
            val = Fraction(int(c.p), int(c.q))
        else:
            val = int(c.p) * pow(int(c.q), -1, p) % p
        if val:
            out[tuple(mono)] = val
    return out


def _norm(f: Poly, p: Optional[int]) -> Poly:
    if p is None:
        return {m: c for m, c in f.items() if c}
    return {m: c % p for m, c in f.items() if c % p}


def poly_add(f: Poly, g: Poly, p: Optional[int] = DEFAULT_P) -> Poly:
    out = dict(f)
    for m, c in g.items():
        out[m] = out.get(m, 0) + c
    return _norm(out, p)


def poly_mul(f: Poly, g: Poly, p: Optional[int] = DEFAULT_P) -> Poly:
    out: dict = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
            out[m] = out.get(m, 0) + c1 * c2
    return _norm(out, p)


def poly_pow(f: Poly, n: int, p: Optional[int] = DEFAULT_P) -> Poly:
    out: Poly = {(0, 0, 0): 1}
    for _ in range(n):
        out = poly_mul(out, f, p)
    return out


def substitute_linear(f: Poly, M, p: Optional[int] = DEFAULT_P) -> Poly:
    """f(M @ (x, y, z)) for a 3x3 matrix M."""
    lin = [{(1, 0, 0): M[i][0], (0, 1, 0): M[i][1], (0, 0, 1): M[i][2]} for i in range(3)]
    lin = [_norm(g, p) for g in lin]
    out: Poly = {}
    for (a, b, c), coeff in f.items():
        term = poly_mul(poly_mul(poly_pow(lin[0], a, p), poly_pow(lin[1], b, p), p),
                        poly_pow(lin[2], c, p), p)
        out = poly_add(out, {m: coeff * v for m, v in term.items()}, p)
    return out


def derivative(f: Poly, var: int, p: Optional[int] = DEFAULT_P) -> Poly:
    out: dict = {}
    for m, c in f.items():
        if m[var]:
            d = list(m)
            d[var] -= 1
            out[tuple(d)] = c * m[var]
    return _norm(out, p)


def _monomials_below(N: int) -> list[Monomial]:
    return [m for d in range(N) for m in product(range(d + 1), repeat=3) if sum(m) == d]


def _rank(rows: list[dict[int, object]], p: Optional[int]) -> int:
    pivots: dict[int, dict[int, object]] = {}
    for row in rows:
        row = dict(row)
        while row:
            col = min(row)
            if col not in pivots:
                inv = pow(row[col], -1, p) if p is not None else 1 / row[col]
                pivots[col] = {k: (v * inv % p if p is not None else v * inv)
                               for k, v in row.items()}
                break
            piv = pivots[col]
            f = row[col]
            for k, v in piv.items():
                nv = row.get(k, 0) - f * v
                if p is not None:
                    nv %= p
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return len(pivots)


def quotient_dimension(f: Poly, N: int, p: Optional[int] = DEFAULT_P) -> int:
    """dim K[x,y,z] / (J + m^N)."""
    monos = _monomials_below(N)
    index = {m: i for i, m in enumerate(monos)}
    rows = []
    for var in range(3):
        g = derivative(f, var, p)
        if not g:
            continue
        low = min(sum(m) for m in g)
        for m in monos:
            if sum(m) + low >= N:
                continue
            row = {}
            for gm, c in g.items():
                mm = (m[0] + gm[0], m[1] + gm[1], m[2] + gm[2])
                if sum(mm) < N:
                    row[index[mm]] = c
            if row:
                rows.append(row)
    return len(monos) - _rank(rows, p)


@dataclass
class MilnorResult:
    mu: Optional[int]
    stabilized_at: Optional[int]
    isolated: bool
    dims: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"mu": self.mu, "stabilized_at": self.stabilized_at,
                "isolated": self.isolated, "dims": self.dims}


def milnor_number(f: Poly, degree_cap: int = 20, p: Optional[int] = DEFAULT_P) -> MilnorResult:
    """Milnor number at the origin, or a non-isolated verdict.

    ``stabilized_at`` is the first N with dim(J + m^N) = dim(J + m^(N+1)).
    The non-isolated verdict is a heuristic: it needs nondecreasing growth
    over the last three steps and a cap of at least twice deg f, so that
    high pure powers such as z^30 are not mistaken for a singular curve.
    Anything else unsettled raises :class:`CapTooSmall`.
    """
    f = _norm(f, p)
    if f.get((0, 0, 0)):
        raise ValueError("f must vanish at the origin")
    if any(sum(m) == 1 for m in f):
        raise ValueError("origin is not a critical point of f")
    dims = []
    for N in range(1, degree_cap + 2):
        dims.append(quotient_dimension(f, N, p))
        if len(dims) >= 2 and dims[-1] == dims[-2]:
            return MilnorResult(dims[-1], N - 1, True, dims)
    steps = [b - a for a, b in zip(dims, dims[1:])]
    growing = len(steps) >= 3 and steps[-1] >= steps[-2] >= steps[-3] > 0
    if growing and degree_cap >= 2 * max(sum(m) for m in f):
        return MilnorResult(None, None, False, dims)
    raise CapTooSmall(f"no stabilization below degree {degree_cap}: dims {dims}")


def family_member(t: int, delta: int = 0) -> Poly:
    """z^2 + y^3 + x^6 + delta x^4 y + t x^3 y."""
    f: Poly = {(0, 0, 2): 1, (0, 3, 0): 1, (6, 0, 0): 1}
    if delta:
        f[(4, 1, 0)] = delta
    if t:
        f[(3, 1, 0)] = t
    return f
