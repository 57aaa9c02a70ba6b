"""Recompute every table entry for a type and compare with the reference values."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Iterable

from . import reference as ref
from .gmweights import h0_dimension, looijenga_weights, presentation, z_weights
from .rootdata import TYPES, build_root_system, m_vector


@dataclass(frozen=True)
class VerificationReport:
    check: str
    type: str
    expected: Any
    computed: Any

    @property
    def status(self) -> str:
        return "pass" if self.expected == self.computed else "fail"

    def to_json(self) -> dict:
        return {"check": self.check, "type": self.type, "expected": self.expected,
                "computed": self.computed, "status": self.status}


def _weights_json(ms) -> dict:
    return {str(w): k for w, k in sorted(ms.items()) if k}


def table_checks(tag: str) -> list[VerificationReport]:
    # build fresh: no cached verdicts
    rs = build_root_system(tag)
    B, d = z_weights(rs)
    ci = presentation(rs)
    return [
        VerificationReport("m_vector", tag, list(ref.M_VECTOR[tag]), list(m_vector(rs))),
        VerificationReport("z_weights", tag,
                           {"d": list(ref.Z_DEGREES[tag]),
                            "weights": _weights_json(ref.Z_WEIGHTS[tag])},
                           {"d": d, "weights": _weights_json(B)}),
        VerificationReport("looijenga_weights", tag, _weights_json(ref.LOOIJENGA_WEIGHTS[tag]),
                           _weights_json(looijenga_weights(rs))),
        VerificationReport("ci_presentation", tag,
                           {k: list(v) for k, v in ref.CI_TABLE[tag].items()},
                           {"relations": list(ci.relations), "ambient": list(ci.ambient)}),
        VerificationReport("h0_dimension", tag, ref.H0_DIMENSION[tag], h0_dimension(rs)),
        VerificationReport("z_weight_count", tag, ref.Z_WEIGHT_COUNT[tag], B.size),
    ]


def run_tables(tags: Iterable[str] = TYPES, threads: int = 1) -> list[VerificationReport]:
    tags = list(tags)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(table_checks, tags))
    else:
        chunks = [table_checks(t) for t in tags]
    return [r for chunk in chunks for r in chunk]
