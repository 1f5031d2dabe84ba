"""Known quadriphase ZCZ parameters and witness constructions for them.

Rows are ``(N/M, M, Zcz, only_here)``; ``only_here`` marks parameters not
reached by earlier constructions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from .construct import theorem1_build, theorem2_build, theorem3_build, t1_canonical_shift
from .correlate import verify
from .generators import (builtin_perfect, fourier_set, hadamard, hadamard12_paper,
                         orthogonal_set)
from .seqcore import Sequence, SequenceSet, ZczClaim

TABLE_I = [
    (4, 2, 2, False),
    (4, 4, 2, False),
    (8, 2, 6, False),
    (8, 4, 6, False),
    (8, 8, 6, False),
    (16, 2, 14, False),
    (16, 4, 14, False),
    (16, 8, 14, False),
    (16, 12, 12, True),
    (16, 16, 14, False),
]

TABLE_II = [
    (8, 20, 6, True),
    (16, 20, 14, True),
    (8, 24, 6, False),
    (16, 24, 14, True),
    (8, 28, 6, True),
    (16, 28, 14, True),
    (8, 32, 6, False),
    (16, 32, 14, False),
    (8, 36, 6, True),
    (16, 36, 14, True),
]

# parameters of the worked examples that are not table rows
EXTRA = [
    (8, 12, 6, True),
]

WITNESS_MAX_N = 1024


def _quad_perfect(m: int) -> Sequence:
    if m == 4:
        return Sequence.binary([1, 1, 1, -1])
    return builtin_perfect({8: "quad8", 16: "quad16"}[m])


def _orthogonal(n: int) -> Optional[SequenceSet]:
    if n in (2, 4):
        return fourier_set(n)
    if n == 12:
        return orthogonal_set(hadamard12_paper())
    try:
        return orthogonal_set(hadamard(n))
    except ValueError:
        return None


@dataclass
class CatalogRow:
    table: str
    ratio: int
    M: int
    zcz: int
    only_here: bool
    method: str
    build: Optional[Callable[[], SequenceSet]]

    @property
    def N(self) -> int:
        return self.ratio * self.M


def _plan(table: str, ratio: int, M: int, zcz: int, only_here: bool) -> CatalogRow:
    B = _orthogonal(M)
    if B is None:
        return CatalogRow(table, ratio, M, zcz, only_here,
                          f"needs a Hadamard matrix of order {M} (not Sylvester/Paley)", None)
    a = _quad_perfect(ratio)
    if M > ratio:
        d = 1
        if math.gcd(ratio, M + d) != 1:
            return CatalogRow(table, ratio, M, zcz, only_here, "gcd condition fails", None)
        C = SequenceSet([a], claim=ZczClaim(ratio, 1, ratio - 1))
        return CatalogRow(table, ratio, M, zcz, only_here, f"expand perfect m={ratio}, n={M}, d=1",
                          lambda: theorem3_build(C, B, d)[0])
    if ratio % M == 0:
        e = t1_canonical_shift(ratio, M, "case2", 0)
        return CatalogRow(table, ratio, M, zcz, only_here, f"near-even shifts m={ratio}, n={M}",
                          lambda: theorem1_build(a, B, e)[0])
    return CatalogRow(table, ratio, M, zcz, only_here, f"shift-by-index m={ratio}, n={M}",
                      lambda: theorem2_build(a, B)[0])


def catalog_rows() -> list:
    rows = [_plan("I", *r) for r in TABLE_I]
    rows += [_plan("II", *r) for r in TABLE_II]
    rows += [_plan("extra", *r) for r in EXTRA]
    return rows


def check_witness(row: CatalogRow) -> tuple:
    """Build and verify a witness; returns (ok, message)."""
    if row.build is None:
        return False, "not constructible here"
    if row.N > WITNESS_MAX_N:
        return False, f"N={row.N} above witness limit"
    S = row.build()
    report = verify(S)
    quad = S.is_exact and 4 % S.order == 0
    ok = quad and S.N == row.N and S.M == row.M and report.measured_zcz >= row.zcz
    return ok, f"measured ({S.N}, {S.M}; {report.measured_zcz}) order={S.order}"
