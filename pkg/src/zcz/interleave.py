"""Interleaved construction of long sequences from a column set and a
complete orthogonal set, plus a column-wise correlation oracle."""

from __future__ import annotations

import math

import numpy as np

from .correlate import is_complete_orthogonal
from .seqcore import Sequence, SequenceSet, ShiftSequence


def associate(A: SequenceSet) -> Sequence:
    """Read the ``m x n`` matrix whose columns are ``A`` row by row.

    Entry ``r*n + s`` of the result is entry ``r`` of ``A[s]``.
    """
    cols = list(A)
    m = cols[0].length
    if any(c.length != m for c in cols):
        raise ValueError("ragged column set")
    if all(c.is_exact for c in cols):
        order = math.lcm(*(c.order for c in cols))
        digits = np.stack([c.lifted(order) for c in cols], axis=1).reshape(-1)
        support = np.stack([c.support for c in cols], axis=1).reshape(-1)
        return Sequence(digits=digits, order=order, support=support)
    return Sequence(values=np.stack([c.values for c in cols], axis=1).reshape(-1))


def _tile(b: Sequence, reps: int) -> Sequence:
    if b.is_exact:
        return Sequence(digits=np.tile(b.digits, reps), order=b.order, support=np.tile(b.support, reps))
    return Sequence(values=np.tile(b.values, reps))


def interleave(A: SequenceSet, B: SequenceSet, check: bool = True) -> SequenceSet:
    """``s_h[i] = u[i] * b_h[i mod n]`` where ``u = associate(A)``.

    ``B`` must be a complete orthogonal set of ``n = |A|`` sequences; this is
    checked unless ``check`` is False.
    """
    n = A.M
    if B.M != n or B.N != n:
        raise ValueError(f"B must hold {n} sequences of length {n}, got ({B.N}, {B.M})")
    if check and not is_complete_orthogonal(B):
        raise ValueError("B is not a complete orthogonal set")
    u = associate(A)
    m = A.N
    return SequenceSet([u * _tile(b, m) for b in B])


def _corr_at(x: np.ndarray, y: np.ndarray, lag: int) -> complex:
    return complex(np.dot(x, np.conj(np.roll(y, -lag))))


def prop1_correlation(A: SequenceSet, B: SequenceSet, h: int, k: int, tau: int) -> complex:
    """``R_{s_h, s_k}(tau)`` of ``interleave(A, B)`` computed column-wise.

    Writes ``tau = r*n + s`` and sums ``d_i * R_{a_i, a_c}(r + phi)`` over
    columns, where ``phi = 1`` iff ``s + i >= n`` and ``c = s + i - phi*n``.
    """
    n, m = A.M, A.N
    if not (0 <= h < n and 0 <= k < n):
        raise IndexError(f"member index out of range for n={n}")
    if not 0 <= tau < m * n:
        raise IndexError(f"lag {tau} outside [0, {m * n})")
    r, s = divmod(tau, n)
    bh, bk = B[h].values, B[k].values
    total = 0j
    for i in range(n):
        phi = 1 if s + i >= n else 0
        c = s + i - phi * n
        d = bh[i] * np.conj(bk[c])
        total += d * _corr_at(A[i].values, A[c].values, r + phi)
    return total


def shifted_correlation(a: Sequence, e: ShiftSequence, B: SequenceSet, h: int, k: int, tau: int) -> complex:
    """Column-wise correlation when ``A = {L^{e_i}(a)}``: only the
    autocorrelation of ``a`` at lags ``e_{i+s} - e_i + r`` is needed."""
    n = e.n
    r, s = divmod(tau, n)
    auto = a.values
    bh, bk = B[h].values, B[k].values
    total = 0j
    for i in range(n):
        c = (s + i) % n
        total += bh[i] * np.conj(bk[c]) * _corr_at(auto, auto, e[i + s] - e[i] + r)
    return total
