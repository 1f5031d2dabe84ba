"""Periodic correlation engine and ZCZ / maximal-correlation verifiers.

Two numeric paths are available:

* exact: for sequences whose entries are ``order``-th roots of unity or zero,
  each correlation value is the cyclotomic integer ``sum_j c_j w^j``. The
  count vector ``c`` is computed exactly (directly, or by rounding an FFT of
  indicator vectors) and a value is zero iff ``sum_j c_j x^j`` is divisible
  by the cyclotomic polynomial of that order.
* float: plain complex arithmetic; a value counts as zero when its modulus
  is at most ``1e-6 * N``.

Lags are reported over ``[0, N)``. Negative lags follow from periodicity and
``R_ab(-t) = conj(R_ba(t))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Optional, Union

import numpy as np

from .seqcore import Claim, DeltaClaim, Sequence, SequenceSet, ZczClaim

CORR_RTOL = 1e-6  # float-path zero tolerance, scaled by N
DELTA_TOL = 1e-2  # delta vs. claim comparisons


def corr_tolerance(N: int) -> float:
    return CORR_RTOL * N


@dataclass(frozen=True)
class CorrelationProfile:
    """``R_{a,b}(tau)`` for ``tau`` in ``[0, N)``."""

    values: np.ndarray
    zero: np.ndarray
    exact: bool
    tolerance: float
    pair: Optional[tuple] = None
    counts: Optional[np.ndarray] = field(default=None, repr=False)
    order: Optional[int] = None

    @property
    def N(self) -> int:
        return int(self.values.size)

    @property
    def magnitudes(self) -> np.ndarray:
        return np.abs(self.values)

    def __getitem__(self, tau: int) -> complex:
        return complex(self.values[tau % self.N])

    def is_zero(self, tau: int) -> bool:
        return bool(self.zero[tau % self.N])

    def reversed_pair(self) -> "CorrelationProfile":
        """Profile of the swapped pair, from ``R_ba(t) = conj(R_ab(-t))``."""
        idx = (-np.arange(self.N)) % self.N
        counts = None
        if self.counts is not None:
            neg = (-np.arange(self.order)) % self.order
            counts = self.counts[idx][:, neg]
        pair = None if self.pair is None else (self.pair[1], self.pair[0])
        return CorrelationProfile(
            values=np.conj(self.values[idx]),
            zero=self.zero[idx],
            exact=self.exact,
            tolerance=self.tolerance,
            pair=pair,
            counts=counts,
            order=self.order,
        )


# -- float path ---------------------------------------------------------------


def _check_pair(a: Sequence, b: Sequence) -> None:
    if a.length != b.length:
        raise ValueError(f"length mismatch: {a.length} != {b.length}")


def correlation_direct(a: Sequence, b: Sequence) -> np.ndarray:
    """Direct O(N^2) evaluation of ``sum_i a_i conj(b_{i+tau})``."""
    _check_pair(a, b)
    x = a.values
    y = np.conj(b.values)
    N = x.size
    out = np.empty(N, dtype=np.complex128)
    for tau in range(N):
        out[tau] = np.dot(x, np.roll(y, -tau))
    return out


def correlation_fft(a: Sequence, b: Sequence) -> np.ndarray:
    """Transform-based O(N log N) evaluation of the same quantity."""
    _check_pair(a, b)
    return _fft_corr(np.fft.fft(a.values), np.fft.fft(b.values))


def _fft_corr(fa: np.ndarray, fb: np.ndarray) -> np.ndarray:
    # sum_i a_i conj(b_{i+t}) = conj(sum_i conj(a_i) b_{i+t})
    return np.conj(np.fft.ifft(np.conj(fa) * fb))


# -- exact path ---------------------------------------------------------------


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n: int) -> np.ndarray:
    """Coefficients of the n-th cyclotomic polynomial, ascending powers."""
    from sympy import Poly, Symbol, cyclotomic_poly

    x = Symbol("x")
    coeffs = Poly(cyclotomic_poly(n, x), x).all_coeffs()[::-1]
    out = np.array([int(c) for c in coeffs], dtype=np.int64)
    out.setflags(write=False)
    return out


def cyclotomic_is_zero(counts: np.ndarray, order: int) -> np.ndarray:
    """Row-wise exact test of ``sum_j counts[.., j] * w^j == 0``.

    ``w`` is a primitive ``order``-th root of unity. Works by reducing the
    count polynomial modulo the cyclotomic polynomial.
    """
    counts = np.asarray(counts)
    phi = cyclotomic_coeffs(order)
    deg = phi.size - 1
    rem = counts.astype(np.int64).reshape(-1, order).copy()
    limit = np.int64(1) << 52
    for k in range(order - 1, deg - 1, -1):
        c = rem[:, k].copy()
        if not c.any():
            continue
        rem[:, k - deg : k + 1] -= c[:, None] * phi[None, :]
        if np.abs(rem).max() > limit:
            raise OverflowError("cyclotomic reduction left the safe int64 range")
    return ~rem[:, :deg].any(axis=1).reshape(counts.shape[:-1])


def _roots(order: int) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(order) / order)


def _exact_operands(a: Sequence, b: Sequence, order: Optional[int] = None):
    if order is None:
        order = math.lcm(a.order, b.order)
    return a.lifted(order), a.support, b.lifted(order), b.support, order


def correlation_counts_direct(a: Sequence, b: Sequence, order: Optional[int] = None) -> np.ndarray:
    """Exact count matrix ``c[tau, j] = #{i : a_i conj(b_{i+tau}) = w^j}``.

    Direct O(N^2) evaluation; ``w`` is a primitive ``order``-th root.
    """
    _check_pair(a, b)
    da, sa, db, sb, order = _exact_operands(a, b, order)
    N = da.size
    out = np.zeros((N, order), dtype=np.int64)
    block = max(1, (1 << 21) // N)
    i = np.arange(N)
    for start in range(0, N, block):
        taus = np.arange(start, min(N, start + block))
        idx = (i[None, :] + taus[:, None]) % N
        diff = (da[None, :] - db[idx]) % order
        live = sa[None, :] & sb[idx]
        flat = (np.arange(taus.size)[:, None] * order + diff)[live]
        out[start : start + taus.size] = np.bincount(
            flat, minlength=taus.size * order
        ).reshape(taus.size, order)
    return out


def _indicator_spectra(s: Sequence, order: int) -> np.ndarray:
    d = s.lifted(order)
    sup = s.support
    ind = np.zeros((order, d.size))
    ind[d[sup], np.nonzero(sup)[0]] = 1.0
    return np.fft.rfft(ind, axis=1)


@lru_cache(maxsize=64)
def _diff_index(order: int) -> np.ndarray:
    x = np.arange(order)
    return (x[None, :] - x[:, None]) % order  # [j, x] -> x - j


def _counts_from_spectra(fa: np.ndarray, fb: np.ndarray, N: int) -> np.ndarray:
    order = fa.shape[0]
    # c_j(t) = sum_x sum_i [a_i = x][b_{i+t} = x - j]
    spec = np.einsum("xf,jxf->jf", np.conj(fa), fb[_diff_index(order)])
    raw = np.fft.irfft(spec, n=N, axis=1)
    counts = np.rint(raw)
    if np.abs(raw - counts).max() > 0.25:
        raise ArithmeticError("FFT count rounding is not trustworthy at this size")
    return counts.astype(np.int64).T


def correlation_counts_fft(a: Sequence, b: Sequence, order: Optional[int] = None) -> np.ndarray:
    """Exact count matrix via FFTs of per-digit indicator vectors."""
    _check_pair(a, b)
    if order is None:
        order = math.lcm(a.order, b.order)
    return _counts_from_spectra(
        _indicator_spectra(a, order), _indicator_spectra(b, order), a.length
    )


def _prefer_fft(N: int, order: Optional[int]) -> bool:
    if order is None:
        return N > 64
    return 2 * order * order < N


def _values_from_counts(counts: np.ndarray, order: int) -> np.ndarray:
    if order == 2:
        return (counts[:, 0] - counts[:, 1]).astype(np.complex128)
    if order == 4:
        return (counts[:, 0] - counts[:, 2]) + 1j * (counts[:, 1] - counts[:, 3])
    return counts @ _roots(order)


def _profile_from_counts(counts: np.ndarray, order: int, pair=None) -> CorrelationProfile:
    return CorrelationProfile(
        values=_values_from_counts(counts, order),
        zero=cyclotomic_is_zero(counts, order),
        exact=True,
        tolerance=0.0,
        pair=pair,
        counts=counts,
        order=order,
    )


def _profile_from_values(values: np.ndarray, pair=None) -> CorrelationProfile:
    tol = corr_tolerance(values.size)
    return CorrelationProfile(
        values=values, zero=np.abs(values) <= tol, exact=False, tolerance=tol, pair=pair
    )


def _resolve_exact(exact: Optional[bool], *seqs: Sequence) -> bool:
    can = all(s.is_exact for s in seqs)
    if exact is None:
        return can
    if exact and not can:
        raise ValueError("exact arithmetic requested for a general-alphabet sequence")
    return exact


def cross_correlation(
    a: Sequence, b: Sequence, method: str = "auto", exact: Optional[bool] = None
) -> CorrelationProfile:
    """Periodic cross-correlation ``R_{a,b}(tau)``, ``tau`` in ``[0, N)``.

    ``method`` is ``"direct"``, ``"fft"`` or ``"auto"``. ``exact`` defaults to
    the exact path whenever both sequences allow it.
    """
    _check_pair(a, b)
    if method not in ("auto", "direct", "fft"):
        raise ValueError(f"unknown method {method!r}")
    if _resolve_exact(exact, a, b):
        order = math.lcm(a.order, b.order)
        use_fft = method == "fft" or (method == "auto" and _prefer_fft(a.length, order))
        counts = (correlation_counts_fft if use_fft else correlation_counts_direct)(a, b, order)
        return _profile_from_counts(counts, order)
    use_fft = method == "fft" or (method == "auto" and _prefer_fft(a.length, None))
    vals = (correlation_fft if use_fft else correlation_direct)(a, b)
    return _profile_from_values(vals)


def autocorrelation(a: Sequence, method: str = "auto", exact: Optional[bool] = None):
    return cross_correlation(a, a, method=method, exact=exact)


def energy(s: Sequence) -> float:
    if s.is_exact:
        return float(np.count_nonzero(s.support))
    return float(np.sum(np.abs(s.values) ** 2))


def is_perfect(s: Sequence, method: str = "auto") -> bool:
    prof = autocorrelation(s, method=method)
    return bool(prof.zero[1:].all())


def _lag0(a: Sequence, b: Sequence, exact: bool) -> tuple:
    """(value, is_zero) of ``R_{a,b}(0)``."""
    if exact:
        order = math.lcm(a.order, b.order)
        da, sa, db, sb, _ = _exact_operands(a, b, order)
        live = sa & sb
        counts = np.bincount((da - db)[live] % order, minlength=order)
        counts = counts[None, :]
        return complex(_values_from_counts(counts, order)[0]), bool(cyclotomic_is_zero(counts, order)[0])
    v = complex(np.vdot(b.values, a.values))
    return v, abs(v) <= corr_tolerance(a.length)


def is_complete_orthogonal(B: SequenceSet) -> bool:
    """M == N, every member has positive energy, and distinct members are
    orthogonal at lag 0."""
    if B.M != B.N:
        return False
    exact = B.is_exact
    for s in B:
        if energy(s) <= (0 if exact else corr_tolerance(B.N)):
            return False
    for h in range(B.M):
        for k in range(h + 1, B.M):
            if not _lag0(B[h], B[k], exact)[1]:
                return False
    return True


def zcz_bound(N: int, M: int) -> Fraction:
    """``N/M - 1`` as an exact rational."""
    if N < 1 or M < 1:
        raise ValueError("N and M must be positive")
    return Fraction(N, M) - 1


# -- set-level engine ---------------------------------------------------------


class SetCorrelator:
    """Precomputes per-member spectra and hands out pair profiles."""

    def __init__(self, S: SequenceSet, method: str = "auto", exact: Optional[bool] = None):
        if method not in ("auto", "direct", "fft"):
            raise ValueError(f"unknown method {method!r}")
        self.S = S
        self.N = S.N
        self.exact = _resolve_exact(exact, *S.members)
        self.order = S.order if self.exact else None
        if method == "auto":
            method = "fft" if _prefer_fft(self.N, self.order) else "direct"
        self.method = method
        self._spectra = {}

    @property
    def tolerance(self) -> float:
        return 0.0 if self.exact else corr_tolerance(self.N)

    def _spectrum(self, h: int):
        if h not in self._spectra:
            s = self.S[h]
            if self.exact:
                self._spectra[h] = _indicator_spectra(s, self.order)
            else:
                self._spectra[h] = np.fft.fft(s.values)
        return self._spectra[h]

    def profile(self, h: int, k: int) -> CorrelationProfile:
        a, b = self.S[h], self.S[k]
        if self.exact:
            if self.method == "fft":
                counts = _counts_from_spectra(self._spectrum(h), self._spectrum(k), self.N)
            else:
                counts = correlation_counts_direct(a, b, self.order)
            return _profile_from_counts(counts, self.order, pair=(h, k))
        if self.method == "fft":
            vals = _fft_corr(self._spectrum(h), self._spectrum(k))
        else:
            vals = correlation_direct(a, b)
        return _profile_from_values(vals, pair=(h, k))

    def pairs(self, cross_pairs: Optional[list] = None) -> Iterator[CorrelationProfile]:
        """Yield profiles for all autocorrelations and, for every unordered
        cross pair (all of them by default), both ordered profiles."""
        for h in range(self.S.M):
            yield self.profile(h, h)
        if cross_pairs is None:
            cross_pairs = combinations(range(self.S.M), 2)
        for h, k in cross_pairs:
            prof = self.profile(h, k)
            yield prof
            yield prof.reversed_pair()


def _first_violation(prof: CorrelationProfile) -> int:
    """First lag at which the ZCZ condition fails (N if none)."""
    h, k = prof.pair if prof.pair else (0, 0)
    bad = ~prof.zero
    if h == k:
        bad = bad.copy()
        bad[0] = False
    idx = np.flatnonzero(bad)
    return int(idx[0]) if idx.size else prof.N


def _require_distinct(S: SequenceSet) -> None:
    dup = S.duplicate_pairs()
    if dup:
        raise ValueError(f"set has identical members {dup[:3]}; ZCZ is undefined")


def measure_zcz(S: SequenceSet, method: str = "auto", exact: Optional[bool] = None) -> int:
    """Largest Z such that auto-correlations vanish on ``1..Z`` and
    cross-correlations of distinct members vanish on ``0..Z``."""
    _require_distinct(S)
    corr = SetCorrelator(S, method=method, exact=exact)
    first = min(_first_violation(p) for p in corr.pairs())
    return max(first - 1, 0)


def _off_peak_max(prof: CorrelationProfile) -> float:
    mags = prof.magnitudes
    if prof.pair and prof.pair[0] == prof.pair[1]:
        mags = mags[1:]
    return float(mags.max()) if mags.size else 0.0


def max_correlation(S: SequenceSet, method: str = "auto", exact: Optional[bool] = None) -> float:
    """Maximal correlation magnitude, excluding only in-phase autocorrelation."""
    corr = SetCorrelator(S, method=method, exact=exact)
    # the swapped profile has the same magnitudes, so skip it
    best = 0.0
    for h in range(S.M):
        for k in range(h, S.M):
            best = max(best, _off_peak_max(corr.profile(h, k)))
    return best


@dataclass(frozen=True)
class ZczReport:
    N: int
    M: int
    measured_zcz: int
    delta: float
    bound: Fraction
    achieves_bound: bool
    tolerance: float
    exact: bool
    method: str
    pairs_checked: int
    exhaustive: bool
    peak_ok: bool
    claim: Optional[Claim] = None
    claim_satisfied: Optional[bool] = None

    def lines(self) -> list:
        out = [
            f"N = {self.N}",
            f"M = {self.M}",
            f"measured_zcz = {self.measured_zcz}",
            f"delta = {self.delta:.2f}",
            f"bound = {self.bound}",
            f"achieves_bound = {str(self.achieves_bound).lower()}",
            f"arithmetic = {'exact' if self.exact else 'float'} ({self.method}, tol={self.tolerance:g})",
            f"pairs_checked = {self.pairs_checked}{'' if self.exhaustive else ' (sampled)'}",
            f"peak_ok = {str(self.peak_ok).lower()}",
        ]
        if self.claim is not None:
            out.append(f"claim = {self.claim}")
            out.append(f"claim_satisfied = {str(self.claim_satisfied).lower()}")
        return out

    def __str__(self):
        return "\n".join(self.lines())


def sample_cross_pairs(M: int, k: int, seed: int = 0) -> list:
    """``k`` distinct unordered pairs ``h < k``, reproducible from ``seed``."""
    allp = list(combinations(range(M), 2))
    if k >= len(allp):
        return allp
    rng = np.random.default_rng(seed)
    pick = rng.choice(len(allp), size=k, replace=False)
    return sorted(allp[i] for i in pick)


def verify(
    S: SequenceSet,
    method: str = "auto",
    exact: Optional[bool] = None,
    pairs: Optional[int] = None,
    seed: int = 0,
    claim: Union[Claim, None, bool] = True,
) -> ZczReport:
    """Measure ZCZ width, maximal correlation and peak energies of ``S``.

    With ``pairs`` set, every autocorrelation is checked but only ``pairs``
    seeded random cross pairs are. ``claim=True`` checks ``S.claim`` if any;
    pass a claim object to check that instead, or None to skip.
    """
    _require_distinct(S)
    corr = SetCorrelator(S, method=method, exact=exact)
    cross = None if pairs is None else sample_cross_pairs(S.M, pairs, seed)
    total_cross = S.M * (S.M - 1) // 2
    first = S.N
    delta = 0.0
    peak_ok = True
    checked = 0
    for prof in corr.pairs(cross):
        checked += 1
        first = min(first, _first_violation(prof))
        delta = max(delta, _off_peak_max(prof))
        h, k = prof.pair
        if h == k:
            e = energy(S[h])
            if prof.exact:
                peak_ok &= bool(prof.counts[0, 0] == e and not prof.counts[0, 1:].any())
            else:
                peak_ok &= abs(prof.values[0] - e) <= prof.tolerance
    measured = max(first - 1, 0)
    bound = zcz_bound(S.N, S.M)
    if claim is True:
        claim = S.claim
    elif claim is False:
        claim = None
    satisfied = None
    if isinstance(claim, ZczClaim):
        satisfied = measured >= claim.zcz
    elif isinstance(claim, DeltaClaim):
        satisfied = delta <= claim.delta + DELTA_TOL
    return ZczReport(
        N=S.N,
        M=S.M,
        measured_zcz=measured,
        delta=delta,
        bound=bound,
        achieves_bound=measured == math.floor(bound),
        tolerance=corr.tolerance,
        exact=corr.exact,
        method=corr.method,
        pairs_checked=checked,
        exhaustive=cross is None or len(cross) == total_cross,
        peak_ok=bool(peak_ok),
        claim=claim,
        claim_satisfied=satisfied,
    )
