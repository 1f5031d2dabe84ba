"""Raw material for the constructions: perfect sequences, Hadamard matrices
and the complete orthogonal sets derived from them."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from sympy import isprime, legendre_symbol

from .seqcore import Sequence, SequenceSet

_BUILTIN = {
    "tri9": ("000012021", 3),
    "quad16": ("0000012302020321", 4),
    "quad8": ("01022122", 4),
    # second length-8 quadriphase perfect sequence, used for the [64, 8; 16] set
    "quad8b": ("00120210", 4),
    "ternary13": ("----0+-+00-0+", None),
}

_PAPER12 = """
++-+++---+--
+-+++---+--+
++++---+--+-
+++---+--+-+
++---+--+-++
+---+--+-+++
+--+--+-+++-
+-+--+-+++--
++--+-+++---
+--+-+++---+
+-+-+++---+-
++++++++++++
"""


def builtin_perfect(name: str) -> Sequence:
    """Catalogued perfect sequences: tri9, quad16, quad8, quad8b, ternary13."""
    try:
        text, p = _BUILTIN[name]
    except KeyError:
        raise KeyError(f"unknown builtin perfect sequence {name!r}; "
                       f"choose from {sorted(_BUILTIN)}") from None
    return Sequence.from_string(text, p)


def builtin_names() -> list:
    return sorted(_BUILTIN)


def chu_perfect(N: int, u: int = 1) -> Sequence:
    """Chu-type perfect polyphase sequence of length ``N``.

    Even ``N``: phase ``pi*u*k^2/N`` (2N-th roots of unity).
    Odd ``N``: phase ``2*pi*u*k^2/N`` (N-th roots of unity).
    """
    if N < 1:
        raise ValueError("N must be positive")
    if math.gcd(u, N) != 1:
        raise ValueError(f"u={u} must be coprime to N={N}")
    k = np.arange(N, dtype=np.int64)
    if N % 2 == 0:
        return Sequence.phase(u * k * k % (2 * N), 2 * N)
    return Sequence.phase(u * k * k % N, N)


@dataclass(frozen=True, eq=False)
class HadamardMatrix:
    entries: np.ndarray

    def __post_init__(self):
        H = np.asarray(self.entries, dtype=np.int64)
        if H.ndim != 2 or H.shape[0] != H.shape[1]:
            raise ValueError("Hadamard matrix must be square")
        if not np.all(np.abs(H) == 1):
            raise ValueError("entries must be +1 or -1")
        n = H.shape[0]
        if not np.array_equal(H @ H.T, n * np.eye(n, dtype=np.int64)):
            raise ValueError("H H^T != n I")
        H.setflags(write=False)
        object.__setattr__(self, "entries", H)

    @property
    def order(self) -> int:
        return int(self.entries.shape[0])


_H2 = np.array([[1, 1], [1, -1]])


def sylvester(t: int) -> HadamardMatrix:
    """Order ``2**t``, built as the ``t``-fold Kronecker power of H2."""
    if t < 0:
        raise ValueError("t must be non-negative")
    H = np.ones((1, 1), dtype=np.int64)
    for _ in range(t):
        H = np.kron(H, _H2)
    return HadamardMatrix(H)


def _jacobsthal(q: int) -> np.ndarray:
    chi = np.array([0] + [legendre_symbol(x, q) for x in range(1, q)], dtype=np.int64)
    idx = np.arange(q)
    return chi[(idx[None, :] - idx[:, None]) % q]


def paley(q: int) -> HadamardMatrix:
    """Paley type I Hadamard matrix of order ``q + 1`` for a prime
    ``q = 3 (mod 4)``."""
    if not (q > 2 and isprime(q) and q % 4 == 3):
        raise ValueError(f"paley needs an odd prime q = 3 (mod 4), got {q}")
    S = np.zeros((q + 1, q + 1), dtype=np.int64)
    S[0, 1:] = 1
    S[1:, 0] = -1
    S[1:, 1:] = _jacobsthal(q)
    return HadamardMatrix(S + np.eye(q + 1, dtype=np.int64))


def paley2(q: int) -> HadamardMatrix:
    """Paley type II Hadamard matrix of order ``2(q + 1)`` for a prime
    ``q = 1 (mod 4)``."""
    if not (isprime(q) and q % 4 == 1):
        raise ValueError(f"paley2 needs a prime q = 1 (mod 4), got {q}")
    S = np.zeros((q + 1, q + 1), dtype=np.int64)
    S[0, 1:] = 1
    S[1:, 0] = 1
    S[1:, 1:] = _jacobsthal(q)
    H = np.kron(S, [[1, -1], [-1, -1]]) + np.kron(np.eye(q + 1, dtype=np.int64), [[1, 1], [1, -1]])
    return HadamardMatrix(H)


def hadamard12_paper() -> HadamardMatrix:
    rows = [r for r in _PAPER12.split() if r]
    return HadamardMatrix(np.array([[1 if c == "+" else -1 for c in r] for r in rows]))


def hadamard(order: int) -> HadamardMatrix:
    """Some Hadamard matrix of the given order: Sylvester for powers of
    two, otherwise a Sylvester matrix Kronecker a Paley matrix of type I
    (``rest - 1`` prime) or type II (``rest/2 - 1`` prime)."""
    if order >= 1 and order & (order - 1) == 0:
        return sylvester(order.bit_length() - 1)
    t, rest = 0, order
    while rest >= 4 and rest % 2 == 0:
        q = rest - 1
        if isprime(q) and q % 4 == 3:
            return HadamardMatrix(np.kron(sylvester(t).entries, paley(q).entries))
        q = rest // 2 - 1
        if isprime(q) and q % 4 == 1:
            return HadamardMatrix(np.kron(sylvester(t).entries, paley2(q).entries))
        t, rest = t + 1, rest // 2
    raise ValueError(f"no Sylvester/Paley Hadamard matrix of order {order} available")


def orthogonal_set(H: HadamardMatrix) -> SequenceSet:
    """The rows of ``H`` as a complete orthogonal binary set."""
    return SequenceSet([Sequence.binary(row) for row in H.entries])


def fourier_set(n: int) -> SequenceSet:
    """Rows of the order-``n`` DFT matrix as n-phase sequences."""
    i = np.arange(n)
    return SequenceSet([Sequence.phase(h * i % n, n) for h in range(n)])
