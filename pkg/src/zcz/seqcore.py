"""Sequences, ordered sequence sets, shift sequences and cyclic shifts.

Sequences whose entries are roots of unity (optionally mixed with zeros) are
stored exactly as a digit vector over the ``order``-th roots of unity plus a
support mask; complex values are materialised lazily. Anything else is kept
as a plain complex vector (the "general" alphabet).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence as PySequence, Union

import numpy as np

EPS_ENTRY = 1e-9

_TERNARY_CHARS = {"+": 1, "-": -1, "0": 0}
_DIGIT_CHARS = "0123456789abcdefghijklmnopqrstuvwxyz"


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, copy=True)
    arr.setflags(write=False)
    return arr


class Sequence:
    """A finite periodic sequence.

    Use the ``phase``/``binary``/``ternary``/``of`` constructors rather than
    calling ``__init__`` directly. Instances are immutable.
    """

    __slots__ = ("_digits", "_order", "_support", "_values")

    def __init__(self, *, digits=None, order=None, support=None, values=None):
        if digits is not None:
            if order is None or order < 1:
                raise ValueError("exact sequences need a positive order")
            digits = np.asarray(digits, dtype=np.int64)
            if digits.ndim != 1 or digits.size == 0:
                raise ValueError("sequence must be a non-empty vector")
            if order == 1:
                # 1-phase is the constant sequence; treat it as binary
                order = 2
            digits = digits % order
            if support is not None:
                support = np.asarray(support, dtype=bool)
                if support.shape != digits.shape:
                    raise ValueError("support mask has the wrong length")
                if support.all():
                    support = None
                else:
                    digits = np.where(support, digits, 0)
            self._digits = _readonly(digits)
            self._order = int(order)
            self._support = None if support is None else _readonly(support)
            self._values = None
        else:
            if values is None:
                raise ValueError("either digits or values must be given")
            values = np.asarray(values, dtype=np.complex128)
            if values.ndim != 1 or values.size == 0:
                raise ValueError("sequence must be a non-empty vector")
            self._digits = None
            self._order = None
            self._support = None
            self._values = _readonly(values)

    # -- constructors -------------------------------------------------------

    @classmethod
    def phase(cls, digits: Iterable[int], p: int) -> "Sequence":
        """p-phase sequence; digit ``l`` stands for ``exp(2*pi*1j*l/p)``."""
        return cls(digits=list(digits), order=p)

    @classmethod
    def binary(cls, values: Iterable[int]) -> "Sequence":
        vals = np.asarray(list(values))
        if not np.all(np.isin(vals, (1, -1))):
            raise ValueError("binary entries must be +1 or -1")
        return cls(digits=(vals == -1).astype(np.int64), order=2)

    @classmethod
    def ternary(cls, values: Iterable[int]) -> "Sequence":
        vals = np.asarray(list(values))
        if not np.all(np.isin(vals, (1, -1, 0))):
            raise ValueError("ternary entries must be +1, -1 or 0")
        return cls(digits=(vals == -1).astype(np.int64), order=2, support=vals != 0)

    @classmethod
    def from_complex(cls, values: Iterable[complex]) -> "Sequence":
        """General-alphabet sequence; no exact representation is attempted."""
        return cls(values=np.asarray(list(values), dtype=np.complex128))

    @classmethod
    def of(cls, values: Iterable[complex]) -> "Sequence":
        """Build a sequence, picking the exact form when entries allow it.

        Entries in {0, +1, -1} give a binary/ternary sequence, entries in
        {0, +1, -1, +j, -j} a quadriphase one; anything else is general.
        """
        vals = np.asarray(list(values), dtype=np.complex128)
        quad = np.array([1, 1j, -1, -1j])
        dist = np.abs(vals[:, None] - quad[None, :])
        nearest = dist.argmin(axis=1)
        is_zero = np.abs(vals) <= EPS_ENTRY
        on_grid = (dist.min(axis=1) <= EPS_ENTRY) | is_zero
        if vals.size and on_grid.all():
            support = ~is_zero
            if np.all(nearest[support] % 2 == 0):
                return cls(digits=nearest // 2, order=2, support=support)
            return cls(digits=nearest, order=4, support=support)
        return cls(values=vals)

    @classmethod
    def from_string(cls, text: str, p: Optional[int] = None) -> "Sequence":
        """Parse the digit notation used in set files.

        With ``p`` given, ``text`` is a string of base-``p`` digits. Without
        it, ``text`` must use the ternary characters ``+``, ``-`` and ``0``.
        """
        text = "".join(text.split())
        if p is None:
            try:
                return cls.ternary([_TERNARY_CHARS[c] for c in text])
            except KeyError as exc:
                raise ValueError(f"bad ternary character {exc.args[0]!r}") from None
        digits = []
        for c in text.lower():
            d = _DIGIT_CHARS.find(c)
            if d < 0 or d >= p:
                raise ValueError(f"digit {c!r} out of range for p={p}")
            digits.append(d)
        return cls.phase(digits, p)

    # -- accessors ----------------------------------------------------------

    def __len__(self) -> int:
        return self.length

    @property
    def length(self) -> int:
        if self._digits is not None:
            return int(self._digits.size)
        return int(self._values.size)

    @property
    def is_exact(self) -> bool:
        return self._digits is not None

    @property
    def order(self) -> Optional[int]:
        return self._order

    @property
    def digits(self) -> Optional[np.ndarray]:
        return self._digits

    @property
    def support(self) -> np.ndarray:
        if self._digits is None:
            return np.abs(self._values) > EPS_ENTRY
        if self._support is None:
            return np.ones(self._digits.size, dtype=bool)
        return self._support

    @property
    def alphabet(self) -> str:
        """``'p-phase'``, ``'ternary'`` or ``'general'``."""
        if self._digits is None:
            return "general"
        if self._support is None:
            return "p-phase"
        if self._order == 2:
            return "ternary"
        return "general"

    @property
    def phases(self) -> Optional[int]:
        """p for a p-phase sequence, else None."""
        return self._order if self.alphabet == "p-phase" else None

    @property
    def values(self) -> np.ndarray:
        if self._values is None:
            vals = np.exp(2j * np.pi * self._digits / self._order)
            # snap the obvious axis points so integer sequences stay integral
            vals = np.where(np.abs(vals.real) < 1e-15, 1j * vals.imag, vals)
            vals = np.where(np.abs(vals.imag) < 1e-15, vals.real, vals)
            if self._support is not None:
                vals = np.where(self._support, vals, 0)
            self._values = _readonly(vals)
        return self._values

    def lifted(self, order: int) -> np.ndarray:
        """Digits re-expressed over the ``order``-th roots of unity."""
        if self._digits is None:
            raise ValueError("general-alphabet sequence has no digits")
        if order % self._order:
            raise ValueError(f"order {order} is not a multiple of {self._order}")
        return self._digits * (order // self._order)

    # -- algebra ------------------------------------------------------------

    def shift(self, i: int) -> "Sequence":
        return left_shift(self, i)

    def conj(self) -> "Sequence":
        if self._digits is None:
            return Sequence(values=np.conj(self._values))
        return Sequence(digits=-self._digits, order=self._order, support=self._support)

    def __mul__(self, other: "Sequence") -> "Sequence":
        if not isinstance(other, Sequence):
            return NotImplemented
        if self.length != other.length:
            raise ValueError("length mismatch")
        if self.is_exact and other.is_exact:
            order = math.lcm(self._order, other._order)
            digits = self.lifted(order) + other.lifted(order)
            support = self.support & other.support
            return Sequence(digits=digits, order=order, support=support)
        return Sequence(values=self.values * other.values)

    def same_as(self, other: "Sequence") -> bool:
        """Entry-by-entry equality (exact when both sides are exact)."""
        if self.length != other.length:
            return False
        if self.is_exact and other.is_exact:
            if not np.array_equal(self.support, other.support):
                return False
            order = math.lcm(self._order, other._order)
            sup = self.support
            return bool(np.array_equal(self.lifted(order)[sup], other.lifted(order)[sup]))
        return bool(np.all(np.abs(self.values - other.values) <= EPS_ENTRY))

    def __eq__(self, other):
        if not isinstance(other, Sequence):
            return NotImplemented
        return self.same_as(other)

    __hash__ = None

    def to_string(self) -> str:
        """Digit notation: base-p digits, or ``+-0`` for ternary sequences."""
        if self.alphabet == "ternary":
            vals = self.values.real.astype(int)
            return "".join({1: "+", -1: "-", 0: "0"}[v] for v in vals)
        if self.alphabet == "p-phase" and self._order <= len(_DIGIT_CHARS):
            return "".join(_DIGIT_CHARS[d] for d in self._digits)
        raise ValueError(f"no digit notation for alphabet {self.alphabet!r} (order {self._order})")

    def __repr__(self) -> str:
        if self.alphabet == "ternary":
            return f"Sequence.from_string({self.to_string()!r})"
        if self._digits is not None and self._support is None and self._order <= 36:
            return f"Sequence.phase({self.to_string()!r}, p={self._order})"
        return f"Sequence({np.array2string(self.values, precision=4)})"


@dataclass(frozen=True)
class ZczClaim:
    N: int
    M: int
    zcz: int

    def __str__(self):
        return f"({self.N}, {self.M}; {self.zcz})"


@dataclass(frozen=True)
class DeltaClaim:
    N: int
    M: int
    delta: float

    def __str__(self):
        return f"[{self.N}, {self.M}; {self.delta:g}]"


Claim = Union[ZczClaim, DeltaClaim]


class SequenceSet:
    """Ordered collection of equal-length sequences, with an optional claim.

    Order matters: equality and shift equivalence compare member by member.
    """

    __slots__ = ("_members", "claim")

    def __init__(self, members: Iterable[Sequence], claim: Optional[Claim] = None):
        members = tuple(members)
        if not members:
            raise ValueError("a sequence set needs at least one member")
        N = members[0].length
        for s in members:
            if not isinstance(s, Sequence):
                raise TypeError(f"expected Sequence, got {type(s).__name__}")
            if s.length != N:
                raise ValueError("all members must share the same length")
        if claim is not None and (claim.N != N or claim.M != len(members)):
            raise ValueError(f"claim {claim} does not match set shape ({N}, {len(members)})")
        self._members = members
        self.claim = claim

    @classmethod
    def from_strings(cls, rows: Iterable[str], p: Optional[int] = None, claim=None):
        return cls([Sequence.from_string(r, p) for r in rows], claim=claim)

    @property
    def members(self) -> tuple:
        return self._members

    @property
    def N(self) -> int:
        return self._members[0].length

    @property
    def M(self) -> int:
        return len(self._members)

    @property
    def is_exact(self) -> bool:
        return all(s.is_exact for s in self._members)

    @property
    def order(self) -> Optional[int]:
        """Common root-of-unity order of an all-exact set."""
        if not self.is_exact:
            return None
        return math.lcm(*(s.order for s in self._members))

    def __len__(self):
        return len(self._members)

    def __iter__(self):
        return iter(self._members)

    def __getitem__(self, i):
        return self._members[i]

    def with_claim(self, claim: Optional[Claim]) -> "SequenceSet":
        return SequenceSet(self._members, claim=claim)

    def __eq__(self, other):
        if not isinstance(other, SequenceSet):
            return NotImplemented
        return self.M == other.M and all(a.same_as(b) for a, b in zip(self, other))

    __hash__ = None

    def duplicate_pairs(self) -> list:
        """Index pairs (h, k), h < k, of identical members."""
        out = []
        if self.is_exact:
            order = self.order
            keys = {}
            for h, s in enumerate(self._members):
                key = (np.where(s.support, s.lifted(order), -1)).tobytes()
                keys.setdefault(key, []).append(h)
            for idx in keys.values():
                out.extend((a, b) for i, a in enumerate(idx) for b in idx[i + 1:])
            return sorted(out)
        for h in range(self.M):
            for k in range(h + 1, self.M):
                if self._members[h].same_as(self._members[k]):
                    out.append((h, k))
        return out

    def __repr__(self):
        claim = f", claim={self.claim}" if self.claim else ""
        return f"<SequenceSet N={self.N} M={self.M}{claim}>"


class ShiftSequence:
    """Integer shift vector ``e`` with modulus ``m``.

    Stored entries lie in ``[0, m)``. Indexing past the end follows the
    extension rule ``e[i + n] = e[i] + 1`` and is *not* reduced modulo ``m``.
    """

    __slots__ = ("_e", "_m")

    def __init__(self, e: Iterable[int], m: int):
        e = tuple(int(x) for x in e)
        if m < 1:
            raise ValueError("modulus must be positive")
        if not e:
            raise ValueError("shift sequence must be non-empty")
        if any(not 0 <= x < m for x in e):
            raise ValueError(f"entries must lie in [0, {m}): {e}")
        self._e = e
        self._m = int(m)

    @classmethod
    def normalized(cls, e: Iterable[int], m: int) -> "ShiftSequence":
        return cls([x % m for x in e], m)

    @property
    def entries(self) -> tuple:
        return self._e

    @property
    def modulus(self) -> int:
        return self._m

    @property
    def n(self) -> int:
        return len(self._e)

    def __len__(self):
        return len(self._e)

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("negative index")
        q, r = divmod(i, len(self._e))
        return self._e[r] + q

    def __iter__(self):
        return iter(self._e)

    def __eq__(self, other):
        if isinstance(other, ShiftSequence):
            return self._e == other._e and self._m == other._m
        if isinstance(other, (tuple, list)):
            return self._e == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash((self._e, self._m))

    def __repr__(self):
        return f"ShiftSequence({self._e}, m={self._m})"


def left_shift(s: Sequence, i: int) -> Sequence:
    """``L^i(s)``: entry ``j`` of the result is ``s[(j + i) mod N]``."""
    i %= s.length
    if s.is_exact:
        support = None if s._support is None else np.roll(s._support, -i)
        return Sequence(digits=np.roll(s.digits, -i), order=s.order, support=support)
    return Sequence(values=np.roll(s.values, -i))


def shift_set(A: SequenceSet, i: int) -> SequenceSet:
    return SequenceSet([left_shift(s, i) for s in A])


def shift_equivalent(a: Sequence, b: Sequence) -> Optional[int]:
    """Smallest ``k`` in ``[0, N)`` with ``a == L^k(b)``, or None."""
    if a.length != b.length:
        raise ValueError(f"length mismatch: {a.length} != {b.length}")
    for k in range(a.length):
        if a.same_as(left_shift(b, k)):
            return k
    return None


def sets_shift_equivalent(A: SequenceSet, B: SequenceSet) -> bool:
    """True iff ``A == L^i(B)`` member-by-member for some ``i``."""
    if A.M != B.M or A.N != B.N:
        raise ValueError(f"shape mismatch: ({A.N}, {A.M}) vs ({B.N}, {B.M})")
    k = shift_equivalent(A[0], B[0])
    if k is None:
        return False
    # every i that maps b_0 onto a_0 is k plus a period of b_0
    for i in range(k, A.N):
        if A[0].same_as(left_shift(B[0], i)) and all(
            a.same_as(left_shift(b, i)) for a, b in zip(A, B)
        ):
            return True
    return False


def as_sequence(x: Union[Sequence, PySequence]) -> Sequence:
    return x if isinstance(x, Sequence) else Sequence.of(x)
