"""Reading and writing sequence sets.

Text format (p-phase with p <= 36, or ternary)::

    ZCZSET v1 alphabet=6 N=18 M=2 claim=zcz:8
    040004022040004022
    010301052343034325

Body lines are base-p digits (``0-9a-z``), or ``+``/``-``/``0`` for
``alphabet=ternary``. Anything else (complex entries, zeros mixed with
non-binary phases, more than 36 phases) is written as JSON.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Optional

import numpy as np

from .seqcore import DeltaClaim, Sequence, SequenceSet, ZczClaim

MAGIC = "ZCZSET"
VERSION = "v1"
JSON_FORMAT = "ZCZSET-JSON"

_HEADER_KEYS = ("alphabet", "N", "M", "claim")


class SetFormatError(ValueError):
    pass


def format_claim(claim) -> Optional[str]:
    if claim is None:
        return None
    if isinstance(claim, ZczClaim):
        return f"zcz:{claim.zcz}"
    return f"delta:{float(claim.delta)!r}"


def parse_claim(text: Optional[str], N: int, M: int):
    if text is None:
        return None
    kind, _, value = text.partition(":")
    try:
        if kind == "zcz":
            return ZczClaim(N, M, int(value))
        if kind == "delta":
            return DeltaClaim(N, M, float(value))
    except ValueError:
        pass
    raise SetFormatError(f"bad claim {text!r}")


def _text_alphabet(S: SequenceSet) -> Optional[str]:
    if not S.is_exact:
        return None
    order = S.order
    has_zeros = any(s.alphabet != "p-phase" for s in S)
    if has_zeros:
        return "ternary" if order == 2 else None
    return str(order) if order <= 36 else None


def dumps(S: SequenceSet) -> str:
    alphabet = _text_alphabet(S)
    if alphabet is None:
        return _dumps_json(S)
    header = f"{MAGIC} {VERSION} alphabet={alphabet} N={S.N} M={S.M}"
    claim = format_claim(S.claim)
    if claim:
        header += f" claim={claim}"
    lines = [header]
    order = S.order
    for s in S:
        if alphabet == "ternary":
            vals = np.rint(s.values.real).astype(int)
            lines.append("".join("+-0"[(1, -1, 0).index(v)] for v in vals))
        else:
            lines.append(Sequence(digits=s.lifted(order), order=order).to_string())
    return "\n".join(lines) + "\n"


def _dumps_json(S: SequenceSet) -> str:
    doc = {"format": JSON_FORMAT, "version": 1, "N": S.N, "M": S.M, "claim": format_claim(S.claim)}
    if S.is_exact:
        order = S.order
        doc["order"] = order
        doc["members"] = [
            [int(d) if live else None for d, live in zip(s.lifted(order), s.support)] for s in S
        ]
    else:
        doc["order"] = None
        doc["members"] = [[[float(v.real), float(v.imag)] for v in s.values] for s in S]
    return json.dumps(doc, indent=1) + "\n"


def loads(text: str) -> SequenceSet:
    if text.lstrip().startswith("{"):
        return _loads_json(text)
    lines = text.splitlines()
    if not lines:
        raise SetFormatError("empty set file")
    fields = lines[0].split()
    if fields[:2] != [MAGIC, VERSION]:
        raise SetFormatError(f"line 1: expected '{MAGIC} {VERSION}' header")
    header = {}
    for item in fields[2:]:
        key, sep, value = item.partition("=")
        if not sep or key not in _HEADER_KEYS:
            raise SetFormatError(f"line 1: bad header field {item!r}")
        header[key] = value
    for key in ("alphabet", "N", "M"):
        if key not in header:
            raise SetFormatError(f"line 1: missing {key}=")
    try:
        N, M = int(header["N"]), int(header["M"])
    except ValueError:
        raise SetFormatError("line 1: N and M must be integers") from None
    alphabet = header["alphabet"]
    if alphabet == "ternary":
        p = None
    elif re.fullmatch(r"\d+", alphabet) and 2 <= int(alphabet) <= 36:
        p = int(alphabet)
    else:
        raise SetFormatError(f"line 1: bad alphabet {alphabet!r}")
    body = lines[1:]
    if len(body) != M:
        raise SetFormatError(f"expected {M} body lines, found {len(body)}")
    members = []
    for lineno, row in enumerate(body, start=2):
        if len(row) != N:
            raise SetFormatError(f"line {lineno}: expected {N} symbols, found {len(row)}")
        try:
            members.append(Sequence.from_string(row, p))
        except ValueError as exc:
            raise SetFormatError(f"line {lineno}: {exc}") from None
    return SequenceSet(members, claim=parse_claim(header.get("claim"), N, M))


def _loads_json(text: str) -> SequenceSet:
    try:
        doc = json.loads(text)
        if doc.get("format") != JSON_FORMAT:
            raise SetFormatError("not a ZCZSET-JSON document")
        N, M, order = doc["N"], doc["M"], doc.get("order")
        rows = doc["members"]
    except (json.JSONDecodeError, KeyError, AttributeError) as exc:
        raise SetFormatError(f"bad JSON set file: {exc}") from None
    if len(rows) != M or any(len(r) != N for r in rows):
        raise SetFormatError("member count or length disagrees with N/M")
    members = []
    for row in rows:
        if order is not None:
            digits = [0 if d is None else d for d in row]
            support = [d is not None for d in row]
            members.append(Sequence(digits=digits, order=order, support=support))
        else:
            members.append(Sequence(values=np.array([complex(re_, im) for re_, im in row])))
    return SequenceSet(members, claim=parse_claim(doc.get("claim"), N, M))


def read_set(path) -> SequenceSet:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SetFormatError(f"cannot read {path}: {exc}") from None
    return loads(text)


def write_set(S: SequenceSet, path) -> None:
    Path(path).write_text(dumps(S))
