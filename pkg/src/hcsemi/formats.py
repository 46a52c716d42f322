"""Plain-text formats: ``smg 1`` semigroup files and zigzag certificates.

An ``smg 1`` file::

    smg 1
    order 2
    labels e f
    0 1
    1 1

Lines starting with ``#`` and blank lines are ignored after the header.
"""
from __future__ import annotations

from typing import Iterable, Optional

from .core import Semigroup, new_semigroup
from .dominion import ZigzagWitness
from .errors import SemigroupError


class ParseError(SemigroupError):
    pass


def _significant(lines: Iterable[str]) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((lineno, line))
    return out


def parse_smg(text: str) -> Semigroup:
    raw = text.splitlines()
    if not raw or raw[0].rstrip("\r") != "smg 1":
        raise ParseError("line 1 must be exactly 'smg 1'")
    lines = _significant(enumerate(raw[1:], start=2))
    if not lines:
        raise ParseError("missing 'order' line")
    lineno, line = lines[0]
    parts = line.split()
    if len(parts) != 2 or parts[0] != "order" or not parts[1].isdigit() or int(parts[1]) < 1:
        raise ParseError(f"line {lineno}: expected 'order N' with N >= 1")
    n = int(parts[1])
    rest = lines[1:]
    labels: Optional[list[str]] = None
    if rest and rest[0][1].split()[0] == "labels":
        labels = rest[0][1].split()[1:]
        rest = rest[1:]
    if len(rest) != n:
        raise ParseError(f"expected {n} table rows, found {len(rest)}")
    table = []
    for lineno, line in rest:
        fields = line.split()
        if len(fields) != n or not all(f.isdigit() for f in fields):
            raise ParseError(f"line {lineno}: expected {n} non-negative integers")
        table.append([int(f) for f in fields])
    return new_semigroup(n, table, labels)


def format_smg(S: Semigroup) -> str:
    lines = ["smg 1", f"order {S.order}"]
    if S.labels is not None:
        lines.append("labels " + " ".join(S.labels))
    lines.extend(" ".join(str(v) for v in row) for row in S.table)
    return "\n".join(lines) + "\n"


def format_certificate(w: ZigzagWitness, subset: Iterable[int]) -> str:
    return (
        f"zigzag value={w.value} m={w.length}\n"
        f"spine {' '.join(map(str, w.spine))}\n"
        f"ywings {' '.join(map(str, w.left_wings))}\n"
        f"twings {' '.join(map(str, w.right_wings))}\n"
        f"subset {' '.join(map(str, sorted(subset)))}\n"
    )


def parse_certificate(text: str) -> tuple[ZigzagWitness, tuple[int, ...]]:
    lines = [line for _, line in _significant(enumerate(text.splitlines(), start=1))]
    if len(lines) != 5:
        raise ParseError("certificate needs zigzag, spine, ywings, twings and subset lines")
    head = lines[0].split()
    try:
        if head[0] != "zigzag" or len(head) != 3:
            raise ValueError
        fields = dict(item.split("=", 1) for item in head[1:])
        value, m = int(fields["value"]), int(fields["m"])
    except (ValueError, KeyError):
        raise ParseError("first line must be 'zigzag value=<d> m=<m>'") from None
    body = {}
    for key, line in zip(("spine", "ywings", "twings", "subset"), lines[1:]):
        parts = line.split()
        if parts[0] != key or not all(p.isdigit() for p in parts[1:]):
            raise ParseError(f"expected '{key}' line of integers")
        body[key] = tuple(int(p) for p in parts[1:])
    w = ZigzagWitness(value, m, body["spine"], body["ywings"], body["twings"])
    return w, body["subset"]
