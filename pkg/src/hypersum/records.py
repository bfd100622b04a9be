"""Machine-readable outcome of one identity check."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Union

from .exact import format_rational
from .series import TruncatedSeries

Side = Union[Fraction, TruncatedSeries]


def serialize_value(value: Any) -> Any:
    """Fractions become p/q strings; containers are walked recursively."""
    if isinstance(value, bool):
        return value
    if isinstance(value, (Fraction, int)):
        return format_rational(Fraction(value))
    if isinstance(value, TruncatedSeries):
        return value.to_json()
    if isinstance(value, dict):
        return {k: serialize_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [serialize_value(v) for v in value]
    if value is None or isinstance(value, str):
        return value
    raise TypeError(f"cannot serialize {type(value).__name__}")


@dataclass
class VerificationRecord:
    identity: str
    inputs: dict
    lhs: Side
    rhs: Side
    passed: bool
    mismatch: dict | None = None
    notes: str = ""
    flags: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        notes = self.notes
        if self.flags:
            tag = "flags: " + ",".join(self.flags)
            notes = f"{notes}; {tag}" if notes else tag
        return {
            "identity": self.identity,
            "inputs": serialize_value(self.inputs),
            "passed": self.passed,
            "lhs": serialize_value(self.lhs),
            "rhs": serialize_value(self.rhs),
            "mismatch": self.mismatch,
            "notes": notes,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def compare(
    identity: str,
    inputs: dict,
    lhs: Side,
    rhs: Side,
    *,
    index: int = 0,
    notes: str = "",
    flags: tuple[str, ...] = (),
) -> VerificationRecord:
    """Build a record; scalars mismatch at ``index``, series at the first differing degree."""
    if isinstance(lhs, TruncatedSeries):
        where = lhs.first_mismatch(rhs)
        mismatch = None if where is None else {"index": where}
    else:
        mismatch = None if lhs == rhs else {"index": index}
    return VerificationRecord(
        identity=identity,
        inputs=inputs,
        lhs=lhs,
        rhs=rhs,
        passed=mismatch is None,
        mismatch=mismatch,
        notes=notes,
        flags=tuple(flags),
    )
