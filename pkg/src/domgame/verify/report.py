"""Uniform result records for claim checks, serializable as JSONL.

Every check produces one or more CheckReports. Records whose claim_id
contains "/hyp:" state whether a claim's hypothesis held on the instance,
not whether the claim itself survived; aggregation (and the CLI exit code)
must skip them, since an instance failing a precondition falsifies nothing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, TextIO

from ..graphs import Graph, serialize_edge_list

HYP_MARKER = "/hyp:"


def _plain(value: Any) -> Any:
    """Project lhs/rhs values onto JSON-friendly exact types."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        return [value.numerator, value.denominator]
    if isinstance(value, int):
        return value
    if isinstance(value, (tuple, list)):
        return [_plain(v) for v in value]
    raise TypeError(f"unsupported report value {value!r}")


@dataclass
class CheckReport:
    claim_id: str
    instance: dict
    lhs: Any
    rhs: Any
    holds: bool
    tight: bool
    elapsed: float = field(default=0.0)

    def record(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "instance": self.instance,
            "lhs": _plain(self.lhs),
            "rhs": _plain(self.rhs),
            "holds": self.holds,
            "tight": self.tight,
            "elapsed": self.elapsed,
        }

    def to_json(self) -> str:
        return json.dumps(self.record(), sort_keys=False)


def is_hypothesis(report: CheckReport) -> bool:
    return HYP_MARKER in report.claim_id


def verdict(reports: Iterable[CheckReport]) -> bool:
    """True when no non-hypothesis record failed."""
    return all(r.holds for r in reports if not is_hypothesis(r))


def dump_reports(reports: Iterable[CheckReport], fp: TextIO) -> None:
    for r in reports:
        fp.write(r.to_json())
        fp.write("\n")


def instance_info(description: str, g: Graph | None = None, **extra: Any) -> dict:
    info: dict[str, Any] = {"description": description}
    if g is not None:
        info["n"] = g.n
        info["edge_list"] = serialize_edge_list(g)
    info.update(extra)
    return info
