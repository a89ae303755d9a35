"""Report records produced by scans and the theorem registry."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterable, Optional

from ..graph import Graph, to_graph6


class Status(str, Enum):
    VERIFIED = "verified"
    COUNTEREXAMPLE = "counterexample"
    SKIPPED = "skipped_out_of_range"


class Mode(str, Enum):
    EXHAUSTIVE_LABELED = "exhaustive_labeled"
    EXHAUSTIVE_ISO = "exhaustive_up_to_iso"
    SAMPLED = "sampled"
    CONSTRUCTIVE = "constructive"
    WITNESS_ONLY = "witness_only"
    NONE = "none"


@dataclass(frozen=True)
class Counterexample:
    graph: Optional[Graph]
    observed: dict[str, Any]

    def to_dict(self) -> dict[str, Any]:
        return {
            "graph6": None if self.graph is None else to_graph6(self.graph),
            "observed": self.observed,
        }


@dataclass
class TheoremReport:
    theorem_id: str
    params: dict[str, Any]
    status: Status
    mode: Mode = Mode.NONE
    counterexample: Optional[Counterexample] = None
    details: dict[str, Any] = field(default_factory=dict)
    seed: Optional[int] = None
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.status is not Status.COUNTEREXAMPLE

    def to_dict(self) -> dict[str, Any]:
        return {
            "theorem_id": self.theorem_id,
            "params": self.params,
            "status": self.status.value,
            "mode": self.mode.value,
            "counterexample": None if self.counterexample is None else self.counterexample.to_dict(),
            "details": self.details,
            "seed": self.seed,
            "note": self.note,
        }


@dataclass(frozen=True)
class ExtremalValue:
    n: int
    k: int
    value: Optional[int]
    witness: Optional[Graph] = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "k": self.k,
            "value": self.value,
            "witness": None if self.witness is None else to_graph6(self.witness),
        }


def _range_text(params: dict[str, Any]) -> str:
    return " ".join(f"{k}={v}" for k, v in sorted(params.items()))


def summary_csv(reports: Iterable[TheoremReport]) -> str:
    """One row per report: theorem_id, mode, range, status."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["theorem_id", "mode", "range", "status"])
    for r in reports:
        w.writerow([r.theorem_id, r.mode.value, _range_text(r.params), r.status.value])
    return buf.getvalue()
