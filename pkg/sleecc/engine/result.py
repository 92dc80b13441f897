"""Verdicts and query results shared by the SAT and Horn engines."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional

from sleecc.core.interpretation import Interpretation


class Verdict(str, Enum):
    ENTAILED = "ENTAILED"
    NOT_ENTAILED = "NOT_ENTAILED"
    CONSISTENT = "CONSISTENT"
    INCONSISTENT = "INCONSISTENT"

    @property
    def positive(self) -> bool:
        return self in (Verdict.ENTAILED, Verdict.CONSISTENT)


class ObligationStatus(str, Enum):
    OBLIGED = "OBLIGED"
    NOT_OBLIGED = "NOT-OBLIGED"


@dataclass(frozen=True)
class QueryResult:
    """A verdict with its witness (model or countermodel) over the declared atoms."""

    verdict: Verdict
    witness: Optional[Interpretation] = None
    engine: str = "sat"
    stats: Dict[str, int] = field(default_factory=dict, hash=False)

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"verdict": self.verdict.value, "engine": self.engine, "stats": dict(self.stats)}
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        return out
