"""Search budgets and outcomes shared by every exact search."""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from typing import Any

FOUND = "found"
PROVED_NONE = "proved_none"
EXHAUSTED = "exhausted"


def default_seconds() -> float:
    return float(os.environ.get("FORGE_BUDGET_SECONDS", 60.0))


@dataclass(frozen=True)
class SearchBudget:
    max_seconds: float = 60.0
    max_nodes: int = 10**8
    deterministic_seed: int = 0

    @classmethod
    def from_env(cls, **overrides) -> "SearchBudget":
        kw = {"max_seconds": default_seconds()}
        kw.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**kw)


@dataclass
class SearchOutcome:
    status: str
    value: Any = None
    nodes: int = 0
    elapsed: float = 0.0
    reason: str = ""

    @property
    def found(self) -> bool:
        return self.status == FOUND


class BudgetExceeded(Exception):
    pass


class Meter:
    """Node and wall-clock accounting; raises :class:`BudgetExceeded` when over."""

    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.nodes = 0
        self.start = time.monotonic()

    def tick(self, k: int = 1):
        self.nodes += k
        if self.nodes > self.budget.max_nodes:
            raise BudgetExceeded(f"node budget {self.budget.max_nodes} exceeded")
        if self.nodes & 0x3FF == 0 and time.monotonic() - self.start > self.budget.max_seconds:
            raise BudgetExceeded(f"time budget {self.budget.max_seconds}s exceeded")

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self.start

    def outcome(self, status: str, value=None, reason: str = "") -> SearchOutcome:
        return SearchOutcome(status, value, self.nodes, round(self.elapsed, 3), reason)
