"""Row-sum matrices and the uniform 2-factors they induce on C_g[Γ, S]."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from ..groups import FiniteAbelianGroup
from ..model import BlownCycle, CycleType, FactorizationCert, TwoFactor


class RowSumError(ValueError):
    pass


@dataclass(frozen=True)
class RowSumMatrix:
    group: FiniteAbelianGroup
    S: tuple[int, ...]
    g: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "S", tuple(int(x) for x in self.S))
        object.__setattr__(self, "entries", tuple(tuple(int(x) for x in row) for row in self.entries))

    def problems(self) -> list[str]:
        out = []
        if len(set(self.S)) != len(self.S):
            out.append("S has repeated elements")
        if self.g < 2:
            out.append(f"g must be >= 2, got {self.g}")
        if len(self.entries) != len(self.S):
            out.append(f"{len(self.entries)} rows for |S| = {len(self.S)}")
        if any(len(r) != self.g for r in self.entries):
            out.append(f"every row needs {self.g} entries")
            return out
        want = Counter(self.S)
        for c in range(self.g):
            if Counter(r[c] for r in self.entries) != want:
                out.append(f"column {c} is not a permutation of S")
        return out

    def row_sums(self) -> list[int]:
        return [self.group.sum(r) for r in self.entries]

    def orders(self) -> list[int]:
        return [self.group.element_order(s) for s in self.row_sums()]


def row_factor(m: RowSumMatrix, r: int, host: BlownCycle) -> TwoFactor:
    """Edges (i, x) -- (i+1, m[r][i+1] + x); every cycle has length g * ord(row sum)."""
    G, g = m.group, m.g
    row = m.entries[r]
    seen: set[int] = set()
    cycles = []
    for x0 in G.elements():
        if host.vertex(0, x0) in seen:
            continue
        cyc = []
        i, x = 0, x0
        while host.vertex(i, x) not in seen:
            seen.add(host.vertex(i, x))
            cyc.append(host.vertex(i, x))
            i, x = (i + 1) % g, G.add(row[(i + 1) % g], x)
        cycles.append(tuple(cyc))
    return TwoFactor(tuple(cycles))


def rsm_apply(m: RowSumMatrix) -> FactorizationCert:
    bad = m.problems()
    if bad:
        raise RowSumError("; ".join(bad))
    host = BlownCycle(m.g, m.group, m.S)
    factors = tuple(row_factor(m, r, host) for r in range(len(m.entries)))
    types = tuple(CycleType.uniform(m.g * o, m.group.order // o) for o in m.orders())
    return FactorizationCert(host, factors, types)
