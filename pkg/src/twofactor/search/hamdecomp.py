"""Hamilton decompositions of circulants by exact search.

Elements of S coprime to n give Hamilton cycles on their own.  Each other
element is paired with a partner so that the pair generates Z_n, and the
connected 4-regular circulant of the pair is split into two Hamilton cycles.
If no such pairing exists the whole graph is searched at once.
"""

from __future__ import annotations

import math
from typing import Iterator

from ..construct.circulant import check_circulant, multiples_cycle
from ..model import Circulant, FactorizationCert, TwoFactor
from ..verify import verify_certificate
from .budget import EXHAUSTED, FOUND, PROVED_NONE, BudgetExceeded, Meter, SearchBudget, SearchOutcome


def _adjacency(n: int, S) -> list[set[int]]:
    adj = [set() for _ in range(n)]
    for d in S:
        for x in range(n):
            adj[x].add((x + d) % n)
            adj[(x + d) % n].add(x)
    return adj


def _hamilton_cycles(adj: list[set[int]], meter: Meter) -> Iterator[list[int]]:
    """Hamilton cycles through 0, each once (second vertex below the last)."""
    n = len(adj)
    path = [0]
    on = [False] * n
    on[0] = True

    def stuck(end: int) -> bool:
        for u in range(n):
            if on[u]:
                continue
            free = sum(1 for w in adj[u] if not on[w] or w == end or w == 0)
            if free < 2:
                return True
        return False

    def grow() -> Iterator[list[int]]:
        end = path[-1]
        if len(path) == n:
            if 0 in adj[end] and path[1] < end:
                yield list(path)
            return
        for w in sorted(adj[end]):
            if on[w]:
                continue
            meter.tick()
            on[w] = True
            path.append(w)
            if not stuck(w):
                yield from grow()
            path.pop()
            on[w] = False

    yield from grow()


def _cycle_edges(c: list[int]) -> list[tuple[int, int]]:
    return [(c[k], c[(k + 1) % len(c)]) for k in range(len(c))]


def _remaining_cycle(adj: list[set[int]]) -> list[int] | None:
    """If the graph is one Hamilton cycle, return it."""
    n = len(adj)
    if any(len(a) != 2 for a in adj):
        return None
    cyc, prev, cur = [0], 0, min(adj[0])
    while cur != 0:
        cyc.append(cur)
        prev, cur = cur, next(w for w in adj[cur] if w != prev)
    return cyc if len(cyc) == n else None


def _split(adj: list[set[int]], k: int, meter: Meter) -> list[list[int]] | None:
    """Split a 2k-regular graph into k Hamilton cycles, or None."""
    if k == 1:
        c = _remaining_cycle(adj)
        return [c] if c else None
    for c in _hamilton_cycles(adj, meter):
        for a, b in _cycle_edges(c):
            adj[a].discard(b)
            adj[b].discard(a)
        rest = _split(adj, k - 1, meter)
        for a, b in _cycle_edges(c):
            adj[a].add(b)
            adj[b].add(a)
        if rest is not None:
            return [c, *rest]
    return None


def _plan(n: int, S: tuple[int, ...]) -> list[tuple[int, ...]] | None:
    """Blocks of S: generating pairs for the non-coprime elements, then coprime singletons."""
    loose = [d for d in S if math.gcd(d, n) != 1]
    single = [d for d in S if math.gcd(d, n) == 1]
    blocks: list[tuple[int, ...]] = []
    while loose:
        x = loose.pop(0)
        partner = next((y for y in loose + single if math.gcd(math.gcd(x, y), n) == 1), None)
        if partner is None:
            return None
        (loose if partner in loose else single).remove(partner)
        blocks.append((x, partner))
    blocks += [(d,) for d in single]
    return blocks


def find_ham_decomp(n: int, S, budget: SearchBudget | None = None) -> SearchOutcome:
    """Decompose Circ(n; ±S) into |S| Hamilton cycles."""
    S = check_circulant(n, S)
    meter = Meter(budget or SearchBudget())
    blocks = _plan(n, S)
    try:
        if blocks is not None:
            cycles: list[tuple[int, ...]] = []
            for b in blocks:
                if len(b) == 1:
                    cycles.append(multiples_cycle(n, b[0]))
                    continue
                part = _split(_adjacency(n, b), 2, meter)
                if part is None:  # pragma: no cover - 4-regular connected circulants always split
                    blocks = None
                    break
                cycles.extend(tuple(c) for c in part)
        if blocks is None:
            part = _split(_adjacency(n, S), len(S), meter)
            if part is None:
                return meter.outcome(PROVED_NONE)
            cycles = [tuple(c) for c in part]
    except BudgetExceeded as e:
        return meter.outcome(EXHAUSTED, reason=str(e))
    cert = FactorizationCert(Circulant(n, S), tuple(TwoFactor((c,)) for c in cycles))
    report = verify_certificate(cert)
    if not report.ok or any(len(c) != n for c in cycles):  # pragma: no cover - soundness guard
        raise AssertionError(f"invalid Hamilton decomposition: {report.violations[:3]}")
    return meter.outcome(FOUND, cycles)
