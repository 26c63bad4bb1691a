"""Row-sum matrix search."""

from __future__ import annotations

from collections import Counter

from ..construct.rowsum import RowSumMatrix, rsm_apply
from ..groups import FiniteAbelianGroup
from ..verify import verify_certificate
from .budget import EXHAUSTED, FOUND, PROVED_NONE, BudgetExceeded, Meter, SearchBudget, SearchOutcome


def _total_reachable(G: FiniteAbelianGroup, orders, target: int) -> bool:
    """Can one element of each listed order be chosen so that they sum to ``target``?"""
    by_order: dict[int, list[int]] = {}
    for x in G.elements():
        by_order.setdefault(G.element_order(x), []).append(x)
    reach = {0}
    for o in orders:
        pool = by_order.get(o, [])
        reach = {G.add(a, b) for a in reach for b in pool}
        if not reach:
            return False
    return target in reach


def find_rsm(G: FiniteAbelianGroup, S, g: int, omega, budget: SearchBudget | None = None) -> SearchOutcome:
    """A row-sum matrix over ``G`` for connection set ``S`` whose row-sum orders are ``omega`` as a multiset.

    Rows are interchangeable, so column 0 is fixed to ``S`` in ascending
    order; the remaining columns are interchangeable too, so they are kept in
    nondecreasing lexicographic order.  Entries are filled row by row and each
    completed row must have a row-sum order still wanted.
    """
    S = tuple(sorted(int(x) for x in S))
    omega = [int(o) for o in omega]
    if len(omega) != len(S):
        raise ValueError(f"|omega| = {len(omega)} but |S| = {len(S)}")
    if len(set(S)) != len(S):
        raise ValueError("S has repeated elements")
    if g < 2:
        raise ValueError(f"g must be >= 2, got {g}")
    meter = Meter(budget or SearchBudget())
    k = len(S)
    want = Counter(omega)
    total = G.sum([G.sum(S)] * g)
    if not _total_reachable(G, omega, total):
        return meter.outcome(PROVED_NONE, reason="row sums cannot add up to g times the sum of S")

    left = [Counter(S) for _ in range(g)]
    rows = [[S[r]] + [0] * (g - 1) for r in range(k)]

    def tied(r: int) -> list[bool]:
        # tied[c]: columns c and c+1 agree on rows 0..r-1
        return [c >= 1 and all(rows[i][c] == rows[i][c + 1] for i in range(r)) for c in range(g - 1)]

    def fill(r: int, c: int, ties: list[bool]) -> bool:
        if r == k:
            return True
        if c == g:
            o = G.element_order(G.sum(rows[r]))
            if not want[o]:
                return False
            want[o] -= 1
            ok = fill(r + 1, 1, tied(r + 1))
            if not ok:
                want[o] += 1
            return ok
        for x in sorted(left[c]):
            if not left[c][x]:
                continue
            if c >= 2 and ties[c - 1] and x < rows[r][c - 1]:
                continue
            meter.tick()
            rows[r][c] = x
            left[c][x] -= 1
            if fill(r, c + 1, ties):
                return True
            left[c][x] += 1
        return False

    try:
        ok = fill(0, 1, tied(0)) if g > 1 else False
    except BudgetExceeded as e:
        return meter.outcome(EXHAUSTED, reason=str(e))
    if not ok:
        return meter.outcome(PROVED_NONE)
    m = RowSumMatrix(G, S, g, tuple(tuple(r) for r in rows))
    report = verify_certificate(rsm_apply(m))
    if not report.ok:  # pragma: no cover - soundness guard
        raise AssertionError(f"row-sum matrix failed verification: {report.violations[:3]}")
    return meter.outcome(FOUND, m)
