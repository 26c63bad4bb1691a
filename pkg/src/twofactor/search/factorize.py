"""Exhaustive 2-factorization search.

Factors are built one at a time.  Within a factor, each cycle starts at the
least uncovered vertex and is enumerated in one orientation only.  With
symmetry breaking on, every factor after the first must contain the least
remaining edge at vertex 0, and on vertex-symmetric complete hosts the first
factor is fixed to one labelled copy of the largest type.  The last factor is
never searched: the remaining 2-regular graph is read off and its type
compared.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterator

from ..model import (
    CompleteOdd,
    CycleType,
    FactorizationCert,
    GraphSpec,
    LambdaComplete,
    TwoFactor,
    cycle_type_of,
    two_factor_from_edges,
)
from ..verify import verify_certificate
from .budget import EXHAUSTED, FOUND, PROVED_NONE, BudgetExceeded, Meter, SearchBudget, SearchOutcome


def _matrix(V: int, edges: Counter) -> list[list[int]]:
    mult = [[0] * V for _ in range(V)]
    for (u, w), k in edges.items():
        mult[u][w] += k
        mult[w][u] += k
    return mult


def _two_factors(
    V: int,
    mult: list[list[int]],
    lengths: Counter,
    meter: Meter | None,
    anchor: int | None = None,
) -> Iterator[list[tuple[int, ...]]]:
    """All 2-factors with the given cycle-length counts in the multigraph ``mult``.

    If ``anchor`` is given, the cycle through vertex 0 leaves 0 towards it.
    """
    nbrs = [[w for w in range(V) if mult[u][w] > 0] for u in range(V)]
    full = (1 << V) - 1
    remaining = Counter({l: k for l, k in lengths.items() if k > 0})
    cycles: list[tuple[int, ...]] = []

    def feasible(mask: int) -> bool:
        m = mask
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            deg = 0
            for w in nbrs[u]:
                if mask >> w & 1:
                    deg += 2 if mult[u][w] > 1 else 1
                    if deg >= 2:
                        break
            if deg < 2:
                return False
        return True

    def paths(s: int, L: int, mask: int, forced: int | None) -> Iterator[list[int]]:
        if L == 2:
            for w in ([forced] if forced is not None else nbrs[s]):
                if mask >> w & 1 and w != s and mult[s][w] >= 2:
                    if meter:
                        meter.tick()
                    yield [s, w]
            return
        path = [s]
        used = [1 << s]

        def extend() -> Iterator[list[int]]:
            last = path[-1]
            if len(path) == L:
                if mult[last][s] > 0 and (forced is not None or path[1] < last):
                    yield path
                return
            cands = [forced] if (len(path) == 1 and forced is not None) else nbrs[last]
            closing = len(path) == L - 1
            for w in cands:
                if not (mask >> w & 1) or used[0] >> w & 1:
                    continue
                if closing and mult[w][s] == 0:
                    continue
                if meter:
                    meter.tick()
                path.append(w)
                used[0] |= 1 << w
                yield from extend()
                path.pop()
                used[0] &= ~(1 << w)

        yield from extend()

    def gen(mask: int) -> Iterator[list[tuple[int, ...]]]:
        if mask == 0:
            yield list(cycles)
            return
        s = (mask & -mask).bit_length() - 1
        forced = anchor if (s == 0 and anchor is not None) else None
        for L in sorted(remaining):
            if remaining[L] == 0:
                continue
            remaining[L] -= 1
            for p in paths(s, L, mask, forced):
                bits = 0
                for x in p:
                    bits |= 1 << x
                rest = mask & ~bits
                if rest and not feasible(rest):
                    continue
                cycles.append(tuple(p))
                yield from gen(rest)
                cycles.pop()
            remaining[L] += 1

    yield from gen(full)


def enumerate_two_factors(V: int, edges: Counter, t: CycleType, anchor: int | None = None,
                          max_nodes: int = 10**8) -> Iterator[TwoFactor]:
    """All 2-factors of type ``t`` in the (multi)graph given by an edge counter."""
    meter = Meter(SearchBudget(max_seconds=float("inf"), max_nodes=max_nodes))
    for cycles in _two_factors(V, _matrix(V, edges), t.as_counter(), meter, anchor):
        yield TwoFactor(tuple(cycles))


def _canonical_copy(t: CycleType) -> TwoFactor:
    cycles, x = [], 0
    for l in sorted(t.lengths, reverse=True):
        cycles.append(tuple(range(x, x + l)))
        x += l
    return TwoFactor(tuple(cycles))


def _check_instance(spec: GraphSpec, types: list[CycleType]):
    if spec.degree % 2 or len(types) != spec.degree // 2:
        raise ValueError(f"{len(types)} factor types for host {spec} of degree {spec.degree}")
    bad = [str(t) for t in types if t.order != spec.order]
    if bad:
        raise ValueError(f"types {bad} do not have order {spec.order}")


def solve_exhaustive(spec: GraphSpec, types, budget: SearchBudget | None = None,
                     symmetry: bool = True) -> SearchOutcome:
    """Find a 2-factorization of ``spec`` with the given multiset of factor types, or prove none exists."""
    types = list(types)
    _check_instance(spec, types)
    budget = budget or SearchBudget()
    meter = Meter(budget)
    V = spec.order
    mult = _matrix(V, spec.edge_counter())
    counts = Counter(types)
    order = sorted(counts, reverse=True)
    sequence = sorted(types, reverse=True)
    chosen: list[tuple[TwoFactor, CycleType]] = []

    def apply(f: TwoFactor, sign: int):
        for u, w in f.edges():
            mult[u][w] -= sign
            mult[w][u] -= sign

    def last_factor(t: CycleType) -> bool:
        meter.tick()
        edges = []
        for u in range(V):
            for w in range(u, V):
                edges.extend([(u, w)] * mult[u][w])
        try:
            f = two_factor_from_edges(edges)
        except ValueError:
            return False
        if len(f.vertices()) != V or cycle_type_of(f) != t:
            return False
        chosen.append((f, t))
        return True

    def level() -> bool:
        left = sum(counts.values())
        if left == 0:
            return True
        if left == 1:
            t = next(t for t in order if counts[t])
            return last_factor(t)
        if symmetry:
            if not chosen and isinstance(spec, (CompleteOdd, LambdaComplete)):
                branches = [(order[0], iter([_canonical_copy(order[0])]))]
            else:
                anchor = next(w for w in range(V) if mult[0][w] > 0)
                branches = [
                    (t, (TwoFactor(tuple(c)) for c in _two_factors(V, mult, t.as_counter(), meter, anchor)))
                    for t in order if counts[t]
                ]
        else:
            t = sequence[len(chosen)]
            prev = chosen[-1] if chosen else None

            def unordered(t=t, prev=prev):
                for c in _two_factors(V, mult, t.as_counter(), meter):
                    f = TwoFactor(tuple(c))
                    if prev is not None and prev[1] == t and sorted(f.edges()) <= sorted(prev[0].edges()):
                        continue
                    yield f

            branches = [(t, unordered())]
        for t, factors in branches:
            counts[t] -= 1
            for f in factors:
                apply(f, +1)
                chosen.append((f, t))
                if level():
                    return True
                chosen.pop()
                apply(f, -1)
            counts[t] += 1
        return False

    try:
        ok = level()
    except BudgetExceeded as e:
        return meter.outcome(EXHAUSTED, reason=str(e))
    if not ok:
        return meter.outcome(PROVED_NONE)
    cert = FactorizationCert(spec, tuple(f for f, _ in chosen), tuple(t for _, t in chosen))
    report = verify_certificate(cert)
    if not report.ok:  # pragma: no cover - soundness guard
        raise AssertionError(f"solver produced an invalid certificate: {report.violations[:3]}")
    return meter.outcome(FOUND, cert)
