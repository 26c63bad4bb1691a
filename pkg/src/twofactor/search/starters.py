"""Exact search for twofold 2-starters and 2-starters."""

from __future__ import annotations

from collections import Counter
from typing import Iterator

from ..algebra import INF, StarterGraph, classify_starter
from ..groups import FiniteAbelianGroup
from ..model import CycleType
from .budget import EXHAUSTED, FOUND, PROVED_NONE, BudgetExceeded, Meter, SearchBudget, SearchOutcome

KINDS = ("twofold", "two_starter")


def _twofold_graphs(G: FiniteAbelianGroup, t: CycleType, meter: Meter) -> Iterator[StarterGraph]:
    """Every twofold 2-starter of type ``t``, each labelled graph exactly once.

    Cycles are rooted at their least unused vertex (∞ sorts first) and read in
    the orientation whose second vertex is smaller than its last.  Any partial
    graph using some difference more than twice is cut.
    """
    verts = [INF, *G.elements()]
    count = [0] * G.order
    remaining = Counter(t.as_counter())
    unused = set(verts)
    cycles: list[tuple[int, ...]] = []

    def bump(a: int, b: int, k: int) -> bool:
        if a == INF or b == INF:
            return True
        d = G.sub(a, b)
        e = G.neg(d)
        count[d] += k
        if e != d:
            count[e] += k
        return count[d] <= 2 and count[e] <= 2

    def cycle_from(path: list[int], L: int) -> Iterator[None]:
        last = path[-1]
        if len(path) == L:
            if path[1] < last:
                ok = bump(last, path[0], 1)
                if ok:
                    yield
                bump(last, path[0], -1)
            return
        for w in verts:
            if w not in unused:
                continue
            meter.tick()
            ok = bump(last, w, 1)
            if ok:
                unused.discard(w)
                path.append(w)
                yield from cycle_from(path, L)
                path.pop()
                unused.add(w)
            bump(last, w, -1)

    def fill() -> Iterator[StarterGraph]:
        if not unused:
            yield StarterGraph(G, tuple(cycles))
            return
        s = min(unused)
        unused.discard(s)
        for L in sorted(remaining):
            if remaining[L] == 0 or L > len(unused) + 1:
                continue
            remaining[L] -= 1
            path = [s]
            for _ in cycle_from(path, L):
                cycles.append(tuple(path))
                yield from fill()
                cycles.pop()
            remaining[L] += 1
        unused.add(s)

    yield from fill()


def _check(G: FiniteAbelianGroup, t: CycleType, kind: str):
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    if t.order != G.order + 1:
        raise ValueError(f"type {t} has order {t.order}, need |G|+1 = {G.order + 1}")
    if min(t.lengths) < 3:
        raise ValueError("starter cycles must have length >= 3")


def find_starter(G: FiniteAbelianGroup, t: CycleType, kind: str = "two_starter",
                 budget: SearchBudget | None = None) -> SearchOutcome:
    """First starter of ``G`` with cycle type ``t`` in search order, or a proof that none exists."""
    _check(G, t, kind)
    meter = Meter(budget or SearchBudget())
    try:
        for f in _twofold_graphs(G, t, meter):
            cls = classify_starter(f)
            if kind == "twofold" or cls.is_two_starter:
                assert cls.is_twofold, cls
                return meter.outcome(FOUND, f)
    except BudgetExceeded as e:
        return meter.outcome(EXHAUSTED, reason=str(e))
    return meter.outcome(PROVED_NONE)


def enumerate_starters(G: FiniteAbelianGroup, t: CycleType | None = None, kind: str = "twofold",
                       max_nodes: int = 10**8) -> list[StarterGraph]:
    """All starters of the given kind; every cycle type of order |G|+1 when ``t`` is None."""
    types = [t] if t is not None else list(_cycle_types(G.order + 1))
    meter = Meter(SearchBudget(max_seconds=float("inf"), max_nodes=max_nodes))
    out = []
    for tt in types:
        _check(G, tt, kind)
        for f in _twofold_graphs(G, tt, meter):
            if kind == "twofold" or classify_starter(f).is_two_starter:
                out.append(f)
    return out


def _cycle_types(v: int, least: int = 3) -> Iterator[CycleType]:
    """Cycle types of order v with all lengths >= ``least``."""

    def parts(rest: int, lo: int) -> Iterator[list[int]]:
        if rest == 0:
            yield []
            return
        for l in range(lo, rest + 1):
            if rest - l == 0 or rest - l >= l:
                for tail in parts(rest - l, l):
                    yield [l, *tail]

    for p in parts(v, least):
        yield CycleType.from_lengths(p)
