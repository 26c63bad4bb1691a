"""Starters over finite abelian groups and the 1-rotational machinery.

A starter is a 2-regular graph on ``G ∪ {∞}``; ``∞`` is written ``INF`` (-1).
Group elements use the dense integer encoding of :class:`FiniteAbelianGroup`.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .groups import FiniteAbelianGroup
from .model import (
    CompleteOdd,
    CycleType,
    FactorizationCert,
    LambdaComplete,
    TwoFactor,
    norm_edge,
)

INF = -1


class StarterError(ValueError):
    pass


@dataclass(frozen=True)
class StarterGraph:
    group: FiniteAbelianGroup
    cycles: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(tuple(int(x) for x in c) for c in self.cycles))

    def structure_problem(self) -> str | None:
        """Why this is not a 2-regular graph on G ∪ {∞}, or None."""
        seen = Counter(x for c in self.cycles for x in c)
        want = set(self.group.elements()) | {INF}
        extra = sorted(x for x in seen if x not in want)
        if extra:
            return f"vertices {extra} not in group"
        rep = sorted(x for x, k in seen.items() if k > 1)
        if rep:
            return f"vertices {rep} repeated"
        missing = sorted(want - set(seen))
        if missing:
            return f"vertices {missing} missing"
        short = [c for c in self.cycles if len(c) < 3]
        if short:
            return f"cycles {short} too short"
        return None

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for c in self.cycles:
            L = len(c)
            out.extend(norm_edge(c[k], c[(k + 1) % L]) for k in range(L))
        return out

    def cycle_type(self) -> CycleType:
        return CycleType.from_lengths(len(c) for c in self.cycles)

    def translate(self, g: int) -> "StarterGraph":
        G = self.group
        return StarterGraph(G, tuple(tuple(x if x == INF else G.add(x, g) for x in c) for c in self.cycles))

    def edge_key(self) -> tuple:
        return tuple(sorted(Counter(self.edges()).items()))

    def infinity_cycle(self) -> tuple[int, ...]:
        """The cycle through ∞, rotated so that ∞ comes first."""
        for c in self.cycles:
            if INF in c:
                k = c.index(INF)
                return c[k:] + c[:k]
        raise StarterError("no vertex ∞")


def delta_list(f: StarterGraph) -> Counter:
    """Multiset of differences ``x - y`` over ordered adjacent pairs avoiding ∞."""
    G = f.group
    out: Counter = Counter()
    for x, y in f.edges():
        if INF in (x, y):
            continue
        out[G.sub(x, y)] += 1
        out[G.sub(y, x)] += 1
    return out


@dataclass(frozen=True)
class StarterClass:
    kind: str  # "two_starter" | "twofold" | "none"
    involution: int | None = None
    reason: str | None = None

    @property
    def is_twofold(self) -> bool:
        return self.kind in ("twofold", "two_starter")

    @property
    def is_two_starter(self) -> bool:
        return self.kind == "two_starter"


def classify_starter(f: StarterGraph) -> StarterClass:
    problem = f.structure_problem()
    if problem:
        return StarterClass("none", reason=problem)
    G = f.group
    want = Counter({g: 2 for g in G.elements() if g})
    if delta_list(f) != want:
        return StarterClass("none", reason="difference list is not twice G minus 0")
    key = f.edge_key()
    for y in G.involutions():
        if f.translate(y).edge_key() == key:
            return StarterClass("two_starter", involution=y)
    return StarterClass("twofold")


def _as_factor(f: StarterGraph) -> TwoFactor:
    inf_id = f.group.order
    return TwoFactor(tuple(tuple(inf_id if x == INF else x for x in c) for c in f.cycles))


def develop(f: StarterGraph, mode: str = "orbit") -> FactorizationCert:
    """Orbit of a 2-starter (K_{|G|+1}) or development of a twofold 2-starter (2K_{|G|+1}).

    ∞ becomes vertex ``|G|``.
    """
    cls = classify_starter(f)
    G = f.group
    if mode == "orbit":
        if not cls.is_two_starter:
            raise StarterError(f"orbit needs a 2-starter, got {cls.kind} ({cls.reason or ''})")
        host = CompleteOdd(G.order + 1)
        translates, seen = [], set()
        for g in G.elements():
            t = f.translate(g)
            k = t.edge_key()
            if k not in seen:
                seen.add(k)
                translates.append(t)
    elif mode == "development":
        if not cls.is_twofold:
            raise StarterError(f"development needs a twofold 2-starter ({cls.reason})")
        host = LambdaComplete(2, G.order + 1)
        translates = [f.translate(g) for g in G.elements()]
    else:
        raise ValueError(f"mode must be 'orbit' or 'development', got {mode!r}")
    factors = tuple(_as_factor(t) for t in translates)
    return FactorizationCert(host, factors, tuple(f.cycle_type() for _ in factors))


def graceful_to_starter(v: int, cycles) -> StarterGraph:
    """Reduce a graceful labelling on ``{0..v-2} ∪ {∞}`` to a twofold 2-starter of Z_{v-1}.

    The non-∞ edges must realise each plain difference ``1..v-2`` exactly once.
    """
    cycles = tuple(tuple(int(x) for x in c) for c in cycles)
    labels = [x for c in cycles for x in c]
    if len(labels) != len(set(labels)):
        raise StarterError("duplicate labels")
    if sorted(labels) != [INF] + list(range(v - 1)):
        raise StarterError(f"labels must be exactly {{0..{v - 2}}} ∪ {{∞}}")
    diffs = []
    for c in cycles:
        L = len(c)
        for k in range(L):
            a, b = c[k], c[(k + 1) % L]
            if INF not in (a, b):
                diffs.append(abs(a - b))
    if sorted(diffs) != list(range(1, v - 1)):
        raise StarterError(f"plain differences {sorted(diffs)} are not 1..{v - 2} each once")
    f = StarterGraph(FiniteAbelianGroup.cyclic(v - 1), cycles)
    if not classify_starter(f).is_twofold:  # pragma: no cover - implied by the difference check
        raise StarterError("reduction is not a twofold 2-starter")
    return f


# ---------------------------------------------------------------- doubling


@dataclass(frozen=True)
class LiftResult:
    starter: StarterGraph
    doubled: tuple[int, ...]  # indices i (1-based, non-∞ cycles) lifted to one 2ℓ_i-cycle
    split: tuple[int, ...]  # indices j lifted to two ℓ_j-cycles
    nodes: int


class LiftNotFound(StarterError):
    pass


def doubling_type(inf_len: int, others: list[int], doubled) -> CycleType:
    doubled = set(doubled)
    lengths = [2 * inf_len - 1]
    for i, l in enumerate(others, start=1):
        lengths.extend([2 * l] if i in doubled else [l, l])
    return CycleType.from_lengths(lengths)


def doubling_partitions(h: StarterGraph, f_type: CycleType) -> list[tuple[int, ...]]:
    """All subsets I of the non-∞ cycle indices for which the doubled shape matches ``f_type``."""
    inf_len = len(h.infinity_cycle())
    others = [len(c) for c in h.cycles if INF not in c]
    hits = []
    for r in range(len(others) + 1):
        for I in itertools.combinations(range(1, len(others) + 1), r):
            if doubling_type(inf_len, others, I) == f_type:
                hits.append(I)
    return hits


def doubling_lift(h: StarterGraph, partition=None, max_nodes: int = 10**7) -> LiftResult:
    """Lift a twofold 2-starter of Z_n to a 2-starter of Z_2n fixed by translation by n.

    Each vertex x of ``h`` is lifted to x or x+n.  The ∞-path and its translate
    are joined by one edge of difference n; every other cycle lifts to a
    2-cover.  Lift bits are searched depth first (0 before 1) under the
    constraint that every lifted difference occurs at most twice, so the
    lexicographically least valid lift is returned.  ``partition`` optionally
    fixes the set of doubled cycle indices.
    """
    G = h.group
    if not G.is_cyclic:
        raise StarterError("doubling_lift works over cyclic groups")
    if not classify_starter(h).is_twofold:
        raise StarterError("input is not a twofold 2-starter")
    n = G.order
    N = 2 * n
    want_doubled = None if partition is None else set(partition)

    inf_path = list(h.infinity_cycle()[1:])
    others = [list(c) for c in h.cycles if INF not in c]
    # variable slots: (vertex position) -> bit; bit 0 of each anchor is fixed
    count = [0] * N
    nodes = 0

    def push(a: int, b: int, mult: int) -> bool:
        d = (b - a) % N
        count[d] += mult
        count[(-d) % N] += mult
        return count[d] <= 2 and count[(-d) % N] <= 2

    def pop(a: int, b: int, mult: int):
        d = (b - a) % N
        count[d] -= mult
        count[(-d) % N] -= mult

    # join edge {p, p+n}: difference n counted once per direction
    plan: list[tuple[str, int, int]] = []
    for k in range(1, len(inf_path)):
        plan.append(("inf", 0, k))
    for ci, cyc in enumerate(others):
        for k in range(1, len(cyc)):
            plan.append(("cyc", ci, k))
        plan.append(("close", ci, 0))

    inf_lift = [None] * len(inf_path)
    inf_lift[0] = inf_path[0]
    cyc_lift = [[None] * len(c) for c in others]
    for ci, cyc in enumerate(others):
        cyc_lift[ci][0] = cyc[0]
    closing = [None] * len(others)

    def dfs(step: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise LiftNotFound(f"lift search exceeded {max_nodes} nodes")
        if step == len(plan):
            last = inf_lift[-1]
            ok = push(last, (last + n) % N, 1)
            if ok:
                return True
            pop(last, (last + n) % N, 1)
            return False
        kind, a, k = plan[step]
        for bit in (0, 1):
            if kind == "inf":
                x = inf_path[k] + bit * n
                prev = inf_lift[k - 1]
                inf_lift[k] = x
                mult = 2
            elif kind == "cyc":
                x = others[a][k] + bit * n
                prev = cyc_lift[a][k - 1]
                cyc_lift[a][k] = x
                mult = 2
            else:
                if want_doubled is not None and (bit == 1) != ((a + 1) in want_doubled):
                    continue
                prev = cyc_lift[a][-1]
                x = others[a][0] + bit * n
                closing[a] = bit
                mult = 2
            if push(prev, x, mult) and dfs(step + 1):
                return True
            pop(prev, x, mult)
        return False

    if not dfs(0):
        raise LiftNotFound("no lift satisfies the difference constraints")

    p = inf_lift
    cycles = [(INF, *p, *[(x + n) % N for x in reversed(p)])]
    for ci, lift in enumerate(cyc_lift):
        shifted = [(x + n) % N for x in lift]
        if closing[ci]:
            cycles.append(tuple(lift + shifted))
        else:
            cycles.append(tuple(lift))
            cycles.append(tuple(shifted))
    f = StarterGraph(FiniteAbelianGroup.cyclic(N), tuple(cycles))
    cls = classify_starter(f)
    if not cls.is_two_starter or f.translate(n).edge_key() != f.edge_key():
        raise LiftNotFound(f"lift failed re-verification: {cls}")
    doubled = tuple(i + 1 for i, b in enumerate(closing) if b)
    split = tuple(i + 1 for i, b in enumerate(closing) if not b)
    return LiftResult(f, doubled, split, nodes)
