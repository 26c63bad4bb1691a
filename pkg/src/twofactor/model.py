"""Cycle types, host graph families, 2-factors and factorization certificates."""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Union

from .groups import FiniteAbelianGroup

Edge = tuple[int, int]


class NotationError(ValueError):
    """Malformed cycle-type or host notation."""


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


# ---------------------------------------------------------------- cycle types


@dataclass(frozen=True, order=True)
class CycleType:
    """Multiset of cycle lengths, stored as ascending ``(length, multiplicity)`` pairs."""

    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        merged: Counter = Counter()
        for length, mult in self.parts:
            length, mult = int(length), int(mult)
            if length < 2:
                raise NotationError(f"cycle length must be >= 2, got {length}")
            if mult < 1:
                raise NotationError(f"multiplicity must be >= 1, got {mult}")
            merged[length] += mult
        object.__setattr__(self, "parts", tuple(sorted(merged.items())))
        if not self.parts:
            raise NotationError("cycle type has no cycles")

    @classmethod
    def from_lengths(cls, lengths: Iterable[int]) -> "CycleType":
        return cls(tuple(Counter(lengths).items()))

    @classmethod
    def uniform(cls, length: int, count: int) -> "CycleType":
        return cls(((length, count),))

    @property
    def order(self) -> int:
        return sum(l * a for l, a in self.parts)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(l for l, a in self.parts for _ in range(a))

    @property
    def num_cycles(self) -> int:
        return sum(a for _, a in self.parts)

    @property
    def is_bipartite(self) -> bool:
        return all(l % 2 == 0 for l, _ in self.parts)

    @property
    def is_uniform(self) -> bool:
        return len(self.parts) == 1

    def as_counter(self) -> Counter:
        return Counter(dict(self.parts))

    def __str__(self):
        return "[" + ",".join(str(l) if a == 1 else f"{l}^{a}" for l, a in self.parts) + "]"

    def __repr__(self):
        return f"CycleType({self})"


_TYPE_RE = re.compile(r"\s*\[(.*)\]\s*")
_PART_RE = re.compile(r"\s*(\d+)\s*(?:\^\s*(\d+))?\s*")


def parse_cycle_type(text: str, min_length: int = 3) -> CycleType:
    """Parse ``[3^2,5]`` style notation (``length^multiplicity``)."""
    m = _TYPE_RE.fullmatch(text)
    if not m or not m.group(1).strip():
        raise NotationError(f"malformed cycle type {text!r}")
    parts = []
    for chunk in m.group(1).split(","):
        pm = _PART_RE.fullmatch(chunk)
        if not pm:
            raise NotationError(f"malformed cycle type part {chunk!r} in {text!r}")
        length = int(pm.group(1))
        mult = int(pm.group(2)) if pm.group(2) is not None else 1
        if length < min_length:
            raise NotationError(f"cycle length {length} < {min_length} in {text!r}")
        if mult == 0:
            raise NotationError(f"zero multiplicity in {text!r}")
        parts.append((length, mult))
    return CycleType(tuple(parts))


def parse_type_list(text: str, min_length: int = 3) -> list[CycleType]:
    """Parse ``"[3,3],[3,3]"`` or ``"2x[3,3]"`` into a flat list of types."""
    out: list[CycleType] = []
    for m in re.finditer(r"(?:(\d+)\s*[x*×]\s*)?(\[[^\]]*\])", text):
        mult = int(m.group(1)) if m.group(1) else 1
        out.extend([parse_cycle_type(m.group(2), min_length)] * mult)
    leftover = re.sub(r"(?:(\d+)\s*[x*×]\s*)?(\[[^\]]*\])", "", text).replace(",", "").strip()
    if leftover or not out:
        raise NotationError(f"malformed type list {text!r}")
    return out


def is_refinement(f1: CycleType, f2: CycleType) -> bool:
    """True iff the cycles of ``f1`` group into bipartite pieces matching ``f2``'s cycles."""
    if f1.order != f2.order or not (f1.is_bipartite and f2.is_bipartite):
        return False
    pieces = sorted(f1.lengths, reverse=True)
    bins = sorted(f2.lengths, reverse=True)
    free = list(bins)

    def place(k: int) -> bool:
        if k == len(pieces):
            return all(c == 0 for c in free)
        tried = set()
        for i, cap in enumerate(free):
            if cap >= pieces[k] and (cap, bins[i]) not in tried:
                tried.add((cap, bins[i]))
                free[i] -= pieces[k]
                if place(k + 1):
                    return True
                free[i] += pieces[k]
        return False

    return place(0)


# ---------------------------------------------------------------- host graphs


def canonical_one_factor(v: int) -> tuple[Edge, ...]:
    return tuple((2 * i, 2 * i + 1) for i in range(v // 2))


def _check_one_factor(v: int, pairs) -> tuple[Edge, ...] | None:
    if pairs is None:
        return None
    pairs = tuple(sorted(norm_edge(int(a), int(b)) for a, b in pairs))
    seen = sorted(x for e in pairs for x in e)
    if seen != list(range(v)):
        raise ValueError(f"not a 1-factor of K_{v}: {pairs}")
    return None if pairs == canonical_one_factor(v) else pairs


@dataclass(frozen=True)
class CompleteOdd:
    v: int

    def __post_init__(self):
        if self.v < 3 or self.v % 2 == 0:
            raise ValueError(f"CompleteOdd needs odd v >= 3, got {self.v}")

    @property
    def order(self):
        return self.v

    @property
    def degree(self):
        return self.v - 1

    def edge_counter(self) -> Counter:
        return Counter({(u, w): 1 for u in range(self.v) for w in range(u + 1, self.v)})

    def __str__(self):
        return f"K{self.v}"


@dataclass(frozen=True)
class CompleteMinusI:
    v: int
    one_factor: tuple[Edge, ...] | None = None

    def __post_init__(self):
        if self.v < 4 or self.v % 2:
            raise ValueError(f"CompleteMinusI needs even v >= 4, got {self.v}")
        object.__setattr__(self, "one_factor", _check_one_factor(self.v, self.one_factor))

    @property
    def removed(self) -> tuple[Edge, ...]:
        return self.one_factor or canonical_one_factor(self.v)

    @property
    def order(self):
        return self.v

    @property
    def degree(self):
        return self.v - 2

    def edge_counter(self) -> Counter:
        gone = set(self.removed)
        return Counter({(u, w): 1 for u in range(self.v) for w in range(u + 1, self.v) if (u, w) not in gone})

    def __str__(self):
        return f"K{self.v}-I"


@dataclass(frozen=True)
class CompletePlusJ:
    v: int
    one_factor: tuple[Edge, ...] | None = None

    def __post_init__(self):
        if self.v < 2 or self.v % 2:
            raise ValueError(f"CompletePlusJ needs even v >= 2, got {self.v}")
        object.__setattr__(self, "one_factor", _check_one_factor(self.v, self.one_factor))

    @property
    def added(self) -> tuple[Edge, ...]:
        return self.one_factor or canonical_one_factor(self.v)

    @property
    def order(self):
        return self.v

    @property
    def degree(self):
        return self.v

    def edge_counter(self) -> Counter:
        c = Counter({(u, w): 1 for u in range(self.v) for w in range(u + 1, self.v)})
        for e in self.added:
            c[e] += 1
        return c

    def __str__(self):
        return f"K{self.v}+J"


@dataclass(frozen=True)
class LambdaComplete:
    lam: int
    v: int

    def __post_init__(self):
        if self.lam < 1 or self.v < 2:
            raise ValueError(f"LambdaComplete needs lam >= 1, v >= 2, got {self.lam}, {self.v}")

    @property
    def order(self):
        return self.v

    @property
    def degree(self):
        return self.lam * (self.v - 1)

    def edge_counter(self) -> Counter:
        return Counter({(u, w): self.lam for u in range(self.v) for w in range(u + 1, self.v)})

    def __str__(self):
        return f"{self.lam}K{self.v}" if self.lam != 1 else f"K{self.v}"


@dataclass(frozen=True)
class Equipartite:
    """K_m[n]: parts ``{p*n, ..., p*n+n-1}``."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 2 or self.n < 1:
            raise ValueError(f"Equipartite needs m >= 2, n >= 1, got {self.m}, {self.n}")

    @property
    def order(self):
        return self.m * self.n

    @property
    def degree(self):
        return (self.m - 1) * self.n

    def part_of(self, u: int) -> int:
        return u // self.n

    def edge_counter(self) -> Counter:
        V = self.order
        return Counter({(u, w): 1 for u in range(V) for w in range(u + 1, V) if u // self.n != w // self.n})

    def __str__(self):
        return f"K{self.m}[{self.n}]"


@dataclass(frozen=True)
class BlownCycle:
    """C_g[Γ, S] on Z_g x Γ; vertex ``(i, x)`` has id ``i*|Γ| + x``."""

    g: int
    group: FiniteAbelianGroup
    S: tuple[int, ...]

    def __post_init__(self):
        S = tuple(sorted(set(int(d) for d in self.S)))
        object.__setattr__(self, "S", S)
        # g = 2 is admitted for row-sum matrices; the host is then a multigraph.
        if self.g < 2:
            raise ValueError(f"BlownCycle needs g >= 2, got {self.g}")
        if not S or any(d < 0 or d >= self.group.order for d in S):
            raise ValueError(f"connection set {S} not a nonempty subset of {self.group}")

    @property
    def order(self):
        return self.g * self.group.order

    @property
    def degree(self):
        return 2 * len(self.S)

    def vertex(self, layer: int, x: int) -> int:
        return (layer % self.g) * self.group.order + x

    def coords(self, u: int) -> tuple[int, int]:
        return divmod(u, self.group.order)

    def edge_counter(self) -> Counter:
        c: Counter = Counter()
        G = self.group
        for i in range(self.g):
            for x in G.elements():
                for d in self.S:
                    c[norm_edge(self.vertex(i, x), self.vertex(i + 1, G.add(d, x)))] += 1
        return c

    def __str__(self):
        return f"C{self.g}[{self.group};{','.join(map(str, self.S))}]"


@dataclass(frozen=True)
class Circulant:
    """Circ(n; ±S) with S ⊆ [1, n/2]."""

    n: int
    S: tuple[int, ...]

    def __post_init__(self):
        S = tuple(sorted(set(int(d) for d in self.S)))
        object.__setattr__(self, "S", S)
        if self.n < 3 or not S or any(d < 1 or 2 * d > self.n for d in S):
            raise ValueError(f"Circulant needs S ⊆ [1, n/2], got n={self.n}, S={S}")

    @property
    def order(self):
        return self.n

    @property
    def degree(self):
        return 2 * len(self.S) - (1 if 2 * self.S[-1] == self.n else 0)

    def edge_counter(self) -> Counter:
        return Counter({norm_edge(x, (x + d) % self.n): 1 for d in self.S for x in range(self.n)})

    def __str__(self):
        return f"Circ({self.n};{','.join(map(str, self.S))})"


GraphSpec = Union[CompleteOdd, CompleteMinusI, CompletePlusJ, LambdaComplete, Equipartite, BlownCycle, Circulant]


def complete_star(v: int) -> GraphSpec:
    """K_v^*: K_v for odd v, K_v - I for even v."""
    return CompleteOdd(v) if v % 2 else CompleteMinusI(v)


def edges_of(spec: GraphSpec) -> list[tuple[Edge, int]]:
    """Exact edge multiset as sorted ``(edge, multiplicity)`` pairs."""
    return sorted(spec.edge_counter().items())


def is_multigraph(spec: GraphSpec) -> bool:
    return any(m > 1 for m in spec.edge_counter().values())


_HOST_PATTERNS = [
    (re.compile(r"K_?(\d+)\s*-\s*I"), lambda m: CompleteMinusI(int(m[1]))),
    (re.compile(r"K_?(\d+)\s*\+\s*[IJ]"), lambda m: CompletePlusJ(int(m[1]))),
    (re.compile(r"K_?(\d+)\s*\*"), lambda m: complete_star(int(m[1]))),
    (re.compile(r"(\d+)\s*K_?(\d+)"), lambda m: LambdaComplete(int(m[1]), int(m[2]))),
    (re.compile(r"K_?(\d+)\s*\[\s*(\d+)\s*\]"), lambda m: Equipartite(int(m[1]), int(m[2]))),
    (re.compile(r"K_?(\d+)"), lambda m: CompleteOdd(int(m[1])) if int(m[1]) % 2 else LambdaComplete(1, int(m[1]))),
    (re.compile(r"Circ\(\s*(\d+)\s*;\s*([\d,\s]+)\)"),
     lambda m: Circulant(int(m[1]), tuple(int(x) for x in m[2].split(",") if x.strip()))),
    (re.compile(r"C_?(\d+)\s*\[\s*([^;\]]+?)\s*;\s*([\d,\s]+)\]"),
     lambda m: BlownCycle(int(m[1]), FiniteAbelianGroup.parse(m[2]),
                          tuple(int(x) for x in m[3].split(",") if x.strip()))),
    (re.compile(r"C_?(\d+)\s*\[\s*(\d+)\s*\]"),
     lambda m: BlownCycle(int(m[1]), FiniteAbelianGroup.cyclic(int(m[2])), tuple(range(int(m[2]))))),
]


def parse_host(text: str) -> GraphSpec:
    """Parse host notation: ``K7``, ``K6-I``, ``K6+J``, ``K8*``, ``2K5``, ``K3[4]``,
    ``Circ(9;1,2)``, ``C3[Z5;1,4]``, ``C3[5]``."""
    t = text.strip()
    for rx, build in _HOST_PATTERNS:
        m = rx.fullmatch(t)
        if m:
            return build(m)
    raise NotationError(f"unrecognised host {text!r}")


# ---------------------------------------------------------------- factors


@dataclass(frozen=True)
class TwoFactor:
    cycles: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(tuple(int(x) for x in c) for c in self.cycles))

    def edges(self) -> list[Edge]:
        out = []
        for c in self.cycles:
            L = len(c)
            if L == 1:
                continue
            out.extend(norm_edge(c[k], c[(k + 1) % L]) for k in range(L))
        return out

    def vertices(self) -> list[int]:
        return [x for c in self.cycles for x in c]


def cycle_type_of(factor: TwoFactor) -> CycleType:
    return CycleType.from_lengths(len(c) for c in factor.cycles)


def two_factor_from_edges(edges: Iterable[Edge]) -> TwoFactor:
    """Rebuild cycles from a 2-regular edge multiset (digons allowed)."""
    adj: dict[int, list[int]] = {}
    for u, w in edges:
        adj.setdefault(u, []).append(w)
        adj.setdefault(w, []).append(u)
    if any(len(n) != 2 for n in adj.values()):
        raise ValueError("edge set is not 2-regular")
    seen: set[int] = set()
    cycles = []
    for s in sorted(adj):
        if s in seen:
            continue
        cyc = [s]
        seen.add(s)
        prev, cur = s, min(adj[s])
        while cur != s:
            cyc.append(cur)
            seen.add(cur)
            a, b = adj[cur]
            nxt = b if a == prev else a
            if a == b:  # digon
                nxt = a
            prev, cur = cur, nxt
        cycles.append(tuple(cyc))
    return TwoFactor(tuple(cycles))


@dataclass(frozen=True)
class FactorizationCert:
    host: GraphSpec
    factors: tuple[TwoFactor, ...]
    claimed_types: tuple[CycleType, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.claimed_types:
            object.__setattr__(self, "claimed_types", tuple(cycle_type_of(f) for f in self.factors))
        else:
            object.__setattr__(self, "claimed_types", tuple(self.claimed_types))

    @cached_property
    def type_counter(self) -> Counter:
        return Counter(self.claimed_types)


def half_difference_edges(v: int, d: int, parity: str) -> list[Edge]:
    """Edges ``{x, x+d}`` of Z_v whose starting vertex x has the given parity."""
    if v % 2:
        raise ValueError(f"v must be even, got {v}")
    if not 1 <= d <= v // 2:
        raise ValueError(f"difference {d} out of range [1, {v // 2}]")
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    start = 0 if parity == "even" else 1
    return sorted({norm_edge(x, (x + d) % v) for x in range(start, v, 2)})


def one_three_even(v: int) -> list[Edge]:
    """The 3-regular circulant ⟨1, 3^e⟩ on Z_v."""
    every = set(half_difference_edges(v, 1, "even")) | set(half_difference_edges(v, 1, "odd"))
    return sorted(every | set(half_difference_edges(v, 3, "even")))


def lcm_all(xs: Iterable[int]) -> int:
    return math.lcm(*xs)
