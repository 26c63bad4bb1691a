"""Existence rules for OP, HWP and GOP instances.

Every rule is a record holding an id, a citation and a predicate.  A
predicate returns ``None`` when the rule does not apply, ``(EXISTS | NOT_EXISTS,
clause)`` when it decides the instance, or ``(UNKNOWN, clause)`` when the
instance falls into one of the rule's "except possibly" cases.  Rules are
tried in catalog order; the first decisive one wins and abstentions are
remembered as the nearest rules.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Union

from .model import (
    CompleteMinusI,
    CompleteOdd,
    CompletePlusJ,
    CycleType,
    Equipartite,
    GraphSpec,
    LambdaComplete,
    is_refinement,
    parse_cycle_type,
)

EXISTS = "Exists"
NOT_EXISTS = "NotExists"
UNKNOWN = "Unknown"
KINDS = ("OP", "HWP", "GOP")

FactorSpec = Union[CycleType, int]  # an int is the uniform shorthand: every cycle of that length


@dataclass(frozen=True)
class ProblemInstance:
    kind: str
    host: GraphSpec
    factors: tuple[tuple[FactorSpec, int], ...]

    def __post_init__(self):
        kind = self.kind.upper()
        if kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        object.__setattr__(self, "kind", kind)
        merged: Counter = Counter()
        for spec, alpha in self.factors:
            if isinstance(spec, CycleType) and spec.is_uniform and spec.order != self.host.order:
                spec = spec.lengths[0]
            if isinstance(spec, int) and self.host.order % spec == 0:
                spec = CycleType.uniform(spec, self.host.order // spec)
            if alpha < 1:
                raise ValueError(f"multiplicity must be positive, got {alpha}")
            merged[spec] += alpha
        factors = tuple(sorted(merged.items(), key=lambda kv: _spec_key(kv[0])))
        object.__setattr__(self, "factors", factors)
        t = len(factors)
        if kind == "OP" and t != 1:
            raise ValueError(f"OP takes one factor type, got {t}")
        if kind == "HWP" and t != 2:
            raise ValueError(f"HWP takes two factor types, got {t}")
        if kind == "GOP" and t < 2:
            raise ValueError(f"GOP takes at least two factor types, got {t}")

    @property
    def v(self) -> int:
        return self.host.order

    @property
    def types(self) -> list[CycleType]:
        """Resolved factor types; empty if some uniform length does not divide v."""
        if any(not isinstance(s, CycleType) for s, _ in self.factors):
            return []
        return [s for s, _ in self.factors]

    @property
    def alphas(self) -> list[int]:
        return [a for _, a in self.factors]

    def expanded(self) -> list[CycleType]:
        return [t for t, a in zip(self.types, self.alphas) for _ in range(a)]

    def __str__(self):
        parts = ", ".join(f"{a}x{s if isinstance(s, CycleType) else f'[{s}]'}" for s, a in self.factors)
        return f"{self.kind}({self.host}; {parts})"


def _spec_key(spec: FactorSpec):
    return (spec.parts if isinstance(spec, CycleType) else ((spec, 0),),)


@dataclass(frozen=True)
class Verdict:
    status: str
    rule: str | None = None
    citation: str | None = None
    clause: str | None = None
    nearest: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "verdict": self.status,
            "rule": self.rule,
            "citation": self.citation,
            "clause": self.clause,
            "nearest": list(self.nearest),
        }


@dataclass(frozen=True)
class Rule:
    id: str
    citation: str
    kinds: tuple[str, ...]
    check: Callable[[ProblemInstance], tuple[str, str] | None] = field(repr=False)


# ---------------------------------------------------------------- host helpers


def star_order(host: GraphSpec) -> int | None:
    """v if the host is K_v (v odd) or K_v - I (v even)."""
    if isinstance(host, (CompleteOdd, CompleteMinusI)):
        return host.order
    if isinstance(host, LambdaComplete) and host.lam == 1 and host.v % 2:
        return host.v
    return None


def _is_bipartite_host(host: GraphSpec) -> bool:
    adj: dict[int, list[int]] = {}
    for u, w in host.edge_counter():
        adj.setdefault(u, []).append(w)
        adj.setdefault(w, []).append(u)
    color: dict[int, int] = {}
    for s in range(host.order):
        if s in color:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj.get(u, ()):
                if w not in color:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def _uniform_lengths(inst: ProblemInstance) -> list[int] | None:
    types = inst.types
    if not types or not all(t.is_uniform for t in types):
        return None
    return [t.lengths[0] for t in types]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % p for p in range(3, math.isqrt(n) + 1, 2))


# ---------------------------------------------------------------- rules


def _r0(inst: ProblemInstance):
    host = inst.host
    if host.degree % 2:
        return NOT_EXISTS, f"host {host} has odd degree {host.degree}"
    if sum(inst.alphas) != host.degree // 2:
        return NOT_EXISTS, f"{sum(inst.alphas)} factors but host degree {host.degree} needs {host.degree // 2}"
    for spec, _ in inst.factors:
        if not isinstance(spec, CycleType):
            return NOT_EXISTS, f"cycle length {spec} does not divide v = {inst.v}"
        if spec.order != inst.v:
            return NOT_EXISTS, f"type {spec} has order {spec.order}, host has {inst.v} vertices"
    multi = any(k > 1 for k in host.edge_counter().values())
    if not multi and any(2 in t.lengths for t in inst.types):
        return NOT_EXISTS, "2-cycles need a multigraph host"
    if any(not t.is_bipartite for t in inst.types) and _is_bipartite_host(host):
        return NOT_EXISTS, "odd cycles in a bipartite host"
    return None


OP_EXCEPTIONS = tuple(parse_cycle_type(s) for s in ("[3^2]", "[3^4]", "[4,5]", "[3^2,5]"))


def _r1(inst):
    if star_order(inst.host) and inst.types[0] in OP_EXCEPTIONS:
        return NOT_EXISTS, f"{inst.types[0]} is one of the four exceptional 2-factors"
    return None


def _r2(inst):
    v = star_order(inst.host)
    if v and v <= 60:
        return EXISTS, f"v = {v} <= 60"
    return None


def _r3(inst):
    if star_order(inst.host) and inst.types[0].is_uniform:
        return EXISTS, "uniform 2-factor"
    return None


def _r4(inst):
    if star_order(inst.host) and inst.types[0].num_cycles == 2:
        return EXISTS, "2-factor with two components"
    return None


def _r5(inst):
    v = star_order(inst.host)
    if v and v % 2 == 0 and inst.types[0].is_bipartite:
        return EXISTS, "bipartite 2-factor, v even"
    return None


# K_v + J with a uniform factor: (v, length) pairs where no factorization exists
# or where the exhaustive search disagrees with the blanket statement.
PLUS_J_EXCEPTIONS = {(6, 3), (12, 3)}


def _r6(inst):
    host = inst.host
    if not isinstance(host, CompletePlusJ) or not inst.types[0].is_uniform:
        return None
    ell = inst.types[0].lengths[0]
    if (host.v, ell) in PLUS_J_EXCEPTIONS:
        return UNKNOWN, f"K_{host.v}+J with {ell}-cycles is an excluded small case"
    return EXISTS, "uniform 2-factor"


def _r7(inst):
    if not isinstance(inst.host, CompleteOdd) or inst.v != 15:
        return None
    want = {(CycleType.uniform(3, 5), 6), (CycleType.uniform(5, 3), 1)}
    if set(zip(inst.types, inst.alphas)) == want:
        return NOT_EXISTS, "six triangle factors and one 5-cycle factor on 15 points"
    return None


def _hwp_pair(inst) -> tuple[int, int, int, int] | None:
    """(M, N, alpha, beta) with M < N for a uniform HWP instance on K_v^*."""
    if not star_order(inst.host):
        return None
    lengths = _uniform_lengths(inst)
    if lengths is None:
        return None
    (m_len, alpha), (n_len, beta) = sorted(zip(lengths, inst.alphas))
    return m_len, n_len, alpha, beta


def _r8(inst):
    if not isinstance(inst.host, CompleteMinusI):
        return None
    pair = _hwp_pair(inst)
    if pair is None or pair[0] % 2 or pair[1] % 2:
        return None
    M, N, alpha, beta = pair
    v = inst.v
    if v % M or v % N:
        return NOT_EXISTS, f"{M} and {N} must both divide v = {v}"
    m, n = M // 2, N // 2
    if n % m:
        if v % 4 == 0 and 1 in (alpha, beta):
            return UNKNOWN, "v = 0 (mod 4), m does not divide n, a multiplicity is 1"
        if v % 4 == 2 and alpha % 2 and beta % 2:
            return UNKNOWN, "v = 2 (mod 4), m does not divide n, both multiplicities odd"
    return EXISTS, f"{M} and {N} divide v = {v}"


def _r9(inst):
    pair = _hwp_pair(inst)
    if pair is None:
        return None
    M, N, alpha, beta = pair
    v = inst.v
    lcm = math.lcm(M, N)
    if M % 2 and N % 2 and M >= 3:
        if v % lcm:
            return None
        if v // lcm in (1, 2, 4, 6):
            return UNKNOWN, "item 1: v = lcm(M,N) u with u in {1,2,4,6}"
        if alpha == 1 or beta in (1, 3):
            return UNKNOWN, "item 1: alpha = 1 or beta in {1,3}"
        if v % 2 == 0 and (M, N, beta) == (5, 7, 5):
            return UNKNOWN, "item 1: v even and (M,N,beta) = (5,7,5)"
        return EXISTS, "item 1: odd M < N, lcm(M,N) divides v"
    if M % 2 == 0 and N % 2 == 0 and M >= 4 and N % M and alpha % 2 and beta % 2:
        if 1 in (alpha, beta):
            return UNKNOWN, "item 2: a multiplicity is 1"
        if beta == 3 and v % 4 == 2 and math.gcd(M, N) == 2:
            return UNKNOWN, "item 2: beta = 3, v = 2 (mod 4), gcd(M,N) = 2"
        if v == lcm and v % 4 == 2:
            return UNKNOWN, "item 2: v = lcm(M,N) = 2 (mod 4)"
        return EXISTS, "item 2: even M < N, M does not divide N, odd multiplicities"
    if (M % 2) != (N % 2):
        # item 3 names the odd length M and the even length N = 2^k n
        if M % 2:
            odd, even, a_odd, a_even = M, N, alpha, beta
        else:
            odd, even, a_odd, a_even = N, M, beta, alpha
        k = (even & -even).bit_length() - 1
        n = even >> k
        # the clause's undefined "s" is read as the multiplicity of the even length
        if n % odd == 0 and v > 6 * even > 36 * odd and a_even >= 3:
            return EXISTS, "item 3: odd length divides n, v > 6N > 36M, beta >= 3"
        if (math.gcd(odd, n) >= 3 and v % 4**k == 0 and v // (4**k * math.lcm(odd, n)) >= 3
                and 1 not in (a_odd, a_even)):
            return EXISTS, "item 3: gcd(M,n) >= 3, 4^k divides v, v/(4^k lcm(M,n)) >= 3"
    return None


def _r10(inst):
    pair = _hwp_pair(inst)
    if pair is None:
        return None
    M, N, _, _ = pair
    v = inst.v
    if min(M, N, v) <= 3:
        return None
    if v % M or v % N:
        return NOT_EXISTS, f"{M} and {N} must both divide v = {v}"
    ell = math.lcm(M, N)
    d = math.gcd(M, N)
    q = v // ell
    if d in (1, 2):
        return UNKNOWN, "clause 1: gcd(M,N) in {1,2}"
    if q % 4:
        return UNKNOWN, "clause 2: 4 does not divide v/lcm"
    if q // 4 in (1, 2):
        return UNKNOWN, "clause 3: v/(4 lcm) in {1,2}"
    if q == 16 and d % 2:
        return UNKNOWN, "clause 4: v = 16 lcm, gcd odd"
    if q == 24 and d == 3:
        return UNKNOWN, "clause 5: v = 24 lcm, gcd = 3"
    return EXISTS, "M and N divide v, no exception clause applies"


def _r11(inst):
    if not isinstance(inst.host, CompleteOdd):
        return None
    lengths = _uniform_lengths(inst)
    if lengths is None or min(lengths) < 3:
        return None
    v = inst.v
    N = math.lcm(*lengths)
    g = math.gcd(*lengths)
    if v % N:
        return NOT_EXISTS, f"lcm {N} does not divide v = {v}"
    alphas = inst.alphas
    if any(a == 1 for a in alphas):
        return UNKNOWN, "clause 1: some multiplicity is 1"
    low = set(range(2, (N - 3) // 2 + 1)) | {(N + 1) // 2}
    if all(a in low for a in alphas):
        return UNKNOWN, "clause 2: every multiplicity in [2,(N-3)/2] or equal to (N+1)/2"
    if g == 1:
        return UNKNOWN, "clause 3: gcd of the lengths is 1"
    if v == N:
        return UNKNOWN, "clause 4: v = lcm of the lengths"
    return EXISTS, f"lcm {N} divides v = {v}, gcd {g}"


def _r12(inst):
    if not isinstance(inst.host, CompleteMinusI):
        return None
    (f1, f2), (a, b) = inst.types, inst.alphas
    if not (f1.is_bipartite and f2.is_bipartite):
        return None
    if is_refinement(f1, f2) or is_refinement(f2, f1):
        if a + b == (inst.v - 2) // 2:
            return EXISTS, "one factor refines the other, alpha + beta = (v-2)/2"
        return NOT_EXISTS, "alpha + beta != (v-2)/2"
    return None


def _r13(inst):
    if not isinstance(inst.host, CompleteMinusI) or not all(t.is_bipartite for t in inst.types):
        return None
    v, alphas = inst.v, inst.alphas
    odd = [a for a in alphas if a % 2]
    if v % 4 == 2 and not odd:
        return EXISTS, "v = 2 (mod 4), every multiplicity even"
    if v % 4 == 0 and len(odd) == 1 and odd[0] >= 3:
        return EXISTS, "v = 0 (mod 4), one odd multiplicity >= 3, the rest even"
    return None


def _r14(inst):
    host = inst.host
    if not isinstance(host, Equipartite) or not inst.types[0].is_bipartite:
        return None
    if host.n % 2:
        return NOT_EXISTS, "part size is odd"
    if (host.m, host.n) == (2, 6) and inst.types[0] == CycleType.uniform(6, 2):
        return NOT_EXISTS, "K_2[6] has no [6,6]-factorization"
    return EXISTS, "bipartite 2-factor, even part size"


DESK_PRIME_LIMIT = 10**9


def bs1_condition(v: int) -> bool:
    """Prime v = 1 (mod 16) with 1, 2, 3, 4 squares lying in distinct cosets of the 8th powers."""
    if v % 16 != 1 or v > DESK_PRIME_LIMIT or not is_prime(v):
        return False
    half, eighth = (v - 1) // 2, (v - 1) // 8
    if any(pow(a, half, v) != 1 for a in (2, 3)):  # 1 and 4 are squares already
        return False
    reps = (1, 2, 3, 4)
    for i, a in enumerate(reps):
        for b in reps[i + 1:]:
            if pow(a * pow(b, -1, v) % v, eighth, v) == 1:
                return False
    return True


def _r15(inst):
    host = inst.host
    v = star_order(host)
    if v and v % 2 and bs1_condition(v):
        return EXISTS, f"v = {v} prime with 1, 2, 3, 4 in distinct cosets of the index-8 subgroup"
    return None


def _r16(inst):
    if not isinstance(inst.host, CompleteMinusI):
        return None
    p = inst.v // 2
    if p % 8 == 5 and is_prime(p):
        return EXISTS, f"v = 2p with p = {p} prime, p = 5 (mod 8)"
    return None


def lambda2_bound(rest: list[int]) -> int | None:
    """Threshold the long cycle must exceed for a 1-rotational solution on 2K_v; None if undefined."""
    evens = [l for l in rest if l % 2 == 0]
    odds = [l for l in rest if l % 2]
    r, s = len(evens), len(odds)
    if r and s:
        return 12 * r * (max(evens) + 3) + 7**s * (2 * max(odds) + 1) - 6
    if r:
        return 2 * (r + 1) * (max(evens) + 1) + 5
    if s:
        return 3 * 7 ** (s - 1) * (2 * max(odds) + 1)
    return None


def _r17(inst):
    host = inst.host
    if not (isinstance(host, LambdaComplete) and host.lam == 2):
        return None
    F = inst.types[0]
    if min(F.lengths) < 3:
        return None
    best = None
    for h in sorted(set(F.lengths)):
        rest = list(F.lengths)
        rest.remove(h)
        bound = lambda2_bound(rest)
        if bound is not None and h > bound and (best is None or bound < best[1]):
            best = (h, bound)
    if best:
        return EXISTS, f"long cycle {best[0]} exceeds bound {best[1]}"
    return None


@dataclass(frozen=True)
class BoundParams:
    h: int
    L: tuple[int, ...]
    r: int
    s: int
    L0: tuple[int, ...]
    L1: tuple[int, ...]
    h0: int
    h1: int

    @property
    def bound(self) -> int:
        return 16 * max(1, self.h0) + 20 * max(3, self.h1) + 29


def single_flip_params(F: CycleType, h: int) -> BoundParams | None:
    """Read F as [h, 2l_1, ..., 2l_r, ^2 l_{r+1}, ..., ^2 l_s]; None if it has no such form."""
    if h % 2 == 0 or h < 3 or h not in F.lengths:
        return None
    counts = F.as_counter()
    counts[h] -= 1
    singles, pairs = [], []
    for length, k in sorted(counts.items()):
        if k == 0:
            continue
        if length % 2 == 0 and k % 2:
            singles.append(length // 2)
            k -= 1
        elif k % 2:
            return None
        pairs.extend([length] * (k // 2))
    L = tuple(singles + pairs)
    L0 = tuple(x for x in L if x % 2 == 0 and x > 2)
    L1 = tuple(x for x in L if x % 2)
    s = len(L)
    h0 = 2 * len(L0) * (max(L0) + 3) - 1 if L0 else -1
    h1 = 7 ** (s - len(L0) - 1) * (2 * max(L1) + 1) if L1 else 0
    return BoundParams(h, L, len(singles), s, L0, L1, h0, h1)


def _r18(inst):
    if not isinstance(inst.host, CompleteOdd):
        return None
    F = inst.types[0]
    for h in sorted(set(F.lengths), reverse=True):
        p = single_flip_params(F, h)
        if p is not None and h > p.bound:
            return EXISTS, f"odd cycle {h} exceeds bound {p.bound}"
    return None


_OP, _HWP, _GOP = ("OP",), ("HWP",), ("HWP", "GOP")
_ALL = KINDS

RULES: tuple[Rule, ...] = (
    Rule("R0", "necessary conditions: factor count, orders, simple host, bipartite host", _ALL, _r0),
    Rule("R1", "OP(K_v^*; F) has no solution for F in {[3^2], [3^4], [4,5], [3^2,5]}", _OP, _r1),
    Rule("R2", "OP(K_v^*; F) is solved for every other F with v <= 60", _OP, _r2),
    Rule("R3", "OP(K_v^*; F) is solved for uniform F", _OP, _r3),
    Rule("R4", "OP(K_v^*; F) is solved when F has exactly two cycles", _OP, _r4),
    Rule("R5", "OP(K_v - I; F) is solved for bipartite F", _OP, _r5),
    Rule("R6", "OP(K_v + J; F) is solved for uniform F", _OP, _r6),
    Rule("R7", "HWP(K_15; 6 x [3^5], 1 x [5^3]) has no solution", _HWP, _r7),
    Rule("R8", "HWP(K_v - I; 2m, 2n): both lengths divide v, up to two possible exceptions", _HWP, _r8),
    Rule("R9", "uniform HWP(K_v^*; M, N): odd/odd, even/even and mixed-parity families", _HWP, _r9),
    Rule("R10", "uniform HWP(K_v^*; M, N) with M, N > 3 dividing v, up to five possible exceptions", _HWP, _r10),
    Rule("R11", "uniform GOP(K_v) for odd v: lcm of the lengths divides v, up to four possible exceptions",
         _GOP, _r11),
    Rule("R12", "HWP(K_v - I; F1, F2) with F1 a bipartite refinement of F2", _HWP, _r12),
    Rule("R13", "bipartite GOP(K_v - I): one multiplicity free, the others even", _GOP, _r13),
    Rule("R14", "OP(K_r[n]; F) for bipartite F: iff n even, except K_2[6] with [6,6]", _OP, _r14),
    Rule("R15", "OP(K_v; F) for primes v = 1 (mod 16) meeting the index 2 / index 8 subgroup condition",
         _OP, _r15),
    Rule("R16", "OP(K_2p - I; F) for primes p = 5 (mod 8)", _OP, _r16),
    Rule("R17", "OP(2K_v; F) has a 1-rotational solution when one cycle is long enough", _OP, _r17),
    Rule("R18", "OP(K_2n+1; F) has a 1-rotational solution for single-flip F with a long odd cycle", _OP, _r18),
)

RULES_BY_ID = {r.id: r for r in RULES}


def advise(inst: ProblemInstance) -> Verdict:
    nearest: list[str] = []
    for rule in RULES:
        if inst.kind not in rule.kinds:
            continue
        hit = rule.check(inst)
        if hit is None:
            continue
        status, clause = hit
        if status == UNKNOWN:
            nearest.append(f"{rule.id}: {clause}")
            continue
        return Verdict(status, rule.id, rule.citation, clause, tuple(nearest))
    return Verdict(UNKNOWN, nearest=tuple(nearest))


# ---------------------------------------------------------------- predicates


LIU_EXCEPTIONS = frozenset({(3, 3, 2), (3, 6, 2), (3, 3, 6), (6, 2, 6)})


def liu_exists(g: int, m: int, z: int) -> bool:
    """Whether K_m[z] has a C_g-factorization."""
    if g < 3 or m < 2 or z < 1:
        raise ValueError(f"need g >= 3, m >= 2, z >= 1, got {(g, m, z)}")
    return (
        (m * z) % g == 0
        and ((m - 1) * z) % 2 == 0
        and (m != 2 or g % 2 == 0)
        and (g, m, z) not in LIU_EXCEPTIONS
    )


def _blocks_with(e: int, rest: frozenset[int], n: int) -> list[frozenset[int]]:
    """Blocks of the seven admissible forms that contain e and lie inside ``rest`` (e = min(rest))."""
    h = (n - 1) // 2
    units = [x for x in sorted(rest) if math.gcd(x, n) == 1]
    out: set[frozenset[int]] = set()

    def add(block):
        block = frozenset(block)
        if block and e in block and block <= rest:
            out.add(block)

    if math.gcd(e, n) == 1:
        add({e})
    for b in rest:
        if b != e and math.gcd(math.gcd(e, b), n) == 1:
            add({e, b})
    for a in range(max(1, e - 1), h + 1):
        for b in range(a, h + 1):
            base = set(range(a, b + 1))
            if len(base - rest) > 1:  # one missing element can still be cut out
                break
            if (b - a + 1) % 2 == 0:
                add(base)
            for x in units:
                if x not in base:
                    add(base | {x})
            if (b - a) % 2 == 0:
                for y in range(a, b + 1):
                    cut = base - {y}
                    add(cut)
                    for x in units:
                        if x not in cut:
                            add(cut | {x})
    for b in range(e + 1, h + 1):
        if math.gcd(b - e, n) == 1:
            add({e} | set(range(b, h + 1)))
    return sorted(out, key=sorted)


def s_eligible(n: int, S) -> bool:
    """Whether S splits into blocks of the seven forms that give C_n-factorizations of C_g[Z_n, ±S]."""
    S = frozenset(int(x) for x in S)
    if n % 2 == 0 or not S or any(x < 1 or 2 * x > n - 1 for x in S):
        return False

    @lru_cache(maxsize=None)
    def cover(rest: frozenset[int]) -> bool:
        if not rest:
            return True
        e = min(rest)
        return any(cover(rest - b) for b in _blocks_with(e, rest, n))

    return cover(S)
