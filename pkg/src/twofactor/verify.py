"""Exact certificate checking.

The checker does no search: it counts edges in hash multisets and compares
them with the host's edge multiset.  Every violation found is reported.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .model import FactorizationCert, GraphSpec, TwoFactor, cycle_type_of

EDGE_NOT_IN_HOST = "EDGE_NOT_IN_HOST"
EDGE_MULTIPLICITY = "EDGE_MULTIPLICITY"
NOT_SPANNING = "NOT_SPANNING"
NOT_2_REGULAR = "NOT_2_REGULAR"
TYPE_MISMATCH = "TYPE_MISMATCH"
COUNT_MISMATCH = "COUNT_MISMATCH"


@dataclass(frozen=True)
class VerifyReport:
    violations: tuple[tuple[str, str], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> set[str]:
        return {c for c, _ in self.violations}

    def to_dict(self) -> dict:
        return {"ok": self.ok, "violations": [{"code": c, "detail": d} for c, d in self.violations]}


def _digons_allowed(host_edges: Counter) -> bool:
    return any(m > 1 for m in host_edges.values())


def _factor_violations(spec: GraphSpec, f: TwoFactor, host_edges: Counter, tag: str) -> list[tuple[str, str]]:
    out = []
    V = spec.order
    min_len = 2 if _digons_allowed(host_edges) else 3
    seen: Counter = Counter()
    for c in f.cycles:
        if len(c) < min_len:
            out.append((NOT_2_REGULAR, f"{tag}: cycle {list(c)} shorter than {min_len}"))
        for x in c:
            seen[x] += 1
    bad = sorted(x for x in seen if not 0 <= x < V)
    if bad:
        out.append((NOT_2_REGULAR, f"{tag}: vertices {bad} outside 0..{V - 1}"))
    rep = sorted(x for x, k in seen.items() if k > 1)
    if rep:
        out.append((NOT_2_REGULAR, f"{tag}: vertices {rep} appear more than once"))
    missing = sorted(set(range(V)) - set(seen))
    if missing:
        out.append((NOT_SPANNING, f"{tag}: vertices {missing} not covered"))
    used = Counter(f.edges())
    for e, k in sorted(used.items()):
        have = host_edges.get(e, 0)
        if have == 0:
            out.append((EDGE_NOT_IN_HOST, f"{tag}: edge {list(e)} not in host"))
        elif k > have:
            out.append((EDGE_MULTIPLICITY, f"{tag}: edge {list(e)} used {k}x, host has {have}"))
    return out


def verify_two_factor(spec: GraphSpec, f: TwoFactor) -> VerifyReport:
    return VerifyReport(tuple(_factor_violations(spec, f, spec.edge_counter(), "factor")))


def verify_certificate(cert: FactorizationCert) -> VerifyReport:
    spec = cert.host
    host_edges = spec.edge_counter()
    out: list[tuple[str, str]] = []
    if spec.degree % 2:
        out.append((COUNT_MISMATCH, f"host degree {spec.degree} is odd"))
    elif len(cert.factors) != spec.degree // 2:
        out.append((COUNT_MISMATCH, f"{len(cert.factors)} factors, host needs {spec.degree // 2}"))
    if len(cert.claimed_types) != len(cert.factors):
        out.append((COUNT_MISMATCH, f"{len(cert.claimed_types)} claimed types for {len(cert.factors)} factors"))
    union: Counter = Counter()
    for i, f in enumerate(cert.factors):
        out.extend(_factor_violations(spec, f, host_edges, f"factor {i}"))
        if i < len(cert.claimed_types):
            got = cycle_type_of(f) if f.cycles else None
            if got != cert.claimed_types[i]:
                out.append((TYPE_MISMATCH, f"factor {i}: type {got}, claimed {cert.claimed_types[i]}"))
        union.update(f.edges())
    for e in sorted(set(union) | set(host_edges)):
        have, used = host_edges.get(e, 0), union.get(e, 0)
        if have and used > have:
            out.append((EDGE_MULTIPLICITY, f"edge {list(e)} covered {used}x, host has {have}"))
        elif used < have:
            out.append((EDGE_MULTIPLICITY, f"edge {list(e)} covered {used}x, host has {have} (uncovered)"))
    return VerifyReport(tuple(out))
