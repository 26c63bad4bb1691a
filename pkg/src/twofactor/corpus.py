"""A directory of solved instances: verified certificates and proofs of non-existence.

``corpus_check`` re-verifies every stored certificate and asks the advisor
about every instance; an Exists verdict against a proof of non-existence, or
NotExists against a certificate, is a contradiction.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .advisor import EXISTS, NOT_EXISTS, ProblemInstance, advise
from .io import FormatError, cert_from_json, cert_to_json, host_from_json, host_to_json, type_from_json, type_to_json
from .model import FactorizationCert
from .verify import verify_certificate

PROVED_NONE = "proved_none"


@dataclass(frozen=True)
class CorpusEntry:
    instance: ProblemInstance
    artifact: FactorizationCert | None  # None records a proof of non-existence
    provenance: str

    def to_json(self) -> dict:
        inst = self.instance
        return {
            "format": "corpus.v1",
            "instance": {
                "kind": inst.kind,
                "host": host_to_json(inst.host),
                "factors": [[type_to_json(t), a] for t, a in zip(inst.types, inst.alphas)],
            },
            "artifact": cert_to_json(self.artifact) if self.artifact is not None else {"status": PROVED_NONE},
            "provenance": self.provenance,
        }

    @classmethod
    def from_json(cls, d: dict) -> "CorpusEntry":
        if d.get("format") != "corpus.v1":
            raise FormatError(f"not a corpus.v1 entry: {d.get('format')!r}")
        i = d["instance"]
        inst = ProblemInstance(i["kind"], host_from_json(i["host"]),
                               tuple((type_from_json(t), a) for t, a in i["factors"]))
        art = d["artifact"]
        cert = None if art.get("status") == PROVED_NONE else cert_from_json(art)
        return cls(inst, cert, d.get("provenance", ""))


def instance_for(cert: FactorizationCert, kind: str | None = None) -> ProblemInstance:
    counts = Counter(cert.claimed_types)
    if kind is None:
        kind = "OP" if len(counts) == 1 else "HWP" if len(counts) == 2 else "GOP"
    return ProblemInstance(kind, cert.host, tuple(counts.items()))


@dataclass
class CorpusReport:
    checked: int = 0
    failures: list[tuple[str, str]] = field(default_factory=list)
    contradictions: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and not self.contradictions

    def to_dict(self) -> dict:
        return {
            "checked": self.checked,
            "failures": [list(x) for x in self.failures],
            "contradictions": [list(x) for x in self.contradictions],
        }


def check_entry(e: CorpusEntry) -> tuple[list[str], list[str]]:
    """(failures, contradictions) for one entry."""
    failures, contradictions = [], []
    if e.artifact is not None:
        report = verify_certificate(e.artifact)
        if not report.ok:
            failures.append(f"certificate does not verify: {report.violations[:3]}")
        if e.artifact.host != e.instance.host:
            failures.append(f"certificate host {e.artifact.host} differs from instance host {e.instance.host}")
        want = Counter(dict(zip(e.instance.types, e.instance.alphas)))
        if Counter(e.artifact.claimed_types) != want:
            failures.append("certificate factor types differ from the instance")
    verdict = advise(e.instance)
    if e.artifact is not None and verdict.status == NOT_EXISTS:
        contradictions.append(f"certificate exists but {verdict.rule} says NotExists")
    if e.artifact is None and verdict.status == EXISTS:
        contradictions.append(f"proved none but {verdict.rule} says Exists")
    return failures, contradictions


def iter_entries(path) -> list[Path]:
    return sorted(Path(path).glob("*.json"))


def corpus_check(path) -> CorpusReport:
    if not Path(path).is_dir():
        raise FileNotFoundError(f"corpus directory {path} not found")
    report = CorpusReport()
    for f in iter_entries(path):
        report.checked += 1
        try:
            entry = CorpusEntry.from_json(json.loads(f.read_text(encoding="utf-8")))
        except (OSError, ValueError, KeyError, TypeError) as exc:
            report.failures.append((f.name, f"unreadable entry: {exc}"))
            continue
        fails, contras = check_entry(entry)
        report.failures += [(f.name, x) for x in fails]
        report.contradictions += [(f.name, x) for x in contras]
    return report


def entry_name(inst: ProblemInstance) -> str:
    types = "_".join(f"{a}x{t}" for t, a in zip(inst.types, inst.alphas))
    raw = f"{inst.kind}_{inst.host}_{types}"
    return "".join(c if c.isalnum() or c in "-_x+" else "-" for c in raw).strip("-") + ".json"


def write_entry(path, e: CorpusEntry) -> Path:
    d = Path(path)
    d.mkdir(parents=True, exist_ok=True)
    out = d / entry_name(e.instance)
    out.write_text(json.dumps(e.to_json()) + "\n", encoding="utf-8")
    return out


def default_entries(seconds: float = 60.0) -> list[CorpusEntry]:
    """Entries the build ships with: constructions plus exact search results at desk scale."""
    from .algebra import develop
    from .construct import haggkvist_double, walecki
    from .construct.haggkvist import as_template
    from .groups import FiniteAbelianGroup
    from .model import Equipartite, parse_cycle_type, parse_host, parse_type_list
    from .search import SearchBudget, solve_exhaustive
    from .search.starters import find_starter

    out = []
    for v in (5, 6, 7, 8, 9, 10, 11, 12):
        out.append(CorpusEntry(instance_for(walecki(v)), walecki(v), "walecki"))
    out.append(CorpusEntry(instance_for(as_template(3, haggkvist_double(3, parse_cycle_type("[6]")))),
                           as_template(3, haggkvist_double(3, parse_cycle_type("[6]"))), "haggkvist n=3"))
    starter = find_starter(FiniteAbelianGroup.cyclic(4), parse_cycle_type("[5]")).value
    out.append(CorpusEntry(instance_for(develop(starter)), develop(starter), "2-starter of Z_4, orbit"))
    budget = SearchBudget(max_seconds=seconds)
    searched = [
        ("K6-I", "2x[3,3]"),
        ("K9", "4x[4,5]"),
        ("K11", "5x[3^2,5]"),
        ("K7", "3x[3,4]"),
        ("K8-I", "3x[3,5]"),
        ("K9", "4x[3^3]"),
        ("K2[6]", "3x[6,6]"),
        ("K2[4]", "2x[4,4]"),
        ("K6+J", "3x[3,3]"),
        ("K8+J", "4x[4,4]"),
        ("K12-I", "3x[4^3],2x[6^2]"),
        ("K10-I", "2x[4,6],2x[10]"),
    ]
    for host, types in searched:
        spec = parse_host(host)
        ts = parse_type_list(types)
        o = solve_exhaustive(spec, ts, budget)
        if o.status == "exhausted":
            continue
        inst = ProblemInstance("OP" if len(set(ts)) == 1 else "HWP", spec, tuple(Counter(ts).items()))
        out.append(CorpusEntry(inst, o.value if o.found else None, f"exhaustive search, {o.nodes} nodes"))
    eq = solve_exhaustive(Equipartite(3, 3), parse_type_list("3x[3^3]")).value
    out.append(CorpusEntry(instance_for(eq), eq, "exhaustive search"))
    return out


__all__ = ["CorpusEntry", "CorpusReport", "corpus_check", "default_entries", "instance_for", "write_entry"]
