"""Blow-ups of C_g-factorizations of K_m[z] and the equipartite composition pipeline."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from ..model import (
    BlownCycle,
    CompleteMinusI,
    CompleteOdd,
    Equipartite,
    FactorizationCert,
    TwoFactor,
    cycle_type_of,
    norm_edge,
)
from ..verify import (
    COUNT_MISMATCH,
    EDGE_MULTIPLICITY,
    EDGE_NOT_IN_HOST,
    NOT_SPANNING,
    TYPE_MISMATCH,
    VerifyReport,
    verify_certificate,
)


class BlowupError(ValueError):
    pass


Block = tuple[tuple[int, ...], ...]  # g columns of n vertices each


@dataclass(frozen=True)
class BlockCert:
    """A factorization of K_m[nz] into C_g[n]-factors.

    Each factor is a tuple of blocks; a block lists its g columns in cyclic
    order, and every vertex of a column is joined to every vertex of the next.
    """

    host: Equipartite
    g: int
    n: int
    factors: tuple[tuple[Block, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self,
            "factors",
            tuple(tuple(tuple(tuple(int(x) for x in col) for col in b) for b in f) for f in self.factors),
        )


def block_edges(block: Block) -> list[tuple[int, int]]:
    g = len(block)
    return [norm_edge(a, b) for i in range(g) for a in block[i] for b in block[(i + 1) % g]]


def verify_blocks(bc: BlockCert) -> VerifyReport:
    """Check that the blocks of every factor are disjoint spanning C_g[n] copies partitioning the host."""
    host_edges = bc.host.edge_counter()
    V = bc.host.order
    out: list[tuple[str, str]] = []
    if bc.host.degree != 2 * bc.n * len(bc.factors):
        out.append((COUNT_MISMATCH, f"{len(bc.factors)} block factors of degree {2 * bc.n}, host degree {bc.host.degree}"))
    union: Counter = Counter()
    for k, f in enumerate(bc.factors):
        shapes = {(len(b), tuple(len(c) for c in b)) for b in f}
        if shapes != {(bc.g, (bc.n,) * bc.g)}:
            out.append((TYPE_MISMATCH, f"factor {k}: blocks are not C_{bc.g}[{bc.n}] shaped"))
        seen = Counter(x for b in f for col in b for x in col)
        if sorted(seen) != list(range(V)) or any(c != 1 for c in seen.values()):
            out.append((NOT_SPANNING, f"factor {k}: blocks do not partition the vertex set"))
        for b in f:
            union.update(block_edges(b))
    for e, c in sorted(union.items()):
        if e not in host_edges:
            out.append((EDGE_NOT_IN_HOST, f"edge {e}"))
        elif c != host_edges[e]:
            out.append((EDGE_MULTIPLICITY, f"edge {e} used {c}x, host has {host_edges[e]}"))
    for e in sorted(set(host_edges) - set(union)):
        out.append((EDGE_MULTIPLICITY, f"edge {e} not covered"))
    return VerifyReport(tuple(out))


def blowup(cert: FactorizationCert, n: int) -> BlockCert:
    """Replace each vertex of a C_g-factorization of K_m[z] by n copies.

    Vertex u of part p (index j within the part) becomes the column
    ``p*n*z + j*n + c`` for ``c < n``, so parts stay contiguous.
    """
    host = cert.host
    if not isinstance(host, Equipartite):
        raise BlowupError(f"blowup needs an equipartite host, got {host}")
    if n < 1:
        raise BlowupError(f"n must be >= 1, got {n}")
    report = verify_certificate(cert)
    if not report.ok:
        raise BlowupError(f"input certificate does not verify: {report.violations[:3]}")
    lengths = {l for t in cert.claimed_types for l in t.lengths}
    if len(lengths) != 1:
        raise BlowupError(f"input is not a uniform C_g-factorization: lengths {sorted(lengths)}")
    g = lengths.pop()
    z = host.n

    def column(u: int) -> tuple[int, ...]:
        p, j = divmod(u, z)
        base = p * n * z + j * n
        return tuple(range(base, base + n))

    factors = tuple(tuple(tuple(column(u) for u in c) for c in f.cycles) for f in cert.factors)
    bc = BlockCert(Equipartite(host.m, n * z), g, n, factors)
    report = verify_blocks(bc)
    if not report.ok:  # pragma: no cover - soundness guard
        raise AssertionError(f"blow-up failed block verification: {report.violations[:3]}")
    return bc


def refine_blocks(bc: BlockCert, template: FactorizationCert | None = None) -> FactorizationCert:
    """Expand a block factorization into 2-factors by copying a factorization of C_g[n] into every block.

    ``template`` must live on ``C_g[Z_n, Z_n]``; vertex ``(layer i, x)`` is sent
    to the x-th vertex of the block's i-th column.  With n = 1 no template is
    needed: every block is already a g-cycle.
    """
    if bc.n == 1:
        factors = tuple(TwoFactor(tuple(tuple(col[0] for col in b) for b in f)) for f in bc.factors)
    else:
        if template is None:
            raise BlowupError("a factorization of C_g[n] is needed to refine blocks with n > 1")
        t_host = template.host
        if not (isinstance(t_host, BlownCycle) and t_host.g == bc.g and t_host.group.order == bc.n
                and len(t_host.S) == bc.n):
            raise BlowupError(f"template host {t_host} is not C_{bc.g}[{bc.n}]")
        report = verify_certificate(template)
        if not report.ok:
            raise BlowupError(f"template does not verify: {report.violations[:3]}")
        factors = []
        for f in bc.factors:
            for tf in template.factors:
                cycles = []
                for b in f:
                    for c in tf.cycles:
                        cycles.append(tuple(b[layer][x] for layer, x in map(t_host.coords, c)))
                factors.append(TwoFactor(tuple(cycles)))
        factors = tuple(factors)
    cert = FactorizationCert(bc.host, factors)
    report = verify_certificate(cert)
    if not report.ok:  # pragma: no cover - soundness guard
        raise AssertionError(f"refined blocks failed verification: {report.violations[:3]}")
    return cert


def compose_equipartite(eq: FactorizationCert, parts: list[FactorizationCert]) -> FactorizationCert:
    """Fill the parts of a 2-factorization of K_m[w] with 2-factorizations of K_w or K_w - I.

    Part p is relabelled by ``+p*w``.  Factor j of every part joins the j-th
    factor of the other parts into one spanning factor.
    """
    if not isinstance(eq.host, Equipartite):
        raise BlowupError(f"eq must live on an equipartite host, got {eq.host}")
    m, w = eq.host.m, eq.host.n
    if len(parts) != m:
        raise BlowupError(f"{len(parts)} part certificates for {m} parts")
    kinds = {type(p.host) for p in parts}
    want_kind = CompleteOdd if w % 2 else CompleteMinusI
    if kinds != {want_kind} or any(p.host.order != w for p in parts):
        raise BlowupError(f"every part must be a factorization of {'K' if w % 2 else 'K-I'} on {w} vertices")
    counts = {len(p.factors) for p in parts}
    if len(counts) != 1:
        raise BlowupError(f"part factor counts differ: {sorted(counts)}")
    for cert in [eq, *parts]:
        report = verify_certificate(cert)
        if not report.ok:
            raise BlowupError(f"input {cert.host} does not verify: {report.violations[:3]}")

    def shift(f: TwoFactor, k: int) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(x + k for x in c) for c in f.cycles)

    factors = list(eq.factors)
    types = list(eq.claimed_types)
    for j in range(counts.pop()):
        cycles = tuple(c for p, part in enumerate(parts) for c in shift(part.factors[j], p * w))
        f = TwoFactor(cycles)
        factors.append(f)
        types.append(cycle_type_of(f))
    if w % 2:
        host = CompleteOdd(m * w)
    else:
        removed = [(a + p * w, b + p * w) for p, part in enumerate(parts) for a, b in part.host.removed]
        host = CompleteMinusI(m * w, tuple(removed))
    cert = FactorizationCert(host, tuple(factors), tuple(types))
    report = verify_certificate(cert)
    if not report.ok:  # pragma: no cover - soundness guard
        raise AssertionError(f"composition failed verification: {report.violations[:3]}")
    return cert
