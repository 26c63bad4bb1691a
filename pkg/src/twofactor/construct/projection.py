"""Projections of Hamilton cycles of Z_n onto C_g[n], and the resulting C_n-factorizations."""

from __future__ import annotations

from dataclasses import dataclass

from ..groups import FiniteAbelianGroup
from ..model import BlownCycle, Circulant, CycleType, FactorizationCert, TwoFactor
from ..verify import verify_certificate


class ProjectionError(ValueError):
    pass


@dataclass(frozen=True)
class ProjectionInput:
    h: tuple[int, ...]
    g: int
    shift: int = 0
    reversed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "h", tuple(int(x) for x in self.h))
        n = len(self.h)
        if sorted(self.h) != list(range(n)):
            raise ProjectionError(f"h must be a permutation of Z_{n}")
        if n % 2 == 0 or self.g % 2 == 0 or not 3 <= self.g <= n:
            raise ProjectionError(f"need odd g, n with 3 <= g <= n, got g={self.g}, n={n}")

    @property
    def n(self) -> int:
        return len(self.h)


def project(p: ProjectionInput) -> list[tuple[int, int]]:
    """The (reverse) i-projection as a list of ``(layer, element)`` vertices.

    Forward: layers i, i+1, ..., i+g-1 for h_0..h_{g-1}, then alternate
    i, i+1 for the rest.  Reverse: layers i, i-1, ..., i-g+1, then
    alternate i, i-1.
    """
    g, n, i = p.g, p.n, p.shift
    step = -1 if p.reversed else 1
    layers = [(i + step * k) % g for k in range(g)]
    layers += [(i + step * ((k - g) % 2)) % g for k in range(g, n)]
    return list(zip(layers, p.h))


def projection_factor(h, g: int, reversed: bool = False) -> TwoFactor:
    """Union of the (reverse) i-projections over i in Z_g, as a 2-factor of C_g[n]."""
    n = len(h)
    host = blown_host(g, n, range(n))
    cycles = []
    for i in range(g):
        cyc = project(ProjectionInput(tuple(h), g, i, reversed))
        cycles.append(tuple(host.vertex(layer, x) for layer, x in cyc))
    return TwoFactor(tuple(cycles))


def blown_host(g: int, n: int, S) -> BlownCycle:
    return BlownCycle(g, FiniteAbelianGroup.cyclic(n), tuple(S))


def plus_minus(n: int, S) -> tuple[int, ...]:
    return tuple(sorted({d % n for d in S} | {(-d) % n for d in S}))


def difference_support(h) -> tuple[int, ...]:
    """Differences of the Hamilton cycle h, folded into [1, n/2]."""
    n = len(h)
    out = set()
    for k in range(n):
        d = (h[(k + 1) % n] - h[k]) % n
        out.add(min(d, n - d))
    return tuple(sorted(out))


def cn_factorize_blown(g: int, n: int, S, hamdecomp) -> FactorizationCert:
    """C_n-factorization of C_g[Z_n, ±S] from a Hamilton decomposition of Circ(n; ±S)."""
    S = tuple(sorted(set(S)))
    if n % 2 == 0 or g % 2 == 0 or not 3 <= g <= n:
        raise ProjectionError(f"need odd g, n with 3 <= g <= n, got g={g}, n={n}")
    hamdecomp = [tuple(h) for h in hamdecomp]
    circ = Circulant(n, S)
    check = FactorizationCert(circ, tuple(TwoFactor((h,)) for h in hamdecomp))
    report = verify_certificate(check)
    if not report.ok or any(len(h) != n for h in hamdecomp):
        raise ProjectionError(f"not a Hamilton decomposition of {circ}: {report.violations[:3]}")
    factors = []
    for h in hamdecomp:
        factors.append(projection_factor(h, g, reversed=False))
        factors.append(projection_factor(h, g, reversed=True))
    uniform = CycleType.uniform(n, g)
    return FactorizationCert(blown_host(g, n, plus_minus(n, S)), tuple(factors), (uniform,) * len(factors))
