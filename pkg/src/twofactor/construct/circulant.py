"""Hamilton decompositions of circulants Circ(n; ±S)."""

from __future__ import annotations

import math


class CirculantError(ValueError):
    pass


def multiples_cycle(n: int, d: int) -> tuple[int, ...]:
    """The Hamilton cycle (0, d, 2d, ...) of Circ(n; ±d); needs gcd(d, n) = 1."""
    if math.gcd(d, n) != 1:
        raise CirculantError(f"gcd({d}, {n}) != 1")
    return tuple((k * d) % n for k in range(n))


def check_circulant(n: int, S) -> tuple[int, ...]:
    """Normalise S and reject circulants that cannot have a Hamilton decomposition."""
    S = tuple(sorted(set(int(d) for d in S)))
    if not S or any(d < 1 or 2 * d > n for d in S):
        raise CirculantError(f"S must be a nonempty subset of [1, {n // 2}], got {S}")
    if math.gcd(n, *S) != 1:
        raise CirculantError(f"Circ({n}; ±{set(S)}) is disconnected")
    if 2 * S[-1] == n:
        raise CirculantError(f"n/2 = {n // 2} in S makes Circ({n}; ±S) odd-regular")
    return S


def circulant_ham_decomp(n: int, S, budget=None) -> list[tuple[int, ...]]:
    """|S| edge-disjoint Hamilton cycles covering Circ(n; ±S).

    Singletons coprime to n are handled directly; everything else goes to
    the exact search.
    """
    S = check_circulant(n, S)
    if len(S) == 1:
        return [multiples_cycle(n, S[0])]
    from ..search.hamdecomp import find_ham_decomp

    out = find_ham_decomp(n, S, budget)
    if not out.found:
        raise CirculantError(f"no Hamilton decomposition of Circ({n}; ±{set(S)}) found: {out.status} {out.reason}")
    return out.value
