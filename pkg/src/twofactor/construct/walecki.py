"""Walecki's Hamiltonian decompositions of K_v (v odd) and K_v - I (v even)."""

from __future__ import annotations

from ..model import CompleteMinusI, CompleteOdd, CycleType, FactorizationCert, TwoFactor


def zigzag(size: int, start: int) -> list[int]:
    """Hamilton path start, start+1, start-1, start+2, ... on Z_size (size even)."""
    half = size // 2
    seq = [start]
    for j in range(1, half):
        seq += [(start + j) % size, (start - j) % size]
    seq.append((start + half) % size)
    return seq


def walecki(v: int) -> FactorizationCert:
    if v < 3:
        raise ValueError(f"walecki needs v >= 3, got {v}")
    if v % 2:
        inf = v - 1
        cycles = [TwoFactor(((inf, *zigzag(v - 1, i)),)) for i in range((v - 1) // 2)]
        return FactorizationCert(CompleteOdd(v), tuple(cycles), (CycleType.uniform(v, 1),) * len(cycles))

    # Even v: insert a second point at infinity into the diameter edge of
    # each Walecki cycle of K_{v-1}; the diameters plus {∞1, ∞2} form the 1-factor.
    m = v // 2
    size = v - 2
    inf1, inf2 = size, size + 1
    raw = []
    diameters = []
    for i in range(m - 1):
        path = zigzag(size, i)
        for k in range(len(path) - 1):
            a, b = path[k], path[k + 1]
            if (b - a) % size == size // 2:
                break
        else:  # size == 2: the single path edge is the diameter
            k = 0
            a, b = path[0], path[1]
        diameters.append((a, b))
        raw.append([inf1, *path[: k + 1], inf2, *path[k + 1 :]])
    removed = diameters + [(inf1, inf2)]
    relabel = {}
    for idx, (a, b) in enumerate(removed):
        relabel[a], relabel[b] = 2 * idx, 2 * idx + 1
    factors = tuple(TwoFactor((tuple(relabel[x] for x in c),)) for c in raw)
    return FactorizationCert(CompleteMinusI(v), factors, (CycleType.uniform(v, 1),) * len(factors))
