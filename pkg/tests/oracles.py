"""Independent reference implementations used to cross-check the package.

Nothing here imports the checker or the host edge generators; hosts are
rebuilt from their definitions and factor validity is tested with a
union-find over the factor's own edges.
"""

from __future__ import annotations

import itertools
from collections import Counter


def host_edges(host) -> Counter:
    """Edge multiset of a host, rebuilt from the graph's definition."""
    name = type(host).__name__
    V = host.order
    pairs = list(itertools.combinations(range(V), 2))
    if name == "CompleteOdd":
        return Counter(pairs)
    if name == "CompleteMinusI":
        gone = {tuple(sorted(e)) for e in host.removed}
        return Counter(e for e in pairs if e not in gone)
    if name == "CompletePlusJ":
        c = Counter(pairs)
        c.update(tuple(sorted(e)) for e in host.added)
        return c
    if name == "LambdaComplete":
        return Counter({e: host.lam for e in pairs})
    if name == "Equipartite":
        return Counter((a, b) for a, b in pairs if a // host.n != b // host.n)
    if name == "BlownCycle":
        G, g = host.group, host.g
        c: Counter = Counter()
        for i in range(g):
            for x in range(G.order):
                for d in host.S:
                    a = i * G.order + x
                    b = ((i + 1) % g) * G.order + G.add(x, d)
                    c[(min(a, b), max(a, b))] += 1
        return c
    if name == "Circulant":
        return Counter({tuple(sorted((x, (x + d) % host.n))): 1 for d in host.S for x in range(host.n)})
    raise TypeError(name)


def _components(V: int, edges) -> list[int]:
    parent = list(range(V))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        parent[find(a)] = find(b)
    sizes = Counter(find(x) for x in range(V))
    return sorted(sizes.values())


def factor_lengths(V: int, cycles) -> list[int] | None:
    """Sorted cycle lengths of a spanning 2-regular edge set, or None."""
    edges = []
    for c in cycles:
        if len(c) == 2:
            edges += [(c[0], c[1]), (c[1], c[0])]
        else:
            edges += [(c[k], c[(k + 1) % len(c)]) for k in range(len(c))]
    deg = Counter()
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    if sorted(deg) != list(range(V)) or any(d != 2 for d in deg.values()):
        return None
    return _components(V, edges)


def is_factorization(host, factors) -> bool:
    """factors: list of lists of cycles (vertex tuples)."""
    want = host_edges(host)
    got: Counter = Counter()
    for f in factors:
        if factor_lengths(host.order, f) is None:
            return False
        for c in f:
            L = len(c)
            got.update(tuple(sorted((c[k], c[(k + 1) % L]))) for k in range(L))
    return got == want


def ham_decomp_ok(n: int, S, cycles) -> bool:
    want = Counter({tuple(sorted((x, (x + d) % n))): 1 for d in S for x in range(n)})
    got: Counter = Counter()
    for c in cycles:
        if sorted(c) != list(range(n)):
            return False
        got.update(tuple(sorted((c[k], c[(k + 1) % n]))) for k in range(n))
    return got == want


def brute_two_starters(order: int) -> list[tuple]:
    """Hamiltonian 2-starters of Z_order, by trying every cyclic order of Z_order ∪ {∞}."""
    inf = -1
    pts = [inf, *range(order)]
    found = []
    for perm in itertools.permutations(pts):
        if perm[0] != inf:
            continue
        edges = [tuple(sorted((perm[k], perm[(k + 1) % len(perm)]))) for k in range(len(perm))]
        diffs = Counter()
        for a, b in edges:
            if inf in (a, b):
                continue
            diffs[(a - b) % order] += 1
            diffs[(b - a) % order] += 1
        if diffs != Counter({d: 2 for d in range(1, order)}):
            continue
        for y in range(1, order):
            if (2 * y) % order:
                continue
            moved = sorted(tuple(sorted((a if a == inf else (a + y) % order, b if b == inf else (b + y) % order)))
                           for a, b in edges)
            if moved == sorted(edges):
                found.append(perm)
    return found


def all_rsm_row_orders(n: int, S, g: int) -> set[tuple[int, ...]]:
    """Every sorted row-sum order tuple over Z_n reachable by some matrix with columns permuting S."""
    from math import gcd

    out = set()
    for cols in itertools.product(itertools.permutations(S), repeat=g):
        sums = [sum(col[r] for col in cols) % n for r in range(len(S))]
        out.add(tuple(sorted(n // gcd(s, n) for s in sums)))
    return out


def all_two_factors(V: int, least: int = 3) -> list[frozenset]:
    """Every 2-factor of K_V with cycles of length >= ``least``, as edge sets."""
    out = []

    def cycles_through(s: int, rest: frozenset):
        # cycles whose least vertex is s, each listed once (second < last)
        def walk(path, avail):
            if len(path) >= least and path[1] < path[-1]:
                yield tuple(path)
            for x in sorted(avail):
                yield from walk(path + [x], avail - {x})

        yield from walk([s], rest)

    def go(left: frozenset, acc: list):
        if not left:
            out.append(frozenset(e for c in acc for e in
                                 (tuple(sorted((c[k], c[(k + 1) % len(c)]))) for k in range(len(c)))))
            return
        s = min(left)
        for c in cycles_through(s, left - {s}):
            go(left - set(c), acc + [c])

    go(frozenset(range(V)), [])
    return out


def twofold_starter_count(n: int) -> int:
    """Twofold 2-starters of Z_n, counted as edge sets; vertex n stands for ∞."""
    want = Counter({d: 2 for d in range(1, n)})
    count = 0
    for f in all_two_factors(n + 1):
        diffs = Counter()
        for a, b in f:
            if n in (a, b):
                continue
            diffs[(a - b) % n] += 1
            diffs[(b - a) % n] += 1
        count += diffs == want
    return count
