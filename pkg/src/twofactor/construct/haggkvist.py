"""Häggkvist's doubling: C_n[2] splits into two copies of any bipartite 2-factor of order 2n."""

from __future__ import annotations

from collections import Counter

from ..groups import FiniteAbelianGroup
from ..model import BlownCycle, CycleType, FactorizationCert, TwoFactor, cycle_type_of, two_factor_from_edges


class HaggkvistError(ValueError):
    pass


def doubled_cycle(n: int) -> BlownCycle:
    """C_n[2] as C_n[Z_2, {0, 1}]; vertex (layer i, level b) is ``2*i + b``."""
    return BlownCycle(n, FiniteAbelianGroup.cyclic(2), (0, 1))


def staggered_factor(n: int, arcs: list[int]) -> TwoFactor:
    """Arc i covers bottom layers [x_{i-1}, x_i - 1] and top layers [x_{i-1}+1, x_i]."""
    host = doubled_cycle(n)
    bot = lambda i: host.vertex(i, 0)  # noqa: E731
    top = lambda i: host.vertex(i, 1)  # noqa: E731
    cycles = []
    x = 0
    for a in arcs:
        lower = [bot(j) for j in range(x, x + a)]
        upper = [top(j) for j in range(x + a, x, -1)]
        cycles.append(tuple(lower + upper))
        x += a
    return TwoFactor(tuple(cycles))


def complement_factor(n: int, factor: TwoFactor) -> TwoFactor:
    rest = doubled_cycle(n).edge_counter()
    rest.subtract(Counter(factor.edges()))
    return two_factor_from_edges(e for e, k in rest.items() for _ in range(k))


def _search_pair(n: int, f: CycleType, max_nodes: int) -> tuple[TwoFactor, TwoFactor]:
    """Fallback: enumerate 2-factors of type f in C_n[2] until one has a complement of type f."""
    from ..search.factorize import enumerate_two_factors

    host = doubled_cycle(n)
    adj = host.edge_counter()
    for a in enumerate_two_factors(host.order, adj, f, max_nodes=max_nodes):
        try:
            b = complement_factor(n, a)
        except ValueError:
            continue
        if cycle_type_of(b) == f:
            return a, b
    raise HaggkvistError(f"no splitting of C_{n}[2] into two {f} found")


def haggkvist_double(n: int, f: CycleType, arc_order=None, max_nodes: int = 10**6) -> tuple[TwoFactor, TwoFactor]:
    """Two 2-factors of type ``f`` partitioning E(C_n[2]).

    ``arc_order`` lists the cycle lengths in the order the arcs are laid out
    (default: ascending).  The complement is re-checked and an exact search
    takes over if it ever fails to have type ``f``.
    """
    if n < 3:
        raise HaggkvistError(f"n must be >= 3, got {n}")
    if not f.is_bipartite:
        raise HaggkvistError(f"{f} is not bipartite")
    if f.order != 2 * n:
        raise HaggkvistError(f"{f} has order {f.order}, need {2 * n}")
    lengths = list(arc_order) if arc_order is not None else sorted(f.lengths)
    if CycleType.from_lengths(lengths) != f:
        raise HaggkvistError(f"arc order {lengths} does not match {f}")
    a = staggered_factor(n, [l // 2 for l in lengths])
    try:
        b = complement_factor(n, a)
        if cycle_type_of(b) == f:
            return a, b
    except ValueError:
        pass
    return _search_pair(n, f, max_nodes)


def as_template(n: int, pair: tuple[TwoFactor, TwoFactor]):
    """Wrap a Häggkvist pair as a factorization certificate of C_n[2]."""
    return FactorizationCert(doubled_cycle(n), pair)
