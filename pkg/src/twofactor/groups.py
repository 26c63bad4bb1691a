"""Finite abelian groups in invariant-factor form.

Elements are encoded as dense integers ``0 .. order-1`` using mixed radix over
the invariant factors (first factor most significant), so a cyclic group
``Z_n`` uses the plain residues.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property, reduce


@dataclass(frozen=True)
class FiniteAbelianGroup:
    invariants: tuple[int, ...]

    def __post_init__(self):
        inv = tuple(int(n) for n in self.invariants)
        object.__setattr__(self, "invariants", inv)
        if not inv or any(n < 2 for n in inv):
            raise ValueError(f"invariant factors must all be >= 2, got {inv}")
        for a, b in zip(inv, inv[1:]):
            if b % a:
                raise ValueError(f"invariant factors must divide each other: {inv}")

    @classmethod
    def cyclic(cls, n: int) -> "FiniteAbelianGroup":
        return cls((n,))

    @classmethod
    def parse(cls, text: str) -> "FiniteAbelianGroup":
        """Accepts ``Z12``, ``12``, ``Z2xZ4`` or ``2x4``."""
        parts = [p for p in re.split(r"\s*[x*×]\s*", text.strip()) if p]
        if not parts:
            raise ValueError(f"empty group description: {text!r}")
        factors = []
        for p in parts:
            m = re.fullmatch(r"[Zz]?_?(\d+)", p)
            if not m:
                raise ValueError(f"bad group factor {p!r}")
            factors.append(int(m.group(1)))
        return cls(tuple(sorted(factors)))

    def __str__(self):
        return "x".join(f"Z{n}" for n in self.invariants)

    @property
    def order(self) -> int:
        return math.prod(self.invariants)

    @property
    def is_cyclic(self) -> bool:
        return len(self.invariants) == 1

    def elements(self) -> range:
        return range(self.order)

    def decode(self, a: int) -> tuple[int, ...]:
        out = []
        for n in reversed(self.invariants):
            a, r = divmod(a, n)
            out.append(r)
        return tuple(reversed(out))

    def encode(self, coords) -> int:
        a = 0
        for n, c in zip(self.invariants, coords):
            a = a * n + (c % n)
        return a

    @cached_property
    def _add_table(self) -> tuple[tuple[int, ...], ...]:
        if self.is_cyclic:
            n = self.order
            return tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
        dec = [self.decode(a) for a in range(self.order)]
        return tuple(
            tuple(self.encode([x + y for x, y in zip(dec[a], dec[b])]) for b in range(self.order))
            for a in range(self.order)
        )

    @cached_property
    def _neg_table(self) -> tuple[int, ...]:
        return tuple(self.encode([-x for x in self.decode(a)]) for a in range(self.order))

    def add(self, a: int, b: int) -> int:
        return self._add_table[a][b]

    def neg(self, a: int) -> int:
        return self._neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self._add_table[a][self._neg_table[b]]

    def sum(self, items) -> int:
        return reduce(self.add, items, 0)

    def element_order(self, a: int) -> int:
        coords = self.decode(a)
        return reduce(math.lcm, (n // math.gcd(n, c) for n, c in zip(self.invariants, coords)), 1)

    def involutions(self) -> list[int]:
        return [a for a in self.elements() if a and self.add(a, a) == 0]

    def unique_involution(self) -> int | None:
        inv = self.involutions()
        return inv[0] if len(inv) == 1 else None
