"""Two-bridge knot group presentations from a coprime pair (p, q).

The standard 2-generator 1-relator presentation: with e_i = (-1)^floor(iq/p)
for i = 1..p-1 and w the word alternating v, u (v in odd positions, u in
even), the group is <u, v | u w = w v>.  Also provides the one-parameter
family <u, a | u a^n u a^-n u^-1 a^(n-1) u^-1 a^-n>, which the (4n-1, 4n-3)
presentations reduce to after substituting v = u a.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .words import FreeWord, Presentation


class InvalidParams(ValueError):
    pass


@dataclass(frozen=True)
class TwoBridgeParams:
    p: int
    q: int

    def __post_init__(self):
        if self.p <= 0 or self.p % 2 == 0:
            raise InvalidParams(f"p must be odd and positive, got {self.p}")
        if not 0 < self.q < self.p:
            raise InvalidParams(f"q must satisfy 0 < q < p, got q={self.q}")
        if math.gcd(self.p, self.q) != 1:
            raise InvalidParams(f"p and q must be coprime, got ({self.p}, {self.q})")


def epsilon_sequence(params: TwoBridgeParams) -> list[int]:
    """Signs e_i = (-1)^floor(iq/p) for i = 1..p-1."""
    p, q = params.p, params.q
    return [(-1) ** ((i * q) // p) for i in range(1, p)]


def presentation(params: TwoBridgeParams) -> Presentation:
    """<u, v | u w v^-1 w^-1> with w = v^e1 u^e2 v^e3 ... (length p-1)."""
    eps = epsilon_sequence(params)
    syl = []
    for i, e in enumerate(eps, start=1):
        syl.append(("v" if i % 2 == 1 else "u", e))
    w = FreeWord.make(syl)
    u = FreeWord.make([("u", 1)])
    v_inv = FreeWord.make([("v", -1)])
    relator = u * w * v_inv * w.inverse()
    return Presentation.make(("u", "v"), [relator])


def family_presentation(n: int) -> Presentation:
    """<u, a | u a^n u a^-n u^-1 a^(n-1) u^-1 a^-n>; the a^(n-1) drops at n=1."""
    if n < 1:
        raise InvalidParams(f"family parameter must be >= 1, got {n}")
    relator = FreeWord.make(
        [
            ("u", 1),
            ("a", n),
            ("u", 1),
            ("a", -n),
            ("u", -1),
            ("a", n - 1),
            ("u", -1),
            ("a", -n),
        ]
    )
    return Presentation.make(("u", "a"), [relator])
