"""Fox free differential calculus and the weighted Alexander polynomial.

Given a presentation of a group G and an integer weighting chi: G -> Z,
the abelianized Fox Jacobian is a matrix over Z[t, 1/t] presenting the
first homology of the kernel of chi as a module over the Laurent ring.
For a two-generator one-relator presentation this matrix is 1x2 and the
polynomial is a single entry; in general we delete the column of a
generator of weight +-1 and take the determinant.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Union

from .laurent import INFINITE, LaurentPoly, ModPoly, exact_div, _Infinite
from .words import FreeWord, Presentation

DEFAULT_PRIMES = (2, 3, 5, 7)


class NotDeficiencyOne(ValueError):
    """More relators than generators minus one."""


class NoUnitWeightGenerator(ValueError):
    """No generator has weight +-1, so no column can be deleted."""


def fox_derivative_abelianized(
    w: FreeWord, gen: str, chi: Mapping[str, int]
) -> LaurentPoly:
    """Abelianized Fox derivative of w with respect to gen.

    Product rule: d(uv) = du + phi(u) dv, where phi sends each
    generator x to t^chi(x).  A syllable x^e contributes a geometric
    block of powers of t^chi(x); anything else only advances the
    prefix weight.
    """
    coeffs: dict[int, int] = {}
    h = 0  # weight of the prefix read so far
    for x, e in w.syllables:
        cx = chi[x]
        if x == gen:
            if e > 0:
                for k in range(e):
                    _bump(coeffs, h + k * cx, 1)
            else:
                for k in range(1, -e + 1):
                    _bump(coeffs, h - k * cx, -1)
        h += e * cx
    return LaurentPoly(coeffs)


def _bump(coeffs: dict[int, int], e: int, delta: int) -> None:
    c = coeffs.get(e, 0) + delta
    if c:
        coeffs[e] = c
    else:
        coeffs.pop(e, None)


@dataclass(frozen=True)
class AlexanderMatrix:
    """Rows indexed by relators, columns by generators, in declared order."""

    generators: tuple[str, ...]
    relators: tuple[FreeWord, ...]
    weighting: dict[str, int] = field(compare=False)
    entries: tuple[tuple[LaurentPoly, ...], ...] = ()

    def entry(self, i: int, j: int) -> LaurentPoly:
        return self.entries[i][j]

    def column_index(self, gen: str) -> int:
        return self.generators.index(gen)

    def without_column(self, gen: str) -> list[list[LaurentPoly]]:
        j = self.column_index(gen)
        return [[e for k, e in enumerate(row) if k != j] for row in self.entries]


def alexander_matrix(p: Presentation, chi: Mapping[str, int]) -> AlexanderMatrix:
    """Full Fox Jacobian of the presentation under the weighting."""
    entries = tuple(
        tuple(fox_derivative_abelianized(r, g, chi) for g in p.generators)
        for r in p.relators
    )
    return AlexanderMatrix(
        generators=p.generators,
        relators=p.relators,
        weighting=dict(chi),
        entries=entries,
    )


def _det(rows: list[list[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free Bareiss determinant over the Laurent ring."""
    k = len(rows)
    if k == 0:
        return LaurentPoly.constant(1)
    a = [row[:] for row in rows]
    sign = 1
    prev = LaurentPoly.constant(1)
    for col in range(k - 1):
        piv = next((r for r in range(col, k) if a[r][col]), None)
        if piv is None:
            return LaurentPoly.zero()
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        for i in range(col + 1, k):
            for j in range(col + 1, k):
                num = a[col][col] * a[i][j] - a[i][col] * a[col][j]
                q = exact_div(num, prev)
                assert q is not None, "Bareiss division must be exact"
                a[i][j] = q
            a[i][col] = LaurentPoly.zero()
        prev = a[col][col]
    return a[-1][-1] * sign


@dataclass(frozen=True)
class AlexanderResult:
    delta: LaurentPoly
    deleted_column: str
    mod_p_table: dict[int, tuple[ModPoly, Union[int, _Infinite]]] = field(compare=False)


def mod_p_table(
    delta: LaurentPoly, primes=DEFAULT_PRIMES
) -> dict[int, tuple[ModPoly, Union[int, _Infinite]]]:
    out = {}
    for p in primes:
        m = delta.reduce_mod(p)
        out[p] = (m, m.degree_span())
    return out


def alexander_polynomial(
    p: Presentation,
    chi: Mapping[str, int],
    primes=DEFAULT_PRIMES,
    delete_column: str | None = None,
) -> AlexanderResult:
    """Alexander polynomial of the weighting kernel, canonical form.

    Requires at most n-1 relators for n generators.  With exactly n-1
    the polynomial is the determinant after deleting the column of the
    first weight +-1 generator; with fewer relators the kernel module
    has a free summand of positive rank and the polynomial is 0.
    """
    m, n = len(p.relators), len(p.generators)
    if m > n - 1:
        raise NotDeficiencyOne(
            f"need at most {n - 1} relators for {n} generators, have {m}"
        )
    if delete_column is None:
        delete_column = next(
            (g for g in p.generators if abs(chi[g]) == 1), None
        )
        if delete_column is None:
            raise NoUnitWeightGenerator(
                "no generator has weight +-1; substitute one in first"
            )
    elif abs(chi[delete_column]) != 1:
        raise NoUnitWeightGenerator(f"{delete_column} does not have weight +-1")

    if m < n - 1:
        delta = LaurentPoly.zero()
    else:
        mat = alexander_matrix(p, chi)
        delta = _det(mat.without_column(delete_column)).normalize()
    return AlexanderResult(
        delta=delta,
        deleted_column=delete_column,
        mod_p_table=mod_p_table(delta, primes),
    )
