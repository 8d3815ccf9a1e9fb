"""Rewriting the weighting kernel over the transversal of powers of t.

For a weighting sending one generator t to 1 and every other generator to 0,
the kernel is generated by the conjugates a_i = t^i a t^-i.  Each relator
rewrites to a single template word in the indexed alphabet; the full relator
set of the kernel is the family of all integer shifts of the templates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .laurent import LaurentPoly
from .words import Presentation

# (symbol, offset, exponent)
TemplateSyllable = tuple[str, int, int]


class UnsupportedWeighting(ValueError):
    """Weighting is not of the form (1, 0, ..., 0) after reordering."""


def _reduce_indexed(syllables: Iterable[TemplateSyllable]) -> tuple[TemplateSyllable, ...]:
    # Free reduction where the letters are (symbol, offset) pairs.
    out: list[list] = []
    for sym, off, exp in syllables:
        if exp == 0:
            continue
        if out and out[-1][0] == sym and out[-1][1] == off:
            out[-1][2] += exp
            if out[-1][2] == 0:
                out.pop()
        else:
            out.append([sym, off, exp])
    return tuple((s, o, e) for s, o, e in out)


def template_to_text(template: tuple[TemplateSyllable, ...]) -> str:
    """Render e.g. a[i+1]^-2 a[i]^-1 a[i+1]^-1 a[i] ..."""
    if not template:
        return "1"
    parts = []
    for sym, off, exp in template:
        if off == 0:
            idx = "i"
        elif off > 0:
            idx = f"i+{off}"
        else:
            idx = f"i-{-off}"
        head = f"{sym}[{idx}]"
        parts.append(head if exp == 1 else f"{head}^{exp}")
    return " ".join(parts)


@dataclass(frozen=True)
class ShiftPresentation:
    """Kernel presentation with Z-indexed copies of each symbol.

    Templates are freely reduced in the indexed alphabet and each is
    normalized so its minimum offset is 0; shifting a template leaves
    everything downstream unchanged.
    """

    symbols: tuple[str, ...]
    templates: tuple[tuple[TemplateSyllable, ...], ...]

    def __post_init__(self):
        for tpl in self.templates:
            if tuple(tpl) != _reduce_indexed(tpl):
                raise ValueError("template not freely reduced")
            if tpl and min(off for _, off, _ in tpl) != 0:
                raise ValueError("template offsets not normalized to minimum 0")

    @property
    def width(self) -> int:
        offs = [off for tpl in self.templates for _, off, _ in tpl]
        if not offs:
            return 0
        return max(offs) - min(offs)

    def template_texts(self) -> list[str]:
        return [template_to_text(t) for t in self.templates]


def reidemeister_schreier(p: Presentation, chi: Mapping[str, int]) -> ShiftPresentation:
    """Rewrite each relator as a template by tracking the t-height.

    Scanning a relator left to right, a syllable of the weight-1 generator
    only moves the height; a syllable x^e of a weight-0 generator emits
    the indexed letter (x, current height)^e.
    """
    stable = [g for g in p.generators if chi.get(g) == 1]
    others = [g for g in p.generators if g not in stable]
    if len(stable) != 1 or any(chi.get(g) != 0 for g in others):
        raise UnsupportedWeighting(
            "need exactly one generator of weight 1 and the rest of weight 0"
        )
    t = stable[0]
    for r in p.relators:
        if sum(e * chi[g] for g, e in r.syllables) != 0:
            raise UnsupportedWeighting(f"relator {r} has nonzero total weight")

    templates = []
    for r in p.relators:
        h = 0
        raw: list[TemplateSyllable] = []
        for g, e in r.syllables:
            if g == t:
                h += e
            else:
                raw.append((g, h, e))
        reduced = _reduce_indexed(raw)
        if reduced:
            base = min(off for _, off, _ in reduced)
            reduced = tuple((s, off - base, e) for s, off, e in reduced)
        templates.append(reduced)
    return ShiftPresentation(symbols=tuple(others), templates=tuple(templates))


@dataclass(frozen=True)
class RecurrenceRow:
    """Exponent sums of one symbol per offset: the abelianized template."""

    symbol: str
    coefficients: tuple[tuple[int, int], ...]  # sorted (offset, coeff) pairs

    @classmethod
    def make(cls, symbol: str, coeffs: Mapping[int, int]) -> "RecurrenceRow":
        items = tuple(sorted((o, c) for o, c in coeffs.items() if c != 0))
        return cls(symbol=symbol, coefficients=items)

    def coefficient(self, offset: int) -> int:
        return dict(self.coefficients).get(offset, 0)

    def polynomial(self) -> LaurentPoly:
        return LaurentPoly(dict(self.coefficients))


def abelianized_recurrence(sp: ShiftPresentation) -> list[RecurrenceRow]:
    """One row per (template, symbol), template-major order.

    In the single-symbol case this is one row per template; its polynomial
    generates the same ideal as the Alexander polynomial of the input.
    """
    rows = []
    for tpl in sp.templates:
        for sym in sp.symbols:
            coeffs: dict[int, int] = {}
            for s, off, e in tpl:
                if s == sym:
                    coeffs[off] = coeffs.get(off, 0) + e
            rows.append(RecurrenceRow.make(sym, coeffs))
    return rows
