"""Decision procedures on the weighting kernel via the Alexander polynomial.

Everything here is a function of the canonical polynomial (or of the
presentation, for the combinatorial tests): counts of prime-index
subgroups of the kernel, existence of index-2 subgroups, surjections
onto Z, a largeness flag, a finite-generation test for the kernel of
a 2-generator 1-relator group, and the knot-group condition checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Union

from . import _intfactor
from .alexander import DEFAULT_PRIMES, alexander_polynomial
from .laurent import INFINITE, LaurentPoly, NotPrime, _Infinite, factor_over_Z
from .words import Presentation

FG = "FG"
NOT_FG = "NotFG"
ONE_SIDED = "OneSided"
INAPPLICABLE = "Inapplicable"


class NotAKnotPolynomial(ValueError):
    """The polynomial does not evaluate to +-1 at t = 1."""


class NotOneRelator(ValueError):
    pass


def _check_prime(p: int) -> None:
    if not _intfactor.is_prime(p):
        raise NotPrime(f"{p} is not prime")


def count_prime_index(
    delta: LaurentPoly, p: int
) -> Union[tuple[int, int], _Infinite]:
    """(r_p, n_p): counts of maps to Z/p and of index-p kernels of those.

    r_p = p^d(p) where d(p) is the degree span of the mod-p reduction;
    n_p = (r_p - 1)/(p - 1).  Infinite when the reduction is zero.
    """
    _check_prime(p)
    d = delta.reduce_mod(p).degree_span()
    if d is INFINITE:
        return INFINITE
    r = p**d
    return r, (r - 1) // (p - 1)


@dataclass(frozen=True)
class PrimeClassification:
    kind: str  # "none" | "finite" | "infinite"
    count: Optional[int] = None  # n_p when finite


def classify_prime(delta: LaurentPoly, p: int) -> PrimeClassification:
    """None when the mod-p reduction is a nonzero unit, Infinite when zero."""
    _check_prime(p)
    m = delta.reduce_mod(p)
    if m.is_zero():
        return PrimeClassification("infinite")
    if m.is_unit():
        return PrimeClassification("none")
    _, n = count_prime_index(delta, p)
    return PrimeClassification("finite", n)


def index2_criterion(delta: LaurentPoly) -> bool:
    """Index-2 subgroups of the kernel exist iff some c_i (i >= 1) is odd.

    Requires a knot polynomial: symmetric with delta(1) = +-1.  In the
    symmetric form c_n(t^n + t^-n) + ... + c_1(t + 1/t) + c_0, evenness
    of every c_i with i >= 1 is exactly d(2) = 0.
    """
    if delta.evaluate(1) not in (1, -1):
        raise NotAKnotPolynomial(f"({delta})(1) != +-1")
    cs = delta.symmetric_form()
    return any(c % 2 != 0 for c in cs[1:])


@dataclass(frozen=True)
class SurjectionVerdict:
    answer: bool
    witness: Optional[LaurentPoly]
    free_rank: bool = False  # delta = 0: kernel has a rationally free summand


def surjects_to_Z(delta: LaurentPoly) -> SurjectionVerdict:
    """The kernel surjects onto Z iff delta has a monic-at-both-ends factor.

    delta = 0 reports True with the free-rank marker and no witness.
    """
    if not delta:
        return SurjectionVerdict(answer=True, witness=None, free_rank=True)
    fac = factor_over_Z(delta)
    for g, _mult in fac.factors:
        if g.degree_span() >= 1 and g.is_monic_both_ends():
            return SurjectionVerdict(answer=True, witness=g)
    return SurjectionVerdict(answer=False, witness=None)


def largeness_flag(delta: LaurentPoly, p: Optional[int]) -> bool:
    """True iff delta vanishes identically, or mod the given prime."""
    if not delta:
        return True
    if p is None:
        return False
    return delta.reduce_mod(p).is_zero()


def brown_finite_generation(p: Presentation, chi: Mapping[str, int]) -> str:
    """Finite-generation test for the kernel, 2-generator 1-relator case.

    Walk the relator as a closed path of weighted steps and record the
    height before each letter.  The kernel is finitely generated iff the
    maximum height occurs at exactly one cyclic vertex and likewise the
    minimum; exactly one of the two gives OneSided.  Flat runs at an
    extreme count each vertex separately.
    """
    if len(p.relators) != 1:
        raise NotOneRelator(f"need exactly 1 relator, have {len(p.relators)}")
    if len(p.generators) != 2:
        return INAPPLICABLE
    relator = p.relators[0]
    heights = []
    h = 0
    for g, sgn in relator.letters():
        heights.append(h)
        h += sgn * chi[g]
    if not heights:
        return INAPPLICABLE
    top_unique = heights.count(max(heights)) == 1
    bot_unique = heights.count(min(heights)) == 1
    if top_unique and bot_unique:
        return FG
    if top_unique or bot_unique:
        return ONE_SIDED
    return NOT_FG


@dataclass(frozen=True)
class KervaireReport:
    h1_is_Z: bool
    deficiency_one: bool
    weight_one_witness: Optional[str]  # generator name, None = unknown
    h2_zero_inferred: bool


def kervaire_check(p: Presentation) -> KervaireReport:
    """Necessary-condition checks for being a higher-dimensional knot group.

    The weight-1 witness uses the 2-generator sufficient test: killing the
    witness must leave some relator with exponent sum +-1 in the survivor.
    Other shapes report no witness rather than a negative.
    """
    free_rank, torsion = p.abelianization_invariants()
    h1 = free_rank == 1 and not torsion
    def1 = p.deficiency() == 1
    witness = None
    if len(p.generators) == 2:
        for g in p.generators:
            other = next(x for x in p.generators if x != g)
            if any(abs(r.exponent_sum(other)) == 1 for r in p.relators):
                witness = g
                break
    return KervaireReport(
        h1_is_Z=h1,
        deficiency_one=def1,
        weight_one_witness=witness,
        h2_zero_inferred=h1 and def1,
    )


@dataclass(frozen=True)
class PrimeRecord:
    p: int
    d: Union[int, _Infinite]
    r: Optional[int]  # None when infinite
    n: Optional[int]
    classification: PrimeClassification


@dataclass(frozen=True)
class CoverReport:
    delta: LaurentPoly
    beta1_Q: Union[int, _Infinite]
    primes: tuple[PrimeRecord, ...]
    index2: bool
    surjects: SurjectionVerdict
    large_flag: bool
    kernel_fg: str
    kervaire: KervaireReport = field(compare=False)


def analyze(
    p: Presentation,
    chi: Mapping[str, int],
    primes=DEFAULT_PRIMES,
) -> CoverReport:
    """Full report for a presentation and a validated weighting."""
    result = alexander_polynomial(p, chi, primes=primes)
    delta = result.delta
    records = []
    large = not delta
    for q in primes:
        d = result.mod_p_table[q][1]
        cls = classify_prime(delta, q)
        if d is INFINITE:
            records.append(PrimeRecord(q, INFINITE, None, None, cls))
            large = True
        else:
            r, n = count_prime_index(delta, q)
            records.append(PrimeRecord(q, d, r, n, cls))
    rec2 = next((rec for rec in records if rec.p == 2), None)
    if rec2 is None:
        r2, n2 = (
            (None, None)
            if count_prime_index(delta, 2) is INFINITE
            else count_prime_index(delta, 2)
        )
    else:
        n2 = rec2.n
    index2 = n2 is None or n2 > 0  # infinitely many index-2 when d(2) infinite
    try:
        fg = brown_finite_generation(p, chi)
    except NotOneRelator:
        fg = INAPPLICABLE
    return CoverReport(
        delta=delta,
        beta1_Q=delta.degree_span(),
        primes=tuple(records),
        index2=index2,
        surjects=surjects_to_Z(delta),
        large_flag=large,
        kernel_fg=fg,
        kervaire=kervaire_check(p),
    )
