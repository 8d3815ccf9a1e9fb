"""Independent cross-checks used by the test suite.

Each oracle recomputes a result the library produces, by a different
mechanism: factorization by bounded divisor search, biinfinite solution
counts by Gaussian elimination on stencil matrices, solvability by brute
seed propagation, and entropy by a dense eigenvalue call.  None of them
share code paths with the implementations they audit.
"""

import math
from fractions import Fraction
from itertools import product

import numpy as np

from cycover.laurent import LaurentPoly


# -- factorization by box search ----------------------------------------


def _divisors(n):
    n = abs(n)
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _poly_div_exact(num, den):
    """Exact quotient of dense integer polynomials, else None."""
    num = [Fraction(c) for c in num]
    q = [Fraction(0)] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        q[i] = num[i + len(den) - 1] / den[-1]
        for j, d in enumerate(den):
            num[i + j] -= q[i] * d
    if any(c != 0 for c in num):
        return None
    if any(c.denominator != 1 for c in q):
        return None
    return [int(c) for c in q]


def _primitive_positive(c):
    g = math.gcd(*(abs(x) for x in c))
    if c[-1] < 0:
        g = -g
    return tuple(x // g for x in c)


def _split(c):
    """Irreducible factors of a primitive poly with c[0] != 0, lc > 0."""
    n = len(c) - 1
    if n == 0:
        return []
    if n == 1:
        return [tuple(c)]
    bound = math.ceil(4 * math.isqrt(sum(x * x for x in c)) + 4)
    for m in range(1, n // 2 + 1):
        for lead in _divisors(c[-1]):
            for const in _divisors(c[0]):
                for signed_const in (const, -const):
                    middles = product(range(-bound, bound + 1), repeat=m - 1)
                    for mid in middles:
                        g = (signed_const,) + mid + (lead,)
                        q = _poly_div_exact(list(c), list(g))
                        if q is None:
                            continue
                        return sorted(
                            _split(_primitive_positive(g))
                            + _split(_primitive_positive(tuple(q)))
                        )
    return [tuple(c)]


def box_factor(f: LaurentPoly):
    """Multiset of irreducible factors as canonical LaurentPolys.

    Exhaustive search over divisor candidates whose end coefficients
    divide the input's and whose middle coefficients sit inside a norm
    box.  Exponential, fine for degree <= 4.
    """
    dense = f.shifted_to_zero().dense()
    if not dense:
        raise ValueError("zero polynomial")
    parts = _split(_primitive_positive(tuple(dense)))
    out = {}
    for part in parts:
        g = LaurentPoly.from_coeffs(part)
        out[g] = out.get(g, 0) + 1
    return sorted(out.items(), key=lambda kv: (kv[0].degree_span(), kv[0].dense()))


# -- biinfinite solution counts mod p -----------------------------------


def _nullspace_mod_p(rows, ncols, p):
    a = [[x % p for x in row] for row in rows]
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][col], -1, p)
        a[r] = [(x * inv) % p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col]:
                c = a[i][col]
                a[i] = [(x - c * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for ri, pc in enumerate(pivots):
            v[pc] = (-a[ri][fc]) % p
        basis.append(v)
    return basis


def _rank_mod_p(rows, p):
    a = [[x % p for x in row] for row in rows]
    rank = 0
    ncols = len(a[0]) if a else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][col], -1, p)
        a[rank] = [(x * inv) % p for x in a[rank]]
        for i in range(len(a)):
            if i != rank and a[i][col]:
                c = a[i][col]
                a[i] = [(x - c * y) % p for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def window_rank_count(coeff_pairs, p, inner=24):
    """Number of biinfinite solutions mod p of one recurrence stencil.

    Builds every shift of the stencil inside a padded window, solves for
    the nullspace by elimination, and counts the dimension left after
    projecting onto the inner window, discarding boundary-only freedom.
    Returns p ** dimension.
    """
    if all(c % p == 0 for _, c in coeff_pairs):
        raise ValueError("stencil vanishes mod p, count is not finite")
    offsets = [o for o, _ in coeff_pairs]
    w = max(offsets) - min(offsets) if offsets else 0
    length = inner + 2 * (w + 1)
    rows = []
    for i in range(length - w):
        row = [0] * length
        for off, c in coeff_pairs:
            row[i + off - min(offsets)] += c
        rows.append(row)
    basis = _nullspace_mod_p(rows, length, p)
    if not basis:
        return 1
    start = (length - inner) // 2
    projected = [v[start : start + inner] for v in basis]
    return p ** _rank_mod_p(projected, p)


# -- brute-force solvability over a seed box ----------------------------


def _seeds_survive(asc, seeds, steps):
    """Seeds (rows) whose forward propagation stays integral for `steps`.

    Stages int64 vector arithmetic while values are provably inside the
    safe range, then finishes the survivors with exact Python integers.
    Dead rows are compacted away each step; row identity is preserved by
    returning the surviving seed rows themselves.
    """
    d = len(asc) - 1
    lead = asc[-1]
    seeds = np.asarray(seeds, dtype=np.int64)
    if abs(lead) == 1:
        return seeds  # division by a unit never fails
    window = seeds.copy()
    safe_steps = 0
    limit = 2**62 // (sum(abs(c) for c in asc) + 1)
    while safe_steps < steps and len(seeds):
        if int(np.abs(window).max(initial=1)) >= limit:
            break
        s = np.zeros(len(seeds), dtype=np.int64)
        for k in range(d):
            s += asc[k] * window[:, k]
        alive = s % lead == 0
        seeds = seeds[alive]
        window = np.concatenate(
            [window[alive, 1:], (-s[alive] // lead)[:, None]], axis=1
        )
        safe_steps += 1
    if safe_steps < steps and len(seeds):
        keep = []
        for idx in range(len(seeds)):
            vals = [int(x) for x in window[idx]]
            ok = True
            for _ in range(steps - safe_steps):
                s = sum(asc[k] * vals[k] for k in range(d))
                if s % lead:
                    ok = False
                    break
                vals = vals[1:] + [-s // lead]
            if ok:
                keep.append(idx)
        seeds = seeds[keep]
    return seeds


def _seed_grid(box, d):
    if (box, d) not in _GRIDS:
        grid = np.array(
            list(product(range(-box, box + 1), repeat=d)), dtype=np.int64
        )
        _GRIDS[(box, d)] = grid[~np.all(grid == 0, axis=1)]
    return _GRIDS[(box, d)]


_GRIDS = {}


def propagation_box_verdict(asc, box=10, steps=40):
    """True iff some nonzero seed in [-box, box]^d propagates integrally
    for `steps` steps in both directions."""
    d = len(asc) - 1
    fwd = _seeds_survive(tuple(asc), _seed_grid(box, d), steps)
    if not len(fwd):
        return False
    # backward propagation is forward propagation of the reversed stencil
    # applied to the reversed seed; only forward survivors need it
    bwd = _seeds_survive(tuple(reversed(asc)), fwd[:, ::-1].copy(), steps)
    return bool(len(bwd))


# -- spectral radius ----------------------------------------------------


def perron_entropy(graph):
    """log of the spectral radius of the essential adjacency matrix."""
    nodes = [s for s in range(graph.state_count) if graph.essential[s]]
    if not nodes:
        return 0.0
    pos = {s: i for i, s in enumerate(nodes)}
    a = np.zeros((len(nodes), len(nodes)))
    for s in nodes:
        for t in graph.successors[s]:
            if graph.essential[t]:
                a[pos[s], pos[t]] = 1.0
    rho = max(abs(np.linalg.eigvals(a)))
    return float(np.log(rho)) if rho > 1.0 else 0.0
