"""Dense integer polynomial arithmetic and factorization over Z.

Internal helper for the laurent module.  Polynomials are lists of int
coefficients in ascending order of exponent, with no high-order zeros;
[] is the zero polynomial.  Factorization follows the classical route:
squarefree decomposition, factorization modulo a good prime, Hensel
lifting to a Mignotte-style coefficient bound, then subset recombination
with early-exit trial division.  Everything is deterministic.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _primes():
    n = 2
    while True:
        if is_prime(n):
            yield n
        n += 1


# -- dense arithmetic over Z -------------------------------------------


def strip(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f = f[:-1]
    return f


def degree(f: list[int]) -> int:
    return len(f) - 1


def add(f: list[int], g: list[int]) -> list[int]:
    n = max(len(f), len(g))
    return strip([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)])


def sub(f: list[int], g: list[int]) -> list[int]:
    n = max(len(f), len(g))
    return strip([(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)])


def mul(f: list[int], g: list[int]) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return strip(out)


def mul_ground(f: list[int], c: int) -> list[int]:
    if c == 0:
        return []
    return [a * c for a in f]


def derivative(f: list[int]) -> list[int]:
    return strip([i * f[i] for i in range(1, len(f))])


def content(f: list[int]) -> int:
    if not f:
        return 0
    return math.gcd(*(abs(c) for c in f))


def primitive(f: list[int]) -> list[int]:
    c = content(f)
    if c == 0:
        return []
    if f[-1] < 0:
        c = -c
    return [a // c for a in f]


def exact_div_int(f: list[int], g: list[int]) -> list[int] | None:
    """Quotient f/g over Z when exact, else None.  g must be nonzero."""
    f = strip(list(f))
    g = strip(list(g))
    if not g:
        raise ZeroDivisionError
    if not f:
        return []
    if len(f) < len(g):
        return None
    lead = g[-1]
    rem = list(f)
    q = [0] * (len(f) - len(g) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = rem[k + len(g) - 1]
        if c % lead != 0:
            return None
        q[k] = c // lead
        if q[k]:
            for j in range(len(g)):
                rem[k + j] -= q[k] * g[j]
    if any(rem):
        return None
    return strip(q)


def int_poly_gcd(f: list[int], g: list[int]) -> list[int]:
    """Primitive gcd over Z with positive leading coefficient."""
    f, g = strip(list(f)), strip(list(g))
    if not f:
        return primitive(g) if g else []
    if not g:
        return primitive(f)
    a = [Fraction(c) for c in f]
    b = [Fraction(c) for c in g]
    while b:
        a, b = b, _frac_rem(a, b)
    # Clear denominators, take the primitive part.
    den = 1
    for c in a:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in a]
    return primitive(ints)


def _frac_rem(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    rem = list(f)
    dg = len(g) - 1
    inv = 1 / g[-1]
    while len(rem) - 1 >= dg and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < dg or not rem:
            break
        coef = rem[-1] * inv
        shift = len(rem) - 1 - dg
        for j in range(len(g)):
            rem[shift + j] -= coef * g[j]
        rem.pop()
    while rem and rem[-1] == 0:
        rem.pop()
    return rem


def squarefree_decomposition(f: list[int]) -> list[tuple[list[int], int]]:
    """Yun's algorithm for primitive f with positive lead: [(part, multiplicity)]."""
    f = strip(list(f))
    assert f and f[-1] > 0
    if degree(f) == 0:
        return []
    a = int_poly_gcd(f, derivative(f))
    b = exact_div_int(f, a)
    c = exact_div_int(derivative(f), a)
    assert b is not None and c is not None
    d = sub(c, derivative(b))
    out: list[tuple[list[int], int]] = []
    i = 1
    while degree(b) > 0:
        part = int_poly_gcd(b, d)
        if degree(part) > 0:
            out.append((part, i))
        b2 = exact_div_int(b, part)
        c2 = exact_div_int(d, part)
        assert b2 is not None and c2 is not None
        b, d = b2, sub(c2, derivative(b2))
        i += 1
    return out


# -- GF(p) arithmetic ---------------------------------------------------


def gf_strip(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f = f[:-1]
    return f


def gf_trunc(f: list[int], p: int) -> list[int]:
    return gf_strip([c % p for c in f])


def gf_balanced(f: list[int], m: int) -> list[int]:
    """Symmetric representative in (-m/2, m/2]."""
    out = []
    for c in f:
        c %= m
        if c > m // 2:
            c -= m
        out.append(c)
    return strip(out)


def gf_add(f, g, p):
    return gf_trunc(add(f, g), p)


def gf_sub(f, g, p):
    return gf_trunc(sub(f, g), p)


def gf_mul(f, g, p):
    return gf_trunc(mul(f, g), p)


def gf_divmod(f: list[int], g: list[int], p: int) -> tuple[list[int], list[int]]:
    """Division in (Z/p)[x]; also valid mod a composite when g is monic."""
    f = gf_trunc(f, p)
    g = gf_trunc(g, p)
    if not g:
        raise ZeroDivisionError
    inv = pow(g[-1], -1, p)
    rem = list(f)
    if len(rem) < len(g):
        return [], rem
    q = [0] * (len(rem) - len(g) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = rem[k + len(g) - 1] % p
        if c:
            coef = (c * inv) % p
            q[k] = coef
            for j in range(len(g)):
                rem[k + j] = (rem[k + j] - coef * g[j]) % p
    return gf_strip(q), gf_strip([c % p for c in rem])


def gf_monic(f: list[int], p: int) -> list[int]:
    f = gf_trunc(f, p)
    if not f:
        return f
    inv = pow(f[-1], -1, p)
    return [(c * inv) % p for c in f]


def gf_gcd(f: list[int], g: list[int], p: int) -> list[int]:
    a, b = gf_trunc(f, p), gf_trunc(g, p)
    while b:
        a, b = b, gf_divmod(a, b, p)[1]
    return gf_monic(a, p)


def gf_gcdex(f: list[int], g: list[int], p: int) -> tuple[list[int], list[int]]:
    """(s, t) with s*f + t*g = 1 for coprime f, g in (Z/p)[x]."""
    r0, r1 = gf_trunc(f, p), gf_trunc(g, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, gf_sub(s0, gf_mul(q, s1, p), p)
        t0, t1 = t1, gf_sub(t0, gf_mul(q, t1, p), p)
    assert len(r0) == 1, "gf_gcdex requires coprime inputs"
    inv = pow(r0[0], -1, p)
    return gf_trunc(mul_ground(s0, inv), p), gf_trunc(mul_ground(t0, inv), p)


def gf_pow_mod(f: list[int], e: int, mod: list[int], p: int) -> list[int]:
    out = [1]
    base = gf_divmod(f, mod, p)[1]
    while e:
        if e & 1:
            out = gf_divmod(gf_mul(out, base, p), mod, p)[1]
        base = gf_divmod(gf_mul(base, base, p), mod, p)[1]
        e >>= 1
    return out


def gf_is_squarefree(f: list[int], p: int) -> bool:
    f = gf_monic(f, p)
    return len(gf_gcd(f, gf_trunc(derivative(f), p), p)) == 1


def berlekamp(f: list[int], p: int) -> list[list[int]]:
    """Monic irreducible factors of a monic squarefree f over GF(p)."""
    f = gf_monic(f, p)
    n = degree(f)
    if n <= 1:
        return [f]
    # Rows of Q: x^(p*i) mod f for i = 0..n-1.
    xp = gf_pow_mod([0, 1], p, f, p)
    rows = [[1] + [0] * (n - 1)]
    cur = [1]
    for _ in range(1, n):
        cur = gf_divmod(gf_mul(cur, xp, p), f, p)[1]
        rows.append([cur[i] if i < len(cur) else 0 for i in range(n)])
    # Left null space of (Q - I): vectors v with v(x)^p = v(x) mod f.
    m = [[(rows[i][j] - (1 if i == j else 0)) % p for j in range(n)] for i in range(n)]
    basis = _left_nullspace(m, p)
    r = len(basis)
    if r == 1:
        return [f]
    factors = [f]
    for v in basis:
        if len(gf_strip(v)) <= 1:
            continue  # the constant vector never splits anything
        vv = gf_strip(list(v))
        for s in range(p):
            if len(factors) == r:
                return sorted(factors)
            new = []
            shifted = gf_trunc([(vv[0] if vv else 0) - s] + vv[1:], p)
            for u in factors:
                g = gf_gcd(u, shifted, p)
                if 0 < degree(g) < degree(u):
                    new.append(g)
                    new.append(gf_divmod(u, g, p)[0])
                else:
                    new.append(u)
            factors = new
        if len(factors) == r:
            break
    return sorted(factors)


def _left_nullspace(m: list[list[int]], p: int) -> list[list[int]]:
    """Basis of {v : v*M = 0} over GF(p)."""
    n = len(m)
    # Row-reduce M^T, tracking combinations: solve M^T v^T = 0.
    a = [[m[j][i] % p for j in range(n)] for i in range(n)]  # M^T
    pivots = []
    row = 0
    where = [-1] * n
    for col in range(n):
        sel = None
        for i in range(row, n):
            if a[i][col] % p:
                sel = i
                break
        if sel is None:
            continue
        a[row], a[sel] = a[sel], a[row]
        inv = pow(a[row][col], -1, p)
        a[row] = [(x * inv) % p for x in a[row]]
        for i in range(n):
            if i != row and a[i][col] % p:
                c = a[i][col]
                a[i] = [(x - c * y) % p for x, y in zip(a[i], a[row])]
        where[col] = row
        pivots.append(col)
        row += 1
    basis = []
    for col in range(n):
        if where[col] != -1:
            continue
        v = [0] * n
        v[col] = 1
        for c2 in range(n):
            if where[c2] != -1:
                v[c2] = (-a[where[c2]][col]) % p
        basis.append(v)
    return basis


# -- Hensel lifting -----------------------------------------------------


def _hensel_step(m, f, g, h, s, t):
    """One quadratic lift: mod m -> mod m*m.  h monic; s*g + t*h = 1 (mod m)."""
    M = m * m
    e = gf_trunc(sub(f, mul(g, h)), M)
    q, r = gf_divmod(mul(s, e), h, M)
    G = gf_trunc(add(add(g, mul(t, e)), mul(q, g)), M)
    H = gf_trunc(add(h, r), M)
    b = gf_trunc(sub(add(mul(s, G), mul(t, H)), [1]), M)
    c, d = gf_divmod(mul(s, b), H, M)
    S = gf_trunc(sub(s, d), M)
    T = gf_trunc(sub(sub(t, mul(t, b)), mul(c, G)), M)
    return G, H, S, T


def hensel_lift(p: int, f: list[int], modular: list[list[int]], l: int) -> list[list[int]]:
    """Lift the monic mod-p factors of f (up to lc) to monic factors mod p^l."""
    r = len(modular)
    lc = f[-1]
    if r == 1:
        inv = pow(lc % p**l, -1, p**l)
        return [gf_trunc(mul_ground(f, inv), p**l)]
    m = p
    k = r // 2
    d_steps = max(1, math.ceil(math.log2(l)))
    g = gf_trunc([lc], p)
    for fi in modular[:k]:
        g = gf_mul(g, fi, p)
    h = [1]
    for fi in modular[k:]:
        h = gf_mul(h, fi, p)
    s, t = gf_gcdex(g, h, p)
    for _ in range(d_steps):
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m = m * m
        if m >= p ** (2 * l):
            break
    return hensel_lift(p, g, modular[:k], l) + hensel_lift(p, h, modular[k:], l)


# -- Zassenhaus ---------------------------------------------------------


def _choose_prime(f: list[int]) -> tuple[int, list[list[int]]]:
    """First few good primes; keep the one giving the fewest modular factors."""
    lc, tc = f[-1], f[0]
    best: tuple[int, list[list[int]]] | None = None
    good_seen = 0
    for p in _primes():
        if p > 20000:
            raise RuntimeError("no good prime found (unexpected at this scale)")
        if lc % p == 0 or tc % p == 0:
            continue
        if not gf_is_squarefree(f, p):
            continue
        facs = berlekamp(gf_monic(f, p), p)
        if best is None or len(facs) < len(best[1]):
            best = (p, facs)
        good_seen += 1
        if good_seen >= 3 or len(facs) == 1:
            break
    assert best is not None
    return best


def _mignotte_bound(f: list[int]) -> int:
    n = degree(f)
    a = max(abs(c) for c in f)
    return (math.isqrt(n + 1) + 1) * 2**n * a * abs(f[-1])


def factor_squarefree(f: list[int]) -> list[list[int]]:
    """Irreducible factors of a primitive squarefree f, positive lead, deg >= 1."""
    f = strip(list(f))
    assert f and f[-1] > 0 and degree(f) >= 1
    if degree(f) == 1:
        return [f]
    p, modular = _choose_prime(f)
    if len(modular) == 1:
        return [f]
    B = _mignotte_bound(f)
    l = max(1, math.ceil(math.log(2 * B + 1, p)))
    lifted = hensel_lift(p, f, modular, l)
    pl = p**l

    remaining = list(range(len(lifted)))
    current = f
    out: list[list[int]] = []
    s = 1
    while 2 * s <= len(remaining):
        found = False
        for subset in combinations(remaining, s):
            g = [current[-1]]
            for i in subset:
                g = gf_balanced(mul(g, lifted[i]), pl)
            cand = primitive(g)
            if degree(cand) < 1:
                continue
            q = exact_div_int(current, cand)
            if q is not None:
                out.append(cand)
                current = primitive(q)
                remaining = [i for i in remaining if i not in subset]
                found = True
                break
        if not found:
            s += 1
    if degree(current) >= 1:
        out.append(current)
    return out


def factor_primitive(f: list[int]) -> list[tuple[list[int], int]]:
    """Factor a primitive polynomial with positive lead and nonzero constant term.

    Returns [(irreducible primitive factor, multiplicity)], unsorted.
    """
    f = strip(list(f))
    assert f and f[-1] > 0 and f[0] != 0 and content(f) == 1
    if degree(f) == 0:
        return []
    out: list[tuple[list[int], int]] = []
    for part, mult in squarefree_decomposition(f):
        for irr in factor_squarefree(part):
            out.append((irr, mult))
    return out
