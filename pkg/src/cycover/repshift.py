"""Representations of the weighting kernel into a finite group, as a shift.

A homomorphism from the kernel to a finite group F assigns an element of F
to each indexed generator a_i, subject to every shift of every template
evaluating to the identity.  These assignments are exactly the biinfinite
paths in a finite graph: states are windows of w consecutive values
(w = template width) and an edge extends a window by one symbol.  The
census classifies that shift: only the trivial point, finitely many
points, infinitely many with zero entropy, or positive entropy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import permutations
from typing import Optional

from .rscover import ShiftPresentation, abelianized_recurrence

STATE_CAP = 10**6


class CapExceeded(ValueError):
    """State space or enumeration larger than the configured cap."""


class MultiSymbolUnsupported(ValueError):
    """Only single-symbol shift presentations are supported."""


class BadGroupTable(ValueError):
    pass


class FiniteGroup:
    """A finite group given by its multiplication table.

    Element 0 is the identity.  mult[i][j] is the index of g_i * g_j.
    """

    def __init__(self, name: str, labels: tuple[str, ...], mult: tuple[tuple[int, ...], ...]):
        n = len(labels)
        if n == 0:
            raise BadGroupTable("empty group")
        if len(mult) != n or any(len(row) != n for row in mult):
            raise BadGroupTable("multiplication table is not square")
        for row in mult:
            if any(not 0 <= x < n for x in row):
                raise BadGroupTable("table entry out of range")
        # identity checks
        for i in range(n):
            if mult[0][i] != i or mult[i][0] != i:
                raise BadGroupTable("element 0 is not an identity")
        # Latin square (cancellation laws)
        full = set(range(n))
        for i in range(n):
            if set(mult[i]) != full or {mult[j][i] for j in range(n)} != full:
                raise BadGroupTable("table is not a Latin square")
        inv = [None] * n
        for i in range(n):
            for j in range(n):
                if mult[i][j] == 0:
                    inv[i] = j
                    break
        if any(v is None for v in inv):
            raise BadGroupTable("missing inverses")
        self.name = name
        self.labels = labels
        self.mult = mult
        self.inv = tuple(inv)

    @property
    def order(self) -> int:
        return len(self.labels)

    def mul(self, i: int, j: int) -> int:
        return self.mult[i][j]

    def inverse(self, i: int) -> int:
        return self.inv[i]

    def power(self, i: int, e: int) -> int:
        if e < 0:
            i, e = self.inv[i], -e
        out = 0
        for _ in range(e):
            out = self.mult[out][i]
        return out

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.mult[i][j] == self.mult[j][i] for i in range(n) for j in range(i))

    def __repr__(self):
        return f"FiniteGroup({self.name}, order {self.order})"

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        if not 1 <= n <= 64:
            raise BadGroupTable(f"cyclic order must be in [1, 64], got {n}")
        labels = tuple(str(i) for i in range(n))
        mult = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
        return cls(f"cyclic({n})", labels, mult)

    @classmethod
    def symmetric(cls, k: int) -> "FiniteGroup":
        """Permutations of k points in lexicographic order, identity first.

        Composition convention: (f*g)(x) = f(g(x)).
        """
        if not 1 <= k <= 5:
            raise BadGroupTable(f"symmetric degree must be in [1, 5], got {k}")
        perms = sorted(permutations(range(k)))
        index = {p: i for i, p in enumerate(perms)}
        mult = tuple(
            tuple(index[tuple(f[g[x]] for x in range(k))] for g in perms) for f in perms
        )
        labels = tuple(_cycle_notation(p) for p in perms)
        return cls(f"symmetric({k})", labels, mult)

    @classmethod
    def from_table(cls, text: str, name: str = "custom") -> "FiniteGroup":
        """First line: order n.  Then n lines of n indices; element 0 = identity."""
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise BadGroupTable("empty table file")
        try:
            n = int(lines[0])
        except ValueError:
            raise BadGroupTable(f"bad order line: {lines[0]!r}")
        if len(lines) != n + 1:
            raise BadGroupTable(f"expected {n} table rows, got {len(lines) - 1}")
        mult = []
        for ln in lines[1:]:
            try:
                row = tuple(int(x) for x in ln.split())
            except ValueError:
                raise BadGroupTable(f"bad table row: {ln!r}")
            mult.append(row)
        labels = tuple(f"g{i}" for i in range(n))
        return cls(name, labels, tuple(mult))


def _cycle_notation(perm: tuple[int, ...]) -> str:
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        x = perm[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = perm[x]
        cycles.append(cyc)
    if not cycles:
        return "id"
    return "".join("(" + "".join(str(x + 1) for x in c) + ")" for c in cycles)


@dataclass
class SftGraph:
    """Transition graph of the representation shift.

    States are windows of `window` consecutive group elements, encoded
    big-endian: index = sum of digit_k * order^(window-1-k).  An edge
    appends one element on the right; the label of a state is its first
    (most significant) coordinate.
    """

    window: int
    group: FiniteGroup
    successors: list[list[int]]
    essential: list[bool] = field(default_factory=list)

    def __post_init__(self):
        if not self.essential:
            self.essential = _trim(self.successors)

    @property
    def state_count(self) -> int:
        return len(self.successors)

    @property
    def essential_count(self) -> int:
        return sum(self.essential)

    def state_tuple(self, s: int) -> tuple[int, ...]:
        n = self.group.order
        w = max(self.window, 1)
        digits = []
        for _ in range(w):
            digits.append(s % n)
            s //= n
        return tuple(reversed(digits))

    def first_coordinate(self, s: int) -> int:
        n = self.group.order
        w = max(self.window, 1)
        return s // n ** (w - 1)

    def edges(self):
        for s, targets in enumerate(self.successors):
            for t in targets:
                yield (s, t)


def _trim(successors: list[list[int]]) -> list[bool]:
    """Iteratively drop states with no predecessor or no successor."""
    n = len(successors)
    out_deg = [len(t) for t in successors]
    in_deg = [0] * n
    for targets in successors:
        for t in targets:
            in_deg[t] += 1
    alive = [True] * n
    dead = [s for s in range(n) if out_deg[s] == 0 or in_deg[s] == 0]
    if not dead:
        return alive
    preds: list[list[int]] = [[] for _ in range(n)]
    for s, targets in enumerate(successors):
        for t in targets:
            preds[t].append(s)
    while dead:
        s = dead.pop()
        if not alive[s]:
            continue
        alive[s] = False
        for t in successors[s]:
            if alive[t]:
                in_deg[t] -= 1
                if in_deg[t] == 0:
                    dead.append(t)
        for q in preds[s]:
            if alive[q]:
                out_deg[q] -= 1
                if out_deg[q] == 0:
                    dead.append(q)
    return alive


def build_sft(sp: ShiftPresentation, F: FiniteGroup) -> SftGraph:
    """Transition graph over F for a single-symbol shift presentation.

    Width-0 presentations (all template letters at one index) get a graph
    on F itself whose edges leave the states satisfying the unary relation.
    """
    if len(sp.symbols) != 1:
        raise MultiSymbolUnsupported(f"need exactly one symbol, have {len(sp.symbols)}")
    n = F.order
    w = sp.width
    eff_w = max(w, 1)
    if n**eff_w > STATE_CAP:
        raise CapExceeded(f"{n}^{eff_w} states exceed the cap of {STATE_CAP}")

    templates = [[(off, e) for _, off, e in tpl] for tpl in sp.templates]
    if F.is_abelian():
        # Exponent sums suffice for an abelian target.
        rows = abelianized_recurrence(sp)
        templates = [list(r.coefficients) for r in rows]

    nstates = n**eff_w
    if w == 0:
        ok = [_window_ok(templates, (x,), F) for x in range(n)]
        successors = [
            [y for y in range(n)] if ok[x] else [] for x in range(n)
        ]
        return SftGraph(window=w, group=F, successors=successors)

    if F.name.startswith("cyclic(") and len(templates) == 1:
        successors = _cyclic_successors(templates[0], n, w)
    else:
        base = n ** (w - 1)
        successors = []
        for s in range(nstates):
            win = _digits(s, n, w)
            stub = (s % base) * n
            succ = [
                stub + y for y in range(n) if _window_ok(templates, win + (y,), F)
            ]
            successors.append(succ)
    return SftGraph(window=w, group=F, successors=successors)


def _digits(s: int, n: int, w: int) -> tuple[int, ...]:
    out = []
    for _ in range(w):
        out.append(s % n)
        s //= n
    return tuple(reversed(out))


def _window_ok(templates, window, F: FiniteGroup) -> bool:
    for tpl in templates:
        acc = 0
        for off, e in tpl:
            acc = F.mul(acc, F.power(window[off], e))
        if acc != 0:
            return False
    return True


def _cyclic_successors(row, n: int, w: int) -> list[list[int]]:
    """Edge generation for one template over cyclic(n).

    The template condition on a window is a single linear congruence;
    solving it for the appended digit gives the successors directly,
    which keeps large windows affordable.
    """
    coeff = [0] * (w + 1)
    for off, c in row:
        coeff[off] = c % n
    # partial[s] = sum over the w source digits of coeff[pos] * digit
    partial = [0]
    for pos in range(w):
        c = coeff[pos]
        partial = [(p + c * d) % n for p in partial for d in range(n)]
    cw = coeff[w]
    base = n ** (w - 1)
    g = math.gcd(cw, n)
    if g == 1:
        inv = pow(cw, -1, n)
        return [
            [(s % base) * n + (-partial[s] * inv) % n] for s in range(n**w)
        ]
    step = n // g
    successors = []
    for s in range(n**w):
        rhs = (-partial[s]) % n
        if rhs % g:
            successors.append([])
            continue
        stub = (s % base) * n
        y0 = 0 if cw == 0 else (rhs // g * pow(cw // g, -1, step)) % step
        successors.append([stub + y0 + k * step for k in range(g)])
    return successors


@dataclass(frozen=True)
class RepCensus:
    classification: str  # OnlyTrivial | Finite | InfiniteZeroEntropy | PositiveEntropy
    count: Optional[int]  # number of points when finite (1 for OnlyTrivial)
    entropy: float
    state_count: int
    essential_count: int


def census(g: SftGraph, tol: float = 1e-6) -> RepCensus:
    ess = g.essential
    ess_count = g.essential_count
    assert ess_count >= 1, "the all-identity state is always essential"
    if ess_count == 1:
        return RepCensus("OnlyTrivial", 1, 0.0, g.state_count, 1)
    in_deg = [0] * g.state_count
    for s, targets in enumerate(g.successors):
        if ess[s]:
            for t in targets:
                if ess[t]:
                    in_deg[t] += 1
    degree_one = all(
        not ess[s]
        or (in_deg[s] == 1 and sum(1 for t in g.successors[s] if ess[t]) == 1)
        for s in range(g.state_count)
    )
    if degree_one:
        return RepCensus("Finite", ess_count, 0.0, g.state_count, ess_count)
    if _all_sccs_simple_cycles(g):
        return RepCensus(
            "InfiniteZeroEntropy", None, 0.0, g.state_count, ess_count
        )
    h = entropy(g, tol)
    return RepCensus("PositiveEntropy", None, h, g.state_count, ess_count)


def _essential_adjacency(g: SftGraph) -> tuple[list[int], list[list[int]]]:
    nodes = [s for s in range(g.state_count) if g.essential[s]]
    pos = {s: i for i, s in enumerate(nodes)}
    adj = [
        [pos[t] for t in g.successors[s] if g.essential[t]] for s in nodes
    ]
    return nodes, adj


def _sccs(adj: list[list[int]]) -> list[list[int]]:
    """Tarjan's algorithm, iterative."""
    n = len(adj)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    sccs = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for i in range(pi, len(adj[v])):
                u = adj[v][i]
                if index[u] == -1:
                    work[-1] = (v, i + 1)
                    work.append((u, 0))
                    advanced = True
                    break
                if on_stack[u]:
                    low[v] = min(low[v], index[u])
            if advanced:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    u = stack.pop()
                    on_stack[u] = False
                    comp.append(u)
                    if u == v:
                        break
                sccs.append(comp)
    return sccs


def _all_sccs_simple_cycles(g: SftGraph) -> bool:
    """True when no strongly connected component carries two distinct cycles.

    A component is a simple cycle iff its internal edge count equals its
    size; singletons without self-loops carry no cycle at all.
    """
    _, adj = _essential_adjacency(g)
    comp_of = {}
    sccs = _sccs(adj)
    for ci, comp in enumerate(sccs):
        for v in comp:
            comp_of[v] = ci
    internal_edges = [0] * len(sccs)
    for v, targets in enumerate(adj):
        for u in targets:
            if comp_of[u] == comp_of[v]:
                internal_edges[comp_of[v]] += 1
    for ci, comp in enumerate(sccs):
        if len(comp) == 1 and internal_edges[ci] == 0:
            continue  # transit state, no cycle
        if internal_edges[ci] != len(comp):
            return False
    return True


def entropy(g: SftGraph, tol: float = 1e-6, max_iter: int = 100000) -> float:
    """Log of the Perron root of the essential adjacency matrix.

    Power iteration on exact integer vectors applied to (A + I); the +I
    keeps periodic graphs from oscillating.  The growth ratio of the
    vector sum converges to 1 + the Perron root of A.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    _, adj = _essential_adjacency(g)
    n = len(adj)
    if n == 0:
        return 0.0
    if all(len(t) <= 1 for t in adj):
        return 0.0
    v = [1] * n
    prev_ratio = None
    total = n
    for _ in range(max_iter):
        nxt = list(v)  # the +I part
        for s, targets in enumerate(adj):
            for t in targets:
                nxt[t] += v[s]
        new_total = sum(nxt)
        ratio = new_total / total
        if prev_ratio is not None and abs(ratio - prev_ratio) < tol:
            return math.log(ratio - 1.0) if ratio > 1.0 else 0.0
        prev_ratio = ratio
        v, total = nxt, new_total
        if total.bit_length() > 4000:
            # renormalize by a power of two to keep integers bounded
            shift = total.bit_length() - 2000
            v = [max(x >> shift, 1) for x in v]
            total = sum(v)
            prev_ratio = None
    raise ArithmeticError("entropy iteration did not converge")


def enumerate_periodic(g: SftGraph, max_period: int) -> list[tuple[str, ...]]:
    """All labelings of closed walks of length exactly max_period.

    Each walk gives the label sequence of its states' first coordinates;
    different phases of one orbit are distinct labelings.  Points of
    smaller period dividing max_period appear as their repeated tuples.
    """
    if max_period < 1:
        raise ValueError("max_period must be >= 1")
    N = max_period
    results: list[tuple[int, ...]] = []
    ess = g.essential
    for start in range(g.state_count):
        if not ess[start]:
            continue
        # DFS over paths of length N from start back to start
        path = [start]
        iters = [iter(g.successors[start])]
        while iters:
            depth = len(iters)
            nxt = next(iters[-1], None)
            if nxt is None:
                iters.pop()
                path.pop()
                continue
            if not ess[nxt]:
                continue
            if depth == N:
                if nxt == start:
                    results.append(tuple(g.first_coordinate(s) for s in path))
                    if len(results) > STATE_CAP:
                        raise CapExceeded("periodic labeling count exceeds cap")
                continue
            path.append(nxt)
            iters.append(iter(g.successors[nxt]))
    results.sort()
    labels = g.group.labels
    return [tuple(labels[x] for x in tup) for tup in results]
