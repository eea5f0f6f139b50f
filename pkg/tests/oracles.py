"""Independent reference computations for the test suite.

Nothing here imports fillsurg: the oracles use sympy matrices over Q(t), the
unreduced Burau representation, Seifert matrices, and plain brute force.
"""

from __future__ import annotations

from functools import lru_cache

import sympy as sp

t = sp.symbols("t")


def _laurent_dict(expr) -> dict[int, int]:
    expr = sp.cancel(sp.together(expr))
    num, den = sp.fraction(expr)
    den_poly = sp.Poly(den, t)
    # den must be a monomial c t^k
    assert len(den_poly.terms()) == 1, f"not a Laurent polynomial: {expr}"
    (dk,), dc = den_poly.terms()[0]
    out = {}
    for (k,), c in sp.Poly(num, t).terms():
        q = sp.Rational(c, dc)
        assert q.q == 1
        out[k - dk] = int(q)
    return out


def normalize(expr) -> dict[int, int]:
    """Symmetric representative with positive value at t = 1, as {exponent: coeff}."""
    d = {k: v for k, v in _laurent_dict(expr).items() if v}
    lo, hi = min(d), max(d)
    assert (hi - lo) % 2 == 0
    mid = (lo + hi) // 2
    d = {k - mid: v for k, v in d.items()}
    if sum(d.values()) < 0:
        d = {k: -v for k, v in d.items()}
    return d


def unreduced_burau(n: int, letters) -> sp.Matrix:
    m = sp.eye(n)
    for x in letters:
        i = abs(x) - 1
        g = sp.eye(n)
        if x > 0:
            g[i, i], g[i, i + 1], g[i + 1, i], g[i + 1, i + 1] = 1 - t, t, 1, 0
        else:
            g[i, i], g[i, i + 1], g[i + 1, i], g[i + 1, i + 1] = 0, 1, 1 / t, 1 - 1 / t
        m = m * g
    return m


def alexander_oracle(n: int, letters) -> dict[int, int]:
    """Delta from the (n-1) minor of I - unreduced Burau (closure must be a knot)."""
    if n == 1:
        return {0: 1}
    m = sp.eye(n) - unreduced_burau(n, letters)
    minor = m[: n - 1, : n - 1]
    return normalize(minor.det(method="berkowitz"))


def seifert_alexander(v: sp.Matrix) -> dict[int, int]:
    return normalize((v - t * v.T).det())


def torus_2_seifert(k: int) -> sp.Matrix:
    """Seifert matrix of T(2, 2k+1) from its standard genus-k surface."""
    n = 2 * k
    v = sp.zeros(n, n)
    for i in range(n):
        v[i, i] = -1
        if i + 1 < n:
            v[i, i + 1] = 1
    return v


def twist_seifert(k: int) -> sp.Matrix:
    """Genus-one Seifert matrix of the twist knot with Alexander (k+1)t - (2k+1) + (k+1)/t."""
    return sp.Matrix([[-1, 1], [0, -(k + 1)]])


def reduced_burau_generator(n: int, x: int) -> sp.Matrix:
    """Reduced Burau image of one letter: row i is (t, -t, 1) around the diagonal."""
    d = n - 1
    g = sp.eye(d)
    i = abs(x) - 1
    row = (t, -t, 1) if x > 0 else (1, -1 / t, 1 / t)
    for off, val in zip((-1, 0, 1), row):
        c = i + off
        if 0 <= c < d:
            g[i, c] = val
    return g


def reduced_burau(n: int, letters) -> sp.Matrix:
    m = sp.eye(n - 1)
    for x in letters:
        m = m * reduced_burau_generator(n, x)
    return m


@lru_cache(maxsize=None)
def square_monoid_gaps(limit: int, smallest: int = 2) -> frozenset[int]:
    """Integers in 1..limit not expressible as a sum of squares k^2, k >= smallest."""
    reach = {0}
    frontier = [0]
    squares = [k * k for k in range(smallest, int(limit**0.5) + 2) if k * k <= limit]
    while frontier:
        nxt = []
        for v in frontier:
            for s in squares:
                w = v + s
                if w <= limit and w not in reach:
                    reach.add(w)
                    nxt.append(w)
        frontier = nxt
    return frozenset(set(range(1, limit + 1)) - reach)


def partitions(total: int, largest: int | None = None):
    largest = total if largest is None else largest
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


def disk_classes_brute(r: int, g: int) -> list[tuple[int, ...]]:
    """All multisets with sum n^2 = r and sum n(n-1)/2 = g, filtering every partition of s <= r."""
    out = []
    for s in range(0, r + 1):
        for p in partitions(s):
            if sum(x * x for x in p) == r and sum(x * (x - 1) for x in p) == 2 * g:
                out.append(p)
    return sorted(set(out))


def euclid(p: int, q: int):
    rem = [p, q]
    quo = []
    while rem[-1]:
        quo.append(rem[-2] // rem[-1])
        rem.append(rem[-2] % rem[-1])
    return rem[:-1], quo


def cycles_of_closure(n: int, letters) -> int:
    """Component count by tracking each strand through the word."""
    seen = [False] * n

    def one_pass(p):
        for x in letters:
            i = abs(x) - 1
            if p == i:
                p = i + 1
            elif p == i + 1:
                p = i
        return p

    comps = 0
    for start in range(n):
        if seen[start]:
            continue
        comps += 1
        p = start
        while not seen[p]:
            seen[p] = True
            p = one_pass(p)
    return comps


def brute_min_coefficient(g: int) -> int:
    r = 0
    while True:
        if disk_classes_brute(r, g):
            return r
        r += 1



def classes_by_square_sum(r: int) -> list[tuple[int, ...]]:
    """Every multiset of positive integers with sum of squares r, via nested multiplicity loops."""
    top = int(r**0.5)
    out = []

    def rec(k, remaining, acc):
        if k == 0:
            if remaining == 0:
                out.append(tuple(acc))
            return
        for c in range(remaining // (k * k) + 1):
            rec(k - 1, remaining - c * k * k, acc + [k] * c)

    rec(top, r, [])
    return out
