"""Pure-Python hot loops.  ``_ckernels.pyx`` mirrors this module function for function.

Polynomials here are plain lists of Python ints, lowest degree first, with
no trailing-zero guarantee on input; outputs are trimmed.  Laurent shifts are
handled by the callers.
"""

from __future__ import annotations


def trim(a):
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n]


def poly_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def poly_sub(a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return trim(out)


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def poly_exact_div(a, b):
    """Quotient of a by b in Z[t]; raises ArithmeticError if the division is not exact."""
    a = trim(list(a))
    b = trim(list(b))
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return []
    db = len(b) - 1
    lead = b[-1]
    q = [0] * max(0, len(a) - db)
    rem = a
    for k in range(len(a) - 1, db - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        qc, r = divmod(c, lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        q[k - db] = qc
        for j in range(db + 1):
            rem[k - db + j] -= qc * b[j]
    if any(rem[:db]):
        raise ArithmeticError("inexact polynomial division")
    return trim(q)


def poly_det(rows):
    """Determinant of a square matrix over Z[t] by fraction-free (Bareiss) elimination."""
    n = len(rows)
    if n == 0:
        return [1]
    m = [[trim(list(e)) for e in row] for row in rows]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not m[k][k]:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return []
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                num = poly_sub(poly_mul(pivot, m[i][j]), poly_mul(mik, m[k][j]))
                m[i][j] = poly_exact_div(num, prev)
            m[i][k] = []
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign == 1 else [-c for c in det]


def burau_poly_matrix(n, letters):
    """Reduced Burau matrix of a word in Br_n, scaled to have polynomial entries.

    Returns ``(s, rows)`` with ``rows`` the (n-1)x(n-1) matrix ``t^s * B(word)``
    and every entry a coefficient list.  Generator images (1-indexed, size n-1):
    sigma_i is the identity except row i, which is ``t`` in column i-1, ``-t`` in
    column i and ``1`` in column i+1 (entries falling outside the matrix are
    dropped).  Letters act by right multiplication, so ``B(uv) = B(u) B(v)``.
    """
    d = n - 1
    m = [[[1] if r == c else [] for c in range(d)] for r in range(d)]
    s = 0
    for x in letters:
        i = abs(x) - 1
        if x > 0:
            for r in range(d):
                mi = m[r][i]
                if not mi:
                    continue
                ti = [0] + mi
                if i > 0:
                    m[r][i - 1] = poly_add(m[r][i - 1], ti)
                if i < d - 1:
                    m[r][i + 1] = poly_add(m[r][i + 1], mi)
                m[r][i] = [-c for c in ti]
        else:
            # scale the whole matrix by t so that t^-1 stays polynomial
            s += 1
            for r in range(d):
                row = m[r]
                mi = row[i]
                for c in range(d):
                    if c != i and row[c]:
                        row[c] = [0] + row[c]
                if i > 0:
                    row[i - 1] = poly_add(row[i - 1], [0] + mi)
                if i < d - 1:
                    row[i + 1] = poly_add(row[i + 1], mi)
                row[i] = [-c for c in mi]
    return s, m


def square_sum_table(limit, min_part):
    """table[r] is True iff r (0 <= r <= limit) is a sum of squares of integers >= min_part."""
    table = [False] * (limit + 1)
    table[0] = True
    m = min_part
    while m * m <= limit:
        sq = m * m
        for r in range(sq, limit + 1):
            if table[r - sq]:
                table[r] = True
        m += 1
    return table


def square_partitions(r, parts_sum):
    """All non-increasing tuples of positive ints with sum == parts_sum and sum of squares == r."""
    out = []
    if r < 0 or parts_sum < 0:
        return out
    cur = []

    def rec(max_part, s_rem, r_rem):
        if s_rem == 0:
            if r_rem == 0:
                out.append(tuple(cur))
            return
        # each part p <= max_part satisfies p <= p^2 <= max_part * p
        if r_rem < s_rem or r_rem > max_part * s_rem:
            return
        top = min(max_part, s_rem)
        while top * top > r_rem:
            top -= 1
        for p in range(top, 0, -1):
            cur.append(p)
            rec(p, s_rem - p, r_rem - p * p)
            cur.pop()

    top = 1
    while (top + 1) * (top + 1) <= r:
        top += 1
    rec(top, parts_sum, r)
    return out
