# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_pykernels``; same functions, same contracts.

Coefficients stay Python ints (exactness); the integer searches run on C longs.
"""

from libc.stdlib cimport malloc, free


cpdef list trim(list a):
    cdef Py_ssize_t n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n]


cpdef list poly_add(list a, list b):
    cdef Py_ssize_t i
    cdef list out
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i in range(len(b)):
        out[i] = out[i] + b[i]
    return trim(out)


cpdef list poly_sub(list a, list b):
    cdef Py_ssize_t i
    cdef list out = list(a)
    if len(b) > len(a):
        out.extend([0] * (len(b) - len(a)))
    for i in range(len(b)):
        out[i] = out[i] - b[i]
    return trim(out)


cpdef list poly_mul(list a, list b):
    cdef Py_ssize_t i, j, la = len(a), lb = len(b)
    cdef object x
    cdef list out
    if la == 0 or lb == 0:
        return []
    out = [0] * (la + lb - 1)
    for i in range(la):
        x = a[i]
        if x == 0:
            continue
        for j in range(lb):
            out[i + j] = out[i + j] + x * b[j]
    return trim(out)


cpdef list poly_exact_div(list a, list b):
    cdef Py_ssize_t db, k, j
    cdef object lead, c, qc, r
    cdef list q, rem
    a = trim(list(a))
    b = trim(list(b))
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return []
    db = len(b) - 1
    lead = b[db]
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
            rem[k - db + j] = rem[k - db + j] - qc * b[j]
    for k in range(db):
        if rem[k] != 0:
            raise ArithmeticError("inexact polynomial division")
    return trim(q)


cpdef list poly_det(list rows):
    cdef Py_ssize_t n = len(rows), k, i, j, r
    cdef int sign = 1
    cdef list m, prev, pivot, mik, det
    if n == 0:
        return [1]
    m = [[trim(list(e)) for e in row] for row in rows]
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
                m[i][j] = poly_exact_div(
                    poly_sub(poly_mul(pivot, m[i][j]), poly_mul(mik, m[k][j])), prev
                )
            m[i][k] = []
        prev = pivot
    det = m[n - 1][n - 1]
    if sign == 1:
        return det
    return [-c for c in det]


def burau_poly_matrix(int n, letters):
    cdef int d = n - 1, s = 0, i, r, c
    cdef list m, row, mi, ti
    m = [[[1] if r == c else [] for c in range(d)] for r in range(d)]
    for x in letters:
        i = abs(x) - 1
        if x > 0:
            for r in range(d):
                row = m[r]
                mi = row[i]
                if not mi:
                    continue
                ti = [0] + mi
                if i > 0:
                    row[i - 1] = poly_add(row[i - 1], ti)
                if i < d - 1:
                    row[i + 1] = poly_add(row[i + 1], mi)
                row[i] = [-v for v in ti]
        else:
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
                row[i] = [-v for v in mi]
    return s, m


def square_sum_table(long limit, long min_part):
    cdef long m, sq, r
    cdef char* table
    if limit < 0:
        return []
    table = <char*> malloc(limit + 1)
    if table == NULL:
        raise MemoryError()
    try:
        for r in range(limit + 1):
            table[r] = 0
        table[0] = 1
        m = min_part
        while m * m <= limit:
            sq = m * m
            for r in range(sq, limit + 1):
                if table[r - sq]:
                    table[r] = 1
            m += 1
        return [table[r] != 0 for r in range(limit + 1)]
    finally:
        free(table)


cdef void _rec(long max_part, long s_rem, long r_rem, long* cur, int depth, list out):
    cdef long top, p
    cdef int k
    if s_rem == 0:
        if r_rem == 0:
            out.append(tuple([cur[k] for k in range(depth)]))
        return
    if r_rem < s_rem or r_rem > max_part * s_rem:
        return
    top = max_part if max_part < s_rem else s_rem
    while top * top > r_rem:
        top -= 1
    p = top
    while p >= 1:
        cur[depth] = p
        _rec(p, s_rem - p, r_rem - p * p, cur, depth + 1, out)
        p -= 1


def square_partitions(long r, long parts_sum):
    cdef list out = []
    cdef long top = 1
    cdef long* cur
    if r < 0 or parts_sum < 0:
        return out
    while (top + 1) * (top + 1) <= r:
        top += 1
    cur = <long*> malloc((parts_sum + 1) * sizeof(long))
    if cur == NULL:
        raise MemoryError()
    try:
        _rec(top, parts_sum, r, cur, 0, out)
    finally:
        free(cur)
    return out
