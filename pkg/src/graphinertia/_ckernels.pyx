# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pykernels``.

Inertia runs the same pivot sequence with fraction-free int64 arithmetic: each
elimination step multiplies the remaining block by |pivot| and divides it by
the gcd of its entries, both positive scalings that leave the signs alone.
If an entry would leave the safe range the caller falls back to rationals.
"""

import numpy as np
cimport numpy as cnp

from libc.stdint cimport int64_t, uint64_t

cnp.import_array()

cdef enum:
    MAXN = 64
    CODE_MAXN = 11

# every operand stays below 2**30, so a*b + c*d + e*f cannot overflow int64
cdef int64_t LIM = 1 << 30

CODE_MAX_ORDER = CODE_MAXN


cdef inline int64_t _abs(int64_t x) nogil:
    return -x if x < 0 else x


cdef inline int64_t _gcd(int64_t a, int64_t b) nogil:
    cdef int64_t t
    a = _abs(a)
    b = _abs(b)
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef int _inertia(int64_t[:, ::1] a, int n, int* out) nogil:
    # returns 0 on success, 1 if an operand left the safe range
    cdef int active[MAXN]
    cdef int64_t ci[MAXN]
    cdef int64_t cj[MAXN]
    cdef int na = n
    cdef int pos = 0, neg = 0
    cdef int x, y, r, c, k, kx, i, j, ix, jx
    cdef int64_t best, piv, sg, apiv, g, v, val, delta
    for x in range(n):
        active[x] = x
    while na > 0:
        k = -1
        kx = -1
        best = 0
        for x in range(na):
            r = active[x]
            if _abs(a[r, r]) > best:
                best = _abs(a[r, r])
                k = r
                kx = x
        if k >= 0:
            piv = a[k, k]
            if piv > 0:
                pos += 1
                sg = 1
            else:
                neg += 1
                sg = -1
            apiv = _abs(piv)
            for x in range(kx, na - 1):
                active[x] = active[x + 1]
            na -= 1
            for x in range(na):
                ci[x] = a[active[x], k]
                if _abs(ci[x]) > LIM:
                    return 1
            if apiv > LIM:
                return 1
            for x in range(na):
                r = active[x]
                for y in range(na):
                    c = active[y]
                    val = a[r, c]
                    if _abs(val) > LIM:
                        return 1
                    val = apiv * val
                    delta = ci[x] * ci[y]
                    if sg > 0:
                        val -= delta
                    else:
                        val += delta
                    a[r, c] = val
        else:
            i = -1
            for x in range(na):
                for y in range(x + 1, na):
                    if a[active[x], active[y]] != 0:
                        i = active[x]
                        j = active[y]
                        ix = x
                        jx = y
                        break
                if i >= 0:
                    break
            if i < 0:
                break
            v = a[i, j]
            pos += 1
            neg += 1
            # drop jx first: it sits after ix
            for x in range(jx, na - 1):
                active[x] = active[x + 1]
            na -= 1
            for x in range(ix, na - 1):
                active[x] = active[x + 1]
            na -= 1
            sg = 1 if v > 0 else -1
            apiv = _abs(v)
            if apiv > LIM:
                return 1
            for x in range(na):
                ci[x] = a[active[x], i]
                cj[x] = a[active[x], j]
                if _abs(ci[x]) > LIM or _abs(cj[x]) > LIM:
                    return 1
            for x in range(na):
                r = active[x]
                for y in range(na):
                    c = active[y]
                    val = a[r, c]
                    if _abs(val) > LIM:
                        return 1
                    delta = ci[x] * cj[y] + cj[x] * ci[y]
                    val = apiv * val
                    if sg > 0:
                        val -= delta
                    else:
                        val += delta
                    a[r, c] = val
        g = 0
        for x in range(na):
            for y in range(na):
                g = _gcd(g, a[active[x], active[y]])
        if g > 1:
            for x in range(na):
                for y in range(na):
                    a[active[x], active[y]] = a[active[x], active[y]] // g
    out[0] = pos
    out[1] = neg
    out[2] = na
    return 0


def inertia_counts(rows, int n):
    """Compiled counterpart of ``_pykernels.inertia_counts``."""
    cdef cnp.ndarray[int64_t, ndim=2, mode="c"] arr = np.zeros((n, n), dtype=np.int64)
    cdef int64_t[:, ::1] a = arr
    cdef int out[3]
    cdef int i, j
    for i in range(n):
        r = rows[i]
        for j in range(n):
            a[i, j] = (r >> j) & 1
    if _inertia(a, n, out):
        from ._pykernels import inertia_counts as slow
        return slow(rows, n)
    return (out[0], out[1], out[2])


cdef struct CodeState:
    int n
    uint64_t rows[CODE_MAXN]
    uint64_t keys[CODE_MAXN]
    uint64_t slot[CODE_MAXN]
    int64_t best[CODE_MAXN]
    int64_t cols[CODE_MAXN]
    int perm[CODE_MAXN]
    uint64_t used


cdef inline int _popcount(uint64_t x) nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef void _search(CodeState* st, int p) nogil:
    cdef int v, i, q
    cdef int64_t c
    cdef int cmp
    if p == st.n:
        for q in range(st.n):
            if st.cols[q] != st.best[q]:
                if st.cols[q] > st.best[q]:
                    for i in range(st.n):
                        st.best[i] = st.cols[i]
                return
        return
    for v in range(st.n):
        if (st.used >> v) & 1 or st.keys[v] != st.slot[p]:
            continue
        c = 0
        for i in range(p):
            c = (c << 1) | <int64_t>((st.rows[v] >> st.perm[i]) & 1)
        st.cols[p] = c
        cmp = 0
        for q in range(p + 1):
            if st.cols[q] != st.best[q]:
                cmp = 1 if st.cols[q] > st.best[q] else -1
                break
        if cmp < 0:
            continue
        st.perm[p] = v
        st.used |= (<uint64_t>1) << v
        _search(st, p + 1)
        st.used &= ~((<uint64_t>1) << v)


cdef uint64_t _code(CodeState* st) nogil:
    cdef int n = st.n
    cdef int v, u, p, x, y
    cdef int deg[CODE_MAXN]
    cdef uint64_t spread, r, tmp, code
    for v in range(n):
        deg[v] = _popcount(st.rows[v])
    for v in range(n):
        spread = 0
        r = st.rows[v]
        for u in range(n):
            if (r >> u) & 1:
                spread += (<uint64_t>1) << (4 * deg[u])
        st.keys[v] = ((<uint64_t>deg[v]) << 48) | spread
        st.slot[v] = st.keys[v]
        st.best[v] = -1
        st.cols[v] = 0
    # descending insertion sort of slot keys
    for x in range(1, n):
        tmp = st.slot[x]
        y = x - 1
        while y >= 0 and st.slot[y] < tmp:
            st.slot[y + 1] = st.slot[y]
            y -= 1
        st.slot[y + 1] = tmp
    st.used = 0
    _search(st, 0)
    code = 0
    for p in range(1, n):
        code = (code << p) | <uint64_t>st.best[p]
    return code


def canonical_code(rows, int n):
    """Compiled counterpart of ``_pykernels.canonical_code``."""
    cdef CodeState st
    if n > CODE_MAXN:
        raise ValueError(f"canonical codes are limited to order {CODE_MAXN}")
    if n <= 1:
        return 0
    st.n = n
    for i in range(n):
        st.rows[i] = rows[i]
    return int(_code(&st))


def labelled_codes(int n):
    """Canonical code of every labelled graph on ``n`` vertices, as a uint64 array."""
    cdef CodeState st
    cdef int m = n * (n - 1) // 2
    cdef uint64_t total, mask
    cdef int i, j, k
    if n > 8:
        raise ValueError("labelled enumeration is limited to order 8")
    total = (<uint64_t>1) << m
    out = np.empty(total, dtype=np.uint64)
    cdef uint64_t[::1] view = out
    st.n = n
    with nogil:
        for mask in range(total):
            for i in range(n):
                st.rows[i] = 0
            k = 0
            for j in range(1, n):
                for i in range(j):
                    if (mask >> k) & 1:
                        st.rows[i] |= (<uint64_t>1) << j
                        st.rows[j] |= (<uint64_t>1) << i
                    k += 1
            if n <= 1:
                view[mask] = 0
            else:
                view[mask] = _code(&st)
    return out
