"""Pure-Python implementations of the hot kernels.

These are the reference versions; ``_ckernels`` mirrors them in Cython and is
preferred when it is importable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

# bound on the order for canonical codes: per-vertex keys pack neighbor-degree
# counts into 4-bit fields and the code itself must fit in 64 bits
CODE_MAX_ORDER = 11


def inertia_counts(rows: Sequence[int], n: int) -> tuple[int, int, int]:
    """Signs of the eigenvalues of a 0/1 symmetric matrix by exact congruence.

    ``rows`` are adjacency bitmasks.  Returns (positive, negative, zero).
    """
    a = [[Fraction(rows[i] >> j & 1) for j in range(n)] for i in range(n)]
    return inertia_rational(a)


def inertia_rational(a: list[list[Fraction]]) -> tuple[int, int, int]:
    """Symmetric elimination over exact rationals (modifies ``a`` in place).

    Pivot on the largest-magnitude diagonal entry (lowest index on ties).  When
    the remaining diagonal is zero, eliminate the first non-zero off-diagonal
    pair as a 2x2 block, which contributes one positive and one negative sign.
    """
    active = list(range(len(a)))
    pos = neg = 0
    while active:
        k = -1
        best = Fraction(0)
        for i in active:
            if abs(a[i][i]) > best:
                best = abs(a[i][i])
                k = i
        if k >= 0:
            piv = a[k][k]
            if piv > 0:
                pos += 1
            else:
                neg += 1
            active.remove(k)
            col = [a[r][k] for r in range(len(a))]
            for r in active:
                if col[r]:
                    f = col[r] / piv
                    row = a[r]
                    for c in active:
                        if col[c]:
                            row[c] -= f * col[c]
            continue
        pair = _first_offdiagonal(a, active)
        if pair is None:
            break
        i, j = pair
        v = a[i][j]
        pos += 1
        neg += 1
        active.remove(i)
        active.remove(j)
        ci = [a[r][i] for r in range(len(a))]
        cj = [a[r][j] for r in range(len(a))]
        for r in active:
            for c in active:
                delta = ci[r] * cj[c] + cj[r] * ci[c]
                if delta:
                    a[r][c] -= delta / v
    return pos, neg, len(active)


def _first_offdiagonal(a, active):
    for x, i in enumerate(active):
        row = a[i]
        for j in active[x + 1:]:
            if row[j]:
                return i, j
    return None


def _vertex_keys(rows: Sequence[int], n: int) -> list[int]:
    deg = [rows[v].bit_count() for v in range(n)]
    keys = []
    for v in range(n):
        spread = 0
        r = rows[v]
        while r:
            low = r & -r
            spread += 1 << (4 * deg[low.bit_length() - 1])
            r ^= low
        keys.append(deg[v] << 48 | spread)
    return keys


def canonical_code(rows: Sequence[int], n: int) -> int:
    """Largest upper-triangle code over relabelings that respect vertex invariants.

    Vertices are first grouped by (degree, multiset of neighbor degrees), with
    groups in decreasing key order.  Only permutations that keep that grouping
    are searched, so the result is a complete isomorphism invariant.
    """
    if n > CODE_MAX_ORDER:
        raise ValueError(f"canonical codes are limited to order {CODE_MAX_ORDER}")
    if n <= 1:
        return 0
    keys = _vertex_keys(rows, n)
    slot_keys = sorted(keys, reverse=True)
    best = [-1] * n
    cols = [0] * n
    perm = [0] * n
    used = 0

    def search(p: int) -> None:
        nonlocal used
        if p == n:
            if cols > best:
                best[:] = cols
            return
        want = slot_keys[p]
        for v in range(n):
            if used >> v & 1 or keys[v] != want:
                continue
            c = 0
            rv = rows[v]
            for i in range(p):
                c = c << 1 | (rv >> perm[i] & 1)
            cols[p] = c
            if cols[:p + 1] < best[:p + 1]:
                continue
            perm[p] = v
            used |= 1 << v
            search(p + 1)
            used &= ~(1 << v)

    search(0)
    code = 0
    for p in range(1, n):
        code = code << p | best[p]
    return code


def labelled_codes(n: int) -> list[int]:
    """Canonical code of every labelled graph on ``n`` vertices."""
    m = n * (n - 1) // 2
    out = []
    for mask in range(1 << m):
        out.append(canonical_code(rows_from_pairs(n, mask), n))
    return out


def rows_from_pairs(n: int, mask: int) -> list[int]:
    """Adjacency rows from a pair mask; pair (i, j), i < j, is bit j*(j-1)/2 + i."""
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return rows


def rows_from_code(n: int, code: int) -> list[int]:
    """Inverse of the code layout used by :func:`canonical_code`."""
    rows = [0] * n
    shift = n * (n - 1) // 2
    for j in range(1, n):
        for i in range(j):
            shift -= 1
            if code >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows
