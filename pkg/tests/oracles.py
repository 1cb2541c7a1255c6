"""Independent reference implementations used by the tests.

Everything here works on plain nested lists with 0-based indices and does not
import sizedla, so a bug in the library cannot leak into its own oracle.
"""

import math


def matmul(a, b):
    """Textbook triple loop."""
    m, k, n = len(a), len(b), len(b[0]) if b else 0
    if a and len(a[0]) != k:
        raise ValueError("inner dimensions differ")
    out = [[0.0] * n for _ in range(m)]
    for i in range(m):
        for j in range(n):
            s = 0.0
            for p in range(k):
                s += a[i][p] * b[p][j]
            out[i][j] = s
    return out


def transpose(a, cols=None):
    if not a:
        return [[] for _ in range(cols or 0)]
    return [list(r) for r in zip(*a)]


def shape(a, cols):
    return len(a), (len(a[0]) if a else cols)


def gemm(ta, a, tb, b, alpha, beta, c):
    """alpha op(a) op(b) + beta c, with c None meaning zeros."""
    x = a if ta == "N" else transpose(a)
    y = b if tb == "N" else transpose(b)
    p = matmul(x, y)
    m, n = len(p), (len(p[0]) if p else 0)
    out = [[alpha * p[i][j] for j in range(n)] for i in range(m)]
    if c is not None and beta != 0.0:
        for i in range(m):
            for j in range(n):
                out[i][j] += beta * c[i][j]
    return out


def symmetrize(a, uplo):
    n = len(a)
    s = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            upper_part = i <= j
            src = (i, j) if upper_part == (uplo == "U") else (j, i)
            s[i][j] = a[src[0]][src[1]]
    return s


def band_source(kl, ku, i, j):
    """Row (1-based) of band storage holding a(i, j) (1-based)."""
    return ku + 1 + i - j


def in_band(kl, ku, i, j):
    return -kl <= j - i <= ku


def band_mask(a, kl, ku):
    return [[a[i][j] if in_band(kl, ku, i + 1, j + 1) else 0.0 for j in range(len(a[0]))]
            for i in range(len(a))]


def matvec(a, x):
    return [sum(aij * xj for aij, xj in zip(row, x)) for row in a]


def singular_values_2xn(a):
    """Singular values of a 2-row matrix from the characteristic polynomial of a a^T."""
    g = matmul(a, transpose(a))
    tr = g[0][0] + g[1][1]
    det = g[0][0] * g[1][1] - g[0][1] * g[1][0]
    disc = math.sqrt(max(tr * tr / 4.0 - det, 0.0))
    l1, l2 = tr / 2.0 + disc, tr / 2.0 - disc
    return [math.sqrt(max(l1, 0.0)), math.sqrt(max(l2, 0.0))]


def frobenius(a):
    return math.sqrt(sum(x * x for r in a for x in r))


def max_rel_dev(got, want):
    """max |got - want| / max(1, |want|) over all entries."""
    dev = 0.0
    for gr, wr in zip(got, want):
        for g, w in zip(gr, wr):
            dev = max(dev, abs(g - w) / max(1.0, abs(w)))
    return dev
