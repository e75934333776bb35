"""Exact integer matrix arithmetic.

Matrices are numpy arrays with ``dtype=object`` holding Python ints, so all
products, Gram matrices and normal forms are computed without overflow.
Floating point never enters a correctness decision; the enumeration layer
derives its float scratch data from the exact LDL decomposition produced
here.
"""

from __future__ import annotations

import numpy as np

from .errors import NonIntegralGram, RankDeficient

I64_GUARD = 2**62


def imat(rows) -> np.ndarray:
    """Build an exact integer matrix (object dtype) from nested sequences."""
    if isinstance(rows, np.ndarray) and rows.dtype == object:
        return rows.copy()
    data = [[int(v) for v in row] for row in rows]
    if not data:
        return np.zeros((0, 0), dtype=object)
    arr = np.empty((len(data), len(data[0])), dtype=object)
    for i, row in enumerate(data):
        arr[i, :] = row
    return arr


def identity(n: int) -> np.ndarray:
    arr = np.zeros((n, n), dtype=object)
    for i in range(n):
        arr[i, i] = 1
    return arr


def as_i64(mat: np.ndarray, guard: int = I64_GUARD) -> np.ndarray:
    """Cast an exact matrix to int64, refusing if any entry is near overflow."""
    arr = np.asarray(mat)
    big = max((abs(int(v)) for v in arr.flat), default=0)
    if big >= guard:
        raise OverflowError(f"entry {big} too large for int64 kernel path")
    return arr.astype(np.int64)


def hnf(mat) -> np.ndarray:
    """Row Hermite normal form.

    Returns the canonical basis of the integer row space: row echelon, pivots
    positive, entries above each pivot reduced into [0, pivot).  Zero rows are
    dropped, so the result has one row per rank.
    """
    arr = imat(mat)
    m, n = arr.shape
    rows = [list(arr[i, :]) for i in range(m)]
    r = 0
    for c in range(n):
        if r == m:
            break
        # Euclidean elimination below row r in column c.
        while True:
            nz = [i for i in range(r, m) if rows[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(rows[i][c]))
            rows[r], rows[i0] = rows[i0], rows[r]
            if len(nz) == 1 and nz[0] == i0:
                # only one nonzero and it is now at r; but re-check others
                pass
            p = rows[r][c]
            done = True
            for i in range(r + 1, m):
                if rows[i][c] != 0:
                    q = rows[i][c] // p
                    if q:
                        rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
                    if rows[i][c] != 0:
                        done = False
            if done:
                break
        if rows[r][c] == 0:
            continue
        if rows[r][c] < 0:
            rows[r] = [-a for a in rows[r]]
        p = rows[r][c]
        for i in range(r):
            q = rows[i][c] // p
            if q:
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
        r += 1
    out = np.zeros((r, n), dtype=object)
    for i in range(r):
        out[i, :] = rows[i]
    return out


def in_rowspace(hnf_basis: np.ndarray, vector) -> bool:
    """Exact membership test of ``vector`` in the integer row space of an HNF basis."""
    w = [int(v) for v in vector]
    for row in hnf_basis:
        p = next((j for j, v in enumerate(row) if v != 0), None)
        if p is None:
            continue
        if w[p] % row[p] != 0:
            return False
        q = w[p] // row[p]
        if q:
            w = [a - q * b for a, b in zip(w, row)]
    return all(v == 0 for v in w)


def solve_in_rowspace(hnf_basis: np.ndarray, vector):
    """Integer coordinates of ``vector`` w.r.t. an HNF basis, or None."""
    w = [int(v) for v in vector]
    coeffs = []
    for row in hnf_basis:
        p = next((j for j, v in enumerate(row) if v != 0), None)
        if p is None:
            coeffs.append(0)
            continue
        if w[p] % row[p] != 0:
            return None
        q = w[p] // row[p]
        coeffs.append(q)
        if q:
            w = [a - q * b for a, b in zip(w, row)]
    if any(v != 0 for v in w):
        return None
    return coeffs


def gram(basis, scale: int, weights=None) -> np.ndarray:
    """(1/scale) * B * diag(weights) * B^T, exactly.

    Raises NonIntegralGram when scale fails to divide an entry, which signals
    a non-integral lattice.
    """
    B = imat(basis)
    scale = int(scale)
    if scale < 1:
        raise ValueError("scale must be >= 1")
    if weights is not None:
        W = np.array([int(w) for w in weights], dtype=object)
        prod = (B * W) @ B.T
    else:
        prod = B @ B.T
    out = np.zeros_like(prod)
    for idx, v in np.ndenumerate(prod):
        if v % scale != 0:
            raise NonIntegralGram(
                f"scale {scale} does not divide entry {v} at {idx}"
            )
        out[idx] = v // scale
    return out


def exact_ldl(gram_mat: np.ndarray):
    """Fraction-free LDL data (lam, d) of a symmetric positive definite Gram.

    Returns integer ``lam`` (strictly lower part) and the list ``d`` of leading
    principal minors with d[0] = 1, so that mu[i][j] = lam[i][j] / d[j+1] and
    |b*_i|^2 = d[i+1] / d[i].  Raises RankDeficient unless all d > 0.
    """
    G = gram_mat
    n = G.shape[0]
    lam = [[0] * n for _ in range(n)]
    d = [1] * (n + 1)
    for i in range(n):
        for j in range(i + 1):
            u = int(G[i, j])
            for t in range(j):
                u = (d[t + 1] * u - lam[i][t] * lam[j][t]) // d[t]
            if j < i:
                lam[i][j] = u
            else:
                if u <= 0:
                    raise RankDeficient(f"Gram minor {i} is {u}; basis not PD")
                d[i + 1] = u
    return lam, d


def gram_det(gram_mat: np.ndarray) -> int:
    """Determinant of a symmetric positive definite exact Gram matrix."""
    if gram_mat.shape[0] == 0:
        return 1
    _, d = exact_ldl(gram_mat)
    return d[-1]


def lll_reduce(basis, scale: int = 1, delta=(99, 100), deep: bool = False) -> np.ndarray:
    """LLL-reduce integer basis rows with delta = 99/100, all-integer arithmetic.

    The uniform 1/scale factor on the quadratic form does not change any LLL
    decision, so reduction runs on the raw integer rows.  Row operations are
    unimodular, hence the row space is preserved exactly.  With ``deep``,
    size-reduced rows are deep-inserted at the first position where they beat
    the delta test (decided in floats, executed as exact adjacent swaps),
    which flattens the Gram-Schmidt profile for enumeration.
    """
    B = imat(basis)
    m, nc = B.shape
    b = [list(B[i, :]) for i in range(m)]
    num, den = int(delta[0]), int(delta[1])

    gm = gram(B, 1)
    try:
        lam_ll, dlist = exact_ldl(gm)
    except RankDeficient as exc:
        raise RankDeficient("lll_reduce needs full row rank") from exc
    lam = [row[:] for row in lam_ll]
    d = list(dlist)  # d[0] = 1, d[i+1] = i-th minor

    def red(k, l):
        # size-reduce b_k against b_l
        if 2 * abs(lam[k][l]) > d[l + 1]:
            q = (2 * lam[k][l] + d[l + 1]) // (2 * d[l + 1])
            if q:
                b[k] = [a - q * c for a, c in zip(b[k], b[l])]
                for j in range(l):
                    lam[k][j] -= q * lam[l][j]
                lam[k][l] -= q * d[l + 1]

    def swap(k):
        b[k], b[k - 1] = b[k - 1], b[k]
        for j in range(k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        lv = lam[k][k - 1]
        newd = (d[k - 1] * d[k + 1] + lv * lv) // d[k]
        for i in range(k + 1, m):
            t = lam[i][k]
            lam[i][k] = (d[k + 1] * lam[i][k - 1] - lv * t) // d[k]
            lam[i][k - 1] = (newd * t + lv * lam[i][k]) // d[k + 1]
        d[k] = newd

    if deep:
        # float decisions with a strict margin plus an insertion cap keep the
        # loop terminating even under rounding ties; all updates stay exact
        k = 1
        inserts = 0
        max_inserts = 32 * m * m
        while k < m:
            for l in range(k - 1, -1, -1):
                red(k, l)
            norm = float(sum(v * v for v in b[k]))
            ins = k
            if inserts < max_inserts:
                for i in range(k):
                    ri = d[i + 1] / d[i]
                    if den * norm < num * ri * (1.0 - 1e-9):
                        ins = i
                        break
                    # mu_ki^2 * |b*_i|^2 = lam^2 / (d_i * d_{i+1})
                    norm -= (lam[k][i] * lam[k][i]) / (d[i] * d[i + 1])
            if ins < k:
                inserts += 1
                for j in range(k, ins, -1):
                    swap(j)
                k = max(ins, 1)
            else:
                k += 1
    else:
        k = 1
        while k < m:
            red(k, k - 1)
            lv = lam[k][k - 1]
            if den * d[k + 1] * d[k - 1] < num * d[k] * d[k] - den * lv * lv:
                swap(k)
                k = max(k - 1, 1)
            else:
                for l in range(k - 2, -1, -1):
                    red(k, l)
                k += 1

    out = np.zeros((m, nc), dtype=object)
    for i in range(m):
        out[i, :] = b[i]
    return out


def gso_floats(gram_mat: np.ndarray):
    """Float64 (mu, rdiag) derived from the exact LDL of ``gram_mat``.

    Exactness of lam/d means the only float error is one rounding per entry,
    which the enumeration kernels absorb in their 0.25 slack.
    """
    lam, d = exact_ldl(gram_mat)
    n = gram_mat.shape[0]
    mu = np.zeros((n, n), dtype=np.float64)
    rdiag = np.zeros(n, dtype=np.float64)
    for i in range(n):
        rdiag[i] = d[i + 1] / d[i]
        for j in range(i):
            mu[i, j] = lam[i][j] / d[j + 1]
    return mu, rdiag


def canonical_sign(row):
    """Flip the sign so the first nonzero entry is positive."""
    vals = [int(v) for v in row]
    for v in vals:
        if v != 0:
            return vals if v > 0 else [-a for a in vals]
    return vals
