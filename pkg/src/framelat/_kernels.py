"""Kernel bodies for exact lattice-point enumeration.

Plain functions, written against the numba-supported subset of Python/numpy.
``kernels`` jit-compiles them when the numba backend is active; otherwise the
same bytecode runs interpreted.  Every function keeps the contract:

* float arithmetic is used only for monotone Schnorr-Euchner pruning with a
  fixed 0.25 slack (norms are integers, float drift is < 1e-6 here), and
* each surviving leaf is re-checked with exact int64 arithmetic against the
  integer Gram matrix, so all reported counts/norms are exact.

Enumeration walks coefficient vectors x against a row basis B with Gram
G = B B^T.  Levels run from n-1 (outermost) down to 0; while every assigned
coordinate above the current level is zero, only x_t >= 0 is scanned, so
exactly one of each +/-v pair is visited.  Counts are per unscaled norm
x G x^T <= radius.
"""

import numpy as np

STATUS_OK = 0
STATUS_BUDGET = 1
STATUS_OVERFLOW = 2


def enum_count(mu, rdiag, gram, basis, kmod, radius, fix_top, budget, want_split):
    n = rdiag.shape[0]
    counts = np.zeros(radius + 1, dtype=np.int64)
    counts_nt = np.zeros(radius + 1, dtype=np.int64)
    v = np.zeros(n, dtype=np.int64)
    dx = np.zeros(n, dtype=np.int64)
    c = np.zeros(n, dtype=np.float64)
    rho = np.zeros(n + 1, dtype=np.float64)
    zp = np.zeros(n, dtype=np.uint8)
    bound = radius + 0.25
    nodes = 0
    status = STATUS_OK
    top = n - 1
    top_fixed = fix_top >= 0
    if top_fixed:
        v[top] = fix_top
        zp[top] = 1 if fix_top == 0 else 0
    else:
        v[top] = 0
        zp[top] = 1
    t = top
    while True:
        nodes += 1
        if budget >= 0 and nodes > budget:
            status = STATUS_BUDGET
            break
        y = v[t] + c[t]
        r = rho[t + 1] + rdiag[t] * y * y
        if r <= bound:
            if t == 0:
                q = np.int64(0)
                for i in range(n):
                    vi = v[i]
                    if vi != 0:
                        q += gram[i, i] * vi * vi
                        for j in range(i):
                            vj = v[j]
                            if vj != 0:
                                q += 2 * gram[i, j] * vi * vj
                if q > 0 and q <= radius:
                    counts[q] += 1
                    if want_split:
                        for col in range(basis.shape[1]):
                            s = np.int64(0)
                            for i in range(n):
                                if v[i] != 0:
                                    s += v[i] * basis[i, col]
                            if s % kmod != 0:
                                counts_nt[q] += 1
                                break
                if zp[0]:
                    v[0] += 1
                else:
                    v[0] += dx[0]
                    dx[0] = -dx[0] - (1 if dx[0] > 0 else -1)
            else:
                rho[t] = r
                t -= 1
                zp[t] = 1 if (zp[t + 1] == 1 and v[t + 1] == 0) else 0
                s = 0.0
                for j in range(t + 1, n):
                    s += v[j] * mu[j, t]
                c[t] = s
                if zp[t]:
                    v[t] = 0
                    dx[t] = 0
                else:
                    cc = -s
                    vv = np.int64(np.floor(cc + 0.5))
                    v[t] = vv
                    dx[t] = 1 if cc - vv >= 0 else -1
        else:
            if t == top:
                break
            t += 1
            if t == top and top_fixed:
                break
            if zp[t]:
                v[t] += 1
            else:
                v[t] += dx[t]
                dx[t] = -dx[t] - (1 if dx[t] > 0 else -1)
    return counts, counts_nt, nodes, status


def enum_collect(mu, rdiag, gram, lo, hi, cap, budget):
    n = rdiag.shape[0]
    out = np.zeros((cap, n), dtype=np.int64)
    cnt = 0
    v = np.zeros(n, dtype=np.int64)
    dx = np.zeros(n, dtype=np.int64)
    c = np.zeros(n, dtype=np.float64)
    rho = np.zeros(n + 1, dtype=np.float64)
    zp = np.zeros(n, dtype=np.uint8)
    bound = hi + 0.25
    nodes = 0
    status = STATUS_OK
    top = n - 1
    v[top] = 0
    zp[top] = 1
    t = top
    while True:
        nodes += 1
        if budget >= 0 and nodes > budget:
            status = STATUS_BUDGET
            break
        y = v[t] + c[t]
        r = rho[t + 1] + rdiag[t] * y * y
        if r <= bound:
            if t == 0:
                q = np.int64(0)
                for i in range(n):
                    vi = v[i]
                    if vi != 0:
                        q += gram[i, i] * vi * vi
                        for j in range(i):
                            vj = v[j]
                            if vj != 0:
                                q += 2 * gram[i, j] * vi * vj
                if q >= lo and q <= hi and q > 0:
                    if cnt == cap:
                        status = STATUS_OVERFLOW
                        break
                    for i in range(n):
                        out[cnt, i] = v[i]
                    cnt += 1
                if zp[0]:
                    v[0] += 1
                else:
                    v[0] += dx[0]
                    dx[0] = -dx[0] - (1 if dx[0] > 0 else -1)
            else:
                rho[t] = r
                t -= 1
                zp[t] = 1 if (zp[t + 1] == 1 and v[t + 1] == 0) else 0
                s = 0.0
                for j in range(t + 1, n):
                    s += v[j] * mu[j, t]
                c[t] = s
                if zp[t]:
                    v[t] = 0
                    dx[t] = 0
                else:
                    cc = -s
                    vv = np.int64(np.floor(cc + 0.5))
                    v[t] = vv
                    dx[t] = 1 if cc - vv >= 0 else -1
        else:
            if t == top:
                break
            t += 1
            if zp[t]:
                v[t] += 1
            else:
                v[t] += dx[t]
                dx[t] = -dx[t] - (1 if dx[t] > 0 else -1)
    return out, cnt, nodes, status


def enum_shortest(mu, rdiag, gram, step, init_best, budget):
    n = rdiag.shape[0]
    best = init_best
    witness = np.zeros(n, dtype=np.int64)
    improved = 0
    v = np.zeros(n, dtype=np.int64)
    dx = np.zeros(n, dtype=np.int64)
    c = np.zeros(n, dtype=np.float64)
    rho = np.zeros(n + 1, dtype=np.float64)
    zp = np.zeros(n, dtype=np.uint8)
    # only vectors strictly shorter than best matter; norms step-quantized
    bound = best - step + 0.25
    nodes = 0
    status = STATUS_OK
    top = n - 1
    v[top] = 0
    zp[top] = 1
    t = top
    while True:
        nodes += 1
        if budget >= 0 and nodes > budget:
            status = STATUS_BUDGET
            break
        y = v[t] + c[t]
        r = rho[t + 1] + rdiag[t] * y * y
        if r <= bound:
            if t == 0:
                q = np.int64(0)
                for i in range(n):
                    vi = v[i]
                    if vi != 0:
                        q += gram[i, i] * vi * vi
                        for j in range(i):
                            vj = v[j]
                            if vj != 0:
                                q += 2 * gram[i, j] * vi * vj
                if q > 0 and q < best:
                    best = q
                    improved = 1
                    for i in range(n):
                        witness[i] = v[i]
                    bound = best - step + 0.25
                if zp[0]:
                    v[0] += 1
                else:
                    v[0] += dx[0]
                    dx[0] = -dx[0] - (1 if dx[0] > 0 else -1)
            else:
                rho[t] = r
                t -= 1
                zp[t] = 1 if (zp[t + 1] == 1 and v[t + 1] == 0) else 0
                s = 0.0
                for j in range(t + 1, n):
                    s += v[j] * mu[j, t]
                c[t] = s
                if zp[t]:
                    v[t] = 0
                    dx[t] = 0
                else:
                    cc = -s
                    vv = np.int64(np.floor(cc + 0.5))
                    v[t] = vv
                    dx[t] = 1 if cc - vv >= 0 else -1
        else:
            if t == top:
                break
            t += 1
            if zp[t]:
                v[t] += 1
            else:
                v[t] += dx[t]
                dx[t] = -dx[t] - (1 if dx[t] > 0 else -1)
    return best, witness, improved, nodes, status


def euclid_min(gen, kmod, wtab, budget):
    """Minimum Euclidean weight over all nonzero generator combinations.

    Odometer over Z_k^R; incrementing digit j adds generator row j once
    (mod k), so each step is O(n) per changed digit.  Returns the minimum
    weight, how many tuples attain it, steps taken, and a status flag.
    """
    rgen, n = gen.shape
    x = np.zeros(rgen, dtype=np.int64)
    cw = np.zeros(n, dtype=np.int64)
    w = np.int64(0)
    best = np.int64(2**62)
    cnt = np.int64(0)
    steps = 0
    status = STATUS_OK
    while True:
        steps += 1
        if budget >= 0 and steps > budget:
            status = STATUS_BUDGET
            break
        j = 0
        finished = False
        while True:
            xj = x[j] + 1
            if xj == kmod:
                x[j] = 0
            else:
                x[j] = xj
            for col in range(n):
                old = cw[col]
                nv = old + gen[j, col]
                if nv >= kmod:
                    nv -= kmod
                cw[col] = nv
                w += wtab[nv] - wtab[old]
            if xj != kmod:
                break
            j += 1
            if j == rgen:
                finished = True
                break
        if finished:
            break
        if w == 0:
            # weight 0 means the zero codeword (dependent generator tuples)
            continue
        if w < best:
            best = w
            cnt = 1
        elif w == best:
            cnt += 1
    return best, cnt, steps, status
