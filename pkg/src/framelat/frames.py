"""k-frames: construction, scaling, search, and the frame-to-code map.

A kappa-frame of a scale-s lattice is a set of n lattice vectors, stored as
ambient integer rows W, with W W^T = s * kappa * I (true pairwise products
kappa * delta_ij).  The standard frame of a Construction-A lattice is k*I.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import enumeration, linalg
from .codes import ZkCode, make_code
from .errors import (
    CongruenceViolated,
    DimensionNotDiv4,
    InvalidFrame,
    NotInLattice,
    UnknownLattice,
)


@dataclass(frozen=True)
class Frame:
    """n pairwise-orthogonal lattice vectors of common norm k."""

    k: int
    vectors: np.ndarray = field(compare=False)

    @property
    def n(self) -> int:
        return self.vectors.shape[0]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "vector_rows": [[int(v) for v in row] for row in self.vectors],
        }


@dataclass
class FrameSearchResult:
    status: str                 # "found" | "none" | "exhausted"
    frame: Frame | None
    nodes: int
    elapsed: float
    vector_pairs: int = 0

    def to_json(self) -> dict:
        doc = {
            "status": self.status,
            "nodes": self.nodes,
            "elapsed": round(self.elapsed, 3),
            "vector_pairs": self.vector_pairs,
        }
        if self.frame is not None:
            doc["frame"] = self.frame.to_json()
        return doc


def verify_frame(lattice, vectors, k: int) -> Frame:
    """Check the frame Gram identity and lattice membership, exactly."""
    W = linalg.imat(vectors)
    n = lattice.n
    if W.shape != (n, n):
        raise InvalidFrame(f"expected {n} vectors of length {n}")
    want = lattice.scale * int(k)
    prod = W @ W.T
    for i in range(n):
        for j in range(n):
            expect = want if i == j else 0
            if prod[i, j] != expect:
                raise InvalidFrame(
                    f"(f_{i}, f_{j}) = {prod[i, j]}/{lattice.scale}, "
                    f"want {expect}/{lattice.scale}"
                )
    for i, row in enumerate(W):
        if not lattice.contains(row):
            raise NotInLattice(f"frame vector {i} is outside the lattice")
    return Frame(k=int(k), vectors=W)


def standard_frame(lattice) -> Frame:
    """The k*e_i frame that every Construction-A lattice contains."""
    return verify_frame(lattice, lattice.scale * linalg.identity(lattice.n),
                        lattice.scale)


def prop_const_frame(m_matrix, k: int, ell: int, a: int, b: int, c: int, d: int,
                     host=None):
    """Frame of A_k(C_{2n,k}(M)) from the (a, b, c, d) block matrix.

    The rows of ((aI + bM, cI + dM), (-cI + dM, aI - bM)) form a frame of
    constant (a^2 + m b^2 + c^2 + m d^2) / k once b = c - ell*d and
    d = a + ell*b hold mod k.  Returns (frame, host_lattice).
    """
    from .codes import two_block_code
    from .lattices import construction_a

    M = linalg.imat(m_matrix)
    n = M.shape[0]
    k, ell = int(k), int(ell)
    a, b, c, d = int(a), int(b), int(c), int(d)
    if (b - c + ell * d) % k != 0 or (d - a - ell * b) % k != 0:
        raise CongruenceViolated(
            f"(a,b,c,d)=({a},{b},{c},{d}) break b=c-ell*d or d=a+ell*b mod {k}"
        )
    m = int((M @ M.T)[0, 0])
    const = a * a + m * b * b + c * c + m * d * d
    if const % k != 0:
        raise CongruenceViolated(f"frame constant {const} not divisible by {k}")
    if host is None:
        host = construction_a(two_block_code(k, M, ell))
    eye = linalg.identity(n)
    F = np.block([
        [a * eye + b * M, c * eye + d * M],
        [-c * eye + d * M, a * eye - b * M],
    ])
    return verify_frame(host, F, const // k), host


def four_square_decomposition(m: int):
    """Lexicographically smallest (b, c, d) with a^2 + b^2 + c^2 + d^2 = m."""
    m = int(m)
    for d in range(math.isqrt(m) + 1):
        for c in range(math.isqrt(m - d * d) + 1):
            for b in range(math.isqrt(m - d * d - c * c) + 1):
                rest = m - d * d - c * c - b * b
                a = math.isqrt(rest)
                if a * a == rest:
                    return a, b, c, d
    raise AssertionError("four squares always exist")  # pragma: no cover


def quaternion_matrix(a: int, b: int, c: int, d: int) -> np.ndarray:
    """Integral 4x4 Q with Q Q^T = (a^2+b^2+c^2+d^2) I."""
    return linalg.imat([
        [a, b, c, d],
        [-b, a, -d, c],
        [-c, d, a, -b],
        [-d, -c, b, a],
    ])


def scale_frame(frame: Frame, m: int, host=None) -> Frame:
    """Turn a k-frame into a (k*m)-frame (dimension divisible by 4).

    Groups the vectors into quadruples and multiplies each group by the
    quaternion matrix of a four-square decomposition of m; outputs stay
    integer combinations of the input frame.
    """
    m = int(m)
    if m < 1:
        raise ValueError("m must be positive")
    n = frame.n
    if n % 4:
        raise DimensionNotDiv4(f"dimension {n} is not divisible by 4")
    if m == 1:
        return frame
    a, b, c, d = four_square_decomposition(m)
    Q = quaternion_matrix(a, b, c, d)
    W = frame.vectors
    rows = []
    for g in range(0, n, 4):
        block = Q @ W[g:g + 4, :]
        rows.extend(list(block))
    out = np.zeros((n, W.shape[1]), dtype=object)
    for i, row in enumerate(rows):
        out[i, :] = row
    new = Frame(k=frame.k * m, vectors=out)
    if host is not None:
        new = verify_frame(host, out, frame.k * m)
    return new


COMPLETE_SEARCH_LIMIT = 4096


def find_frame(lattice, k: int, budget: int = 10**8,
               vector_cap: int = 500_000) -> FrameSearchResult:
    """Search for a k-frame by clique backtracking over the norm-k vectors.

    Collects one representative of each +/-pair, orders them
    lexicographically, and extends partial frames only with later compatible
    vectors.  Up to COMPLETE_SEARCH_LIMIT representatives the search is
    complete with bitset pruning, so "none" is a proof of nonexistence; above
    that it runs witness-only and reports "exhausted" instead of "none".
    """
    t0 = time.time()
    k = int(k)
    n = lattice.n
    target = lattice.scale * k
    vecs, _ = enumeration.collect_vectors(
        lattice.enum_data(), target, target, cap=vector_cap
    )
    reps = sorted(tuple(linalg.canonical_sign(row)) for row in vecs)
    v = len(reps)
    if v < n:
        return FrameSearchResult("none", None, 0, time.time() - t0, v)
    W = np.array(reps, dtype=np.int64)
    if v <= COMPLETE_SEARCH_LIMIT:
        status, chosen, nodes = _clique_complete(W, n, budget)
    else:
        status, chosen, nodes = _clique_witness(W, n, budget)
    if status != "found":
        return FrameSearchResult(status, None, nodes, time.time() - t0, v)
    rows = [list(map(int, W[j])) for j in chosen]
    frame = verify_frame(lattice, rows, k)
    return FrameSearchResult("found", frame, nodes, time.time() - t0, v)


def _clique_complete(W: np.ndarray, n: int, budget: int):
    """Exact clique search with int-bitset adjacency; proves nonexistence."""
    v = W.shape[0]
    G = W @ W.T
    adj = []
    for i in range(v):
        mask = 0
        row = G[i]
        for j in range(v):
            if j != i and row[j] == 0:
                mask |= 1 << j
        adj.append(mask)

    chosen: list[int] = []
    nodes = 0

    def extend(cand: int, start_bit: int) -> bool:
        nonlocal nodes
        if len(chosen) == n:
            return True
        c = cand >> start_bit << start_bit
        while c:
            if len(chosen) + c.bit_count() < n:
                return False
            nodes += 1
            if nodes > budget:
                raise TimeoutError
            low = c & -c
            j = low.bit_length() - 1
            c ^= low
            chosen.append(j)
            if extend(cand & adj[j], j + 1):
                return True
            chosen.pop()
        return False

    try:
        found = extend((1 << v) - 1, 0)
    except TimeoutError:
        return "exhausted", None, nodes
    return ("found", list(chosen), nodes) if found else ("none", None, nodes)


def _clique_witness(W: np.ndarray, n: int, budget: int):
    """DFS with lazily filtered numpy candidate arrays (no dense adjacency).

    Complete in principle, but meant for large vertex sets where only a
    witness is wanted; a natural exit still certifies nonexistence.
    """
    chosen: list[int] = []
    stack = [np.arange(W.shape[0], dtype=np.int64)]
    nodes = 0
    while stack:
        cand = stack[-1]
        if len(chosen) == n:
            return "found", chosen, nodes
        if cand.size == 0 or cand.size + len(chosen) < n:
            stack.pop()
            if not chosen:
                break
            last = chosen.pop()
            prev = stack[-1]
            stack[-1] = prev[prev > last]
            continue
        nodes += 1
        if nodes > budget:
            return "exhausted", None, nodes
        j = int(cand[0])
        chosen.append(j)
        rest = cand[1:]
        orth = rest[(W[rest] @ W[j]) == 0]
        stack.append(orth)
    return "none", None, nodes


def code_from_frame(lattice, frame: Frame) -> ZkCode:
    """Self-dual Z_k code of the frame: coordinates (v, f_j) mod k over v in L."""
    from .codes import reduced_generators

    verify_frame(lattice, frame.vectors, frame.k)
    prod = lattice.basis @ frame.vectors.T
    gen = np.zeros_like(prod)
    for idx, val in np.ndenumerate(prod):
        q, r = divmod(int(val), lattice.scale)
        if r:
            raise InvalidFrame("frame vector pairs non-integrally with the lattice")
        gen[idx] = q
    small, _ = reduced_generators(make_code(frame.k, gen))
    return make_code(frame.k, small)


def star_condition(name: str, k: int) -> bool:
    """Frame-admissibility rule for the named host lattice: k at least the
    threshold and k having a prime factor outside the excluded set."""
    from .data_store import star_table

    table = star_table()
    if name not in table:
        raise UnknownLattice(f"no admissibility row for {name!r}")
    row = table[name]
    k = int(k)
    if k < row["min_k"]:
        return False
    excluded = set(row["excluded_primes"])
    rest = k
    for p in excluded:
        while rest % p == 0:
            rest //= p
    return rest != 1
