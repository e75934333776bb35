"""Driver layer over the enumeration kernels.

Prepares a lattice basis for Fincke-Pohst / Schnorr-Euchner enumeration
(LLL reduction, exact LDL converted to float scratch, int64 casts with
overflow guards) and exposes exact counting, collection and shortest-vector
search.  Counting can fan out over top-level branches for checkpointing and
threads; the merge is a sum indexed by branch value, hence deterministic.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import kernels, linalg
from .errors import BudgetExceeded, FramelatError


@dataclass
class EnumData:
    """Reduced, kernel-ready view of an integer-basis lattice."""

    scale: int
    basis_obj: np.ndarray          # LLL-reduced exact basis rows
    basis_i64: np.ndarray
    gram_i64: np.ndarray           # unscaled B B^T
    mu: np.ndarray
    rdiag: np.ndarray

    @property
    def dim(self) -> int:
        return self.gram_i64.shape[0]

    def fingerprint(self) -> str:
        h = hashlib.sha256()
        h.update(str(self.scale).encode())
        h.update(self.basis_i64.tobytes())
        return h.hexdigest()[:16]


def prepare(basis, scale: int, reduce: bool = True) -> EnumData:
    B = linalg.imat(basis)
    if reduce and B.shape[0] > 1:
        # deep insertions flatten the GSO tail, which dominates tree size
        B = linalg.lll_reduce(B, scale, deep=True)
    G = B @ B.T
    mu, rdiag = linalg.gso_floats(G)
    return EnumData(
        scale=int(scale),
        basis_obj=B,
        basis_i64=linalg.as_i64(B),
        gram_i64=linalg.as_i64(G),
        mu=mu,
        rdiag=rdiag,
    )


def prepare_from_gram(gram_obj: np.ndarray, scale: int = 1) -> EnumData:
    """Enumeration data straight from an exact Gram matrix (no basis ops)."""
    mu, rdiag = linalg.gso_floats(gram_obj)
    n = gram_obj.shape[0]
    return EnumData(
        scale=int(scale),
        basis_obj=linalg.identity(n),
        basis_i64=np.eye(n, dtype=np.int64),
        gram_i64=linalg.as_i64(gram_obj),
        mu=mu,
        rdiag=rdiag,
    )


def _check_leaf_overflow(data: EnumData, radius: int) -> None:
    rmin = float(data.rdiag.min())
    if rmin <= 0:
        raise FramelatError("non-positive GSO norm")
    vmax = math.isqrt(int((radius + 1) / rmin)) + 2
    gmax = int(np.abs(data.gram_i64).max())
    n = data.dim
    if n * n * gmax * vmax * vmax >= linalg.I64_GUARD:
        raise OverflowError("enumeration leaf norms could overflow int64")


def _top_branch_limit(data: EnumData, radius: int) -> int:
    rtop = float(data.rdiag[data.dim - 1])
    return math.isqrt(int((radius + 0.25) / rtop)) + 1


def counts_by_norm(
    data: EnumData,
    radius: int,
    *,
    budget: int | None = None,
    threads: int = 1,
    checkpoint: str | None = None,
    split_mod: int | None = None,
):
    """Exact per-norm counts of one representative of each +/-v pair.

    Returns (counts, counts_nontrivial, nodes).  counts[q] is the number of
    canonical-sign lattice vectors of unscaled norm q <= radius; when
    ``split_mod`` is given, counts_nontrivial[q] restricts to vectors with
    some ambient coordinate nonzero mod split_mod.
    """
    radius = int(radius)
    if radius < 0:
        raise ValueError("radius must be >= 0")
    n = data.dim
    if radius == 0 or n == 0:
        z = np.zeros(radius + 1, dtype=np.int64)
        return z, z.copy(), 0

    _check_leaf_overflow(data, radius)
    want_split = split_mod is not None
    kmod = int(split_mod) if want_split else 1
    budget_i = -1 if budget is None else int(budget)

    state = _load_checkpoint(checkpoint, data, radius)
    vmax = _top_branch_limit(data, radius)
    todo = [v for v in range(vmax + 1) if str(v) not in state["done"]]
    nodes_total = state["nodes"]

    def run_branch(v):
        return kernels.enum_count(
            data.mu, data.rdiag, data.gram_i64, data.basis_i64,
            kmod, radius, v, budget_i, want_split,
        )

    counts = np.zeros(radius + 1, dtype=np.int64)
    counts_nt = np.zeros(radius + 1, dtype=np.int64)
    for done_counts in state["done"].values():
        counts += np.asarray(done_counts[0], dtype=np.int64)
        counts_nt += np.asarray(done_counts[1], dtype=np.int64)

    if threads > 1 and len(todo) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run_branch, todo))
        pairs = list(zip(todo, results))
    else:
        pairs = []
        for v in todo:
            pairs.append((v, run_branch(v)))
            res = pairs[-1][1]
            if res[3] == kernels.STATUS_BUDGET:
                break

    for v, (c, cnt, nodes, status) in pairs:
        nodes_total += int(nodes)
        if status == kernels.STATUS_BUDGET:
            _save_checkpoint(checkpoint, data, radius, state, nodes_total)
            raise BudgetExceeded(
                f"node budget exhausted in branch {v}", nodes=nodes_total
            )
        counts += c
        counts_nt += cnt
        state["done"][str(v)] = (c.tolist(), cnt.tolist())
        if budget is not None and nodes_total > budget:
            _save_checkpoint(checkpoint, data, radius, state, nodes_total)
            raise BudgetExceeded("node budget exhausted", nodes=nodes_total)

    _save_checkpoint(checkpoint, data, radius, state, nodes_total)
    return counts, counts_nt, nodes_total


def _load_checkpoint(path, data: EnumData, radius: int):
    state = {"done": {}, "nodes": 0}
    if path and os.path.exists(path):
        with open(path) as fh:
            saved = json.load(fh)
        if saved.get("basis") == data.fingerprint() and saved.get("radius") == radius:
            state["done"] = {k: tuple(v) for k, v in saved["done"].items()}
            state["nodes"] = saved.get("nodes", 0)
    return state


def _save_checkpoint(path, data: EnumData, radius: int, state, nodes: int):
    if not path:
        return
    payload = {
        "basis": data.fingerprint(),
        "radius": radius,
        "nodes": nodes,
        "done": {k: list(v) for k, v in state["done"].items()},
    }
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(payload, fh)
    os.replace(tmp, path)


def collect_vectors(data: EnumData, lo: int, hi: int, *, cap: int = 500_000,
                    budget: int | None = None):
    """Ambient integer rows, one per +/-v pair, with unscaled norm in [lo, hi].

    Kernel coefficients are taken against the reduced basis and mapped back to
    ambient coordinates here, so callers never see the reduction.
    """
    _check_leaf_overflow(data, int(hi))
    budget_i = -1 if budget is None else int(budget)
    out, cnt, nodes, status = kernels.enum_collect(
        data.mu, data.rdiag, data.gram_i64, int(lo), int(hi), int(cap), budget_i
    )
    if status == kernels.STATUS_BUDGET:
        raise BudgetExceeded("node budget exhausted during collection", nodes=nodes)
    if status == kernels.STATUS_OVERFLOW:
        raise FramelatError(f"more than cap={cap} vectors in norm window")
    coeffs = out[:cnt]
    ambient = coeffs @ data.basis_i64
    return ambient, nodes


def shortest_norm(data: EnumData, *, step: int | None = None,
                  budget: int | None = None):
    """Exact minimum unscaled norm plus a witness coefficient row.

    ``step`` is the norm quantum (the lattice scale for integral lattices);
    the search bound shrinks to best - step as soon as a better vector is
    found, which keeps the tree at the size of the final exclusion tree.
    """
    n = data.dim
    diag = np.diag(data.gram_i64)
    init_best = int(diag.min())
    init_row = int(np.argmin(diag))
    stp = int(step) if step else 1
    _check_leaf_overflow(data, init_best)
    budget_i = -1 if budget is None else int(budget)
    best, witness, improved, nodes, status = kernels.enum_shortest(
        data.mu, data.rdiag, data.gram_i64, stp, init_best, budget_i
    )
    if status == kernels.STATUS_BUDGET:
        raise BudgetExceeded("node budget exhausted during SVP search", nodes=nodes)
    if not improved:
        witness = np.zeros(n, dtype=np.int64)
        witness[init_row] = 1
        best = init_best
    return int(best), witness @ data.basis_i64, nodes
