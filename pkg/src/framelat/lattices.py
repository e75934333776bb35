"""Unimodular lattices: Construction A, exact theta data, shadows, neighbors.

A lattice is stored as an integer basis B with a scale k; the true lattice is
(1/sqrt(k)) times the row space, so the Gram matrix is B B^T / k and vector
norms are integers.  Bases are kept in Hermite normal form, which makes the
determinant check a product of pivots and gives canonical serialization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import enumeration, linalg
from .errors import (
    BadVector,
    DimensionNotDiv8,
    LatticeIsEven,
    NotInLattice,
    NotSelfOrthogonal,
    NotUnimodular,
)


class UnimodularLattice:
    """Integer-scaled unimodular lattice with cached enumeration state."""

    def __init__(self, scale: int, basis, *, _skip_checks: bool = False):
        self.scale = int(scale)
        B = linalg.imat(basis)
        if not _skip_checks:
            B = linalg.hnf(B)
        self.basis = B
        self.n = B.shape[0]
        if B.shape[1] != self.n:
            raise NotUnimodular("basis must be square after HNF")
        det = 1
        for i in range(self.n):
            det *= int(B[i, i])
        if det * det != self.scale ** self.n:
            raise NotUnimodular(
                f"Gram determinant is {Fraction(det * det, self.scale ** self.n)}, not 1"
            )
        self.gram = linalg.gram(B, self.scale)
        self._enum_data = None
        self._min_norm = None

    def __repr__(self):
        return f"UnimodularLattice(n={self.n}, scale={self.scale})"

    def enum_data(self) -> enumeration.EnumData:
        if self._enum_data is None:
            self._enum_data = enumeration.prepare(self.basis, self.scale)
        return self._enum_data

    @property
    def is_even(self) -> bool:
        return all(int(self.gram[i, i]) % 2 == 0 for i in range(self.n))

    def contains(self, row) -> bool:
        return linalg.in_rowspace(self.basis, row)

    def norm_of(self, row) -> Fraction:
        w = [int(v) for v in row]
        return Fraction(sum(v * v for v in w), self.scale)

    def to_json(self) -> dict:
        return {
            "scale": self.scale,
            "basis_rows": [[int(v) for v in row] for row in self.basis],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "UnimodularLattice":
        return cls(doc["scale"], doc["basis_rows"])


@dataclass
class ThetaFingerprint:
    """Theta series prefix: counts[m] vectors of norm m, m = 0..max_norm."""

    max_norm: int
    counts: list
    alpha: int | None = None
    beta: int | None = None

    def __post_init__(self):
        assert self.counts[0] == 1
        assert all(c >= 0 for c in self.counts)
        assert all(c % 2 == 0 for c in self.counts[1:])

    @property
    def kissing(self) -> int | None:
        for c in self.counts[1:]:
            if c:
                return c
        return None

    @property
    def min_norm(self) -> int | None:
        for m, c in enumerate(self.counts):
            if m and c:
                return m
        return None

    def to_json(self) -> dict:
        doc = {"max_norm": self.max_norm, "counts": list(self.counts)}
        if self.alpha is not None:
            doc["alpha"] = self.alpha
        if self.beta is not None:
            doc["beta"] = self.beta
        return doc


@dataclass
class ShadowDecomposition:
    """Even sublattice L0, its dual, and the four cosets of L0 in L0*.

    Bases are integer rows at the given scales; coset representatives live at
    ``dual_scale``.  L = L0 union L2 and the shadow is L1 union L3.
    """

    sublattice_scale: int
    sublattice_basis: np.ndarray
    dual_scale: int
    dual_basis: np.ndarray
    rep_l1: list
    rep_l2: list
    rep_l3: list

    def shadow_min(self, search_limit: int = 64) -> Fraction:
        """Smallest norm over the shadow cosets, by exact enumeration."""
        norms = self.shadow_norms(count=1, search_limit=search_limit)
        return norms[0]

    def shadow_norms(self, count: int = 16, search_limit: int = 64) -> list:
        data = enumeration.prepare(self.dual_basis, self.dual_scale)
        sub_hnf = linalg.hnf(2 * self.sublattice_basis)
        found = []
        radius = 2 * self.dual_scale
        while radius <= search_limit * self.dual_scale:
            vecs, _ = enumeration.collect_vectors(data, 1, radius, cap=2_000_000)
            found = []
            for w in vecs:
                for rep in (self.rep_l1, self.rep_l3):
                    diff = [int(a) - int(b) for a, b in zip(w, rep)]
                    if linalg.in_rowspace(sub_hnf, diff):
                        found.append(
                            Fraction(int(sum(int(a) * int(a) for a in w)),
                                     self.dual_scale)
                        )
                        break
            if len(found) >= count:
                break
            radius += 2 * self.dual_scale
        found.sort()
        return found[:count]


def construction_a(code) -> UnimodularLattice:
    """A_k(C) = (1/sqrt(k)) (rho(C) + k Z^n); requires C self-dual."""
    from . import codes as codes_mod

    if codes_mod._self_orthogonality(code.generator, code.k):
        raise NotSelfOrthogonal("code is not self-orthogonal")
    basis = codes_mod.construction_a_basis(code)
    try:
        return UnimodularLattice(code.k, basis, _skip_checks=True)
    except NotUnimodular as exc:
        raise NotUnimodular(
            f"code of length {code.n} over Z_{code.k} is not self-dual"
        ) from exc


def min_norm(lat: UnimodularLattice, budget: int | None = None) -> int:
    """Exact minimum norm via shrinking-radius Schnorr-Euchner search."""
    if lat._min_norm is None:
        best, _, _ = enumeration.shortest_norm(
            lat.enum_data(), step=lat.scale, budget=budget
        )
        assert best % lat.scale == 0
        lat._min_norm = best // lat.scale
    return lat._min_norm


def theta_coefficients(lat: UnimodularLattice, max_norm: int, *,
                       budget: int | None = None, threads: int = 1,
                       checkpoint: str | None = None) -> ThetaFingerprint:
    """Exact counts of lattice vectors of each norm 0..max_norm."""
    max_norm = int(max_norm)
    if max_norm < 0:
        raise ValueError("max_norm must be >= 0")
    radius = lat.scale * max_norm
    if max_norm == 0:
        return _fingerprint(lat, [1])
    halves, _, _ = enumeration.counts_by_norm(
        lat.enum_data(), radius, budget=budget, threads=threads,
        checkpoint=checkpoint,
    )
    counts = [1]
    for m in range(1, max_norm + 1):
        counts.append(2 * int(halves[lat.scale * m]))
    stray = [q for q in range(1, radius + 1) if q % lat.scale and halves[q]]
    assert not stray, f"non-integral norms {stray} in an integral lattice"
    return _fingerprint(lat, counts)


def _fingerprint(lat: UnimodularLattice, counts: list) -> ThetaFingerprint:
    alpha = beta = None
    if len(counts) > 4:
        if lat.n == 40 and (counts[4] - 19120) % 256 == 0:
            alpha = (counts[4] - 19120) // 256
        if lat.n == 44 and (counts[4] - 6600) % 16 == 0:
            beta = (counts[4] - 6600) // 16
    return ThetaFingerprint(len(counts) - 1, counts, alpha, beta)


def _parity_sublattice(lat_basis: np.ndarray, parity: list) -> np.ndarray:
    """Coordinate rows of the index-2 sublattice where sum(parity_i x_i) is even."""
    n = len(parity)
    pivot = next(i for i, p in enumerate(parity) if p % 2 == 1)
    coords = []
    for i in range(n):
        if i == pivot:
            continue
        row = [0] * n
        row[i] = 1
        if parity[i] % 2 == 1:
            row[pivot] = 1
        coords.append(row)
    row = [0] * n
    row[pivot] = 2
    coords.append(row)
    return linalg.imat(coords) @ lat_basis


def _dual_basis_scaled(basis: np.ndarray, scale: int) -> np.ndarray:
    """Integer basis of the dual at scale 4*scale: rows 2*scale*B^-T.

    Exact back-substitution against the HNF; raises if the result is not
    integral (cannot happen for the even sublattice of an odd unimodular
    lattice in even dimension, where the quotient L0*/L0 has exponent 2).
    """
    H = linalg.hnf(basis)
    n = H.shape[0]
    factor = 2 * scale
    cols = []
    for i in range(n):
        # solve H^T y = factor * e_i by forward substitution (H upper triangular)
        y = [Fraction(0)] * n
        for r in range(n):
            rhs = Fraction(factor if r == i else 0)
            rhs -= sum(Fraction(int(H[s, r])) * y[s] for s in range(r))
            y[r] = rhs / int(H[r, r])
        cols.append(y)
    W = np.zeros((n, n), dtype=object)
    for i in range(n):
        # y solves H^T y = factor * e_i, i.e. y is column i of factor * H^-T
        for j in range(n):
            v = cols[i][j]
            if v.denominator != 1:
                raise NotInLattice("dual basis not half-integral; odd dimension?")
            W[j, i] = int(v)
    return W


def shadow(lat: UnimodularLattice) -> ShadowDecomposition:
    """Shadow decomposition S = L0* \\ L of an odd unimodular lattice."""
    parity = [int(lat.gram[i, i]) % 2 for i in range(lat.n)]
    if not any(parity):
        raise LatticeIsEven("shadow is only defined here for odd lattices")
    if lat.n % 2:
        raise BadVector("shadow decomposition implemented for even dimension")
    b0 = linalg.hnf(_parity_sublattice(lat.basis, parity))
    dual = linalg.hnf(_dual_basis_scaled(b0, lat.scale))
    dual_scale = 4 * lat.scale

    # cosets of L0 inside L0*, at dual scale (L0 rows become 2*b0)
    sub2 = linalg.hnf(2 * b0)
    reps = []
    for row in dual:
        w = [int(v) for v in row]
        if linalg.in_rowspace(sub2, w):
            continue
        if any(
            linalg.in_rowspace(sub2, [a - b for a, b in zip(w, rep)])
            for rep in reps
        ):
            continue
        reps.append(w)
        if len(reps) == 3:
            break
    if len(reps) == 2:
        reps.append([a + b for a, b in zip(reps[0], reps[1])])
    assert len(reps) == 3, "quotient L0*/L0 must have order 4"

    # identify L2: the coset holding the odd-parity part of L
    odd_row = next(
        row for i, row in enumerate(lat.basis) if _row_parity(lat, i, parity)
    )
    odd2 = [2 * int(v) for v in odd_row]
    l2 = next(
        rep for rep in reps
        if linalg.in_rowspace(sub2, [a - b for a, b in zip(odd2, rep)])
    )
    shade = sorted((rep for rep in reps if rep is not l2))
    return ShadowDecomposition(
        sublattice_scale=lat.scale,
        sublattice_basis=b0,
        dual_scale=dual_scale,
        dual_basis=dual,
        rep_l1=shade[0],
        rep_l2=l2,
        rep_l3=shade[1],
    )


def _row_parity(lat: UnimodularLattice, i: int, parity: list) -> int:
    coords = linalg.solve_in_rowspace(lat.basis, lat.basis[i])
    return sum(c * p for c, p in zip(coords, parity)) % 2


def even_neighbors(lat: UnimodularLattice):
    """The two even unimodular neighbors L0 + L1 and L0 + L3 (dim = 0 mod 8)."""
    if lat.n % 8:
        raise DimensionNotDiv8(f"dimension {lat.n} is not divisible by 8")
    sh = shadow(lat)
    out = []
    for rep in (sh.rep_l1, sh.rep_l3):
        stack = np.vstack([2 * sh.sublattice_basis, linalg.imat([rep])])
        nb = UnimodularLattice(4 * lat.scale, linalg.hnf(stack))
        if not nb.is_even:
            raise NotUnimodular("neighbor is not even; shadow labeling broken")
        out.append(nb)
    return tuple(out)


def odd_neighbor_from_vector(lat: UnimodularLattice, x_row) -> UnimodularLattice:
    """Odd unimodular neighbor of an even lattice through a norm-8 vector x.

    Keeps the index-2 sublattice pairing evenly with x and glues x/2 + y for
    some y with (x, y) odd; x stays a vector of the result.
    """
    if not lat.is_even:
        raise BadVector("host lattice must be even")
    x = [int(v) for v in x_row]
    if not lat.contains(x):
        raise BadVector("x is not in the lattice")
    if sum(v * v for v in x) != 8 * lat.scale:
        raise BadVector("x must have norm 8")
    pair = [int(sum(int(b) * xv for b, xv in zip(row, x))) // lat.scale
            for row in lat.basis]
    parity = [p % 2 for p in pair]
    if not any(parity):
        raise BadVector("no y with (x, y) odd exists")
    y = lat.basis[parity.index(1)]
    plus = linalg.hnf(_parity_sublattice(lat.basis, parity))
    glue = [xv + 2 * int(yv) for xv, yv in zip(x, y)]
    stack = np.vstack([2 * plus, linalg.imat([glue])])
    out = UnimodularLattice(4 * lat.scale, linalg.hnf(stack))
    if out.is_even:
        raise BadVector("neighbor came out even; x/2 + y parity broken")
    if not out.contains([2 * v for v in x]):
        raise NotInLattice("x lost while forming the neighbor")
    return out
