"""Constrained quaternary forms: the 4-dimensional congruence lattices,
their theta coefficients by two independent routes, and prime representation
searches with certified nonexistence.

Each case fixes (k, ell, m) with m + ell^2 = -1 (mod k) and asks for integer
quadruples (a, b, c, d) with

    b = c - ell*d (mod k),   d = a + ell*b (mod k),
    a^2 + m b^2 + c^2 + m d^2 = k * p.

The search space is a box of side sqrt(k p), so per-prime searches are
complete decision procedures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import enumeration, linalg
from .errors import ConditionViolated, UnsupportedFrameOrder, UnknownLattice

# case letter -> (k, ell, m, exceptional primes)
CASES = {
    "a": (3, 1, 25, (2, 5, 7, 13, 23)),
    "b": (4, 2, 7, (2, 7)),
    "c": (5, 0, 49, (2, 3, 7, 11, 19, 29)),
    "d": (5, 2, 25, (2, 3, 17)),
    "e": (4, 2, 15, (2, 3)),
    "f": (6, 2, 49, (2, 3, 5, 7)),
    "g": (4, 0, 19, (2, 3, 13, 19)),
    "h": (5, 0, 39, (2, 3, 7, 17)),
}


@dataclass(frozen=True)
class FormParams:
    k: int
    ell: int
    m: int

    def __post_init__(self):
        if not (0 <= self.ell <= self.k - 1):
            raise ConditionViolated(f"ell={self.ell} outside 0..{self.k - 1}")
        if (self.m + self.ell**2 + 1) % self.k != 0:
            raise ConditionViolated(
                f"m + ell^2 = {self.m + self.ell ** 2} != -1 mod {self.k}"
            )


@dataclass(frozen=True)
class RepWitness:
    a: int
    b: int
    c: int
    d: int
    p: int
    case: str

    def __post_init__(self):
        k, ell, m, _ = CASES[self.case]
        if (self.b - self.c + ell * self.d) % k or (self.d - self.a - ell * self.b) % k:
            raise ConditionViolated("witness breaks the defining congruences")
        total = self.a**2 + m * self.b**2 + self.c**2 + m * self.d**2
        if total != k * self.p:
            raise ConditionViolated(f"witness norm {total} != {k}*{self.p}")

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d,
                "p": self.p, "case": self.case}


def params_for_case(case: str) -> FormParams:
    k, ell, m, _ = CASES[case]
    return FormParams(k, ell, m)


@dataclass
class FormLattice:
    """Spanning set and exact Gram of the 4-dim congruence lattice."""

    params: FormParams
    spanning: np.ndarray
    gram: np.ndarray

    @property
    def det(self) -> int:
        return linalg.gram_det(self.gram)

    def theta(self, max_norm: int) -> list:
        data = enumeration.prepare_from_gram(self.gram)
        halves, _, _ = enumeration.counts_by_norm(data, int(max_norm))
        out = [1] + [2 * int(halves[q]) for q in range(1, max_norm + 1)]
        return out


def form_lattice(params: FormParams) -> FormLattice:
    """Spanned by (k,0,0,0), (0,0,k,0), (1,0,ell,1), (0,1,ell^2+1,ell) under
    the weighted product (a^2 + m b^2 + c^2 + m d^2)/k; Gram determinant m^2."""
    k, ell, m = params.k, params.ell, params.m
    spanning = linalg.imat([
        [k, 0, 0, 0],
        [0, 0, k, 0],
        [1, 0, ell, 1],
        [0, 1, ell * ell + 1, ell],
    ])
    for row in spanning:
        a, b, c, d = (int(v) for v in row)
        if (b - c + ell * d) % k or (d - a - ell * b) % k:
            raise ConditionViolated(f"spanning vector {row} violates eq-congruences")
    g = linalg.gram(spanning, k, weights=[1, m, 1, m])
    lat = FormLattice(params, spanning, g)
    if lat.det != m * m:
        raise ConditionViolated(f"Gram determinant {lat.det} != m^2 = {m * m}")
    return lat


def form_theta(params: FormParams, max_norm: int) -> list:
    """Theta coefficients a(0..max_norm) by direct congruence-box enumeration.

    Independent of the lattice-enumeration route: plain nested loops over the
    quadruples of the defining congruences.
    """
    k, ell, m = params.k, params.ell, params.m
    top = int(max_norm) * k
    counts = [0] * (int(max_norm) + 1)
    bb = math.isqrt(top // m) if m <= top else 0
    for b in range(-bb, bb + 1):
        for d in range(-bb, bb + 1):
            rest = top - m * (b * b + d * d)
            if rest < 0:
                continue
            aa = math.isqrt(rest)
            for a in range(-aa, aa + 1):
                if (d - a - ell * b) % k:
                    continue
                rem = rest - a * a
                cc = math.isqrt(rem)
                for c in range(-cc, cc + 1):
                    if (b - c + ell * d) % k:
                        continue
                    q = a * a + m * (b * b + d * d) + c * c
                    if q % k == 0 and q <= top:
                        counts[q // k] += 1
    return counts


def find_representation(p: int, case: str) -> RepWitness | None:
    """Exhaustive witness search for prime p in the given case.

    Returns the first witness in (|b|, |d|, |a|, sign) order, or None, which
    is a certified proof of nonexistence (the search box is complete).
    """
    if case not in CASES:
        raise ValueError(f"case must be one of {sorted(CASES)}")
    k, ell, m, _ = CASES[case]
    p = int(p)
    total = k * p
    bmax = math.isqrt(total // m)
    for babs in range(bmax + 1):
        for b in ((babs, -babs) if babs else (0,)):
            for dabs in range(math.isqrt((total - m * b * b) // m) + 1):
                for d in ((dabs, -dabs) if dabs else (0,)):
                    rest = total - m * (b * b + d * d)
                    amax = math.isqrt(rest)
                    for aabs in range(amax + 1):
                        for a in ((aabs, -aabs) if aabs else (0,)):
                            if (d - a - ell * b) % k:
                                continue
                            c2 = rest - a * a
                            c = math.isqrt(c2)
                            if c * c != c2:
                                continue
                            for cs in ((c, -c) if c else (0,)):
                                if (b - cs + ell * d) % k == 0:
                                    return RepWitness(a, b, cs, d, p, case)
    return None


def primes_up_to(limit: int) -> list:
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i:: i] = False
    return [int(i) for i in np.nonzero(sieve)[0]]


def representation_report(case: str, prime_range: int) -> list:
    """Per-prime witness/none results for all primes below prime_range."""
    out = []
    for p in primes_up_to(int(prime_range) - 1):
        w = find_representation(p, case)
        doc = {"case": case, "p": p, "status": "witness" if w else "none"}
        if w:
            doc["witness"] = [w.a, w.b, w.c, w.d]
        out.append(doc)
    return out


@dataclass(frozen=True)
class FrameOrderPlan:
    """Recipe for a k-frame: a prime-order frame scaled by Lagrange's lemma."""

    host: str
    k: int
    case: str
    p: int
    m_scale: int
    witness: RepWitness

    def to_json(self) -> dict:
        return {
            "host": self.host,
            "k": self.k,
            "case": self.case,
            "p": self.p,
            "m_scale": self.m_scale,
            "witness": self.witness.to_json(),
        }


def frame_order_for(name: str, k: int) -> FrameOrderPlan:
    """Factor k = p * m with p an admissible prime for the named host and
    return the witness-backed construction plan."""
    from .data_store import star_table
    from .frames import star_condition

    table = star_table()
    if name not in table:
        raise UnknownLattice(f"no admissibility row for {name!r}")
    if not star_condition(name, k):
        raise UnsupportedFrameOrder(f"k={k} is not admissible for {name}")
    row = table[name]
    excluded = set(row["excluded_primes"])
    k = int(k)
    rest, p = k, None
    for q in _prime_factors(k):
        if q not in excluded:
            p = q
            break
    assert p is not None  # star_condition guarantees one
    witness = find_representation(p, row["case"])
    if witness is None:
        raise UnsupportedFrameOrder(
            f"prime {p} unexpectedly unrepresentable in case {row['case']}"
        )
    return FrameOrderPlan(host=name, k=k, case=row["case"], p=p,
                          m_scale=k // p, witness=witness)


def _prime_factors(k: int) -> list:
    out = []
    rest = k
    f = 2
    while f * f <= rest:
        if rest % f == 0:
            out.append(f)
            while rest % f == 0:
                rest //= f
        f += 1
    if rest > 1:
        out.append(rest)
    return out
