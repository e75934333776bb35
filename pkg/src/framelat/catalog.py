"""Named catalog: every embedded matrix and code, builders, claim checks.

Entry kinds:

* ``negacirculant-pair``: length-4n code from first rows (r_a, r_b).
* ``two-block-matrix``: skew matrix M with M M^T = m I (negacirculant halves
  or Paley type) plus its derived code ``C_{2n,k}(M)`` and host lattice
  ``A_k(C_{2n,k}(M))``.
* ``paley``: handled inside two-block-matrix via ``p``.
* ``z4-split``: the block generators over Z_4.
* ``binary-generator``: classic binary self-dual codes kept with provenance.

``build`` accepts entry names, derived code names ``C_{2n,k}(M)``, lattice
names ``A_k(<code>)`` and the usual lattice aliases (D12+, D4^5, ...).
"""

from __future__ import annotations

import functools
import re
import time

import numpy as np

from . import codes as codes_mod
from . import data_store, frames, lattices, linalg, representations
from .errors import UnknownName, UnsupportedFrameOrder

FAST, FULL = "fast", "full"


def entry_names() -> list:
    return data_store.entry_names()


def groups() -> dict:
    out: dict = {}
    for name in entry_names():
        doc = data_store.load_entry(name)
        out.setdefault(doc["group"], []).append(name)
    return out


def aliases() -> dict:
    return data_store.load_aux("lattice_aliases")["aliases"]


def resolve_name(name: str) -> str:
    name = name.strip()
    amap = aliases()
    if name in amap:
        return amap[name]
    return name


def _matrix_from_entry(doc: dict) -> np.ndarray:
    if "p" in doc:
        return codes_mod.paley_matrix(doc["p"])
    a = codes_mod.negacirculant(tuple(doc["r_a"]))
    b = codes_mod.negacirculant(tuple(doc["r_b"]))
    return np.block([[a, b], [-b.T, a.T]])


def _z4_blocks(doc: dict):
    top = [[int(ch) for ch in row] for row in doc["top_rows"]]
    tors = [[int(ch) for ch in row] for row in doc["torsion_rows"]]
    t = len(tors)
    a_block = [row[:t] for row in top]
    b_block = [row[t:] for row in top]
    if doc["torsion_includes_identity"]:
        for i, row in enumerate(tors):
            lead = row[:t]
            expect = [2 if j == i else 0 for j in range(t)]
            if lead != expect:
                raise UnknownName(f"{doc['name']}: torsion rows do not start with 2I")
        two_d = [row[t:] for row in tors]
    else:
        two_d = tors
    return a_block, b_block, two_d


@functools.lru_cache(maxsize=None)
def build(name: str):
    """Construct the named object: an exact matrix, a ZkCode, or a lattice."""
    name = resolve_name(name)

    m = re.fullmatch(r"A_(\d+)\((.+)\)", name)
    if m:
        inner = build(m.group(2))
        if not isinstance(inner, codes_mod.ZkCode):
            raise UnknownName(f"{m.group(2)} is not a code")
        if inner.k != int(m.group(1)):
            raise UnknownName(f"{name}: modulus mismatch with {m.group(2)}")
        return lattices.construction_a(inner)

    m = re.fullmatch(r"C_\{(\d+),(\d+)\}\((.+)\)", name)
    if m:
        doc = data_store.load_entry(m.group(3))
        if doc["kind"] != "two-block-matrix":
            raise UnknownName(f"{m.group(3)} is not a two-block matrix")
        if int(m.group(1)) != 2 * _matrix_order(doc) or int(m.group(2)) != doc["k"]:
            raise UnknownName(f"{name} disagrees with entry {m.group(3)}")
        return codes_mod.two_block_code(doc["k"], _matrix_from_entry(doc), doc["ell"])

    doc = data_store.load_entry(name)
    kind = doc["kind"]
    if kind == "two-block-matrix":
        return _matrix_from_entry(doc)
    if kind == "negacirculant-pair":
        return codes_mod.four_block_code(doc["k"], tuple(doc["r_a"]), tuple(doc["r_b"]))
    if kind == "z4-split":
        return codes_mod.z4_split_code(*_z4_blocks(doc))
    if kind == "binary-generator":
        return codes_mod.make_code(2, doc["rows"])
    raise UnknownName(f"unhandled kind {kind!r} for {name!r}")


def _matrix_order(doc: dict) -> int:
    if "p" in doc:
        return doc["p"] + 1
    return 2 * len(doc["r_a"])


def derived_code_name(matrix_name: str) -> str:
    doc = data_store.load_entry(matrix_name)
    return f"C_{{{2 * _matrix_order(doc)},{doc['k']}}}({matrix_name})"


@functools.lru_cache(maxsize=None)
def lattice_for(name: str) -> lattices.UnimodularLattice:
    """Host lattice of a named code (or the lattice itself for A_k names)."""
    obj = build(resolve_name(name))
    if isinstance(obj, lattices.UnimodularLattice):
        return obj
    if isinstance(obj, codes_mod.ZkCode):
        return lattices.construction_a(obj)
    doc = data_store.load_entry(resolve_name(name))
    if doc["kind"] == "two-block-matrix":
        return lattice_for(derived_code_name(resolve_name(name)))
    raise UnknownName(f"{name!r} has no associated lattice")


@functools.lru_cache(maxsize=None)
def _theta_cached(name: str, max_norm: int, threads: int = 1):
    return lattices.theta_coefficients(lattice_for(name), max_norm,
                                       threads=threads)


def _claim_subject(doc: dict) -> str:
    """Name whose code/lattice the claims speak about."""
    if doc["kind"] == "two-block-matrix":
        return derived_code_name(doc["name"])
    return doc["name"]


def verify(name: str, tier: str = FAST, threads: int = 1) -> dict:
    """Run all recorded claims of an entry at the given tier.

    Returns a report dict with one record per executed claim; tier "fast"
    skips claims marked "full" (they are reported as skipped).
    """
    name = resolve_name(name)
    doc = data_store.load_entry(name)
    claims = doc.get("claims", {})
    subject = _claim_subject(doc)
    checks, skipped = [], []

    def run(claim, expected, fn):
        t0 = time.time()
        computed = fn()
        checks.append({
            "claim": claim,
            "expected": expected,
            "computed": computed,
            "pass": computed == expected,
            "seconds": round(time.time() - t0, 3),
        })

    def tier_ok(c) -> bool:
        return tier == FULL or c.get("tier", FAST) == FAST

    if claims.get("self_dual"):
        run("self_dual", True, lambda: codes_mod.is_self_dual(build(subject)))

    c = claims.get("lattice_min")
    if c:
        if tier_ok(c):
            run("lattice_min", c["value"],
                lambda: lattices.min_norm(lattice_for(subject)))
        else:
            skipped.append("lattice_min")

    c = claims.get("d_e")
    if c:
        if tier_ok(c):
            def de_pair():
                rep = codes_mod.min_euclidean_weight(build(subject))
                return [rep.d_e, rep.extremal_class]
            run("d_e", [c["value"], c["class"]], de_pair)
        else:
            skipped.append("d_e")

    for c in claims.get("theta", []):
        if tier_ok(c):
            norm = c["norm"]
            run(f"theta[{norm}]", c["count"],
                lambda norm=norm: _theta_cached(subject, norm, threads).counts[norm])
        else:
            skipped.append(f"theta[{c['norm']}]")

    c = claims.get("alpha")
    if c:
        if tier_ok(c):
            run("alpha", c["value"], lambda: _theta_cached(subject, 4, threads).alpha)
        else:
            skipped.append("alpha")

    c = claims.get("beta")
    if c:
        if tier_ok(c):
            run("beta", c["value"], lambda: _theta_cached(subject, 4, threads).beta)
        else:
            skipped.append("beta")

    c = claims.get("kissing")
    if c:
        if tier_ok(c):
            run("kissing", c["value"],
                lambda: _theta_cached(subject, c["norm"], threads).kissing)
        else:
            skipped.append("kissing")

    c = claims.get("fingerprint")
    if c:
        if tier_ok(c):
            mn = c["max_norm"]
            run(f"fingerprint[{c['same_as']},{mn}]", True,
                lambda: _theta_cached(subject, mn, threads).counts
                == _theta_cached(c["same_as"], mn, threads).counts)
        else:
            skipped.append("fingerprint")

    c = claims.get("even_neighbor_min")
    if c:
        if tier_ok(c):
            def neighbor_min():
                host = lattice_for(subject)
                pair = lattices.even_neighbors(host)
                mins = sorted(lattices.min_norm(nb) for nb in pair)
                return mins[-1]
            run("even_neighbor_min", c["value"], neighbor_min)
        else:
            skipped.append("even_neighbor_min")

    return {
        "name": name,
        "subject": subject,
        "checks": checks,
        "skipped": skipped,
        "pass": all(ch["pass"] for ch in checks),
    }


def build_frame(host_name: str, k: int):
    """k-frame in the named host via the admissible-prime plan.

    Returns (frame, host austere lattice, plan).  Raises UnsupportedFrameOrder
    when the admissibility condition fails.
    """
    host_name = resolve_name(host_name)
    plan = representations.frame_order_for(host_name, k)
    star = data_store.star_table()[host_name]
    matrix = build(star["matrix"])
    host = lattice_for(host_name)
    w = plan.witness
    base, _ = frames.prop_const_frame(
        matrix, star["k"], star["ell"], w.a, w.b, w.c, w.d, host=host
    )
    if plan.m_scale == 1:
        return base, host, plan
    scaled = frames.scale_frame(base, plan.m_scale, host=host)
    return scaled, host, plan


def standard_frame_for(name: str):
    host = lattice_for(name)
    return frames.standard_frame(host), host


def manifest_counts() -> dict:
    out: dict = {}
    for group, names in groups().items():
        out[group] = len(names)
    return out
