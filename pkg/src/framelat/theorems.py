"""Desk-scale verification jobs for the frame-existence theorems.

Each job checks a family claim ("host lattice L contains a k-frame iff ...")
over a sampled range of k, producing one record per k with an honest method
label:

* ``admissible-prime``: exact witness built in the host copy from a
  representation witness, scaled by the four-square lemma.
* ``search``: exact witness found by complete clique search in the host copy.
* ``scaled-search``: a searched base frame scaled within the host copy.
* ``standard``/``scaled-standard``: the k e_i frame of a Construction-A host.
* ``code-fingerprint``: a frame in A_k(C) for a catalog code C whose lattice
  matches the host's theta prefix; isomorphism itself is out of scope, so
  these are fingerprint-level witnesses, never called isomorphisms.
* ``none-*``: negative claims via completed searches or zero theta counts.
* ``external``: the source generator matrix is not embedded here; recorded
  as unverifiable instead of silently skipped.

Numeric ids follow the statement order of the frame theorems by length
(12, 16, 20, 32, 36, 40/44); ``represent-<case>`` ids cover the prime
representation cases.
"""

from __future__ import annotations

import math

from . import catalog, frames, lattices, representations
from .errors import FramelatError, UnsupportedTheorem

FINGERPRINT_NORM = 4


def _fp(name: str, max_norm: int = FINGERPRINT_NORM):
    return catalog._theta_cached(catalog.resolve_name(name), max_norm)


def _searchable(host, k: int) -> bool:
    # collecting all norm-k vectors stays cheap only for small k * dim
    return host.n <= 20 and k <= 7 or host.n <= 16 and k <= 9


class FrameJob:
    """Per-k frame witnesses for one host lattice."""

    def __init__(self, host_name: str, min_k: int, negatives=(),
                 code_routes=None, search_ks=(), tier: str = "fast"):
        self.host_name = catalog.resolve_name(host_name)
        self.min_k = min_k
        self.negatives = set(negatives)
        self.code_routes = dict(code_routes or {})
        self.search_ks = set(search_ks)
        self._search_cache: dict = {}

    def witness(self, k: int) -> dict:
        host = catalog.lattice_for(self.host_name)
        rec = {"k": k}
        if k in self.negatives:
            rec.update(self._negative(host, k))
            return rec
        if k < self.min_k:
            rec.update(status="none", method="below-min-norm",
                       detail=f"min(L) = {self.min_k} rules out norm-{k} vectors")
            return rec
        if frames.star_condition(self.host_name, k):
            fr, _, plan = catalog.build_frame(self.host_name, k)
            rec.update(status="found", method="admissible-prime",
                       detail=f"case {plan.case}, p={plan.p}, scale {plan.m_scale}")
            return rec
        # base-and-scale: find a divisor with an in-copy frame
        for base in sorted(self.search_ks):
            if k % base == 0:
                fr = self._searched(host, base)
                if fr is not None:
                    if k == base:
                        rec.update(status="found", method="search")
                    else:
                        frames.scale_frame(fr, k // base, host=host)
                        rec.update(status="found", method="scaled-search",
                                   detail=f"{base}-frame scaled by {k // base}")
                    return rec
        for base, code_name in sorted(self.code_routes.items()):
            if k % base == 0:
                ok = (_fp(code_name).counts == _fp(self.host_name).counts)
                if not ok:
                    rec.update(status="fail", method="code-fingerprint",
                               detail=f"{code_name} theta differs from host")
                    return rec
                code_host = catalog.lattice_for(code_name)
                fr = frames.standard_frame(code_host)
                if k != base:
                    frames.scale_frame(fr, k // base, host=code_host)
                rec.update(status="found", method="code-fingerprint",
                           detail=f"standard frame of A_{base}({code_name})"
                                  + (f" scaled by {k // base}" if k != base else ""))
                return rec
        rec.update(status="unverifiable-external", method="external",
                   detail="only covered by generator matrices published elsewhere")
        return rec

    def _searched(self, host, k: int):
        if k not in self._search_cache:
            try:
                res = frames.find_frame(host, k)
            except FramelatError:
                res = None
            self._search_cache[k] = res.frame if res and res.status == "found" else None
        return self._search_cache[k]

    def _negative(self, host, k: int) -> dict:
        theta = _fp(self.host_name, min(k, FINGERPRINT_NORM))
        if k <= theta.max_norm and theta.counts[k] == 0:
            return {"status": "none", "method": "none-theta",
                    "detail": f"A_{k} = 0: no norm-{k} vectors at all"}
        res = frames.find_frame(host, k)
        if res.status == "none":
            return {"status": "none", "method": "none-search",
                    "detail": f"completed search over {res.vector_pairs} vector pairs"}
        return {"status": "fail", "method": "none-search",
                "detail": f"expected no {k}-frame, search returned {res.status}"}


def _run_frame_family(claims, k_max: int) -> list:
    """claims: list of (host, expect_rule, job).  expect_rule(k) -> bool."""
    records = []
    for host, expect, job in claims:
        for k in range(2, k_max + 1):
            rec = job.witness(k)
            rec["host"] = host
            want = expect(k)
            if rec["status"] == "unverifiable-external":
                rec["pass"] = None
            else:
                rec["pass"] = (rec["status"] == "found") == want
            records.append(rec)
    return records


def job_frames_12(k_max: int = 14, tier: str = "fast") -> dict:
    job = FrameJob("D12+", min_k=2, search_ks=(2, 3, 5, 7),
                   code_routes={13: "C_{13,12}", 23: "C_{23,12}"})
    recs = _run_frame_family([("D12+", lambda k: k >= 2, job)], k_max)
    recs.insert(0, _min_check("D12+", 2))
    recs.insert(1, _fp_check("B_12", "D12+"))
    return _finish("frame existence in the extremal 12-dim odd unimodular lattice",
                   recs)


def job_frames_16(k_max: int = 14, tier: str = "fast") -> dict:
    job = FrameJob("D8^2", min_k=2, search_ks=(2, 3, 5, 7),
                   code_routes={7: "C_{7,16}"})
    recs = _run_frame_family([("D8^2", lambda k: k >= 2, job)], k_max)
    recs.insert(0, _min_check("D8^2", 2))
    recs.insert(1, _fp_check("F_16", "D8^2"))
    return _finish("frame existence in the extremal 16-dim odd unimodular lattice",
                   recs)


def job_frames_20(k_max: int = 12, tier: str = "fast") -> dict:
    d45 = FrameJob("D4^5", min_k=2, search_ks=(2, 3),
                   code_routes={5: "C_{5,20}", 7: "C_{7,20}",
                                13: "C_{13,20}", 23: "C_{23,20}"})
    a54 = FrameJob("A5^4", min_k=2, negatives=(2,), search_ks=(3,),
                   code_routes={4: "C'_{4,20}", 5: "C'_{5,20}", 7: "C'_{7,20}",
                                13: "C'_{13,20}", 23: "C'_{23,20}"})
    d20 = FrameJob("D20", min_k=2, negatives=(3,), search_ks=(2,),
                   code_routes={7: "C''_{7,20}", 9: "C''_{9,20}",
                                11: "C''_{11,20}", 19: "C''_{19,20}",
                                29: "C''_{29,20}"})
    recs = _run_frame_family(
        [("D4^5", lambda k: k >= 2, d45),
         ("A5^4", lambda k: k >= 3, a54),
         ("D20", lambda k: k >= 2 and k != 3, d20)],
        k_max,
    )
    recs.insert(0, _min_check("D4^5", 2))
    recs.insert(1, _min_check("A5^4", 2))
    recs.insert(2, _min_check("D20", 2))
    return _finish("frame existence in three extremal 20-dim odd unimodular lattices",
                   recs)


def job_frames_32(k_max: int = 12, tier: str = "fast") -> dict:
    job = FrameJob("L32_82", min_k=4,
                   code_routes={4: "C_{32,4}(D_16)", 6: "C_{6,32}", 9: "C_{9,32}"})
    recs = _run_frame_family([("L32_82", lambda k: k >= 4, job)], k_max)
    recs.insert(0, _min_check("L32_82", 4))
    # even unimodular neighbor reaching min 4: the Barnes-Wall-type claim,
    # verified at the even/det-1/min-4 level only
    host = catalog.lattice_for("L32_82")
    pair = lattices.even_neighbors(host)
    mins = sorted(lattices.min_norm(nb) for nb in pair)
    recs.append({
        "claim": "even neighbor with min 4 (Barnes-Wall level: even, det 1, min 4)",
        "computed": mins,
        "pass": mins[-1] == 4,
    })
    return _finish("frame existence in the 32-dim lattice and its even neighbor",
                   recs)


def job_frames_36(k_max: int = 12, tier: str = "fast") -> dict:
    job = FrameJob("A_6(C_{36,6}(D_18))", min_k=4,
                   code_routes={4: "C_{4,36}", 5: "C_{5,36}", 6: "C_{36,6}(D_18)",
                                7: "C_{7,36}", 9: "C_{9,36}"})
    recs = _run_frame_family(
        [("A_6(C_{36,6}(D_18))", lambda k: k >= 4, job)], k_max)
    recs.insert(0, _min_check("A_6(C_{36,6}(D_18))", 4))
    return _finish("frame existence in the extremal 36-dim odd unimodular lattice",
                   recs)


def job_frames_28(k_max: int = 10, tier: str = "fast") -> dict:
    r32 = FrameJob("R28_32", min_k=3, negatives=(2,),
                   code_routes={3: "C_{28,3}(D_14)", 4: "C_{4,28}", 5: "C_{5,28}",
                                7: "C_{7,28}", 13: "C_{13,28}", 23: "C_{23,28}"})
    r15 = FrameJob("R28_15", min_k=3, negatives=(2,),
                   code_routes={4: "C'_{4,28}", 5: "C_{28,5}(D'_14)",
                                17: "C'_{17,28}"})
    recs = _run_frame_family(
        [("R28_32", lambda k: k >= 3, r32), ("R28_15", lambda k: k >= 3, r15)],
        k_max,
    )
    recs.insert(0, _min_check("R28_32", 3))
    recs.insert(1, _min_check("R28_15", 3))
    for rec in recs:
        # external classification covers the 3-frame of R28_15
        if rec.get("host") == "R28_15" and rec.get("k") == 3 \
                and rec["status"] == "unverifiable-external":
            rec["detail"] = "3-frame known from the published classification " \
                            "of 3-frames in the 28-dim optimal lattices"
    return _finish("frame existence in two optimal 28-dim odd unimodular lattices",
                   recs)


def _extremal_host_routes(entries):
    routes = []
    for k, name in entries:
        host = catalog.lattice_for(name)
        mu = lattices.min_norm(host)
        routes.append({
            "k": k,
            "host": name,
            "status": "found" if mu == 4 else "fail",
            "method": "standard",
            "detail": f"standard {k}-frame; min(A_{k}) = {mu}",
            "pass": mu == 4,
        })
    return routes


def job_frames_40(k_max: int = 12, tier: str = "fast") -> dict:
    job = FrameJob("A_4(C_{40,4}(P_20))", min_k=4,
                   code_routes={4: "C_{40,4}(P_20)"})
    recs = _run_frame_family(
        [("A_4(C_{40,4}(P_20))", lambda k: k >= 4, job)], k_max)
    recs.insert(0, _min_check("A_4(C_{40,4}(P_20))", 4))
    recs.extend(_extremal_host_routes(
        [(9, "A_9(C_{9,40})"), (13, "A_13(C_{13,40})"), (19, "A_19(C_{19,40})")]))
    recs.append({"k": 6, "host": "extremal 40-dim", "status":
                 "unverifiable-external", "method": "external", "pass": None,
                 "detail": "the published extremal Z_6-code of length 40 is "
                           "not embedded here"})
    return _finish("k-frames in extremal 40-dim odd unimodular lattices", recs)


def job_frames_44(k_max: int = 12, tier: str = "fast") -> dict:
    job = FrameJob("A_5(C_{44,5}(D_22))", min_k=4,
                   code_routes={5: "C_{44,5}(D_22)"})
    recs = _run_frame_family(
        [("A_5(C_{44,5}(D_22))", lambda k: k >= 4, job)], k_max)
    recs.insert(0, _min_check("A_5(C_{44,5}(D_22))", 4))
    recs.extend(_extremal_host_routes(
        [(9, "A_9(C_{9,44})"), (17, "A_17(C_{17,44})")]))
    for k, src in ((4, "Z_4"), (6, "Z_6")):
        recs.append({"k": k, "host": "extremal 44-dim",
                     "status": "unverifiable-external", "method": "external",
                     "pass": None,
                     "detail": f"the published extremal {src}-code of length 44 "
                               "is not embedded here"})
    return _finish("k-frames in extremal 44-dim odd unimodular lattices", recs)


def job_frames_48(k_max: int = 12, tier: str = "fast") -> dict:
    recs = [_min_check("A_5(C_{48,5}(D_24))", 5)]
    job = FrameJob("A_5(C_{48,5}(D_24))", min_k=5,
                   code_routes={5: "C_{48,5}(D_24)"})
    recs += _run_frame_family(
        [("A_5(C_{48,5}(D_24))",
          lambda k: k >= 5 and frames.star_condition("A_5(C_{48,5}(D_24))", k)
          or k == 5, job)], k_max)
    if tier == "full":
        for k, name in ((7, "A_7(C_{7,48})"), (9, "A_9(C_{9,48})")):
            host = catalog.lattice_for(name)
            mu = lattices.min_norm(host)
            recs.append({"k": k, "host": name, "status": "found",
                         "method": "standard",
                         "detail": f"standard {k}-frame; min(A_{k}) = {mu}",
                         "pass": mu == 5})
    else:
        recs.append({"k": "7,9", "host": "optimal 48-dim",
                     "status": "skipped-fast-tier", "method": "standard",
                     "pass": None,
                     "detail": "48-dim minimum norms run in the full tier"})
    recs.append({"k": "8m", "host": "optimal 48-dim neighbor",
                 "status": "unverifiable-external", "method": "external",
                 "pass": None,
                 "detail": "needs the published 8-frame of an extremal even "
                           "48-dim lattice, which is not embedded here"})
    return _finish("k-frames in optimal 48-dim odd unimodular lattices", recs)


def job_representation(case: str, prime_range: int = 500) -> dict:
    """Witness exists iff the prime avoids the case's exception list."""
    exceptions = set(representations.CASES[case][3])
    records = []
    ok = True
    for p in representations.primes_up_to(prime_range - 1):
        w = representations.find_representation(p, case)
        expect = p not in exceptions
        got = w is not None
        rec = {"case": case, "p": p,
               "status": "witness" if got else "none",
               "pass": got == expect}
        if w:
            rec["witness"] = [w.a, w.b, w.c, w.d]
        ok = ok and rec["pass"]
        records.append(rec)
    return {
        "description": f"constrained representation of primes, case {case}",
        "prime_range": prime_range,
        "exceptions": sorted(exceptions),
        "records": records,
        "pass": ok,
    }


def _min_check(name: str, expect: int) -> dict:
    got = lattices.min_norm(catalog.lattice_for(name))
    return {"claim": f"min({name}) = {expect}", "computed": got,
            "pass": got == expect}


def _fp_check(code_name: str, host: str) -> dict:
    same = _fp(code_name).counts == _fp(host).counts
    return {"claim": f"theta(A_k({code_name})) matches {host} to norm "
                     f"{FINGERPRINT_NORM}", "computed": same, "pass": same}


def _finish(description: str, records: list) -> dict:
    executed = [r for r in records if r.get("pass") is not None]
    return {
        "description": description,
        "records": records,
        "executed": len(executed),
        "flagged": len(records) - len(executed),
        "pass": all(r["pass"] for r in executed),
    }


JOBS = {
    "5.1": ("frames-12", job_frames_12),
    "5.3": ("frames-16", job_frames_16),
    "5.5": ("frames-20", job_frames_20),
    "5.9": ("frames-32", job_frames_32),
    "5.12": ("frames-36", job_frames_36),
    "5.18": ("frames-40", job_frames_40),
    "frames-12": ("frames-12", job_frames_12),
    "frames-16": ("frames-16", job_frames_16),
    "frames-20": ("frames-20", job_frames_20),
    "frames-28": ("frames-28", job_frames_28),
    "frames-32": ("frames-32", job_frames_32),
    "frames-36": ("frames-36", job_frames_36),
    "frames-40": ("frames-40", job_frames_40),
    "frames-44": ("frames-44", job_frames_44),
    "frames-48": ("frames-48", job_frames_48),
    "6.3": ("frames-48", job_frames_48),
}


def run_theorem(theorem_id: str, *, prime_range: int = 500, k_max: int | None = None,
                tier: str = "fast") -> dict:
    tid = theorem_id.strip().lower()
    if tid.startswith("3.2") and len(tid) == 4 and tid[3] in representations.CASES:
        report = job_representation(tid[3], prime_range)
        report["theorem"] = theorem_id
        return report
    if tid.startswith("represent-") and tid[-1] in representations.CASES:
        report = job_representation(tid[-1], prime_range)
        report["theorem"] = theorem_id
        return report
    if tid in JOBS:
        name, fn = JOBS[tid]
        kwargs = {"tier": tier}
        if k_max is not None:
            kwargs["k_max"] = k_max
        report = fn(**kwargs)
        report["theorem"] = name
        return report
    raise UnsupportedTheorem(
        f"unknown theorem id {theorem_id!r}; known: "
        f"{sorted(set(JOBS) | {'3.2a-3.2h'})}"
    )
