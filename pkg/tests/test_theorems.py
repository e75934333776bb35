"""Theorem verification jobs: frame families and representation ranges."""

import pytest

from framelat import theorems
from framelat.errors import UnsupportedTheorem


def _assert_job(tid, **kw):
    report = theorems.run_theorem(tid, **kw)
    failures = [r for r in report["records"] if r.get("pass") is False]
    assert report["pass"], failures
    return report


def test_frames_12():
    report = _assert_job("5.1", k_max=14)
    methods = {r.get("k"): r.get("method") for r in report["records"]
               if "k" in r}
    assert methods[11] == "admissible-prime"
    assert methods[13] == "code-fingerprint"
    assert methods[2] == "search"


def test_frames_16():
    _assert_job("5.3", k_max=10)


def test_frames_20():
    report = _assert_job("5.5", k_max=10)
    negs = [r for r in report["records"] if r.get("status") == "none"]
    hosts = {(r["host"], r["k"]) for r in negs}
    assert ("A5^4", 2) in hosts and ("D20", 3) in hosts


def test_frames_28():
    _assert_job("frames-28", k_max=8)


def test_frames_32():
    report = _assert_job("5.9", k_max=9)
    bw = [r for r in report["records"] if "Barnes-Wall" in str(r.get("claim"))]
    assert bw and bw[0]["pass"]


def test_frames_36():
    _assert_job("5.12", k_max=9)


def test_frames_40():
    report = _assert_job("5.18", k_max=7)
    ext = [r for r in report["records"]
           if r.get("status") == "unverifiable-external"]
    assert any(r.get("k") == 6 for r in ext)


def test_frames_44():
    _assert_job("frames-44", k_max=7)


def test_representation_job():
    report = theorems.run_theorem("3.2e", prime_range=120)
    assert report["pass"]
    assert report["exceptions"] == [2, 3]


def test_unknown_theorem():
    with pytest.raises(UnsupportedTheorem):
        theorems.run_theorem("7.7")
