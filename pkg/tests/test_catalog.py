"""Catalog integrity: manifest counts, builds, claims, fault injection."""

import json
import shutil
from pathlib import Path

import pytest

from framelat import catalog, codes, data_store
from framelat.errors import DataIntegrityError, UnknownName


def test_manifest_counts():
    counts = catalog.manifest_counts()
    assert counts["form-matrices"] == 12
    assert counts["code-tables"] == 30
    assert counts["z4-blocks"] == 4
    assert counts["text-codes"] == 3
    assert counts["binary-classics"] == 2


def test_code_table_lengths():
    by_len = {}
    for name in catalog.groups()["code-tables"]:
        doc = data_store.load_entry(name)
        by_len[doc["length"]] = by_len.get(doc["length"], 0) + 1
    assert by_len == {20: 13, 28: 5, 32: 2, 36: 3, 40: 3, 44: 2, 48: 2}


def test_every_entry_builds_self_dual():
    for name in data_store.entry_names():
        doc = data_store.load_entry(name)
        if doc["kind"] == "two-block-matrix":
            code = catalog.build(catalog.derived_code_name(name))
        else:
            code = catalog.build(name)
        assert codes.is_self_dual(code), name


def test_spot_check_stored_digits():
    doc = data_store.load_entry("C_{9,40}")
    assert doc["r_a"] == [0, 0, 1, 0, 5, 8, 3, 0, 4, 4]
    doc = data_store.load_entry("C_{17,44}")
    assert doc["r_a"] == [0, 0, 0, 0, 1, 13, 7, 13, 11, 16, 13]
    doc = data_store.load_entry("D_6")
    assert doc["r_a"] == [0, 2, 2] and doc["k"] == 3 and doc["m"] == 25
    doc = data_store.load_entry("C'_{4,20}")
    assert doc["top_rows"][0] == "11220113303"
    assert doc["torsion_rows"] == ["202202200", "220022200"]


def test_aliases_resolve():
    assert catalog.resolve_name("D12+") == "A_3(C_{12,3}(D_6))"
    lat = catalog.lattice_for("L32_82")
    assert lat.n == 32 and lat.scale == 4


def test_unknown_name():
    with pytest.raises(UnknownName):
        catalog.build("C_{99,99}")


def test_verify_fast_entry():
    report = catalog.verify("C_{13,12}")
    assert report["pass"], report
    claims = {c["claim"] for c in report["checks"]}
    assert "self_dual" in claims and "d_e" in claims


def test_verify_defers_full_claims():
    report = catalog.verify("C_{7,48}", tier="fast")
    assert "lattice_min" in report["skipped"]
    assert "kissing" in report["skipped"]
    assert report["pass"]  # self-duality still runs


def _copy_data(tmp_path: Path) -> Path:
    target = tmp_path / "data"
    shutil.copytree(data_store.data_dir(), target)
    return target


def test_checksum_detects_corruption(tmp_path, monkeypatch):
    target = _copy_data(tmp_path)
    victim = target / "C_13_12.json"
    text = victim.read_text().replace('"r_a": [\n  0,\n  1,\n  6\n ]',
                                      '"r_a": [\n  0,\n  1,\n  5\n ]')
    assert "5" in text
    victim.write_text(text)
    monkeypatch.setenv(data_store.ENV_DATA_DIR, str(target))
    data_store.clear_caches()
    try:
        with pytest.raises(DataIntegrityError):
            data_store.load_entry("C_{13,12}")
    finally:
        monkeypatch.delenv(data_store.ENV_DATA_DIR)
        data_store.clear_caches()


def test_corrupt_digit_fails_claims(tmp_path, monkeypatch):
    import hashlib

    target = _copy_data(tmp_path)
    victim = target / "C_13_12.json"
    doc = json.loads(victim.read_text())
    doc["r_a"] = [0, 1, 5]  # transcription fault
    victim.write_text(json.dumps(doc, indent=1) + "\n")
    man_path = target / "MANIFEST.json"
    man = json.loads(man_path.read_text())
    man["entries"]["C_{13,12}"]["sha256"] = hashlib.sha256(
        victim.read_bytes()).hexdigest()
    man_path.write_text(json.dumps(man, indent=1) + "\n")
    monkeypatch.setenv(data_store.ENV_DATA_DIR, str(target))
    data_store.clear_caches()
    catalog.build.cache_clear()
    catalog.lattice_for.cache_clear()
    catalog._theta_cached.cache_clear()
    try:
        with pytest.raises(Exception):
            # the faulty row is no longer self-dual
            catalog.build("C_{13,12}")
    finally:
        monkeypatch.delenv(data_store.ENV_DATA_DIR)
        data_store.clear_caches()
        catalog.build.cache_clear()
        catalog.lattice_for.cache_clear()
        catalog._theta_cached.cache_clear()


def test_build_frame_via_plan():
    fr, host, plan = catalog.build_frame("D12+", 11)
    assert fr.k == 11
    assert plan.case == "a"
    prod = fr.vectors @ fr.vectors.T
    assert all(int(prod[i, j]) == (host.scale * 11 if i == j else 0)
               for i in range(12) for j in range(12))
