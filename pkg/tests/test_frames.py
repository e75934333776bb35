"""k-frames: construction, scaling, complete search, frame-code duality."""

import numpy as np
import pytest

from framelat import catalog, codes, frames, lattices, linalg
from framelat.errors import (
    CongruenceViolated,
    DimensionNotDiv4,
    InvalidFrame,
    UnknownLattice,
)


def frame_gram_ok(frame, host):
    prod = frame.vectors @ frame.vectors.T
    want = host.scale * frame.k
    return all(
        int(prod[i, j]) == (want if i == j else 0)
        for i in range(frame.n) for j in range(frame.n)
    )


def test_prop_const_standard_3frame():
    d6 = catalog.build("D_6")
    fr, host = frames.prop_const_frame(d6, 3, 1, 3, 0, 0, 0)
    assert fr.k == 3
    assert frame_gram_ok(fr, host)


def test_prop_const_9frame():
    d6 = catalog.build("D_6")
    fr, host = frames.prop_const_frame(d6, 3, 1, 1, 0, 1, 1)
    assert fr.k == (1 + 0 + 1 + 25) // 3 == 9
    assert frame_gram_ok(fr, host)


def test_prop_const_11frame_via_witness():
    from framelat.representations import find_representation
    w = find_representation(11, "b")
    p8 = catalog.build("P_8")
    fr, host = frames.prop_const_frame(p8, 4, 2, w.a, w.b, w.c, w.d)
    assert fr.k == 11
    assert frame_gram_ok(fr, host)


def test_prop_const_congruence_violation():
    d6 = catalog.build("D_6")
    with pytest.raises(CongruenceViolated):
        frames.prop_const_frame(d6, 3, 1, 1, 0, 0, 0)


def test_scale_frame_identity():
    fr, host = catalog.standard_frame_for("C_{12,3}(D_6)")
    assert frames.scale_frame(fr, 1) is fr


def test_scale_frame_m2():
    fr, host = catalog.standard_frame_for("C_{12,3}(D_6)")
    f6 = frames.scale_frame(fr, 2, host=host)
    assert f6.k == 6
    assert frame_gram_ok(f6, host)


def test_scale_frame_m7_in_z8():
    z8 = lattices.UnimodularLattice(1, linalg.identity(8))
    rows = []
    for i in range(0, 8, 2):
        a = [0] * 8
        b = [0] * 8
        a[i], a[i + 1] = 1, 1
        b[i], b[i + 1] = 1, -1
        rows.extend([a, b])
    f2 = frames.verify_frame(z8, rows, 2)
    f14 = frames.scale_frame(f2, 7, host=z8)
    assert f14.k == 14
    assert frame_gram_ok(f14, z8)


def test_scale_frame_composition():
    fr, host = catalog.standard_frame_for("C_{12,3}(D_6)")
    f = frames.scale_frame(frames.scale_frame(fr, 2, host=host), 3, host=host)
    assert f.k == 3 * 2 * 3


def test_scale_frame_needs_dim_div4():
    rep = lattices.construction_a(codes.make_code(2, [[1, 1]]))
    fr = frames.standard_frame(rep)
    with pytest.raises(DimensionNotDiv4):
        frames.scale_frame(fr, 2)


def test_four_square_choices():
    assert frames.four_square_decomposition(1) == (1, 0, 0, 0)
    assert frames.four_square_decomposition(7) == (2, 1, 1, 1)
    for m in range(1, 40):
        a, b, c, d = frames.four_square_decomposition(m)
        assert a * a + b * b + c * c + d * d == m
        q = frames.quaternion_matrix(a, b, c, d)
        prod = q @ q.T
        assert all(int(prod[i, j]) == (m if i == j else 0)
                   for i in range(4) for j in range(4))


def test_find_frame_standard_always_found():
    lat = catalog.lattice_for("C_{12,3}(D_6)")
    res = frames.find_frame(lat, 3)
    assert res.status == "found"
    assert frame_gram_ok(res.frame, lat)


def test_find_frame_d20_no_3frame():
    res = frames.find_frame(catalog.lattice_for("D20"), 3)
    assert res.status == "none"
    assert res.vector_pairs == 0


def test_find_frame_a54_no_2frame():
    res = frames.find_frame(catalog.lattice_for("A5^4"), 2)
    assert res.status == "none"
    assert res.vector_pairs == 60  # 120 norm-2 vectors


def test_find_frame_exhausted_on_tiny_budget():
    res = frames.find_frame(catalog.lattice_for("A5^4"), 2, budget=10)
    assert res.status == "exhausted"


def test_code_from_frame_standard_roundtrip():
    code = catalog.build("C_{13,12}")
    lat = lattices.construction_a(code)
    back = frames.code_from_frame(lat, frames.standard_frame(lat))
    gen_a, _ = codes.reduced_generators(code)
    gen_b, _ = codes.reduced_generators(back)
    assert np.array_equal(gen_a, gen_b)


def test_code_from_frame_5frame_in_d12plus():
    lat = catalog.lattice_for("D12+")
    res = frames.find_frame(lat, 5)
    assert res.status == "found"
    c5 = frames.code_from_frame(lat, res.frame)
    assert c5.k == 5 and c5.n == 12
    assert codes.is_self_dual(c5)
    rep = codes.min_euclidean_weight(c5)
    assert rep.d_e == 10 and rep.extremal_class == "extremal"
    rebuilt = lattices.construction_a(c5)
    assert (lattices.theta_coefficients(rebuilt, 4).counts
            == lattices.theta_coefficients(lat, 4).counts)


def test_code_from_frame_rejects_bad_gram():
    lat = catalog.lattice_for("C_{12,3}(D_6)")
    bad = 3 * linalg.identity(12)
    bad[0, 1] = 1
    with pytest.raises(InvalidFrame):
        frames.code_from_frame(lat, frames.Frame(k=3, vectors=bad))


def test_lemma_positivity_for_built_frames():
    # a verified k-frame forces at least 2n vectors of norm k
    cases = [("D12+", 3), ("D12+", 5), ("D8^2", 2), ("D4^5", 2), ("D20", 2)]
    for name, k in cases:
        lat = catalog.lattice_for(name)
        res = frames.find_frame(lat, k)
        assert res.status == "found"
        fp = lattices.theta_coefficients(lat, k)
        assert fp.counts[k] >= 2 * lat.n


def test_star_condition_rows():
    assert frames.star_condition("A_3(C_{12,3}(D_6))", 11)
    assert not frames.star_condition("A_3(C_{12,3}(D_6))", 35)
    assert frames.star_condition("A_5(C_{48,5}(D_24))", 5)
    assert not frames.star_condition("A_5(C_{48,5}(D_24))", 4)
    assert not frames.star_condition("A_4(C_{32,4}(D_16))", 12)
    assert frames.star_condition("A_4(C_{32,4}(D_16))", 20)
    with pytest.raises(UnknownLattice):
        frames.star_condition("A_1(Z)", 3)


def test_frame_json():
    fr, _ = catalog.standard_frame_for("C_{12,3}(D_6)")
    doc = fr.to_json()
    assert doc["k"] == 3 and len(doc["vector_rows"]) == 12
