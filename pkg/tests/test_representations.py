"""Congruence form lattices and constrained prime representations."""

import pytest

from framelat import representations as reps
from framelat.errors import ConditionViolated, UnsupportedFrameOrder


def test_case_table_consistency():
    for case, (k, ell, m, _) in reps.CASES.items():
        assert (m + ell * ell + 1) % k == 0, case


def test_form_lattice_gram_a():
    lat = reps.form_lattice(reps.FormParams(3, 1, 25))
    assert [int(v) for v in lat.gram[0]] == [3, 0, 1, 0]
    assert lat.det == 625


def test_form_lattice_gram_b():
    lat = reps.form_lattice(reps.FormParams(4, 2, 7))
    assert lat.det == 49


def test_form_lattice_trivial_m1():
    lat = reps.form_lattice(reps.FormParams(2, 0, 1))
    assert lat.det == 1


def test_form_params_validation():
    with pytest.raises(ConditionViolated):
        reps.FormParams(3, 1, 24)
    with pytest.raises(ConditionViolated):
        reps.FormParams(3, 5, 25)


def test_form_theta_case_a_paper_prefix():
    t = reps.form_theta(reps.params_for_case("a"), 12)
    assert t[0] == 1
    assert t[3] == 4 and t[6] == 4 and t[9] == 4 and t[10] == 8 and t[11] == 4
    # excluded primes are unrepresented
    assert t[2] == 0 and t[5] == 0 and t[7] == 0


def test_form_theta_zero_norm():
    for case in reps.CASES:
        assert reps.form_theta(reps.params_for_case(case), 0) == [1]


@pytest.mark.parametrize("case", sorted(reps.CASES))
def test_theta_paths_agree(case):
    params = reps.params_for_case(case)
    direct = reps.form_theta(params, 15)
    via_lattice = reps.form_lattice(params).theta(15)
    assert direct == via_lattice


def test_find_representation_examples():
    w = reps.find_representation(11, "b")
    assert w is not None
    assert w.a ** 2 + 7 * w.b ** 2 + w.c ** 2 + 7 * w.d ** 2 == 44
    assert reps.find_representation(13, "a") is None
    assert reps.find_representation(17, "h") is None


def test_witness_validates_itself():
    with pytest.raises(ConditionViolated):
        reps.RepWitness(1, 1, 1, 1, 11, "b")


def test_representation_report():
    report = reps.representation_report("b", 30)
    by_p = {r["p"]: r["status"] for r in report}
    assert by_p[2] == "none" and by_p[7] == "none"
    assert all(v == "witness" for p, v in by_p.items() if p not in (2, 7))


@pytest.mark.parametrize("case", sorted(reps.CASES))
def test_exceptions_match_below_100(case):
    exceptions = set(reps.CASES[case][3])
    for p in reps.primes_up_to(99):
        got = reps.find_representation(p, case)
        assert (got is None) == (p in exceptions), (case, p)


def test_frame_order_plans():
    plan = reps.frame_order_for("A_3(C_{12,3}(D_6))", 11)
    assert plan.case == "a" and plan.p == 11 and plan.m_scale == 1
    plan = reps.frame_order_for("A_3(C_{12,3}(D_6))", 22)
    assert plan.p == 11 and plan.m_scale == 2
    with pytest.raises(UnsupportedFrameOrder):
        reps.frame_order_for("A_3(C_{12,3}(D_6))", 35)


def test_frame_order_prime_power():
    plan = reps.frame_order_for("A_5(C_{48,5}(D_24))", 25)
    assert plan.p == 5 and plan.m_scale == 5
