"""Smoke tests for the python bindings: each main operation runs end to end
and returns the same values the C++ suites pin down."""

import pytest

import lapalg


def test_parse_and_arithmetic():
    p = lapalg.parse("x1+x2")
    q = lapalg.parse("x1-x2")
    assert str(p * q) == "x1^2 - x2^2"
    assert (p * q).degree == 2
    r2 = lapalg.r_squared(2)
    assert str(r2.laplacian()) == "4"


def test_parse_errors():
    with pytest.raises(lapalg.InputError):
        lapalg.parse("x1 + ")
    with pytest.raises(lapalg.InputError):
        lapalg.parse("3/0*x1")


def test_apolar_and_moments():
    assert lapalg.apolar_inner(lapalg.parse("x1^2", 2), lapalg.parse("x1^2", 2)) == "2"
    assert lapalg.sphere_moment([4, 0], 2) == "3/8"
    assert lapalg.sphere_moment([1, 2], 2) == "0"


def test_harmonic_decompose():
    degree, comps = lapalg.harmonic_decompose(lapalg.parse("x1^2", 2))
    assert degree == 2
    assert str(comps[0]) == "1/2*x1^2 - 1/2*x2^2"
    assert str(comps[1]) == "1/2"
    assert lapalg.schur_ratios(2, 2)[0] == "1/8"


def test_membership_witness():
    inside, witness = lapalg.membership("x1^2+x2^2", ["x1+x2", "x1*x2"])
    assert inside and witness == "g1^2 - 2*g2"
    outside, _ = lapalg.membership("x1", ["x1+x2", "x1*x2"], n=2)
    assert not outside


def test_check_laplacian_verdicts():
    good = lapalg.check_laplacian(["x1^2+x2^2", "x1^2-x2^2", "2*x1*x2"])
    assert good["result"]["verdict"] == "LAPLACIAN"
    bad = lapalg.check_laplacian(["x1^2+x2^2", "x1^4*x2^4"])
    assert bad["result"]["verdict"] == "NOT_LAPLACIAN"


def test_closure_trace():
    report = lapalg.laplacian_closure(["x1^3"], n=1)
    assert report["result"]["stabilized"] is True
    stages = report["result"]["stages"]
    assert stages[0] == ["x1^3", "x1^2"]
    assert "x1" in stages[-1]


def test_polarizations():
    report = lapalg.classical_polarizations("x1^2", n=1, k=2)
    comp = {tuple(c["alpha"]): c["poly"] for c in report["result"]["components"]}
    assert comp[(1, 1)] == "2*x1*x2"


def test_quadratic_homogeneity_m3_witness():
    sys3 = lapalg.clifford_system(3)
    report = lapalg.quadratic_homogeneity_test(sys3["matrices"])
    assert report["homogeneous"] is False
    assert report["jordan_dim"] == 5
    assert report["enveloping_dim"] == 16
    assert "witness" in report


def test_finite_group_invariants():
    order, gens = lapalg.finite_group_invariants([[["-1", "0"], ["0", "-1"]]], degree_bound=2)
    assert order == 2
    assert gens == ["x1^2", "x1*x2", "x2^2"]


def test_kns():
    assert lapalg.kns_check(["x1^2+x2^2"], k=1)["holds"] is False
    assert lapalg.kns_check(["x1^2+x2^2"], k=2)["holds"] is True


def test_run_job_roundtrip():
    # C_0 on the harmonic summand (element xy): E[x^2 y^2] / |xy|^2 = 1/8.
    # C_1 on r^2 H_0 (element r^2): E[r^4] / |r^2|^2 = 1/4.
    report = lapalg.run_job({"command": "schur-ratios", "n": 2, "degree": 2, "seed": 0})
    assert report["result"]["ratios"] == ["1/8", "1/4"]
