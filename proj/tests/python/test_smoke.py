import mincone


def test_lawson_cubic_verification():
    poly = mincone.clifford_cubic(1)
    assert poly == "x1^2*x3 - x2^2*x3 + 2*x1*x2*x4"
    rep = mincone.verify(poly)
    assert rep["eigenfunction"] is True
    assert rep["radial"] is True
    assert rep["radial_constant"] == "-8"
    assert rep["tau"] == "0"
    assert rep["harmonic"] is True


def test_quadric_and_reducible():
    rep = mincone.verify(mincone.quadric_cone(2, 3))
    assert rep["eigenfunction"] is True
    assert rep["weight"] == "-16"
    rep = mincone.verify(mincone.reducible_example())
    assert rep["eigenfunction"] is True
    assert rep["radial"] is False


def test_determinant_weight_formula():
    rep = mincone.verify(mincone.determinant_cone(3))
    assert rep["eigenfunction"] is True
    assert rep["weight"] == mincone.det_weight_formula(3)
    assert rep["tau"] == "-1"


def test_cartan_and_hsiang():
    rep = mincone.verify(mincone.cartan_cubic(2))
    assert rep["radial_constant"] == "-54"
    assert rep["tau"] == "2"
    rep = mincone.verify(mincone.hsiang_cubic())
    assert rep["tau"] == "-1"


def test_classification():
    assert mincone.hurwitz_radon(16) == 9
    assert mincone.delta(9) == 16
    assert not mincone.is_realizable(9)
    assert mincone.realizability_scan(4, 40) == [5, 9, 17, 33]
    table = [mincone.congruence_class_count(n)["class_count"] for n in range(4, 22)]
    assert table == [1, 0, 1, 1, 1, 0, 1, 1, 2, 1, 1, 1, 1, 0, 1, 1, 2, 2]
    assert mincone.admissible_pairs(12) == [(1, 5), (3, 4)]


def test_certificate_and_invariants():
    cert = mincone.irreducibility_certificate(2)
    assert cert["pass"] is True
    assert cert["discriminant"] == "4*x1^2*x4^2 + 4*x2^2*x4^2"
    inv = mincone.system_invariants(mincone.system_text(4, 1, 1))
    assert inv["valid"] is True
    assert inv["q"] == 4
    assert inv["omega_trace_abs"] == "0"


def test_non_eigenfunction_witness():
    rep = mincone.verify("x1^3 + x2")
    assert rep["eigenfunction"] is False
    assert rep["witness"]
