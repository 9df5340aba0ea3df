import pytest

import qpart


def test_expand_partitions():
    assert qpart.expand("1/(q;q)_inf", 6) == [1, 1, 2, 3, 5, 7, 11]


def test_expand_big_coefficients_are_python_ints():
    coeffs = qpart.expand("(1-q)^-200", 100)
    assert coeffs[100] > 2**64
    assert isinstance(coeffs[100], int)


def test_named_series_and_catalog():
    assert "GEN_F" in qpart.catalog_keys()
    assert qpart.named_series("GEN_F", 5) == [1, 2, 4, 8, 14, 24]


def test_counts_and_enumeration():
    assert qpart.count("F", 4) == 14
    assert qpart.count("F2", 4) == 10
    assert qpart.count("pbar_odd", 4) == 6
    assert qpart.enumerate("H", 4) == [
        "4_b", "3_b+1_b", "3_b+1_r", "3_r+1_b", "3_r+1_r", "2_b+1_b+1_r"]


def test_verify():
    (report,) = qpart.verify(["THM_F0_PRODUCT"], 40)
    assert report["status"] == "VariantResolved"
    assert report["verified_variant"] == "jtp-signed"
    assert "EQ_F_ID" in qpart.check_ids()


def test_errors():
    with pytest.raises(qpart.ParseError):
        qpart.expand("(q;q", 3)
    with pytest.raises(qpart.InvalidSpecialization):
        qpart.expand("1/(q^0;q)_inf", 3)
    with pytest.raises(ValueError):
        qpart.count("nope", 3)
