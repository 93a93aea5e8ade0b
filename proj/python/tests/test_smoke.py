import json

import pytest

import qaffine as qa


def q(e=1):
    return qa.QRat.q(e)


def test_q_integers():
    assert qa.q_int(2) == q(1) + q(-1)
    assert qa.q_binom(4, 2) == qa.q_int(4) * qa.q_int(3) / (qa.q_int(2) * qa.q_int(1))
    assert (q(2) - q(2)).is_zero()


def test_cartan_a22():
    d = qa.cartan("A2:2")
    assert d["n"] == 1
    assert d["delta"] == [1, 2]
    assert d["cartan"] == [[2, -1], [-4, 2]]
    with pytest.raises(ValueError):
        qa.cartan("Q9:9")


def test_inversions_and_betas():
    assert len(qa.inversions("A4:2", [0, 1, 2])) == 3
    with pytest.raises(ValueError):
        qa.inversions("A2:2", [0, 0])
    betas = qa.betas("A2:2", 1, 6)
    assert sorted(betas) == list(range(1, 7))
    assert all(sum(v) > 0 for v in betas.values())


def test_imaginary_blocks():
    assert qa.det("A2:2", 1) == q(3) + qa.QRat(2) * q(1) + qa.QRat(2) * q(-1) + q(-3)
    h = qa.h_matrix("A3:1", 1)
    assert len(h) == 3
    for i in range(3):
        for j in range(3):
            assert h[i][j] == h[j][i]
    records = qa.imag_checks("D4:3", 6)
    assert records and all(r["status"] == "pass" for r in records)


def test_rmatrix_document():
    doc = qa.rmatrix("A2:2", 4, "mixed")
    parsed = json.loads(doc)
    assert parsed["header"]["type"] == "A2:2"
    assert parsed["header"]["form"] == "mixed"
    assert qa.normalize_rmatrix(doc) == doc
    assert qa.rmatrix("A2:2", 4, "mixed") == doc
    with pytest.raises(ValueError):
        qa.normalize_rmatrix('{"terms": []}')


def test_rank2_catalog():
    ids = qa.catalog_ids()
    assert "a22.heisenberg" in ids
    res = qa.verify_rank2("all", 5, seed=3)
    assert len(res) == len(ids)
    assert all(r["status"] == "pass" for r in res)
    exact = qa.verify_rank2("a22.delta-minus-f1", 5, exact=True)
    assert exact[0]["status"] == "pass"
    assert qa.partition_count("A2:2", [1, 2]) == 3
