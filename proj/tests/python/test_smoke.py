import json

import pytest

import zcoarse


def test_lengths_and_digits():
    assert zcoarse.special_rep(2, 11) == [-1, 0, -1, 0, 1]
    assert zcoarse.word_length(2, 15) == 2
    assert zcoarse.word_length(2, 2**300 - 1) == 2
    assert zcoarse.distance(3, 5, 0) == 3
    assert zcoarse.oracle_length(3, 5) == 3


def test_formula_matches_oracle():
    report = zcoarse.validate_formula(4, -200, 200)
    assert report["all_match"] is True


def test_gadic_and_witness():
    assert zcoarse.mod_inverse(3, 2, 4) == 11
    terms = zcoarse.divergence_witness(2, 3, 20)
    assert terms[-1][2] == 20


def test_spectra():
    r = zcoarse.spectrum(12, [2, 3, 5], lo=-50, hi=50, random_pairs=200)
    assert r["sp"] == ["2", "3"]
    assert len(r["evidence"]) == 3
    assert zcoarse.spectrum_profinite([3], [2, 3])["sp"] == ["3"]
    assert zcoarse.compare_bases(2, 3, [2, 3]) == "DISTINGUISHED"


def test_profinite_helpers():
    assert zcoarse.q_star([2, 3], 20) == [1, 2, 3, 4, 6, 8, 9, 12, 16, 18]
    assert zcoarse.inverse_sequence([2], 3, 6) == [1, 3, 3, 11, 11, 43]


def test_rectify():
    blocks = zcoarse.partition(2, 0, 20)
    assert blocks[0] == [1, 2, 4, 8, 16]
    h, closeness = zcoarse.rectify_multiplication(2, 0, 63)
    assert sorted(h.values()) == list(range(64))
    assert closeness <= 4


def test_cli_and_errors():
    code, out, _ = zcoarse.run(["len", "--g", "3", "--k", "5"])
    assert code == 0
    assert json.loads(out)["results"]["items"][0]["length"] == "3"
    with pytest.raises(ValueError):
        zcoarse.word_length(1, 3)
    with pytest.raises(ValueError):
        zcoarse.inverse_sequence([2], 2, 5)
