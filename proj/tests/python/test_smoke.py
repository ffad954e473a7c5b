from fractions import Fraction

import pytest

import klab


def test_c4():
    g = klab.snr2(2)
    assert (g.vertex_count, g.edge_count) == (4, 4)
    assert klab.kirchhoff_index(g) == 5
    assert klab.mult_deg_kirchhoff_index(g) == 20
    assert klab.spanning_trees(g) == 4
    assert klab.resistance_matrix(g)[0][1] == Fraction(3, 4)


def test_deleted_members():
    assert klab.kirchhoff_index(klab.snr2(4, {1, 2})) == Fraction(134, 3)
    assert klab.kirchhoff_index(klab.snr2(4, {2, 3})) == 46
    assert klab.kf_snr2(4, 2, True) == Fraction(134, 3)
    assert klab.tau_snr2(2, 1, False, "statement") == 81
    assert klab.wiener_snr2(4, 2, True) == 62


def test_big_integers_survive():
    assert klab.tau_sn2(60) == 62 * 3**58


def test_spectra():
    assert klab.analytic_spectrum_L_sn2(4) == [0, 1, 1, 2, 3, 3, 4, 6]
    numeric = klab.laplacian_spectrum(klab.snr2(4))
    assert numeric == pytest.approx([0, 1, 1, 2, 3, 3, 4, 6], abs=1e-9)
    s = klab.spectrum(4, [1, 2])
    assert s["cubic"]["e1"] == {"num": 7, "den": 1}


def test_report():
    r = klab.report(4, [1, 2])
    assert r["all_agree"]
    kf = next(row for row in r["rows"] if row["invariant"] == "kf")
    assert kf["oracle"] == Fraction(134, 3)


def test_errors():
    with pytest.raises(klab.InvalidParameter):
        klab.snr2(1)
    with pytest.raises(klab.KlabError):
        klab.kirchhoff_index(klab.Graph(3, [(0, 1)]))
    with pytest.raises(klab.Inconsistency):
        klab.kf_snr2(4, 2, False, "statement")
