"""End-to-end checks of the python bindings against known exact values."""

from fractions import Fraction

import pytest

import riccigraph as rg


def rat(text):
    return rg.Rational.parse(text)


def test_petersen_is_flat_everywhere():
    g = rg.generate("petersen")
    profile = rg.curvature_profile(g)
    assert len(profile.reports) == 15
    assert profile.summary.uniform
    assert profile.summary.min_value == rat("0")
    for report in profile.reports:
        assert report.certificate.gap_zero


def test_complete_graph_closed_form():
    g = rg.generate("complete:4")
    assert rg.condensed_limit(g, 0, 1) == rat("4/3")
    report = rg.edge_report(g, 2, 3)
    assert report.method == rg.Method.BOTH
    assert Fraction(str(report.condensed).replace("/", "/")) == Fraction(4, 3)


def test_transport_value_on_triangle():
    g = rg.generate("complete:3")
    mu = rg.lazy_measure(g, 0, rat("1/2"))
    nu = rg.lazy_measure(g, 1, rat("1/2"))
    result = rg.wasserstein(g, mu, nu)
    assert result.value == rat("1/4")
    assert rg.verify_plan(result.plan).ok
    assert result.value.as_fraction() == Fraction(1, 4)


def test_decomposition_sizes_on_rooks():
    g = rg.generate("rooks:4")
    cn = rg.decompose(g, 0, 1)
    assert len(cn.triangle) == 2
    assert len(cn.exclusive_x) == 3
    assert len(cn.exclusive_y) == 3
    assert len(cn.pentagon) == 6
    h = rg.induced_bipartite(g, cn)
    assert rg.maximum_matching(h).size() == 3


def test_srg_detection_on_shrikhande():
    params = rg.detect_srg(rg.generate("shrikhande"))
    assert (params.n, params.d, params.alpha, params.beta) == (16, 6, 2, 2)
    assert params.feasible()


def test_spectrum_and_rigidity():
    g = rg.generate("complete:5")
    eigs = rg.laplacian_spectrum(g)
    assert abs(eigs[1] - 1.25) < 1e-9
    rigidity = rg.rigidity_check(g)
    assert rigidity.is_complete
    assert rigidity.min_edge_curvature == rat("5/4")
    assert rigidity.consistent


def test_errors_are_python_exceptions():
    g = rg.Graph(3, [(0, 1), (1, 2)])
    with pytest.raises(rg.RicciError):
        rg.condensed(g, 0, 1)
    with pytest.raises(rg.RicciError):
        rg.generate("nosuch")
