"""Smoke tests for the compiled module and the convenience wrapper."""

from fractions import Fraction

import pytest

import apery


GENS = [[0, 2], [2, 1], [0, 3], [1, 2]]


def test_semigroup_queries():
    s = apery.Semigroup(GENS)
    assert s.dimension == 2
    assert s.codimension == 2
    assert s.extremal_rays == [(0, 2), (2, 1)]
    assert s.generators[0] == (0, 2)
    assert s.contains((1, 5))
    assert not s.contains((1, 0))
    assert s.order((1, 5)) == 2
    assert s.degree((1, 2)) == Fraction(5, 4)
    assert sum(s.maximal_expression((1, 5))) == 2
    assert not s.is_homogeneous()


def test_semigroup_handles_python_big_integers():
    n = 10**20
    s = apery.Semigroup([[n, 1], [1, n]])
    assert s.codimension == 0
    assert s.contains((n + 1, n + 1))
    assert not s.contains((n + 1, n))
    assert s.order((2 * n + 2, 2 * n + 2)) == 4


def test_module_level_invariants():
    s = apery.Semigroup(GENS)
    assert apery.has_monomial_reduction(s)
    assert apery.reduction_number(s) == 2
    assert apery.is_cohen_macaulay(s)
    assert apery.is_gorenstein(s)
    assert apery.gr_is_cohen_macaulay(s)
    assert apery.gr_is_gorenstein(s)
    assert not apery.is_minimal_multiplicity(s)
    assert apery.regularity(s) == 2
    assert apery.betas_and_d_s(s) == ([1, 2, 1], 2)

    m = apery.multiplicity(s)
    assert m["value"] == 4
    assert m["method"] == "apery_cm"
    assert m["certified"] is True


def test_apery_set_structure():
    elements = apery.apery_set(apery.Semigroup(GENS))
    assert [e["value"] for e in elements] == [(0, 0), (0, 3), (1, 2), (1, 5)]
    assert [e["order"] for e in elements] == [0, 1, 1, 2]
    assert elements[3]["rem"] == (1, 1)


def test_analyze_returns_schema_dict():
    report = apery.analyze(GENS)
    assert list(report)[:6] == [
        "generators", "extremal_rays", "dimension", "codimension", "degrees", "homogeneous",
    ]
    assert report["degrees"] == ["3/2", "5/4"]
    assert report["multiplicity"]["value"] == 4
    assert report["dim2"]["group_index"] == 1
    assert report["graded"]["regularity"] == 2


def test_parse_generators_formats():
    assert apery.parse_generators("3,1;0,4;2,2") == [(3, 1), (0, 4), (2, 2)]
    assert apery.parse_generators('{"generators": [[3,1],[0,4]]}') == [(3, 1), (0, 4)]
    with pytest.raises(apery.Error):
        apery.parse_generators("not generators")


def test_errors_surface_as_the_package_exception():
    with pytest.raises(apery.Error):
        apery.Semigroup([[2, 0], [0, 2], [2, 2]])
    with pytest.raises(apery.Error):
        apery.reduction_number(apery.Semigroup([[5, 3], [3, 5], [2, 2]]))
    with pytest.raises(apery.Error):
        apery.Semigroup(GENS).order((1, 0))
