"""Instanton predicates, stability, curves, Ext formulas, existence."""

import pytest

from scrollcalc import chow
from scrollcalc import instanton as inst
from scrollcalc.instanton import ExistenceReport, InstantonParams


def test_charge():
    p = InstantonParams(2, 3, 1)
    assert p.charge == 10
    for e in range(6):
        for a in range(6):
            for b in range(6):
                p = InstantonParams(e, a, b)
                assert p.charge - InstantonParams(e, a, b - 1).charge == 1
                assert p.charge - InstantonParams(e, a - 1, b).charge == e + 1
    with pytest.raises(ValueError):
        InstantonParams(-1, 0, 0)


def test_ulrich_twist():
    assert inst.is_ulrich_twist(InstantonParams(0, 0, 1))
    assert inst.is_ulrich_twist(InstantonParams(1, 0, 2))
    assert not inst.is_ulrich_twist(InstantonParams(0, 0, 0))
    # cross-module identity with the chi closed form
    for e in range(6):
        for a in range(9):
            for b in range(9):
                assert inst.is_ulrich_twist(InstantonParams(e, a, b)) == (
                    chow.chi_instanton(e, a, b, 0, 0) == 0
                )


def test_forced_vanishing_regions():
    assert inst.forced_vanishing(3, inst.BUNDLE, 0, -1, 3) == "h0-bundle"
    assert inst.forced_vanishing(3, inst.BUNDLE, 2, 0, 0) == "h2-bundle"
    assert inst.forced_vanishing(3, inst.BUNDLE, 1, 5, 5) is None
    assert inst.forced_vanishing(3, inst.BUNDLE, 0, 0, -2) == "h0-bundle"
    assert inst.forced_vanishing(3, inst.BUNDLE, 3, 0, -5) == "h3-bundle"
    assert inst.forced_vanishing(3, inst.BUNDLE, 3, -2, -2) == "h3-bundle"
    assert inst.forced_vanishing(3, inst.BUNDLE, 0, -1, 4) is None  # b > e
    for i in range(4):
        assert inst.forced_vanishing(3, inst.BUNDLE, i, -1, -1) == "minus-h"
    assert inst.forced_vanishing(2, inst.OMEGA_TENSOR, 0, -1, 3) == "h0-omega"
    assert inst.forced_vanishing(2, inst.OMEGA_TENSOR, 3, 0, -2) == "h3-omega"
    assert inst.forced_vanishing(2, inst.OMEGA_TENSOR, 2, 0, 1) == "h2-omega"
    assert inst.forced_vanishing(2, inst.OMEGA_TENSOR, 2, 0, 0) is None
    with pytest.raises(ValueError):
        inst.forced_vanishing(2, "nope", 0, 0, 0)


def test_divisor_predicates():
    for e in range(6):
        assert inst.divisor_globally_generated(e, 1, 0)
        assert inst.smooth_integral_class(e, 1, 0)
        assert not inst.divisor_globally_generated(e, 1, -e) or e == 0
        assert inst.smooth_integral_class(e, 1, -e)
        assert not inst.divisor_globally_generated(e, -1, 5)
        assert not inst.smooth_integral_class(e, -1, 5)


def test_earnest_criterion():
    assert inst.earnest_criterion(0)
    assert not inst.earnest_criterion(1)
    with pytest.raises(ValueError):
        inst.earnest_criterion(-1)


def test_stability_region_boundary_cases():
    # (-2, e) always passes the non-strict test
    for e in range(7):
        assert (-2, e) in inst.stability_test_region(e, (-2, -2, e, e))
    # (0, 0) passes only for e <= 1
    for e in range(7):
        inside = bool(inst.stability_test_region(e, (0, 0, 0, 0)))
        assert inside == (e <= 1)
    # e = 0: (0,0) also survives the strict test (delta = 0 < 1 = -mu)
    assert inst.stability_test_region(0, (0, 0, 0, 0), strict=True) == [(0, 0)]
    # strict drops the boundary: at e = 1, delta(0,0) = 0 = -mu
    assert inst.stability_test_region(1, (0, 0, 0, 0), strict=True) == []


def test_stability_region_against_chow_degrees():
    for e in range(7):
        h2 = chow.hyperplane(e) ** 2
        mu2 = (chow.divisor(e, 0, e - 1) * h2).degree()
        region = set(inst.stability_test_region(e, (-10, 10, -10, 10)))
        for a in range(-10, 11):
            for b in range(-10, 11):
                want = 2 * (chow.divisor(e, a, b) * h2).degree() <= -mu2
                assert ((a, b) in region) == want


def test_curve_info():
    ci = inst.curve_info(2, "xif")
    assert (ci.degree_H, ci.hilbert_dim) == (3, 5)
    assert ci.normal_bundle == (1, 2) and ci.h0_N == 5 and ci.h1_N == 0
    cl = inst.curve_info(4, "ff")
    assert (cl.degree_H, cl.hilbert_dim) == (1, 2)
    assert cl.normal_bundle == (0, 0) and cl.h0_N == 2
    with pytest.raises(ValueError):
        inst.curve_info(1, "hf")
    # chi(O_curve) = 1 via the Koszul resolution, for both classes
    for e in range(7):
        for cls in ("xif", "ff"):
            assert inst.chi_curve(e, cls) == 1 == inst.curve_info(e, cls).chi_O


def test_curve_degrees_from_intersection_numbers():
    for e in range(7):
        h = chow.hyperplane(e)
        assert (chow.ChowClass(e, xif=1) * h).degree() == e + 1
        assert (chow.ChowClass(e, ff=1) * h).degree() == 1
        # det of the normal bundle of the ruling curve restricts with degree e+1
        L = chow.divisor(e, 2, 1 - e)
        assert (L * chow.ChowClass(e, xif=1)).degree() == e + 1


def test_generic_line_splitting_recorded():
    assert inst.GENERIC_LINE_SPLITTING == (0, 0)


def test_serre_construction():
    for e in range(5):
        for alpha in range(8):
            out = inst.serre_construction(e, alpha)
            assert out.chern.c1 == chow.divisor(e, 0, e - 1)
            assert out.chern.c2 == chow.ChowClass(e, xif=alpha)
            assert out.chern.c3 == chow.zero(e)
            assert out.in_theorem_range == (alpha > e)
    out = inst.serre_construction(0, 1)
    assert out.chern.c1 == chow.divisor(0, 0, -1)


def test_ext_dimensions():
    assert inst.ext_dimensions(4, 0, 0).ext2 == 1
    assert inst.ext_dimensions(6, 0, 0).ext2 == 6
    for e in range(4):
        assert inst.ext_dimensions(e, 3, 2).ext2 == 0
    d = inst.ext_dimensions(2, 3, 1)
    assert d.ext0 == 1 and d.ext3 == 0
    assert d.ext1_minus_ext2 == 10 * 3 + 4 - 1 - 3


def test_ext_grr_cross_check():
    for e in range(7):
        for alpha in range(11):
            for beta in range(11):
                assert (
                    inst.ext_dimensions(e, alpha, beta).ext1_minus_ext2
                    == 1 - inst.chi_end_grr(e, alpha, beta)
                )


def test_elementary_modification():
    p, ext1 = InstantonParams(1, 2, 0), 13
    p1, e1 = inst.elementary_modification(p, ext1)
    assert (p1.alpha, p1.beta, e1) == (2, 1, 17)
    assert p1.charge == p.charge + 1
    # iterating n times adds 4n
    q, v = p, ext1
    for n in range(1, 8):
        q, v = inst.elementary_modification(q, v)
        assert v == ext1 + 4 * n and q.beta == n


def test_pullback_moduli_dims_agree():
    for e in range(9):
        for beta in range(-3, 25):
            assert inst.pullback_moduli_dim(e, beta) == inst.plane_moduli_dim(e, beta)
    assert inst.min_pullback_beta(2) == 4
    assert inst.stated_pullback_beta_bound(2) == 2


def test_existence_report_branches():
    r = inst.existence_report(InstantonParams(1, 2, 0))
    assert r.status == inst.EXISTS and r.ext1 == 13
    assert r.ext2 == 0 and r.ext3 == 0 and r.earnest is True
    assert r.route == inst.ROUTE_SERRE

    r = inst.existence_report(InstantonParams(2, 0, 4))
    assert r.status == inst.EXISTS_PULLBACK and r.ext1 == 12
    assert r.earnest is True and r.route == inst.ROUTE_PULLBACK

    assert inst.existence_report(InstantonParams(5, 6, 0)).status == inst.UNKNOWN
    assert inst.existence_report(InstantonParams(2, 2, 0)).status == inst.UNKNOWN
    assert inst.existence_report(InstantonParams(1, 2, -1)).status == inst.UNKNOWN
    assert inst.existence_report(InstantonParams(0, -1, 3)).status == inst.INADMISSIBLE
    # pullback branch applies to every e
    r = inst.existence_report(InstantonParams(6, 0, 25))
    assert r.status == inst.EXISTS_PULLBACK
    assert r.ext1 == 4 * 25 + 12 - 36 - 4


def test_existence_report_serialization():
    for p in (
        InstantonParams(1, 2, 0),
        InstantonParams(2, 0, 4),
        InstantonParams(5, 6, 0),
        InstantonParams(0, -2, 0),
    ):
        r = inst.existence_report(p)
        assert ExistenceReport.from_dict(r.to_dict()) == r
