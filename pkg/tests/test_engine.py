"""Tests for the Jacobian intersection pipeline."""

from fractions import Fraction
from math import factorial

import pytest

import tevdeg.engine as engine
from tevdeg.closed_forms import alpha_coefficients, deg_T_insertions_closed
from tevdeg.engine import (
    HypParams,
    InsertionProfile,
    deg_T,
    integrate_theta,
    point_factor,
    pushforward_theta,
    step3_class,
    tev_hypersurface_engine,
)
from tevdeg.errors import InvariantBreach, ParameterError
from tevdeg.truncpoly import PolyRing, UniPoly


# -- parameter validation ------------------------------------------------------

def test_standard_params_derived_fields():
    p = HypParams.standard(0, 3, 3, 3)
    assert (p.n, p.t, p.N) == (3, 1, 20)
    p = HypParams.standard(1, 3, 3, 3)
    assert (p.n, p.t, p.N) == (2, 3, 15)


def test_standard_params_rejections():
    with pytest.raises(ParameterError):
        HypParams.standard(0, 4, 3, 3)  # n non-integral
    with pytest.raises(ParameterError):
        HypParams.standard(3, 3, 3, 3)  # n = 0
    with pytest.raises(ParameterError):
        HypParams.standard(2, 3, 3, 3)  # d < 2g
    with pytest.raises(ParameterError):
        HypParams.standard(0, 3, 2, 3)  # e < 3


def test_insertion_params_match_profile():
    p, prof = HypParams.with_insertions(0, 6, 3, 3, (2, 2, 2, 1, 1, 1))
    assert p.n == 6 and prof.codims() == (2, 2, 2, 3, 3, 3)
    with pytest.raises(ParameterError):
        HypParams.with_insertions(0, 6, 3, 3, (2, 2, 2, 1, 1))  # condition fails


# -- point_factor ---------------------------------------------------------------

def test_point_factor_examples():
    assert point_factor(3, 3, 1) == UniPoly.monomial("H", 6, 6)
    assert point_factor(3, 3, 2) == UniPoly.monomial("H", 5, 21)
    assert point_factor(3, 3, 4) == UniPoly.monomial("H", 3, 27)


def test_point_factor_is_alpha_monomial():
    for e in range(3, 7):
        for r in range(1, 9):
            alphas = alpha_coefficients(e, r)
            for ell in range(1, r + 2):
                mono = point_factor(e, r, ell)
                assert mono == UniPoly.monomial(
                    "H", r + 1 + e - ell, alphas.alpha(ell)
                )


def test_point_factor_rejects_out_of_range():
    with pytest.raises(ParameterError):
        point_factor(3, 3, 0)
    with pytest.raises(ParameterError):
        point_factor(3, 3, 5)


# -- step3_class ------------------------------------------------------------------

def _jac(g):
    return PolyRing("H", ("theta", g))


def test_step3_genus_zero():
    assert step3_class(3, 1, 0) == _jac(0).monomial({"H": 1}, 3)


def test_step3_genus_one():
    want = _jac(1).from_terms({(3, 0): 27, (2, 1): -81})
    assert step3_class(3, 3, 1) == want


def test_step3_genus_two_has_rational_term():
    want = _jac(2).from_terms({(4, 0): 81, (3, 1): -243, (2, 2): Fraction(729, 2)})
    assert step3_class(3, 4, 2) == want


def test_step3_rejects_rank_below_genus():
    with pytest.raises(ParameterError):
        step3_class(3, 1, 2)


# -- pushforward and integration ---------------------------------------------------

def test_pushforward_examples():
    p = HypParams.standard(1, 3, 3, 3)  # N = 15, r = 3
    ring = _jac(1)
    theta = PolyRing(("theta", 1))
    assert pushforward_theta(ring.monomial({"H": 14}, 1), p) == theta.const(1)
    assert pushforward_theta(ring.monomial({"H": 15}, 1), p) == theta.monomial(
        {"theta": 1}, 5
    )
    assert pushforward_theta(ring.monomial({"H": 13}, 1), p).is_zero()


def test_pushforward_respects_theta_cap():
    p = HypParams.standard(1, 3, 3, 3)
    ring = _jac(1)
    # theta * H^{N+1} would give theta^3; the cap at g = 1 kills it.
    c = ring.monomial({"H": p.N + 1, "theta": 1}, 1)
    assert pushforward_theta(c, p).is_zero()


def test_integrate_theta():
    theta2 = PolyRing(("theta", 2))
    assert integrate_theta(theta2.monomial({"theta": 2}, 1), 2) == 2
    assert integrate_theta(PolyRing(("theta", 0)).const(1), 0) == 1
    assert integrate_theta(theta2.monomial({"theta": 1}, 1), 2) == 0


# -- the full pipeline ---------------------------------------------------------------

def test_deg_T_contract_values():
    assert deg_T(HypParams.standard(0, 3, 3, 3)) == 648
    assert deg_T(HypParams.standard(1, 3, 3, 3)) == 1944
    p, prof = HypParams.with_insertions(0, 6, 3, 3, (2, 2, 2, 1, 1, 1))
    assert deg_T(p, prof) == 6001128


def test_engine_contract_values():
    assert tev_hypersurface_engine(HypParams.standard(0, 3, 3, 3)) == 24
    assert tev_hypersurface_engine(HypParams.standard(1, 3, 3, 3)) == 216
    assert tev_hypersurface_engine(HypParams.standard(0, 8, 3, 8)) == 768


def test_deg_T_positive_in_fano_range():
    for g, d, e, r in ((0, 3, 3, 3), (1, 4, 3, 4), (2, 10, 3, 5), (0, 12, 4, 6)):
        p = HypParams.standard(g, d, e, r)
        assert e <= r + 1
        assert deg_T(p) > 0


def test_deg_T_matches_insertion_closed_form_on_mixed_profiles():
    cases = [
        (0, 5, 3, 3, (2, 2, 1, 1, 1)),
        (1, 5, 3, 3, (2, 2, 1, 1)),
        (2, 7, 4, 4, (2, 1, 2)),
    ]
    for g, d, e, r, ell in cases:
        p, prof = HypParams.with_insertions(g, d, e, r, ell)
        assert deg_T(p, prof) == deg_T_insertions_closed(g, d, e, r, ell)


def test_deg_T_rejects_mismatched_profile():
    p = HypParams.standard(0, 3, 3, 3)
    with pytest.raises(ParameterError):
        deg_T(p, InsertionProfile(3, (1, 1)))  # wrong mark count
    with pytest.raises(ParameterError):
        deg_T(p, InsertionProfile(3, (2, 1, 1)))  # dimension condition fails


def test_pipeline_support_window():
    # Every term of the assembled class lies in H-degrees N-1 .. N-1+g.
    for g, d, e, r in ((0, 3, 3, 3), (1, 3, 3, 3), (2, 10, 3, 5), (3, 12, 4, 6)):
        p = HypParams.standard(g, d, e, r)
        coeff, hdeg = 1, 0
        for _ in range(p.n):
            mono = point_factor(e, r, 1)
            coeff *= mono.coeff(mono.degree())
            hdeg += mono.degree()
        ring = _jac(g)
        full = ring.monomial({"H": hdeg}, coeff) * step3_class(e, p.t, g)
        assert full.degrees_of("H") == list(range(p.N - 1, p.N - 1 + g + 1))


def test_exactness_and_divisibility_on_sample():
    for g, d, e, r in ((0, 6, 3, 3), (1, 5, 3, 5), (2, 12, 4, 6), (3, 14, 3, 7)):
        p = HypParams.standard(g, d, e, r)
        total = deg_T(p)  # internal integrality assertions must pass
        assert total % e**p.n == 0


# -- deliberately corrupted fixtures ---------------------------------------------------

def test_corrupted_coefficient_breaches_integrality(monkeypatch):
    original = point_factor

    def corrupted(e, r, ell_i):
        u = original(e, r, ell_i)
        return UniPoly(u.var, [c * Fraction(1, 1_000_000_007) for c in u.coeffs])

    monkeypatch.setattr(engine, "point_factor", corrupted)
    with pytest.raises(InvariantBreach, match="not an integer"):
        engine.deg_T(HypParams.standard(0, 3, 3, 3))


def test_corrupted_coefficient_breaches_divisibility(monkeypatch):
    original = point_factor

    def corrupted(e, r, ell_i):
        u = original(e, r, ell_i)
        return UniPoly.monomial(u.var, u.degree(), u.coeff(u.degree()) + 1)

    monkeypatch.setattr(engine, "point_factor", corrupted)
    with pytest.raises(InvariantBreach, match="not divisible"):
        engine.tev_hypersurface_engine(HypParams.standard(0, 3, 3, 3))


def test_corrupted_degree_breaches_support_window(monkeypatch):
    original = point_factor

    def corrupted(e, r, ell_i):
        u = original(e, r, ell_i)
        return UniPoly.monomial(u.var, u.degree() + 1, u.coeff(u.degree()))

    monkeypatch.setattr(engine, "point_factor", corrupted)
    with pytest.raises(InvariantBreach, match="H-degree"):
        engine.deg_T(HypParams.standard(0, 3, 3, 3))


# -- scale ------------------------------------------------------------------------------

def test_large_parameters_stay_exact():
    p = HypParams.standard(3, 300, 3, 10)
    assert p.n == 268
    value = tev_hypersurface_engine(p)
    want = factorial(2) ** p.n * 9**3 * 3**p.t
    assert value == want
