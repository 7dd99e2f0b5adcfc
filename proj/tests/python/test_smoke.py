"""Smoke tests for the python bindings."""

import cmath
import math

import pytest

import genfourier as gf


def test_psi_values():
    assert gf.psi(0.25) == -0.25
    assert gf.psi(1.75) == 0.25
    assert gf.psi(3.0) == -0.5


def test_progression_kernel_against_series():
    closed = gf.psi_rq_closed(0.3, 1, 2)
    assert abs(closed - (-0.25)) < 1e-14
    series = gf.psi_rq_series(0.3, 1, 2, 10000)
    assert abs(closed - series) < 1e-3
    assert abs(gf.c_rq(1, 4) - 0.125j) < 1e-14
    assert abs(gf.c_rq(1, 4) - gf.c_rq_series(1, 4, 100000)) < 1e-5


def test_ap_kernel_table():
    k = gf.ApKernel(1, 2)
    assert k.step_values == pytest.approx([-0.25, 0.25])
    assert abs(k.jump_values[1]) < 1e-15
    assert abs(k.c) < 1e-15


def test_catalog_and_model():
    cat = gf.builtin_catalog()
    step = cat["step_half"]
    assert step(0.2) == 0.0
    assert step(0.5) == 1.0
    assert step.left_limit(0.5) == 0.0
    assert step.jump_at(0.5) == 1.0
    assert step.is_step()
    with pytest.raises(ValueError):
        step.eval(2.0)


def test_stieltjes_engine():
    cat = gf.builtin_catalog()
    r = gf.rs_smooth(cat["identity"], cat["step_half"], 0.0, 1.0)
    assert r.value == pytest.approx(0.5, abs=1e-14)
    assert r.atom_part == pytest.approx(0.5, abs=1e-14)
    assert gf.euler_sum_rhs(cat["identity10"], 0.0, 5.5) == pytest.approx(15.0, abs=1e-10)
    assert gf.one_sided_via_stieltjes(cat["step_half"], 0.5, 0.25, 0.25, "left") == 0.0


def test_fourier_identities():
    cat = gf.builtin_catalog()
    iv = gf.Interval(0.0, 1.0)
    fc = gf.exp_coeffs(cat["identity"], iv, 32)
    assert abs(fc.coeff(0) - 0.5) < 1e-13
    assert abs(fc.coeff(1) - 1j / (2 * math.pi)) < 1e-13
    assert abs(gf.partial_sum(fc, 0.5, 32) - 0.5) < 1e-13

    rep = gf.theorem1_left(cat["square"], iv, 0.5)
    assert rep.lhs == pytest.approx(0.125)
    assert rep.residual < 1e-10

    v = gf.cesaro_mean(gf.exp_coeffs(cat["cosine"], iv, 200), 0.3, 200)
    assert abs(v - math.cos(0.6 * math.pi)) < 1e-2

    w = gf.local_series(cat["identity"], 0.5, 0.25, "left", 500, "cesaro")
    assert abs(w - 0.5) < 0.05


def test_finite_series():
    cat = gf.builtin_catalog()
    ff = gf.finite_coeffs(cat["parabola"], 2)
    assert abs(ff.b[0] - 0.125) < 1e-13
    assert abs(ff.b[1] + 0.125) < 1e-13
    assert abs(gf.reconstruct(ff, 1) - 0.25) < 1e-13
    ok, residual = gf.coefficient_independence_check(cat["parabola"], 12)
    assert ok and residual < 1e-10
    with pytest.raises(ValueError):
        gf.finite_coeffs(cat["identity"], 2)  # f(0) != f(1)


def test_catalog_text_round_trip():
    text = """
function tent
domain 0 1
bv 1
piece 0 0.5
expr 2 * u
deriv 2
piece 0.5 1
expr 2 - 2 * u
deriv -2
end
"""
    cat = gf.parse_catalog(text)
    tent = cat["tent"]
    assert tent(0.25) == pytest.approx(0.5)
    assert tent(0.5) == pytest.approx(1.0)
    assert tent.jump_at(0.5) == 0.0
