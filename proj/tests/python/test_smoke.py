import math

import numpy as np
import pytest

import cauchywell as cw


def test_special_functions():
    assert cw.si(math.pi) == pytest.approx(1.85193705198246617, abs=1e-14)
    assert cw.ci(1.0) == pytest.approx(0.337403922900968135, abs=1e-14)
    xs = np.array([0.5, 2.0, 30.0])
    assert np.allclose(cw.si(-xs), -cw.si(xs), rtol=0, atol=0)
    with pytest.raises(ValueError):
        cw.ci(0.0)


def test_operator_image():
    assert cw.apply_even_basis(0, 0.0) == pytest.approx(1.37076216815448848, abs=1e-13)
    assert cw.apply_odd_basis(1, 0.0) == pytest.approx(0.0, abs=1e-14)
    with pytest.raises(ValueError):
        cw.apply_even_basis(0, 1.0)


def test_elements_and_blocks():
    assert cw.element("even", 0, 0) == pytest.approx(1.21531728, abs=1e-8)
    assert cw.element("even", 1, 0) == pytest.approx(0.2773259, abs=1e-7)
    g = cw.assemble("even", 3)
    assert g.shape == (3, 3)
    assert np.array_equal(g, g.T)
    assert g[2, 1] == pytest.approx(0.3088509, abs=1e-7)


def test_eigensystem():
    values, vectors = cw.eigh(cw.assemble("even", 2))
    assert values == pytest.approx([1.191256, 4.411727], abs=1e-6)
    assert vectors[0] == pytest.approx([0.996257, -0.086437], abs=1e-6)
    g = cw.assemble("odd", 40)
    values, vectors = cw.eigh(g)
    assert np.allclose(vectors @ vectors.T, np.eye(40), atol=1e-12)
    assert np.allclose(np.sort(np.linalg.eigvalsh(g)), values, atol=1e-12)


def test_spectrum_and_eigenfunctions():
    levels = cw.spectrum(30, 6)
    assert [lv["parity"] for lv in levels] == ["even", "odd"] * 3
    assert levels[0]["energy"] == pytest.approx(1.160505, abs=1e-6)
    x, psi = cw.eigenfunction(30, 1, 201)
    assert psi[0] == 0.0 and psi[-1] == 0.0
    assert np.all(psi[1:-1] > 0)
    assert np.max(np.abs(psi - cw.ground_state_approximant(x))) < 0.05


def test_disproof():
    grid = np.linspace(-0.99, 0.99, 199)
    e, res = cw.disprove("cos-half", grid)
    assert e == pytest.approx(1.21531728, abs=1e-8)
    assert res.max() > 0.05
