from fractions import Fraction as F

import numpy as np
import pytest

from app.catalog import build, resolve
from app.catalog.auxiliary import AuxSet
from app.errors import GateViolated, SingularPoint
from app.verify import GridSpec, aux_residual, ode_residual, pde_residual
from app.verify.residuals import ode_residual_at, pde_residual_at, relative

# --- HELPERS ---


def xi_points(count=50, seed=0):
    return np.random.default_rng(seed).uniform(-3.0, 3.0, count)


# --- NORMALIZZAZIONE ---


def test_relative_of_all_zero_terms_is_zero():
    assert relative([0j, 0j, 0j]) == 0


def test_relative_scales_by_largest_term():
    assert relative([2.0, -1.0, -1.0 + 1e-6]) == pytest.approx(1e-6 / 2)


# --- EQUAZIONE DEL MOTO ---


def test_case1_pde_residual_on_grid(case1_inputs):
    worst = max(
        abs(pde_residual("sg.case1.tanh.plus", case1_inputs, float(x), 1.0))
        for x in np.linspace(-5.0, 5.0, 41)
    )
    assert worst < 1e-9


def test_case13_pde_residual(inputs_for):
    inputs = inputs_for("mefm.case13.exp.plus")
    worst = max(
        abs(pde_residual("mefm.case13.exp.plus", inputs, float(x), t))
        for x in np.linspace(0.0, 5.0, 21)
        for t in (0.0, 1.0)
    )
    assert worst < 1e-9


def test_constant_profile_has_exact_zero_residual(inputs_for):
    inputs = inputs_for("mefm.case15.rational.plus")
    assert pde_residual("mefm.case15.rational.plus", inputs, 1.3, -0.4) == 0
    # u(3*a2*eps*u + lambda^2 - a1) = 0
    assert abs(ode_residual("mefm.case15.rational.plus", inputs, 0.5)) < 1e-14


# --- ODE RIDOTTA ---


@pytest.mark.parametrize("mu", [F(1, 4), F(3, 4), F(2)])
def test_case2_ode_residual(inputs_for, mu):
    inputs = inputs_for("sg.case2.tanh.plus", mu=mu)
    built = build(resolve("sg.case2.tanh.plus"), inputs)
    scale = abs(built.coefficients["A2"])
    worst = max(abs(ode_residual("sg.case2.tanh.plus", inputs, float(xi))) for xi in xi_points())
    assert worst < 1e-10 * max(1.0, scale)


def test_ode_residual_near_pole(case1_inputs):
    with pytest.raises(SingularPoint):
        ode_residual("sg.case1.coth.plus", case1_inputs, 1e-13)


# --- COERENZA TRA I RESIDUI ---


@pytest.mark.parametrize("family", ["sg.case2.tanh.plus", "sg.case5.coth.plus", "mefm.case13.exp.plus"])
def test_small_ode_residual_implies_small_pde_residual(inputs_for, family):
    tol = GridSpec().tolerance
    built = build(resolve(family), inputs_for(family))
    lam, mu = built.lam.real, built.mu.real
    for xi in xi_points(count=20, seed=4):
        for t in (0.0, 1.5):
            x = xi / mu + lam * t
            if abs(ode_residual_at(built, complex(xi), relative_norm=True)) < tol:
                assert abs(pde_residual_at(built, x, t)) < 10 * tol


def test_aux_residual_is_gate_symmetric():
    # |tau^2 - 4*sigma| = 5 per entrambi i Set
    set1, set2 = (F(3), F(1)), (F(1), F(3, 2))
    for xi in np.linspace(-1.2, 1.2, 25):
        assert aux_residual(AuxSet.SET1, *set1, 0, float(xi)) < 1e-10
        assert aux_residual(AuxSet.SET2, *set2, 0, float(xi)) < 1e-10
    with pytest.raises(GateViolated):
        aux_residual(AuxSet.SET1, *set2, 0, 0.5)
    with pytest.raises(GateViolated):
        aux_residual(AuxSet.SET2, *set1, 0, 0.5)
