import cmath
import math

import numpy as np
import pytest

from app.errors import DivisionNearPole, DomainError
from app.jet import Jet, JetOp, current_pole_floor, jet_arith, jet_elementary, pole_floor
from app.jet.elementary import coth, divide, tan

# --- HELPERS ---

X0 = 0.3 + 0.2j


def derivatives_close(jet, expected, rel=1e-12):
    for got, want in zip(jet.derivatives(), expected):
        assert abs(got - want) <= rel * max(1.0, abs(want))


# --- COSTRUTTORI E ACCESSO ---


def test_variable_and_constant():
    x = Jet.variable(2.0)
    assert x.derivatives() == [2, 1, 0, 0, 0]
    assert Jet.constant(5).derivatives() == [5, 0, 0, 0, 0]


def test_too_many_coefficients():
    with pytest.raises(ValueError):
        Jet([1, 2, 3, 4, 5, 6])


def test_derivative_order_out_of_range():
    with pytest.raises(ValueError):
        Jet.variable(1.0).derivative(5)


# --- ARITMETICA ---


def test_polynomial_derivatives():
    # f(x) = x^4 in x0: 4x^3, 12x^2, 24x, 24
    x = Jet.variable(X0)
    derivatives_close(x**4, [X0**4, 4 * X0**3, 12 * X0**2, 24 * X0, 24])


def test_truncation_at_order_four():
    x = Jet.variable(0.0)
    assert (x**5).allclose(Jet.constant(0))


@pytest.mark.parametrize("op", list(JetOp))
def test_jet_arith_matches_operators(op):
    a = Jet.variable(X0) * 3 + 1
    b = Jet.variable(X0) ** 2 + 2
    expected = {
        JetOp.ADD: a + b,
        JetOp.SUB: a - b,
        JetOp.MUL: a * b,
        JetOp.DIV: a / b,
    }[op]
    assert jet_arith(a, b, op).allclose(expected)
    assert jet_arith(a, b, op.value).allclose(expected)


def test_division_is_inverse_of_product():
    a = Jet([1.5, -2, 0.5j, 3, 1])
    b = Jet([2 - 1j, 0.25, 1, -1, 0.5])
    assert ((a / b) * b).allclose(a)


def test_reciprocal_derivatives():
    # 1/x: -1/x^2, 2/x^3, -6/x^4, 24/x^5
    r = 1 / Jet.variable(X0)
    derivatives_close(r, [1 / X0, -1 / X0**2, 2 / X0**3, -6 / X0**4, 24 / X0**5])


def test_division_series_example():
    # (1 + x)/(1 - x) = 1 + 2x + 2x^2 + ...
    assert (Jet([1, 1, 0, 0, 0]) / Jet([1, -1, 0, 0, 0])).allclose([1, 2, 2, 2, 2])



def test_division_near_pole():
    with pytest.raises(DivisionNearPole):
        Jet.constant(1) / Jet.variable(1e-14)


def test_pole_floor_is_scoped():
    default = current_pole_floor()
    with pole_floor(1e-3) as floor:
        assert current_pole_floor() == floor == 1e-3
        with pytest.raises(DivisionNearPole):
            Jet.constant(1) / Jet.variable(1e-4)
    assert current_pole_floor() == default
    assert (Jet.constant(1) / Jet.variable(1e-4)).is_finite()


# --- FUNZIONI ELEMENTARI ---


def test_exp_derivatives_equal_value():
    e = jet_elementary("exp", Jet.variable(X0))
    derivatives_close(e, [cmath.exp(X0)] * 5)


def test_tanh_derivatives():
    t = cmath.tanh(X0)
    s2 = 1 - t * t
    expected = [t, s2, -2 * t * s2, -2 * s2 * (1 - 3 * t * t), 8 * t * s2 * (2 - 3 * t * t)]
    derivatives_close(jet_elementary("tanh", Jet.variable(X0)), expected)


@pytest.mark.parametrize(
    "name, first_derivative",
    [
        ("ln", lambda z: 1 / z),
        ("sqrt", lambda z: 0.5 / cmath.sqrt(z)),
        ("coth", lambda z: -1 / cmath.sinh(z) ** 2),
        ("sech", lambda z: -cmath.tanh(z) / cmath.cosh(z)),
        ("csch", lambda z: -cmath.cosh(z) / cmath.sinh(z) ** 2),
        ("tan", lambda z: 1 / cmath.cos(z) ** 2),
    ],
)
def test_first_derivatives(name, first_derivative):
    jet = jet_elementary(name, Jet.variable(X0))
    assert abs(jet.derivative(1) - first_derivative(X0)) < 1e-12


def test_composition_chain_rule():
    # d/dx exp(2x) = 2 exp(2x), quarta derivata 16 exp(2x)
    jet = jet_elementary("exp", 2 * Jet.variable(X0))
    assert abs(jet.derivative(4) - 16 * cmath.exp(2 * X0)) < 1e-11


def test_sech_tanh_pythagorean_on_jets():
    x = Jet.variable(1.7)
    s = jet_elementary("sech", x)
    t = jet_elementary("tanh", x)
    assert (s * s + t * t).allclose(Jet.constant(1), atol=1e-13)


@pytest.mark.parametrize("x0", [X0, 1.7])
def test_reciprocal_hyperbolic_identities_on_jets(x0):
    x = Jet.variable(x0)
    ep, em = jet_elementary("exp", x), jet_elementary("exp", -x)
    cosh, sinh = (ep + em) * 0.5, (ep - em) * 0.5
    assert jet_elementary("sech", x).allclose(1 / cosh)
    assert jet_elementary("csch", x).allclose(1 / sinh)
    assert jet_elementary("coth", x).allclose(1 / jet_elementary("tanh", x))


@pytest.mark.parametrize("name, x0", [("exp", 0.3), ("tanh", 0.0)])
def test_taylor_prediction_error_is_fifth_order(name, x0):
    c = jet_elementary(name, Jet.variable(x0)).c
    exact = {"exp": cmath.exp, "tanh": cmath.tanh}[name]

    def error(h):
        predicted = sum(c[k] * h**k for k in range(5))
        return abs(exact(x0 + h) - predicted)

    assert error(0.1) / error(0.05) == pytest.approx(32, rel=0.1)


def test_tanh_derivatives_match_central_differences():
    # stencil centrato di ordine 8 sulla derivata (k-1)-esima
    weights = np.array([1 / 280, -4 / 105, 1 / 5, -4 / 5, 0, 4 / 5, -1 / 5, 4 / 105, -1 / 280])
    h = 1e-2
    for x0 in np.linspace(-3.0, 3.0, 13):
        jet = jet_elementary("tanh", Jet.variable(x0))
        around = [jet_elementary("tanh", Jet.variable(x0 + j * h)) for j in range(-4, 5)]
        for k in range(1, 5):
            fd = sum(w * a.derivative(k - 1) for w, a in zip(weights, around)) / h
            assert abs(fd - jet.derivative(k)) <= 1e-6 * max(1.0, abs(jet.derivative(k)))



def test_sech_large_argument_is_finite():
    assert jet_elementary("sech", Jet.variable(800.0)).is_finite()


@pytest.mark.parametrize(
    "name, x0",
    [
        ("ln", 0.0),
        ("ln", -1.0),
        ("sqrt", -4.0),
        ("coth", 0.0),
        ("csch", 0.0),
        ("tan", math.pi / 2),
    ],
)
def test_domain_errors(name, x0):
    with pytest.raises(DomainError) as excinfo:
        jet_elementary(name, Jet.variable(x0))
    assert excinfo.value.function == name


def test_unknown_elementary_function():
    with pytest.raises(KeyError):
        jet_elementary("erf", Jet.variable(0.0))


# --- ARRAY ---


def test_array_dispatch_masks_poles():
    xs = np.array([0.0, 1.0], dtype=complex)
    values = coth(xs)
    assert np.isnan(values[0])
    assert values[1] == pytest.approx(1 / math.tanh(1.0))

    values = tan(np.array([math.pi / 2, 0.5], dtype=complex))
    assert np.isnan(values[0])

    values = divide(np.array([1.0, 1.0]), np.array([0.0, 2.0]))
    assert np.isnan(values[0]) and values[1] == 0.5
