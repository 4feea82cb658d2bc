import cmath
import math
from fractions import Fraction as F

import numpy as np
import pytest

from app.catalog import (
    LocusKind,
    build,
    coefficient_set,
    evaluate,
    evaluate_grid,
    evaluate_jet,
    list_families,
    nearest_distance,
    resolve,
    singularities,
)
from app.errors import (
    ConstraintViolated,
    DegenerateDenominator,
    GateViolated,
    SingularPoint,
    UnknownFamily,
)
from app.models.family import Classification, FamilyId, FamilyInputs, Method
from app.verify.residuals import ode_residual, printed_ode_residual_at

# --- HELPERS ---


def case1_oracle(material, mu, x, t):
    """
    Caso 1 (tanh, ramo +) in aritmetica razionale esatta fino all'ultimo
    passaggio: A2 e lambda^2 dalle equazioni dei coefficienti, poi
    Phi = A2 * (tanh^2(xi) - 1/3).
    """
    D = material.delta * material.n1**2 * mu**2
    K = material.alpha1 * material.beta1 - 1
    W = 1 + 2 * D
    A2 = D * K / (material.alpha2 * material.beta1 * material.epsilon * W)
    lam_sq = (material.alpha1 * material.beta1 + 2 * D) / (material.beta1 * W)
    xi = float(mu) * (x - math.sqrt(lam_sq) * t)
    return float(A2) * (math.tanh(xi) ** 2 - 1 / 3)


# --- ELENCO ---


def test_registry_has_54_entries():
    entries = list_families()
    assert len(entries) == 54
    assert sum(e.family.method is Method.SINE_GORDON for e in entries) == 24
    assert len({str(e.family) for e in entries}) == 54


def test_entries_are_sorted_canonically():
    keys = [e.family.sort_key() for e in list_families()]
    assert keys == sorted(keys)
    assert str(list_families()[0].family) == "sg.case1.tanh.plus"


@pytest.mark.parametrize(
    "family, classification",
    [
        ("sg.case1.tanh.plus", Classification.TOPOLOGICAL),
        ("sg.case2.coth.minus", Classification.SINGULAR),
        ("sg.case4.tanh.plus", Classification.COMPOUND_TOPOLOGICAL_NONTOPOLOGICAL),
        ("sg.case5.coth.plus", Classification.COMPOUND_SINGULAR),
        ("mefm.case7.tanh.plus", Classification.SOLITON_LIKE),
        ("mefm.case7.tan.minus", Classification.SINGULAR_PERIODIC),
        ("mefm.case13.exp.plus", Classification.EXPONENTIAL),
        ("mefm.case15.rational.plus", Classification.RATIONAL),
    ],
)
def test_classification(family, classification):
    entry = next(e for e in list_families() if str(e.family) == family)
    assert entry.classification is classification
    assert entry.to_dict()["id"] == family


@pytest.mark.parametrize(
    "text",
    ["sg.case7.tanh.plus", "mefm.case13.tan.plus", "sg.case1.exp.plus", "mefm.case16.exp.plus", "bogus"],
)
def test_unknown_family(text):
    with pytest.raises(UnknownFamily):
        resolve(text)


def test_resolve_round_trip():
    fid = resolve("MEFM.case9.Rational.minus")
    assert isinstance(fid, FamilyId)
    assert str(fid) == "mefm.case9.rational.minus"


# --- COEFFICIENTI ---


def test_case1_coefficient_structure(case1_inputs):
    c = coefficient_set("sg.case1.tanh.plus", case1_inputs)
    assert c["A1"] == c["B1"] == c["B2"] == 0
    assert abs(c["A0"] + c["A2"] / 3) <= 1e-15 * abs(c["A2"])


@pytest.mark.parametrize("mu", [F(1, 4), F(3, 2), F(7)])
def test_case2_a0_is_minus_a2(material_a, mu):
    c = coefficient_set("sg.case2.tanh.plus", FamilyInputs(material=material_a, mu=mu))
    assert abs(c["A0"] + c["A2"]) <= 1e-15 * abs(c["A2"])


def test_case13_factorization(inputs_for):
    inputs = inputs_for("mefm.case13.exp.plus", Q0=F(1), Q1=F(3))
    c = coefficient_set("mefm.case13.exp.plus", inputs)
    tau = float(inputs.tau)
    a = c["P3"] / 3
    assert c["P0"] == 0
    assert c["P1"] == pytest.approx(a * tau * 1)
    assert c["P2"] == pytest.approx(a * (1 + tau * 3))


def test_branch_flips_dependent_lambda(case1_inputs):
    plus = coefficient_set("sg.case1.tanh.plus", case1_inputs)
    minus = coefficient_set("sg.case1.tanh.minus", case1_inputs)
    assert minus.lam == -plus.lam
    assert plus.lam.imag == 0 and plus.lam.real > 0


@pytest.mark.parametrize("case_no", [11, 12])
def test_case11_12_branch_flips_lambda_and_mu(inputs_for, case_no):
    plus_id, minus_id = f"mefm.case{case_no}.tanh.plus", f"mefm.case{case_no}.tanh.minus"
    inputs = inputs_for(plus_id)
    plus, minus = coefficient_set(plus_id, inputs), coefficient_set(minus_id, inputs)
    assert plus.lam.real > 0
    assert minus.lam == pytest.approx(-plus.lam)
    assert minus.mu == pytest.approx(-plus.mu)
    # onda speculare: u_minus(x, t) = u_plus(-x, t)
    for x, t in [(0.8, 0.3), (-1.5, 1.0)]:
        assert evaluate(minus_id, inputs, x, t) == pytest.approx(evaluate(plus_id, inputs, -x, t), rel=1e-12)


def test_coefficient_set_to_dict(case1_inputs):
    data = coefficient_set("sg.case1.tanh.plus", case1_inputs).to_dict()
    assert set(data) >= {"A0", "A2", "lambda", "mu"}
    assert data["mu"] == {"re": 0.25, "im": 0.0}


# --- VALUTAZIONE ---


def test_case1_matches_exact_oracle(material_a, case1_inputs):
    expected = case1_oracle(material_a, F(1, 4), 1.0, 1.0)
    value = evaluate("sg.case1.tanh.plus", case1_inputs, 1.0, 1.0)
    assert abs(value - expected) <= 1e-12 * abs(expected)


def test_case1_at_xi_zero_is_a0(case1_inputs):
    built = build(resolve("sg.case1.tanh.plus"), case1_inputs)
    lam = built.lam.real
    value = evaluate("sg.case1.tanh.plus", case1_inputs, lam * 2.0, 2.0)
    assert value == pytest.approx(built.coefficients["A0"], rel=1e-12)


def test_case1_jet_is_even_at_xi_zero(case1_inputs):
    built = build(resolve("sg.case1.tanh.plus"), case1_inputs)
    jet = evaluate_jet("sg.case1.tanh.plus", case1_inputs, built.lam.real, 1.0)
    scale = abs(jet.derivative(2))
    assert abs(jet.derivative(1)) <= 1e-12 * scale
    assert abs(jet.derivative(3)) <= 1e-12 * scale


@pytest.mark.parametrize(
    "family",
    ["sg.case1.tanh.plus", "sg.case3.coth.minus", "mefm.case7.tanh.plus", "mefm.case13.exp.minus"],
)
def test_jet_value_matches_evaluate(inputs_for, family):
    inputs = inputs_for(family)
    value = evaluate(family, inputs, 0.8, 0.3)
    jet = evaluate_jet(family, inputs, 0.8, 0.3)
    assert abs(jet.value - value) <= 1e-12 * max(1.0, abs(value))


def test_branch_symmetry_case1(case1_inputs):
    for x in (0.5, 1.7, 4.0):
        a = evaluate("sg.case1.tanh.plus", case1_inputs, x, 0.0)
        b = evaluate("sg.case1.tanh.plus", case1_inputs, -x, 0.0)
        assert abs(a - b) <= 1e-12 * abs(a)


def test_traveling_wave_invariance(inputs_for):
    inputs = inputs_for("sg.case2.tanh.plus")
    built = build(resolve("sg.case2.tanh.plus"), inputs)
    shift = 0.9
    for x, t in [(0.0, 0.0), (1.5, -0.5), (-2.0, 1.0)]:
        a = evaluate("sg.case2.tanh.plus", inputs, x, t)
        b = evaluate("sg.case2.tanh.plus", inputs, x + built.lam * shift, t + shift)
        assert abs(a - b) <= 1e-10 * max(1.0, abs(a))


def test_case15_is_constant(inputs_for, material_a):
    inputs = inputs_for("mefm.case15.rational.plus")
    lam = inputs.lam
    expected = -float((lam**2 - material_a.alpha1) / (3 * material_a.alpha2 * material_a.epsilon))
    for x, t in [(0.0, 0.0), (3.0, -1.0), (-7.5, 2.0)]:
        assert evaluate("mefm.case15.rational.plus", inputs, x, t) == pytest.approx(expected, rel=1e-12)
    jet = evaluate_jet("mefm.case15.rational.minus", inputs, 1.0, 1.0)
    assert jet.value == pytest.approx(expected, rel=1e-12)
    assert all(abs(d) < 1e-15 for d in jet.derivatives()[1:])


def test_case13_gauge_independence(inputs_for):
    base = inputs_for("mefm.case13.exp.plus")
    for x, t in [(0.3, 0.1), (2.0, 0.5), (-1.0, 1.0)]:
        a = evaluate("mefm.case13.exp.plus", base, x, t)
        b = evaluate("mefm.case13.exp.plus", base.with_values(Q0=F(-1, 2), Q1=F(5)), x, t)
        assert abs(a - b) <= 1e-12 * max(1.0, abs(a))


def test_evaluate_grid_masks_poles(case1_inputs):
    x = np.linspace(-1.0, 1.0, 5)
    values = evaluate_grid("sg.case1.coth.plus", case1_inputs, x, 0.0)
    assert values.shape == (5,)
    assert np.isnan(values[2])
    assert np.all(np.isfinite(values[[0, 1, 3, 4]]))

    surface = evaluate_grid("sg.case1.tanh.plus", case1_inputs, x[:, None], np.array([0.0, 1.0])[None, :])
    assert surface.shape == (5, 2)
    assert surface[1, 1] == pytest.approx(evaluate("sg.case1.tanh.plus", case1_inputs, x[1], 1.0))


# --- SINGOLARITÀ ---


def test_case1_coth_pole_at_origin(case1_inputs):
    loci = singularities("sg.case1.coth.plus", case1_inputs)
    assert nearest_distance(loci, 0j) == 0
    assert nearest_distance(loci, 1j * math.pi) == pytest.approx(0, abs=1e-15)
    with pytest.raises(SingularPoint):
        ode_residual("sg.case1.coth.plus", case1_inputs, 1e-13)


def test_case1_coth_evaluate_on_pole(case1_inputs):
    built = build(resolve("sg.case1.coth.plus"), case1_inputs)
    with pytest.raises(SingularPoint):
        evaluate("sg.case1.coth.plus", case1_inputs, built.lam.real, 1.0)


def test_case1_tanh_has_only_complex_poles(case1_inputs):
    loci = singularities("sg.case1.tanh.plus", case1_inputs)
    assert nearest_distance(loci, 0j) == pytest.approx(math.pi / 2)


@pytest.mark.parametrize("family", ["sg.case4.coth.plus", "sg.case4.coth.minus", "sg.case5.coth.plus"])
def test_coth_pole_at_origin_is_removable(inputs_for, family):
    # B2 = +i*A2: u = A0 + A2*cosh/(cosh + 1), regolare in xi = 0
    inputs = inputs_for(family)
    built = build(resolve(family), inputs)
    c = built.coefficients.values
    loci = singularities(family, inputs)
    assert nearest_distance(loci, 0j) == pytest.approx(math.pi)
    assert nearest_distance(loci, 1j * math.pi) == pytest.approx(0, abs=1e-15)

    value = evaluate(family, inputs, built.lam.real, 1.0)
    assert value == pytest.approx(c["A0"] + c["A2"] / 2, rel=1e-12)
    jet = evaluate_jet(family, inputs, built.lam.real, 1.0)
    assert jet.is_finite()
    assert abs(jet.derivative(1)) <= 1e-12 * abs(jet.derivative(2))


def test_removable_coth_form_matches_ansatz(inputs_for):
    built = build(resolve("sg.case5.coth.minus"), inputs_for("sg.case5.coth.minus"))
    c = built.coefficients.values
    xs = np.array([0.7, -1.9, 3.2], dtype=complex)
    T, S = 1 / np.tanh(xs), 1j / np.sinh(xs)
    ansatz = c["A0"] + c["A2"] * T * T + c["B2"] * T * S
    assert np.allclose(built.profile(xs), ansatz, rtol=1e-12, atol=0)


def test_case3_coth_keeps_pole_at_origin(inputs_for):
    loci = singularities("sg.case3.coth.plus", inputs_for("sg.case3.coth.plus"))
    assert nearest_distance(loci, 0j) == 0


def test_case9_asymptotic_locus(inputs_for):
    loci = singularities("mefm.case9.tanh.plus", inputs_for("mefm.case9.tanh.plus"))
    asymptotic = [locus for locus in loci if locus.kind is LocusKind.ASYMPTOTIC]
    assert len(asymptotic) == 1
    assert asymptotic[0].distance(0j) == math.inf


def test_case7_tan_periodic_poles(inputs_for):
    loci = singularities("mefm.case7.tan.plus", inputs_for("mefm.case7.tan.plus"))
    assert loci
    assert all(locus.kind is LocusKind.POLE for locus in loci)
    assert any(locus.period is not None for locus in loci)
    assert all("kind" in locus.to_dict() for locus in loci)


# --- ERRORI ---


def test_missing_free_parameter(material_a):
    with pytest.raises(ConstraintViolated, match="mu"):
        evaluate("sg.case1.tanh.plus", FamilyInputs(material=material_a), 0.0, 0.0)


def test_gate_violated(inputs_for):
    # tau = sigma = 5/2 ha discriminante negativo: vale solo il Set 2
    inputs = inputs_for("mefm.case7.tan.plus")
    with pytest.raises(GateViolated):
        evaluate("mefm.case7.tanh.plus", inputs, 0.0, 0.0)


def test_zero_denominator_pair(inputs_for):
    inputs = inputs_for("mefm.case7.tanh.plus", Q0=F(0), Q1=F(0))
    with pytest.raises(ConstraintViolated, match="Q0"):
        evaluate("mefm.case7.tanh.plus", inputs, 0.0, 0.0)


def test_degenerate_denominator_case2(material_a):
    # 2*delta*n1^2*mu^2 = 1 per mu^2 = 256/45 con il set A
    inputs = FamilyInputs(material=material_a, mu=math.sqrt(256 / 45))
    with pytest.raises(DegenerateDenominator):
        coefficient_set("sg.case2.tanh.plus", inputs)


def test_complex_tau_is_rejected(inputs_for):
    inputs = inputs_for("mefm.case13.exp.plus", tau=complex(1, 1))
    with pytest.raises(ConstraintViolated):
        evaluate("mefm.case13.exp.plus", inputs, 0.0, 0.0)


# --- FORME STAMPATE ---


def test_case1_printed_form_fails_ode(case1_inputs):
    """La forma semplificata del caso 1 ha A2/3 davanti a tanh^2: non annulla l'ODE."""
    built = build(resolve("sg.case1.tanh.plus"), case1_inputs)
    assert abs(printed_ode_residual_at(built, 0.7 + 0j)) > 1e-3
    assert abs(ode_residual("sg.case1.tanh.plus", case1_inputs, 0.7)) < 1e-12


def test_printed_and_ansatz_agree_at_xi_zero(case1_inputs):
    built = build(resolve("sg.case1.tanh.plus"), case1_inputs)
    xi = np.array([0j])
    assert built.printed(xi)[0] == pytest.approx(built.profile(xi)[0], rel=1e-12)


def test_case13_lambda_is_finite(inputs_for):
    inputs = inputs_for("mefm.case13.exp.plus")
    lam = coefficient_set("mefm.case13.exp.plus", inputs).lam
    assert cmath.isfinite(lam)
    assert cmath.isfinite(evaluate("mefm.case13.exp.plus", inputs, 0.2, 0.4))
