from fractions import Fraction as F

import pytest

from app.verify import identity_suite
from app.verify.identities import (
    case13_gauge,
    exponential_identities,
    pythagorean_identity,
    rational_constant_value,
    traveling_invariance,
)


def test_identity_suite_all_pass():
    checks = identity_suite()
    assert {c.name for c in checks} == {
        "sech_esponenziale",
        "tanh_esponenziale",
        "sech2_piu_tanh2",
        "invarianza_traslazione",
        "gauge_caso13",
        "costante_razionale_casi_9_10",
    }
    failed = [c.to_dict() for c in checks if not c.passed]
    assert not failed


@pytest.mark.parametrize("p_values", [(1.0,), (0.5, 3.0)])
def test_exponential_identities(p_values):
    assert all(check.passed for check in exponential_identities(p_values))


def test_pythagorean_identity():
    check = pythagorean_identity(points=7)
    assert check.passed
    assert check.max_error < 1e-13


def test_traveling_invariance_single_family():
    check = traveling_invariance(families=("sg.case1.tanh.plus",), shift=2.5, points=5)
    assert check.passed
    assert "1 famiglie" in check.detail


def test_case13_gauge():
    assert case13_gauge(points=5).passed


def test_rational_constant_is_exact():
    value = rational_constant_value()
    assert isinstance(value, F)
    # Delta = tau^2 - 4*sigma < 0 e K > 0: costante negativa
    assert value < 0
