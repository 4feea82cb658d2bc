from fractions import Fraction as F

import pytest

from app.errors import InvalidConstants, ZeroPoissonRatio
from app.models.materials import SET_A, SET_B, MaterialConstants, derive_parameters

# --- HELPERS ---


def constants(**changes):
    """Set A in forma di mappa JSON, con eventuali sostituzioni."""
    data = SET_A.to_dict()
    data.update(changes)
    return data


# --- TEST ---


# 1. Frazioni esatte dei due set di riferimento
@pytest.mark.parametrize(
    "name, expected",
    [
        ("n1", F(3, 16)),
        ("c1", F(95, 32)),
        ("c2", F(38065, 1152)),
        ("beta1", F(96, 5)),
        ("alpha1", F(95, 768)),
        ("alpha2", F(38065, 55296)),
    ],
)
def test_set_a_derived_fractions(name, expected):
    derived = derive_parameters(SET_A)
    assert getattr(derived, name) == expected


@pytest.mark.parametrize(
    "name, expected",
    [
        ("n1", F(3, 16)),
        ("c1", F(95, 64)),
        ("c2", F(3719, 192)),
        ("beta1", F(49, 2)),
        ("alpha1", F(19, 196)),
        ("alpha2", F(3719, 5880)),
    ],
)
def test_set_b_derived_fractions(name, expected):
    derived = derive_parameters(SET_B)
    assert getattr(derived, name) == expected


def test_kappas_set_a():
    derived = derive_parameters(SET_A)
    assert (derived.kappa1, derived.kappa3, derived.kappa5, derived.kappa6) == (
        F(82, 3),
        F(35, 2),
        F(23, 2),
        F(95, 12),
    )


def test_derived_values_are_exact_fractions():
    derived = derive_parameters(SET_B)
    for value in derived.to_decimal_dict():
        assert isinstance(getattr(derived, value), F)


# 2. Lettura da JSON
def test_from_mapping_accepts_strings_and_integers():
    mc = MaterialConstants.from_mapping(constants(lambda1="3/2", nu1=2, rho="3"))
    assert mc == SET_A


def test_to_dict_uses_fraction_strings():
    assert SET_A.to_dict()["lambda1"] == "3/2"
    assert derive_parameters(SET_A).to_dict()["alpha2"] == "38065/55296"


def test_negative_nu_constants_are_accepted():
    mc = MaterialConstants.from_mapping(constants(nu1="-4", nu2="0", nu4="-1/3"))
    assert mc.nu1 == -4
    derive_parameters(mc)


# 3. Errori
def test_zero_poisson_ratio():
    mc = MaterialConstants.from_mapping(constants(lambda1="0"))
    with pytest.raises(ZeroPoissonRatio) as excinfo:
        derive_parameters(mc)
    assert excinfo.value.field == "lambda1"


@pytest.mark.parametrize(
    "changes, field",
    [
        ({"mu1": "0"}, "mu1"),
        ({"mu1": "-1"}, "mu1"),
        ({"lambda1": "-5/2"}, "lambda1"),
        ({"rho": "0"}, "rho"),
        ({"c": "0"}, "c"),
        ({"delta": "0"}, "delta"),
        ({"epsilon": "0"}, "epsilon"),
        ({"nu2": "abc"}, "nu2"),
        ({"nu4": ""}, "nu4"),
        ({"rho": True}, "rho"),
    ],
)
def test_invalid_constants_name_the_field(changes, field):
    with pytest.raises(InvalidConstants) as excinfo:
        MaterialConstants.from_mapping(constants(**changes))
    assert excinfo.value.field == field


def test_missing_and_unknown_fields():
    data = constants()
    del data["rho"]
    with pytest.raises(InvalidConstants, match="rho"):
        MaterialConstants.from_mapping(data)

    with pytest.raises(InvalidConstants, match="gamma"):
        MaterialConstants.from_mapping(constants(gamma="1"))


def test_invalid_constants_is_a_value_error():
    with pytest.raises(ValueError):
        MaterialConstants.from_mapping(constants(mu1="0"))
