import math

import pytest

from app.models.family import FamilyId
from app.verify import GridSpec, ResidualReport, Status, classify

# --- GRIGLIA ---


@pytest.mark.parametrize(
    "text, expected",
    [("10x5", (10, 5)), (" 3X7 ", (3, 7)), ("1x1", (1, 1))],
)
def test_parse_counts(text, expected):
    assert GridSpec.parse_counts(text) == expected


@pytest.mark.parametrize("text", ["10", "10x", "x5", "10*5", "-1x5", ""])
def test_parse_counts_invalid(text):
    with pytest.raises(ValueError, match="griglia"):
        GridSpec.parse_counts(text)


def test_grid_spec_collects_errors():
    with pytest.raises(ValueError) as excinfo:
        GridSpec(nx=0, nt=0, tolerance=0)
    message = str(excinfo.value)
    assert "nx" in message and "nt" in message and "tolerance" in message


def test_grid_spec_requested_and_with_values():
    grid = GridSpec().with_values(nx=4, nt=3, xi_count=7)
    assert grid.requested == 19
    assert GridSpec().requested == 100


# --- CLASSIFICAZIONE ---


@pytest.mark.parametrize(
    "pde, ode, coverage, expected",
    [
        (1e-12, 1e-13, 1.0, Status.PASS),
        (1e-12, 1e-13, 0.9, Status.PASS),
        (1e-12, 1e-13, 0.89, Status.FAIL),
        (1e-8, 1e-13, 1.0, Status.FAIL),
        (1e-3, 1e-13, 1.0, Status.FLAGGED_ERRATUM),
        (1e-13, 5.0, 0.5, Status.FLAGGED_ERRATUM),
        (math.nan, 1e-13, 1.0, Status.FAIL),
        (1e-13, math.nan, 1.0, Status.FAIL),
        (math.inf, 1e-13, 1.0, Status.FLAGGED_ERRATUM),
    ],
)
def test_classify(pde, ode, coverage, expected):
    assert classify(pde, ode, coverage, 1e-9, 1e-6) is expected


def test_classify_threshold_below_tolerance():
    # la soglia di erratum non scende mai sotto la tolleranza
    assert classify(1e-5, 0.0, 1.0, 1e-4, 1e-6) is Status.PASS
    assert classify(1e-3, 0.0, 1.0, 1e-4, 1e-6) is Status.FLAGGED_ERRATUM


# --- REPORT ---


def test_report_to_dict_encodes_non_finite():
    report = ResidualReport(
        family=FamilyId.parse("sg.case1.tanh.plus"),
        points_sampled=10,
        points_skipped_near_singularity=2,
        max_abs_pde_residual=math.nan,
        max_abs_ode_residual=1e-12,
        status=Status.FAIL,
    )
    data = report.to_dict()
    assert data["family"] == "sg.case1.tanh.plus"
    assert data["max_abs_pde_residual"] == "nan"
    assert data["max_abs_ode_residual"] == 1e-12
    assert data["printed_ode_residual"] is None
    assert data["status"] == "FAIL"
    assert report.coverage == pytest.approx(0.8)
