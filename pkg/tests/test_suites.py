"""Named verification batteries."""

import pytest

from polyharmonic import SUITE_NAMES, run_suite


@pytest.mark.parametrize("name", ["energy", "ladder", "tau", "clifford"])
def test_every_battery_passes_at_default_tolerances(name):
    reports = run_suite(name)
    assert reports
    for report in reports:
        assert report.passed, (report.name, report.max_residual, report.tolerance)


def test_all_concatenates_the_batteries(self=None):
    combined = run_suite("all")
    singles = [rep.name for name in ("energy", "ladder", "tau", "clifford") for rep in run_suite(name)]
    assert [rep.name for rep in combined] == singles


def test_tolerance_override_applies_everywhere():
    for report in run_suite("energy", tol=1e-2):
        assert report.tolerance == 1e-2
    # an absurdly tight override must fail something
    assert not all(rep.passed for rep in run_suite("ladder", tol=1e-30))


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suite("nonsense")


def test_suite_names_exported():
    assert SUITE_NAMES == ("energy", "ladder", "tau", "clifford", "all")
