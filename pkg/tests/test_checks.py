"""Every registered check must pass; reports carry the stable shape."""

import pytest

from ospq.checks import CHECKS, CheckConfig, run_checks


@pytest.mark.parametrize("group", sorted(CHECKS))
def test_group_passes(group):
    reports = run_checks(group, CheckConfig())
    failing = [(r.name, r.details) for r in reports if r.status != "pass"]
    assert not failing, failing


def test_reports_have_the_contractual_shape():
    reports = run_checks("classical", CheckConfig(truncation=8, seed=3))
    for r in reports:
        d = r.as_dict()
        assert set(d) == {"name", "status", "details", "elapsed_ms", "config"}
        assert d["config"] == {"truncation": 8, "seed": 3}
        assert isinstance(d["elapsed_ms"], int)
