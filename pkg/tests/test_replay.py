"""Tests for the replay pipeline and its verification report"""

import json

import pytest

from krw.checks import GROUP_CHECK_NAMES, check_names, relation_from_config
from krw.errors import ConfigInvalidError
from krw.models import CheckStatus, ReplayConfig
from krw.parser import parse_polynomial as P
from krw.replay_graph import SKIP_REASON, replay_all, replay_all_async

SMALL = {
    "eta_generic_degree": 1,
    "max_param_degree": 2,
    "sample_count": 4,
    "max_sample_degree": 2,
    "coefficient_bound": 3,
    "rng_seed": 7,
}


def _by_name(report):
    return {c.name: c for c in report.checks}


def test_small_replay_passes():
    """Test a small replay passes every check"""
    report = replay_all(SMALL)
    failed = [f"{c.name}: {c.details}" for c in report.checks if c.status != CheckStatus.PASS]
    assert failed == []
    assert report.ok
    assert report.summary.passed == len(check_names()) == 35


def test_report_lists_checks_in_name_order():
    """Test report checks are sorted by name"""
    report = replay_all(SMALL)
    names = [c.name for c in report.checks]
    assert names == sorted(names)
    assert names == check_names()


def test_report_json_shape():
    """Test the report JSON layout"""
    data = json.loads(replay_all(SMALL).to_json())
    assert set(data) == {"config", "checks", "summary"}
    assert set(data["summary"]) == {"pass", "fail", "skipped"}
    assert data["config"]["rng_seed"] == 7
    assert all("witness" not in c for c in data["checks"])


def test_replay_is_deterministic():
    """Test two replays with one seed agree"""
    assert replay_all(SMALL).to_json() == replay_all(SMALL).to_json()


@pytest.mark.asyncio
async def test_async_replay_matches_sync():
    """Test the async replay matches the sync one"""
    report = await replay_all_async(SMALL)
    assert report.to_json() == replay_all(SMALL).to_json()


def test_concrete_eta_with_translate():
    """The Koras-Russell threefold translated to eta = 5 + x"""
    report = replay_all({**SMALL, "eta_generic_degree": None, "eta": "x", "c": "5"})
    assert report.ok
    assert report.config["eta"] == "x"


def test_rational_coefficients():
    """Test a replay over rational eta coefficients"""
    report = replay_all({**SMALL, "eta_generic_degree": None, "eta_coefficients": ["1/2", "0", "-3"]})
    assert report.ok


def test_primality_gate_skips_everything_else():
    """Test a failing primality check skips the other groups"""
    report = replay_all({**SMALL, "relation_g": "x*z"})
    records = _by_name(report)
    f_eta = records["R1.primality.f_eta"]
    assert f_eta.status == CheckStatus.FAIL
    assert f_eta.witness == "x*(x*y + z)"
    assert records["R1.primality.f_c"].status == CheckStatus.FAIL
    others = [c for c in report.checks if not c.name.startswith("R1.")]
    assert len(others) == 33
    assert all(c.status == CheckStatus.SKIPPED and c.details == SKIP_REASON for c in others)
    assert report.summary.fail == 2
    assert report.summary.skipped == 33
    assert not report.ok


@pytest.mark.parametrize("override", [
    {"sample_count": 0},
    {"rng_seed": -1},
    {"max_param_degree": 0},
    {"unknown_field": 1},
    {"eta": "x", "eta_generic_degree": 2},
    {"eta_coefficients": ["1/0"]},
])
def test_invalid_config(override):
    """Test invalid config values are rejected"""
    with pytest.raises(ConfigInvalidError) as exc:
        replay_all({**SMALL, "eta_generic_degree": None, **override})
    assert exc.value.exit_code == 2


def test_unparsable_eta():
    """Test an unparsable eta is a config error"""
    with pytest.raises(ConfigInvalidError):
        replay_all({**SMALL, "eta_generic_degree": None, "eta": "x +"})


def test_relation_from_config():
    """Test building the relation from a config"""
    setup = relation_from_config(ReplayConfig(eta="c0 + c1*x", c="2"))
    assert setup.eta == P("2 + c1*x")
    assert setup.g == P("z^2 + t^3 + 2 + c1*x")
    setup = relation_from_config(ReplayConfig(max_param_degree=2))
    assert setup.eta == P("c0 + c1*x + c2*x^2")


def test_config_file_with_overrides():
    """Test overrides replace eta and ignore None values"""
    cfg = ReplayConfig.load("config/replay.yaml", {"eta": "x", "rng_seed": None})
    assert cfg.eta == "x"
    assert cfg.eta_generic_degree is None
    assert cfg.rng_seed == 42
    assert cfg.sample_count == 500


def test_missing_config_file_uses_defaults(tmp_path):
    """Test a missing config file falls back to defaults"""
    cfg = ReplayConfig.load(str(tmp_path / "absent.yaml"), {})
    assert cfg == ReplayConfig()


def test_malformed_config_file(tmp_path):
    """Test a config file that is not a mapping is rejected"""
    path = tmp_path / "bad.yaml"
    path.write_text("- just\n- a list\n", encoding="utf-8")
    with pytest.raises(ConfigInvalidError):
        ReplayConfig.load(str(path), {})


def test_group_names_cover_every_check():
    """Test every group has registered checks"""
    assert sorted(GROUP_CHECK_NAMES) == [f"R{i}" for i in range(1, 10)]
    assert check_names(["R1"]) == ["R1.primality.f_c", "R1.primality.f_eta"]


@pytest.mark.optional
def test_full_replay_default_seed():
    """Test the full replay with the default seed"""
    report = replay_all({"eta_generic_degree": 8, "rng_seed": 42})
    assert report.ok
