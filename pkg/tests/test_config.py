import pytest

from zonal import cli
from zonal.config import Settings, load_settings
from zonal.errors import ConfigError


def test_defaults_when_environment_is_empty():
    settings = load_settings({})
    assert settings == Settings()
    assert settings.N_SAMPLES == 1_000_000
    assert settings.QUAD_ORDER == 80
    assert settings.RECORD_RUNS is False


def test_environment_values_are_parsed():
    settings = load_settings(
        {"ZONAL_N_SAMPLES": "5000", "ZONAL_JOBS": "4", "ZONAL_RECORD_RUNS": "true", "ZONAL_CACHE_DIR": "  "}
    )
    assert settings.N_SAMPLES == 5000
    assert settings.JOBS == 4
    assert settings.RECORD_RUNS is True
    assert settings.CACHE_DIR is None


@pytest.mark.parametrize(
    "environ,name",
    [
        ({"ZONAL_N_SAMPLES": "lots"}, "ZONAL_N_SAMPLES"),
        ({"ZONAL_JOBS": "0"}, "ZONAL_JOBS"),
        ({"ZONAL_JOBS": "two"}, "ZONAL_JOBS"),
        ({"ZONAL_Z_FAIL": "2.0"}, "Z_WARN"),
    ],
)
def test_malformed_values_raise_config_error(environ, name):
    with pytest.raises(ConfigError, match=name):
        load_settings(environ)


def test_cli_reports_bad_settings_as_usage_error(capsys, monkeypatch):
    try:
        load_settings({"ZONAL_N_SAMPLES": "lots"})
    except ConfigError as e:
        error = e
    monkeypatch.setattr(cli, "SETTINGS_ERROR", error)
    assert cli.main(["kaneko", "--alpha", "1", "--a", "0", "--kappa", "1", "--n", "2"]) == 2
    err = capsys.readouterr().err
    assert err.startswith("error: invalid settings")
    assert "ZONAL_N_SAMPLES" in err
