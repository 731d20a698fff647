from gridblob.config import Config


def test_defaults():
    assert Config.ORACLE_GRID_LIMITS[2] == (4, 4)
    assert Config.ORACLE_GRID_LIMITS[3] == (3, 4)
    assert Config.LAYOUT_SEPARATION >= 3


def test_reload_env(monkeypatch):
    monkeypatch.setenv('GRIDBLOB_LAYOUT_SEPARATION', '6')
    monkeypatch.setenv('GRIDBLOB_DEBUG', 'true')
    Config.reload_env()
    try:
        assert Config.LAYOUT_SEPARATION == 6
        assert Config.log_level() == 'DEBUG'
    finally:
        monkeypatch.delenv('GRIDBLOB_LAYOUT_SEPARATION')
        monkeypatch.delenv('GRIDBLOB_DEBUG')
        Config.reload_env()
    assert Config.log_level() == Config.LOG_LEVEL

