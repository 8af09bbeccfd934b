import pytest

from borel_forge.config import CONFIG_NAME, SEED_ENV, WorkspaceConfig, load_config
from borel_forge.errors import ParseError


def test_defaults():
    cfg = WorkspaceConfig()
    assert (cfg.bound, cfg.seed, cfg.entropy_bound, cfg.retries) == (10, 0, 10**6, 3)
    assert (cfg.spair_budget, cfg.enum_budget) == (200_000, 10**6)


def test_round_trip():
    cfg = WorkspaceConfig(bound=14, seed=99, entropy_bound=50, retries=5, spair_budget=7,
                          enum_budget=11)
    assert WorkspaceConfig.from_text(cfg.to_text()) == cfg
    assert WorkspaceConfig.from_text(WorkspaceConfig().to_text()).to_text() == \
        WorkspaceConfig().to_text()


@pytest.mark.parametrize("field", ["bound", "entropy_bound", "retries", "spair_budget",
                                   "enum_budget"])
def test_positive_fields(field):
    with pytest.raises(ValueError):
        WorkspaceConfig(**{field: 0})


def test_from_text_comments_and_sections():
    cfg = WorkspaceConfig.from_text("[borel-forge]\n# settings\nseed = 7  # note\nbound=12\n")
    assert cfg.seed == 7 and cfg.bound == 12


@pytest.mark.parametrize("text", ["colour = 3\n", "seed = seven\n", "seed\n", "retries = -1\n"])
def test_from_text_errors(text):
    with pytest.raises(ParseError):
        WorkspaceConfig.from_text(text)


def test_load_order(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert load_config(environ={}) == WorkspaceConfig()
    (tmp_path / CONFIG_NAME).write_text("seed = 5\nretries = 4\n")
    assert load_config(environ={}).seed == 5
    cfg = load_config(environ={SEED_ENV: "11"})
    assert cfg.seed == 11 and cfg.retries == 4
    other = tmp_path / "other.toml"
    other.write_text("bound = 20\n")
    assert load_config(str(other), environ={}).bound == 20
    with pytest.raises(ParseError):
        load_config(environ={SEED_ENV: "minus"})


def test_overrides_skip_none():
    cfg = WorkspaceConfig().with_overrides(seed=3, bound=None)
    assert cfg.seed == 3 and cfg.bound == 10
