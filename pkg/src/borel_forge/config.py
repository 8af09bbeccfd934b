"""Workspace settings read from a key=value file and the environment."""

from __future__ import annotations

import os
from dataclasses import asdict, dataclass, fields, replace

from .errors import ParseError

CONFIG_NAME = "borel-forge.toml"
SEED_ENV = "BFORGE_SEED"


@dataclass(frozen=True)
class WorkspaceConfig:
    bound: int = 10
    seed: int = 0
    entropy_bound: int = 10**6
    retries: int = 3
    spair_budget: int = 200_000
    enum_budget: int = 10**6

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"{f.name} must be an integer")
            if f.name == "seed":
                if v < 0:
                    raise ValueError("seed must be nonnegative")
            elif v <= 0:
                raise ValueError(f"{f.name} must be positive")

    def to_text(self) -> str:
        return "".join(f"{k} = {v}\n" for k, v in asdict(self).items())

    @classmethod
    def from_text(cls, text: str) -> "WorkspaceConfig":
        known = {f.name for f in fields(cls)}
        values = {}
        for k, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line or line.startswith("["):
                continue
            key, sep, value = line.partition("=")
            key = key.strip()
            if not sep or key not in known:
                raise ParseError(f"expected one of {sorted(known)} = <integer>", k, 1)
            try:
                values[key] = int(value.strip().replace("_", ""))
            except ValueError:
                raise ParseError(f"{key} needs an integer value", k, raw.index("=") + 2) from None
        try:
            return cls(**values)
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    def with_overrides(self, **kwargs) -> "WorkspaceConfig":
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


def load_config(path: str | None = None, environ=None) -> WorkspaceConfig:
    """Defaults, then the config file, then BFORGE_SEED."""
    environ = os.environ if environ is None else environ
    cfg = WorkspaceConfig()
    if path is None and os.path.exists(CONFIG_NAME):
        path = CONFIG_NAME
    if path is not None:
        with open(path, encoding="utf-8") as fh:
            cfg = WorkspaceConfig.from_text(fh.read())
    seed = environ.get(SEED_ENV)
    if seed:
        try:
            cfg = cfg.with_overrides(seed=int(seed))
        except ValueError:
            raise ParseError(f"{SEED_ENV} must be a nonnegative integer") from None
    return cfg
