"""Result cache keyed by a digest of the canonicalized job configuration."""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def config_digest(config: dict) -> str:
    return hashlib.sha256(canonical_json(config).encode()).hexdigest()


def cache_dir(cli_value=None) -> Path:
    """CHEREDNIK_CACHE beats the flag, which beats the default."""
    env = os.environ.get("CHEREDNIK_CACHE")
    if env:
        return Path(env)
    if cli_value:
        return Path(cli_value)
    return Path.home() / ".cache" / "cherednik"


class ResultCache:
    def __init__(self, directory: Path):
        self.directory = Path(directory)

    def path_for(self, config: dict) -> Path:
        return self.directory / f"{config_digest(config)}.json"

    def load(self, config: dict):
        path = self.path_for(config)
        if not path.exists():
            return None
        return json.loads(path.read_text())

    def store(self, config: dict, result: dict) -> Path:
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self.path_for(config)
        payload = {"config": config, "result": result}
        path.write_text(canonical_json(payload) + "\n")
        return path
