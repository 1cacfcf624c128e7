import json
from pathlib import Path

import pytest

from odpkit import fixture
from odpkit.dataset import load_config, load_datasets


@pytest.fixture(scope="session")
def fixture_dir(tmp_path_factory) -> Path:
    out = tmp_path_factory.mktemp("fixture")
    fixture.synth(fixture.FixtureSpec(), out)
    (out / "config.json").write_text(json.dumps(fixture.default_config(out)), encoding="utf-8")
    return out


@pytest.fixture(scope="session")
def fixture_config_path(fixture_dir) -> Path:
    return fixture_dir / "config.json"


@pytest.fixture(scope="session")
def fixture_dataset(fixture_config_path):
    return load_datasets(load_config(fixture_config_path))["fixture"]


@pytest.fixture(scope="session")
def ground_truth(fixture_dir) -> dict:
    return json.loads((fixture_dir / "groundtruth.json").read_text(encoding="utf-8"))
