"""
Shared fixtures: isolated storage, testing environment, fan documents
"""
import json
from pathlib import Path

import pytest

from torichms.support import Config, Storage
from torichms.toricdata import StackyFan, parse_fan

FIXTURES = Path(__file__).parent / 'fixtures'


def fixture_path(name: str) -> Path:
    return FIXTURES / f"{name}.json"


def load_fixture(name: str) -> StackyFan:
    return parse_fan(json.loads(fixture_path(name).read_text(encoding='utf-8')))


@pytest.fixture(autouse=True)
def isolated_config(tmp_path):
    Storage.initialize(tmp_path)
    Config.clear_runtime_overrides()
    Config.set('app.env', 'testing')
    yield
    Config.clear_runtime_overrides()


@pytest.fixture
def square() -> StackyFan:
    return load_fixture('square_a')


@pytest.fixture
def square_flipped() -> StackyFan:
    return load_fixture('square_b')


@pytest.fixture
def kp2_coarse() -> StackyFan:
    return load_fixture('kp2_coarse')


@pytest.fixture
def kp2_fine() -> StackyFan:
    return load_fixture('kp2_fine')


@pytest.fixture
def strip() -> StackyFan:
    return load_fixture('orbifold_strip')


@pytest.fixture
def single_cone() -> StackyFan:
    return load_fixture('single_cone')
