import json
from pathlib import Path

import pytest

from basis_forge.config import settings
from basis_forge.models.construction import ChoicePolicy
from basis_forge.models.target import INFINITY, TargetFunction
from basis_forge.services.target_service import unit_target
from basis_forge.services.u_sequence_service import extremal_target

# Set testing mode
settings.TESTING = True


@pytest.fixture
def unit():
    """f ≡ 1: unique representation"""
    return unit_target(1)


@pytest.fixture
def double():
    """f ≡ 2"""
    return unit_target(2)


@pytest.fixture
def infinite_at_five():
    """f ≡ 1 except f(5) = INFINITY"""
    return TargetFunction(default_value=1, overrides={5: INFINITY})


@pytest.fixture
def extremal_one():
    """Extremal target with zero set {0} and its explicit sequence 1, -1, 2, -2, ..."""
    return extremal_target(1)


@pytest.fixture
def min_abs():
    return ChoicePolicy()


@pytest.fixture
def write_json(tmp_path: Path):
    """Write a JSON document under tmp_path and return its path"""

    def _write(name: str, data) -> Path:
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return path

    return _write


@pytest.fixture
def census_audit(monkeypatch):
    """Attach the exclusion census to every order-2 step"""
    monkeypatch.setattr(settings, "CENSUS_AUDIT", True)
    yield
