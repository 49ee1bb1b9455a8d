"""
Pytest configuration and fixtures for Weakly Directed Walks tests.

Heavy runs (truncation 300, large zero sets, 10^5-sample statistics) are
marked slow; deselect them with -m 'not slow'.
"""

import numpy as np
import pytest
from pathlib import Path

from weakly_directed_walks.config.settings import Settings


# =============================================================================
# Configuration Fixtures
# =============================================================================

@pytest.fixture
def isolated_config(tmp_path: Path, monkeypatch) -> Path:
    """Point the user config at an empty temporary directory."""
    monkeypatch.setattr(Settings, "CONFIG_DIR", tmp_path)
    monkeypatch.setattr(Settings, "CONFIG_FILE", tmp_path / "config.yaml")
    monkeypatch.delenv(Settings.TRUNCATION_ENV, raising=False)
    monkeypatch.delenv(Settings.ORACLE_MAX_ENV, raising=False)
    return tmp_path


# =============================================================================
# Sampler Fixtures
# =============================================================================

@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator, same algorithm as the sampler default."""
    return np.random.Generator(np.random.PCG64(12345))


@pytest.fixture
def small_x() -> float:
    """Boltzmann parameter well below the pole (mean length around 2)."""
    return 0.3


@pytest.fixture
def near_pole_x() -> float:
    """Boltzmann parameter giving mean bridge length around 20."""
    return 0.375


# =============================================================================
# Pytest Hooks
# =============================================================================

def pytest_configure(config):
    """Configure pytest with custom markers."""
    config.addinivalue_line(
        "markers", "unit: mark test as unit test (no external dependencies)"
    )
    config.addinivalue_line(
        "markers", "slow: mark test as slow (may be skipped with -m 'not slow')"
    )
