"""
Fixtures compartilhadas dos testes unitários
"""

import multiprocessing

import pytest
import structlog

from src.core.log import configure_logging


@pytest.fixture
def verbose_logging(monkeypatch):
    """Logs em DEBUG durante o teste; o structlog volta ao padrão depois."""
    monkeypatch.setattr("src.core.log._verbose", False)
    configure_logging(verbose=True)
    yield
    structlog.reset_defaults()


@pytest.fixture
def spawn_context():
    """Workers que não herdam o estado do processo pai."""
    return multiprocessing.get_context("spawn")
