"""
Pytest configuration and shared fixtures for tests.
"""

import pytest
from typing import Generator, Tuple
from logging import Logger

from src.helpers.workbench_helper import init
from src.analysis.workbench import Workbench


@pytest.fixture(scope="session")
def _initialized_system() -> Generator[Tuple[Logger, Workbench], None, None]:
    """
    Internal fixture that initializes the workbench once per session.

    Aut(F) computations are cached on the workbench, so every test module
    shares them through this single initialization.
    """
    log, workbench_instance = init()
    yield log, workbench_instance


@pytest.fixture(scope="session")
def logger(_initialized_system) -> Generator[Logger, None, None]:
    """
    Pytest fixture that provides the logger instance.

    Usage:
        def test_something(logger):
            logger.info("Test log message")
    """
    log, _ = _initialized_system
    yield log


@pytest.fixture(scope="session")
def workbench(_initialized_system) -> Generator[Workbench, None, None]:
    """
    Pytest fixture that provides the shared Workbench.

    Usage:
        def test_something(workbench):
            aut = workbench.aut("A5")
            assert aut.out_order == 2
    """
    _, workbench_instance = _initialized_system
    yield workbench_instance
