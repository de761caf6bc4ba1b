"""Shared fixtures: every test starts from built-in settings and a silent verdict trace."""
import pytest

from qweight.shared.config import Settings, set_settings
from qweight.shared.logging.verdict_logger import VerdictLogger


@pytest.fixture(autouse=True)
def default_settings():
    set_settings(Settings())
    VerdictLogger.configure(enabled=False)
    yield
    set_settings(None)
    VerdictLogger.configure(enabled=False)
    VerdictLogger.set_check_context()
