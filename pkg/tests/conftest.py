"""Note: fixtures are stored in the tests/fixtures directory for better organisation"""

from __future__ import annotations

import random
from typing import TYPE_CHECKING

import pytest
from click.testing import CliRunner
from hypothesis import HealthCheck, settings

from tests.fixtures import *

if TYPE_CHECKING:
    from typing import Generator

# Property tests must not depend on the machine they run on
settings.register_profile(
    "moodgauge",
    max_examples=100,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("moodgauge")


@pytest.fixture
def cli_runner() -> CliRunner:
    try:
        return CliRunner(mix_stderr=False)
    except TypeError:
        # click >= 8.2 always keeps stderr apart
        return CliRunner()


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0)


@pytest.fixture(autouse=True)
def _no_thread_env(monkeypatch: pytest.MonkeyPatch) -> Generator[None, None, None]:
    monkeypatch.delenv("MOODGAUGE_THREADS", raising=False)
    yield
