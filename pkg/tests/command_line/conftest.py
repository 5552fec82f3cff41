from __future__ import annotations

from typing import TYPE_CHECKING

import pytest
from moodgauge.cli import main

if TYPE_CHECKING:
    from pathlib import Path
    from typing import Protocol

    from click.testing import CliRunner, Result

    class InvokeFn(Protocol):
        """Run ``moodgauge -c <config> *args``"""

        def __call__(self, *args: str) -> Result: ...


@pytest.fixture
def out_dir(tmp_path: Path) -> Path:
    return tmp_path / "out"


@pytest.fixture
def invoke(cli_runner: CliRunner, mood_config_file: Path) -> InvokeFn:
    def _invoke(*args: str) -> Result:
        return cli_runner.invoke(main, ["-c", str(mood_config_file), *args])

    return _invoke
