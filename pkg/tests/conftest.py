import io
import subprocess
import sys

import pytest

from genbinom.cli import main


class Run:
    def __init__(self, code, stdout):
        self.code = code
        self.stdout = stdout

    @property
    def lines(self):
        return self.stdout.splitlines()


@pytest.fixture
def run_cli():
    def _run(*argv):
        out = io.StringIO()
        try:
            code = main(list(argv), out=out)
        except SystemExit as exc:
            code = exc.code
        return Run(code, out.getvalue())

    return _run


@pytest.fixture
def run_subprocess():
    def _run(*argv, env=None):
        return subprocess.run(
            [sys.executable, "-m", "genbinom", *argv],
            capture_output=True,
            text=True,
            check=False,
            timeout=120,
            env=env,
        )

    return _run


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import VERDICTS

    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for label in sorted(VERDICTS):
            terminalreporter.write_line(VERDICTS[label])
