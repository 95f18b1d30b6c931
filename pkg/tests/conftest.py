import pytest
from hypothesis import settings

from . import criteria

settings.register_profile("default", max_examples=25, deadline=None)
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    if criteria.LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(criteria.LINES):
            terminalreporter.write_line(line)
