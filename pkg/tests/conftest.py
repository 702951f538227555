import os
import sys
import time
from contextlib import contextmanager

import pytest

sys.path.insert(0, os.path.dirname(__file__))

_verdicts = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_verdicts] = []


@pytest.fixture
def criterion(request):
    """Context manager timing one acceptance criterion and logging a verdict line."""
    log = request.config.stash[_verdicts]

    @contextmanager
    def run(number, title, limit=None):
        start = time.perf_counter()
        try:
            yield
            elapsed = time.perf_counter() - start
            if limit is not None:
                assert elapsed < limit, f"took {elapsed:.2f} s, limit {limit} s"
        except BaseException as exc:
            elapsed = time.perf_counter() - start
            line = f"criterion {number} FAIL  {title} ({elapsed:.2f} s): {exc}".splitlines()[0]
            log.append(line)
            print(line)
            raise
        line = f"criterion {number} PASS  {title} ({elapsed:.2f} s)"
        log.append(line)
        print(line)

    return run


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_verdicts, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
