import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_RESULTS: list[tuple[str, str, bool]] = []


@pytest.fixture
def criterion():
    """Record one acceptance criterion outcome; the summary prints them all."""
    def record(cid, text, ok):
        _RESULTS.append((cid, text, bool(ok)))
        print(f"[{'PASS' if ok else 'FAIL'}] {cid}: {text}")
        assert ok, f"{cid} failed: {text}"
    return record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for cid, text, ok in sorted(_RESULTS, key=lambda r: int(r[0].lstrip("AC"))):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {cid}  {text}")
