import os
from pathlib import Path

import pytest

from vnroles.lexicon import parse_lexicon

FIXTURE_DIR = Path(__file__).parent / "fixtures" / "vn_mini"

ACCEPTANCE_LINES = []
VERBNET_CRITERIA = (
    "1 stats 498/277/290/13/30/6394",
    "2 four mutual pairs at 55%, verb level",
    "3 roles outside mutual pairs == 22",
    "4 break-45.1 frame and 24 members",
)


@pytest.fixture(scope="session")
def mini_dir():
    return FIXTURE_DIR


@pytest.fixture(scope="session")
def mini_lexicon():
    return parse_lexicon(FIXTURE_DIR)


@pytest.fixture
def record_criterion():
    def record(label, ok, detail=""):
        status = ok if isinstance(ok, str) else ("PASS" if ok else "FAIL")
        line = f"[{status}] {label}" + (f" -- {detail}" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
    if not os.environ.get("VN_PATH") and ACCEPTANCE_LINES:
        for label in VERBNET_CRITERIA:
            terminalreporter.write_line(f"[SKIP] {label} -- VN_PATH unset, VerbNet 3.2b data not available")
