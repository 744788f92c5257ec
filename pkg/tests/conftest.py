from pathlib import Path

import pytest

from dreamtext import default_stopwords, load_corpus

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def stopwords():
    return default_stopwords()


@pytest.fixture(scope="session")
def dreams():
    return load_corpus(DATA / "dreams.txt")


# Acceptance criteria report, printed at the end of every run.
CRITERIA: dict[str, tuple[str, str]] = {}


def record(criterion: str, status: str, detail: str = "") -> None:
    CRITERIA[criterion] = (status, detail)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" or (rep.when == "setup" and rep.skipped):
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(CRITERIA, key=lambda n: int(n.split()[0])):
        status, detail = CRITERIA[name]
        terminalreporter.write_line(f"{status:5} {name}" + (f" ({detail})" if detail else ""))
