import pytest
from hypothesis import settings

from leibniz_qa.cli import corpus_text
from leibniz_qa.grammar import parse_algebra_file

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

EX1 = [(2, 2, {1: 1}), (3, 3, {4: 1}), (4, 3, {5: 1}), (5, 3, {6: 1})]

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def corpus():
    f = parse_algebra_file(corpus_text())
    return {b.name: b.build() for b in f.blocks}


@pytest.fixture(scope="session")
def corpus_blocks():
    return {b.name: b for b in parse_algebra_file(corpus_text()).blocks}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
