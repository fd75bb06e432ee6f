"""Shared fixtures: book corpus, warm compiler caches, acceptance summary lines."""

from pathlib import Path

import pytest

from intermix import Document, load_document, lz_parse

BOOKS_DIR = Path(__file__).parent / "fixtures" / "books"
BOOK_NAMES = ("harrow_point.txt", "aldermoor_year.txt", "river_vell.txt")

# One "PASS criterion N: ..." / "FAIL criterion N: ..." line per acceptance
# criterion, echoed by pytest_terminal_summary so they survive output capture.
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Trigger JIT compilation once so no timed test pays the compile cost."""
    lz_parse(b"warm up the parser before anything is timed " * 3)


@pytest.fixture(scope="session")
def books() -> list[Document]:
    return [load_document(BOOKS_DIR / name) for name in BOOK_NAMES]


@pytest.fixture(scope="session")
def long_book() -> Document:
    return load_document(BOOKS_DIR / "river_vell.txt")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
