from __future__ import annotations

from hypothesis import strategies as st

from braid3.words import BraidWord

codes = st.sampled_from((1, -1, 2, -2))


def braid_words(max_size: int = 20):
    return st.lists(codes, max_size=max_size).map(lambda cs: BraidWord(cs))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
