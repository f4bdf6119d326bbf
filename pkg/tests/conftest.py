import sys
from pathlib import Path

import hypothesis
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=500, deadline=None)
hypothesis.settings.load_profile("default")


def _from_cuts(n, cuts):
    parts, run = [], 1
    for cut in cuts:
        if cut:
            parts.append(run)
            run = 1
        else:
            run += 1
    return tuple(parts + [run]) if n else ()


def compositions_st(max_size=7, min_size=0):
    """Compositions built from a choice of cut points, so nothing is filtered."""
    return st.integers(min_size, max_size).flatmap(
        lambda n: st.lists(st.booleans(), min_size=max(n - 1, 0), max_size=max(n - 1, 0))
        .map(lambda cuts: _from_cuts(n, cuts)))


def partitions_st(max_size=10):
    return compositions_st(max_size).map(lambda c: tuple(sorted(c, reverse=True)))


def pytest_terminal_summary(terminalreporter):
    import acceptance_log
    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_log.LINES:
            terminalreporter.write_line(line)
