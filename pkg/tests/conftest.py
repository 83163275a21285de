import sys

import numpy as np
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from masabimod import Pattern

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def patterns(draw, max_rows=6, max_cols=6):
    rows = draw(st.integers(0, max_rows))
    cols = draw(st.integers(0, max_cols))
    bits = draw(st.lists(st.booleans(), min_size=rows * cols, max_size=rows * cols))
    return Pattern.from_array(np.array(bits, dtype=bool).reshape(rows, cols))


@pytest.fixture
def nest2():
    return Pattern.from_grid(["11", "01"])


@pytest.fixture
def zero_diag3():
    return Pattern.from_grid(["011", "101", "110"])


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
