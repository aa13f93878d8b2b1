import pytest
from hypothesis import strategies as st

from dyckstat.paths import DyckPath
from dyckstat.permutations import Permutation

# the semilength-17 path drawn in the worked example, with its images
FIG2_WORD = "NNENNNEENNNNNNNEEEEENENEENEENENEEE"
FIG2_PERM = (3, 1, 6, 2, 4, 5, 7, 13, 14, 8, 15, 9, 16, 17, 10, 11, 12)
FIG2_MOTZKIN = "URBRRDLUURURBBDDD"


@pytest.fixture
def fig2_path():
    return DyckPath(FIG2_WORD)


@pytest.fixture
def fig2_perm():
    return Permutation(FIG2_PERM)


@st.composite
def dyck_paths(draw, max_n=25):
    n = draw(st.integers(0, max_n))
    word = []
    north = east = 0
    while east < n:
        if north == n:
            step = "E"
        elif east == north:
            step = "N"
        else:
            step = draw(st.sampled_from("NE"))
        word.append(step)
        if step == "N":
            north += 1
        else:
            east += 1
    return DyckPath("".join(word))


@st.composite
def permutations_(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


# acceptance results, printed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
