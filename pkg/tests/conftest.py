import numpy as np
import pytest
from hypothesis import strategies as st

from genant.core import AntConfiguration, GridConfig, Heading, RuleWord

U52 = "0000111122223100021113201033230000111122223200033313"
U156 = (
    "000011112222310002111333230000111122223233230000111122223003"
    "000011112222331030000111122223313133033312202303"
    "000011112222303301101221233030323030000111122223"
)


def random_configuration(rng: np.random.Generator, box: int = 6, max_m: int = 8) -> AntConfiguration:
    m = int(rng.integers(2, max_m + 1))
    rule = RuleWord("".join(rng.choice(["L", "R"], size=m)))
    background = int(rng.integers(0, m))
    grid = GridConfig(m, background)
    for _ in range(int(rng.integers(0, 3 * box))):
        i, j = (int(v) for v in rng.integers(-box, box + 1, size=2))
        grid[(i, j)] = int(rng.integers(0, m))
    pos = tuple(int(v) for v in rng.integers(-box, box + 1, size=2))
    return AntConfiguration(grid, pos, Heading(int(rng.integers(0, 4))), rule)


@st.composite
def configurations(draw, box=5):
    letters = draw(st.text(alphabet="LR", min_size=2, max_size=8))
    rule = RuleWord(letters)
    m = rule.m
    background = draw(st.integers(0, m - 1))
    coords = st.tuples(st.integers(-box, box), st.integers(-box, box))
    cells = draw(st.dictionaries(coords, st.integers(0, m - 1), max_size=30))
    grid = GridConfig(m, background, cells)
    pos = draw(coords)
    heading = draw(st.sampled_from(list(Heading)))
    return AntConfiguration(grid, pos, heading, rule)


@pytest.fixture
def lllr():
    return AntConfiguration.uniform("LLLR")


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
