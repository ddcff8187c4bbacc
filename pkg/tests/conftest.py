import pytest

from unicellular import build_graph, cubic, enumerate_words, parse_word


def words_of(degrees):
    return [tuple(int(x) for x in w) for w in enumerate_words(degrees)[0]]


@pytest.fixture(scope="session")
def g2_corpus():
    """All classes of the two genus-2 corpora used throughout."""
    return {d: words_of(d) for d in ((4, 4, 4), cubic(2))}


@pytest.fixture(scope="session")
def small_corpus():
    out = []
    for d in ((4,), (3, 3), (2, 1, 1), (4, 2, 2), (4, 4, 4), (5, 2, 1), cubic(2)):
        out.extend(words_of(d))
    return out


@pytest.fixture(scope="session")
def k444():
    return build_graph((4, 4, 4))


@pytest.fixture(scope="session")
def k_cubic2():
    return build_graph(cubic(2))


@pytest.fixture
def torus():
    return parse_word("1 2 -1 -2")


# one line per acceptance criterion, printed after the run
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
