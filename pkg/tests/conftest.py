import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ehrspan import constructions as C  # noqa: E402

ACCEPTANCE_SEED = 20181
CORPUS_SIZE = 500


@pytest.fixture(scope="session")
def named_polytopes():
    """Every named family instance the suite reuses."""
    out = {
        "segment(3)": C.segment(3),
        "square": C.cube(2),
        "cube(3)": C.cube(3),
        "cube(3,2)": C.cube(3, 2),
        "unimodular_simplex(2)": C.unimodular_simplex(2),
        "unimodular_simplex(3)": C.unimodular_simplex(3),
        "unimodular_simplex(4)": C.unimodular_simplex(4),
        "join(segment(3),reeve(2))": C.join(C.segment(3), C.reeve_simplex(2)),
    }
    for r in range(1, 7):
        out[f"reeve_simplex({r})"] = C.reeve_simplex(r)
        out[f"reeve_bipyramid({r})"] = C.reeve_bipyramid(r)
    return out


@pytest.fixture(scope="session")
def corpus():
    spec = C.CorpusSpec(seed=ACCEPTANCE_SEED, count=CORPUS_SIZE, dim_range=(2, 4), coordinate_bound=6)
    return C.random_corpus(spec)


@pytest.fixture(scope="session")
def small_corpus():
    spec = C.CorpusSpec(seed=3, count=40, dim_range=(2, 3), coordinate_bound=3)
    return C.random_corpus(spec)


@pytest.fixture(scope="session")
def polytope_corpus():
    spec = C.CorpusSpec(seed=11, count=40, dim_range=(2, 3), coordinate_bound=3, family="random_polytope")
    return C.random_corpus(spec)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Print and assert one acceptance line."""
    def _record(number: int, text: str, ok: bool, detail: str = ""):
        line = f"[criterion {number:>2}] {'PASS' if ok else 'FAIL'}  {text}" + (f"  ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line
    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
