import pytest

from trianglepack import IntervalInstance, build_overlap_graph, sweep_maximal_cliques


def instance(*triples):
    return IntervalInstance.from_triples(triples)


@pytest.fixture
def abc_path():
    # A=[1,3], B=[2,5], C=[4,7]
    return instance(("A", 1, 3), ("B", 2, 5), ("C", 4, 7))


def prepared(inst):
    return build_overlap_graph(inst), sweep_maximal_cliques(inst)


ACCEPTANCE_LINES: list[str] = []


def record(criterion: str, passed: bool, detail: str = "") -> bool:
    ACCEPTANCE_LINES.append(f"[{'PASS' if passed else 'FAIL'}] {criterion}: {detail}")
    return passed


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
