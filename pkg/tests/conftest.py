import networkx as nx
import pytest

from vlgraph import build_graph, parse_scale

C_MAJOR_PLUS = {
    "C#": "0,1,2,4,5,7,9,11",
    "D#": "0,2,3,4,5,7,9,11",
    "F#": "0,2,4,5,6,7,9,11",
    "G#": "0,2,4,5,7,8,9,11",
    "A#": "0,2,4,5,7,9,10,11",
}


def graph_of(spec):
    return build_graph(parse_scale(spec))


def to_nx(graph):
    g = nx.Graph()
    g.add_nodes_from(range(graph.order))
    g.add_edges_from(graph.edges)
    return g


def vertex(graph, name):
    return graph.names().index(name)


@pytest.fixture(scope="session")
def diatonic():
    return graph_of("major")


@pytest.fixture(scope="session")
def harmonic_minor():
    return graph_of("harmonic-minor")


@pytest.fixture(scope="session")
def hexatonic():
    return graph_of("hexatonic")


@pytest.fixture(scope="session")
def octatonic():
    return graph_of("octatonic")


@pytest.fixture(scope="session")
def whole_tone():
    return graph_of("whole-tone")


@pytest.fixture(scope="session")
def chromatic():
    return graph_of("chromatic")


# acceptance summary: one PASS/FAIL line per criterion

_acceptance_outcomes = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_ac" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        criterion = "AC" + report.nodeid.split("::test_ac")[1].split("_")[0].rstrip("abcdef")
        ok = report.outcome == "passed"
        _acceptance_outcomes.setdefault(criterion, []).append((report.nodeid.split("::")[-1], ok))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_outcomes:
        return
    from test_acceptance import CRITERIA

    terminalreporter.section("acceptance summary")
    for criterion in sorted(_acceptance_outcomes, key=lambda c: int(c[2:])):
        parts = _acceptance_outcomes[criterion]
        status = "PASS" if all(ok for _, ok in parts) else "FAIL"
        line = f"{status} {criterion}: {CRITERIA.get(criterion, '')}"
        failed = [name for name, ok in parts if not ok]
        if failed:
            line += f"  (failing: {', '.join(failed)})"
        terminalreporter.write_line(line)
