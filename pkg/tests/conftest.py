from __future__ import annotations

import pytest

from pathconvex.graph import build_graph, complete_graph, cycle_graph, path_graph, star_graph


@pytest.fixture(scope="session")
def named():
    """Small graphs used throughout the examples."""
    return {
        "K1": build_graph(1, []),
        "K3": complete_graph(3),
        "K4": complete_graph(4),
        "P3": path_graph(3),
        "P4": path_graph(4),
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
        "C6": cycle_graph(6),
        "star3": star_graph(3),
    }


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
