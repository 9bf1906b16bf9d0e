"""Shared graph constructors and the acceptance-summary hook."""

from koszulity import build_graph, parse_edge_list

_ACCEPTANCE_LINES = []


def record_criterion(line: str) -> None:
    _ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def square4():
    # 4-cycle 0-1-2-3-0
    return parse_edge_list("4\n0 1\n1 2\n2 3\n3 0")


def path4():
    # path 0-1-2-3
    return parse_edge_list("4\n0 1\n1 2\n2 3")


def cone_over_path():
    # apex 0 over the path 1-2-3; dims (1, 4, 5, 2)
    return parse_edge_list("4\n0 1\n0 2\n0 3\n1 2\n2 3")


def star(leaves: int):
    # center 0 with the given number of leaves
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete(n: int):
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def five_vertex_cone_like():
    # five vertices, induced square on 1-2-4-3, vertex 0 adjacent to 1 and 4
    return build_graph(5, [(0, 1), (0, 4), (1, 2), (1, 3), (2, 4), (3, 4)])
