import itertools

import networkx as nx


def naive_automorphism_count(graph):
    """Count vertex permutations preserving the edge set; exponential, for <= 8 vertices."""
    edges = graph.edges()
    edge_set = {frozenset(e) for e in edges}
    n = graph.vertex_count
    return sum(
        all(frozenset((p[u], p[v])) in edge_set for u, v in edges)
        for p in itertools.permutations(range(n))
    )


def to_networkx(graph):
    g = nx.Graph()
    g.add_nodes_from(range(graph.vertex_count))
    g.add_edges_from(graph.edges())
    return g


ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {detail}")
