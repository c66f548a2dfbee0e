"""Writes graph6_corpus.tsv: graph6 string, vertex count and edge list per line,
all produced by networkx."""

import random
from pathlib import Path

import networkx as nx


def graphs():
    yield nx.empty_graph(1)
    yield nx.empty_graph(5)
    for n in range(2, 12):
        yield nx.path_graph(n)
    for n in range(3, 12):
        yield nx.cycle_graph(n)
    for n in range(2, 9):
        yield nx.complete_graph(n)
    for a, b in [(1, 3), (2, 2), (2, 3), (3, 3), (3, 4), (4, 5)]:
        yield nx.complete_bipartite_graph(a, b)
    for d in range(1, 6):
        yield nx.hypercube_graph(d)
    yield nx.petersen_graph()
    yield nx.heawood_graph()
    yield nx.moebius_kantor_graph()
    yield nx.grid_2d_graph(3, 4)
    yield nx.grid_2d_graph(5, 5)
    yield nx.star_graph(7)
    yield nx.path_graph(62)
    rng = random.Random(20240501)
    for n in (6, 9, 13, 20, 31, 45, 62):
        yield nx.gnp_random_graph(n, 0.3, seed=rng.randrange(1 << 30))
    for n in (8, 15, 30):
        yield nx.random_labeled_tree(n, seed=rng.randrange(1 << 30))


def main():
    out = Path(__file__).with_name("graph6_corpus.tsv")
    lines = []
    for g in graphs():
        g = nx.convert_node_labels_to_integers(g, ordering="sorted")
        code = nx.to_graph6_bytes(g, header=False).decode().strip()
        edges = " ".join(f"{min(u, v)}-{max(u, v)}" for u, v in sorted(g.edges()))
        lines.append(f"{code}\t{g.number_of_nodes()}\t{edges}")
    out.write_text("\n".join(lines) + "\n")
    print(f"{len(lines)} graphs")


if __name__ == "__main__":
    main()
