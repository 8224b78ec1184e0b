#!/usr/bin/env python3
"""Writes every connected graph on 1..7 vertices (up to isomorphism) as graph6."""

import sys

import networkx as nx


def main(path):
    graphs = [g for g in nx.graph_atlas_g() if 1 <= g.number_of_nodes() <= 7 and nx.is_connected(g)]
    with open(path, "w") as f:
        for g in graphs:
            f.write(nx.to_graph6_bytes(g, header=False).decode().strip() + "\n")
    print(f"{len(graphs)} graphs written to {path}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/connected_le7.g6")
