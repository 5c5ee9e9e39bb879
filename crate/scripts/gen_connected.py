#!/usr/bin/env python3
"""Emit every connected simple graph on 1..N vertices, one per isomorphism class, as graph6.

Every connected graph on n vertices has a non-cut vertex, so extending each connected
graph on n-1 vertices by a new vertex joined to a nonempty subset reaches every class.
Duplicates are removed with a WL-hash bucket followed by an exact isomorphism test.
"""
import sys
from itertools import combinations

import networkx as nx


def extend(graphs, n):
    buckets = {}
    out = []
    for g in graphs:
        for r in range(1, n):
            for nbrs in combinations(range(n - 1), r):
                h = g.copy()
                h.add_node(n - 1)
                h.add_edges_from((n - 1, u) for u in nbrs)
                key = (h.number_of_edges(), tuple(sorted(d for _, d in h.degree())),
                       nx.weisfeiler_lehman_graph_hash(h, iterations=3))
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(h, o) for o in bucket):
                    continue
                bucket.append(h)
                out.append(h)
    return out


def main():
    top = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    level = [nx.empty_graph(1)]
    for n in range(1, top + 1):
        if n > 1:
            level = extend(level, n)
        print(f"n={n}: {len(level)}", file=sys.stderr)
        for g in level:
            sys.stdout.write(nx.to_graph6_bytes(g, header=False).decode())


if __name__ == "__main__":
    main()
