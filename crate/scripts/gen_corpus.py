#!/usr/bin/env python3
"""Enumerate connected simple graphs on 1..8 vertices, one per isomorphism class.

Graphs on n vertices are grown from every graph (connected or not) on n-1
vertices by attaching a new vertex with every possible neighbourhood.
Candidates are bucketed by a Weisfeiler-Lehman hash and de-duplicated with
an exact VF2 isomorphism test. Output is one graph6 file per order.
"""
import sys
from itertools import combinations
from pathlib import Path

import networkx as nx

EXPECTED_CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}
EXPECTED_ALL = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def dedupe(candidates):
    buckets = {}
    for g in candidates:
        key = (g.number_of_edges(), tuple(sorted(d for _, d in g.degree())),
               nx.weisfeiler_lehman_graph_hash(g, iterations=3))
        bucket = buckets.setdefault(key, [])
        if not any(nx.is_isomorphic(g, h) for h in bucket):
            bucket.append(g)
    return [g for b in buckets.values() for g in b]


def extend(graphs, n):
    out = []
    for g in graphs:
        for k in range(n):
            for nbrs in combinations(range(n - 1), k):
                h = g.copy()
                h.add_node(n - 1)
                h.add_edges_from((n - 1, u) for u in nbrs)
                out.append(h)
    return dedupe(out)


def canonical_key(g):
    return nx.to_graph6_bytes(g, header=False).strip().decode()


def main(out_dir, max_n=8):
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    level = [nx.empty_graph(1)]
    for n in range(1, max_n + 1):
        if n > 1:
            level = extend(level, n)
        assert len(level) == EXPECTED_ALL[n], (n, len(level))
        connected = sorted(canonical_key(g) for g in level if nx.is_connected(g))
        assert len(connected) == EXPECTED_CONNECTED[n], (n, len(connected))
        (out_dir / f"connected{n}.g6").write_text("\n".join(connected) + "\n")
        print(f"n={n}: {len(level)} graphs, {len(connected)} connected", file=sys.stderr)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "crates/core/data")
