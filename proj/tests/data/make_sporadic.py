"""Writes the sporadic graphs used by the imported table rows.

Hoffman-Singleton comes from networkx. M22, Higman-Sims and Gewirtz are built from
the Steiner system S(3,6,22), obtained from the octads of the extended binary Golay
code through two fixed points.
"""
import itertools
import pathlib
import sys

import networkx as nx


def golay_octads():
    g = [1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1]  # x^11+x^10+x^6+x^5+x^4+x^2+1, low degree first
    rows = []
    for s in range(12):
        w = [0] * 23
        for i, c in enumerate(g):
            w[i + s] = c
        rows.append(w + [sum(w) % 2])
    octads = set()
    for mask in range(1 << 12):
        w = [0] * 24
        for i in range(12):
            if mask >> i & 1:
                w = [(a + b) % 2 for a, b in zip(w, rows[i])]
        if sum(w) == 8:
            octads.add(frozenset(i for i in range(24) if w[i]))
    assert len(octads) == 759
    return octads


def s3622():
    hexads = sorted(tuple(sorted(o - {22, 23})) for o in golay_octads() if {22, 23} <= o)
    assert len(hexads) == 77
    return [frozenset(h) for h in hexads]


def write(path, n, edges):
    with open(path, "w") as f:
        f.write(f"{n} {len(edges)}\n")
        for u, v in sorted(edges):
            f.write(f"{u} {v}\n")


def main(out):
    out = pathlib.Path(out)
    out.mkdir(parents=True, exist_ok=True)
    hs = nx.convert_node_labels_to_integers(nx.hoffman_singleton_graph())
    write(out / "hoffman_singleton.graph", 50, [tuple(sorted(e)) for e in hs.edges()])

    hexads = s3622()
    m22 = [(i, j) for i, j in itertools.combinations(range(77), 2) if not hexads[i] & hexads[j]]
    write(out / "m22.graph", 77, m22)

    # Higman-Sims: 0 is the extra vertex, 1..22 the points, 23..99 the hexads.
    hisi = [(0, 1 + p) for p in range(22)]
    hisi += [(1 + p, 23 + i) for i, h in enumerate(hexads) for p in h]
    hisi += [(23 + i, 23 + j) for i, j in m22]
    write(out / "higman_sims.graph", 100, hisi)

    away = [h for h in hexads if 0 not in h]
    gew = [(i, j) for i, j in itertools.combinations(range(len(away)), 2) if not away[i] & away[j]]
    write(out / "gewirtz.graph", len(away), gew)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).parent / "sporadic")
