#!/usr/bin/env python3
"""Regenerates data/corpus/*.edges and *.rot.

Edge lists use the project's canonical form (sorted (u, v) pairs with u < v);
rotation files list each vertex's incident edge ids in the cyclic order of a
sphere embedding. Facts files (*.json) are hand-maintained and are not touched
here. Output is deterministic for a fixed networkx version and seed.

    python3 tools/corpus/gen_corpus.py data/corpus
"""

import random
import sys
from pathlib import Path

import networkx as nx


def herschel():
    adj = {0: [1, 3, 4], 1: [2, 5, 6], 2: [3, 7], 3: [8, 9], 4: [5, 9],
           5: [10], 6: [7, 10], 7: [8], 8: [10], 9: [10]}
    return nx.Graph([(u, v) for u in adj for v in adj[u]])


def k24():
    # 0, 1 are the degree-4 side; 2..5 the degree-2 side.
    return nx.Graph([(a, b) for a in (0, 1) for b in (2, 3, 4, 5)])


def prism():
    return nx.Graph([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                     (0, 3), (1, 4), (2, 5)])


def grinberg_like(seed=1968, target=(9, 8, 8, 8) + (5,) * 21):
    """Edge-flip search for a sphere triangulation whose degree sequence is
    `target`; its dual is a cubic plane graph with that face vector."""
    rng = random.Random(seed)
    nv = len(target)
    want = sorted(target, reverse=True)
    while True:
        # Bipyramid over a (nv - 2)-cycle.
        ring = list(range(2, nv))
        tris = set()
        for i, a in enumerate(ring):
            b = ring[(i + 1) % len(ring)]
            tris.add(frozenset((0, a, b)))
            tris.add(frozenset((1, a, b)))
        edges = {}
        for t in tris:
            for e in _tri_edges(t):
                edges.setdefault(e, set()).add(t)

        def degrees():
            deg = [0] * nv
            for (a, b) in edges:
                deg[a] += 1
                deg[b] += 1
            return deg

        def cost(deg):
            return sum(abs(x - y) for x, y in zip(sorted(deg, reverse=True), want))

        deg = degrees()
        cur = cost(deg)
        temp = 2.0
        for _ in range(400000):
            if cur == 0:
                break
            e = rng.choice(list(edges))
            t1, t2 = edges[e]
            a, b = tuple(e)
            c = next(iter(t1 - e))
            d = next(iter(t2 - e))
            ne = frozenset((c, d))
            if ne in edges or deg[a] <= 3 or deg[b] <= 3:
                continue
            deg[a] -= 1
            deg[b] -= 1
            deg[c] += 1
            deg[d] += 1
            new = cost(deg)
            if new <= cur or rng.random() < pow(2.718, (cur - new) / temp):
                del edges[e]
                n1, n2 = frozenset((a, c, d)), frozenset((b, c, d))
                for t in (t1, t2):
                    for f in _tri_edges(t):
                        if f in edges:
                            edges[f].discard(t)
                for t in (n1, n2):
                    for f in _tri_edges(t):
                        edges.setdefault(f, set()).add(t)
                cur = new
            else:
                deg[a] += 1
                deg[b] += 1
                deg[c] -= 1
                deg[d] -= 1
            temp = max(0.05, temp * 0.9999)
        if cur != 0:
            continue
        tris = sorted({t for ts in edges.values() for t in ts}, key=sorted)
        index = {t: i for i, t in enumerate(tris)}
        g = nx.Graph()
        for e, ts in edges.items():
            t1, t2 = ts
            g.add_edge(index[t1], index[t2])
        if nx.girth(g) >= 5 and nx.node_connectivity(g) == 3:
            return g


def _tri_edges(t):
    a, b, c = sorted(t)
    return (frozenset((a, b)), frozenset((a, c)), frozenset((b, c)))


def canonical_edges(g):
    return sorted(tuple(sorted(e)) for e in g.edges())


def rotation(g, edges):
    ok, emb = nx.check_planarity(g)
    if not ok:
        return None
    eid = {e: i for i, e in enumerate(edges)}
    rot = {}
    for v in range(g.number_of_nodes()):
        rot[v] = [eid[tuple(sorted((v, w)))] for w in emb.neighbors_cw_order(v)]
    return rot


def write(outdir, name, g, note):
    g = nx.convert_node_labels_to_integers(g, ordering="sorted")
    edges = canonical_edges(g)
    with open(outdir / f"{name}.edges", "w") as f:
        f.write(f"# {name}: n={g.number_of_nodes()} m={len(edges)}\n")
        f.write(f"# {note}\n")
        for u, v in edges:
            f.write(f"{u} {v}\n")
    rot = rotation(g, edges)
    if rot is not None:
        with open(outdir / f"{name}.rot", "w") as f:
            f.write(f"# {name}: incident edge ids in cyclic order\n")
            for v in sorted(rot):
                f.write(f"{v}: {' '.join(map(str, rot[v]))}\n")


def main():
    outdir = Path(sys.argv[1] if len(sys.argv) > 1 else "data/corpus")
    outdir.mkdir(parents=True, exist_ok=True)
    write(outdir, "triangle", nx.cycle_graph(3), "smallest cycle")
    write(outdir, "chorded-square", nx.Graph([(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]),
          "4-cycle 0-1-2-3 with chord 0-2")
    write(outdir, "k4", nx.complete_graph(4), "complete graph K4")
    write(outdir, "k24", k24(), "complete bipartite K_{2,4}; 0,1 have degree 4")
    write(outdir, "prism", prism(), "triangular prism; triangles 0-1-2 and 3-4-5")
    write(outdir, "herschel", herschel(), "Herschel graph: bipartite 5+6, 9 quadrilateral faces")
    write(outdir, "petersen", nx.petersen_graph(), "Petersen graph (non-planar)")
    write(outdir, "dodecahedron", nx.dodecahedral_graph(), "dodecahedral graph")
    write(outdir, "grinberg-graph", grinberg_like(),
          "cubic plane graph with Grinberg's face vector 21x5, 3x8, 1x9 (seeded flip search)")
    write(outdir, "tutte", nx.tutte_graph(), "Tutte graph")


if __name__ == "__main__":
    main()
