"""Search for a low-genus rotation system of I(Co_H(D_n)) by local search.

Used once to produce tests/data/torus_rotation_n6.json:

    python scripts/find_rotation_system.py --n 6 --target 1 --out tests/data/torus_rotation_n6.json
"""

from __future__ import annotations

import argparse
import json
import random

from comax.embedding import _trace_faces, rotation_genus
from comax.hypergraph import build_hypergraph, incidence_graph


def search(adj, target, seed, max_steps=200_000):
    rng = random.Random(seed)
    rot = {u: rng.sample(list(nbrs), len(nbrs)) for u, nbrs in adj.items()}
    movable = [u for u in adj if len(adj[u]) > 2]
    n_faces = len(_trace_faces(adj, rot))
    v, e = len(adj), sum(len(a) for a in adj.values()) // 2
    for step in range(max_steps):
        if (2 - v + e - n_faces) // 2 <= target:
            return rot
        u = rng.choice(movable)
        old = rot[u]
        new = old[:]
        i, j = rng.sample(range(len(new)), 2)
        new[i], new[j] = new[j], new[i]
        rot[u] = new
        f = len(_trace_faces(adj, rot))
        temp = max(0.05, 1.0 - step / (max_steps / 2))
        if f >= n_faces or rng.random() < pow(2.718, (f - n_faces) / temp):
            n_faces = f
        else:
            rot[u] = old
    return None


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=6)
    ap.add_argument("--target", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out")
    args = ap.parse_args()

    h = build_hypergraph(args.n)
    inc = incidence_graph(h)
    adj = inc.adjacency()
    for seed in range(args.seed, args.seed + 50):
        rot = search(adj, args.target, seed)
        if rot is not None:
            break
    else:
        raise SystemExit("no rotation system found")
    genus = rotation_genus(adj, rot)
    payload = {
        "n": args.n,
        "genus": genus,
        "seed": seed,
        "labels": {str(u): inc.node_label(u) for u in sorted(adj)},
        "rotation": {str(u): rot[u] for u in sorted(rot)},
    }
    text = json.dumps(payload, indent=1)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    print(f"n={args.n} genus={genus} seed={seed}")


if __name__ == "__main__":
    main()
