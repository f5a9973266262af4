"""Regenerates the frozen search results in this directory.

Brute force over every labelled graph on n vertices with numpy: the edge
bound is checked on every vertex subset, radii come from eigvalsh, and
maximizers are grouped up to isomorphism with networkx.

    python3 generate.py
"""

import itertools
import json
from fractions import Fraction
from math import ceil, floor
from pathlib import Path

import networkx as nx
import numpy as np

CASES = [(Fraction(1), Fraction(0)), (Fraction(2), Fraction(0)), (Fraction(3, 2), Fraction(0))]
ORDERS = [5, 6, 7]
TIE = 1e-9
BATCH = 1 << 16


def pairs(n):
    return [(i, j) for j in range(1, n) for i in range(j)]


def satisfying_masks(n, t, r):
    ps = pairs(n)
    m = len(ps)
    masks = np.arange(1 << m, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(m)) & 1).astype(np.int16)
    ok = np.ones(len(masks), dtype=bool)
    lo = max(ceil(t), 1)
    for k in range(lo, n + 1):
        budget = floor(t * k + r)
        for subset in itertools.combinations(range(n), k):
            inside = np.array([i in subset and j in subset for i, j in ps], dtype=np.int16)
            ok &= bits @ inside <= budget
    return masks[ok], bits[ok]


def radii(n, bits):
    ps = pairs(n)
    out = np.empty(len(bits))
    for start in range(0, len(bits), BATCH):
        chunk = bits[start:start + BATCH]
        a = np.zeros((len(chunk), n, n))
        for k, (i, j) in enumerate(ps):
            a[:, i, j] = chunk[:, k]
            a[:, j, i] = chunk[:, k]
        out[start:start + BATCH] = np.linalg.eigvalsh(a)[:, -1]
    return out


def graph_of(n, mask):
    g = nx.empty_graph(n)
    g.add_edges_from(p for k, p in enumerate(pairs(n)) if mask >> k & 1)
    return g


def run(n, t, r):
    masks, bits = satisfying_masks(n, t, r)
    rho = radii(n, bits)
    best = float(rho.max())
    reps = []
    for mask in masks[rho >= best - TIE]:
        g = graph_of(n, int(mask))
        if not any(nx.is_isomorphic(g, h) for h in reps):
            reps.append(g)
    return {
        "t": str(t),
        "r": str(r),
        "n": n,
        "satisfying_graphs": int(len(masks)),
        "max_rho": best,
        "maximizers": sorted(nx.to_graph6_bytes(g, header=False).decode().strip() for g in reps),
    }


def main():
    here = Path(__file__).parent
    for t, r in CASES:
        for n in ORDERS:
            result = run(n, t, r)
            name = f"t{str(t).replace('/', '_')}_r{r}_n{n}.json"
            (here / name).write_text(json.dumps(result, indent=2) + "\n")
            print(name, result["satisfying_graphs"], result["max_rho"], result["maximizers"])


if __name__ == "__main__":
    main()
