"""Graphs where deleting any non-pendant edge fails to raise avd strictly.

Prints each isomorphism class with its avd, its shape, and the best avd
reachable by one non-pendant edge deletion, so ties are easy to spot.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from fractions import Fraction

from domforge.dompoly import avd
from domforge.formats import from_graph6
from domforge.graph import has_isolated, is_extremal_shape, is_forest, remove_edge
from domforge.verify import edge_removal_sweep


@dataclass
class ExploreConfig:
    n_min: int = 4
    n_max: int = 7
    workers: int = 1


def best_deletion(G) -> Fraction:
    best = None
    for u, v in G.edges():
        if G.degree(u) > 1 and G.degree(v) > 1:
            q = avd(remove_edge(G, u, v))
            best = q if best is None or q > best else best
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=ExploreConfig.n_max)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    cfg = ExploreConfig(n_max=args.max_n, workers=args.workers)
    for n in range(cfg.n_min, cfg.n_max + 1):
        rep = edge_removal_sweep(n, "non-pendant-edge", cfg.workers)
        print(f"n={n}: {len(rep.counterexamples)} classes out of {rep.tested} labeled graphs tested")
        for f in rep.counterexamples:
            G = from_graph6(f["graph6"])
            q, b = avd(G), best_deletion(G)
            if not is_forest(G):
                kind = "has a cycle"
            elif has_isolated(G):
                kind = "forest with isolated vertices"
            else:
                kind = "extremal forest" if is_extremal_shape(G) else "forest"
            print(f"  {f['graph6']:10s} avd={q} best_after_deletion={b} tie={q == b} {kind}")


if __name__ == "__main__":
    main()
