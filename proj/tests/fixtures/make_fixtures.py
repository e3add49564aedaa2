#!/usr/bin/env python3
"""Regenerates the committed fixture CSVs.

The fixtures are checked in; rerun this only when deliberately changing
them, and commit the regenerated files together with this script.

Both fixtures plant a known regional structure: dense, heavy intra-region
trade against sparse, light cross-region trade. That construction guarantees
strongly positive regional assortativity and mostly-internal (negative E-I)
per-node scores, which the acceptance checks assert after the pipeline's
backbone filter.
"""

import math
import pathlib
import random

HERE = pathlib.Path(__file__).resolve().parent


def log_uniform(rng, lo, hi):
    return 10.0 ** rng.uniform(math.log10(lo), math.log10(hi))


def planted_network(prefix, regions, per_region, p_intra, p_inter, w_intra, w_inter, seed):
    rng = random.Random(seed)
    nodes = [f"{prefix}{i + 1:02d}" for i in range(regions * per_region)]
    region_of = {node: f"R{i // per_region + 1}" for i, node in enumerate(nodes)}
    edges = []
    for u in nodes:
        for v in nodes:
            if u == v:
                continue
            same = region_of[u] == region_of[v]
            p = p_intra if same else p_inter
            if rng.random() < p:
                lo, hi = w_intra if same else w_inter
                edges.append((u, v, round(log_uniform(rng, lo, hi), 3)))
    return nodes, region_of, edges


def write_fixture(name, nodes, region_of, edges):
    with open(HERE / f"{name}_edges.csv", "w") as out:
        out.write("source,target,weight\n")
        for u, v, w in edges:
            out.write(f"{u},{v},{w}\n")
    with open(HERE / f"{name}_partition.csv", "w") as out:
        out.write("node,region\n")
        for node in nodes:
            out.write(f"{node},{region_of[node]}\n")
    print(f"{name}: {len(nodes)} nodes, {len(edges)} edges")


def main():
    nodes, region_of, edges = planted_network(
        "c", regions=5, per_region=12,
        p_intra=0.30, p_inter=0.02,
        w_intra=(5.0, 50.0), w_inter=(0.5, 2.0),
        seed=7,
    )
    write_fixture("synthetic60", nodes, region_of, edges)

    nodes, region_of, edges = planted_network(
        "m", regions=7, per_region=8,
        p_intra=0.35, p_inter=0.06,
        w_intra=(2.0, 20.0), w_inter=(0.5, 2.0),
        seed=11,
    )
    write_fixture("sevenregion", nodes, region_of, edges)


if __name__ == "__main__":
    main()
