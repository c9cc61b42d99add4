"""Sample random C_{2l+1}-free graphs and check the layer chromatic bound."""
import argparse
import random

import networkx as nx

from ramsey_descent.graph import Graph
from ramsey_descent.oracle import efrs_check, has_cycle_of_length


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=500)
    ap.add_argument("--l", type=int, default=2)
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    accepted = failures = 0
    while accepted < args.samples:
        h = nx.gnp_random_graph(rng.randint(3, args.max_n), rng.uniform(0.05, 0.4), seed=rng.randrange(10**9))
        g = Graph(h.nodes, h.edges)
        if has_cycle_of_length(g, 2 * args.l + 1) is not None:
            continue
        accepted += 1
        report = efrs_check(g, args.l)
        if not report:
            failures += 1
            print("counterexample", sorted(g.edges), report.counterexample)
    print(f"l={args.l} graphs={accepted} counterexamples={failures}")


if __name__ == "__main__":
    main()
