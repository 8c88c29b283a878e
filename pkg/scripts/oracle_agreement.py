#!/usr/bin/env python3
"""Random sweep comparing the realizer search against the brute-force oracle.

Samples regular DAGs (random upper-triangular graphs reduced to their
covers), runs both deciders on each, and reports any disagreement.
Exit status 0 means full agreement.

    python3 scripts/oracle_agreement.py --count 500 --sizes 6,7 --seed 7
"""

from __future__ import annotations

import argparse
import random
import sys

from cobwebs import (
    Digraph,
    FinitePoset,
    Orderable,
    Vertex,
    brute_force_dim_le_2,
    decide_orderable,
    transitive_reduction,
    verify_realizer,
)


def random_regular_dag(rng: random.Random, n: int, prob: float) -> Digraph:
    vs = [Vertex(i, 0) for i in range(1, n + 1)]
    arcs = [
        (vs[i], vs[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < prob
    ]
    return transitive_reduction(Digraph(vs, arcs))


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=500)
    parser.add_argument(
        "--sizes", default="6,7", help="comma-separated vertex counts to sample from"
    )
    parser.add_argument(
        "--probs", default="0.15,0.3,0.5", help="arc probabilities to sample from"
    )
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--budget", type=int, default=1_000_000)
    args = parser.parse_args()

    sizes = [int(s) for s in args.sizes.split(",")]
    probs = [float(s) for s in args.probs.split(",")]
    if max(sizes) > 9:
        parser.error("the oracle refuses more than 9 vertices")

    rng = random.Random(args.seed)
    orderable = disagreements = inconclusive = 0
    for k in range(args.count):
        g = random_regular_dag(rng, rng.choice(sizes), rng.choice(probs))
        verdict = decide_orderable(g, search_budget=args.budget)
        truth = brute_force_dim_le_2(FinitePoset.from_digraph(g))
        if isinstance(verdict, Orderable):
            orderable += 1
            if not (truth and verify_realizer(verdict.realizer)):
                disagreements += 1
                print(f"[{k}] search says orderable, oracle disagrees: {g.arcs}")
        else:
            if not verdict.exhaustive:
                inconclusive += 1
            elif truth:
                disagreements += 1
                print(f"[{k}] oracle says orderable, search disagrees: {g.arcs}")

    print(
        f"{args.count} graphs: {orderable} orderable, "
        f"{args.count - orderable} not, {inconclusive} inconclusive, "
        f"{disagreements} disagreements"
    )
    return 1 if disagreements else 0


if __name__ == "__main__":
    sys.exit(main())
