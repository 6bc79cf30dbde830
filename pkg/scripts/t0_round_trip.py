"""Stratify every T0 topology on up to N points into singletons and glue it back."""
import argparse
import time

from stratglue.strat import extract_stratification, glue_topology, stratify_by_specialization
from stratglue.topology import all_topologies


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-points", type=int, default=4)
    args = ap.parse_args()
    for n in range(1, args.max_points + 1):
        start = time.perf_counter()
        spaces = all_topologies(n)
        bad = 0
        for space in spaces:
            parts, p = stratify_by_specialization(space)
            bad += glue_topology(extract_stratification(space, parts, p)).closed != space.closed
        print(f"{n} points: {len(spaces)} T0 topologies, {bad} mismatches, {time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    main()
