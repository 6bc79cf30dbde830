"""Compare ideal-level f-up-g with the pointwise oracle on every M2 pair."""
import argparse
import time

from stratglue.catalog import example
from stratglue.checks import ftopg_oracle_sweep


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--model", default="oq_m2", choices=["oq_k2", "oq_gl2", "oq_m2"])
    ap.add_argument("-n", type=int, default=50, help="closed sets per pair")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    m = example(args.model)
    start = time.perf_counter()
    failed = 0
    for pair in sorted(m.zjk):
        s = ftopg_oracle_sweep(m, pair, n=args.n, seed=args.seed)
        failed += not s.ok
        print(f"{pair[0]:>4} < {pair[1]:<4} sets={s.sets} points={s.points} hits={s.hits} {'ok' if s.ok else 'FAIL'}")
        for line in s.failures[:3]:
            print("     ", line)
    print(f"{len(m.zjk)} pairs, {failed} failing, {time.perf_counter() - start:.1f}s")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
