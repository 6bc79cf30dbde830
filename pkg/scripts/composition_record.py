"""Record where phi_jk o phi_ij differs from phi_ik on sampled closed sets."""
import argparse

from stratglue.catalog import example
from stratglue.oracles import sample_closed_sets
from stratglue.strat import composition_defects


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--model", default="oq_gl2", choices=["oq_k2", "oq_gl2", "oq_m2"])
    ap.add_argument("--samples", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    data = example(args.model).to_stratification()
    samples = {k: sample_closed_sets(s, args.samples, seed=args.seed) for k, s in data.strata.items()}
    defects = composition_defects(data, samples)
    print(f"{len(defects)} strict compositions on {args.samples} samples per stratum")
    for d in defects:
        print(" ", d)


if __name__ == "__main__":
    main()
