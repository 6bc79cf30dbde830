"""Print the GL2 comorphism data and push a few closed sets through each phi."""
import argparse

from stratglue.catalog import example
from stratglue.cli import parse_closed_set


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("sets", nargs="*", default=["V(D - 5)", "V(t - 2)", "{t=1, D=3; t=-1, D=3}", "whole"],
                    help="closed sets of stratum 0")
    args = ap.parse_args()
    m = example("oq_gl2")
    data = m.to_stratification()
    for pair in sorted(m.zjk):
        f, g = m.f_map(pair), m.g_map(pair)
        print(f"Z_{pair[0]},{pair[1]} = {f.source}   f: {f.describe()}   g: {g.describe()}")
    print()
    space = data.strata["0"]
    for text in args.sets:
        Y = parse_closed_set(space, text)
        print(f"Y = {space.render(Y, '0')}")
        for (i, j), phi in sorted(data.phis.items()):
            if i == "0":
                print(f"  phi_0{j}: {data.strata[j].render(phi(Y), j)}")


if __name__ == "__main__":
    main()
