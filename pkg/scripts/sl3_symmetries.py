"""Tabulate SL3 H-prime heights and check the listed symmetry identities."""
from collections import Counter

from stratglue.catalog import LISTED_IDENTITIES, example, hprime_height, symmetry_instance_check
from stratglue.catalog.sl3 import symmetry_images
from stratglue.poset import covers


def main() -> None:
    m = example("oq_sl3_poset")
    heights = Counter(hprime_height(m, lab) for lab in m.poset.elements)
    print(f"{len(m.poset.elements)} H-primes, {len(covers(m.poset))} covers")
    print("height counts:", " ".join(f"{h}:{heights[h]}" for h in sorted(heights)))
    for ident in LISTED_IDENTITIES:
        ok = symmetry_instance_check(ident)
        print(f"{'ok  ' if ok else 'FAIL'} {ident.key:<28} images {', '.join(symmetry_images(ident))}")


if __name__ == "__main__":
    main()
