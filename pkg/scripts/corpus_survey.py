#!/usr/bin/env python3
"""Survey the default corpus: per-ring structure and localization counts.

Useful for eyeballing what the verification suite actually quantifies over.
"""

import argparse
import sys
from collections import Counter

from orespec.finring import RingTable, bits, centre_mask, is_commutative, units_mask
from orespec.harness import CorpusConfig, build_corpus
from orespec.ideals import all_ideal_masks, is_semiprime_ring, min_prime_masks_over
from orespec.localization import left_denominator_sets, mult_set_masks


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-order", type=int, default=16)
    args = ap.parse_args()

    cfg = CorpusConfig(order_cap=args.max_order)
    corpus = build_corpus(cfg)
    finite = [(i.provenance, i.build(cfg.order_cap)) for i in corpus if i.kind == "finite"]
    print(f"{len(corpus)} instances; {len(finite)} finite")
    print(f"{'provenance':<52} {'ord':>3} {'comm':>4} {'semi':>4} "
          f"{'ideals':>6} {'minpr':>5} {'msets':>5} {'dens':>4}")
    tally = Counter()
    for prov, r in finite:
        mins = min_prime_masks_over(r, 1 << r.zero)
        msets = mult_set_masks(r, cfg.exhaustive_mult_order)
        dens = left_denominator_sets(r, cfg.exhaustive_mult_order)
        tally["ideals"] += len(all_ideal_masks(r))
        tally["mult sets"] += len(msets)
        tally["denominator sets"] += len(dens)
        print(f"{prov:<52} {r.order:>3} {str(is_commutative(r)):>4} "
              f"{str(is_semiprime_ring(r)):>4} {len(all_ideal_masks(r)):>6} "
              f"{len(mins):>5} {len(msets):>5} {len(dens):>4}")
    print()
    for key, total in sorted(tally.items()):
        print(f"total {key}: {total}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
