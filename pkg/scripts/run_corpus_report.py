#!/usr/bin/env python3
"""Generate the standard corpus and print a one-line classification per member.

Usage: python3 scripts/run_corpus_report.py [--outdir DIR]

Writes .cay files when --outdir is given; always prints the summary table
and the tallies of the three countability verdicts.
"""

import argparse
from collections import Counter

from zsubdirect.cli import classification_report
from zsubdirect.corpus import corpus_generate, standard_corpus


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", help="also write .cay files here")
    args = parser.parse_args()
    if args.outdir:
        paths = corpus_generate("standard", [], args.outdir)
        print(f"wrote {len(paths)} files to {args.outdir}")

    tally = Counter()
    print(f"{'name':<12} {'n':>3}  reg  c.reg  ncond  Z-subdirect  Z-subsemigroups")
    for name, s in standard_corpus():
        rep = classification_report(s, name)
        zd = rep["verdicts"]["z_subdirect"]["count"]
        zs = rep["verdicts"]["z_subsemigroups"]["count"]
        tally[("subdirect", zd)] += 1
        tally[("subsemigroups", zs)] += 1
        print(
            f"{name:<12} {rep['order']:>3}  "
            f"{'y' if rep['regular'] else '.':>3}  "
            f"{'y' if rep['completely_regular'] else '.':>5}  "
            f"{'y' if rep['n_condition'] else '.':>5}  "
            f"{zd:<11}  {zs}"
        )
    print()
    for (kind, verdict), count in sorted(tally.items()):
        print(f"{kind:>14} {verdict}: {count}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
