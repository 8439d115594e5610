#!/usr/bin/env python3
"""Classify the shipped corpus: simplicity verdict for every module, then
pairwise isomorphism verdicts within each (m, k, t) family of block
specs.

The pairwise pass uses the complete spec-level decision, so "distinct"
rows are proofs, not search failures.
"""

import argparse
import itertools
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from taftlab.constructions import iso_semisimple
from taftlab.fixtures import negative_modules, positive_modules, ss_specs
from taftlab.hmodule import is_h_simple


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--skip-simplicity", action="store_true",
                    help="only run the isomorphism pass")
    args = ap.parse_args()

    if not args.skip_simplicity:
        print("== simplicity ==")
        for name, mod in sorted(positive_modules().items()):
            t0 = time.perf_counter()
            verdict = is_h_simple(mod)
            print("%-24s dim %3d  %-18s %6.2fs" %
                  (name, mod.algebra.dim, type(verdict).__name__,
                   time.perf_counter() - t0))
        for name, mod in sorted(negative_modules().items()):
            verdict = is_h_simple(mod)
            extra = ""
            if getattr(verdict, "witness", None) is not None:
                extra = " (witness dim %d)" % verdict.witness.dim
            print("%-24s dim %3d  %s%s" %
                  (name, mod.algebra.dim, type(verdict).__name__, extra))

    print("\n== isomorphism classes among block specs ==")
    specs = ss_specs()
    by_shape = {}
    for name, spec in specs.items():
        by_shape.setdefault((spec.m, spec.k, spec.t), []).append(name)
    for shape in sorted(by_shape):
        family = sorted(by_shape[shape])
        if len(family) < 2:
            continue
        print("shape m=%d k=%d t=%d:" % shape)
        for a, b in itertools.combinations(family, 2):
            w = iso_semisimple(specs[a], specs[b])
            if w is None:
                print("  %-18s %-18s distinct" % (a, b))
            else:
                print("  %-18s %-18s isomorphic (r=%d)" % (a, b, w.r))
    return 0


if __name__ == "__main__":
    sys.exit(main())
