#!/usr/bin/env python3
"""Run the headline verifications and print a human-readable report.

Covers the Ramsey base facts, the minimum-degree scans over the small-graph
corpora, the Hanson-Toft constructions, and the structural property suite.
Exits nonzero if any assertion fails.
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from rck.arrowing import CliqueVector
from rck.cocritical import is_cocritical, is_minimal_cocritical, lemma_suite
from rck.constructions import hanson_toft, k6_minus, ramsey_fact, sharp_mindeg_bound
from rck.enumerate_graphs import all_graphs


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=8,
                        help="largest corpus size for the exhaustive scan")
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    failures = 0

    def report(name: str, ok: bool, detail: str = "") -> None:
        nonlocal failures
        print(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""))
        if not ok:
            failures += 1

    t0 = time.perf_counter()
    for sizes in ((3, 3), (3, 4)):
        spec = CliqueVector(sizes)
        fact = ramsey_fact(spec, workers=args.workers)
        report(f"ramsey r({spec}) = {fact.r}", fact.lower_witness is not None,
               fact.provenance)

    spec33 = CliqueVector((3, 3))
    bound = sharp_mindeg_bound(spec33)
    for n in range(6, args.max_n + 1):
        found = []
        for g in all_graphs(n):
            if g.is_complete():
                continue
            rep = is_cocritical(g, spec33)
            if rep.is_cocritical:
                found.append((g, rep))
        all_ok = all(r.delta >= bound for _, r in found)
        sharp = any(r.delta == bound for _, r in found)
        report(f"(3,3)-co-critical scan n={n}: {len(found)} found",
               all_ok and sharp, f"min degree >= {bound}, sharp witness present")
        for g, rep in found:
            suite = lemma_suite(g, spec33)
            report(f"  structural suite ({rep.edge_count} edges)",
                   all(f.holds for f in suite))

    k6m = k6_minus()
    rep = is_cocritical(k6m, spec33)
    report("K6 minus an edge is (3,3)-co-critical", rep.is_cocritical is True)
    report("K6 minus an edge is minimal",
           is_minimal_cocritical(k6m, spec33, report=rep))

    spec34 = CliqueVector((3, 4))
    for n in (9, 10):
        g = hanson_toft(spec34, n)
        rep = is_cocritical(g, spec34, workers=args.workers)
        report(f"hanson-toft (3,4) n={n} co-critical with delta 7",
               rep.is_cocritical is True and rep.delta == 7)
        suite = lemma_suite(g, spec34)
        report(f"  structural suite n={n}", all(f.holds for f in suite))

    print(f"\n{failures} failures in {time.perf_counter() - t0:.1f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
