#!/usr/bin/env python3
"""Run the exact realization oracle on every shipped fixture, with timing.

Usage: python3 scripts/oracle_runs.py [--mode cyclic|inseparable] [--flavor r|c|both]
"""

import argparse
import sys
import time
from importlib import resources

from eqposet import (Flavor, ParameterError, build_model, default_tower,
                     load_poset, run_verification)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--mode", choices=["cyclic", "inseparable"], default="cyclic")
    ap.add_argument("--flavor", choices=["r", "c", "both"], default="both")
    args = ap.parse_args()

    flavors = [Flavor.R, Flavor.C] if args.flavor == "both" else [Flavor(args.flavor)]
    fixtures = sorted(f.name[:-4] for f in (resources.files("eqposet") / "fixtures").iterdir()
                      if f.name.endswith(".eqp"))
    towers = {}
    failures = skipped = 0
    t0 = time.perf_counter()
    for name in fixtures:
        P = load_poset(str(resources.files("eqposet") / "fixtures" / f"{name}.eqp"))
        if P.p not in towers:
            towers[P.p] = default_tower(P.p, args.mode)
        for fl in flavors:
            M = build_model(P, fl)
            t1 = time.perf_counter()
            try:
                rep = run_verification(M, towers[P.p])
            except ParameterError as e:
                print(f"{name:<16} {fl.value}  skipped: {e}")
                skipped += 1
                continue
            dt = time.perf_counter() - t1
            verdict = "ok" if rep.ok else "FAIL"
            note = "" if rep.adm.division_exhaustive else "  (structural division check)"
            print(f"{name:<16} {fl.value}  {verdict}  {dt * 1000:7.1f} ms{note}")
            if not rep.ok:
                failures += 1
                print(rep)
    total = time.perf_counter() - t0
    print(f"total: {total:.2f} s, {failures} failure(s), {skipped} skipped")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
