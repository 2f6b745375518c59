"""Re-derive every transcribed table row and print a one-line comparison for each."""
import argparse
import math
import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "tests"))

from reference_rows import ROWS  # noqa: E402
from dynforge.cli import verify_orbit  # noqa: E402
from dynforge.dynamics import parse_map  # noqa: E402


def compare(row, rel_eps):
    d, flavor, entries, target, expected, printed = row
    rec = verify_orbit(d, flavor, entries, target, rel_eps=rel_eps)
    if "error" in rec:
        return False, rec["error"]["reason"]
    same_map = parse_map(printed, d).to_json() == rec["map_forms"]
    cls = rec["classification"]
    mn = (cls.get("tail_m"), cls.get("period_n"))
    if target == "height_ratio":
        got = rec["score"]
        ok = got != "WORST" and math.isclose(got, expected, rel_tol=1e-2)
        shown = f"ratio {got:.6g} (table {expected})" if got != "WORST" else "WORST"
    elif target == "preperiodic":
        count, want = expected
        got = rec["census"]["count"]
        ok = got == count and mn == want
        shown = f"count {got} {mn} (table {count} {want})"
    else:
        ok = mn == expected
        shown = f"(m, n) {mn} (table {expected})"
    return same_map and ok, shown + ("" if same_map else f"; map {rec['map']} differs")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rel-eps", type=float, default=1e-4)
    args = ap.parse_args()
    failures = 0
    for row in ROWS:
        t0 = time.perf_counter()
        ok, shown = compare(row, args.rel_eps)
        failures += not ok
        d, flavor, entries, target = row[:4]
        print(f"{'ok ' if ok else 'BAD'} d={d} {flavor:<10} {target:<12} {str(entries):<38} {shown}  [{time.perf_counter() - t0:.1f}s]")
    print(f"{len(ROWS) - failures}/{len(ROWS)} rows reproduced")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
