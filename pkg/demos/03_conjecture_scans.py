"""
Looking for counterexamples
===========================

When E1 and E2 fall in distinct gaps of G, the theorem does not say which of
the two crossed chains holds. The scans below test every such draw on the
shipped grids; a counterexample would be a draw where neither chain holds.
"""

# %%
import time
from collections import Counter

from interlacing.scan import default_spec, scan_conjecture1, scan_conjecture2

for scan, name in ((scan_conjecture1, "conjecture1"), (scan_conjecture2, "conjecture2")):
    spec = default_spec(name)
    t0 = time.perf_counter()
    res = scan(spec)
    dt = time.perf_counter() - t0
    s = res.summary
    crossed = sum(r.distinct_gaps for r in res.records)
    print(f"{name}: {s['records']} draws in {dt:.1f}s, {crossed} with distinct gaps, "
          f"{s['counterexamples']} counterexamples")
    print("  verdicts:", {k: v for k, v in s["verdicts"].items() if v})
    print("  skipped :", s["skipped"])

# %%
# Which gap pairs show up most often for Pseudo-Jacobi?
pairs = Counter(
    (str(r.report.placement_e1), str(r.report.placement_e2)) for r in res.records if r.distinct_gaps
)
for pair, count in pairs.most_common(5):
    print(pair, count)
