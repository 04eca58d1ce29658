"""Randomized depth-first search for Boolean bent functions.

The search assigns bits in a shuffled order, keeps running Walsh
accumulators, and prunes any branch whose accumulators can no longer reach
+-2^(n/2).  A fixed seed replays the identical trace.
"""

from parybent import is_bent, search_bent
from parybent.search import is_boolean_bent

for seed in (0, 1, 2):
    f, trace = search_bent(4, seed=seed)
    print(f"seed {seed}: {f.values}")
    print(f"  weight {sum(f.values)},"
          f" fast check {is_boolean_bent(f.values, 4)},"
          f" exact check {is_bent(f)}")

f, trace = search_bent(4, seed=42)
print("\nassignment trace for seed 42 (vector, bit, accumulator snapshot):")
for step in trace:
    print(f"  {step.vector} <- {step.bit}   W = {list(step.walsh)}")
print("final snapshot flat at +-4:", all(abs(w) == 4 for w in trace[-1].walsh))
