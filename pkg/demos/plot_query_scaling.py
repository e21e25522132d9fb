"""
Primitive queries against universe size
=======================================

Pad the universe of a fixed ideal with more and more redundant elements and
count how many divisibility tests the sampler needs.
"""

from gbsample.bench import scaling_sweep

# a shorter sweep than the acceptance run, same construction
res = scaling_sweep(sizes=(100, 200, 400, 800), seeds=5)
for n, q in zip(res["sizes"], res["mean_queries"]):
    print(f"|H| = {n:5d}   mean queries = {q:8.1f}")

# a slope near 1 on the log-log scale means roughly linear cost in |H|
print(f"log-log slope: {res['slope']:.2f}")
