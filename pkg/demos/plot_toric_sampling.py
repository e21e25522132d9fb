"""
Sampling a basis of the twisted cubic
=====================================

Build the degree-2 toric universe of the twisted cubic, then let the sampler
find a minimal Groebner basis in it. A deliberately low guess of the basis
size shows the escalation loop at work.
"""

import numpy as np

from gbsample import PipelineConfig, PolynomialRing, run_spark, toric_universe

A = np.array([[3, 2, 1, 0], [0, 1, 2, 3]])
R = PolynomialRing(4, "grevlex", names=("x", "y", "z", "w"))

# every binomial x^u - x^v of degree <= 2 with A u = A v
H = toric_universe(A, 2, ring=R)
print("universe:", [str(p) for p in H.polynomials])

F = [R("x*z - y^2"), R("y*w - z^2"), R("x*w - y*z")]
report = run_spark(PipelineConfig(input=F, universe="toric:A", matrix=A,
                                  predictor="constant:3,2"))
print("basis:", report.basis, "verified:", report.verified)

# guessing k = 1 is too small; the run doubles k until the candidate fits
report = run_spark(PipelineConfig(input=F, universe="toric:A", matrix=A,
                                  predictor="constant:1,2"))
print("k_used:", report.k_used, "escalations:", report.escalations)
