"""
Buchberger lineages on a small ideal
====================================

Run the Buchberger oracle on (x^2 - y, x^3 - z) and follow where each basis
element came from.
"""

from gbsample import PolynomialRing, buchberger, format_lineage, longest_lineage, minimalize

# three variables, graded reverse lexicographic order, rational coefficients
R = PolynomialRing(3, "grevlex", names=("x", "y", "z"))
F = [R("x^2 - y"), R("x^3 - z")]

# pairs are processed first come, first served
B = buchberger(F, strategy="first")
for p, lin in B.elements:
    print(f"{str(p):12s} {format_lineage(lin)}")
print("longest lineage:", longest_lineage(B))

# x^3 - z is redundant: its initial monomial is a multiple of x^2
print("minimal basis:", [str(p) for p in minimalize(B).polynomials])
