"""
Classifying a module over sl2 x Q[t]/(t^2 - 1)
==============================================

psi(h x 1) = 5 and psi(h x t) = 1. The two points t = -1 and t = 1 carry
weights 2 and 3, so the module should be V(2) (x) V(3): weight
multiplicities 1, 2, 3, 3, 2, 1 going down from the top.
"""

from fractions import Fraction

from currentkm import Ideal, classify_module, poly_parse, predicted_character, psi_validate

ring = ("t",)
ideal = Ideal(ring, [poly_parse("t^2 - 1", ring)])
spec = psi_validate([[2]], ideal, {(0, "1"): Fraction(5), (0, "t"): Fraction(1)})

# %% the verdict and the evaluation weights
d = classify_module(spec)
print(d.verdict)
for p, w in zip(d.points, d.weights):
    print("  t =", p[0], "-> weight", w[0])

# %% predicted character, indexed by how far below the top weight we are
print(predicted_character(d, 6).sequence())

# %% with psi(h x t) = 7 the weight at t = -1 is (5 - 7)/2 = -1
bad = psi_validate([[2]], ideal, {(0, "1"): Fraction(5), (0, "t"): Fraction(7)})
d = classify_module(bad)
print(d.verdict, d.reason)
