"""
Checking a prediction against the explicit module
=================================================

The oracle builds the Verma-type module on PBW monomials and takes Gram
ranks of the contravariant form. Those ranks are the weight multiplicities
of the irreducible quotient, computed with no reference to the theory.
"""

from fractions import Fraction

from currentkm import Ideal, classify_module, poly_parse, predicted_character, psi_validate
from currentkm.oracle import irreducible_character, nilpotency_probe

ring = ("t",)
A2 = [[2, -1], [-1, 2]]

# %% sl3 over Q[t]/(t^2 - t): two points, weights (0,2) and (1,0)
ideal = Ideal(ring, [poly_parse("t^2 - t", ring)])
psi = {(0, "1"): 1, (0, "t"): 1, (1, "1"): 2, (1, "t"): 0}
spec = psi_validate(A2, ideal, {k: Fraction(v) for k, v in psi.items()})
d = classify_module(spec)
print("weights:", [tuple(map(str, w)) for w in d.weights])

observed = irreducible_character(spec, 5)
predicted = predicted_character(d, 5)
print("agree up to height 5:", observed.same_entries(predicted))
print("height 2 layer:", observed.layer(2))

# %% a nilpotent current with nonzero psi: f x 1 never dies
ideal = Ideal(ring, [poly_parse("t^2", ring)])
spec = psi_validate([[2]], ideal, {(0, "1"): Fraction(2), (0, "t"): Fraction(1)})
print(classify_module(spec).verdict)
print(nilpotency_probe(spec, (1, 0, 0), max_power=8))
print("dims:", irreducible_character(spec, 6).sequence())
