"""
Quotient algebras and their rational points
===========================================

A cofinite ideal cuts out finitely many points. We compute a reduced
Groebner basis, the quotient basis, the radical and the idempotents that
split A/J into one copy of Q per point.
"""

from currentkm import buchberger, crt_idempotents, maximal_points, quotient_algebra, radical_zero_dim
from currentkm import Ideal, poly_parse

ring = ("x", "y")
ideal = Ideal(ring, [poly_parse(g, ring) for g in ["x^2", "y^2 - 1"]])

# %% Groebner basis and standard monomials
gb = buchberger(ideal)
q = quotient_algebra(gb)
print("basis:", [str(g) for g in gb.elements])
print("A/I has dimension", q.dim, "with monomials", q.basis_labels())

# %% x is nilpotent here, so the radical drops it to degree one
rad = radical_zero_dim(gb)
print("radical:", [str(g) for g in rad.elements])

# %% points and idempotents e_j with e_j(p_m) = delta
points = maximal_points(rad)
qj = quotient_algebra(rad)
for p, e in zip(points, crt_idempotents(qj, points)):
    print("point", tuple(str(c) for c in p), "idempotent", qj.to_poly(e))
