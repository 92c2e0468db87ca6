"""Bracket powers and Hilbert-Kunz multiplicity estimates, all exact.

Run as: python demos/03_hilbert_kunz_and_bracket_powers.py
"""

from frobetti import frobenius_power, hk_sequence, make_ring, poly_parse

R = make_ring(5, ["x", "y"], ["x^2", "x*y"])

# In characteristic p the q-th power of a polynomial is computed by scaling
# exponents: (x + y)^5 = x^5 + y^5 without any expansion.
f = poly_parse("x + y", R)
print("(x + y)^[5] =", frobenius_power(f, 1))
print("(x^2 - y^2)^[5] =", frobenius_power(poly_parse("x^2 - y^2", R), 1))

# The multiplicity estimator tabulates lambda(R / m^[q]) and normalizes by
# q^dim as an exact rational; the first-difference estimate is exact once
# the raw sequence turns linear in q.
for gens, ring in (
    (["x", "y"], R),
    (["x"], make_ring(5, ["x"], [])),
    (["x", "y"], make_ring(5, ["x", "y"], ["x^2"])),
):
    seq = hk_sequence(ring, gens, range(1, 4))
    print("\nring %s:" % ring)
    for lv in seq.levels:
        print("  e=%d  q=%3d  raw=%4d  raw/q^d = %s" % (lv.e, lv.q, lv.raw, lv.normalized))
    print("  estimate:", seq.estimate, "(stabilized)" if seq.stabilized else "(not stabilized)")
