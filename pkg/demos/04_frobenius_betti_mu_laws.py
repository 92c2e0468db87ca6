"""Frobenius Betti and mu estimator sequences, and the laws relating them.

Run as: python demos/04_frobenius_betti_mu_laws.py
"""

from frobetti import beta_sequence, make_ring, mu_sequence, quotient_module, verify_laws

R = make_ring(5, ["x", "y"], ["x^2", "x*y"])
K = quotient_module(R, ["x", "y"])

# beta_i tracks lambda(Tor_i against Frobenius twists) / q^d.  Index 0 is
# the Hilbert-Kunz sequence of the irrelevant ideal.
for i in (0, 1):
    seq = beta_sequence(K, i, range(1, 5))
    print("beta_%d levels:" % i, seq.raw_values(), " estimate:", seq.estimate)

# mu_i is the dual story through Ext; below the ring dimension it vanishes
# in the limit, and mu_{d+i} mirrors beta_i.
for i in (0, 1, 2):
    seq = mu_sequence(K, i, range(1, 5))
    print("mu_%d levels:  " % i, seq.raw_values(), " estimate:", seq.estimate)

# verify_laws bundles the vanishing, duality, and additivity checks.  The
# minimal prime of this ring is (x) and the localization there has length 1,
# so additivity reduces to a single term.
report = verify_laws(K, [(["x"], 1)], range(1, 5), indices=(0, 1))
print("\nlaw report:")
print(report)
print("all laws hold:", report.passed)

# The same over the coordinate cross, whose two minimal primes each carry
# multiplicity one.
cross = make_ring(5, ["x", "y"], ["x*y"])
Kc = quotient_module(cross, ["x", "y"])
report = verify_laws(Kc, [(["x"], 1), (["y"], 1)], range(1, 5), indices=(0, 1))
print("\ncoordinate cross:")
print(report)
