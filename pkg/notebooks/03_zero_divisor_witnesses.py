"""
Zero-divisor witnesses and the TC sandwich
==========================================

For n >= 3 and even k the product xi_(n,k) of nk differences A_i - A_j is
lambda_(n,k) times the top class.  A nonzero product gives zcl_n >= nk, and
dimension gives TC_n <= nk, so TC_n = nk.
"""

from tcrational import algebra as alg
from tcrational import zcl
from tcrational.primes import first_primes

H = alg.make_algebra(2, 2)
print("xi_(3,2) =", alg.serialize(zcl.xi(3, H)))

# Which characteristics keep the witness alive?
for k in (2, 4):
    alive = [p for p in first_primes(10) if zcl.zcl_witness(3, alg.make_algebra(2, k, p)).product_nonzero]
    print(f"k={k}: witness survives over F_p for p in {alive}")

# Certificate for n = 3, k = 2 over F_5
cert = zcl.zcl_witness(3, alg.make_algebra(2, 2, 5))
info = cert.as_dict()
print(info["factors"], "->", info["product"], "bounds", zcl.sandwich_bounds(3, 2))

# Odd k uses mu_(n,k)(A1 - An).  The literal product and the reduced form
# (xi_(n,k-1) replaced by its top term first) give different coefficients.
for n in (3, 4, 5):
    Hk = alg.make_algebra(2, 3)
    last = zcl.difference(Hk, n, 1, n)
    lit = alg.multiply(zcl.mu(n, Hk), last)
    red = alg.multiply(zcl.mu_reduced(n, Hk), last)
    print(f"n={n}, k=3: literal {alg.serialize(lit)}   reduced {alg.serialize(red)}")

# Brute force over small boxes of kernel elements
print("exhaustive zcl_2, k=2, Q  :", zcl.exhaustive_zcl(2, H, 5))
print("exhaustive zcl_2, k=2, F_2:", zcl.exhaustive_zcl(2, alg.make_algebra(2, 2, 2), 5))
print("exhaustive zcl_3, k=2, Q  :", zcl.exhaustive_zcl(3, H, 7))
