"""
Alternating sums of cubed binomials
===================================

lambda_(3,k) = sum_i (-1)^i C(k,i)^3 vanishes for odd k and equals
(-1)^a (3a)!/(a!)^3 for k = 2a.  Its primes are the characteristics in
which the standard zero-divisor product dies.
"""

from tcrational import lambdas

# Small values straight from the definition
for k in range(2, 9):
    print(f"lambda_(3,{k}) = {lambdas.lambda3(k)}")

# The closed form agrees, and Legendre's formula factors it without trial division
a = 10
print("closed form at a=10:", lambdas.lambda3_closed_form(a))
print("valuations:", lambdas.dixon_factorization(a))

# The tabulated primes for even k up to 40
for k, primes in lambdas.lambda_prime_table(40):
    print(f"{k:>3} | {', '.join(map(str, primes))}")

# 7 does not divide lambda_(3,32): 48! and (16!)^3 carry the same power of 7
print("v_7(48!) =", lambdas.legendre_valuation(48, 7),
      " 3 v_7(16!) =", 3 * lambdas.legendre_valuation(16, 7))

# lambda_(n,k) only changes sign with n
print([lambdas.lambda_nk(n, 4) for n in range(3, 7)], [lambdas.lambda_nk(n, 2) for n in range(3, 7)])

# The integer a characteristic must avoid, odd k included
for k in (2, 3, 4, 5):
    print(f"k={k}: relevant value {lambdas.relevant_lambda(k)}, primes {lambdas.relevant_lambda_primes(k)}")
