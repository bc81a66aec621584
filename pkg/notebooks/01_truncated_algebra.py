"""
Tensor powers of a truncated polynomial algebra
===============================================

Elements of H^{(x)n} with H = K[u]/(u^(k+1)) are sparse maps from exponent
vectors to coefficients.  This script builds a few of them and watches the
truncation and the field change at work.
"""

from tcrational import algebra as alg
from tcrational.errors import AlgebraError
from tcrational.zcl import diagonal_kernel_check

# The algebra Q[u]/(u^3) with |u| = 2, and the classes A_i = 1 (x) .. u .. (x) 1
H = alg.make_algebra(r=2, k=2)
A1, A2 = alg.basis_class(H, 2, 1), alg.basis_class(H, 2, 2)

d = A1 - A2
print("A1 - A2 in the kernel of multiplication:", diagonal_kernel_check(d))

# Squaring expands binomially; the fourth power keeps only u^2 (x) u^2
print("(A1 - A2)^2 =")
print(alg.serialize(d * d))
print("(A1 - A2)^4 =", alg.serialize(d**4))

# Anything with a slot above k vanishes
print("A1^3 is zero:", (A1**3).is_zero())

# The same computation over F_2 and F_3: the coefficient 6 dies in both
for p in (2, 3, 5):
    Hp = alg.make_algebra(2, 2, p)
    dp = alg.basis_class(Hp, 2, 1) - alg.basis_class(Hp, 2, 2)
    print(f"over F_{p}: (A1 - A2)^4 =", alg.serialize(dp**4))

# change_field reduces an exact rational element coefficientwise
print("reduced mod 5:", alg.serialize(alg.change_field(d**4, 5)))

# Generator degree must be even: odd r would need Koszul signs
try:
    alg.make_algebra(3, 2)
except AlgebraError as exc:
    print("rejected:", exc)
