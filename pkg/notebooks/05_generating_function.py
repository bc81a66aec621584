"""
TC generating functions
=======================

F(x) = sum_{n>=1} TC_{n+1} x^n.  When TC_n = nk the series is
k(2x - x^2)/(1-x)^2, and any eventually linear sequence gives a numerator
of bounded degree.
"""

from tcrational.series import (
    generating_polynomial, infer_sequence, series_expand, tc_sequence_for_condition1,
)

for k in range(2, 7):
    poly = generating_polynomial(tc_sequence_for_condition1(k, 10))
    print(f"k={k}: P(x) = {poly},  P(1) = {poly(1)},  series {series_expand(poly, 6)}")

# A sequence whose first term is off the line still has a polynomial numerator
seq = infer_sequence((3, 6, 8, 10, 12))
poly = generating_polynomial(seq)
print("irregular start:", poly, series_expand(poly, 7))
