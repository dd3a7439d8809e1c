"""
Skew braces and their gamma function
====================================

A right skew brace has two group tables on the same set satisfying
(x.y)oz = (xoz).z^-1.(yoz).
"""
from skewbrace import almost_trivial_brace, opposite, trivial_brace
from skewbrace.brace import (gamma_kernel, ideals, left_ideals, quotient_brace, sub_braces,
                             two_of_three)
from skewbrace.catalog import small_group

S3 = small_group("S3")
B = almost_trivial_brace(S3)        # x o y = y . x

# gamma(z): x -> (x o z) . z^-1, here conjugation by z^-1
for z in range(6):
    print("gamma", z, B.gamma(z))
print("kernel of gamma:", gamma_kernel(B))

print("sub-skew braces:", sub_braces(B))
print("ideals:", ideals(B))
print("left ideals:", left_ideals(B))

# two of the three conditions force the third
print(two_of_three(B, (0, 1, 2)))

# the opposite of the trivial brace is the almost trivial one
print("opposite(trivial) == almost trivial:", opposite(trivial_brace(S3)) == B)
print("opposite is an involution:", opposite(opposite(B)) == B)

Q = quotient_brace(B, ideals(B)[1]).brace
print("quotient of order", Q.order)
