"""
Automorphisms of Q x| M, cocycles and the sigma dichotomy
=========================================================
"""
from skewbrace import almost_trivial_brace, opposite, trivial_brace
from skewbrace.brace import gamma_kernel
from skewbrace.catalog import small_group
from skewbrace.groups import inner_automorphism, subgroups
from skewbrace.structure import coboundary, curran_decompose, duality_analysis, solve_cocycle

S3 = small_group("S3")
M = next(S for S in subgroups(S3) if len(S) == 3)
t = next(x for x in range(6) if S3.element_orders[x] == 2)
Q = (0, t)

# conjugation by a 3-cycle splits as d = 1, a = 1, b(k) = [k, m]
c = M[1]
dec = curran_decompose(S3, Q, M, inner_automorphism(S3, c))
print("d:", dec.d, " a:", dec.a, " b:", dec.b)

# coprime orders: every cocycle is a coboundary, recovered exactly
for m0 in M:
    print("coboundary of", m0, "->", solve_cocycle(S3, Q, M, coboundary(S3, Q, m0)))

# gamma(m) = iota(m^-sigma) on M with sigma 0 or 1
for B in (trivial_brace(S3), almost_trivial_brace(S3)):
    res = duality_analysis(B, M)
    where = gamma_kernel(B) if res.sigma == 0 else gamma_kernel(opposite(B))
    print(B, "sigma =", res.sigma, " M inside kernel:", set(M) <= set(where))
