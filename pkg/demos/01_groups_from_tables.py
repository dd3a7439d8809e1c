"""
Groups as Cayley tables
=======================

Every group here is a square table of indices with 0 as the identity.
"""
from skewbrace import errors
from skewbrace.catalog import small_group, small_group_catalog
from skewbrace.groups import (automorphism_group, group_is_supersoluble, quotient_group,
                              semidirect_product, subgroup_props, subgroups, validate_group)

# a table is checked once, then wrapped
Z3 = validate_group([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
print(Z3, "order", Z3.order)

# subtraction mod 3 is not associative; the witness is a failing triple
try:
    validate_group([[0, 2, 1], [1, 0, 2], [2, 1, 0]])
except errors.NotAssociative as e:
    print("rejected:", e.kind, e.witness)

# the catalog knows every group of order 8
for G in small_group_catalog(8):
    print(f"{G.name:10s} subgroups={len(subgroups(G)):3d} |Aut|={len(automorphism_group(G))}")

S3 = small_group("S3")
A3 = next(S for S in subgroups(S3) if len(S) == 3)
print("A3 in S3:", subgroup_props(S3, A3))
print("S3 / A3 has order", quotient_group(S3, A3).group.order)

# Z2 acting on Z3 by inversion rebuilds S3
D = semidirect_product(small_group("Z2"), Z3, [(0, 1, 2), (0, 2, 1)])
print("Z2 x| Z3 abelian?", D.is_abelian)

for name in ["S3", "A4", "S4", "F21"]:
    print(name, "supersoluble:", group_is_supersoluble(small_group(name)))
