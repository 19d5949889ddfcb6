"""
A first resolution table
========================

Resolve the normalization of the variety of 4x4 matrices that leave some
line inside a fixed 2-plane invariant, and read the table.
"""

from kalmanres import GrassmannianContext, resolution_terms

# s = dimension of the invariant subspace we ask for,
# d = dimension of the fixed subspace L, n = ambient dimension
ctx = GrassmannianContext(s=1, d=2, n=4)
table = resolution_terms(ctx)

print(table.render())

# each row is a free summand A(-deg) tensored with an irreducible
# GL(L) x GL(W) representation; (1^2; 1^2) means (S_{(1,1)}L, S_{(1,1)}W)
print()
print("projective dimension:", table.proj_dim())
print("regularity:          ", table.regularity())

# total ranks per homological index, forgetting the equivariant labels
for i in table.homological_indices():
    print(f"F_{i} has rank {table.rank(i)} in degrees {table.degrees(i)}")

# twisting shifts every internal degree; the module structure is unchanged
shifted = table.twist(1)
print()
print("after a degree twist by 1, F_0 sits in degrees", shifted.degrees(0))
