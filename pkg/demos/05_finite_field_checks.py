"""
Trust, but verify over F_p
==========================

Everything symbolic in this package is double-checked numerically: sample
matrices over F_p with p = 2^31 - 1, evaluate the minor equations, and
compare ranks and dimension counts with the characteristic-zero answers.
All sampling is seeded, so every number below reproduces exactly.
"""

from math import comb

from kalmanres import (
    hilbert_series,
    jacobian_codim,
    kalman_table_d2,
    minors_vanish,
    numeric_hilbert_function,
    reduced_kalman_matrix,
    sample_generic,
    sample_member,
)

s, d, n = 1, 2, 4
k = d - s + 1  # minor size that cuts out the variety

# points built with an invariant line satisfy the equations, every time
member_hits = sum(
    minors_vanish(reduced_kalman_matrix(sample_member(s, d, n, seed=t)), k)
    for t in range(50)
)
print(f"member points on the variety: {member_hits}/50")

# uniform random matrices miss the variety (it has positive codimension)
generic_misses = sum(
    not minors_vanish(reduced_kalman_matrix(sample_generic(d, n, seed=t)), k)
    for t in range(50)
)
print(f"generic points off the variety: {generic_misses}/50")

# the Jacobian of the minors at a smooth point has rank s(n-d)
print("jacobian rank at 5 sampled points:", [jacobian_codim(s, d, n, seed=t) for t in range(5)])
print("expected codimension s(n-d):     ", s * (n - d))

# Hilbert function by evaluation vs the symbolic series
hf = numeric_hilbert_function(s, d, n, k_max=4, seed=0)
series = hilbert_series(kalman_table_d2(n))
print()
print("numeric Hilbert function: ", hf)
print("symbolic coefficients:    ", [series.coefficient(j) for j in range(5)])

# same oracle, different variety: (1,3,4) is a degree-6 hypersurface,
# invisible until the evaluation reaches degree 6
hf = numeric_hilbert_function(1, 3, 4, k_max=6, seed=0)
ideal_dims = [comb(16 + j - 1, j) - hf[j] for j in range(7)]
print()
print("(1,3,4) minor ideal dimensions by degree:", ideal_dims)
