"""
One series, two unrelated computations
======================================

The Hilbert series of the normalization can be read off the Betti table
(alternating sum of ranks) or assembled directly from Euler
characteristics on the Grassmannian, skipping the Betti table entirely.
The two routes share no code path, so agreement is a real check.
"""

from kalmanres import (
    GrassmannianContext,
    hilbert_series,
    hilbert_series_normalization,
    resolution_terms,
)

for s, d, n in [(1, 2, 4), (1, 2, 5), (2, 3, 6), (1, 3, 5)]:
    ctx = GrassmannianContext(s, d, n)
    via_table = hilbert_series(resolution_terms(ctx))
    via_euler = hilbert_series_normalization(ctx)
    marker = "agree" if via_table == via_euler else "DISAGREE"
    print(f"(s,d,n)=({s},{d},{n}): {via_euler}   [{marker}]")

# the series expands to the dimension counts of the graded pieces
ctx = GrassmannianContext(1, 2, 4)
series = hilbert_series_normalization(ctx)
print()
print("graded dimensions of the normalization module for (1,2,4):")
print([series.coefficient(k) for k in range(8)])
