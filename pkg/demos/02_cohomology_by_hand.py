"""
Where the resolution comes from
===============================

The Betti table is assembled from cohomology on the Grassmannian Gr(s, L):
the q-th exterior power of the defining bundle xi decomposes into
irreducible summands, each summand has at most one nonvanishing cohomology
group, and a class in H^j contributes to F_{q-j} in degree q.
"""

from kalmanres import (
    GrassmannianContext,
    cohomology_of_summand,
    cohomology_table,
    schur_rank,
    xi_exterior_decomposition,
)

ctx = GrassmannianContext(s=2, d=3, n=8)

# step 1: decompose wedge^2(xi) into S_lambda(R) x S_mu(Q*) x S_nu(W) pieces
print("summands of wedge^2 xi on Gr(2, L):")
for summand in xi_exterior_decomposition(ctx, q=2):
    print(
        f"  lambda_R={tuple(summand.lambda_r)}"
        f" mu_Q*={tuple(summand.mu_qstar)}"
        f" nu_W={tuple(summand.nu_w)}"
        f" mult={summand.mult} rank={summand.rank(ctx)}"
    )

# step 2: each R/Q* pair goes through the Weyl group dotted action; most die
print()
print("their cohomology (zeros skipped):")
for summand in xi_exterior_decomposition(ctx, q=2):
    res = cohomology_of_summand(summand.lambda_r, summand.mu_qstar, ctx)
    if not res.is_zero:
        print(
            f"  ({tuple(summand.lambda_r)}; {tuple(summand.mu_qstar)})"
            f" -> H^{res.degree}, weight {res.weight} on L"
        )

# step 3: the table groups surviving classes by cohomological degree j
print()
for q in range(1, 5):
    coh = cohomology_table(ctx, q)
    ranks = {}
    for j, counter in coh.items():
        ranks[j] = sum(
            mult * schur_rank(lam, ctx.d) * schur_rank(mu, ctx.dim_w)
            for (lam, mu), mult in counter.items()
        )
    print(f"wedge^{q}: " + ", ".join(f"rank H^{j} = {r}" for j, r in sorted(ranks.items())))
