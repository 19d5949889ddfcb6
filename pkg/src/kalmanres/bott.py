"""Characteristic-zero cohomology of irreducible homogeneous bundles on a
Grassmannian of subspaces of a d-dimensional space.

Conventions (load-bearing, do not change silently):

* Gr(s, L) parametrizes s-dimensional subspaces of L, with tautological
  sequence 0 -> R -> L -> Q -> 0, rank R = s, rank Q = d - s.
* The GL(d) weight fed to the dotted Weyl action is nu = (alpha, beta) with
  the quotient-bundle weight alpha (length d - s) FIRST and the sub-bundle
  weight beta (length s) second.
* rho = (d-1, d-2, ..., 1, 0).  If nu + rho has a repeated entry every
  cohomology group vanishes.  Otherwise sort nu + rho strictly decreasing;
  the number of inversions of the sorting permutation is the unique
  cohomology degree j, and H^j is the irreducible with L-weight
  sort(nu + rho) - rho.
* Partition weights on the dual bundle Q* are converted to Q-weights by
  negate-and-reverse before entering the algorithm.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .partitions import Partition, Weight, dual_weight, is_weakly_decreasing


@dataclass(frozen=True)
class GrassmannianContext:
    """Ambient data: subspace dimension s inside L of dimension d, with the
    whole space of dimension n (so the complement W has dimension n - d).

    Requires 1 <= s <= d < n.  s = d is the degenerate point Grassmannian.
    """

    s: int
    d: int
    n: int

    def __post_init__(self) -> None:
        if not (1 <= self.s <= self.d < self.n):
            raise ValueError(f"need 1 <= s <= d < n, got {(self.s, self.d, self.n)}")

    @property
    def rank_sub(self) -> int:
        return self.s

    @property
    def rank_quot(self) -> int:
        return self.d - self.s

    @property
    def dim_w(self) -> int:
        return self.n - self.d

    @property
    def dim(self) -> int:
        """Dimension of the Grassmannian itself."""
        return self.s * (self.d - self.s)

    @property
    def xi_rank(self) -> int:
        """Rank of the bundle R tensor (Q* + W)."""
        return self.s * (self.d - self.s) + self.s * (self.n - self.d)

    def rho(self) -> Weight:
        return tuple(range(self.d - 1, -1, -1))


@dataclass(frozen=True)
class CohomologyResult:
    """Either zero, or concentrated in a single degree with an L-weight."""

    degree: Optional[int]
    weight: Optional[Weight]

    @classmethod
    def zero(cls) -> "CohomologyResult":
        return cls(None, None)

    @property
    def is_zero(self) -> bool:
        return self.degree is None


def bott(alpha: Weight, beta: Weight, ctx: GrassmannianContext) -> CohomologyResult:
    """Cohomology of the bundle with quotient-weight alpha and sub-weight beta.

    alpha must have length d - s and beta length s, both weakly decreasing
    (entries may be negative).
    """
    alpha = tuple(alpha)
    beta = tuple(beta)
    if len(alpha) != ctx.rank_quot or len(beta) != ctx.rank_sub:
        raise ValueError(
            f"weight lengths {(len(alpha), len(beta))} do not match "
            f"(d-s, s) = {(ctx.rank_quot, ctx.rank_sub)}"
        )
    if not is_weakly_decreasing(alpha) or not is_weakly_decreasing(beta):
        raise ValueError(f"weights must be weakly decreasing: {alpha}, {beta}")
    rho = ctx.rho()
    shifted = [v + r for v, r in zip(alpha + beta, rho)]
    if len(set(shifted)) < ctx.d:
        return CohomologyResult.zero()
    inversions = sum(
        1
        for i in range(ctx.d)
        for k in range(i + 1, ctx.d)
        if shifted[i] < shifted[k]
    )
    eta = tuple(v - r for v, r in zip(sorted(shifted, reverse=True), rho))
    return CohomologyResult(inversions, eta)


def cohomology_of_summand(
    lam_r: Partition, mu_qstar: Partition, ctx: GrassmannianContext
) -> CohomologyResult:
    """Cohomology of S_{lam_r} R tensor S_{mu_qstar} Q*.

    lam_r is a partition weight on the sub-bundle R, mu_qstar a partition
    weight on the dual quotient Q*; the latter is negate-reversed into a
    Q-weight before the dotted Weyl step.
    """
    lam_r = Partition(lam_r)
    mu_qstar = Partition(mu_qstar)
    if lam_r.length() > ctx.rank_sub:
        raise ValueError(f"{lam_r!r} exceeds rank {ctx.rank_sub} of the sub-bundle")
    if mu_qstar.length() > ctx.rank_quot:
        raise ValueError(f"{mu_qstar!r} exceeds rank {ctx.rank_quot} of the quotient")
    alpha = dual_weight(mu_qstar.pad(ctx.rank_quot))
    beta = lam_r.pad(ctx.rank_sub)
    return bott(alpha, beta, ctx)


def kempf_h0(
    alpha: Partition, beta: Partition, ctx: GrassmannianContext
) -> Optional[Partition]:
    """Sections of the dual-side bundle with partition weight alpha on R* and
    beta on Q*.

    If the concatenation (alpha padded to length s, beta) is a partition,
    i.e. alpha_s >= beta_1, all sections form the irreducible on the dual of
    the ambient space labelled by that concatenation, and there is no higher
    cohomology.  Otherwise the bundle has no sections at all and None is
    returned.  This statement is characteristic-free; in characteristic zero
    it must agree with bott() on the dualized weights.
    """
    alpha = Partition(alpha)
    beta = Partition(beta)
    if alpha.length() > ctx.rank_sub:
        raise ValueError(f"{alpha!r} exceeds rank {ctx.rank_sub} of the sub-bundle")
    if beta.length() > ctx.rank_quot:
        raise ValueError(f"{beta!r} exceeds rank {ctx.rank_quot} of the quotient")
    if alpha.part(ctx.rank_sub - 1) < beta.part(0):
        return None
    return Partition(alpha.pad(ctx.rank_sub) + tuple(beta))
