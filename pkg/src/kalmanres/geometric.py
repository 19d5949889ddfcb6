"""Free resolution assembly for the normalizations of invariant-subspace
determinantal varieties.

The bundle xi = R (x) (Q* + W) lives on Gr(s, L); pushing its exterior powers
through the Bott algorithm yields the graded equivariant Betti table of the
normalization: a summand of wedge^q(xi) with cohomology in degree j lands in
homological index i = q - j and internal degree e = q.

Hilbert series are computed twice, by design: once from the assembled table
(Bott degrees plus hook content ranks) and once as an Euler characteristic
via the Weyl dimension product (no sorting, no hooks).  The two routes must
agree exactly; tests enforce this.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Optional

from .bott import CohomologyResult, GrassmannianContext, cohomology_of_summand
from .partitions import Partition, Weight, dual_weight, schur_rank
from .schur import _lr_product
from .partitions import partitions_in_box


@dataclass(frozen=True)
class XiSummand:
    """One irreducible summand S_{lambda_r} R (x) S_{mu_qstar} Q* (x) S_{nu_w} W
    of an exterior power of xi, with its multiplicity."""

    lambda_r: Partition
    mu_qstar: Partition
    nu_w: Partition
    mult: int

    def rank(self, ctx: GrassmannianContext) -> int:
        return (
            self.mult
            * schur_rank(self.lambda_r, ctx.rank_sub)
            * schur_rank(self.mu_qstar, ctx.rank_quot)
            * schur_rank(self.nu_w, ctx.dim_w)
        )


def xi_exterior_decomposition(ctx: GrassmannianContext, q: int) -> list[XiSummand]:
    """Cauchy decomposition of wedge^q(xi) into XiSummands.

    wedge^q splits over the two blocks of xi; each block contributes a
    partition pair (lam, lam') resp. (mu, mu'), and the two R-side factors
    are multiplied by Littlewood-Richardson.  Summands whose R-weight needs
    more than s rows vanish and are dropped.  The invariant
    |lambda_r| = |mu_qstar| + |nu_w| holds for every summand.
    """
    if q < 0:
        raise ValueError("q must be nonnegative")
    s, quot, w = ctx.rank_sub, ctx.rank_quot, ctx.dim_w
    out: list[XiSummand] = []
    for a in range(min(q, s * quot), -1, -1):
        b = q - a
        if b > s * w:
            continue
        for lam in partitions_in_box(a, s, quot):
            for mu in partitions_in_box(b, s, w):
                for nu, c in _lr_product(lam, mu):
                    if nu.length() <= s:
                        out.append(
                            XiSummand(nu, lam.conjugate(), mu.conjugate(), c)
                        )
    return out


def cohomology_table(
    ctx: GrassmannianContext, q: int
) -> dict[int, Counter]:
    """Cohomology of wedge^q(xi), as {degree j: Counter[(L-partition,
    W-partition)] with multiplicities}.  Only nonzero degrees appear."""
    table: dict[int, Counter] = {}
    for summand in xi_exterior_decomposition(ctx, q):
        res = cohomology_of_summand(summand.lambda_r, summand.mu_qstar, ctx)
        if res.is_zero:
            continue
        eta = Partition(res.weight)  # nonnegative here; raises otherwise
        table.setdefault(res.degree, Counter())[(eta, summand.nu_w)] += summand.mult
    return table


class BettiTable:
    """Graded equivariant Betti numbers: multiset of (L-partition,
    W-partition) pairs at each (homological index i, internal degree e)."""

    def __init__(self, ctx: GrassmannianContext):
        self.ctx = ctx
        self._data: dict[tuple[int, int], Counter] = {}

    # -- construction ------------------------------------------------------

    def add(self, i: int, e: int, lam: Partition, mu: Partition, mult: int = 1) -> None:
        if mult <= 0:
            raise ValueError("multiplicity must be positive")
        key = (i, e)
        self._data.setdefault(key, Counter())[(Partition(lam), Partition(mu))] += mult

    def add_nonzero(self, i: int, e: int, lam, mu, mult: int = 1) -> None:
        """add(), but silently drop summands of rank zero (too many rows for
        either factor).  Used by closed forms stated for large n."""
        lam, mu = Partition(lam), Partition(mu)
        if schur_rank(lam, self.ctx.d) and schur_rank(mu, self.ctx.dim_w):
            self.add(i, e, lam, mu, mult)

    def subtract(self, i: int, e: int, lam: Partition, mu: Partition, mult: int = 1) -> None:
        key = (i, e)
        pair = (Partition(lam), Partition(mu))
        have = self._data.get(key, Counter())[pair]
        if have < mult:
            raise ValueError(
                f"cannot remove {mult} x {pair} at (i={i}, e={e}); have {have}"
            )
        self._data[key][pair] -= mult
        if self._data[key][pair] == 0:
            del self._data[key][pair]
        if not self._data[key]:
            del self._data[key]

    def copy(self) -> "BettiTable":
        out = BettiTable(self.ctx)
        out._data = {k: Counter(v) for k, v in self._data.items()}
        return out

    # -- queries -----------------------------------------------------------

    def entries(self) -> Iterator[tuple[int, int, Partition, Partition, int]]:
        """All entries (i, e, lam_L, mu_W, mult), deterministically sorted."""
        for (i, e) in sorted(self._data):
            for (lam, mu) in sorted(self._data[(i, e)], reverse=True):
                yield i, e, lam, mu, self._data[(i, e)][(lam, mu)]

    def multiplicity(self, i: int, e: int, lam, mu) -> int:
        return self._data.get((i, e), Counter())[(Partition(lam), Partition(mu))]

    def counter(self, i: int, e: int) -> Counter:
        return Counter(self._data.get((i, e), Counter()))

    def homological_indices(self) -> list[int]:
        return sorted({i for (i, _) in self._data})

    def degrees(self, i: int) -> list[int]:
        return sorted({e for (j, e) in self._data if j == i})

    def entry_rank(self, lam: Partition, mu: Partition) -> int:
        return schur_rank(lam, self.ctx.d) * schur_rank(mu, self.ctx.dim_w)

    def rank(self, i: int, e: Optional[int] = None) -> int:
        total = 0
        for (j, ee), counter in self._data.items():
            if j != i or (e is not None and ee != e):
                continue
            for (lam, mu), mult in counter.items():
                total += mult * self.entry_rank(lam, mu)
        return total

    def is_empty(self) -> bool:
        return not self._data

    def proj_dim(self) -> int:
        if not self._data:
            raise ValueError("empty table")
        return max(i for (i, _) in self._data)

    def regularity(self) -> int:
        if not self._data:
            raise ValueError("empty table")
        return max(e - i for (i, e) in self._data)

    # -- transforms ----------------------------------------------------------

    def twist(self, k: int) -> "BettiTable":
        """Shift every internal degree by k (tensoring with A(-k))."""
        out = BettiTable(self.ctx)
        for i, e, lam, mu, mult in self.entries():
            out.add(i, e + k, lam, mu, mult)
        return out

    def shift_index(self, delta: int) -> "BettiTable":
        out = BettiTable(self.ctx)
        for i, e, lam, mu, mult in self.entries():
            out.add(i + delta, e, lam, mu, mult)
        return out

    def restrict_index(self, max_i: int) -> "BettiTable":
        out = BettiTable(self.ctx)
        for i, e, lam, mu, mult in self.entries():
            if i <= max_i:
                out.add(i, e, lam, mu, mult)
        return out

    # -- comparison / io -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self._data == other._data

    def __ne__(self, other: object) -> bool:
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def diff(self, other: "BettiTable") -> str:
        """Human-readable multiset difference, for test failure messages."""
        lines = []
        keys = sorted(set(self._data) | set(other._data))
        for key in keys:
            a, b = self.counter(*key), other.counter(*key)
            for pair in sorted(set(a) | set(b), reverse=True):
                if a[pair] != b[pair]:
                    lines.append(f"(i={key[0]}, e={key[1]}) {pair}: {a[pair]} vs {b[pair]}")
        return "\n".join(lines) or "(equal)"

    def to_json_obj(self) -> dict:
        ctx = self.ctx
        return {
            "context": {"s": ctx.s, "d": ctx.d, "n": ctx.n},
            "entries": [
                {
                    "i": i,
                    "degree": e,
                    "lambdaL": list(lam),
                    "muW": list(mu),
                    "mult": mult,
                    "rank": mult * self.entry_rank(lam, mu),
                }
                for i, e, lam, mu, mult in self.entries()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "BettiTable":
        c = obj["context"]
        table = cls(GrassmannianContext(c["s"], c["d"], c["n"]))
        for entry in obj["entries"]:
            table.add(
                entry["i"],
                entry["degree"],
                Partition(entry["lambdaL"]),
                Partition(entry["muW"]),
                entry["mult"],
            )
        return table

    @classmethod
    def from_json(cls, text: str) -> "BettiTable":
        return cls.from_json_obj(json.loads(text))

    def render(self) -> str:
        header = f"{'i':>3} {'deg':>4}  {'summand':<24} {'mult':>4} {'rank':>8}"
        lines = [header, "-" * len(header)]
        for i, e, lam, mu, mult in self.entries():
            pair = f"({lam.exponent_string()}; {mu.exponent_string()})"
            lines.append(
                f"{i:>3} {e:>4}  {pair:<24} {mult:>4} "
                f"{mult * self.entry_rank(lam, mu):>8}"
            )
        return "\n".join(lines)


def resolution_terms(ctx: GrassmannianContext) -> BettiTable:
    """Betti table of the normalization attached to ctx.

    Sweeps q = 0 .. rank(xi); a cohomology class of wedge^q(xi) in degree j
    contributes at homological index q - j, internal degree q.  Indices are
    asserted nonnegative.  For s = d the bundle has no Q*-block and the
    result is the Koszul complex on L (x) W.
    """
    table = BettiTable(ctx)
    for q in range(ctx.xi_rank + 1):
        for j, counter in cohomology_table(ctx, q).items():
            i = q - j
            assert i >= 0, (ctx, q, j)
            for (lam, mu), mult in counter.items():
                table.add(i, q, lam, mu, mult)
    return table


def subcomplex_terms(
    ctx: GrassmannianContext,
    r: Optional[int] = None,
    s_cap: Optional[int] = None,
) -> BettiTable:
    """Betti table of the subcomplex generated by summands with exterior
    degree at most r on the R(x)Q* block and at most s_cap on the R(x)W
    block.  None means unbounded; both None reproduces resolution_terms."""
    table = BettiTable(ctx)
    for q in range(ctx.xi_rank + 1):
        for summand in xi_exterior_decomposition(ctx, q):
            if r is not None and summand.mu_qstar.size() > r:
                continue
            if s_cap is not None and summand.nu_w.size() > s_cap:
                continue
            res = cohomology_of_summand(summand.lambda_r, summand.mu_qstar, ctx)
            if res.is_zero:
                continue
            i = q - res.degree
            assert i >= 0
            table.add(i, q, Partition(res.weight), summand.nu_w, summand.mult)
    return table


@dataclass(frozen=True)
class HilbertSeries:
    """Rational series numerator / (1 - t)^denominator_exponent with integer
    numerator coefficients (index = degree)."""

    coeffs: tuple
    denominator_exponent: int

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    def _check(self, other: "HilbertSeries") -> None:
        if self.denominator_exponent != other.denominator_exponent:
            raise ValueError("denominator exponents differ")

    def __add__(self, other: "HilbertSeries") -> "HilbertSeries":
        self._check(other)
        size = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (size - len(self.coeffs))
        for j, c in enumerate(other.coeffs):
            a[j] += c
        return HilbertSeries(tuple(a), self.denominator_exponent)

    def __neg__(self) -> "HilbertSeries":
        return HilbertSeries(tuple(-c for c in self.coeffs), self.denominator_exponent)

    def __sub__(self, other: "HilbertSeries") -> "HilbertSeries":
        return self + (-other)

    def shift(self, k: int) -> "HilbertSeries":
        """Multiply by t^k."""
        if k < 0:
            raise ValueError("only nonnegative shifts")
        return HilbertSeries((0,) * k + self.coeffs, self.denominator_exponent)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def numerator_degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero series")
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        """Coefficient of t^k of the expanded series."""
        if k < 0:
            return 0
        dd = self.denominator_exponent
        total = 0
        for j, c in enumerate(self.coeffs[: k + 1]):
            if dd == 0:
                if j == k:
                    total += c
            else:
                total += c * comb(dd - 1 + k - j, dd - 1)
        return total

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if terms else "")
            mag = abs(c)
            body = f"{mag}" if j == 0 else (f"t^{j}" if mag == 1 else f"{mag}*t^{j}")
            terms.append(f"{sign} {body}" if terms else f"{sign}{body}")
        num = " ".join(terms)
        return f"({num}) / (1-t)^{self.denominator_exponent}"


def hilbert_series(table: BettiTable) -> HilbertSeries:
    """Alternating-sum Hilbert series of the module resolved by the table,
    over the coordinate ring of all endomorphisms (n^2 variables)."""
    n = table.ctx.n
    coeffs: dict[int, int] = {}
    for i, e, lam, mu, mult in table.entries():
        if e < 0:
            raise ValueError("negative internal degree")
        sign = -1 if i % 2 else 1
        coeffs[e] = coeffs.get(e, 0) + sign * mult * table.entry_rank(lam, mu)
    size = max(coeffs, default=-1) + 1
    out = [0] * size
    for e, c in coeffs.items():
        out[e] = c
    return HilbertSeries(tuple(out), n * n)


def weyl_euler_characteristic(weight: Weight, d: int) -> int:
    """Signed Euler characteristic dimension of the weight-nu bundle on the
    flag of GL(d): product over i<j of (u_i - u_j)/(j - i) with u = nu + rho.
    Zero exactly on repeats; no sorting involved."""
    if len(weight) != d:
        raise ValueError(f"weight length {len(weight)} != {d}")
    u = [w + r for w, r in zip(weight, range(d - 1, -1, -1))]
    num = 1
    den = 1
    for i in range(d):
        for j in range(i + 1, d):
            num *= u[i] - u[j]
            den *= j - i
    q, r = divmod(num, den)
    assert r == 0
    return q


def hilbert_series_normalization(ctx: GrassmannianContext) -> HilbertSeries:
    """Hilbert series of the normalization, computed directly as
    sum_q (-t)^q chi(wedge^q xi) with chi through the Weyl dimension product.

    Independent route from hilbert_series(resolution_terms(ctx)); the two
    must agree exactly.
    """
    coeffs = [0] * (ctx.xi_rank + 1)
    for q in range(ctx.xi_rank + 1):
        total = 0
        for summand in xi_exterior_decomposition(ctx, q):
            nu = dual_weight(summand.mu_qstar.pad(ctx.rank_quot)) + summand.lambda_r.pad(
                ctx.rank_sub
            )
            chi = weyl_euler_characteristic(nu, ctx.d)
            if chi:
                total += summand.mult * chi * schur_rank(summand.nu_w, ctx.dim_w)
        coeffs[q] = total if q % 2 == 0 else -total
    return HilbertSeries(tuple(coeffs), ctx.n * ctx.n)
