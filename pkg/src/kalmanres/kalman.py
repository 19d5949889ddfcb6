"""Numerical ground truth over a large prime field.

Everything here works directly with matrices, independent of the
representation-theoretic machinery: build the stacked matrix (gamma;
gamma*alpha; ...; gamma*alpha^{d-1}) whose minor vanishing cuts out the
variety, sample points on and off it, measure the Jacobian rank of the
minors, and estimate the minor ideal's Hilbert function by evaluation.

All randomness flows through SplitMix64 (documented below) so that every
result is reproducible bit-for-bit from its seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import comb

import numpy as np

P_DEFAULT = (1 << 31) - 1  # Mersenne prime; products of two residues fit in int64

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 sequence generator.

    state_{k+1} = state_k + 0x9E3779B97F4A7C15 (mod 2^64); each output mixes
    the new state with the xor-shift-multiply chain (30/0xBF58476D1CE4E5B9,
    27/0x94D049BB133111EB, 31).  Field elements are taken as next() mod p;
    for p near 2^31 the modulo bias is below 2^-32 per draw, far under the
    Schwartz-Zippel error terms quoted in the tests.
    """

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def field_element(self, p: int) -> int:
        return self.next_u64() % p

    def matrix(self, rows: int, cols: int, p: int) -> np.ndarray:
        return np.array(
            [[self.field_element(p) for _ in range(cols)] for _ in range(rows)],
            dtype=np.int64,
        ).reshape(rows, cols)


def _rank_mod_p(mat: np.ndarray, p: int) -> int:
    """Row-echelon rank over F_p.  Row updates keep every intermediate value
    inside int64: factors and entries are reduced below p < 2^31 first."""
    m = np.array(mat, dtype=np.int64) % p
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivots = np.nonzero(m[r:, c])[0]
        if pivots.size == 0:
            continue
        i = r + int(pivots[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r, c:] = (m[r, c:] * inv) % p
        below = np.nonzero(m[r + 1 :, c])[0]
        if below.size:
            f = m[r + 1 + below, c][:, None]
            m[r + 1 + below, c:] = (m[r + 1 + below, c:] - f * m[r, c:]) % p
        r += 1
    return r


def _matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    # int64 dot products could overflow, so go through exact Python ints
    prod = (a.astype(object) @ b.astype(object)) % p
    return prod.astype(np.int64)


def _inverse_mod(a: np.ndarray, p: int):
    """Inverse of a square matrix over F_p, or None if singular."""
    size = a.shape[0]
    m = np.concatenate([a % p, np.eye(size, dtype=np.int64)], axis=1)
    for c in range(size):
        pivots = np.nonzero(m[c:, c])[0]
        if pivots.size == 0:
            return None
        i = c + int(pivots[0])
        if i != c:
            m[[c, i]] = m[[i, c]]
        inv = pow(int(m[c, c]), p - 2, p)
        m[c] = (m[c] * inv) % p
        others = [r for r in range(size) if r != c and m[r, c]]
        for r in others:
            m[r] = (m[r] - m[r, c] * m[c]) % p
    return m[:, size:]


def _det_mod(a: np.ndarray, p: int) -> int:
    """Determinant of a small square matrix over F_p by Laplace expansion."""
    size = a.shape[0]
    if size == 1:
        return int(a[0, 0]) % p
    if size == 2:
        return (int(a[0, 0]) * int(a[1, 1]) - int(a[0, 1]) * int(a[1, 0])) % p
    total = 0
    rest = a[1:]
    for j in range(size):
        if not a[0, j]:
            continue
        minor = np.delete(rest, j, axis=1)
        term = int(a[0, j]) * _det_mod(minor, p)
        total = total - term if j % 2 else total + term
    return total % p


def _adjugate_mod(a: np.ndarray, p: int) -> np.ndarray:
    size = a.shape[0]
    adj = np.zeros((size, size), dtype=np.int64)
    for i in range(size):
        for j in range(size):
            minor = np.delete(np.delete(a, j, axis=0), i, axis=1)
            cof = _det_mod(minor, p) if size > 1 else 1
            adj[i, j] = cof if (i + j) % 2 == 0 else (-cof) % p
    return adj % p


@dataclass(frozen=True)
class FpMatrix:
    """Matrix over F_p with exact arithmetic."""

    data: np.ndarray
    p: int = P_DEFAULT

    def __post_init__(self):
        object.__setattr__(self, "data", np.asarray(self.data, dtype=np.int64) % self.p)

    @property
    def shape(self):
        return self.data.shape

    def rank(self) -> int:
        return _rank_mod_p(self.data, self.p)

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        if self.p != other.p:
            raise ValueError("field mismatch")
        return FpMatrix(_matmul_mod(self.data, other.data, self.p), self.p)


@dataclass(frozen=True)
class KalmanPoint:
    """An endomorphism in the basis adapted to the marked subspace L:
    the top-left d x d block acts on L, the bottom-left block is the
    obstruction to L-invariance."""

    d: int
    n: int
    phi: np.ndarray
    p: int = P_DEFAULT

    def __post_init__(self):
        phi = np.asarray(self.phi, dtype=np.int64)
        if phi.shape != (self.n, self.n):
            raise ValueError("phi must be n x n")
        if not 1 <= self.d < self.n:
            raise ValueError("need 1 <= d < n")
        object.__setattr__(self, "phi", phi % self.p)

    @property
    def alpha(self) -> np.ndarray:
        return self.phi[: self.d, : self.d]

    @property
    def beta(self) -> np.ndarray:
        return self.phi[: self.d, self.d :]

    @property
    def gamma(self) -> np.ndarray:
        return self.phi[self.d :, : self.d]

    @property
    def delta(self) -> np.ndarray:
        return self.phi[self.d :, self.d :]


def reduced_kalman_matrix(pt: KalmanPoint) -> FpMatrix:
    """Vertical stack of gamma, gamma*alpha, ..., gamma*alpha^{d-1};
    shape d(n-d) x d.  Rows from the j-th block are values of degree-(j+1)
    polynomials in the entries of phi."""
    blocks = []
    current = pt.gamma
    for _ in range(pt.d):
        blocks.append(current)
        current = _matmul_mod(current, pt.alpha, pt.p)
    return FpMatrix(np.vstack(blocks), pt.p)


def minors_vanish(m: FpMatrix, k: int) -> bool:
    """True iff every k x k minor is zero, decided as rank < k."""
    if not 1 <= k <= min(m.shape):
        raise ValueError("k out of range")
    return m.rank() < k


def sample_member(s: int, d: int, n: int, seed: int, p: int = P_DEFAULT) -> KalmanPoint:
    """Deterministic random point of the variety: start from phi0 that
    preserves span(e_1..e_s) and conjugate by a random invertible g that
    preserves L, so the invariant subspace is a generic s-plane inside L."""
    if not 1 <= s <= d < n:
        raise ValueError("need 1 <= s <= d < n")
    rng = SplitMix64(seed)
    phi0 = rng.matrix(n, n, p)
    phi0[s:, :s] = 0
    for _ in range(100):
        g = np.zeros((n, n), dtype=np.int64)
        g[:d, :d] = rng.matrix(d, d, p)
        g[:d, d:] = rng.matrix(d, n - d, p)
        g[d:, d:] = rng.matrix(n - d, n - d, p)
        g_inv = _inverse_mod(g, p)
        if g_inv is not None:
            phi = _matmul_mod(_matmul_mod(g, phi0, p), g_inv, p)
            return KalmanPoint(d, n, phi, p)
    raise RuntimeError("failed to sample an invertible block matrix")  # p is huge


def sample_generic(d: int, n: int, seed: int, p: int = P_DEFAULT) -> KalmanPoint:
    """Uniform random endomorphism (no invariance constraint)."""
    if not 1 <= d < n:
        raise ValueError("need 1 <= d < n")
    rng = SplitMix64(seed)
    return KalmanPoint(d, n, rng.matrix(n, n, p), p)


def _minor_indices(s: int, d: int, n: int):
    """All (rows, cols, degree) index pairs of the (d-s+1)-minors of the
    stacked matrix; degree = sum of (block+1) over chosen rows."""
    k = d - s + 1
    total_rows = d * (n - d)
    out = []
    for rows in combinations(range(total_rows), k):
        deg = sum(r // (n - d) + 1 for r in rows)
        for cols in combinations(range(d), k):
            out.append((rows, cols, deg))
    return out


def jacobian_codim(s: int, d: int, n: int, seed: int, p: int = P_DEFAULT) -> int:
    """Rank over F_p of the Jacobian of all (d-s+1)-minors of the stacked
    matrix, evaluated at sample_member(s, d, n, seed).  Equals the variety's
    codimension when the sample lands in the smooth locus."""
    if not 1 <= s < d < n:
        raise ValueError("need 1 <= s < d < n")
    pt = sample_member(s, d, n, seed, p)
    stack = reduced_kalman_matrix(pt).data
    w = n - d
    alpha_pows = [np.eye(d, dtype=np.int64)]
    for _ in range(d - 1):
        alpha_pows.append(_matmul_mod(alpha_pows[-1], pt.alpha, p))
    gamma_pows = [stack[j * w : (j + 1) * w] for j in range(d)]  # gamma*alpha^j

    # derivative of the stack with respect to each variable phi_{r,c}
    dstacks = {}
    for u in range(d):       # alpha variables
        for v in range(d):
            ds = np.zeros_like(stack)
            for j in range(1, d):
                block = np.zeros((w, d), dtype=np.int64)
                for m_ in range(j):
                    col = gamma_pows[m_][:, u][:, None]
                    row = alpha_pows[j - 1 - m_][v, :][None, :]
                    block = (block + col * row) % p
                ds[j * w : (j + 1) * w] = block
            dstacks[(u, v)] = ds
    for u in range(w):       # gamma variables
        for v in range(d):
            ds = np.zeros_like(stack)
            for j in range(d):
                ds[j * w + u] = alpha_pows[j][v, :]
            dstacks[(d + u, v)] = ds

    minors = _minor_indices(s, d, n)
    jac = np.zeros((len(minors), n * n), dtype=np.int64)
    for row_i, (rows, cols, _) in enumerate(minors):
        sub = stack[np.ix_(rows, cols)]
        adj = _adjugate_mod(sub, p)
        for (r, c), ds in dstacks.items():
            dsub = ds[np.ix_(rows, cols)]
            val = int(np.sum((adj * dsub.T) % p)) % p  # trace(adj @ dsub)
            jac[row_i, r * n + c] = val
    return _rank_mod_p(jac, p)


class BudgetExceededError(Exception):
    """Monomial space too large for the evaluation oracle."""

    def __init__(self, n: int, k: int, count: int, budget: int):
        self.n, self.k, self.count, self.budget = n, k, count, budget
        super().__init__(
            f"degree-{k} monomial count C({n * n + k - 1}, {k}) = {count} "
            f"exceeds budget {budget}"
        )


def numeric_hilbert_function(
    s: int,
    d: int,
    n: int,
    k_max: int,
    seed: int,
    p: int = P_DEFAULT,
    budget: int = 100_000,
    margin: int = 5,
    repeats: int = 2,
):
    """Hilbert function of A / (minor ideal) in degrees 0..k_max, estimated
    by evaluation: rows are (minor x complementary monomial), columns are
    random points; dim I_k is the rank, HF_k = C(n^2+k-1, k) - dim I_k.

    Wrong answers can only underestimate dim I_k (rank drops on unlucky
    points), so `repeats` independent point sets are used and the max rank
    taken.  Refuses degrees whose monomial count exceeds `budget`.
    """
    if not 1 <= s <= d < n:
        raise ValueError("need 1 <= s <= d < n")
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    nn = n * n
    dims = []
    for k in range(k_max + 1):
        count = comb(nn + k - 1, k)
        if count > budget:
            raise BudgetExceededError(n, k, count, budget)
        dims.append(count)

    minors = _minor_indices(s, d, n)
    rng = SplitMix64(seed)
    hf = []
    prev_dim = 0
    for k in range(k_max + 1):
        row_specs = []
        for idx, (rows, cols, deg) in enumerate(minors):
            if deg > k:
                continue
            for mono in combinations_with_replacement(range(nn), k - deg):
                row_specs.append((idx, mono))
        if not row_specs:
            dim_k = 0
        else:
            dim_k = 0
            for _ in range(repeats):
                npts = min(len(row_specs), dims[k]) + margin
                flats = np.empty((npts, nn), dtype=np.int64)
                minor_vals = np.empty((npts, len(minors)), dtype=np.int64)
                for t in range(npts):
                    pt = KalmanPoint(d, n, rng.matrix(n, n, p), p)
                    flats[t] = pt.phi.reshape(-1)
                    stack = reduced_kalman_matrix(pt).data
                    for j, (rows, cols, _) in enumerate(minors):
                        minor_vals[t, j] = _det_mod(stack[np.ix_(rows, cols)], p)
                mat = np.empty((len(row_specs), npts), dtype=np.int64)
                for r, (idx, mono) in enumerate(row_specs):
                    vals = minor_vals[:, idx].copy()
                    for var in mono:
                        vals = (vals * flats[:, var]) % p
                    mat[r] = vals
                dim_k = max(dim_k, _rank_mod_p(mat, p))
        assert dim_k >= prev_dim, "ideal dimensions must be nondecreasing"
        prev_dim = dim_k
        hf.append(dims[k] - dim_k)
    return hf
