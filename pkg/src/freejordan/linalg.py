"""Exact linear algebra over Q and over word-sized prime fields.

Scalars are python ints and fractions.Fraction; nothing here ever trusts a
float. Matrices are dense: numpy integer arrays for modular work, lists of
lists for rational work. The float64 matmul fast path below is exact by a
counting argument (all intermediate values stay under 2**53), never an
approximation.

Thread-safety: all functions are pure; RankAccumulator instances are not
shared between threads.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .errors import UnluckyPrimeError

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond 64 bits."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_above(bound: int, count: int) -> tuple[int, ...]:
    """The first `count` primes strictly greater than `bound`."""
    out = []
    n = bound + 1
    while len(out) < count:
        if is_prime(n):
            out.append(n)
        n += 1
    return tuple(out)


def blas_primes(ncols: int, count: int = 2) -> tuple[int, ...]:
    """The largest primes whose elimination stays exact in float64 BLAS.

    Reduction against a stored basis of up to `ncols` rows accumulates dot
    products bounded by ncols*(p-1)^2, which must stay below 2**53.
    """
    bound = math.isqrt(2**53 // max(ncols, 1))
    if bound < 257:
        raise ValueError("too many columns for a float64-exact prime")
    out = []
    n = bound
    while len(out) < count and n > 2:
        if is_prime(n):
            out.append(n)
        n -= 1
    return tuple(out)


# Default certification pool: word-sized primes above 2**30.
DEFAULT_PRIMES = primes_above(2**30, 4)

# Primes small enough that elimination can run through float64 BLAS matmuls
# exactly (rows * (p-1)^2 < 2**53 for row counts into the thousands).
PRIMES_BLAS = primes_above(2**20 - 600, 4)


def _blas_ok(p: int, inner: int) -> bool:
    return inner * (p - 1) * (p - 1) < 2**53


def frac_mod(c, p: int) -> int:
    """Image of an int or Fraction in Z/p (denominator inverted, not floored)."""
    c = Fraction(c)
    return c.numerator * pow(c.denominator, -1, p) % p


def to_mod_array(rows, p: int) -> np.ndarray:
    """Reduce an int/Fraction matrix (or numpy array) modulo p.

    Fraction entries need denominators coprime to p.
    """
    if isinstance(rows, np.ndarray) and rows.dtype.kind in "iu":
        return np.asarray(rows, dtype=np.int64) % p
    out = np.zeros((len(rows), len(rows[0]) if len(rows) else 0), dtype=np.int64)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if isinstance(x, Fraction):
                den = x.denominator % p
                if den == 0:
                    raise ValueError(
                        "denominator of %s not invertible modulo %d" % (x, p)
                    )
                out[i, j] = x.numerator * pow(den, p - 2, p) % p
            else:
                out[i, j] = int(x) % p
    return out


def _echelon_mod_p(a: np.ndarray, p: int):
    """In-place row echelon form mod p; returns (rank, pivot column list)."""
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = a[r] * inv % p
        col = a[r + 1 :, c]
        mask = col != 0
        if mask.any():
            a[r + 1 :][mask] = (
                a[r + 1 :][mask] - np.outer(col[mask], a[r])
            ) % p
        pivots.append(c)
        r += 1
    return r, pivots


def rank_mod_p(rows, p: int) -> int:
    """Rank of a matrix over F_p."""
    a = to_mod_array(rows, p)
    if a.size == 0:
        return 0
    if a.shape[0] > 2 * a.shape[1]:
        acc = RankAccumulator(a.shape[1], p)
        step = max(1, (1 << 22) // max(1, a.shape[1]))
        for i in range(0, a.shape[0], step):
            acc.add(a[i : i + step])
            if acc.is_full:
                break
        return acc.rank
    rank, _ = _echelon_mod_p(a, p)
    return rank


def nullspace_mod_p(rows, p: int) -> np.ndarray:
    """Basis of the right nullspace over F_p, one vector per row."""
    a = to_mod_array(rows, p)
    if a.size == 0:
        return np.eye(a.shape[1] if a.ndim == 2 else 0, dtype=np.int64)
    rank, pivots = _echelon_mod_p(a, p)
    # back-substitute to reduced echelon form
    for k in range(rank - 1, -1, -1):
        c = pivots[k]
        col = a[:k, c]
        mask = col != 0
        if mask.any():
            a[:k][mask] = (a[:k][mask] - np.outer(col[mask], a[k])) % p
    ncols = a.shape[1]
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for i, c in enumerate(free):
        basis[i, c] = 1
        for k, pc in enumerate(pivots):
            basis[i, pc] = (-a[k, c]) % p
    return basis


def bareiss_rank(rows) -> int:
    """Rank over Q by fraction-free (integer-preserving) elimination.

    Rational entries are cleared row by row first, which does not change the
    rank. Intermediate entries are minors of the input, so everything stays
    in Z with exact divisions.
    """
    m = []
    for row in rows:
        ints = []
        lcm = 1
        for x in row:
            if isinstance(x, Fraction):
                lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
        for x in row:
            if isinstance(x, Fraction):
                ints.append(int(x * lcm))
            else:
                ints.append(int(x) * lcm)
        m.append(ints)
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nrows):
            if not any(m[i][c:]):
                continue
            for k in range(c + 1, ncols):
                m[i][k] = (m[i][k] * m[r][c] - m[i][c] * m[r][k]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
    return r


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def certified_rank(rows, primes=None, exact: bool = False) -> int:
    """Rank certified by agreement over several primes.

    Modular rank never exceeds the rational rank, so disagreement convicts
    the smaller value; the offending prime is named in the error. With
    exact=True a fraction-free elimination over Z confirms the result.
    """
    primes = tuple(primes) if primes else DEFAULT_PRIMES[:2]
    ranks = {p: rank_mod_p(rows, p) for p in primes}
    values = set(ranks.values())
    if len(values) > 1:
        raise UnluckyPrimeError(ranks)
    rank = values.pop() if values else 0
    if exact:
        true_rank = bareiss_rank(rows)
        if true_rank != rank:
            raise UnluckyPrimeError({**ranks, "exact": true_rank})
    return rank


class RankAccumulator:
    """Incremental rank of a growing set of vectors over F_p.

    Holds a reduced echelon basis of the span; add() reduces incoming
    vectors against it and absorbs whatever is new. Once the rank reaches
    the ambient dimension further adds are no-ops (is_full).
    """

    def __init__(self, ncols: int, p: int):
        self.ncols = ncols
        self.p = p
        self._rows = np.zeros((max(16, min(ncols, 1024)), ncols), dtype=np.int64)
        self._pivcols = []
        self.rank = 0

    @property
    def is_full(self) -> bool:
        return self.rank >= self.ncols

    def _grow(self, need):
        if need <= self._rows.shape[0]:
            return
        cap = self._rows.shape[0]
        while cap < need:
            cap = min(max(cap * 2, need), self.ncols)
        bigger = np.zeros((cap, self.ncols), dtype=np.int64)
        bigger[: self.rank] = self._rows[: self.rank]
        self._rows = bigger

    def _reduce_block(self, block: np.ndarray) -> np.ndarray:
        """Zero out all pivot columns of `block` against the stored basis."""
        p = self.p
        E = self._rows[: self.rank]
        piv = np.asarray(self._pivcols, dtype=np.intp)
        if _blas_ok(p, self.rank):
            coef = block[:, piv].astype(np.float64)
            prod = coef @ E.astype(np.float64)
            block = (block - np.rint(prod).astype(np.int64) % p) % p
        else:
            for k in range(self.rank):
                col = block[:, self._pivcols[k]]
                mask = col != 0
                if mask.any():
                    block[mask] = (block[mask] - np.outer(col[mask], E[k])) % p
        return block

    def add(self, vectors) -> int:
        """Absorb vectors (2d array, one vector per row); returns the rank."""
        if self.is_full:
            return self.rank
        p = self.p
        block = np.array(vectors, dtype=np.int64, copy=True) % p
        if block.ndim == 1:
            block = block[None, :]
        if self.rank:
            block = self._reduce_block(block)
        # echelonize the batch on its own first; the stored basis is
        # back-substituted once per batch with a single matmul instead of
        # one rank-sized outer product per new pivot
        new_idx, new_piv = [], []
        for i in range(block.shape[0]):
            row = block[i]
            nz = np.nonzero(row)[0]
            if nz.size == 0:
                continue
            c = int(nz[0])
            row = row * pow(int(row[c]), p - 2, p) % p
            block[i] = row
            rest = block[i + 1 :, c]
            rmask = rest != 0
            if rmask.any():
                block[i + 1 :][rmask] = (
                    block[i + 1 :][rmask] - np.outer(rest[rmask], row)
                ) % p
            for j in new_idx:
                if block[j, c]:
                    block[j] = (block[j] - block[j, c] * row) % p
            new_idx.append(i)
            new_piv.append(c)
            if self.rank + len(new_idx) >= self.ncols:
                break
        if not new_idx:
            return self.rank
        fresh = block[new_idx]
        if self.rank:
            E = self._rows[: self.rank]
            coef = E[:, new_piv]
            if coef.any():
                if len(new_piv) * (p - 1) * (p - 1) < 2**53:
                    prod = coef.astype(np.float64) @ fresh.astype(np.float64)
                    E[:] = (E - np.rint(prod).astype(np.int64) % p) % p
                else:
                    # fresh rows are mutually reduced, so sequential
                    # column-clearing updates stay consistent
                    for t in range(len(new_piv)):
                        col = E[:, new_piv[t]]
                        mask = col != 0
                        if mask.any():
                            E[mask] = (E[mask] - np.outer(col[mask], fresh[t])) % p
        self._grow(self.rank + len(new_idx))
        self._rows[self.rank : self.rank + len(new_idx)] = fresh
        self._pivcols.extend(new_piv)
        self.rank += len(new_idx)
        return self.rank

    def reduce(self, vectors) -> np.ndarray:
        """Remainders of vectors modulo the accumulated span (for membership)."""
        block = np.array(vectors, dtype=np.int64, copy=True) % self.p
        if block.ndim == 1:
            block = block[None, :]
        if self.rank == 0:
            return block
        return self._reduce_block(block)

    def basis(self) -> np.ndarray:
        """Copy of the reduced echelon basis accumulated so far."""
        return self._rows[: self.rank].copy()


class ExactRowReducer:
    """Incremental reduced row echelon form over Fraction.

    Far slower than the modular accumulators; meant for small spaces where
    exact quotient coordinates are needed, not just ranks.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivot_rows: dict[int, list[Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def reduce(self, row) -> list[Fraction]:
        """Remainder of one row modulo the accumulated span."""
        row = [Fraction(x) for x in row]
        for col, pivot in self.pivot_rows.items():
            c = row[col]
            if c:
                for j in range(col, self.ncols):
                    row[j] -= c * pivot[j]
        return row

    def add(self, row) -> bool:
        """Insert one row; returns True when it enlarged the span."""
        row = self.reduce(row)
        lead = next((j for j, x in enumerate(row) if x), None)
        if lead is None:
            return False
        inv = 1 / row[lead]
        row = [x * inv for x in row]
        for pivot in self.pivot_rows.values():
            c = pivot[lead]
            if c:
                for j in range(lead, self.ncols):
                    pivot[j] -= c * row[j]
        self.pivot_rows[lead] = row
        return True

    def pivot_columns(self) -> tuple[int, ...]:
        return tuple(sorted(self.pivot_rows))
