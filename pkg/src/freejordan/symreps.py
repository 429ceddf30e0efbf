"""Matrices for irreducible S_n representations via Clifton's algorithm.

Permutations are 0-indexed tuples: p[k] is the image of k, and
compose(p, q)[k] = p[q[k]].  Tableaux hold the values 0..n-1.

For standard tableaux t_1..t_h of a shape, the matrix A(sigma) has entry
(i, j) determined by superimposing t_i on sigma t_j: it vanishes unless
each column of sigma t_j can be permuted so that every value lands in the
row it occupies in t_i, and is then the sign of that column permutation.
The representing matrix is rho(sigma) = A(id)^{-1} A(sigma); ranks of
stacked A-blocks are unchanged by dropping the A(id)^{-1} factor, which
keeps the hot path in small integers.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import cache

import numpy as np

from .partitions import transpose


def identity_perm(n: int) -> tuple:
    return tuple(range(n))


def inverse_perm(p: tuple) -> tuple:
    out = [0] * len(p)
    for k, v in enumerate(p):
        out[v] = k
    return tuple(out)


def compose_perms(p: tuple, q: tuple) -> tuple:
    """First apply q, then p."""
    return tuple(p[q[k]] for k in range(len(q)))


def perm_sign(p: tuple) -> int:
    seen = [False] * len(p)
    sign = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@cache
def standard_tableaux(shape: tuple) -> tuple:
    """All standard tableaux of the shape, sorted by row-reading word.

    Each tableau is a tuple of row tuples filled with 0..n-1.
    """
    n = sum(shape)
    rows = len(shape)
    results = []

    def place(value, filled):
        if value == n:
            results.append(tuple(tuple(r) for r in filled))
            return
        for i in range(rows):
            j = len(filled[i])
            if j >= shape[i]:
                continue
            if i > 0 and len(filled[i - 1]) <= j:
                continue
            filled[i].append(value)
            place(value + 1, filled)
            filled[i].pop()

    place(0, [[] for _ in range(rows)])
    results.sort(key=lambda t: tuple(itertools.chain.from_iterable(t)))
    return tuple(results)


@cache
def _shape_data(shape: tuple):
    """Row lookup table and column-major cell lists shared by all sigma."""
    tabs = standard_tableaux(shape)
    h = len(tabs)
    n = sum(shape)
    row_of = np.zeros((h, n), dtype=np.int8)
    for i, t in enumerate(tabs):
        for r, row in enumerate(t):
            for v in row:
                row_of[i, v] = r
    heights = transpose(shape)
    # cells enumerated column by column, top to bottom
    cellvals = np.zeros((h, n), dtype=np.int64)
    for j, t in enumerate(tabs):
        pos = 0
        for c, hc in enumerate(heights):
            for r in range(hc):
                cellvals[j, pos] = t[r][c]
                pos += 1
    segments = []
    pos = 0
    for hc in heights:
        segments.append((pos, hc))
        pos += hc
    return row_of, cellvals, tuple(segments)


def clifton_matrix(shape: tuple, sigma: tuple) -> np.ndarray:
    """A(sigma) as a read-only int8 matrix with entries in {-1, 0, 1}."""
    key = (shape, sigma)
    cached = _clifton_cache.get(key)
    if cached is not None:
        return cached
    row_of, cellvals, segments = _shape_data(shape)
    h = row_of.shape[0]
    s = np.asarray(sigma, dtype=np.int64)
    images = s[cellvals]  # (j, cell) -> value in sigma t_j at that cell
    targets = row_of[:, images]  # (i, j, cell) -> required row under t_i
    acc = np.ones((h, h), dtype=np.int8)
    for start, hc in segments:
        seg = targets[:, :, start : start + hc]
        if hc == 1:
            acc *= seg[:, :, 0] == 0
            continue
        valid = np.all(np.sort(seg, axis=2) == np.arange(hc, dtype=np.int8), axis=2)
        inv = np.zeros((h, h), dtype=np.int64)
        for a in range(hc):
            for b in range(a + 1, hc):
                inv += seg[:, :, a] > seg[:, :, b]
        term = np.where(valid, 1 - 2 * (inv & 1), 0).astype(np.int8)
        acc *= term
    acc.setflags(write=False)
    _clifton_cache[key] = acc
    return acc


_clifton_cache: dict = {}


def clear_clifton_cache() -> None:
    _clifton_cache.clear()


def _fraction_inverse(mat) -> list:
    """Gauss-Jordan of a small square integer matrix into Fractions."""
    h = len(mat)
    a = [[Fraction(int(x)) for x in row] for row in mat]
    inv = [[Fraction(int(i == j)) for j in range(h)] for i in range(h)]
    for col in range(h):
        piv = next(r for r in range(col, h) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        scale = a[col][col]
        a[col] = [x / scale for x in a[col]]
        inv[col] = [x / scale for x in inv[col]]
        for r in range(h):
            if r == col or a[r][col] == 0:
                continue
            f = a[r][col]
            a[r] = [x - f * y for x, y in zip(a[r], a[col])]
            inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return inv


@cache
def _a_identity_inverse(shape: tuple) -> tuple:
    a_id = clifton_matrix(shape, identity_perm(sum(shape)))
    return tuple(tuple(row) for row in _fraction_inverse(a_id))


def rep_matrix(shape: tuple, sigma: tuple) -> tuple:
    """rho(sigma) = A(id)^{-1} A(sigma), exact Fractions, tuple of rows."""
    inv = _a_identity_inverse(shape)
    a = clifton_matrix(shape, sigma)
    h = len(inv)
    return tuple(
        tuple(sum(inv[i][k] * int(a[k][j]) for k in range(h)) for j in range(h))
        for i in range(h)
    )


def rep_trace(shape: tuple, sigma: tuple) -> Fraction:
    rho = rep_matrix(shape, sigma)
    return sum(rho[i][i] for i in range(len(rho)))
