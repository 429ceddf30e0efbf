"""Character ring of GL_d x sl2 with Adams and lambda operations.

Elements are finite sums  c * p_mu * q^k  with rational c, stored as
{(mu, k): c} and truncated above a fixed total degree N (the degree of
p_mu q^k is |mu|; q carries no degree).  Power sums keep the Adams
operations diagonal: psi^m sends p_mu q^k to p_{m*mu} q^{mk}.

sl2 content lives in the Laurent variable q.  The irreducible of highest
weight m contributes q^m + q^{m-2} + ... + q^{-m}, so the multiplicity of
weight-m isotypes inside a character is coeff(q^m) - coeff(q^{m+2}).

lambda_op is the alternating sum of exterior powers, multiplicative in
direct sums, computed as exp(-sum_m psi^m / m).  solve_characters finds
the unique graded pair (a, b) with

    [lambda(a*[L(2)] + b*[L(0)]) : L(0)] = 1,
    [lambda(a*[L(2)] + b*[L(0)]) : L(2)] = -p_1,

degree by degree: if F is the lambda of everything below degree n, the
new unknowns enter the degree-n part only as -(a_n [L(2)] + b_n [L(0)]),
so b_n and a_n are read off the two isotypes of F's degree-n part.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

from .partitions import SnModule, character, dim_irrep, partitions, zee
from .series import DimSequence

Key = tuple  # ((mu, k))


class GradedCharacter:
    """A virtual character, graded by polynomial degree, truncated at N."""

    __slots__ = ("N", "d", "terms")

    def __init__(self, N: int, terms=None, d: int | None = None):
        if N < 0:
            raise ValueError("negative truncation")
        self.N = N
        self.d = d
        clean = {}
        if terms:
            for (mu, k), c in terms.items():
                if not c or sum(mu) > N:
                    continue
                clean[(tuple(mu), int(k))] = Fraction(c)
        self.terms = clean

    # -- ring structure ----------------------------------------------------

    def _merge_meta(self, other):
        d = self.d if self.d is not None else other.d
        return min(self.N, other.N), d

    def __add__(self, other):
        N, d = self._merge_meta(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return GradedCharacter(N, out, d)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return GradedCharacter(
            self.N, {k: v * c for k, v in self.terms.items()}, self.d
        )

    def __mul__(self, other):
        N, d = self._merge_meta(other)
        by_deg = {}
        for (mu, k), c in other.terms.items():
            by_deg.setdefault(sum(mu), []).append((mu, k, c))
        out = {}
        for (mu, k), c in self.terms.items():
            room = N - sum(mu)
            for deg, bucket in by_deg.items():
                if deg > room:
                    continue
                for nu, j, e in bucket:
                    key = (_merge_partitions(mu, nu), k + j)
                    out[key] = out.get(key, 0) + c * e
        return GradedCharacter(N, out, d)

    def __eq__(self, other):
        return (
            isinstance(other, GradedCharacter)
            and self.N == other.N
            and self.terms == other.terms
        )

    def __repr__(self):
        inner = ", ".join(
            "%s: %s" % (k, v) for k, v in sorted(self.terms.items())
        )
        return "GradedCharacter(N=%d, {%s})" % (self.N, inner)

    # -- views ---------------------------------------------------------------

    def degree_part(self, n: int) -> dict:
        return {
            (mu, k): c for (mu, k), c in self.terms.items() if sum(mu) == n
        }

    def max_degree(self) -> int:
        return max((sum(mu) for (mu, _) in self.terms), default=0)

    def is_q_free(self) -> bool:
        return all(k == 0 for (_, k) in self.terms)


def _merge_partitions(mu: tuple, nu: tuple) -> tuple:
    return tuple(sorted(mu + nu, reverse=True))


def unit(N: int, d: int | None = None) -> GradedCharacter:
    return GradedCharacter(N, {((), 0): 1}, d)


def powersum(N: int, mu, k: int = 0, coeff=1, d: int | None = None) -> GradedCharacter:
    mu = tuple(sorted(mu, reverse=True))
    return GradedCharacter(N, {(mu, k): coeff}, d)


def l_character(m: int) -> dict:
    """Laurent coefficients of the irreducible sl2 character of weight m."""
    if m < 0:
        raise ValueError("negative weight")
    return {w: 1 for w in range(-m, m + 1, 2)}


def times_sl2(X: GradedCharacter, weights: dict) -> GradedCharacter:
    """Multiply by a fixed Laurent polynomial in q."""
    out = {}
    for (mu, k), c in X.terms.items():
        for w, e in weights.items():
            key = (mu, k + w)
            out[key] = out.get(key, 0) + c * e
    return GradedCharacter(X.N, out, X.d)


def adams(m: int, X: GradedCharacter) -> GradedCharacter:
    if m < 1:
        raise ValueError("Adams index must be >= 1")
    out = {}
    for (mu, k), c in X.terms.items():
        key = (tuple(part * m for part in mu), k * m)
        out[key] = out.get(key, 0) + c
    return GradedCharacter(X.N, out, X.d)


def lambda_op(X: GradedCharacter) -> GradedCharacter:
    """Alternating exterior-power sum; multiplicative over +."""
    if X.degree_part(0):
        raise ValueError("lambda_op needs input in the augmentation ideal")
    N = X.N
    log_part = GradedCharacter(N, {}, X.d)
    for m in range(1, N + 1):
        psi = adams(m, X)
        if not psi.terms:
            continue
        log_part = log_part + psi.scale(Fraction(-1, m))
    out = unit(N, X.d)
    term = unit(N, X.d)
    for k in range(1, N + 1):
        term = (term * log_part).scale(Fraction(1, k))
        if not term.terms:
            break
        out = out + term
    return out


def sl2_isotype(X: GradedCharacter, m: int) -> GradedCharacter:
    """Multiplicity class of the weight-m sl2 isotype, as a q-free character."""
    if m < 0 or m % 2:
        raise ValueError("weight must be even and non-negative")
    out = {}
    for (mu, k), c in X.terms.items():
        if k == m:
            out[(mu, 0)] = out.get((mu, 0), 0) + c
        elif k == m + 2:
            out[(mu, 0)] = out.get((mu, 0), 0) - c
    return GradedCharacter(X.N, out, X.d)


L0 = {0: 1}
L2 = l_character(2)


def _solve_raw(N: int) -> tuple:
    a = GradedCharacter(N, {})
    b = GradedCharacter(N, {})
    F = unit(N)
    for n in range(1, N + 1):
        K = GradedCharacter(N, F.degree_part(n))
        b_n = sl2_isotype(K, 0)
        a_n = sl2_isotype(K, 2)
        if n == 1:
            a_n = a_n + powersum(N, (1,))
        a = a + a_n
        b = b + b_n
        step = times_sl2(a_n, L2) + b_n
        if step.terms:
            F = F * lambda_op(step)
    return a, b


_solved: dict = {}


def solve_characters(d: int, N: int) -> tuple:
    """The unique (a, b) making lambda(a[L2] + b[L0]) trivial in sl2.

    Solved degree by degree; F carries lambda of everything already fixed.
    The recursion never looks at d, so results are cached by N alone and
    reused (sliced down) for smaller truncations.
    """
    if d < 1 or N < 1:
        raise ValueError("need d >= 1 and N >= 1")
    best = max(_solved, default=0)
    if N > best:
        _solved.clear()
        _solved[N] = _solve_raw(N)
        best = N
    a, b = _solved[best]
    return (
        GradedCharacter(N, a.terms, d),
        GradedCharacter(N, b.terms, d),
    )


km_prediction = solve_characters


@cache
def schur_in_powersums(shape: tuple) -> dict:
    """s_shape as {mu: coefficient} over power sums."""
    n = sum(shape)
    return {
        mu: Fraction(character(shape, mu), zee(mu)) for mu in partitions(n)
    }


def schur_decompose(X: GradedCharacter, n: int) -> SnModule:
    """Multiplicities of s_lambda in the degree-n part (exact, asserted integral)."""
    if X.d is not None and X.d < n:
        raise ValueError("need at least %d variables to keep degree %d faithful" % (n, n))
    part = X.degree_part(n)
    if any(k for (_, k) in part):
        raise ValueError("degree part still carries sl2 content")
    coeffs = {mu: c for (mu, _), c in part.items()}
    mults = {}
    for shape in partitions(n):
        m = sum(coeffs.get(mu, 0) * character(shape, mu) for mu in coeffs)
        if m:
            if m.denominator != 1:
                raise ArithmeticError(
                    "non-integer multiplicity %s at %s" % (m, shape)
                )
            mults[shape] = int(m)
    return SnModule(n, mults)


def effectivity_check(X: GradedCharacter, n: int) -> tuple:
    """(all multiplicities non-negative?, offending shapes)."""
    module = schur_decompose(X, n)
    bad = sorted(s for s, m in module.mults.items() if m < 0)
    return (not bad, bad)


def dims_from_character(X: GradedCharacter, d: int | None = None) -> DimSequence:
    """Specialize p_k -> d and q -> 1 in every positive degree."""
    if d is None:
        d = X.d
    if d is None:
        raise ValueError("no variable count given")
    dims = [Fraction(0)] * X.N
    for (mu, _), c in X.terms.items():
        n = sum(mu)
        if n:
            dims[n - 1] += c * d ** len(mu)
    out = []
    for n, v in enumerate(dims, start=1):
        if v.denominator != 1:
            raise ArithmeticError("non-integer dimension %s in degree %d" % (v, n))
        out.append(int(v))
    return DimSequence(p=d, dims=tuple(out))
