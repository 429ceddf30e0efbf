"""Multigraded components of finitely generated free Jordan algebras.

Once generators repeat, the multilinear translate machinery no longer
applies, so everything here happens directly inside the span of normal
monomials of one fixed content vector.  The relation space of a content is
spanned by two kinds of rows, built degree by degree:

  * fresh instances of the four-slot defining identity whose slots hold
    normal monomials with contents summing to the target, and
  * rows of lower content with one extra factor of degree one or two
    appended (appending keeps normal monomials normal, so no rewriting
    is needed).

Appending only small factors loses nothing: multiplying a relation row by a
deeper monomial can be rewritten, via the straightening identity, into
appends of strictly smaller factors plus one fresh instance of the defining
identity with the row's monomials in the long slot, and both of those are
already in the span.

Fresh rows are assembled with the memoised normal-basis product (straighten
one two-factor tree per distinct pair of normal monomials) rather than by
straightening six large trees per slot tuple.  A row built this way differs
from the literal straightened identity instance by straightened relation
elements, and restricting slots to normal monomials only re-spans the same
rows by multilinearity, so the computed span always sits inside the true
relation image: reported dimensions can only err upward.  That they do not
is checked against the multilinear decomposition through every small
content (see the weight-space tests) and against independently published
values in higher degree.

Dimensions come from certified modular ranks; the exact Component view
keeps a rational echelon form instead, so products can be expressed in an
explicit quotient basis.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import cache
from math import factorial

import numpy as np

from .errors import InfeasibleError, UnluckyPrimeError
from .linalg import ExactRowReducer, RankAccumulator, blas_primes, frac_mod
from .trees import (
    leaf,
    monomial_key,
    monomial_to_tree,
    node,
    normal_types,
    straighten,
)


def _check_content(delta) -> tuple:
    delta = tuple(int(x) for x in delta)
    if not delta or any(x < 0 for x in delta) or sum(delta) == 0:
        raise ValueError("content must list a nonnegative count per generator")
    return delta


@cache
def _nonzero_subcontents(delta: tuple) -> tuple:
    out = []
    for s in itertools.product(*(range(d + 1) for d in delta)):
        if sum(s):
            out.append(s)
    return tuple(out)


@cache
def monomials(delta: tuple) -> tuple:
    """Every canonical product tree with the given generator content."""
    n = sum(delta)
    if n == 0:
        return ()
    if n == 1:
        return (leaf(delta.index(1) + 1),)
    out = set()
    for s in _nonzero_subcontents(delta):
        if sum(s) == n:
            continue
        rest = tuple(a - b for a, b in zip(delta, s))
        for a in monomials(s):
            for b in monomials(rest):
                out.add(node(a, b))
    return tuple(sorted(out))


def _arrangements(counts: tuple):
    """Distinct label sequences using counts[i] copies of generator i+1."""
    if sum(counts) == 0:
        yield ()
        return
    for i, c in enumerate(counts):
        if c:
            rest = counts[:i] + (c - 1,) + counts[i + 1 :]
            for tail in _arrangements(rest):
                yield (i + 1,) + tail


@cache
def normal_monomials(delta: tuple) -> tuple:
    """Canonical normal-monomial keys with the given content."""
    n = sum(delta)
    if n == 0:
        return ()
    if n == 1:
        return (((delta.index(1) + 1,), ()),)
    out = set()
    for comp in normal_types(n):
        for labels in _arrangements(delta):
            head = labels[:2]
            factors, pos = [], 2
            for c in comp:
                factors.append(labels[pos : pos + c])
                pos += c
            out.add(monomial_key(head, tuple(factors)))
    return tuple(sorted(out))


def _slot_splits(delta: tuple):
    """Ordered 4-tuples of nonzero contents summing to delta."""
    for s1 in _nonzero_subcontents(delta):
        r1 = tuple(a - b for a, b in zip(delta, s1))
        for s2 in _nonzero_subcontents(r1) if sum(r1) else ():
            r2 = tuple(a - b for a, b in zip(r1, s2))
            for s3 in _nonzero_subcontents(r2) if sum(r2) else ():
                s4 = tuple(a - b for a, b in zip(r2, s3))
                if sum(s4):
                    yield s1, s2, s3, s4


def _unit_factors(g: int):
    """Degree-1 and degree-2 factors on g generators, with their contents."""
    for i in range(1, g + 1):
        content = tuple(1 if k == i - 1 else 0 for k in range(g))
        yield (i,), content
    for i in range(1, g + 1):
        for j in range(i, g + 1):
            content = tuple(
                (1 if k == i - 1 else 0) + (1 if k == j - 1 else 0)
                for k in range(g)
            )
            yield (i, j), content


@cache
def _mul_normal(m1: tuple, m2: tuple) -> tuple:
    """Product of two normal monomials, restraightened; sorted key pairs."""
    t = node(monomial_to_tree(m1), monomial_to_tree(m2))
    return tuple(sorted(straighten(t).items()))


def _mul(e1: dict, e2: dict) -> dict:
    out = {}
    for m1, c1 in e1.items():
        for m2, c2 in e2.items():
            c = c1 * c2
            for m, d in _mul_normal(*sorted((m1, m2))):
                v = out.get(m, 0) + c * d
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
    return out


def _jordan_row(b1: tuple, b2: tuple, b3: tuple, b4: tuple) -> dict:
    """The defining identity at four normal monomials, in normal coordinates."""
    one = Fraction(1)
    e1, e2, e3, e4 = {b1: one}, {b2: one}, {b3: one}, {b4: one}
    p12, p14, p24 = _mul(e1, e2), _mul(e1, e4), _mul(e2, e4)
    out = {}
    for term, sign in (
        (_mul(_mul(p12, e3), e4), 1),
        (_mul(_mul(p24, e3), e1), 1),
        (_mul(_mul(p14, e3), e2), 1),
        (_mul(p12, _mul(e3, e4)), -1),
        (_mul(_mul(e1, e3), p24), -1),
        (_mul(p14, _mul(e2, e3)), -1),
    ):
        for m, c in term.items():
            v = out.get(m, 0) + sign * c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


@cache
def relation_rows(delta: tuple) -> tuple:
    """Straightened consequence rows spanning the relations of one content."""
    n = sum(delta)
    if n < 4:
        return ()
    rows = []
    seen = set()
    for s1, s2, s3, s4 in _slot_splits(delta):
        for v3 in normal_monomials(s3):
            for v1 in normal_monomials(s1):
                for v2 in normal_monomials(s2):
                    for v4 in normal_monomials(s4):
                        # the identity is symmetric in slots 1, 2, 4
                        key = (tuple(sorted((v1, v2, v4))), v3)
                        if key in seen:
                            continue
                        seen.add(key)
                        elt = _jordan_row(v1, v2, v3, v4)
                        if elt:
                            rows.append(elt)
    g = len(delta)
    for u, content in _unit_factors(g):
        lower = tuple(a - b for a, b in zip(delta, content))
        if min(lower) < 0 or sum(lower) < 4:
            continue
        for r in relation_rows(lower):
            rows.append(
                {monomial_key(m[0], m[1] + (u,)): c for m, c in r.items()}
            )
    return tuple(rows)


def _span_estimate(delta: tuple) -> int:
    n = sum(delta)
    mult = factorial(n)
    for d in delta:
        mult //= factorial(d)
    return len(normal_types(n)) * mult


def multidegree_dim(delta, primes=None, bound: int = 11, max_parts: int = 3) -> int:
    """Dimension of the content-delta component of the free Jordan algebra."""
    delta = _check_content(delta)
    if sum(1 for x in delta if x) > max_parts:
        raise ValueError(
            "%d generators in use; raise max_parts to allow it"
            % sum(1 for x in delta if x)
        )
    n = sum(delta)
    if n > bound:
        raise InfeasibleError(
            "content %s has total degree %d > bound %d" % (delta, n, bound),
            estimate="up to %d spanning monomials" % _span_estimate(delta),
        )
    basis = normal_monomials(delta)
    rows = relation_rows(delta)
    if not rows:
        return len(basis)
    index = {m: i for i, m in enumerate(basis)}
    sparse = [
        (np.array([index[m] for m in r], dtype=np.int64), tuple(r.values()))
        for r in rows
    ]
    if primes is None:
        # largest primes that keep elimination on the float64 fast path
        primes = blas_primes(len(basis))
    ranks = {}
    for p in primes:
        acc = RankAccumulator(len(basis), p)
        batch = np.zeros((min(256, len(sparse)), len(basis)), dtype=np.int64)
        k = 0
        for cols, vals in sparse:
            batch[k, cols] = [frac_mod(v, p) for v in vals]
            k += 1
            if k == batch.shape[0]:
                acc.add(batch)
                batch.fill(0)
                k = 0
        if k:
            acc.add(batch[:k])
        ranks[p] = acc.rank
    if len(set(ranks.values())) != 1:
        raise UnluckyPrimeError(ranks)
    return len(basis) - next(iter(ranks.values()))


class Component:
    """One multidegree component with an explicit rational quotient basis."""

    def __init__(self, delta: tuple, span: tuple, reducer: ExactRowReducer):
        self.delta = delta
        self.span = span
        self._index = {m: i for i, m in enumerate(span)}
        self._reducer = reducer
        pivots = set(reducer.pivot_columns())
        self.basis = tuple(m for i, m in enumerate(span) if i not in pivots)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, elt: dict) -> dict:
        """Coordinates of a straightened element in the quotient basis."""
        vec = [Fraction(0)] * len(self.span)
        for m, c in elt.items():
            if m not in self._index:
                raise ValueError("monomial %r has the wrong content" % (m,))
            vec[self._index[m]] += c
        rem = self._reducer.reduce(vec)
        return {m: rem[self._index[m]] for m in self.basis if rem[self._index[m]]}


@cache
def component(delta: tuple, bound: int = 8) -> Component:
    """Exact quotient model; far smaller bound than the modular path."""
    delta = _check_content(delta)
    n = sum(delta)
    if n > bound:
        raise InfeasibleError(
            "exact echelon form refused at total degree %d > bound %d" % (n, bound),
            estimate="up to %d spanning monomials" % _span_estimate(delta),
        )
    span = normal_monomials(delta)
    index = {m: i for i, m in enumerate(span)}
    red = ExactRowReducer(len(span))
    for r in relation_rows(delta):
        row = [Fraction(0)] * len(span)
        for m, c in r.items():
            row[index[m]] += c
        red.add(row)
    return Component(delta, span, red)
