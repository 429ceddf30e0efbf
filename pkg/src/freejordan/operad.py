"""Multilinear components of the free Jordan operad by the rank method.

Degree-n relations are generated from the four-slot identity by two moves:
substituting x_i <- x_i * x_new into a degree-(n-1) relation (n-1 ways) and
multiplying by the new generator (1 way), giving j_n = n!/24 generators whose
S_n-translates span the degree-n T-ideal component.  Everything is kept in
the normal-monomial span; the free cover of that span is one copy of kS_n
per association type, so a type's monomial space is the quotient by slot
symmetries (head swap, pair swaps, and the head/first-factor block swap).

For an irreducible of shape lambda the relation submodule's multiplicity is
the rank of a matrix with f_n * d_lambda rows built from one d_lambda-wide
column block per generator (and per slot symmetry), each block being the
Clifton matrix of the element: a monomial with slot-label permutation s
contributes A_lambda(s^{-1}), so relabeling acts by right multiplication and
one block carries the whole orbit.  A(id)^{-1} factors out of every row
block, so raw A matrices give the same rank as true representing matrices.
The multiplicity of the irreducible in the quotient is then
f_n * d_lambda - rank, certified modulo two primes.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import cache
from math import factorial

import numpy as np

from .errors import InfeasibleError, UnluckyPrimeError
from .linalg import PRIMES_BLAS, RankAccumulator, frac_mod
from .partitions import SnModule, character, dim_irrep, partitions, zee
from .symreps import clifton_matrix, inverse_perm
from .trees import (
    all_trees,
    jordan_element,
    jordan_tree_element,
    leaf,
    monomial_key,
    monomial_slot_labels,
    monomial_to_tree,
    monomial_type,
    node,
    normal_types,
    relabel_tree,
    straighten_element,
    substitute_leaf,
    type_swap_perms,
)


@cache
def comm_types(n: int) -> tuple:
    """Canonical unlabeled commutative tree shapes with n leaves."""
    if n < 1:
        raise ValueError("degree must be positive")
    if n == 1:
        return ((1,),)
    out = set()
    for k in range(1, n // 2 + 1):
        for a in comm_types(k):
            for b in comm_types(n - k):
                pair = (a, b) if a <= b else (b, a)
                out.add((n,) + pair)
    return tuple(sorted(out))


def jordan_identity_count(n: int) -> int:
    """Size of the generating set used in degree n."""
    return 0 if n < 4 else factorial(n) // 24


@cache
def consequences(n: int) -> tuple:
    """Degree-n relation generators in normal form, as {monomial: coeff}.

    Lazy and recursive: each degree-(n-1) generator yields n-1 substituted
    versions plus one multiplied by the new label.
    """
    if n < 4:
        return ()
    if n == 4:
        elt = jordan_element(leaf(1), leaf(2), leaf(3), leaf(4))
        return (elt,)
    out = []
    for lower in consequences(n - 1):
        for i in range(1, n):
            acc: dict = {}
            for m, c in lower.items():
                t = substitute_leaf(monomial_to_tree(m), i, node(leaf(i), leaf(n)))
                for key, v in straighten_element({t: Fraction(1)}).items():
                    w = acc.get(key, 0) + c * v
                    if w:
                        acc[key] = w
                    else:
                        acc.pop(key, None)
            out.append(acc)
        raised = {}
        for m, c in lower.items():
            key = monomial_key(m[0], m[1] + ((n,),))
            raised[key] = c
        out.append(raised)
    return tuple(out)


@cache
def _tree_consequences(n: int) -> tuple:
    """The same generating recursion kept in the raw tree basis."""
    if n < 4:
        return ()
    if n == 4:
        return (jordan_tree_element(leaf(1), leaf(2), leaf(3), leaf(4)),)
    out = []
    for lower in _tree_consequences(n - 1):
        for i in range(1, n):
            acc: dict = {}
            for t, c in lower.items():
                s = substitute_leaf(t, i, node(leaf(i), leaf(n)))
                acc[s] = acc.get(s, 0) + c
            out.append(acc)
        out.append({node(t, leaf(n)): c for t, c in lower.items()})
    return tuple(out)


# --- Hentzel blocks ----------------------------------------------------------


@cache
def _sigma_expansion(n: int) -> tuple:
    """Each generator as ((type index, inverse slot permutation, coeff), ...)."""
    types = {comp: i for i, comp in enumerate(normal_types(n))}
    rows = []
    for gen in consequences(n):
        terms = []
        for m, c in gen.items():
            labels = monomial_slot_labels(m)
            sigma = tuple(x - 1 for x in labels)
            terms.append((types[monomial_type(m)], inverse_perm(sigma), c))
        rows.append(tuple(terms))
    return tuple(rows)


def _block_columns(shape: tuple, n: int, p: int):
    """Yield int64 column blocks (d columns each) of the relation matrix mod p."""
    comps = normal_types(n)
    d = dim_irrep(shape)
    f = len(comps)
    ident = tuple(range(n))
    for ti, comp in enumerate(comps):
        for t in type_swap_perms(comp, n):
            block = np.zeros((f * d, d), dtype=np.int64)
            swap = (
                clifton_matrix(shape, ident).astype(np.int64)
                - clifton_matrix(shape, t).astype(np.int64)
            ) % p
            block[ti * d : (ti + 1) * d] = swap
            yield block
    for terms in _sigma_expansion(n):
        block = np.zeros((f * d, d), dtype=np.int64)
        for ti, sigma_inv, c in terms:
            sub = block[ti * d : (ti + 1) * d]
            sub += frac_mod(c, p) * clifton_matrix(shape, sigma_inv).astype(np.int64)
        block %= p
        yield block


def _rank_one_prime(shape: tuple, n: int, p: int, batch: int = 24) -> int:
    d = dim_irrep(shape)
    f = len(normal_types(n))
    acc = RankAccumulator(f * d, p)
    pending = []
    width = 0
    for block in _block_columns(shape, n, p):
        pending.append(block.T)
        width += block.shape[1]
        if width >= batch * d:
            acc.add(np.concatenate(pending, axis=0))
            pending, width = [], 0
        if acc.is_full:
            return acc.rank
    if pending:
        acc.add(np.concatenate(pending, axis=0))
    return acc.rank


def multiplicity(shape: tuple, n: int, primes=None) -> int:
    """Multiplicity of the shape-lambda irreducible in degree n."""
    if sum(shape) != n:
        raise ValueError("shape %s is not a partition of %d" % (shape, n))
    if primes is None:
        primes = PRIMES_BLAS[:2]
    ranks = {p: _rank_one_prime(shape, n, p) for p in primes}
    if len(set(ranks.values())) != 1:
        raise UnluckyPrimeError(ranks)
    rank = next(iter(ranks.values()))
    return len(normal_types(n)) * dim_irrep(shape) - rank


def jord_module(n: int, primes=None, max_degree: int = 8, workers=None) -> SnModule:
    """Full degree-n decomposition; distinct shapes run concurrently."""
    if n > max_degree:
        raise InfeasibleError(
            "degree %d blocks have %d generator columns; raise max_degree "
            "to force the attempt" % (n, jordan_identity_count(n)),
            estimate="%d x d_lambda columns per shape" % jordan_identity_count(n),
        )
    shapes = partitions(n)
    if workers is None:
        workers = int(os.environ.get("FREEJORDAN_WORKERS", "4"))
    consequences(n)  # build shared input once, outside the pool
    if workers > 1 and len(shapes) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            mults = list(pool.map(lambda s: multiplicity(s, n, primes), shapes))
    else:
        mults = [multiplicity(s, n, primes) for s in shapes]
    return SnModule(n, dict(zip(shapes, mults)))


# --- tree-level oracle --------------------------------------------------------


@cache
def _tree_basis(n: int) -> dict:
    return {t: i for i, t in enumerate(all_trees(tuple(range(1, n + 1))))}


@cache
def _perm_index_arrays(n: int) -> dict:
    """perm -> index array a with a[i] = basis index of the relabeled tree i."""
    import itertools

    basis = _tree_basis(n)
    trees = list(basis)
    out = {}
    for perm in itertools.permutations(range(1, n + 1)):
        mapping = {i + 1: perm[i] for i in range(n)}
        out[perm] = np.array(
            [basis[relabel_tree(t, mapping)] for t in trees], dtype=np.int64
        )
    return out


@cache
def _sparse_tree_gens(n: int) -> tuple:
    """Each tree-level generator as (basis index array, int coefficient array)."""
    basis = _tree_basis(n)
    out = []
    for gen in _tree_consequences(n):
        idx = np.array([basis[t] for t in gen], dtype=np.int64)
        co = np.array([int(c) for c in gen.values()], dtype=np.int64)
        out.append((idx, co))
    return tuple(out)


def _translate_span(n: int, p: int) -> RankAccumulator:
    """Accumulate every S_n-translate of every tree-level generator mod p."""
    acc = RankAccumulator(len(_tree_basis(n)), p)
    gens = _sparse_tree_gens(n)
    if not gens:
        return acc
    mods = [co % p for _, co in gens]
    for arr in _perm_index_arrays(n).values():
        block = np.zeros((len(gens), acc.ncols), dtype=np.int64)
        for k, (idx, _) in enumerate(gens):
            block[k, arr[idx]] = mods[k]
        acc.add(block)
    return acc


def naive_dim(n: int, primes=None, bound: int = 6) -> int:
    """dim Jord(n) from scratch: rank of all relation translates over all trees.

    Independent of straightening and of the representation theory; the
    costly cross-check the block method is validated against.
    """
    if n > bound:
        raise InfeasibleError(
            "naive rank at degree %d needs %d translate rows over a "
            "%d-dimensional space" % (n, jordan_identity_count(n) * factorial(n),
                                      _double_factorial(2 * n - 3)),
            estimate="%d rows" % (jordan_identity_count(n) * factorial(n)),
        )
    if primes is None:
        primes = PRIMES_BLAS[:2]
    ranks = {p: _translate_span(n, p).rank for p in primes}
    if len(set(ranks.values())) != 1:
        raise UnluckyPrimeError(ranks)
    return len(_tree_basis(n)) - next(iter(ranks.values()))


def _double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


@cache
def tree_space_character(n: int, mu: tuple) -> int:
    """Trace of a cycle-type-mu relabeling on the tree permutation basis."""
    perm = []
    start = 1
    for part in mu:
        cycle = list(range(start, start + part))
        perm.extend(cycle[1:] + cycle[:1])
        start += part
    mapping = {i + 1: perm[i] for i in range(n)}
    return sum(1 for t in all_trees(tuple(range(1, n + 1)))
               if relabel_tree(t, mapping) == t)


def naive_module(n: int, primes=None, bound: int = 6) -> SnModule:
    """Degree-n decomposition via isotypic projectors on the tree basis.

    Shares nothing with the Clifton path: ambient multiplicities come from
    fixed-point counts, and relation multiplicities from the rank of each
    isotypic projector applied to a row basis of the full translate span.
    """
    if n > bound:
        raise InfeasibleError("degree %d tree projectors are too large" % n)
    if primes is None:
        primes = PRIMES_BLAS[:2]
    shapes = partitions(n)
    ambient = {}
    for shape in shapes:
        tot = sum(
            Fraction(character(shape, mu) * tree_space_character(n, mu), zee(mu))
            for mu in partitions(n)
        )
        assert tot.denominator == 1
        ambient[shape] = int(tot)
    sub_ranks: dict = {shape: {} for shape in shapes}
    for p in primes:
        span = _translate_span(n, p).basis()
        class_sums = {mu: np.zeros_like(span) for mu in partitions(n)}
        for perm, arr in _perm_index_arrays(n).items():
            moved = np.zeros_like(span)
            moved[:, arr] = span
            mu = _cycle_type(perm)
            class_sums[mu] = (class_sums[mu] + moved) % p
        for shape in shapes:
            proj = np.zeros_like(span)
            for mu, block in class_sums.items():
                chi = character(shape, mu) % p
                if chi:
                    proj = (proj + chi * block) % p
            sub = RankAccumulator(proj.shape[1], p)
            sub.add(proj)
            sub_ranks[shape][p] = sub.rank
    mults = {}
    for shape in shapes:
        ranks = sub_ranks[shape]
        if len(set(ranks.values())) != 1:
            raise UnluckyPrimeError(ranks)
        sub_mult, rem = divmod(next(iter(ranks.values())), dim_irrep(shape))
        assert rem == 0
        value = ambient[shape] - sub_mult
        if value:
            mults[shape] = value
    return SnModule(n, mults)


def _cycle_type(perm: tuple) -> tuple:
    n = len(perm)
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j] - 1
            length += 1
        out.append(length)
    return tuple(sorted(out, reverse=True))
