"""Commutative binary trees, normal monomials, and straightening.

Trees: a leaf with label v is (1, v); a product is (deg, left, right) with
children in canonical (tuple-comparison) order, so equal trees are equal
tuples.  Labels are positive integers; multilinear code uses 1..n once each,
the multidegree code repeats them.

Normal monomials: (head, factors) with head a sorted pair (or a 1-tuple in
degree 1) and each factor a sorted 1- or 2-tuple, meaning the left comb
((x_a x_b) f_1) f_2 ... .  When the first factor is a pair, the head and
that factor describe the same tree in either order; the canonical key puts
the lexicographically smaller pair in the head.

straighten rewrites any tree into the span of normal monomials modulo the
degree-lowering identity

    L_{(ac)b} = -L_a L_b L_c - L_c L_b L_a + L_{ac} L_b + L_{ab} L_c + L_{bc} L_a

applied whenever the factor side of a product has degree >= 3.  Every
branch decision (which side is the factor, how to split the factor) uses
only degrees and label-free shape keys; when the two candidates have
identical shape the two reductions are averaged, which makes the whole map
commute with relabeling.  That equivariance is what lets the rank method
represent a full S_n-orbit of relations by one d_lambda-wide block.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache


def leaf(v: int) -> tuple:
    return (1, v)


def node(a: tuple, b: tuple) -> tuple:
    if b < a:
        a, b = b, a
    return (a[0] + b[0], a, b)


def tree_degree(t: tuple) -> int:
    return t[0]


def tree_labels(t: tuple) -> tuple:
    if t[0] == 1:
        return (t[1],)
    return tree_labels(t[1]) + tree_labels(t[2])


@cache
def shape_key(t: tuple) -> tuple:
    """Label-free total order on tree shapes."""
    if t[0] == 1:
        return (1,)
    a, b = shape_key(t[1]), shape_key(t[2])
    if b < a:
        a, b = b, a
    return (t[0], a, b)


def relabel_tree(t: tuple, mapping: dict) -> tuple:
    if t[0] == 1:
        return (1, mapping[t[1]])
    return node(relabel_tree(t[1], mapping), relabel_tree(t[2], mapping))


def substitute_leaf(t: tuple, old: int, replacement: tuple) -> tuple:
    """Replace every leaf labeled `old` (multilinear use: exactly one)."""
    if t[0] == 1:
        return replacement if t[1] == old else t
    return node(
        substitute_leaf(t[1], old, replacement),
        substitute_leaf(t[2], old, replacement),
    )


def all_trees(labels: tuple) -> list:
    """Every commutative binary tree on the given distinct labels."""
    labels = tuple(sorted(labels))
    if len(labels) == 1:
        return [leaf(labels[0])]
    first, rest = labels[0], labels[1:]
    out = []
    for mask in range(1 << len(rest)):
        left = [first] + [x for i, x in enumerate(rest) if mask >> i & 1]
        right = [x for i, x in enumerate(rest) if not mask >> i & 1]
        if not right:
            continue
        for a in all_trees(tuple(left)):
            for b in all_trees(tuple(right)):
                out.append(node(a, b))
    return sorted(set(out))


# --- normal monomials -------------------------------------------------------


def monomial_key(head, factors) -> tuple:
    head = tuple(sorted(head))
    factors = tuple(tuple(sorted(f)) for f in factors)
    if factors and len(factors[0]) == 2 and len(head) == 2 and factors[0] < head:
        head, factors = factors[0], (head,) + factors[1:]
    return (head, factors)


def monomial_degree(m: tuple) -> int:
    head, factors = m
    return len(head) + sum(len(f) for f in factors)


def monomial_to_tree(m: tuple) -> tuple:
    head, factors = m
    t = leaf(head[0]) if len(head) == 1 else node(leaf(head[0]), leaf(head[1]))
    for f in factors:
        g = leaf(f[0]) if len(f) == 1 else node(leaf(f[0]), leaf(f[1]))
        t = node(t, g)
    return t


def relabel_monomial(m: tuple, mapping: dict) -> tuple:
    head, factors = m
    return monomial_key(
        tuple(mapping[x] for x in head),
        tuple(tuple(mapping[x] for x in f) for f in factors),
    )


def monomial_type(m: tuple) -> tuple:
    return tuple(len(f) for f in m[1])


def normal_types(n: int) -> list:
    """Factor-size compositions; count is the Fibonacci-style f_n."""
    if n < 1:
        raise ValueError("degree must be positive")
    if n <= 2:
        return [()]

    def comps(k):
        if k == 0:
            return [()]
        out = [(1,) + c for c in comps(k - 1)]
        if k >= 2:
            out += [(2,) + c for c in comps(k - 2)]
        return out

    return comps(n - 2)


def type_slots(comp: tuple) -> list:
    """Slot offsets of each factor; head occupies slots 0 and 1."""
    offsets = []
    pos = 2
    for c in comp:
        offsets.append(pos)
        pos += c
    return offsets


def type_swap_perms(comp: tuple, n: int) -> list:
    """Slot permutations identifying equal monomials of this type."""
    if n == 1:
        return []
    perms = []

    def transposition(i, j):
        p = list(range(n))
        p[i], p[j] = p[j], p[i]
        return tuple(p)

    perms.append(transposition(0, 1))
    pos = 2
    for c in comp:
        if c == 2:
            perms.append(transposition(pos, pos + 1))
        pos += c
    if comp and comp[0] == 2:
        p = list(range(n))
        p[0], p[1], p[2], p[3] = p[2], p[3], p[0], p[1]
        perms.append(tuple(p))
    return perms


def monomial_slot_labels(m: tuple) -> tuple:
    head, factors = m
    out = list(head)
    for f in factors:
        out.extend(f)
    return tuple(out)


def multilinear_monomials(n: int) -> list:
    """All distinct normal monomials on labels 1..n (canonical keys)."""
    import itertools

    out = set()
    for comp in normal_types(n):
        if n == 1:
            out.add(((1,), ()))
            continue
        for perm in itertools.permutations(range(1, n + 1)):
            head = perm[:2]
            factors = []
            pos = 2
            for c in comp:
                factors.append(perm[pos : pos + c])
                pos += c
            out.add(monomial_key(head, factors))
    return sorted(out)


# --- straightening -----------------------------------------------------------


def _scaled_into(dst: dict, src: dict, c) -> None:
    for k, v in src.items():
        w = dst.get(k, 0) + c * v
        if w:
            dst[k] = w
        else:
            dst.pop(k, None)


def _order_pair(a: tuple, b: tuple):
    """(bigger, smaller, tied?) by degree then shape; ties averaged by caller."""
    ka = (a[0], shape_key(a))
    kb = (b[0], shape_key(b))
    if ka == kb:
        return a, b, True
    return (a, b, False) if ka > kb else (b, a, False)


@cache
def straighten_tree(t: tuple) -> tuple:
    """Normal-form expansion of a tree as ((monomial, coeff), ...)."""
    deg = t[0]
    if deg == 1:
        return ((((t[1],), ()), Fraction(1)),)
    core, factor, tied = _order_pair(t[1], t[2])
    if tied:
        out: dict = {}
        _scaled_into(out, dict(_reduce(t[1], t[2])), Fraction(1, 2))
        _scaled_into(out, dict(_reduce(t[2], t[1])), Fraction(1, 2))
        return tuple(sorted(out.items()))
    return _reduce(core, factor)


def _append_factor(expansion, f: tuple):
    out = {}
    for m, c in expansion:
        key = monomial_key(m[0], m[1] + (tuple(sorted(f)),))
        out[key] = out.get(key, 0) + c
    return tuple(sorted(out.items()))


def _reduce(core: tuple, factor: tuple) -> tuple:
    fd = factor[0]
    if fd == 1:
        if core[0] == 1:
            key = monomial_key((core[1], factor[1]), ())
            return ((key, Fraction(1)),)
        return _append_factor(straighten_tree(core), (factor[1],))
    if fd == 2:
        pair = (factor[1][1], factor[2][1])
        if core[0] == 1:
            # degree-3 tree x(ab): the comb starts at the pair
            key = monomial_key(pair, ((core[1],),))
            return ((key, Fraction(1)),)
        return _append_factor(straighten_tree(core), pair)
    # factor = (a c) b with degree >= 3: five-term rewrite
    p, q, tied = _order_pair(factor[1], factor[2])
    out: dict = {}
    weight = Fraction(1, 2) if tied else Fraction(1)
    for ac, b in ((p, q), (q, p)) if tied else ((p, q),):
        a, c = ac[1], ac[2]
        for coeff, built in (
            (-1, node(node(node(core, c), b), a)),
            (-1, node(node(node(core, a), b), c)),
            (1, node(node(core, b), node(a, c))),
            (1, node(node(core, c), node(a, b))),
            (1, node(node(core, a), node(b, c))),
        ):
            _scaled_into(out, dict(straighten_tree(built)), coeff * weight)
    return tuple(sorted(out.items()))


def straighten(t: tuple) -> dict:
    """Public entry: tree -> {normal monomial: coefficient}."""
    return dict(straighten_tree(t))


def straighten_element(element: dict) -> dict:
    """Extend straighten linearly to {tree: coeff} combinations."""
    out: dict = {}
    for t, c in element.items():
        _scaled_into(out, dict(straighten_tree(t)), c)
    return out


def expand_monomials_to_trees(element: dict) -> dict:
    out: dict = {}
    for m, c in element.items():
        t = monomial_to_tree(m)
        out[t] = out.get(t, 0) + c
    return {k: v for k, v in out.items() if v}


def jordan_element(t1: tuple, t2: tuple, t3: tuple, t4: tuple) -> dict:
    """The four-slot Jordan identity instanced on trees, straightened.

    Vanishes on any Jordan algebra; symmetric in slots 1, 2, 4.
    """
    combo = {}
    for coeff, t in (
        (1, node(node(node(t1, t2), t3), t4)),
        (1, node(node(node(t2, t4), t3), t1)),
        (1, node(node(node(t1, t4), t3), t2)),
        (-1, node(node(t1, t2), node(t3, t4))),
        (-1, node(node(t1, t3), node(t2, t4))),
        (-1, node(node(t1, t4), node(t2, t3))),
    ):
        combo[t] = combo.get(t, 0) + coeff
    return straighten_element({k: Fraction(v) for k, v in combo.items() if v})


def jordan_tree_element(t1, t2, t3, t4) -> dict:
    """Same combination kept at tree level (no straightening)."""
    combo: dict = {}
    for coeff, t in (
        (1, node(node(node(t1, t2), t3), t4)),
        (1, node(node(node(t2, t4), t3), t1)),
        (1, node(node(node(t1, t4), t3), t2)),
        (-1, node(node(t1, t2), node(t3, t4))),
        (-1, node(node(t1, t3), node(t2, t4))),
        (-1, node(node(t1, t4), node(t2, t3))),
    ):
        combo[t] = combo.get(t, 0) + Fraction(coeff)
    return {k: v for k, v in combo.items() if v}


def clear_straighten_cache() -> None:
    straighten_tree.cache_clear()
    shape_key.cache_clear()
