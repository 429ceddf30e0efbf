"""Finite-dimensional (super, graded) algebras by structure constants, the
functorial Tits-Kantor-Koecher style Lie algebra built from a Jordan
algebra, and Chevalley-Eilenberg homology.

The chain of constructions: a Jordan algebra J gives multiplication
operators L_a, inner derivations D_{a,b} = [L_a, L_b], the functorial
replacement B(J) = Lambda^2(J) / (ab^c + bc^a + ca^b), and the Lie algebra
sl2 (x) J  (+)  B(J) with brackets

    [x(x)a, y(x)b] = [x,y](x)ab + 2 tr(xy) a^b,
    [a^b, x(x)c]   = x (x) D_{a,b}(c),
    [a^b, c^d]     = D_{a,b}(c)^d + c^D_{a,b}(d),

where tr is the trace in the defining two-dimensional representation, so
the coupling is half the Killing form.  With the wedge action normalized
to coefficient one as above, this is the unique coupling that closes into
a Lie bracket: on sl2, [[x,y],z] = 2tr(yz)x - 2tr(xz)y, so the Jacobi sum
over x(x)a, y(x)b, z(x)c leaves (mu - 2) tr(yz) x (x) D_{b,c}(a) when the
coupling is mu tr(xy), and mu = 2 kills it.  (Statements of the formula
with 1/2 tr implicitly take tr in the adjoint representation; rescaling
the B summand moves between the conventions without changing anything
below.)  Everything is exact over Q.

Parity conventions: odd x odd products are symmetric where even ones are
antisymmetric, so the "exterior" square is symmetric on the odd part and a
wedge u^u survives exactly when u is odd.  Chevalley-Eilenberg chains are
the parity-aware exterior powers; each chain degree is finite dimensional
even when the total complex is not.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import InfeasibleError
from .linalg import ExactRowReducer

F0 = Fraction(0)
F1 = Fraction(1)


def _deg_add(d1: tuple, d2: tuple) -> tuple:
    return tuple(a + b for a, b in zip(d1, d2))


class AlgebraFD:
    """A finite-dimensional algebra given by rational structure constants.

    table maps a basis pair (i, j) to {k: coefficient}; only nonzero
    products are stored.  parity is a 0/1 bit per basis vector.  degree, if
    present, is one tuple per basis vector and products must add degrees.
    kind is "jordan" (super-commutative) or "lie" (super-anticommutative
    with super-Jacobi); check() verifies the claimed kind.
    """

    def __init__(self, kind, labels, table, parity=None, degree=None, sl2_weight=None):
        if kind not in ("jordan", "lie"):
            raise ValueError("kind must be jordan or lie")
        self.kind = kind
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self.parity = tuple(parity) if parity else (0,) * self.dim
        if degree is not None:
            degree = tuple(
                (d,) if isinstance(d, int) else tuple(d) for d in degree
            )
        self.degree = degree
        self.sl2_weight = tuple(sl2_weight) if sl2_weight else None
        self.table = {}
        for (i, j), prod in table.items():
            entry = {k: Fraction(c) for k, c in prod.items() if c}
            if entry:
                self.table[(i, j)] = entry

    def product(self, i: int, j: int) -> dict:
        return self.table.get((i, j), {})

    def mult(self, va: dict, vb: dict) -> dict:
        out = {}
        for i, ca in va.items():
            for j, cb in vb.items():
                c = ca * cb
                for k, s in self.product(i, j).items():
                    v = out.get(k, F0) + c * s
                    if v:
                        out[k] = v
                    else:
                        out.pop(k, None)
        return out

    def left_mult_matrix(self, i: int) -> list:
        """L_{e_i} as a dense row-major matrix: rows index the output."""
        m = [[F0] * self.dim for _ in range(self.dim)]
        for j in range(self.dim):
            for k, c in self.product(i, j).items():
                m[k][j] = c
        return m

    def _check_degrees(self):
        for (i, j), prod in self.table.items():
            want = _deg_add(self.degree[i], self.degree[j])
            for k in prod:
                if self.degree[k] != want:
                    raise ValueError(
                        "product %s*%s hits %s outside degree %s"
                        % (self.labels[i], self.labels[j], self.labels[k], want)
                    )

    def check(self, jacobi: str = "full", seed: int = 0) -> None:
        """Verify the structure the kind claims; raises ValueError.

        jacobi: "full" tests every basis triple, "sample" tests 500 seeded
        random triples (for large algebras), "skip" leaves it out.
        """
        if self.degree is not None:
            self._check_degrees()
        sign = lambda i, j: -1 if (self.parity[i] and self.parity[j]) else 1
        for i in range(self.dim):
            for j in range(self.dim):
                lhs = self.product(i, j)
                rhs = self.product(j, i)
                s = sign(i, j) if self.kind == "jordan" else -sign(i, j)
                if lhs != {k: s * c for k, c in rhs.items()}:
                    raise ValueError(
                        "products of %s, %s break the %s symmetry"
                        % (self.labels[i], self.labels[j], self.kind)
                    )
        if self.kind != "lie" or jacobi == "skip":
            return
        if jacobi == "full":
            triples = itertools.combinations_with_replacement(range(self.dim), 3)
        else:
            rnd = random.Random(seed)
            triples = (
                tuple(rnd.randrange(self.dim) for _ in range(3)) for _ in range(500)
            )
        for i, j, k in triples:
            acc = {}
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                s = sign(a, c)
                for m, cm in self.product(a, b).items():
                    for t, ct in self.product(m, c).items():
                        v = acc.get(t, F0) + s * cm * ct
                        if v:
                            acc[t] = v
                        else:
                            acc.pop(t, None)
            if acc:
                raise ValueError(
                    "Jacobi fails on basis triple (%s, %s, %s)"
                    % (self.labels[i], self.labels[j], self.labels[k])
                )

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "dim": self.dim,
            "labels": list(self.labels),
            "parity": list(self.parity),
            "table": [
                [i, j] + [[k, c.numerator, c.denominator] for k, c in sorted(prod.items())]
                for (i, j), prod in sorted(self.table.items())
            ],
        }
        if self.degree is not None:
            out["degree"] = [
                d[0] if len(d) == 1 else list(d) for d in self.degree
            ]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "AlgebraFD":
        table = {}
        for row in data["table"]:
            i, j = row[0], row[1]
            table[(i, j)] = {k: Fraction(num, den) for k, num, den in row[2:]}
        return cls(
            data.get("kind", "jordan"),
            data["labels"],
            table,
            parity=data.get("parity"),
            degree=data.get("degree"),
        )


def scalar_jordan() -> AlgebraFD:
    """The ground field as a one-dimensional Jordan algebra."""
    return AlgebraFD("jordan", ("1",), {(0, 0): {0: F1}})


def diagonal_jordan(n: int) -> AlgebraFD:
    """k^n with componentwise multiplication."""
    labels = tuple("e%d" % i for i in range(1, n + 1))
    return AlgebraFD("jordan", labels, {(i, i): {i: F1} for i in range(n)})


def symmetric_matrix_jordan(n: int) -> AlgebraFD:
    """Symmetric n-by-n matrices under the symmetrized product."""
    basis = [(i, j) for i in range(n) for j in range(i, n)]
    index = {b: t for t, b in enumerate(basis)}
    labels = tuple("S%d%d" % (i + 1, j + 1) for i, j in basis)

    def as_matrix(i, j):
        m = [[F0] * n for _ in range(n)]
        m[i][j] += 1
        m[j][i] += 1
        return m

    half = Fraction(1, 2)
    table = {}
    for s, (i, j) in enumerate(basis):
        for t, (k, l) in enumerate(basis):
            a, b = as_matrix(i, j), as_matrix(k, l)
            prod = [
                [
                    half * sum(a[r][m] * b[m][c] + b[r][m] * a[m][c] for m in range(n))
                    for c in range(n)
                ]
                for r in range(n)
            ]
            entry = {}
            for r in range(n):
                for c in range(r, n):
                    if prod[r][c]:
                        # S_rc has a 2 on the diagonal when r == c
                        coeff = prod[r][c] / (2 if r == c else 1)
                        entry[index[(r, c)]] = coeff
            if entry:
                table[(s, t)] = entry
    return AlgebraFD("jordan", labels, table)


def _matmul(a: list, b: list) -> list:
    n = len(a)
    return [
        [sum(a[r][m] * b[m][c] for m in range(n)) for c in range(n)] for r in range(n)
    ]


def _matsub(a: list, b: list) -> list:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _d_ab(J: AlgebraFD, la: dict, i: int, j: int) -> list:
    """The commutator [L_i, L_j] with the parity sign."""
    li, lj = la[i], la[j]
    ij = _matmul(li, lj)
    ji = _matmul(lj, li)
    if J.parity[i] and J.parity[j]:
        return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(ij, ji)]
    return _matsub(ij, ji)


@dataclass
class DerivationSpace:
    """A spanning family of derivations of a fixed algebra."""

    ambient_dim: int
    pairs: tuple
    generators: tuple  # matrices, rows index the output
    rank: int


def _is_derivation(J: AlgebraFD, D: list, p_d: int) -> bool:
    for u in range(J.dim):
        du = [D[r][u] for r in range(J.dim)]
        for v in range(J.dim):
            dv = [D[r][v] for r in range(J.dim)]
            lhs = {}
            for k, c in J.product(u, v).items():
                for r in range(J.dim):
                    if D[r][k]:
                        lhs[r] = lhs.get(r, F0) + c * D[r][k]
            rhs = {}
            for r, c in enumerate(du):
                if c:
                    for k, s in J.product(r, v).items():
                        rhs[k] = rhs.get(k, F0) + c * s
            sgn = -1 if (p_d and J.parity[u]) else 1
            for r, c in enumerate(dv):
                if c:
                    for k, s in J.product(u, r).items():
                        rhs[k] = rhs.get(k, F0) + sgn * c * s
            if {k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}:
                return False
    return True


def inner_derivations(J: AlgebraFD, verify_limit: int = 12) -> DerivationSpace:
    """Span of the operators [L_a, L_b] over basis pairs of J.

    The Jordan axiom is probed through the operators [L_a, L_{a a}] for
    basis a, which must vanish; each generator is checked to be a
    derivation (exhaustively up to verify_limit, on a seeded sample above).
    """
    if J.kind != "jordan":
        raise ValueError("inner derivations ask for a jordan-kind algebra")
    la = [J.left_mult_matrix(i) for i in range(J.dim)]
    for i in range(J.dim):
        sq = J.product(i, i)
        lsq = [[F0] * J.dim for _ in range(J.dim)]
        for k, c in sq.items():
            for r in range(J.dim):
                for s in range(J.dim):
                    if la[k][r][s]:
                        lsq[r][s] += c * la[k][r][s]
        comm = _matsub(_matmul(la[i], lsq), _matmul(lsq, la[i]))
        if J.parity[i]:
            continue  # odd a: a*a = 0 already forces nothing here
        if any(any(row) for row in comm):
            raise ValueError(
                "[L_a, L_{aa}] != 0 for a = %s; not a Jordan algebra" % J.labels[i]
            )
    pairs = [(i, j) for i in range(J.dim) for j in range(i, J.dim)
             if i < j or J.parity[i]]
    gens = []
    kept_pairs = []
    red = ExactRowReducer(J.dim * J.dim)
    rnd = random.Random(7)
    for i, j in pairs:
        D = _d_ab(J, la, i, j)
        if not any(any(row) for row in D):
            continue
        p_d = (J.parity[i] + J.parity[j]) % 2
        if J.dim <= verify_limit or rnd.random() < 0.1:
            if not _is_derivation(J, D, p_d):
                raise ValueError(
                    "[L_%s, L_%s] is not a derivation" % (J.labels[i], J.labels[j])
                )
        gens.append(D)
        kept_pairs.append((i, j))
        red.add([c for row in D for c in row])
    return DerivationSpace(J.dim, tuple(kept_pairs), tuple(gens), red.rank)


class BSpace:
    """Lambda^2(J) modulo the cyclic relations, with explicit coordinates.

    Wedge pairs (i, j) with i < j, plus (i, i) for odd i, span the
    parity-aware exterior square; the quotient is row reduced per degree
    block so any wedge can be rewritten in the representative basis.
    """

    def __init__(self, J: AlgebraFD):
        self.J = J
        pairs = [
            (i, j)
            for i in range(J.dim)
            for j in range(i, J.dim)
            if i < j or J.parity[i]
        ]
        blocks = {}
        for pair in pairs:
            blocks.setdefault(self._key(pair), []).append(pair)
        self._blocks = {}
        for key, block_pairs in blocks.items():
            index = {pr: t for t, pr in enumerate(block_pairs)}
            red = ExactRowReducer(len(block_pairs))
            self._blocks[key] = (block_pairs, index, red)
        for a in range(J.dim):
            for b in range(J.dim):
                for c in range(J.dim):
                    row = {}
                    self._wedge_into(row, J.product(a, b), c)
                    self._wedge_into(row, J.product(b, c), a)
                    self._wedge_into(row, J.product(c, a), b)
                    if not row:
                        continue
                    key = self._key(next(iter(row)))
                    block_pairs, index, red = self._blocks[key]
                    vec = [F0] * len(block_pairs)
                    for pr, cf in row.items():
                        vec[index[pr]] = cf
                    red.add(vec)
        self.basis = []
        for key in sorted(self._blocks, key=lambda k: (k is not None, k)):
            block_pairs, index, red = self._blocks[key]
            piv = set(red.pivot_columns())
            self.basis.extend(
                pr for t, pr in enumerate(block_pairs) if t not in piv
            )
        self.basis = tuple(self.basis)
        self._basis_set = set(self.basis)
        self.dim = len(self.basis)

    def _key(self, pair):
        if self.J.degree is None:
            return None
        return _deg_add(self.J.degree[pair[0]], self.J.degree[pair[1]])

    def _wedge_into(self, row: dict, prod: dict, c: int) -> None:
        J = self.J
        for m, cm in prod.items():
            if m == c:
                if not J.parity[m]:
                    continue
                pair, s = (m, c), 1
            elif m < c:
                pair, s = (m, c), 1
            else:
                s = 1 if (J.parity[m] and J.parity[c]) else -1
                pair = (c, m)
            v = row.get(pair, F0) + s * cm
            if v:
                row[pair] = v
            else:
                row.pop(pair, None)

    def graded_dims(self) -> dict:
        """Dimension of the quotient per degree block (graded J only)."""
        if self.J.degree is None:
            raise ValueError("the underlying algebra carries no grading")
        out = {}
        for key, (block_pairs, index, red) in self._blocks.items():
            out[key] = len(block_pairs) - red.rank
        return {k: v for k, v in sorted(out.items()) if v}

    def coords(self, i: int, j: int) -> dict:
        """The class of e_i ^ e_j in the representative basis."""
        J = self.J
        if i == j and not J.parity[i]:
            return {}
        s = F1
        if i > j:
            s = F1 if (J.parity[i] and J.parity[j]) else -F1
            i, j = j, i
        block_pairs, index, red = self._blocks[self._key((i, j))]
        vec = [F0] * len(block_pairs)
        vec[index[(i, j)]] = s
        rem = red.reduce(vec)
        return {pr: rem[index[pr]] for pr in block_pairs
                if pr in self._basis_set and rem[index[pr]]}


def b_space(J: AlgebraFD) -> BSpace:
    """The exterior square of J modulo the cyclic relations."""
    if J.kind != "jordan":
        raise ValueError("b_space asks for a jordan-kind algebra")
    return BSpace(J)


# sl2 in the defining representation: e, h, f with [e,f]=h, [h,e]=2e,
# [h,f]=-2f; tr(e f) = 1, tr(h h) = 2, all other basis traces vanish.
# The bracket coupling below is 2 tr = (1/2) Killing; see the module
# docstring for why no other scaling satisfies Jacobi.
_SL2_BRACKET = {
    (0, 1): {0: Fraction(-2)},
    (1, 0): {0: Fraction(2)},
    (0, 2): {1: F1},
    (2, 0): {1: -F1},
    (1, 2): {2: Fraction(-2)},
    (2, 1): {2: Fraction(2)},
}
_SL2_TRACE = {(0, 2): F1, (2, 0): F1, (1, 1): Fraction(2)}
_SL2_LABELS = ("e", "h", "f")
_SL2_WEIGHT = (2, 0, -2)


def tag(J: AlgebraFD, check: str = "auto") -> AlgebraFD:
    """The Lie (super)algebra sl2 (x) J  (+)  B(J).

    check: "auto" verifies super-Jacobi on all basis triples for small
    results and on a seeded sample otherwise; "full"/"sample"/"skip" force
    the policy.  A Jacobi failure raises, since the bracket formulas are
    a theorem once J is Jordan.
    """
    if J.kind != "jordan":
        raise ValueError("tag asks for a jordan-kind algebra")
    B = b_space(J)
    la = [J.left_mult_matrix(i) for i in range(J.dim)]
    d_mats = {pr: _d_ab(J, la, *pr) for pr in B.basis}
    ncore = 3 * J.dim

    def t_index(x: int, a: int) -> int:
        return x * J.dim + a

    b_index = {pr: ncore + t for t, pr in enumerate(B.basis)}
    labels = [
        "%s(x)%s" % (s, J.labels[a]) for s in _SL2_LABELS for a in range(J.dim)
    ]
    labels += ["%s^%s" % (J.labels[i], J.labels[j]) for i, j in B.basis]
    parity = [J.parity[a] for _ in range(3) for a in range(J.dim)]
    parity += [(J.parity[i] + J.parity[j]) % 2 for i, j in B.basis]
    degree = None
    if J.degree is not None:
        degree = [J.degree[a] for _ in range(3) for a in range(J.dim)]
        degree += [_deg_add(J.degree[i], J.degree[j]) for i, j in B.basis]
    weight = [_SL2_WEIGHT[s] for s in range(3) for _ in range(J.dim)]
    weight += [0] * len(B.basis)

    table = {}

    def put(i, j, entry):
        entry = {k: c for k, c in entry.items() if c}
        if entry:
            table[(i, j)] = entry

    coupling = Fraction(2)
    for x in range(3):
        for y in range(3):
            xy = _SL2_BRACKET.get((x, y), {})
            tr = _SL2_TRACE.get((x, y), F0)
            for a in range(J.dim):
                for b in range(J.dim):
                    entry = {}
                    for z, cz in xy.items():
                        for k, ck in J.product(a, b).items():
                            key = t_index(z, k)
                            entry[key] = entry.get(key, F0) + cz * ck
                    if tr:
                        for pr, cf in B.coords(a, b).items():
                            key = b_index[pr]
                            entry[key] = entry.get(key, F0) + coupling * tr * cf
                    put(t_index(x, a), t_index(y, b), entry)
    for pr in B.basis:
        D = d_mats[pr]
        w = b_index[pr]
        p_w = parity[w]
        for x in range(3):
            for c in range(J.dim):
                entry = {}
                for r in range(J.dim):
                    if D[r][c]:
                        entry[t_index(x, r)] = D[r][c]
                put(w, t_index(x, c), entry)
                sgn = -1 if (p_w and J.parity[c]) else 1
                put(t_index(x, c), w, {k: -sgn * v for k, v in entry.items()})
        for pr2 in B.basis:
            c, d = pr2
            entry = {}
            for r in range(J.dim):
                if D[r][c]:
                    for tgt, cf in B.coords(r, d).items():
                        key = b_index[tgt]
                        entry[key] = entry.get(key, F0) + D[r][c] * cf
                if D[r][d]:
                    sgn = -1 if (p_w and J.parity[c]) else 1
                    for tgt, cf in B.coords(c, r).items():
                        key = b_index[tgt]
                        entry[key] = entry.get(key, F0) + sgn * D[r][d] * cf
            put(b_index[pr], b_index[pr2], entry)

    L = AlgebraFD("lie", labels, table, parity=parity, degree=degree,
                  sl2_weight=weight)
    if check != "skip":
        mode = check
        if check == "auto":
            mode = "full" if L.dim <= 40 else "sample"
        try:
            L.check(jacobi=mode)
        except ValueError as err:
            raise RuntimeError("tag construction is inconsistent: %s" % err)
    return L


def truncated_free_jordan(g: int, N: int, parities: tuple | None = None) -> AlgebraFD:
    """The free Jordan (super)algebra on g generators, cut at degree N.

    Supported signatures: one odd generator (the square-zero line); one,
    two or three even generators.  Two even generators use the associative
    realization on reversal-fixed elements; one and three use exact
    multidegree components.  Degrees are stored as content tuples so the
    grading survives into tag() and homology.
    """
    if N < 1 or g < 1:
        raise ValueError("need g >= 1 generators and degree N >= 1")
    parities = tuple(parities) if parities is not None else (0,) * g
    if len(parities) != g:
        raise ValueError("need one parity bit per generator")
    if parities == (1,):
        return AlgebraFD(
            "jordan", ("x",), {}, parity=(1,), degree=((1,),)
        )
    if any(parities):
        raise ValueError("unsupported signature: odd generators beyond one")
    if g == 2:
        return _truncated_two_gen(N)
    if g in (1, 3):
        return _truncated_multidegree(g, N)
    raise ValueError("unsupported signature: %d generators" % g)


def _truncated_two_gen(N: int) -> AlgebraFD:
    from .twogen import mask_to_word, reversible_basis

    if N > 8:
        raise InfeasibleError(
            "two-generator truncation at degree %d" % N,
            estimate="%d basis vectors" % (2 ** N),
        )
    basis = []
    for n in range(1, N + 1):
        for w, rev in reversible_basis(n):
            basis.append((n, w, rev))
    index = {(n, w): t for t, (n, w, rev) in enumerate(basis)}
    labels = tuple(
        "<%s>" % "".join(str(x) for x in mask_to_word(w, n)) for n, w, rev in basis
    )
    degree = []
    for n, w, rev in basis:
        ones = bin(w).count("1")
        degree.append((n - ones, ones))
    half = Fraction(1, 2)
    table = {}
    for s, (n1, w1, r1) in enumerate(basis):
        for t, (n2, w2, r2) in enumerate(basis):
            n = n1 + n2
            if n > N:
                continue
            # basis vectors are orbit sums w + rev, so expand with unit
            # coefficients; the lone half is the symmetrized product
            out = {}
            for u in {w1, r1}:
                for v in {w2, r2}:
                    out[(u << n2) | v] = out.get((u << n2) | v, F0) + half
                    out[(v << n1) | u] = out.get((v << n1) | u, F0) + half
            entry = {}
            for m in out:
                rev = _rev(m, n)
                if m > rev:
                    continue
                if out[m] != out.get(rev, F0):
                    raise RuntimeError("product left the reversible subspace")
                if out[m]:
                    entry[index[(n, m)]] = out[m]
            if entry:
                table[(s, t)] = entry
    return AlgebraFD("jordan", labels, table, degree=degree)


def _rev(mask: int, n: int) -> int:
    from .twogen import _reverse_mask

    return _reverse_mask(mask, n)


def _truncated_multidegree(g: int, N: int) -> AlgebraFD:
    from .multidegree import _mul_normal, component

    if (g, N) not in [(1, n) for n in range(1, 9)] and not (g == 3 and N <= 5):
        raise InfeasibleError(
            "%d generators at degree %d" % (g, N),
            estimate="past the exact component bound",
        )
    contents = []
    for total in range(1, N + 1):
        for delta in itertools.product(range(total + 1), repeat=g):
            if sum(delta) == total:
                contents.append(delta)
    comps = {delta: component(delta) for delta in contents}
    basis = []
    for delta in contents:
        basis.extend((delta, m) for m in comps[delta].basis)
    index = {bm: t for t, bm in enumerate(basis)}

    def fmt(m):
        head, factors = m
        parts = ["".join(str(x) for x in head)]
        parts += ["".join(str(x) for x in f) for f in factors]
        return ".".join(parts)

    labels = tuple(fmt(m) for delta, m in basis)
    degree = tuple(delta for delta, m in basis)
    table = {}
    for s, (d1, m1) in enumerate(basis):
        for t, (d2, m2) in enumerate(basis):
            dsum = _deg_add(d1, d2)
            if sum(dsum) > N:
                continue
            prod = dict(_mul_normal(*sorted((m1, m2))))
            coords = comps[dsum].coords(prod)
            entry = {index[(dsum, m)]: c for m, c in coords.items()}
            if entry:
                table[(s, t)] = entry
    return AlgebraFD("jordan", labels, table, degree=degree)


def _chain_words(L: AlgebraFD, k: int) -> list:
    """Sorted index words of length k; even indices never repeat."""
    out = []

    def walk(start: int, word: tuple):
        if len(word) == k:
            out.append(word)
            return
        for i in range(start, L.dim):
            walk(i if L.parity[i] else i + 1, word + (i,))

    walk(0, ())
    return out


def _word_key(L: AlgebraFD, word: tuple):
    w = sum(L.sl2_weight[i] for i in word) if L.sl2_weight else 0
    if L.degree is not None:
        d = ()  # the empty word sits in degree zero
        for i in word:
            d = L.degree[i] if d == () else _deg_add(d, L.degree[i])
        return (w, d)
    return (w, None)


def _diff_word(L: AlgebraFD, word: tuple) -> dict:
    par = L.parity
    out = {}
    k = len(word)
    for i in range(k):
        si = 1
        for l in range(i):
            si = si if (par[word[i]] and par[word[l]]) else -si
        for j in range(i + 1, k):
            sj = 1
            for l in range(j):
                if l == i:
                    continue
                sj = sj if (par[word[j]] and par[word[l]]) else -sj
            br = L.product(word[i], word[j])
            if not br:
                continue
            rest = word[:i] + word[i + 1 : j] + word[j + 1 :]
            for m, cm in br.items():
                ins = _insert_sorted(L, m, rest)
                if ins is None:
                    continue
                tw, s2 = ins
                c = si * sj * s2 * cm
                v = out.get(tw, F0) + c
                if v:
                    out[tw] = v
                else:
                    out.pop(tw, None)
    return out


def _insert_sorted(L: AlgebraFD, m: int, rest: tuple):
    if not L.parity[m] and m in rest:
        return None
    s = 1
    pos = 0
    for r in rest:
        if r < m:
            s = s if (L.parity[m] and L.parity[r]) else -s
            pos += 1
        else:
            break
    return rest[:pos] + (m,) + rest[pos:], s


@dataclass
class HomologyResult:
    """Chain and homology dimensions, with optional finer splittings."""

    dims: tuple
    chain_dims: tuple
    weight_dims: tuple | None = None  # per k: {sl2 weight: dim}
    degree_dims: tuple | None = None  # per k: {degree tuple: dim}

    def euler(self) -> int:
        return sum((-1) ** k * d for k, d in enumerate(self.dims))


def ce_homology(L: AlgebraFD, kmax: int) -> HomologyResult:
    """Homology of the (super) Chevalley-Eilenberg complex, exactly.

    The differential is verified to square to zero on every chain word up
    to degree kmax + 1 before any rank is taken.
    """
    if L.kind != "lie":
        raise ValueError("homology asks for a lie-kind algebra")
    words = [_chain_words(L, k) for k in range(kmax + 2)]
    diffs = [{w: _diff_word(L, w) for w in words[k]} for k in range(kmax + 2)]
    for k in range(2, kmax + 2):
        for w, img in diffs[k].items():
            acc = {}
            for tw, c in img.items():
                for tw2, c2 in diffs[k - 1][tw].items():
                    v = acc.get(tw2, F0) + c * c2
                    if v:
                        acc[tw2] = v
                    else:
                        acc.pop(tw2, None)
            if acc:
                raise ValueError("differential does not square to zero; not Lie")
    # block split: the differential preserves sl2 weight and degree
    ranks = [dict() for _ in range(kmax + 2)]  # per k: {key: rank}
    for k in range(1, kmax + 2):
        by_key = {}
        for w in words[k]:
            by_key.setdefault(_word_key(L, w), []).append(w)
        targets = {}
        for w in words[k - 1]:
            targets.setdefault(_word_key(L, w), []).append(w)
        for key, ws in by_key.items():
            tws = targets.get(key, [])
            tindex = {tw: t for t, tw in enumerate(tws)}
            red = ExactRowReducer(len(tws))
            for w in ws:
                img = diffs[k][w]
                if not img:
                    continue
                vec = [F0] * len(tws)
                for tw, c in img.items():
                    vec[tindex[tw]] = c
                red.add(vec)
            ranks[k][key] = red.rank
    dims, weight_dims, degree_dims = [], [], []
    for k in range(kmax + 1):
        by_key = {}
        for w in words[k]:
            key = _word_key(L, w)
            by_key[key] = by_key.get(key, 0) + 1
        total = 0
        wdims, ddims = {}, {}
        for key, cnt in by_key.items():
            h = cnt - ranks[k].get(key, 0) - ranks[k + 1].get(key, 0)
            if h < 0:
                raise RuntimeError("negative block dimension; rank bookkeeping bug")
            if not h:
                continue
            total += h
            wdims[key[0]] = wdims.get(key[0], 0) + h
            if key[1] is not None:
                ddims[key[1]] = ddims.get(key[1], 0) + h
        dims.append(total)
        weight_dims.append(dict(sorted(wdims.items())))
        degree_dims.append(dict(sorted(ddims.items())))
    return HomologyResult(
        dims=tuple(dims),
        chain_dims=tuple(len(words[k]) for k in range(kmax + 1)),
        weight_dims=tuple(weight_dims) if L.sl2_weight else None,
        degree_dims=tuple(degree_dims) if L.degree is not None else None,
    )


def sl2_decompose(h: HomologyResult) -> tuple:
    """Highest weights of each homology degree, from weight-space counts.

    A semisimple sl2-action forces symmetric weight strings; multiplicity
    of the irreducible with highest weight w is dim(w) - dim(w + 2).
    Inconsistent weight data raises, since it signals a bug upstream.
    """
    if h.weight_dims is None:
        raise ValueError("homology carries no sl2 weight data")
    out = []
    for k, wd in enumerate(h.weight_dims):
        for w, d in wd.items():
            if wd.get(-w, 0) != d or w % 2:
                raise RuntimeError("weight string asymmetric in degree %d" % k)
        tops = []
        ws = sorted((w for w in wd if w >= 0), reverse=True)
        for w in ws:
            m = wd[w] - wd.get(w + 2, 0)
            if m < 0:
                raise RuntimeError("weight multiplicities not unimodal in degree %d" % k)
            tops.extend([w] * m)
        out.append(tuple(sorted(tops, reverse=True)))
    return tuple(out)
