"""One-shot verification suites: recompute, compare, report.

Each check names what it recomputes, where the expected value comes from
(a frozen table in tables.py, a closed formula, or an independent second
computation inside this package), the computed value, and pass/fail.
The suites are deliberately redundant with the test suite: they are the
user-facing way to reproduce the headline numbers on their own machine.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .tables import (
    JORDAN_MODULE,
    MULTILINEAR_DIMS,
    PREDICTED_DIM_19_TWO_GEN,
    TWO_GEN_B_DIMS,
    TWO_GEN_DIMS,
    Z19_PINNED_MONOMIALS,
    Z19_RESIDUE,
)


@dataclass
class CheckResult:
    name: str
    expected: str
    provenance: str
    computed: str
    passed: bool
    seconds: float

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "expected": self.expected,
            "provenance": self.provenance,
            "computed": self.computed,
            "passed": self.passed,
            "runtime": "%.2fs" % self.seconds,
        }


@dataclass
class VerificationReport:
    suite: str
    results: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [r.to_json() for r in self.results],
        }

    def format_text(self) -> str:
        lines = []
        for r in self.results:
            mark = "pass" if r.passed else "FAIL"
            lines.append(
                "[%s] %-46s expected %s (%s), got %s  [%.2fs]"
                % (mark, r.name, r.expected, r.provenance, r.computed, r.seconds)
            )
        tally = sum(r.passed for r in self.results)
        lines.append(
            "%s: %d/%d checks passed" % (self.suite, tally, len(self.results))
        )
        return "\n".join(lines)


def _check(report, name, expected, provenance, compute):
    t0 = time.perf_counter()
    try:
        computed = compute()
        passed = computed == expected
    except Exception as err:  # a crash is a failing check, not a crash
        computed = "error: %s" % err
        passed = False
    report.results.append(
        CheckResult(
            name=name,
            expected=str(expected),
            provenance=provenance,
            computed=str(computed),
            passed=passed,
            seconds=time.perf_counter() - t0,
        )
    )


def suite_counterexample(max_degree: int | None = None) -> VerificationReport:
    """The degree-19 story on two generators, from both directions."""
    from .series import check_sequence, conjecture_series, predict_dims
    from .twogen import reversible_dim

    rep = VerificationReport("counterexample")
    _check(
        rep,
        "series residue at degree 19",
        Z19_RESIDUE,
        "frozen value (tables.py)",
        lambda: check_sequence(2, TWO_GEN_DIMS[:19]).residue(19),
    )
    _check(
        rep,
        "residues vanish through degree 18",
        19,
        "defining property of the predictor",
        lambda: check_sequence(2, TWO_GEN_DIMS[:19]).first_nonzero,
    )
    _check(
        rep,
        "predicted dimension at degree 19",
        PREDICTED_DIM_19_TWO_GEN,
        "frozen value (tables.py)",
        lambda: predict_dims(2, 19).dim(19),
    )
    _check(
        rep,
        "actual dimension at degree 19",
        TWO_GEN_DIMS[18],
        "closed formula for reversal-fixed words",
        lambda: reversible_dim(19),
    )
    _check(
        rep,
        "prediction misses by 2 at degree 19",
        2,
        "difference of the two values above",
        lambda: predict_dims(2, 19).dim(19) - reversible_dim(19),
    )

    def pinned():
        coeff = conjecture_series(2, TWO_GEN_DIMS[:19]).coeffs[19]
        return {e: coeff.get(e, 0) for e in Z19_PINNED_MONOMIALS}

    _check(
        rep,
        "pinned monomials of the z^19 coefficient",
        Z19_PINNED_MONOMIALS,
        "frozen values (tables.py)",
        pinned,
    )
    return rep


def suite_tables(max_degree: int = 6) -> VerificationReport:
    """Multilinear module structure against the lambda-ring prediction."""
    from .lambda_ring import km_prediction, schur_decompose
    from .operad import jord_module

    max_degree = min(max_degree, 8)
    rep = VerificationReport("tables")
    a, _b = km_prediction(max_degree, max_degree)
    for n in range(1, max_degree + 1):
        _check(
            rep,
            "dim of the degree-%d multilinear part" % n,
            MULTILINEAR_DIMS[n],
            "frozen table (tables.py)",
            lambda n=n: jord_module(n).dimension(),
        )
        _check(
            rep,
            "degree-%d module decomposition" % n,
            JORDAN_MODULE[n],
            "frozen table (tables.py)",
            lambda n=n: jord_module(n).mults,
        )
        _check(
            rep,
            "degree-%d prediction matches the computation" % n,
            JORDAN_MODULE[n],
            "character recursion, independent pipeline",
            lambda n=n: schur_decompose(a, n).mults,
        )
    return rep


def suite_homology(max_degree: int | None = None) -> VerificationReport:
    """Lie algebra homology of the smallest interesting cases."""
    from .tkk import (
        ce_homology,
        scalar_jordan,
        sl2_decompose,
        tag,
        truncated_free_jordan,
    )

    rep = VerificationReport("homology")
    _check(
        rep,
        "homology of the rank-one simple algebra",
        (1, 0, 0, 1),
        "classical vanishing",
        lambda: ce_homology(tag(scalar_jordan()), 3).dims,
    )
    heis = tag(truncated_free_jordan(1, 1, parities=(1,)))
    _check(
        rep,
        "homology dims over one odd generator",
        (1, 3, 5, 7, 9, 11),
        "closed form 2p+1",
        lambda: ce_homology(heis, 5).dims,
    )
    _check(
        rep,
        "highest weights over one odd generator",
        ((0,), (2,), (4,), (6,), (8,), (10,)),
        "closed form: one irreducible of weight 2p",
        lambda: sl2_decompose(ce_homology(heis, 5)),
    )
    return rep


def suite_dims(max_degree: int = 10) -> VerificationReport:
    """Two-generator dimensions: formula, spanning rank, quotient count."""
    from .twogen import b_dim_two_gen, jordan_span_dim, reversible_dim

    max_degree = min(max_degree, 20)
    rep = VerificationReport("dims")
    _check(
        rep,
        "reversible dims through degree %d" % max_degree,
        list(TWO_GEN_DIMS[:max_degree]),
        "frozen table (tables.py)",
        lambda: [reversible_dim(n) for n in range(1, max_degree + 1)],
    )
    _check(
        rep,
        "quotient-space dims through degree %d" % max_degree,
        list(TWO_GEN_B_DIMS[:max_degree]),
        "frozen table (tables.py)",
        lambda: [b_dim_two_gen(n) for n in range(1, max_degree + 1)],
    )
    span_to = min(max_degree, 10)
    _check(
        rep,
        "Jordan span equals reversible through degree %d" % span_to,
        list(TWO_GEN_DIMS[1:span_to]),
        "closed formula vs rank computation",
        lambda: [jordan_span_dim(n) for n in range(2, span_to + 1)],
    )
    def orbit_counts():
        from itertools import product

        from .twogen import bracelet_count, necklace_count

        out = []
        for n in range(1, 11):
            words = list(product((0, 1), repeat=n))
            seen, neck = set(), 0
            for w in words:
                if w not in seen:
                    neck += 1
                    seen.update(w[i:] + w[:i] for i in range(n))
            seen, brac = set(), 0
            for w in words:
                if w not in seen:
                    brac += 1
                    group = [w[i:] + w[:i] for i in range(n)]
                    seen.update(group)
                    seen.update(tuple(reversed(g)) for g in group)
            out.append((necklace_count(n) == neck, bracelet_count(n) == brac))
        return all(a and b for a, b in out)

    _check(
        rep,
        "orbit counting formulas vs brute force (n <= 10)",
        True,
        "exhaustive orbit enumeration",
        orbit_counts,
    )
    return rep


SUITES = {
    "counterexample": suite_counterexample,
    "tables": suite_tables,
    "homology": suite_homology,
    "dims": suite_dims,
}


def run_suites(names, max_degree: int | None = None) -> list:
    reports = []
    for name in names:
        if name not in SUITES:
            raise ValueError(
                "unknown suite %r (have: %s)" % (name, ", ".join(sorted(SUITES)))
            )
        fn = SUITES[name]
        if max_degree is None:
            reports.append(fn())
        else:
            reports.append(fn(max_degree))
    return reports
