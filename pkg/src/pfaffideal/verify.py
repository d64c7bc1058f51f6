"""End-to-end verification pipelines producing JSON-ready reports.

Every pipeline records each sub-assertion in order, keeps the first failure
with its witness data, and never stops silently.  All arithmetic is exact.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .algebra import (
    QQ,
    Monomial,
    Ordering,
    PolyRing,
    Polynomial,
    PrimeField,
    VariableOrder,
    compare_monomials,
    compare_sorted_sequences,
    field_name,
    leading_term,
)
from .complexes import (
    delta_complex,
    expected_delta_dimension,
    f_h_vectors,
    facet_count_formula,
    join_with_simplex,
    multiplicity_formula,
    sigma_complex,
    sphere_certificate,
    trim,
)
from .groebner import DEFAULT_SPAIR_BUDGET, buchberger
from .monideal import (
    MonomialIdeal,
    hilbert_function,
    hilbert_function_bruteforce,
    is_squarefree,
    equality_by_invariants,
    polarize,
    quotient_stats,
    stanley_reisner_ideal,
    stats_from_hilbert_function,
)
from .pfaffian import (
    PfaffianInstance,
    crossing_monomial_sets,
    expected_initial_generators,
    pfaffian,
    pfaffian_ideal_generators,
    pfaffian_ring,
    theta,
)
from .polyomino import (
    StackPolyomino,
    content,
    determinantal_generators,
    expected_initial_generators_polyomino,
    grids,
    polyomino_complex,
)

WITNESS_KEYS = ("min_gens", "f_vector", "h_vector", "facets", "dim", "e", "a")


@dataclass
class VerificationReport:
    claim: str
    params: dict
    passed: bool = True
    witnesses: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    failure: str | None = None
    timing_ms: float = 0.0

    def check(self, name: str, ok: bool, detail=None) -> bool:
        ok = bool(ok)
        self.checks.append({"name": name, "ok": ok})
        if not ok:
            self.passed = False
            if self.failure is None:
                self.failure = name if detail is None else f"{name}: {detail}"
        return ok

    def to_dict(self) -> dict:
        wit = {k: self.witnesses.get(k) for k in WITNESS_KEYS}
        wit.update({k: v for k, v in self.witnesses.items() if k not in WITNESS_KEYS})
        return {
            "claim": self.claim,
            "params": self.params,
            "pass": self.passed,
            "witnesses": wit,
            "checks": self.checks,
            "failure": self.failure,
            "timing_ms": round(self.timing_ms, 3),
        }


class _timed:
    def __init__(self, report: VerificationReport):
        self.report = report

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.report

    def __exit__(self, exc_type, exc, tb):
        self.report.timing_ms = (time.perf_counter() - self.t0) * 1000
        if exc is not None and not isinstance(exc, (KeyboardInterrupt, SystemExit)):
            self.report.check("completed", False, f"{type(exc).__name__}: {exc}")
            return True
        return False


# ---------------------------------------------------------------------------
# Pfaffian ideals


def verify_main_theorem(
    n: int,
    r: int,
    field=QQ,
    budget: int = DEFAULT_SPAIR_BUDGET,
    tie_break: str = "span",
) -> VerificationReport:
    """Gröbner basis, initial ideal and its invariants for the ideal of 2r-Pfaffians."""
    rep = VerificationReport(
        "main-theorem", {"n": n, "r": r, "field": field_name(field), "tie_break": tie_break}
    )
    with _timed(rep):
        inst = PfaffianInstance(n, r, field, tie_break)
        gens = pfaffian_ideal_generators(inst)
        gb = buchberger(gens, budget=budget)
        w = rep.witnesses
        w["generators"] = len(gens)
        w["spairs_considered"] = gb.spairs_considered
        w["spairs_reduced_to_zero"] = gb.spairs_reduced_to_zero
        w["spairs_skipped"] = gb.spairs_skipped
        rep.check("pfaffians form a groebner basis", gb.is_basis)

        initial = gb.initial_ideal
        expected = expected_initial_generators(inst)
        w["min_gens"] = initial.formatted(inst.order)
        rep.check(
            "initial ideal generated by crossing monomials",
            set(initial.generators) == expected,
            f"{len(initial)} minimal generators vs {len(expected)} expected",
        )
        rep.check("initial ideal squarefree", is_squarefree(initial))

        ring, order = inst.ring, inst.order
        lead_ok = all(
            leading_term(order, pfaffian(ring, sorted(v for d in sigma for v in d)))[0]
            == ring.monomial({d: 1 for d in sigma})
            for sigma in crossing_monomial_sets(n, r)
        )
        rep.check("crossing monomial leads its pfaffian", lead_ok)

        cx = delta_complex(n, r - 1)
        fh = f_h_vectors(cx)
        cert = sphere_certificate(cx, expected_delta_dimension(n, r - 1))
        w["f_vector"] = list(fh.f)
        w["h_vector"] = list(fh.h)
        w["facets"] = cert.facets
        w["dim"] = cert.dimension
        w["sphere"] = _cert_dict(cert)
        rep.check("crossing complex passes sphere certificate", cert.ok, _cert_dict(cert))

        th = theta(n, r - 1)
        w["theta_size"] = len(th)
        w["theta_size_as_printed_nr"] = n * r
        rep.check("theta has n(r-1) elements", len(th) == n * (r - 1), len(th))

        sr = stanley_reisner_ideal(ring, join_with_simplex(cx, th))
        rep.check("initial ideal equals Stanley-Reisner ideal of the join", sr == initial)
        rep.check("inclusion hypotheses hold", equality_by_invariants(sr, initial))

        stats = quotient_stats(initial)
        w["krull_dim"] = stats.krull_dim
        w["e"] = stats.multiplicity
        w["a"] = stats.a_invariant
        w["h_polynomial"] = list(stats.h_polynomial)
        d_expected = (r - 1) * (2 * n - 2 * r + 1)
        e_expected = multiplicity_formula(n, r)
        rep.check("krull dimension", stats.krull_dim == d_expected, (stats.krull_dim, d_expected))
        rep.check("multiplicity formula", stats.multiplicity == e_expected, (stats.multiplicity, e_expected))
        rep.check("multiplicity equals facet count", stats.multiplicity == cert.facets)
        rep.check("a-invariant equals -#theta", stats.a_invariant == -len(th), stats.a_invariant)
    return rep


def _cert_dict(cert) -> dict:
    return {
        "pure": cert.pure,
        "dimension": cert.dimension,
        "expected_dimension": cert.expected_dimension,
        "euler_ok": cert.euler_ok,
        "pseudomanifold_ok": cert.pseudomanifold_ok,
        "connected_ok": cert.connected_ok,
        "h_symmetric": cert.h_symmetric,
        "facets": cert.facets,
    }


def verify_field_agreement(cases=((5, 2), (6, 2)), p: int = 32003) -> VerificationReport:
    """Rational and prime-field runs must give identical initial ideals."""
    rep = VerificationReport("field-agreement", {"cases": [list(c) for c in cases], "prime": p})
    with _timed(rep):
        out = []
        for n, r in cases:
            a = verify_main_theorem(n, r, QQ)
            b = verify_main_theorem(n, r, PrimeField(p))
            same = a.witnesses["min_gens"] == b.witnesses["min_gens"]
            out.append({"n": n, "r": r, "rational_pass": a.passed, "prime_pass": b.passed, "same": same})
            rep.check(f"n={n} r={r} both pass", a.passed and b.passed)
            rep.check(f"n={n} r={r} identical initial ideals", same)
        rep.witnesses["cases"] = out
    return rep


def verify_tie_break(n: int, r: int, tie_break: str) -> VerificationReport:
    """Experiment: rerun with another tie-break among equal-distance variables."""
    rep = verify_main_theorem(n, r, tie_break=tie_break)
    rep.claim = "tie-break-experiment"
    return rep


# ---------------------------------------------------------------------------
# combinatorial formulas


def verify_formulas(n_max: int) -> VerificationReport:
    """Facet counts against the product formula; multiplicity formula against
    the shifted facet formula."""
    rep = VerificationReport("facet-count-formula", {"n_max": n_max})
    with _timed(rep):
        if n_max > 10:
            raise ValueError("n_max must be at most 10")
        cases = []
        pairs = 0
        for n in range(3, n_max + 1):
            for rc in range((n - 1) // 2 + 1):
                cx = delta_complex(n, rc)
                count = len(cx.facet_masks())
                formula = facet_count_formula(n, rc)
                dim_formula = expected_delta_dimension(n, rc)
                cases.append(
                    {"n": n, "r": rc, "facets": count, "formula": formula, "dim": cx.dim, "dim_formula": dim_formula}
                )
                rep.check(f"facets n={n} r={rc}", count == formula, (count, formula))
                if 2 * rc < n - 1:
                    rep.check(f"dim n={n} r={rc}", cx.dim == dim_formula, (cx.dim, dim_formula))
            for r in range(1, n // 2 + 1):
                pairs += 1
                e = multiplicity_formula(n, r)
                rep.check(f"multiplicity n={n} r={r}", e == facet_count_formula(n, r - 1))
        rep.witnesses["cases"] = cases
        rep.witnesses["pairs"] = pairs
    return rep


def verify_h_equality(n: int, r: int) -> VerificationReport:
    """h-vectors of the crossing and nesting complexes with parameter r-1."""
    rep = VerificationReport("h-vector-equality", {"n": n, "r": r})
    with _timed(rep):
        if not (1 <= 2 * r <= n):
            raise ValueError(f"need 1 <= 2r <= n, got n={n}, r={r}")
        hd = f_h_vectors(delta_complex(n, r - 1))
        hs = f_h_vectors(sigma_complex(n, r - 1))
        rep.witnesses["h_vector"] = list(hd.h_polynomial)
        rep.witnesses["h_sigma"] = list(hs.h_polynomial)
        rep.witnesses["f_vector"] = list(hd.f)
        rep.witnesses["f_sigma"] = list(hs.f)
        rep.check("h-polynomials equal", hd.h_polynomial == hs.h_polynomial)
    return rep


def verify_h_equality_range(n_min: int = 4, n_max: int = 9) -> VerificationReport:
    rep = VerificationReport("h-vector-equality", {"n_min": n_min, "n_max": n_max})
    with _timed(rep):
        cases = []
        for n in range(n_min, n_max + 1):
            for r in range(1, n // 2 + 1):
                sub = verify_h_equality(n, r)
                cases.append({"n": n, "r": r, "h": sub.witnesses["h_vector"], "pass": sub.passed})
                rep.check(f"n={n} r={r}", sub.passed, sub.failure)
        rep.witnesses["cases"] = cases
    return rep


def complex_stats(family: str, n: int, r: int) -> VerificationReport:
    """f/h-vectors, facet count and sphere certificate of one polygon complex."""
    rep = VerificationReport("complex-stats", {"family": family, "n": n, "r": r})
    with _timed(rep):
        if family == "delta":
            cx = delta_complex(n, r)
            expected = expected_delta_dimension(n, r) if 2 * r < n - 1 else None
        elif family == "sigma":
            cx = sigma_complex(n, r)
            expected = None
        else:
            raise ValueError(f"unknown family {family!r}")
        fh = f_h_vectors(cx)
        cert = sphere_certificate(cx, expected)
        rep.witnesses.update(
            f_vector=list(fh.f), h_vector=list(fh.h), facets=cert.facets, dim=cert.dimension, sphere=_cert_dict(cert)
        )
        # invariants of the Stanley-Reisner ring
        h = fh.h_polynomial
        rep.witnesses["e"] = sum(h)
        rep.witnesses["a"] = len(h) - 1 - (fh.dim + 1)
        rep.check("pure", cert.pure)
        if family == "delta":
            rep.check("sphere certificate", cert.ok, _cert_dict(cert))
    return rep


def verify_sphere_certificates(n_min: int = 4, n_max: int = 8) -> VerificationReport:
    rep = VerificationReport("sphere-certificates", {"n_min": n_min, "n_max": n_max})
    with _timed(rep):
        cases = []
        for n in range(n_min, n_max + 1):
            for r in range(1, (n - 1) // 2 + 1):
                cert = sphere_certificate(delta_complex(n, r), expected_delta_dimension(n, r))
                cases.append({"n": n, "r": r, **_cert_dict(cert)})
                rep.check(f"n={n} r={r}", cert.ok, _cert_dict(cert))
        rep.witnesses["cases"] = cases
    return rep


# ---------------------------------------------------------------------------
# Pfaffian squared equals determinant


def skew_matrix(ring: PolyRing, m: int) -> list[list[Polynomial]]:
    zero = ring.zero()
    rows = []
    for i in range(1, m + 1):
        row = []
        for j in range(1, m + 1):
            if i < j:
                row.append(ring.var((i, j)))
            elif i > j:
                row.append(-ring.var((j, i)))
            else:
                row.append(zero)
        rows.append(row)
    return rows


def cofactor_determinant(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Laplace expansion along rows, memoised on the set of remaining columns."""
    size = len(matrix)
    ring = matrix[0][0].ring
    memo: dict[tuple[int, ...], Polynomial] = {}

    def det(row: int, cols: tuple[int, ...]) -> Polynomial:
        if row == size:
            return ring.one()
        if cols in memo:
            return memo[cols]
        total = ring.zero()
        for k, c in enumerate(cols):
            entry = matrix[row][c]
            if entry.is_zero():
                continue
            minor = det(row + 1, cols[:k] + cols[k + 1 :])
            term = entry * minor
            total = total - term if k % 2 else total + term
        memo[cols] = total
        return total

    return det(0, tuple(range(size)))


def verify_pfaffian_determinant(m_max: int) -> VerificationReport:
    rep = VerificationReport("pfaffian-squared", {"m_max": m_max})
    with _timed(rep):
        if m_max > 8 or m_max < 2:
            raise ValueError("m_max must lie in 2..8")
        cases = []
        for m in range(2, m_max + 1):
            ring = pfaffian_ring(m)
            det = cofactor_determinant(skew_matrix(ring, m))
            if m % 2 == 0:
                pf = pfaffian(ring, range(1, m + 1))
                ok = pf * pf == det
                rep.check(f"pf^2 = det for m={m}", ok)
                cases.append({"m": m, "pf_terms": len(pf), "det_terms": len(det), "ok": ok})
            else:
                rep.check(f"det = 0 for m={m}", det.is_zero())
                cases.append({"m": m, "det_terms": len(det), "ok": det.is_zero()})
        rep.witnesses["cases"] = cases
    return rep


# ---------------------------------------------------------------------------
# stack polyominoes


def verify_determinantal(heights: Sequence[int], r: int, field=QQ, budget: int = DEFAULT_SPAIR_BUDGET) -> VerificationReport:
    rep = VerificationReport(
        "determinantal-initial-ideal", {"heights": list(heights), "r": r, "field": field_name(field)}
    )
    with _timed(rep):
        poly = StackPolyomino.from_heights(heights)
        gens = determinantal_generators(poly, r, field)
        ring, order = gens.ring, gens.order
        expected = expected_initial_generators_polyomino(poly, r, ring)
        w = rep.witnesses
        w["generators"] = len(gens)
        if len(gens):
            gb = buchberger(gens, budget=budget)
            initial = gb.initial_ideal
            rep.check("minors form a groebner basis", gb.is_basis)
            w["spairs_considered"] = gb.spairs_considered
        else:
            initial = MonomialIdeal(ring, [])
        w["min_gens"] = initial.formatted(order)
        rep.check("initial ideal generated by r-diagonals", set(initial.generators) == expected)

        lead_ok = all(
            leading_term(order, g)[0] == ring.monomial({(a, b): 1 for a, b in zip(alpha, beta)})
            for g, (alpha, beta) in zip(gens.generators, grids(poly, r))
        )
        rep.check("main diagonal leads its minor", lead_ok)

        cx = polyomino_complex(poly, r)
        rep.check("initial ideal equals Stanley-Reisner ideal", stanley_reisner_ideal(ring, cx) == initial)

        ferrers = content(poly)
        cx2 = polyomino_complex(ferrers, r)
        f1, f2 = f_h_vectors(cx), f_h_vectors(cx2)
        fac1, fac2 = cx.facet_masks(), cx2.facet_masks()
        pure1 = len({bin(m).count("1") for m in fac1}) == 1
        pure2 = len({bin(m).count("1") for m in fac2}) == 1
        w["f_vector"] = list(f1.f)
        w["h_vector"] = list(f1.h)
        w["facets"] = len(fac1)
        w["dim"] = f1.dim
        w["content_heights"] = list(ferrers.heights)
        w["content_f_vector"] = list(f2.f)
        stats = quotient_stats(initial)
        w["e"] = stats.multiplicity
        w["a"] = stats.a_invariant
        w["krull_dim"] = stats.krull_dim
        rep.check("both complexes pure", pure1 and pure2)
        rep.check("same dimension as content", f1.dim == f2.dim)
        rep.check("same facet count as content", len(fac1) == len(fac2), (len(fac1), len(fac2)))
        rep.check("same f-vector as content", f1.f == f2.f)
    return rep


# ---------------------------------------------------------------------------
# randomized law checks


def random_monomial_ideal(rng: random.Random, max_vars: int = 6, max_exp: int = 3, max_gens: int = 4) -> MonomialIdeal:
    nvars = rng.randint(1, max_vars)
    ring = PolyRing([f"v{i}" for i in range(nvars)], name="y")
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        e = [rng.randint(0, max_exp) for _ in range(nvars)]
        if not any(e):
            e[rng.randrange(nvars)] = rng.randint(1, max_exp)
        gens.append(Monomial(e))
    return MonomialIdeal(ring, gens)


def verify_polarization_laws(count: int = 100, seed: int = 0, brute_degree: int = 12) -> VerificationReport:
    """Multiplicity invariance and the dimension shift under polarization,
    checked against the Hilbert function."""
    rep = VerificationReport("polarization-laws", {"count": count, "seed": seed, "brute_degree": brute_degree})
    with _timed(rep):
        rng = random.Random(seed)
        failures = 0
        for k in range(count):
            ideal = random_monomial_ideal(rng)
            pol, _ = polarize(ideal)
            oracle = stats_from_hilbert_function(ideal)
            direct = quotient_stats(ideal)
            pol_stats = stats_from_hilbert_function(pol)
            shift = pol.nvars - ideal.nvars
            brute_ok = hilbert_function_bruteforce(ideal, min(brute_degree, _brute_cap(ideal.nvars))) == hilbert_function(
                ideal, min(brute_degree, _brute_cap(ideal.nvars))
            )
            ok = (
                brute_ok
                and direct == oracle
                and pol_stats.multiplicity == oracle.multiplicity
                and pol_stats.krull_dim == oracle.krull_dim + shift
            )
            if not ok:
                failures += 1
                rep.check(f"instance {k}", False, repr(ideal))
        rep.witnesses["instances"] = count
        rep.witnesses["failures"] = failures
        rep.check("all instances", failures == 0)
    return rep


def _brute_cap(nvars: int) -> int:
    return 12 if nvars <= 6 else 6


def _random_monomial(rng: random.Random, nvars: int, max_deg: int) -> Monomial:
    e = [0] * nvars
    for _ in range(rng.randint(0, max_deg)):
        e[rng.randrange(nvars)] += 1
    return Monomial(e)


def verify_term_order_laws(cases: int = 1000, seed: int = 1) -> VerificationReport:
    """Term-order axioms and agreement of the two comparison routes."""
    rep = VerificationReport("term-order-laws", {"cases": cases, "seed": seed})
    with _timed(rep):
        rng = random.Random(seed)
        bad = 0
        for _ in range(cases):
            nvars = rng.randint(1, 6)
            perm = list(range(nvars))
            rng.shuffle(perm)
            order = VariableOrder(perm)
            a, b, t = (_random_monomial(rng, nvars, 4) for _ in range(3))
            one = Monomial.one(nvars)
            ab, ba = compare_monomials(order, a, b), compare_monomials(order, b, a)
            ok = ab == -ba and (ab == Ordering.EQ) == (a == b)
            ok &= compare_monomials(order, one, a) != Ordering.GT
            if ab == Ordering.LT:
                ok &= compare_monomials(order, a.mul(t), b.mul(t)) == Ordering.LT
            ok &= compare_sorted_sequences(order, a, b) == ab
            bad += not ok
        rep.witnesses["failures"] = bad
        rep.check("all cases", bad == 0)
    return rep


def _random_poly(rng: random.Random, ring: PolyRing, terms: int = 3) -> Polynomial:
    out = {}
    for _ in range(rng.randint(0, terms)):
        out[_random_monomial(rng, ring.nvars, 3)] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    return Polynomial(ring, out)


def verify_ring_laws(cases: int = 1000, seed: int = 2) -> VerificationReport:
    """Commutativity, associativity, distributivity and exact rational sums."""
    rep = VerificationReport("ring-laws", {"cases": cases, "seed": seed})
    with _timed(rep):
        rng = random.Random(seed)
        ring = PolyRing(range(4), QQ)
        bad = 0
        for _ in range(cases):
            f, g, h = (_random_poly(rng, ring) for _ in range(3))
            ok = f * g == g * f
            ok &= (f * g) * h == f * (g * h)
            ok &= f * (g + h) == f * g + f * h
            ok &= (f + g) - g == f
            a, b, c, d = (rng.randint(-10**6, 10**6) for _ in range(4))
            b, d = b or 1, d or 1
            ok &= (Fraction(a, b) + Fraction(c, d)) * b * d == a * d + c * b
            bad += not ok
        rep.witnesses["failures"] = bad
        rep.check("all cases", bad == 0)
    return rep


# ---------------------------------------------------------------------------
# suite

QUICK_PFAFFIAN_CASES = [(5, 2), (4, 2), (6, 2), (6, 3), (7, 2), (7, 3)]
FULL_PFAFFIAN_CASES = [(8, 3), (8, 2), (8, 4), (9, 3), (9, 4)]
DETERMINANTAL_CASES = [
    ((2, 2), 2),
    ((2, 2, 2), 2),
    ((3, 3), 2),
    ((3, 3, 3), 2),
    ((3, 3, 3), 3),
    ((2, 3, 2), 2),
    ((1, 3, 2), 2),
    ((2, 2, 3), 2),
]


def suite_plan(quick: bool = True) -> list[tuple[Callable[..., VerificationReport], tuple]]:
    """The acceptance matrix as ``(function, args)`` jobs in report order."""
    plan: list[tuple[Callable[..., VerificationReport], tuple]] = []
    plan += [(verify_main_theorem, (n, r)) for n, r in QUICK_PFAFFIAN_CASES]
    if not quick:
        plan += [(verify_main_theorem, (n, r, PrimeField())) for n, r in FULL_PFAFFIAN_CASES]
    plan.append((verify_field_agreement, ()))
    plan.append((verify_formulas, (10,)))
    plan.append((verify_h_equality_range, (4, 9)))
    plan.append((verify_sphere_certificates, (4, 8)))
    plan.append((verify_pfaffian_determinant, (8,)))
    plan.append((verify_polarization_laws, (100,)))
    plan += [(verify_determinantal, (h, r)) for h, r in DETERMINANTAL_CASES]
    plan.append((verify_term_order_laws, (1000,)))
    plan.append((verify_ring_laws, (1000,)))
    return plan


def _run_job(job) -> VerificationReport:
    func, args = job
    return func(*args)


def run_suite(
    quick: bool = True,
    jobs: int = 1,
    progress: Callable[[VerificationReport], None] | None = None,
) -> list[VerificationReport]:
    """Run the acceptance matrix.  With ``jobs > 1`` cases run in worker
    processes; reports still come back in plan order."""
    plan = suite_plan(quick)
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(_run_job, plan)
            reports = []
            for rep in results:
                reports.append(rep)
                if progress is not None:
                    progress(rep)
            return reports
    reports = []
    for job in plan:
        rep = _run_job(job)
        reports.append(rep)
        if progress is not None:
            progress(rep)
    return reports
