"""Reproduction battery: one check function per acceptance criterion.

Every check returns a :class:`CheckResult`; ``run_all`` drives them in order.
Random sampling uses fixed seeds so that reruns are identical.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .characters import character_table, z_coefficient
from .embedding import image_partitions, is_additive, normal_weights, weights_cone_pointed
from .faces import (
    Relaxation,
    compatible_tableaux,
    facet_inequality,
    maximal_relaxations,
    pkron_333_inequalities,
    verify_facets,
)
from .kronecker import kron, kron_nonzero_scan
from .partitions import (
    Partition,
    Tableau,
    add_partitions,
    conjugate,
    enumerate_syt,
    partitions_bounded,
    partitions_of,
    strict_partitions,
)
from .rectangular import quasipoly_eval, rect_kron, series_coefficients, verify_weakly_stable
from .reduced import reduced_kron_polytope, reduced_kron_stabilized

__all__ = ["CheckResult", "CHECKS", "run_check", "run_all"]


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    details: dict = field(default_factory=dict)
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        summary = ", ".join(f"{k}={v}" for k, v in self.details.items() if not isinstance(v, (list, dict)))
        return f"[{status}] criterion {self.number}: {self.name} ({summary}; {self.seconds:.1f}s)"

    def as_json(self) -> dict:
        return {"criterion": self.number, "name": self.name, "passed": self.passed,
                "details": self.details, "seconds": round(self.seconds, 3)}


# -- 1 -------------------------------------------------------------------------------


def check_tableau_census() -> CheckResult:
    tableaux = enumerate_syt(3, 3, 9)
    additive = [t for t in tableaux if is_additive(t) is not None]
    relaxations = {r for t in additive for r in maximal_relaxations(t)}
    target = Relaxation.from_levels("0,1,2;1,2,3;3,4,5")
    compatible = compatible_tableaux(target, 3, 3, 9)
    all_additive = all(is_additive(t) is not None for t in compatible)
    details = {"syt": len(tableaux), "additive": len(additive), "relaxations": len(relaxations),
               "compatible": len(compatible), "compatible_all_additive": all_additive}
    ok = (len(tableaux), len(additive), len(relaxations), len(compatible)) == (42, 36, 17, 8)
    return CheckResult(1, "tableau census", ok and all_additive, details)


# -- 2 -------------------------------------------------------------------------------


def check_pkron_333() -> CheckResult:
    scan = kron_nonzero_scan(3, 3, 3, 12)
    violations = []
    checks = 0
    for key, slack in pkron_333_inequalities():
        for t in scan:
            checks += 1
            if slack(t.lam, t.mu, t.nu) < 0 and len(violations) < 10:
                violations.append([key[0], list(key[1]), t.as_json()])
    return CheckResult(2, "PKron_333 corpus validity", not violations,
                       {"triples": len(scan), "checks": checks, "violations": len(violations)})


# -- 3 -------------------------------------------------------------------------------


def _random_strict(rng: random.Random, length: int, top: int = 30) -> Partition:
    """A partition strictly decreasing when padded to ``length``."""
    values = sorted(rng.sample(range(0, top), length), reverse=True)
    return Partition(values)


def check_facet_soundness(n_max: int = 10, samples: int = 20, seed: int = 3) -> CheckResult:
    rng = random.Random(seed)
    sources: dict = {}
    for S in enumerate_syt(3, 3, 9):
        if is_additive(S) is None:
            continue
        for R in maximal_relaxations(S):
            sources.setdefault(facet_inequality(R, S), []).append(S)
    catalog = sorted(sources)
    report = verify_facets(catalog, kron_nonzero_scan(9, 3, 3, n_max))
    not_tight = 0
    tight_checks = 0
    for ineq in catalog:
        for _ in range(samples):
            lam = _random_strict(rng, 9)
            for S in sources[ineq]:
                beta, gamma = image_partitions(S, lam)
                tight_checks += 1
                if ineq.slack(lam, beta, gamma) != 0:
                    not_tight += 1
    ok = not report.violations and report.checked == report.valid and not_tight == 0
    return CheckResult(3, "facet soundness", ok, {
        "facets": len(catalog), "checked": report.checked, "valid": report.valid,
        "tight_on_scan": report.tight, "tightness_checks": tight_checks, "not_tight": not_tight})


# -- 4 -------------------------------------------------------------------------------


def check_d4_parity(n_max: int = 12) -> CheckResult:
    values = {n: kron(Partition((n, n)), Partition((n, n)), Partition((n, n))) for n in range(1, n_max + 1)}
    bad = [n for n, g in values.items() if g != (1 if n % 2 == 0 else 0)]
    return CheckResult(4, "D4 parity", not bad,
                       {"n_max": n_max, "values": [values[n] for n in sorted(values)], "failures": len(bad)})


# -- 5 -------------------------------------------------------------------------------

AFFINE_BUDGET = {"D4": 12, "E6": 8, "E7": 6, "E8": 4}
QUASI_DIAGRAM = {"E7_identity": "E7", "E6_identity": "E6", "D4_identity": "D4"}


def check_affine_identities(quasi_n_max: int = 60) -> CheckResult:
    oracle_bad = []
    for name, n_max in AFFINE_BUDGET.items():
        series = series_coefficients(name, n_max)
        for n in range(n_max + 1):
            if rect_kron(name, n) != series[n]:
                oracle_bad.append((name, n))
    quasi_bad = []
    for qname, diagram in QUASI_DIAGRAM.items():
        series = series_coefficients(diagram, quasi_n_max)
        for n in range(quasi_n_max + 1):
            try:
                if quasipoly_eval(qname, n) != series[n]:
                    quasi_bad.append((qname, n))
            except ArithmeticError:
                quasi_bad.append((qname, n))
    return CheckResult(5, "affine identities", not oracle_bad and not quasi_bad, {
        "oracle_mismatches": len(oracle_bad), "quasipoly_mismatches": len(quasi_bad),
        "quasi_n_max": quasi_n_max})


# -- 6 -------------------------------------------------------------------------------

WEAKLY_STABLE = (
    (((2, 2), (2, 2), (2, 2)), 6),
    (((3, 3), (3, 3), (2, 2, 2)), 4),
    (((6, 6), (4, 4, 4), (4, 4, 4)), 2),
    (((6, 6), (4, 4, 4), (3, 3, 3, 3)), 2),
)


def check_weak_stability(n_budget: int = 24, per_tableau: int = 3) -> CheckResult:
    failures = []
    for parts, k_max in WEAKLY_STABLE:
        rep = verify_weakly_stable(parts, k_max)
        if not rep.all_ones or len(rep.values) != k_max:
            failures.append(rep.as_json())
    stretches = 0
    tableaux = 0
    for a in range(1, 7):
        for b in range(1, 7):
            if a * b > 6:
                continue
            lams = [lam for lam in strict_partitions(a * b, n_budget) if lam.size][:per_tableau]
            for T in enumerate_syt(a, b, a * b):
                if is_additive(T) is None:
                    continue
                tableaux += 1
                for lam in lams:
                    al, bl = image_partitions(T, lam)
                    k = 1
                    while k * lam.size <= n_budget:
                        stretches += 1
                        if kron(lam * k, al * k, bl * k) != 1:
                            failures.append({"tableau": str(T), "lambda": list(lam), "k": k})
                        k += 1
    return CheckResult(6, "weak stability", not failures, {
        "named_triples": len(WEAKLY_STABLE), "tableaux": tableaux, "stretches": stretches,
        "failures": len(failures)})


# -- 7 -------------------------------------------------------------------------------

ORACLE_TABLEAUX = ("1,2;3,4", "1,3;2,4")
ORACLE_LAMBDAS = ((4, 3, 2, 1), (3, 2, 1))


def check_oracle_cross_validation(max_size: int = 10, k_max: int = 12, window: int = 3) -> CheckResult:
    cases = 0
    mismatches = []
    not_reached = 0
    latest = 0
    for text in ORACLE_TABLEAUX:
        T = Tableau.parse(text)
        for lam in ORACLE_LAMBDAS:
            al, bl = image_partitions(T, lam)
            for alpha in strict_partitions(4, max_size):
                s = alpha.size
                for beta in partitions_bounded(s, 2):
                    for gamma in partitions_bounded(s, 2):
                        cases += 1
                        count = reduced_kron_polytope(T, lam, alpha, beta, gamma)
                        rep = reduced_kron_stabilized(lam, al, bl, alpha, beta, gamma, k_max, window)
                        if not rep.reached:
                            not_reached += 1
                        else:
                            latest = max(latest, rep.k_plateau)
                        if rep.plateau_value != count and len(mismatches) < 10:
                            mismatches.append({"tableau": text, "lambda": list(lam), "alpha": list(alpha),
                                               "beta": list(beta), "gamma": list(gamma),
                                               "polytope": count, "values": rep.values})
    return CheckResult(7, "oracle cross-validation", not mismatches and not not_reached, {
        "cases": cases, "mismatches": len(mismatches), "not_reached": not_reached,
        "latest_plateau_k": latest, "examples": mismatches})


# -- 8 -------------------------------------------------------------------------------


def _orthogonality(n_max: int) -> int:
    bad = 0
    for n in range(1, n_max + 1):
        table = character_table(n)
        zs = [z_coefficient(rho) for rho in table.partitions]
        for i, ri in enumerate(table.values):
            for j in range(i, len(table.values)):
                rj = table.values[j]
                val = sum(Fraction(x * y, z) for x, y, z in zip(ri, rj, zs))
                if val != (1 if i == j else 0):
                    bad += 1
    return bad


def _symmetry(n_max: int) -> tuple[int, int]:
    bad = checked = 0
    for n in range(1, n_max + 1):
        parts = partitions_of(n)
        memo: dict = {}
        for lam in parts:
            for mu in parts:
                for nu in parts:
                    key = tuple(sorted((lam, mu, nu)))
                    memo.setdefault(key, set()).add(kron(lam, mu, nu))
        for key, vals in memo.items():
            checked += 1
            if len(vals) != 1:
                bad += 1
            # sign twist on two arguments
            lam, mu, nu = key
            if kron(conjugate(lam), conjugate(mu), nu) not in vals:
                bad += 1
    return checked, bad


def _random_partition(rng: random.Random, n: int) -> Partition:
    parts = partitions_of(n)
    return parts[rng.randrange(len(parts))]


def _random_nonzero_triple(rng: random.Random, n: int):
    while True:
        t = tuple(_random_partition(rng, n) for _ in range(3))
        if kron(*t):
            return t


def _monotonicity(rng: random.Random, cases: int, max_size: int) -> int:
    bad = 0
    for _ in range(cases):
        n1 = rng.randint(1, max_size - 1)
        n2 = rng.randint(0, max_size - n1)
        lmn = _random_nonzero_triple(rng, n1)
        abc = tuple(_random_partition(rng, n2) for _ in range(3))
        summed = tuple(add_partitions(x, y) for x, y in zip(abc, lmn))
        if kron(*summed) < kron(*abc):
            bad += 1
    return bad


def _semigroup(rng: random.Random, cases: int, max_size: int) -> int:
    bad = 0
    for _ in range(cases):
        t1 = _random_nonzero_triple(rng, rng.randint(1, max_size))
        t2 = _random_nonzero_triple(rng, rng.randint(1, max_size))
        if kron(*(add_partitions(x, y) for x, y in zip(t1, t2))) == 0:
            bad += 1
    return bad


def _determinant_twist(rng: random.Random, cases: int, max_size: int) -> int:
    formats = [(a, b) for a in range(1, 5) for b in range(1, 5) if a * b <= 4]
    bad = 0
    done = 0
    while done < cases:
        a, b = rng.choice(formats)
        n = rng.randint(1, max_size)
        lams = partitions_bounded(n, a * b)
        mus = partitions_bounded(n, b)
        nus = partitions_bounded(n, a)
        lam, mu, nu = rng.choice(lams), rng.choice(mus), rng.choice(nus)
        t = rng.randint(1, 2)
        twisted = (add_partitions(lam, (t,) * (a * b)), add_partitions(mu, (a * t,) * b),
                   add_partitions(nu, (b * t,) * a))
        if kron(*twisted) != kron(lam, mu, nu):
            bad += 1
        done += 1
    return bad


def _additivity_equivalence(max_area: int) -> tuple[int, int]:
    checked = bad = 0
    for a in range(1, max_area + 1):
        for b in range(1, max_area // a + 1):
            for T in enumerate_syt(a, b, a * b):
                checked += 1
                if (is_additive(T) is not None) != weights_cone_pointed(normal_weights(T)):
                    bad += 1
    return checked, bad


def check_property_batteries(seed: int = 8) -> CheckResult:
    rng = random.Random(seed)
    orth_bad = _orthogonality(12)
    sym_checked, sym_bad = _symmetry(8)
    mono_bad = _monotonicity(rng, 200, 12)
    semi_bad = _semigroup(rng, 200, 6)
    det_bad = _determinant_twist(rng, 30, 8)
    eq_checked, eq_bad = _additivity_equivalence(9)
    details = {"orthogonality_failures": orth_bad, "symmetry_classes": sym_checked,
               "symmetry_failures": sym_bad, "monotonicity_failures": mono_bad,
               "semigroup_failures": semi_bad, "determinant_twist_failures": det_bad,
               "equivalence_tableaux": eq_checked, "equivalence_failures": eq_bad}
    ok = not any((orth_bad, sym_bad, mono_bad, semi_bad, det_bad, eq_bad))
    return CheckResult(8, "property batteries", ok, details)


CHECKS: dict[int, Callable[[], CheckResult]] = {
    1: check_tableau_census,
    2: check_pkron_333,
    3: check_facet_soundness,
    4: check_d4_parity,
    5: check_affine_identities,
    6: check_weak_stability,
    7: check_oracle_cross_validation,
    8: check_property_batteries,
}


def run_check(number: int) -> CheckResult:
    start = time.perf_counter()
    result = CHECKS[number]()
    result.seconds = time.perf_counter() - start
    return result


def run_all(numbers=None) -> list[CheckResult]:
    return [run_check(k) for k in (numbers or sorted(CHECKS))]
