"""Self-check suites: worked examples with frozen expectations, character
and Gauss-sum identities, and a sweep comparing the closed-form weight
distributions against exhaustive enumeration on every admissible tuple
up to a field-size budget.

Each suite returns a list of CheckResult; nothing is asserted here, so
the CLI and the tests can both render or gate on the same facts.
"""

from collections import Counter
from math import gcd
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .codes import (DefiningSet, WeightDistribution, brute_weight_distribution,
                    build_defining_set, puncture, zero_trace_counts)
from .cyclotomic import (AddChar, CycloInt, MultChar, davenport_hasse_lift,
                         gauss_sum, gauss_sum_semiprimitive,
                         lifted_char_index, monomial_char_sum,
                         unity_power_sums)
from .field import TowerSpec, get_field, is_prime
from . import theory


class CheckResult:
    """One named pass/fail fact with a short human-readable detail."""

    def __init__(self, name: str, ok: bool, detail: str = ""):
        self.name = name
        self.ok = ok
        self.detail = detail

    def __repr__(self):
        return f"CheckResult({self.name!r}, ok={self.ok}, {self.detail!r})"


class _Tally:
    """Folds many per-case comparisons into a single CheckResult."""

    def __init__(self, name: str):
        self.name = name
        self.cases = 0
        self.failures: List[str] = []

    def record(self, ok: bool, label: str):
        self.cases += 1
        if not ok:
            self.failures.append(label)

    def result(self) -> CheckResult:
        if self.failures:
            detail = (f"{len(self.failures)}/{self.cases} failed, "
                      f"first: {self.failures[0]}")
            return CheckResult(self.name, False, detail)
        return CheckResult(self.name, True, f"{self.cases} cases")


def _golden(n: int, dim: int, q: int,
            rows: Sequence[Tuple[int, int]]) -> WeightDistribution:
    counts = {0: 1}
    counts.update(dict(rows))
    return WeightDistribution(n, dim, counts, q)


# ---------------------------------------------------------------------------
# suite: worked examples
# ---------------------------------------------------------------------------

# (p, e, f, k, a_index, n, dim, ((w, count), ...))
_EXAMPLES = (
    (2, 2, 2, 4, 0, 51, 4, ((36, 204), (48, 51))),
    (3, 1, 2, 6, 0, 182, 6, ((108, 182), (126, 546))),
    (2, 1, 2, 4, 1, 10, 4, ((4, 5), (6, 10))),
    (2, 1, 2, 6, 1, 42, 6, ((20, 42), (24, 21))),
    (2, 2, 2, 4, 1, 68, 4, ((48, 51), (52, 204))),
    (2, 1, 3, 6, 1, 36, 6, ((16, 27), (20, 36))),
)


def _family_route(tower: TowerSpec, a_index: int
                  ) -> Optional[WeightDistribution]:
    """The specialized closed display covering this tuple, if any."""
    if a_index == 0:
        if tower.f == 2 and tower.k > 2:
            return theory.dist_zero_shift_f2(tower.q, tower.k)
        return None
    if tower.f in (1, 2):
        return theory.dist_nonzero_shift(tower.q, tower.f, tower.k)[0]
    if tower.q == 2 and tower.f == 3 and tower.k % 3 == 0 and tower.k > 3:
        return theory.dist_binary_cubic(tower.k)
    return None


def suite_examples(workers: int = 1) -> List[CheckResult]:
    out = []
    for p, e, f, k, a_index, n, dim, rows in _EXAMPLES:
        tower = TowerSpec(p, e, f, k)
        golden = _golden(n, dim, tower.q, rows)
        ds = build_defining_set(tower, a_index)
        brute = brute_weight_distribution(ds, workers=workers)
        predicted = theory.predicted_distribution(tower, a_index)
        family = _family_route(tower, a_index)
        ok = brute == golden and predicted == golden
        routes = 2
        if family is not None:
            ok = ok and family == golden
            routes += 1
        name = f"example q={tower.q} f={f} k={k} a_index={a_index}"
        out.append(CheckResult(name, ok, f"{routes} routes give {brute!r}"))

    # the punctured companion of the first example
    tower = TowerSpec(2, 2, 2, 4)
    ds = puncture(build_defining_set(tower, 0))
    brute = brute_weight_distribution(ds, workers=workers)
    golden = _golden(17, 4, 4, ((12, 204), (16, 51)))
    ok = (brute == golden
          and theory.predicted_distribution(tower, 0, punctured=True) == golden
          and theory.dist_zero_shift_f2_punctured(4, 4) == golden)
    out.append(CheckResult("example q=4 f=2 k=4 a_index=0 punctured", ok,
                           f"3 routes give {brute!r}"))

    # binary cubic tower: the spectrum route must agree as well
    field = get_field(2, 6)
    ok = theory.walsh_weight_distribution(field, 3) == \
        _golden(36, 6, 2, ((16, 27), (20, 36)))
    out.append(CheckResult("example q=2 f=3 k=6 spectrum route", ok))

    # the nonzero shift value does not matter: all a give one distribution
    tower = TowerSpec(2, 2, 2, 4)
    dists = [brute_weight_distribution(build_defining_set(tower, a),
                                       workers=workers)
             for a in range(1, 4)]
    ok = all(d == dists[0] for d in dists)
    out.append(CheckResult("example q=4 f=2 k=4 shift invariance", ok,
                           "a_index in {1,2,3}"))
    return out


# ---------------------------------------------------------------------------
# suite: character and Gauss-sum identities
# ---------------------------------------------------------------------------

def _check_orthogonality() -> CheckResult:
    tally = _Tally("character orthogonality")
    for p, m in ((2, 1), (2, 4), (3, 2), (5, 1), (7, 1)):
        field = get_field(p, m)
        M = field.mult_order
        for j in range(M):
            psi = MultChar(field, j)
            acc = None
            for s in range(M):
                v = psi.value(s)
                acc = v if acc is None else acc + v
            want = M if psi.order == 1 else 0
            tally.record(acc == want, f"mult p={p} m={m} j={j}")
        for scale in [None, field.one, field.alpha if M > 1 else field.one]:
            chi = AddChar(field, scale=scale)
            acc = None
            for x in field.elements():
                v = chi.value(x)
                acc = v if acc is None else acc + v
            want = p ** m if chi.is_trivial else 0
            tally.record(acc == want, f"add p={p} m={m} scale={scale}")
    return tally.result()


def _check_trivial_gauss() -> CheckResult:
    tally = _Tally("trivial character collapses to -1")
    for p, m in ((2, 1), (2, 6), (3, 3), (5, 2), (7, 1)):
        field = get_field(p, m)
        tally.record(gauss_sum(field, 0) == -1, f"p={p} m={m}")
    field = get_field(2, 4)
    tally.record(gauss_sum(field, 0, deg=2) == -1, "subfield path")
    return tally.result()


def _check_gauss_modulus(limit: int = 1 << 12) -> CheckResult:
    tally = _Tally("|G|^2 = field size")
    for p in (2, 3, 5, 7):
        m = 1
        while p ** m <= limit:
            field = get_field(p, m)
            r = p ** m
            for j in range(1, r - 1):
                g = gauss_sum(field, j)
                tally.record(g * g.conj() == r, f"p={p} m={m} j={j}")
            m += 1
    return tally.result()


def _check_gauss_conjugation() -> CheckResult:
    tally = _Tally("conjugate character symmetry")
    for p, m in ((2, 4), (3, 2), (3, 3), (5, 2), (7, 2), (11, 1), (13, 1)):
        field = get_field(p, m)
        M = field.mult_order
        for j in range(1, M):
            psi = MultChar(field, j)
            lhs = gauss_sum(field, (M - j) % M)
            rhs = gauss_sum(field, j).conj() * psi.value_at_minus_one()
            tally.record(lhs == rhs, f"p={p} m={m} j={j}")
    return tally.result()


def _check_semiprimitive(limit: int = 1 << 12) -> CheckResult:
    tally = _Tally("semi-primitive closed form")
    for p in (2, 3, 5, 7):
        for N in range(3, limit):
            if N % p == 0:
                continue
            j, pj = None, 1
            for cand in range(1, N + 1):
                pj = pj * p % N
                if pj == N - 1:
                    j = cand
                    break
            if j is None or p ** (2 * j) > limit:
                continue
            gamma = 1
            while p ** (2 * j * gamma) <= limit:
                r = p ** (2 * j * gamma)
                field = get_field(p, 2 * j * gamma)
                base = (r - 1) // N
                for s in range(1, N):
                    closed = gauss_sum_semiprimitive(p, N, gamma, s)
                    ok = gauss_sum(field, s * base) == closed
                    tally.record(ok, f"p={p} N={N} gamma={gamma} s={s}")
                gamma += 1
    return tally.result()


def _check_lifts() -> CheckResult:
    """The base character must live on the subfield embedded in the big
    field (same generator chain), so both Gauss sums use one Field."""
    tally = _Tally("norm-composed character lift")
    bases = ((2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3), (7, 2),
             (2, 5), (2, 6), (3, 4), (2, 8))
    for p, m in bases:
        r = p ** m
        for t in (2, 3):
            if r ** t > 1 << 16:
                continue
            big = get_field(p, m * t)
            for j in (0, 1, 2, (r - 1) // 2):
                base = gauss_sum(big, j, deg=m)
                lifted = davenport_hasse_lift(base, t)
                direct = gauss_sum(big, lifted_char_index(r, t, j))
                tally.record(direct == lifted, f"r={r} t={t} j={j}")
    return tally.result()


def _check_monomial_sums() -> CheckResult:
    tally = _Tally("monomial sum via Gauss expansion")
    plans = (
        (TowerSpec(2, 1, 2, 4), None),
        (TowerSpec(2, 1, 3, 6), 9),
        (TowerSpec(3, 1, 2, 2), None),
        (TowerSpec(3, 1, 2, 4), 8),
        (TowerSpec(2, 2, 2, 4), 8),
    )
    for tower, n_samples in plans:
        field = tower.field()
        M = field.mult_order
        if n_samples is None:
            bs = range(M)
        else:
            bs = range(0, M, max(1, M // n_samples))
        for b in bs:
            direct, via_gauss = monomial_char_sum(field, tower, b)
            tally.record(direct == via_gauss,
                         f"q={tower.q} f={tower.f} k={tower.k} b={b}")
    return tally.result()


def _check_unity_sums() -> CheckResult:
    tally = _Tally("root-of-unity position sums")
    qs = [q for q in range(3, 130, 2)
          if is_prime(q) or any(q == p ** i for p in (3, 5, 7, 11)
                                for i in range(2, 8))]
    for q in qs:
        for s in range(1, q + 1):
            if 2 * s == q + 1:
                continue
            odd, even = unity_power_sums(q, s)
            tally.record(odd == 0 and even == -1, f"q={q} s={s}")
    return tally.result()


def _check_f2_value_rows() -> CheckResult:
    tally = _Tally("f=2 exponential sum rows")
    for p, e, k in ((2, 1, 4), (2, 1, 6), (3, 1, 6), (2, 2, 4)):
        tower = TowerSpec(p, e, 2, k)
        ds = build_defining_set(tower, 1)
        lam = theory.lambda_grouped(ds)
        empirical = sorted(Counter(lam.tolist()).items())
        expected = sorted(theory.lambda_value_pairs_f2(tower))
        tally.record(empirical == expected, f"q={tower.q} k={k}")
    return tally.result()


def _check_f1_collapse() -> CheckResult:
    tally = _Tally("f=1 sum collapses to -q")
    for p, e, k in ((2, 1, 3), (2, 1, 4), (3, 1, 3), (5, 1, 3), (2, 2, 2)):
        tower = TowerSpec(p, e, 1, k)
        lam = theory.lambda_grouped(build_defining_set(tower, 1))
        closed = {theory.lambda_closed(tower, b)
                  for b in range(tower.q ** k - 1)}
        ok = set(lam.tolist()) == {-tower.q} and closed == {-tower.q}
        tally.record(ok, f"q={tower.q} k={k}")
    return tally.result()


def suite_lemmas() -> List[CheckResult]:
    return [
        _check_orthogonality(),
        _check_trivial_gauss(),
        _check_gauss_modulus(),
        _check_gauss_conjugation(),
        _check_semiprimitive(),
        _check_lifts(),
        _check_monomial_sums(),
        _check_unity_sums(),
        _check_f2_value_rows(),
        _check_f1_collapse(),
    ]


# ---------------------------------------------------------------------------
# suite: closed forms vs enumeration over a parameter grid
# ---------------------------------------------------------------------------

def grid_towers(budget: int = 1 << 13,
                primes: Sequence[int] = (2, 3, 5)) -> List[TowerSpec]:
    """Every tower with p in primes and field size q^k <= budget."""
    out = []
    for p in primes:
        e = 1
        while p ** e <= budget:
            q = p ** e
            k = 1
            while q ** k <= budget:
                for f in range(1, k + 1):
                    if k % f == 0:
                        out.append(TowerSpec(p, e, f, k))
                k += 1
            e += 1
    return out


def _a_samples(q: int) -> List[int]:
    if q <= 9:
        return list(range(1, q))
    return [1, 2, q - 1]


def _grid_zero_shift(tower: TowerSpec, workers: int, tallies, literal: bool):
    q, f, k = tower.q, tower.f, tower.k
    label = f"q={q} f={f} k={k} a=0"
    ds = build_defining_set(tower, 0)
    zeros = zero_trace_counts(ds, workers=workers)
    brute = brute_weight_distribution(ds, workers=workers, zeros=zeros)
    tallies["total"].record(brute.total() == q ** brute.dim, label)
    tallies["singleton"].record(
        theory.singleton_slack(*brute.params()) >= 0, label)
    divisible = all(w % (q - 1) == 0 for w in brute.counts if w)
    tallies["scaling"].record(divisible, label)

    pds = puncture(ds)
    pzeros = zero_trace_counts(pds, workers=workers)
    pbrute = brute_weight_distribution(pds, workers=workers, zeros=pzeros)
    shrunk = {0: 1}
    shrunk.update({w // (q - 1): c for w, c in brute.counts.items() if w})
    tallies["scaling"].record(
        pbrute == WeightDistribution(len(pds), brute.dim, shrunk, q),
        label + " punctured")

    report = theory.TheoryReport(tower, 0)
    if not (k > f > 1):
        tallies["guards"].record(
            not report.applicable and report.predicted is None, label)
        return
    tallies["closed vs brute"].record(report.matches(brute) is True, label)
    tallies["closed vs brute"].record(
        theory.predicted_distribution(tower, 0, punctured=True) == pbrute,
        label + " punctured")
    if f == 2:
        tallies["family routes"].record(
            theory.dist_zero_shift_f2(q, k) == brute, label)
        tallies["family routes"].record(
            theory.dist_zero_shift_f2_punctured(q, k) == pbrute,
            label + " punctured")
    d = brute.d_min
    bound = theory.dmin_bound_zero_shift(q, f, k)
    tallies["distance bounds"].record(d >= bound, f"{label} d={d} vs {bound}")
    pbound = theory.dmin_bound_zero_shift_punctured(q, f, k)
    tallies["distance bounds"].record(
        pbrute.d_min >= pbound, f"{label} punctured")

    grouped = theory.delta_grouped(ds, zeros)
    N = (q ** f - 1) // (q - 1)
    closed = np.array([theory.delta_closed(tower, c) for c in range(N)],
                      dtype=np.int64)
    s = np.arange(len(grouped), dtype=np.int64)
    tallies["pointwise sums"].record(
        bool(np.array_equal(grouped, closed[s % N])), label)
    if literal:
        field = tower.field()
        M = field.mult_order
        for b in range(0, M, max(1, M // 8)):
            tallies["literal sums"].record(
                theory.delta_direct(field, tower, b) == int(grouped[b]),
                f"{label} b={b}")
            lhs = q * q * (q ** f - 1) * \
                theory.count_both_conditions(tower, 0, b)
            rhs = q ** k * (q ** f - 1) + (q - 1) * (q ** f - q ** k) \
                + (q ** f - 1) * int(grouped[b])
            tallies["solution counts"].record(lhs == rhs, f"{label} b={b}")


def _grid_nonzero_shift(tower: TowerSpec, workers: int, tallies,
                        literal: bool):
    q, f, k = tower.q, tower.f, tower.k
    admissible = tower.gcd_condition()
    first = None
    for a_index in _a_samples(q):
        label = f"q={q} f={f} k={k} a_index={a_index}"
        ds = build_defining_set(tower, a_index)
        zeros = zero_trace_counts(ds, workers=workers)
        brute = brute_weight_distribution(ds, workers=workers, zeros=zeros)
        tallies["total"].record(brute.total() == q ** brute.dim, label)
        tallies["singleton"].record(
            theory.singleton_slack(*brute.params()) >= 0, label)
        if first is None:
            first = (ds, zeros, brute)
        else:
            tallies["shift invariance"].record(brute == first[2], label)
            if admissible:
                # scaling the shift by u^(k/f) scales the defining set by
                # u, which rotates the zero-count array by dlog(u)
                field = tower.field()
                M = field.mult_order
                kf = k // f
                u = next(t for t in range(0, M, M // (q - 1))
                         if field.mul(field.pow(t, kf), first[0].a) == ds.a)
                rolled = np.roll(first[1], -u)
                tallies["shift invariance"].record(
                    bool(np.array_equal(zeros, rolled)), label + " rotation")

        report = theory.TheoryReport(tower, a_index)
        if not admissible:
            tallies["guards"].record(
                not report.applicable and report.matches(brute) is None,
                label)
            continue
        tallies["closed vs brute"].record(report.matches(brute) is True,
                                          label)
        d = brute.d_min
        bound = theory.dmin_bound_nonzero_shift(q, f, k)
        tallies["distance bounds"].record(d >= bound,
                                          f"{label} d={d} vs {bound}")
        if f in (1, 2):
            family, _ = theory.dist_nonzero_shift(q, f, k)
            tallies["family routes"].record(family == brute, label)
        if f == 1:
            need = theory.griesmer_min_length(q, brute.dim, d)
            tallies["distance bounds"].record(
                brute.n == need and d == bound, f"{label} one-weight")

        grouped = theory.lambda_grouped(ds, zeros)
        N = (q ** f - 1) // (q - 1)
        closed = np.array([theory.lambda_closed(tower, c) for c in range(N)],
                          dtype=np.int64)
        s = np.arange(len(grouped), dtype=np.int64)
        tallies["pointwise sums"].record(
            bool(np.array_equal(grouped, closed[s % N])), label)
        if literal:
            field = tower.field()
            M = field.mult_order
            for b in range(0, M, max(1, M // 6)):
                tallies["literal sums"].record(
                    theory.lambda_direct(field, tower, b, a_index)
                    == int(grouped[b]), f"{label} b={b}")
                lhs = q * q * (q ** f - 1) * \
                    theory.count_both_conditions(tower, a_index, b)
                rhs = q ** k * (q ** f - 1) + (q ** k - q ** f) \
                    + (q ** f - 1) * int(grouped[b])
                tallies["solution counts"].record(lhs == rhs, f"{label} b={b}")


def suite_grid(budget: int = 1 << 13, workers: int = 1,
               literal_budget: int = 1 << 8) -> List[CheckResult]:
    names = ("closed vs brute", "family routes", "pointwise sums",
             "literal sums", "solution counts", "shift invariance",
             "scaling", "total", "singleton", "distance bounds", "guards")
    tallies = {name: _Tally(name) for name in names}
    for tower in grid_towers(budget):
        literal = tower.q ** tower.k <= literal_budget and tower.q <= 16
        if tower.f > 1:
            _grid_zero_shift(tower, workers, tallies, literal)
        else:
            try:
                build_defining_set(tower, 0)
                empty_ok = False
            except ValueError:
                empty_ok = True
            tallies["guards"].record(
                empty_ok, f"q={tower.q} k={tower.k} a=0 empty set")
        _grid_nonzero_shift(tower, workers, tallies, literal)
    return [tallies[name].result() for name in names]


_SUITES: Dict[str, Callable[..., List[CheckResult]]] = {
    "examples": lambda workers: suite_examples(workers=workers),
    "lemmas": lambda workers: suite_lemmas(),
    "grid": lambda workers: suite_grid(workers=workers),
}


def run_suite(name: str, workers: int = 1) -> List[CheckResult]:
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; "
                         f"choose from {sorted(_SUITES)}")
    return _SUITES[name](workers)
