"""Named congruences and identities about q-binomial and q-trinomial
coefficients, each checkable for concrete parameters.

Every ``check_*`` function returns a :class:`VerificationReport`.  Suites
(:func:`run_suite`) walk parameter ranges and, for statements that sweep an
inner index ``k``, update the q-binomials from one ``k`` to the next through
their term ratio instead of rebuilding them.
"""

from __future__ import annotations

import enum
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

from .arith import is_prime
from .congruence import (
    CongruenceResult,
    CycloFraction,
    Modulus,
    Reason,
    congruent,
    congruent_fraction,
)
from .poly import IntPoly, RatFun, add_into, format_poly, substitute_monomial
from .qseries import (
    _gauss_binom,
    cyclotomic_product,
    euler_number,
    gauss_binom,
    q_int,
    q_trinomial,
    step,
)


class StatementId(str, enum.Enum):
    THEOREM1 = "theorem1"
    THEOREM2 = "theorem2"
    LEMMA_B1 = "lemma_b1"
    LEMMA_B2 = "lemma_b2"
    PROP_A1 = "prop_a1"
    ANDREWS_NEW4 = "andrews_new4"
    STRAUB_A3 = "straub_a3"
    STRAUB_NEW5 = "straub_new5"
    STEP_C1 = "step_c1"
    STEP_C2 = "step_c2"
    STEP_C5 = "step_c5"
    BABBAGE_NEW3 = "babbage_new3"
    WOLSTENHOLME = "wolstenholme"
    SUN_NEW6 = "sun_new6"


_ORDER = {s.value: i for i, s in enumerate(StatementId)}


@dataclass
class VerificationReport:
    statement: str
    params: dict
    holds: bool
    reason: str
    residual_degree: int | None = None
    elapsed: float = 0.0
    residual: str | None = field(default=None, repr=False)

    def sort_key(self):
        return (_ORDER.get(self.statement, len(_ORDER)), self.statement, tuple(self.params.values()))

    def to_json(self, verbose: bool = False) -> dict:
        out = {
            "statement": self.statement,
            "params": dict(self.params),
            "holds": self.holds,
            "reason": self.reason,
            "residual_degree": self.residual_degree,
            "elapsed_ms": round(self.elapsed * 1000.0, 3),
        }
        if verbose:
            out["residual"] = self.residual
        return out


def _from_result(statement, params, res: CongruenceResult, t0: float) -> VerificationReport:
    r = res.residual
    return VerificationReport(
        statement=str(getattr(statement, "value", statement)),
        params=params,
        holds=res.holds,
        reason=res.reason.value,
        residual_degree=None if r is None or r.is_zero() else r.degree,
        elapsed=time.perf_counter() - t0,
        residual=None if r is None else format_poly(r),
    )


# -- the three-case right-hand side -----------------------------------------


class Branch(str, enum.Enum):
    THREE_M = "three_m"
    THREE_M_PLUS_1 = "three_m_plus_1"
    THREE_M_MINUS_1 = "three_m_minus_1"


@dataclass(frozen=True)
class RnFormula:
    n: int
    m: int
    branch: Branch
    value: IntPoly


def r_n(n: int) -> RnFormula:
    if n < 1:
        raise ValueError(f"R_n needs n >= 1, got {n}")
    r = n % 3
    if r == 0:
        m = n // 3
        e = m * (3 * m - 1) // 2
        c = [0] * (e + m + 1)
        c[e] += (-1) ** m
        c[e + m] += (-1) ** m
        return RnFormula(n, m, Branch.THREE_M, IntPoly(c))
    if r == 1:
        m = (n - 1) // 3
        return RnFormula(n, m, Branch.THREE_M_PLUS_1, IntPoly.monomial(m * (3 * m + 1) // 2, (-1) ** m))
    m = (n + 1) // 3
    return RnFormula(n, m, Branch.THREE_M_MINUS_1, IntPoly.monomial(m * (3 * m - 1) // 2, (-1) ** m))


def _one_minus(a: int) -> IntPoly:
    return 1 - IntPoly.monomial(a)


def theorem2_rhs(n: int) -> IntPoly:
    """Consolidated form ``2 R_n - n (1 - q^n)``."""
    return 2 * r_n(n).value - n * _one_minus(n)


def theorem2_cases(n: int) -> IntPoly:
    """The ``theorem2`` right side written out case by case on ``n mod 3``."""
    if n % 3 == 0:
        m = n // 3
        s = (-1) ** m
        return (
            2 * s * (1 + IntPoly.monomial(m)) * IntPoly.monomial(m * (3 * m - 1) // 2)
            - 3 * m * _one_minus(3 * m)
        )
    if n % 3 == 1:
        m = (n - 1) // 3
        return 2 * IntPoly.monomial(m * (3 * m + 1) // 2, (-1) ** m) - (3 * m + 1) * _one_minus(3 * m + 1)
    m = (n + 1) // 3
    return 2 * IntPoly.monomial(m * (3 * m - 1) // 2, (-1) ** m) - (3 * m - 1) * _one_minus(3 * m - 1)


# -- theorems ----------------------------------------------------------------


def _need(cond: bool, msg: str):
    if not cond:
        raise ValueError(msg)


def check_theorem1(n: int) -> VerificationReport:
    _need(n >= 1, f"theorem1 needs n >= 1, got {n}")
    t0 = time.perf_counter()
    res = congruent(q_trinomial(n, 0), r_n(n).value, Modulus.cyclotomic(n, 2))
    return _from_result(StatementId.THEOREM1, {"n": n}, res, t0)


def check_theorem2(n: int) -> VerificationReport:
    _need(n >= 1, f"theorem2 needs n >= 1, got {n}")
    t0 = time.perf_counter()
    res = congruent(q_trinomial(2 * n, n), theorem2_rhs(n), Modulus.cyclotomic(n, 2))
    return _from_result(StatementId.THEOREM2, {"n": n}, res, t0)


# -- auxiliary identities and congruences -----------------------------------


def lemma_b1_sum(n: int) -> tuple[IntPoly, IntPoly]:
    """Return ``(N, L)`` with ``N / L`` equal to the left side of the ``lemma_b1`` identity.

    ``L = prod_{d <= n/2} Phi_d`` clears every term: the k-th summand times
    ``(1 - q^n) L`` is a polynomial.  Consecutive summands differ by
    ``-q^k (1-q^(n-2k))(1-q^(n-2k-1)) / ((1-q^(k+1))(1-q^(n-k-1)))``.
    """
    half = n // 2
    big_l = list(cyclotomic_product(range(1, half + 1)).coeffs)
    core = big_l
    acc = list(core)
    for k in range(half):
        core = step(core, up=(n - 2 * k, n - 2 * k - 1), down=(k + 1, n - k - 1))
        k1 = k + 1
        term = core if k1 % 2 == 0 else [-x for x in core]
        add_into(acc, term, k1 * (k1 - 1) // 2)
    return IntPoly._wrap(acc), IntPoly._wrap(big_l)


def check_lemma_b1(n: int) -> VerificationReport:
    """Exact identity in Q(q), not a congruence."""
    _need(n >= 1, f"lemma_b1 needs n >= 1, got {n}")
    t0 = time.perf_counter()
    num, big_l = lemma_b1_sum(n)
    diff = num - r_n(n).value * big_l
    frac = CycloFraction(diff, factors={d: 1 for d in range(1, n // 2 + 1)}).reduced()
    holds = frac.is_zero()
    resid = frac.numerator()
    return VerificationReport(
        statement=StatementId.LEMMA_B1.value,
        params={"n": n},
        holds=holds,
        reason="exact_identity" if holds else "nonzero_difference",
        residual_degree=None if holds else resid.degree,
        elapsed=time.perf_counter() - t0,
        residual=format_poly(resid),
    )


def _b2_verdict(n: int, k: int, left: IntPoly, right: list) -> VerificationReport:
    t0 = time.perf_counter()
    shift = k * (3 * k - 1) // 2
    rhs = IntPoly._wrap([0] * shift + (right if k % 2 == 0 else [-x for x in right]))
    res = congruent(left, rhs, Modulus.cyclotomic(n, 1))
    return _from_result(StatementId.LEMMA_B2, {"n": n, "k": k}, res, t0)


def check_lemma_b2(n: int, k: int) -> VerificationReport:
    _need(n >= 2 and 1 <= k <= n - 1, f"lemma_b2 needs n >= 2 and 1 <= k <= n-1, got n={n}, k={k}")
    return _b2_verdict(n, k, gauss_binom(2 * k - 1, k), list(gauss_binom(n - k, k).coeffs))


def _sweep_lemma_b2(n: int) -> list[VerificationReport]:
    if n < 2:
        return []
    out = []
    left = [1]  # [2k-1 k] at k = 1
    right = [1] * (n - 1)  # [n-k k] at k = 1
    for k in range(1, n):
        out.append(_b2_verdict(n, k, IntPoly._wrap(list(left)), right))
        left = step(left, up=(2 * k, 2 * k + 1), down=(k, k + 1))
        if right and 2 * (k + 1) <= n:
            right = step(right, up=(n - 2 * k, n - 2 * k - 1), down=(k + 1, n - k))
        else:
            right = []
    return out


def prop_a1_sum(n: int) -> CycloFraction:
    """``sum_{k=1}^{n/2} q^(-k(k-1)) [2k k] / [2k]_q`` over ``q^S prod_{2<=d<=n/2} Phi_d``."""
    half = n // 2
    if half == 0:
        return CycloFraction([])
    big_s = half * (half - 1)
    factors = {d: 1 for d in range(2, half + 1)}
    core = list(cyclotomic_product(factors).coeffs)  # k = 1 summand times the denominator
    acc: list = []
    for k in range(1, half + 1):
        add_into(acc, core, big_s - k * (k - 1))
        if k < half:
            core = step(core, up=(2 * k, 2 * k + 1), down=(k + 1, k + 1))
    return CycloFraction(acc, shift=big_s, factors=factors)


def prop_a1_rhs(n: int) -> CycloFraction:
    """``(1 - q)(1 - R_n) / (1 - q^n)``."""
    return CycloFraction.one_minus_power(n, _one_minus(1) * (1 - r_n(n).value))


def check_prop_a1(n: int) -> VerificationReport:
    _need(n >= 1, f"prop_a1 needs n >= 1, got {n}")
    t0 = time.perf_counter()
    res = congruent_fraction(prop_a1_sum(n) - prop_a1_rhs(n), Modulus.cyclotomic(n, 1))
    return _from_result(StatementId.PROP_A1, {"n": n}, res, t0)


# -- the cited q-congruences -------------------------------------------------


def check_andrews_new4(p: int) -> VerificationReport:
    _need(p % 2 == 1 and is_prime(p), f"andrews_new4 needs an odd prime, got {p}")
    t0 = time.perf_counter()
    m = Modulus(q_int(p), 2, period=p)
    res = congruent(gauss_binom(2 * p - 1, p - 1), IntPoly.monomial(p * (p - 1) // 2), m)
    return _from_result(StatementId.ANDREWS_NEW4, {"p": p}, res, t0)


def straub_rhs(n: int, a: int, b: int) -> RatFun:
    """``[a b]_{q^(n^2)} - (a-b) b C(a,b) (n^2-1)/24 (q^n - 1)^2``."""
    base = RatFun(substitute_monomial(gauss_binom(a, b), n * n))
    corr = RatFun(IntPoly.constant((a - b) * b * comb(a, b) * (n * n - 1)), IntPoly.constant(24))
    return base - corr * (IntPoly.monomial(n) - 1) ** 2


def check_straub_a3(n: int) -> VerificationReport:
    _need(n >= 1, f"straub_a3 needs n >= 1, got {n}")
    t0 = time.perf_counter()
    one = RatFun(1)
    rhs = (
        one
        + RatFun.q() ** (n * n)
        - RatFun(IntPoly.constant(n * n - 1), IntPoly.constant(12)) * (IntPoly.monomial(n) - 1) ** 2
    )
    res = congruent(gauss_binom(2 * n, n), rhs, Modulus.cyclotomic(n, 3))
    return _from_result(StatementId.STRAUB_A3, {"n": n}, res, t0)


def check_straub_new5(n: int, a: int, b: int) -> VerificationReport:
    _need(n >= 1, f"straub_new5 needs n >= 1, got {n}")
    _need(a >= b >= 0, f"straub_new5 needs a >= b >= 0, got a={a}, b={b}")
    t0 = time.perf_counter()
    res = congruent(gauss_binom(a * n, b * n), straub_rhs(n, a, b), Modulus.cyclotomic(n, 3))
    return _from_result(StatementId.STRAUB_NEW5, {"n": n, "a": a, "b": b}, res, t0)


# -- intermediate congruences behind theorem2 -------------------------------


def _c1_verdict(n: int, k: int, binom_2n_k: IntPoly) -> VerificationReport:
    t0 = time.perf_counter()
    sign = 1 if k % 2 else -1  # (-1)^(k-1)
    rhs = CycloFraction.one_minus_power(k, 2 * sign * _one_minus(n))
    rhs.shift = k * (k - 1) // 2
    res = congruent_fraction(CycloFraction(binom_2n_k) - rhs, Modulus.cyclotomic(n, 2))
    return _from_result(StatementId.STEP_C1, {"n": n, "k": k}, res, t0)


def _check_k_range(name: str, n: int, k: int):
    _need(n >= 2 and 1 <= k <= n // 2, f"{name} needs n >= 2 and 1 <= k <= n/2, got n={n}, k={k}")


def check_step_c1(n: int, k: int) -> VerificationReport:
    _check_k_range("step_c1", n, k)
    return _c1_verdict(n, k, gauss_binom(2 * n, k))


def _sweep_step_c1(n: int) -> list[VerificationReport]:
    out = []
    binom = [1] * (2 * n)  # [2n 1]
    for k in range(1, n // 2 + 1):
        out.append(_c1_verdict(n, k, IntPoly._wrap(list(binom))))
        binom = step(binom, up=(2 * n - k,), down=(k + 1,))
    return out


def _c2_verdict(n: int, k: int, lhs: IntPoly, product: list) -> VerificationReport:
    t0 = time.perf_counter()
    num = product if k % 2 == 0 else [-x for x in product]
    rhs = CycloFraction(num, const=2, shift=k * (3 * k - 1) // 2)
    res = congruent_fraction(CycloFraction(lhs) - rhs, Modulus.cyclotomic(n, 1))
    return _from_result(StatementId.STEP_C2, {"n": n, "k": k}, res, t0)


def check_step_c2(n: int, k: int) -> VerificationReport:
    _check_k_range("step_c2", n, k)
    # [2n n] [2k-1 k], with [2k-1 k] = prod_{i=1..k} (1 - q^(k-1+i)) / (1 - q^i)
    product = list(_gauss_binom(2 * n, n))
    for i in range(1, k + 1):
        product = step(product, up=(k - 1 + i,), down=(i,))
    return _c2_verdict(n, k, gauss_binom(2 * n - k, n + k), product)


def _sweep_step_c2(n: int) -> list[VerificationReport]:
    out = []
    lhs = list(gauss_binom(2 * n - 1, n + 1).coeffs)  # [2n-k n+k] at k = 1
    product = list(_gauss_binom(2 * n, n))  # [2n n][2k-1 k] at k = 1
    for k in range(1, n // 2 + 1):
        out.append(_c2_verdict(n, k, IntPoly._wrap(list(lhs)), product))
        if k < n // 2:
            lhs = step(lhs, up=(n - 2 * k, n - 2 * k - 1), down=(n + k + 1, 2 * n - k))
            product = step(product, up=(2 * k, 2 * k + 1), down=(k, k + 1))
    return out


def check_step_c5(n: int) -> VerificationReport:
    _need(n >= 1, f"step_c5 needs n >= 1, got {n}")
    t0 = time.perf_counter()
    res = congruent(gauss_binom(2 * n, n), 2 - n * _one_minus(n), Modulus.cyclotomic(n, 2))
    return _from_result(StatementId.STEP_C5, {"n": n}, res, t0)


# -- integer congruences -----------------------------------------------------


def _int_report(statement, p: int, residue: int, t0: float) -> VerificationReport:
    holds = residue == 0
    return VerificationReport(
        statement=statement.value,
        params={"p": p},
        holds=holds,
        reason=Reason.DIVISIBLE.value if holds else Reason.NONZERO_REMAINDER.value,
        residual_degree=None,
        elapsed=time.perf_counter() - t0,
        residual=str(residue),
    )


def check_babbage(p: int) -> VerificationReport:
    _need(p % 2 == 1 and is_prime(p), f"babbage_new3 needs an odd prime, got {p}")
    t0 = time.perf_counter()
    return _int_report(StatementId.BABBAGE_NEW3, p, (comb(2 * p - 1, p - 1) - 1) % (p * p), t0)


def check_wolstenholme(p: int) -> VerificationReport:
    _need(p >= 5 and is_prime(p), f"wolstenholme needs a prime p >= 5, got {p}")
    t0 = time.perf_counter()
    return _int_report(StatementId.WOLSTENHOLME, p, (comb(2 * p - 1, p - 1) - 1) % p**3, t0)


def sun_sides(p: int) -> tuple[int, int]:
    """Both sides of the central-binomial sum congruence reduced modulo ``p^2``."""
    m = p * p
    lhs = sum(comb(2 * k, k) * pow(k, -1, m) for k in range(1, (p - 1) // 2 + 1)) % m
    sign = -1 if ((p + 1) // 2) % 2 else 1
    rhs = sign * 8 * p * pow(3, -1, m) * euler_number(p - 3) % m
    return lhs, rhs


def check_sun_new6(p: int) -> VerificationReport:
    _need(p >= 5 and is_prime(p), f"sun_new6 needs a prime p >= 5, got {p}")
    t0 = time.perf_counter()
    lhs, rhs = sun_sides(p)
    return _int_report(StatementId.SUN_NEW6, p, (lhs - rhs) % (p * p), t0)


# -- suites ------------------------------------------------------------------

DEFAULT_STRAUB_PAIRS = ((2, 1), (3, 1), (3, 2), (4, 2))
STRAUB_MAX_A = 6


def _straub_pairs(params: dict) -> list[tuple[int, int]]:
    if "a" in params or "b" in params:
        if not ("a" in params and "b" in params):
            raise ValueError("straub_new5 needs both a and b")
        pairs = [(params["a"], params["b"])]
    else:
        pairs = list(DEFAULT_STRAUB_PAIRS)
    for a, b in pairs:
        if not 0 <= b <= a <= STRAUB_MAX_A:
            raise ValueError(f"suite runs of straub_new5 accept 0 <= b <= a <= {STRAUB_MAX_A}")
    return pairs


def _single(fn, lo: int = 1):
    return lambda n, params: [fn(n)] if n >= lo else []


def _primes_only(fn, lo: int):
    return lambda n, params: [fn(n)] if n >= lo and n % 2 == 1 and is_prime(n) else []


SWEEPS = {
    StatementId.THEOREM1: _single(check_theorem1),
    StatementId.THEOREM2: _single(check_theorem2),
    StatementId.LEMMA_B1: _single(check_lemma_b1),
    StatementId.LEMMA_B2: lambda n, params: _sweep_lemma_b2(n),
    StatementId.PROP_A1: _single(check_prop_a1),
    StatementId.ANDREWS_NEW4: _primes_only(check_andrews_new4, 3),
    StatementId.STRAUB_A3: _single(check_straub_a3),
    StatementId.STRAUB_NEW5: lambda n, params: [
        check_straub_new5(n, a, b) for a, b in _straub_pairs(params)
    ] if n >= 1 else [],
    StatementId.STEP_C1: lambda n, params: _sweep_step_c1(n) if n >= 2 else [],
    StatementId.STEP_C2: lambda n, params: _sweep_step_c2(n) if n >= 2 else [],
    StatementId.STEP_C5: _single(check_step_c5),
    StatementId.BABBAGE_NEW3: _primes_only(check_babbage, 3),
    StatementId.WOLSTENHOLME: _primes_only(check_wolstenholme, 5),
    StatementId.SUN_NEW6: _primes_only(check_sun_new6, 5),
}


def _run_one(task):
    sid, n, params = task
    return SWEEPS[StatementId(sid)](n, params)


def run_suite(ids, n_range, extra_params: dict | None = None, jobs: int = 1) -> list[VerificationReport]:
    """Run every statement in ``ids`` over ``n_range`` (inclusive ``(lo, hi)`` or a ``range``).

    Statements about primes only visit the admissible primes in the range, and
    per-``k`` statements sweep their whole ``k`` range for each ``n``.  Reports
    are sorted by ``(statement, n, k)`` whatever the completion order.
    """
    if isinstance(n_range, tuple):
        lo, hi = n_range
        n_range = range(lo, hi + 1)
    if len(n_range) == 0:
        raise ValueError("empty parameter range")
    params = dict(extra_params or {})
    ids = [StatementId(s) for s in ids]
    if StatementId.STRAUB_NEW5 in ids:
        _straub_pairs(params)
    tasks = [(s.value, n, params) for s in ids for n in n_range]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_one, tasks))
    else:
        chunks = [_run_one(t) for t in tasks]
    reports = [r for chunk in chunks for r in chunk]
    reports.sort(key=VerificationReport.sort_key)
    return reports


CHECKS = {
    StatementId.THEOREM1: check_theorem1,
    StatementId.THEOREM2: check_theorem2,
    StatementId.LEMMA_B1: check_lemma_b1,
    StatementId.LEMMA_B2: check_lemma_b2,
    StatementId.PROP_A1: check_prop_a1,
    StatementId.ANDREWS_NEW4: check_andrews_new4,
    StatementId.STRAUB_A3: check_straub_a3,
    StatementId.STRAUB_NEW5: check_straub_new5,
    StatementId.STEP_C1: check_step_c1,
    StatementId.STEP_C2: check_step_c2,
    StatementId.STEP_C5: check_step_c5,
    StatementId.BABBAGE_NEW3: check_babbage,
    StatementId.WOLSTENHOLME: check_wolstenholme,
    StatementId.SUN_NEW6: check_sun_new6,
}

check_c5 = check_step_c5
