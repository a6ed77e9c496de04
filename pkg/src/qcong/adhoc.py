"""User-supplied congruence checks over a range of ``n``."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .congruence import Modulus, congruent
from .expr import EvalError, evaluate, parse
from .poly import format_poly
from .statements import VerificationReport


@dataclass(frozen=True)
class CheckSpec:
    lhs: object
    rhs: object
    modulus: object
    power: int
    range: tuple[int, int]

    @classmethod
    def from_text(cls, lhs: str, rhs: str, modulus: str, power: int, lo: int, hi: int) -> "CheckSpec":
        return cls(parse(lhs), parse(rhs), parse(modulus), power, (lo, hi))


def _failure(n: int, reason: str, t0: float, detail: str | None = None) -> VerificationReport:
    return VerificationReport(
        statement="adhoc",
        params={"n": n},
        holds=False,
        reason=reason,
        residual_degree=None,
        elapsed=time.perf_counter() - t0,
        residual=detail,
    )


def run_check(spec: CheckSpec) -> list[VerificationReport]:
    lo, hi = spec.range
    if lo > hi:
        raise ValueError(f"empty range {lo}..{hi}")
    if spec.power < 1:
        raise ValueError("power must be >= 1")
    out = []
    for n in range(lo, hi + 1):
        t0 = time.perf_counter()
        try:
            base = evaluate(spec.modulus, n)
        except EvalError as exc:
            out.append(_failure(n, "invalid_modulus", t0, str(exc)))
            continue
        if not base.is_polynomial() or base.num.degree < 1 or base.num.lc != 1:
            out.append(_failure(n, "invalid_modulus", t0, str(base)))
            continue
        try:
            lhs, rhs = evaluate(spec.lhs, n), evaluate(spec.rhs, n)
        except EvalError as exc:
            out.append(_failure(n, "evaluation_error", t0, str(exc)))
            continue
        res = congruent(lhs, rhs, Modulus(base.num, spec.power))
        r = res.residual
        out.append(
            VerificationReport(
                statement="adhoc",
                params={"n": n},
                holds=res.holds,
                reason=res.reason.value,
                residual_degree=None if r is None or r.is_zero() else r.degree,
                elapsed=time.perf_counter() - t0,
                residual=None if r is None else format_poly(r),
            )
        )
    return out
