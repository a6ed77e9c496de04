"""Congruences of rational functions modulo powers of a monic polynomial.

``A ≡ B (mod P)`` means: write ``A - B`` in lowest terms as ``N / D``; then
``P`` divides ``N`` and ``D`` is coprime to ``P``.  The verdict is reported as
a :class:`CongruenceResult` rather than raised, since an ill-posed congruence
(denominator sharing a factor with the modulus) is a legitimate outcome.

:class:`CycloFraction` carries fractions whose denominator is a positive
integer times a power of ``q`` times a product of cyclotomic polynomials.
Every denominator in the q-binomial world has that shape, and keeping it
factored lets us put a fraction in lowest terms with cheap divisibility tests
instead of a gcd of two large polynomials.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .arith import divisors, mobius
from .poly import (
    IntPoly,
    RatFun,
    add_into,
    content,
    div_one_minus_power,
    divrem_monic,
    format_poly,
    gcd,
    mul_one_minus_power,
)
from .qseries import cyclotomic, cyclotomic_product


@dataclass(frozen=True)
class Modulus:
    """``base ** power`` for a monic ``base``.

    ``period`` is optional: when set, ``base`` must divide ``q^period - 1``,
    and reductions first fold modulo ``(q^period - 1)^power``, which takes
    time linear in the degree of the input.
    """

    base: IntPoly
    power: int = 1
    period: int | None = None
    expanded: IntPoly = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.base.is_zero() or self.base.degree < 1:
            raise ValueError("modulus base must have degree >= 1")
        if self.base.lc != 1:
            raise ValueError("modulus base must be monic")
        if self.power < 1:
            raise ValueError("modulus power must be >= 1")
        if self.period is not None:
            cover = IntPoly.monomial(self.period) - 1
            if not divrem_monic(cover, self.base)[1].is_zero():
                raise ValueError(f"base does not divide q^{self.period} - 1")
        object.__setattr__(self, "expanded", self.base**self.power)

    @classmethod
    def cyclotomic(cls, n: int, power: int = 1) -> "Modulus":
        return _cyclotomic_modulus(n, power)


@lru_cache(maxsize=128)
def _cyclotomic_modulus(n: int, power: int) -> Modulus:
    return Modulus(cyclotomic(n), power, period=n)


class Reason(str, enum.Enum):
    DIVISIBLE = "divisible"
    NONZERO_REMAINDER = "nonzero_remainder"
    DENOMINATOR_NOT_COPRIME = "denominator_not_coprime"


@dataclass(frozen=True)
class CongruenceResult:
    holds: bool
    reason: Reason
    # None when the congruence is ill-posed (denominator not coprime)
    residual: IntPoly | None

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "reason": self.reason.value,
            "residual": None if self.residual is None else format_poly(self.residual),
        }


def _fold_periodic(c: list, period: int, power: int) -> list:
    # q^(period*j) = x^j = sum_t C(j, t) (x - 1)^t  modulo (x - 1)^power
    if len(c) <= period * power:
        return c
    nblocks = -(-len(c) // period)
    out: list = []
    for t in range(power):
        weights = [comb(j, t) for j in range(nblocks)]
        s = [
            sum(map(int.__mul__, weights, c[i::period])) if t else sum(c[i::period])
            for i in range(period)
        ]
        # times (q^period - 1)^t
        for _ in range(t):
            s = [-x for x in mul_one_minus_power(s, period)]
        add_into(out, s)
    return out


def reduce_mod(a: IntPoly, m: Modulus) -> IntPoly:
    """Remainder of ``a`` modulo ``m.expanded``."""
    if m.period is not None:
        a = IntPoly._wrap(_fold_periodic(list(a.coeffs), m.period, m.power))
    return divrem_monic(a, m.expanded)[1]


def is_coprime(a: IntPoly, base: IntPoly) -> bool:
    if a.is_zero():
        raise ValueError("is_coprime needs a nonzero polynomial")
    return gcd(a, base).degree == 0


def congruent(a, b, m: Modulus) -> CongruenceResult:
    """Decide ``a ≡ b (mod m)`` for rational functions (ints/IntPoly accepted)."""
    d = _as_rat(a) - _as_rat(b)
    if not d.is_polynomial() and not is_coprime(d.den, m.base):
        return CongruenceResult(False, Reason.DENOMINATOR_NOT_COPRIME, None)
    return _verdict(reduce_mod(d.num, m))


def _verdict(residual: IntPoly) -> CongruenceResult:
    if residual.is_zero():
        return CongruenceResult(True, Reason.DIVISIBLE, residual)
    return CongruenceResult(False, Reason.NONZERO_REMAINDER, residual)


def _as_rat(x) -> RatFun:
    return x if isinstance(x, RatFun) else RatFun(x)


# -- fractions with cyclotomic denominators ---------------------------------


def _mobius_parts(d: int) -> tuple[list[int], list[int], int]:
    """Exponents ``t`` with ``(1 - q^t)`` in the numerator/denominator of ``Phi_d``, and a sign."""
    if d == 1:
        return [1], [], -1
    up, down = [], []
    for t in divisors(d):
        mu = mobius(d // t)
        if mu == 1:
            up.append(t)
        elif mu == -1:
            down.append(t)
    return up, down, 1


def mul_cyclotomic(c: list, d: int) -> list:
    """``c * Phi_d`` via binomial kernels."""
    up, down, sign = _mobius_parts(d)
    for t in up:
        c = mul_one_minus_power(c, t)
    for t in down:
        c = div_one_minus_power(c, t)
    return [-x for x in c] if sign < 0 else c


def div_cyclotomic(c: list, d: int) -> list:
    """Exact ``c / Phi_d``; raises ``ValueError`` if ``Phi_d`` does not divide ``c``."""
    up, down, sign = _mobius_parts(d)
    for t in down:
        c = mul_one_minus_power(c, t)
    for t in up:
        c = div_one_minus_power(c, t)
    return [-x for x in c] if sign < 0 else c


def divisible_by_cyclotomic(c: list, d: int) -> bool:
    # fold modulo q^d - 1 first, then a short division by Phi_d
    folded = [sum(c[i::d]) for i in range(min(d, len(c)))]
    return divrem_monic(IntPoly._wrap(folded), cyclotomic(d))[1].is_zero()


class CycloFraction:
    """``num / (const * q^shift * prod Phi_d^e)`` with ``const > 0``.

    Not kept reduced; call :meth:`reduced` for lowest terms.
    """

    __slots__ = ("num", "const", "shift", "factors")

    def __init__(self, num, const: int = 1, shift: int = 0, factors=None):
        if isinstance(num, IntPoly):
            num = list(num.coeffs)
        elif isinstance(num, int):
            num = [num]
        if const == 0:
            raise ZeroDivisionError("zero denominator")
        if const < 0:
            num, const = [-x for x in num], -const
        self.num = list(num)
        self.const = const
        self.shift = shift
        self.factors = {d: e for d, e in (factors or {}).items() if e}

    @classmethod
    def one_minus_power(cls, a: int, numerator=1) -> "CycloFraction":
        """``numerator / (1 - q^a)``."""
        num = IntPoly.constant(numerator) if isinstance(numerator, int) else numerator
        return cls(-num, factors={d: 1 for d in divisors(a)})

    def __neg__(self):
        return CycloFraction([-x for x in self.num], self.const, self.shift, self.factors)

    def __add__(self, other):
        if isinstance(other, (int, IntPoly)):
            other = CycloFraction(other)
        lcm_f = dict(self.factors)
        for d, e in other.factors.items():
            lcm_f[d] = max(lcm_f.get(d, 0), e)
        shift = max(self.shift, other.shift)
        const = math.lcm(self.const, other.const)
        acc: list = []
        for f in (self, other):
            c = [x * (const // f.const) for x in f.num]
            for d, e in lcm_f.items():
                for _ in range(e - f.factors.get(d, 0)):
                    c = mul_cyclotomic(c, d)
            add_into(acc, c, shift - f.shift)
        return CycloFraction(acc, const, shift, lcm_f)

    def __sub__(self, other):
        if isinstance(other, (int, IntPoly)):
            other = CycloFraction(other)
        return self + (-other)

    def reduced(self) -> "CycloFraction":
        num = list(self.num)
        while num and not num[-1]:
            num.pop()
        if not num:
            return CycloFraction([], 1, 0, {})
        v = 0
        while v < len(num) and not num[v]:
            v += 1
        s = min(v, self.shift)
        num = num[s:]
        factors = {}
        for d, e in sorted(self.factors.items()):
            while e and divisible_by_cyclotomic(num, d):
                num = div_cyclotomic(num, d)
                e -= 1
            if e:
                factors[d] = e
        g = math.gcd(content(IntPoly._wrap(num)), self.const)
        if g > 1:
            num = [x // g for x in num]
        return CycloFraction(num, self.const // g, self.shift - s, factors)

    def numerator(self) -> IntPoly:
        return IntPoly._wrap(list(self.num))

    def denominator(self) -> IntPoly:
        c = cyclotomic_product(self.factors)
        return IntPoly._wrap([0] * self.shift + [x * self.const for x in c.coeffs])

    def to_ratfun(self) -> RatFun:
        return RatFun(self.numerator(), self.denominator())

    def is_zero(self) -> bool:
        return not any(self.num)


def congruent_fraction(x: CycloFraction, m: Modulus) -> CongruenceResult:
    """``x ≡ 0 (mod m)`` with the same semantics as :func:`congruent`."""
    r = x.reduced()
    if r.is_zero():
        return _verdict(IntPoly())
    if r.shift and m.base.coeffs[0] == 0:
        return CongruenceResult(False, Reason.DENOMINATOR_NOT_COPRIME, None)
    for d in r.factors:
        if not is_coprime(cyclotomic(d), m.base):
            return CongruenceResult(False, Reason.DENOMINATOR_NOT_COPRIME, None)
    return _verdict(reduce_mod(r.numerator(), m))
