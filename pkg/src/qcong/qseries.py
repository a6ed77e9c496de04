"""Named q-objects: q-integers, Gaussian binomials, cyclotomic polynomials,
trinomial and q-trinomial coefficients, Euler numbers.

All q-products are assembled from the binomial kernels in :mod:`qcong.poly`
(multiply by ``1 - q^a``, divide exactly by ``1 - q^b``).  Sums of q-binomial
products are walked term by term through their term ratio, which is again a
short product of such binomials, so no dense polynomial product is needed.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from math import comb

from .arith import divisors, mobius
from .poly import (
    IntPoly,
    add_into,
    div_one_minus_power,
    divexact,
    mul_one_minus_power,
)

__all__ = [
    "q_int",
    "gauss_binom",
    "cyclotomic",
    "cyclotomic_product",
    "trinomial",
    "q_trinomial",
    "euler_number",
    "step",
]


def step(c: list, up=(), down=(), shift: int = 0) -> list:
    """Multiply ``c`` by ``q^shift * prod(1 - q^a for a in up) / prod(1 - q^b for b in down)``.

    Divisions are exact or raise ``ValueError``; callers rely on that as a
    consistency check of the term ratio they pass in.
    """
    for a in up:
        c = mul_one_minus_power(c, a)
    for b in down:
        c = div_one_minus_power(c, b)
    if shift > 0:
        c = [0] * shift + c
    elif shift < 0:
        if any(c[:-shift]):
            raise ValueError("negative shift would drop nonzero terms")
        c = c[-shift:]
    return c


def q_int(n: int) -> IntPoly:
    """``[n]_q = 1 + q + ... + q^(n-1)``."""
    if n < 1:
        raise ValueError(f"q-integer needs n >= 1, got {n}")
    return IntPoly._wrap([1] * n)


def gauss_binom(n: int, k: int) -> IntPoly:
    """Gaussian binomial ``[n k]``; zero outside ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return IntPoly()
    return IntPoly._wrap(list(_gauss_binom(n, min(k, n - k))))


@lru_cache(maxsize=256)
def _gauss_binom(n: int, k: int) -> tuple:
    # after step i the list holds [n-k+i, i]
    c = [1]
    for i in range(1, k + 1):
        c = div_one_minus_power(mul_one_minus_power(c, n - k + i), i)
    return tuple(c)


_cyclo_memo: dict[int, IntPoly] = {1: IntPoly([-1, 1])}
_cyclo_lock = threading.Lock()


def cyclotomic(n: int) -> IntPoly:
    """``Phi_n(q)``: ``q^n - 1`` divided by ``Phi_d`` for every proper divisor ``d``."""
    if n < 1:
        raise ValueError(f"cyclotomic polynomial needs n >= 1, got {n}")
    p = _cyclo_memo.get(n)
    if p is not None:
        return p
    acc = IntPoly._wrap([-1] + [0] * (n - 1) + [1])
    for d in divisors(n)[:-1]:
        acc = divexact(acc, cyclotomic(d))
    with _cyclo_lock:
        return _cyclo_memo.setdefault(n, acc)


def cyclotomic_product(factors) -> IntPoly:
    """``prod Phi_d^e`` for a mapping ``{d: e}`` (or an iterable of ``d``), e >= 0.

    Uses ``Phi_d = prod_{e | d} (1 - q^e)^mu(d/e)`` for ``d >= 2`` and
    ``Phi_1 = -(1 - q)``; all multiplications are applied before the exact
    divisions so every intermediate stays a polynomial.
    """
    if not isinstance(factors, dict):
        factors = {d: 1 for d in factors}
    net: dict[int, int] = {}
    sign = 1
    for d, e in factors.items():
        if e < 0:
            raise ValueError("cyclotomic_product takes non-negative exponents")
        if not e:
            continue
        if d == 1 and e % 2:
            sign = -sign
        for t in divisors(d):
            mu = mobius(d // t)
            if mu:
                net[t] = net.get(t, 0) + mu * e
    c = [sign]
    for t, e in sorted(net.items()):
        for _ in range(e):
            c = mul_one_minus_power(c, t)
    for t, e in sorted(net.items()):
        for _ in range(-e):
            c = div_one_minus_power(c, t)
    return IntPoly._wrap(c)


def trinomial(n: int, j: int, method: str = "expand") -> int:
    """Coefficient of ``x^(j+n)`` in ``(1 + x + x^2)^n``."""
    if n < 0 or abs(j) > n:
        return 0
    if method == "expand":
        row = [1]
        for _ in range(n):
            nxt = [0] * (len(row) + 2)
            for i, c in enumerate(row):
                nxt[i] += c
                nxt[i + 1] += c
                nxt[i + 2] += c
            row = nxt
        return row[j + n]
    if method == "sum1":
        return sum(comb(n, k) * comb(n - k, k + j) for k in range(n + 1) if k + j >= 0)
    if method == "sum2":
        return sum(
            (-1) ** k * comb(n, k) * comb(2 * n - 2 * k, n - j - k)
            for k in range(n + 1)
            if n - j - k >= 0
        )
    raise ValueError(f"unknown trinomial method {method!r}")


def q_trinomial(n: int, j: int) -> IntPoly:
    """Andrews-Baxter q-trinomial ``sum_k q^(k(k+j)) [n k] [n-k k+j]``."""
    if n < 0 or abs(j) > n:
        return IntPoly()
    k = max(0, -j)
    # first nonzero term: [n |j|]
    term = list(_gauss_binom(n, min(abs(j), n - abs(j))))
    acc = list(term)
    offset = k * (k + j)
    while 2 * (k + 1) + j <= n:
        term = step(
            term,
            up=(n - 2 * k - j, n - 2 * k - j - 1),
            down=(k + 1, k + j + 1),
        )
        offset += 2 * k + 1 + j
        add_into(acc, term, offset)
        k += 1
    return IntPoly._wrap(acc)


@lru_cache(maxsize=None)
def euler_number(n: int) -> int:
    """Euler (secant) number ``E_n``: ``E_0 = 1``, odd ones vanish, signs alternate."""
    if n < 0:
        raise ValueError("Euler numbers are indexed from 0")
    if n % 2:
        return 0
    if n == 0:
        return 1
    m = n // 2
    return -sum(comb(n, 2 * i) * euler_number(2 * i) for i in range(m))
