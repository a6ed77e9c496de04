"""Exact univariate polynomials over the integers and rational functions over Q.

An :class:`IntPoly` stores its coefficients in ascending order of powers of
``q`` as a tuple of Python ints with no trailing zeros; the zero polynomial is
the empty tuple.  A :class:`RatFun` is a fraction of two integer polynomials
kept in lowest terms with a positive leading coefficient in the denominator.

Besides the generic ring operations, this module exposes list-level helpers
for multiplying by and exactly dividing by binomials ``1 - q^a``.  Every
q-product in the package is built out of those, so they are the hot path.
"""

from __future__ import annotations

import math
from itertools import accumulate
from operator import add as _iadd, sub as _isub

NEG_INF = float("-inf")


def _strip(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


class IntPoly:
    """Dense polynomial in ``q`` with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        for x in c:
            if not isinstance(x, int):
                raise TypeError(f"coefficients must be int, got {type(x).__name__}")
        self.coeffs = tuple(_strip(c))

    @classmethod
    def _wrap(cls, c: list) -> "IntPoly":
        # trusted constructor: c is a list of ints, possibly with trailing zeros
        p = object.__new__(cls)
        p.coeffs = tuple(_strip(c))
        return p

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls._wrap([c])

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "IntPoly":
        if e < 0:
            raise ValueError("monomial exponent must be non-negative")
        return cls._wrap([0] * e + [c])

    @property
    def degree(self):
        """Degree, or ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def valuation(self) -> int:
        """Exponent of the lowest nonzero term (0 for the zero polynomial)."""
        for i, x in enumerate(self.coeffs):
            if x:
                return i
        return 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __neg__(self):
        return IntPoly._wrap([-x for x in self.coeffs])

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return sub(self, other)

    def __rsub__(self, other):
        if isinstance(other, int):
            return sub(IntPoly.constant(other), self)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly._wrap([x * other for x in self.coeffs]) if other else IntPoly()
        if not isinstance(other, IntPoly):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial; use RatFun")
        result = IntPoly.constant(1)
        base = self
        while e:
            if e & 1:
                result = mul(result, base)
            e >>= 1
            if e:
                base = mul(base, base)
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self):
        return format_poly(self)


def format_poly(p: IntPoly, var: str = "q") -> str:
    """Canonical text: ascending powers, explicit signs, e.g. ``-1 + 2*q + q^3``."""
    parts = []
    for i, c in enumerate(p.coeffs):
        if not c:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def add(a: IntPoly, b: IntPoly) -> IntPoly:
    x, y = a.coeffs, b.coeffs
    if len(x) < len(y):
        x, y = y, x
    c = list(x)
    c[: len(y)] = map(_iadd, x[: len(y)], y)
    return IntPoly._wrap(c)


def sub(a: IntPoly, b: IntPoly) -> IntPoly:
    return add(a, -b)


def mul(a: IntPoly, b: IntPoly) -> IntPoly:
    """Schoolbook product, looping over the factor with fewer nonzero terms."""
    x, y = a.coeffs, b.coeffs
    if not x or not y:
        return IntPoly()
    if len(x) - x.count(0) > len(y) - y.count(0):
        x, y = y, x
    c = [0] * (len(x) + len(y) - 1)
    ny = len(y)
    for i, xi in enumerate(x):
        if xi:
            seg = c[i : i + ny]
            c[i : i + ny] = [s + xi * yj for s, yj in zip(seg, y)]
    return IntPoly._wrap(c)


def divrem_monic(a: IntPoly, d: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Long division by a monic ``d``; returns ``(quot, rem)`` with ``deg rem < deg d``."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if d.lc != 1:
        raise ValueError(f"divisor must be monic, leading coefficient is {d.lc}")
    dd = len(d.coeffs) - 1
    r = list(a.coeffs)
    if len(r) <= dd:
        return IntPoly(), IntPoly._wrap(r)
    # only the nonzero lower terms of d take part; cyclotomic covers are sparse
    terms = [(j, -c) for j, c in enumerate(d.coeffs[:-1]) if c]
    quot = [0] * (len(r) - dd)
    for i in range(len(r) - 1, dd - 1, -1):
        c = r[i]
        if c:
            quot[i - dd] = c
            base = i - dd
            for j, nc in terms:
                r[base + j] += nc * c
    del r[dd:]
    return IntPoly._wrap(quot), IntPoly._wrap(r)


def content(a: IntPoly) -> int:
    """Non-negative gcd of the coefficients (0 for the zero polynomial)."""
    return math.gcd(*a.coeffs) if a.coeffs else 0


def primitive_part(a: IntPoly) -> IntPoly:
    """``a / content(a)`` with positive leading coefficient."""
    if a.is_zero():
        return a
    g = content(a)
    if a.lc < 0:
        g = -g
    if g == 1:
        return a
    return IntPoly._wrap([x // g for x in a.coeffs])


def pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """``lc(b)^(deg a - deg b + 1) * a`` reduced modulo ``b``."""
    if b.is_zero():
        raise ZeroDivisionError("pseudo-remainder by zero")
    db = len(b.coeffs) - 1
    lb = b.lc
    r = list(a.coeffs)
    if len(r) - 1 < db:
        return a
    pending = len(r) - db
    terms = [(j, c) for j, c in enumerate(b.coeffs[:-1]) if c]
    while r and len(r) - 1 >= db:
        c = r.pop()
        if lb != 1:
            r = [x * lb for x in r]
        base = len(r) - db
        for j, bj in terms:
            r[base + j] -= c * bj
        pending -= 1
        _strip(r)
    if pending and lb != 1:
        f = lb**pending
        r = [x * f for x in r]
    return IntPoly._wrap(r)


def gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Greatest common divisor via a primitive pseudo-remainder sequence.

    The result is the primitive gcd over Z[q] (positive leading coefficient)
    multiplied by the gcd of the integer contents.
    """
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if a.is_zero():
        a, b = b, a
    if b.is_zero():
        return a if a.lc > 0 else -a
    c = math.gcd(content(a), content(b))
    pa, pb = primitive_part(a), primitive_part(b)
    if pa.is_constant() or pb.is_constant():
        return IntPoly.constant(c)
    # strip common powers of q first; keeps the sequence short for Laurent-heavy inputs
    v = min(pa.valuation(), pb.valuation())
    if pa.valuation():
        pa = IntPoly._wrap(list(pa.coeffs[pa.valuation():]))
    if pb.valuation():
        pb = IntPoly._wrap(list(pb.coeffs[pb.valuation():]))
    if len(pa.coeffs) < len(pb.coeffs):
        pa, pb = pb, pa
    while not pb.is_zero() and not pb.is_constant():
        r = pseudo_rem(pa, pb)
        pa, pb = pb, primitive_part(r)
    g = pa if pb.is_zero() else IntPoly.constant(1)
    g = primitive_part(g)
    return IntPoly._wrap([0] * v + [x * c for x in g.coeffs])


def divexact(a: IntPoly, b: IntPoly) -> IntPoly:
    """Quotient ``a / b`` over Z[q]; raises ``ValueError`` unless the division is exact."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return a
    db = len(b.coeffs) - 1
    lb = b.lc
    r = list(a.coeffs)
    if len(r) - 1 < db:
        raise ValueError("inexact polynomial division")
    terms = [(j, c) for j, c in enumerate(b.coeffs[:-1]) if c]
    quot = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            qc, rem = divmod(c, lb)
            if rem:
                raise ValueError("inexact polynomial division")
            quot[i - db] = qc
            base = i - db
            for j, bj in terms:
                r[base + j] -= qc * bj
    if any(r[:db]):
        raise ValueError("inexact polynomial division")
    return IntPoly._wrap(quot)


def substitute_monomial(a: IntPoly, m: int) -> IntPoly:
    """Base change ``q -> q^m``."""
    if m < 1:
        raise ValueError("substitution exponent must be >= 1")
    if m == 1 or a.is_constant():
        return a
    c = [0] * ((len(a.coeffs) - 1) * m + 1)
    c[::m] = a.coeffs
    return IntPoly._wrap(c)


def eval_at_one(a: IntPoly) -> int:
    return sum(a.coeffs)


# -- binomial factor kernels ------------------------------------------------
#
# These work on plain lists (ascending coefficients, no normalization) so that
# long chains of q-product updates avoid re-wrapping at every step.


def mul_one_minus_power(c: list, a: int) -> list:
    """Coefficients of ``(1 - q^a) * c``."""
    if a < 1:
        raise ValueError("binomial exponent must be >= 1")
    r = c + [0] * a
    r[a:] = map(_isub, r[a:], c)
    return r


def div_one_minus_power(c: list, a: int) -> list:
    """Exact quotient ``c / (1 - q^a)``; raises ``ValueError`` if not exact."""
    if a < 1:
        raise ValueError("binomial exponent must be >= 1")
    c = _strip(list(c))
    if not c:
        return []
    n = len(c) - a
    if n <= 0:
        raise ValueError(f"polynomial not divisible by 1 - q^{a}")
    quot = c[:n]
    for r in range(min(a, n)):
        quot[r::a] = accumulate(quot[r::a])
    # coefficients n..n+a-1 of (1 - q^a) * quot are -quot[i - a]; they must match c
    start = n - a
    prev = quot[start:n] if start >= 0 else [0] * (-start) + quot
    if any(map(_iadd, c[n:], prev)):
        raise ValueError(f"polynomial not divisible by 1 - q^{a}")
    return quot


def shift_list(c: list, s: int) -> list:
    """Multiply by ``q^s`` (``s`` may be negative when the low terms vanish)."""
    if s >= 0:
        return [0] * s + c if s else c
    if any(c[:-s]):
        raise ValueError("negative shift would drop nonzero terms")
    return c[-s:]


def add_into(acc: list, c: list, offset: int = 0) -> list:
    """In-place ``acc += q^offset * c``; grows ``acc`` as needed and returns it."""
    end = offset + len(c)
    if end > len(acc):
        acc.extend([0] * (end - len(acc)))
    acc[offset:end] = map(_iadd, acc[offset:end], c)
    return acc


class RatFun:
    """Element of Q(q) held as a reduced fraction of two integer polynomials."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = IntPoly.constant(1) if den is None else _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _raw(cls, num: IntPoly, den: IntPoly) -> "RatFun":
        r = object.__new__(cls)
        r.num, r.den = num, den
        return r

    @classmethod
    def q(cls) -> "RatFun":
        return cls._raw(IntPoly.monomial(1), IntPoly.constant(1))

    def is_polynomial(self) -> bool:
        return self.den.coeffs == (1,)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, IntPoly)):
            other = RatFun(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(("RatFun", self.num.coeffs, self.den.coeffs))

    def __neg__(self):
        return RatFun._raw(-self.num, self.den)

    def __add__(self, other):
        other = _as_ratfun(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_ratfun(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_ratfun(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_ratfun(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatFun._raw(IntPoly(), IntPoly.constant(1))
        if self.is_polynomial() and other.is_polynomial():
            return RatFun._raw(self.num * other.num, self.den)
        # cross-cancel first so the final gcd works on smaller inputs
        g1 = gcd(self.num, other.den)
        g2 = gcd(other.num, self.den)
        num = divexact(self.num, g1) * divexact(other.num, g2)
        den = divexact(self.den, g2) * divexact(other.den, g1)
        return RatFun(num, den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfun(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return self * _reciprocal(other)

    def __rtruediv__(self, other):
        other = _as_ratfun(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, e: int):
        return ratfun_pow(self, e)

    def __repr__(self):
        return f"RatFun({self.num!r}, {self.den!r})"

    def __str__(self):
        return format_ratfun(self)


def _as_poly(x) -> IntPoly:
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly.constant(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as a polynomial")


def _as_ratfun(x):
    if isinstance(x, RatFun):
        return x
    if isinstance(x, (int, IntPoly)):
        return RatFun._raw(_as_poly(x), IntPoly.constant(1))
    return None


def _reciprocal(r: RatFun) -> RatFun:
    if r.num.lc < 0:
        return RatFun._raw(-r.den, -r.num)
    return RatFun._raw(r.den, r.num)


def _normalize(num: IntPoly, den: IntPoly) -> tuple[IntPoly, IntPoly]:
    if num.is_zero():
        return num, IntPoly.constant(1)
    if not den.is_constant():
        g = primitive_part(gcd(num, den))
        if not g.is_constant():
            num, den = divexact(num, g), divexact(den, g)
    c = math.gcd(content(num), content(den))
    if den.lc < 0:
        c = -c
    if c != 1:
        num = IntPoly._wrap([x // c for x in num.coeffs])
        den = IntPoly._wrap([x // c for x in den.coeffs])
    return num, den


def ratfun_make(num, den) -> RatFun:
    return RatFun(num, den)


def ratfun_add(a: RatFun, b: RatFun) -> RatFun:
    return a + b


def ratfun_sub(a: RatFun, b: RatFun) -> RatFun:
    return a - b


def ratfun_mul(a: RatFun, b: RatFun) -> RatFun:
    return a * b


def ratfun_div(a: RatFun, b: RatFun) -> RatFun:
    return a / b


def ratfun_pow(r: RatFun, e: int) -> RatFun:
    if e < 0:
        if r.is_zero():
            raise ZeroDivisionError("negative power of zero")
        num, den = r.den, r.num
        e = -e
    else:
        num, den = r.num, r.den
    # powers of coprime polynomials stay coprime (and primitive contents stay coprime)
    num, den = num**e, den**e
    if den.lc < 0:
        num, den = -num, -den
    return RatFun._raw(num, den)


def format_ratfun(r: RatFun) -> str:
    """``(<num>)/(<den>)``; polynomials print as plain canonical text."""
    if r.is_polynomial():
        return format_poly(r.num)
    return f"({format_poly(r.num)})/({format_poly(r.den)})"
