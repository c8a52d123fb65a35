"""Exact arithmetic in the rational function field Q(q).

A :class:`Scalar` is stored as ``q**e * num(q) / den(q)`` where ``num`` and
``den`` are integer polynomials (coefficient tuples, lowest degree first)
with nonzero constant terms, coprime over Z[q], and ``den`` has positive
leading coefficient.  Pulling every power of q into ``e`` keeps Laurent
polynomials (by far the most common coefficients) free of gcd work.

The canonical form is unique, so ``==`` and ``hash`` are structural.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import flint

__all__ = [
    "Scalar",
    "QFieldError",
    "q",
    "q_integer",
    "q_factorial",
    "q_binomial",
    "specialize",
]


class QFieldError(ArithmeticError):
    pass


# --- dense integer polynomials, tuples low -> high -------------------------

def _trim(p):
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return p[:n] if n != len(p) else p


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(tuple(out))


def _pneg(a):
    return tuple(-c for c in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    if len(a) == 1:
        c = a[0]
        return tuple(c * x for x in b)
    if len(b) == 1:
        c = b[0]
        return tuple(c * x for x in a)
    if len(a) * len(b) > 48:
        return _from_flint(_to_flint(a) * _to_flint(b))
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _shift(a, k):
    return (0,) * k + a if k else a


def _strip_low(a):
    """Split ``a`` into (k, a') with a = q^k a' and a'(0) != 0."""
    k = 0
    while k < len(a) and a[k] == 0:
        k += 1
    return k, a[k:]


def _to_flint(a):
    return flint.fmpz_poly(list(a))


def _from_flint(p):
    return tuple(int(c) for c in p.coeffs())


def _gcd(a, b):
    return _from_flint(_to_flint(a).gcd(_to_flint(b)))


def _exquo(a, b):
    quo, rem = divmod(_to_flint(a), _to_flint(b))
    assert rem == 0
    return _from_flint(quo)


def _peval(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


class Scalar:
    """Element of Q(q); immutable."""

    __slots__ = ("e", "num", "den", "_hash")

    def __init__(self, value=0):
        if isinstance(value, Scalar):
            self.e, self.num, self.den = value.e, value.num, value.den
        elif isinstance(value, int):
            self.e, self.num, self.den = 0, ((value,) if value else ()), (1,)
        elif isinstance(value, Fraction):
            self.e, self.num, self.den = _canon(0, (value.numerator,), (value.denominator,))
        else:
            raise TypeError(f"cannot make a Scalar from {type(value).__name__}")
        self._hash = None

    @classmethod
    def _raw(cls, e, num, den):
        obj = object.__new__(cls)
        obj.e, obj.num, obj.den = e, num, den
        obj._hash = None
        return obj

    @classmethod
    def from_polys(cls, num, den=(1,), e=0):
        """Build ``q**e * num/den`` from coefficient sequences (low degree first)."""
        num, den = _trim(tuple(int(c) for c in num)), _trim(tuple(int(c) for c in den))
        if not den:
            raise ZeroDivisionError("zero denominator")
        return cls._raw(*_canon(e, num, den))

    @classmethod
    def q_power(cls, k):
        return cls._raw(k, (1,), (1,))

    # -- structure ---------------------------------------------------------

    def __bool__(self):
        return bool(self.num)

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.e == 0 and self.num == (1,) and self.den == (1,)

    def is_laurent(self):
        return self.den == (1,)

    def is_constant(self):
        """True for elements of Q (no q dependence)."""
        return not self.num or (self.e == 0 and len(self.num) == 1 and len(self.den) == 1)

    def to_fraction(self):
        if not self.is_constant():
            raise QFieldError(f"{self} depends on q")
        return Fraction(self.num[0], self.den[0]) if self.num else Fraction(0)

    def numerator(self):
        """Numerator as a polynomial in q (coefficients, low degree first)."""
        return _shift(self.num, self.e) if self.e > 0 else self.num

    def denominator(self):
        return _shift(self.den, -self.e) if self.e < 0 else self.den

    def size(self):
        # pivot heuristic: smaller is cheaper to divide by
        return len(self.num) + 2 * len(self.den) + abs(self.e) // 4

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.e == other.e and self.num == other.num and self.den == other.den
        if isinstance(other, int):
            if other == 0:
                return not self.num
            return self.e == 0 and self.den == (1,) and self.num == (other,)
        if isinstance(other, Fraction):
            return self == Scalar(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.to_fraction())
            else:
                self._hash = hash((self.e, self.num, self.den))
        return self._hash

    # -- arithmetic --------------------------------------------------------

    def __neg__(self):
        return Scalar._raw(self.e, _pneg(self.num), self.den)

    def __add__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                other = Scalar(other)
            else:
                return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        e1, e2 = self.e, other.e
        m = min(e1, e2)
        if self.den == other.den:
            num = _padd(_shift(self.num, e1 - m), _shift(other.num, e2 - m))
            den = self.den
        else:
            num = _padd(_pmul(_shift(self.num, e1 - m), other.den),
                        _pmul(_shift(other.num, e2 - m), self.den))
            den = _pmul(self.den, other.den)
        if not num:
            return ZERO
        k, num = _strip_low(num)
        e = m + k
        if den == (1,):
            return Scalar._raw(e, num, den)
        return Scalar._raw(*_canon(e, num, den))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                other = Scalar(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, int):
                if other == 0:
                    return ZERO
                return Scalar._raw(*_canon(self.e, _pmul((other,), self.num), self.den)) \
                    if self.den != (1,) else Scalar._raw(self.e, _pmul((other,), self.num), (1,))
            if isinstance(other, Fraction):
                other = Scalar(other)
            else:
                return NotImplemented
        if not self.num or not other.num:
            return ZERO
        e = self.e + other.e
        d1, d2 = self.den, other.den
        if d1 == (1,) and d2 == (1,):
            return Scalar._raw(e, _pmul(self.num, other.num), d1)
        n1, n2 = self.num, other.num
        if d2 != (1,):
            g = _gcd(n1, d2)
            if g != (1,):
                n1, d2 = _exquo(n1, g), _exquo(d2, g)
        if d1 != (1,):
            g = _gcd(n2, d1)
            if g != (1,):
                n2, d1 = _exquo(n2, g), _exquo(d1, g)
        num, den = _pmul(n1, n2), _pmul(d1, d2)
        if den[-1] < 0:
            num, den = _pneg(num), _pneg(den)
        return Scalar._raw(e, num, den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("Scalar division by zero")
        num, den = self.den, self.num
        if den[-1] < 0:
            num, den = _pneg(num), _pneg(den)
        return Scalar._raw(-self.e, num, den)

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                other = Scalar(other)
            else:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- text ----------------------------------------------------------------

    def __repr__(self):
        return f"Scalar({str(self)!r})"

    def __str__(self):
        num = self.numerator()
        den = self.denominator()
        if den == (1,):
            return _poly_str(num)
        ns = _poly_str(num)
        if len([c for c in num if c]) > 1:
            ns = f"({ns})"
        ds = _poly_str(den)
        if len([c for c in den if c]) > 1 or (len(den) > 1 and den[-1] != 1):
            ds = f"({ds})"
        return f"{ns}/{ds}"

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """Inverse of ``str``; accepts any expression in q, integers, + - * / ^ and parentheses."""
        from .expr import parse_scalar

        return parse_scalar(text)


def _canon(e, num, den):
    """Reduce ``q**e * num/den`` to canonical form."""
    num = _trim(num)
    if not num:
        return 0, (), (1,)
    k, num = _strip_low(num)
    e += k
    k, den = _strip_low(_trim(den))
    e -= k
    if len(den) > 1 or den[0] not in (1, -1):
        g = _gcd(num, den)
        if g != (1,) and g != (-1,):
            num, den = _exquo(num, g), _exquo(den, g)
    if den[-1] < 0:
        num, den = _pneg(num), _pneg(den)
    return e, num, den


def _poly_str(p):
    if not p:
        return "0"
    terms = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = "q" if k == 1 else f"q^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(terms)


ZERO = Scalar._raw(0, (), (1,))
ONE = Scalar._raw(0, (1,), (1,))
q = Scalar._raw(1, (1,), (1,))


@lru_cache(maxsize=None)
def q_integer(n: int) -> Scalar:
    """Balanced q-integer [n] = (q^n - q^-n)/(q - q^-1)."""
    if n == 0:
        return ZERO
    return (Scalar.q_power(n) - Scalar.q_power(-n)) / (q - q.inverse())


def q_factorial(n: int) -> Scalar:
    if n < 0:
        raise QFieldError("q_factorial needs n >= 0")
    out = ONE
    for k in range(1, n + 1):
        out = out * q_integer(k)
    return out


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> Scalar:
    """Balanced Gaussian binomial, built by the q-Pascal rule
    [n, k] = q^k [n-1, k] + q^(k-n) [n-1, k-1]; no division involved."""
    if not 0 <= k <= n:
        raise QFieldError(f"q_binomial({n}, {k}): need 0 <= k <= n")
    if k == 0 or k == n:
        return ONE
    return Scalar.q_power(k) * q_binomial(n - 1, k) + Scalar.q_power(k - n) * q_binomial(n - 1, k - 1)


def specialize(x, q0) -> Fraction:
    """Evaluate ``x`` at the rational point ``q = q0``."""
    q0 = Fraction(q0)
    if q0 in (-1, 0, 1):
        raise QFieldError(f"q = {q0} is excluded (q must avoid -1, 0, 1)")
    if not isinstance(x, Scalar):
        return Fraction(x)
    dval = _peval(x.den, q0)
    if dval == 0:
        bad = [f for f, _ in _to_flint(x.den).factor()[1] if _peval(_from_flint(f), q0) == 0]
        raise QFieldError(
            f"denominator factor {_poly_str(_from_flint(bad[0]))} of {x} vanishes at q = {q0}")
    return Fraction(_peval(x.num, q0)) / dval * q0 ** x.e
