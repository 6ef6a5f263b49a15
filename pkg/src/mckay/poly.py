"""Exact univariate polynomials over Z, rational functions, and truncated
power series over Q.

Polynomials are immutable dense coefficient tuples in ascending degree with
no trailing zeros; the zero polynomial is the empty tuple.  Rational
functions are kept reduced (polynomial gcd and integer content cancelled,
positive leading denominator), so equality is structural.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence


class IntPolynomial:
    """Dense integer polynomial, coefficients ascending, canonical form."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero() -> "IntPolynomial":
        return IntPolynomial(())

    @staticmethod
    def one() -> "IntPolynomial":
        return IntPolynomial((1,))

    @staticmethod
    def monomial(degree: int, coeff: int = 1) -> "IntPolynomial":
        return IntPolynomial([0] * degree + [coeff])

    @staticmethod
    def one_minus_power(e: int) -> "IntPolynomial":
        """1 - t^e."""
        return IntPolynomial([1] + [0] * (e - 1) + [-1])

    @staticmethod
    def geometric(k: int) -> "IntPolynomial":
        """1 + t + ... + t^(k-1); the empty sum for k = 0."""
        return IntPolynomial([1] * k)

    # -- basic structure --------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self.coeffs])
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = IntPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divexact(self, other: "IntPolynomial") -> "IntPolynomial":
        """Exact polynomial division; raises if the remainder is nonzero."""
        q, r = _frac_divmod(self.coeffs, other.coeffs)
        if any(r):
            raise ArithmeticError(f"{self} is not divisible by {other}")
        out = []
        for f in q:
            if f.denominator != 1:
                raise ArithmeticError("quotient is not integral")
            out.append(f.numerator)
        return IntPolynomial(out)

    def substitute_power(self, k: int) -> "IntPolynomial":
        """The composition p(t^k)."""
        if k < 1:
            raise ValueError("power must be >= 1")
        out = [0] * (len(self.coeffs) * k)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return IntPolynomial(out)

    def reversed(self) -> "IntPolynomial":
        """Coefficients reversed: t^deg * p(1/t)."""
        return IntPolynomial(self.coeffs[::-1])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- comparisons and output -------------------------------------------

    def __eq__(self, other):
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            term = "1" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if k > 0 and abs(c) != 1:
                term = f"{abs(c)}*{term}"
            elif k == 0:
                term = str(abs(c))
            parts.append(("- " if c < 0 else "+ " if parts else "") + term)
        s = " ".join(parts)
        return s if not s.startswith("+ ") else s[2:]

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @staticmethod
    def from_json(obj: Sequence[str]) -> "IntPolynomial":
        return IntPolynomial([int(c) for c in obj])


def _coerce_poly(x):
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial((x,))
    return None


def _frac_divmod(num: Sequence[int | Fraction], den: Sequence[int | Fraction]):
    """Quotient and remainder over Q, on raw coefficient sequences."""
    if not any(den):
        raise ZeroDivisionError("polynomial division by zero")
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    while den and den[-1] == 0:
        den.pop()
    dd = len(den) - 1
    lead = den[-1]
    quot = [Fraction(0)] * max(len(num) - dd, 0)
    for k in range(len(num) - 1, dd - 1, -1):
        q = num[k] / lead
        if q:
            quot[k - dd] = q
            for j in range(dd + 1):
                num[k - dd + j] -= q * den[j]
    rem = num[:dd]
    while rem and rem[-1] == 0:
        rem.pop()
    return quot, rem


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Monic-free gcd: Euclid over Q, rescaled to a primitive integer
    polynomial with positive leading coefficient."""
    ra, rb = list(a.coeffs), list(b.coeffs)
    while any(rb):
        _, r = _frac_divmod(ra, rb)
        ra, rb = rb, r
    if not any(ra):
        return IntPolynomial.zero()
    den = math.lcm(*(Fraction(c).denominator for c in ra))
    ints = [int(Fraction(c) * den) for c in ra]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return IntPolynomial(ints)


class RationalFunction:
    """Quotient of integer polynomials, always in reduced canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = _coerce_poly(num)
        den = _coerce_poly(den)
        if den is None or num is None:
            raise TypeError("numerator/denominator must be polynomials or ints")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator polynomial")
        if num.is_zero():
            self.num = IntPolynomial.zero()
            self.den = IntPolynomial.one()
            return
        g = poly_gcd(num, den)
        if g.degree > 0 or g.leading() != 1:
            num = num.divexact(g)
            den = den.divexact(g)
        c = math.gcd(num.content(), den.content())
        if den.leading() < 0:
            c = -c
        if c != 1:
            num = IntPolynomial([x // c for x in num.coeffs])
            den = IntPolynomial([x // c for x in den.coeffs])
        self.num = num
        self.den = den

    @staticmethod
    def one() -> "RationalFunction":
        return RationalFunction(IntPolynomial.one())

    def is_polynomial(self) -> bool:
        return self.den == IntPolynomial.one()

    def as_polynomial(self) -> IntPolynomial:
        if not self.is_polynomial():
            raise ArithmeticError(f"{self} is not a polynomial")
        return self.num

    def __add__(self, other):
        other = _coerce_rf(other)
        if other is None:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce_rf(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce_rf(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_rf(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _coerce_rf(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RationalFunction(self.den, self.num) ** (-n)
        return RationalFunction(self.num**n, self.den**n)

    def substitute_power(self, k: int) -> "RationalFunction":
        return RationalFunction(
            self.num.substitute_power(k), self.den.substitute_power(k)
        )

    def __eq__(self, other):
        other = _coerce_rf(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction(({self.num}) / ({self.den}))"

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}


def _coerce_rf(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (IntPolynomial, int)):
        return RationalFunction(x)
    return None


def rational_eq(f: RationalFunction, g: RationalFunction) -> bool:
    """Equality of rational functions by cross-multiplication."""
    return f.num * g.den == g.num * f.den


class PowerSeries:
    """Truncated power series over Q: coefficients 0..order inclusive."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        c = [Fraction(x) for x in coeffs]
        if order is None:
            order = len(c) - 1
        if len(c) != order + 1:
            raise ValueError("coefficient count must equal order + 1")
        self.coeffs = tuple(c)
        self.order = order

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return PowerSeries(self.coeffs[: order + 1], order)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        order = min(self.order, other.order)
        return PowerSeries(
            [self.coeffs[k] + other.coeffs[k] for k in range(order + 1)], order
        )

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        """Cauchy product, truncated to the smaller order."""
        order = min(self.order, other.order)
        out = [Fraction(0)] * (order + 1)
        for i in range(order + 1):
            a = self.coeffs[i]
            if a:
                for j in range(order + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return PowerSeries(out, order)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.order))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise ValueError("series has non-integer coefficients")
        return tuple(c.numerator for c in self.coeffs)

    def __repr__(self):
        return f"PowerSeries({[str(c) for c in self.coeffs]})"


def series_expand(f: RationalFunction, order: int) -> PowerSeries:
    """Taylor coefficients of f at 0 up to the given order, exactly.

    The denominator must have a nonzero constant term.
    """
    den = f.den
    if den[0] == 0:
        raise ZeroDivisionError("denominator has zero constant term")
    d0 = Fraction(den[0])
    out: list[Fraction] = []
    for k in range(order + 1):
        acc = Fraction(f.num[k])
        for i in range(1, min(k, den.degree) + 1):
            acc -= den[i] * out[k - i]
        out.append(acc / d0)
    return PowerSeries(out, order)
