"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, z, ..., z^(phi(N)-1) of
Q[x]/Phi_N(x), with integer coordinate numerators over a single positive
denominator.  Every constructor reduces modulo Phi_N, so representations
are canonical within a conductor; equality across conductors lifts both
sides to the lcm.  No floating point is used anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache


def euler_phi(n: int) -> int:
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def mobius(n: int) -> int:
    if n == 1:
        return 1
    result = 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def _poly_rem_monic(coeffs: list[int], mod: tuple[int, ...]) -> list[int]:
    """Remainder of an integer polynomial by a monic integer polynomial."""
    deg_mod = len(mod) - 1
    c = list(coeffs)
    for k in range(len(c) - 1, deg_mod - 1, -1):
        top = c[k]
        if top:
            c[k] = 0
            for j in range(deg_mod):
                c[k - deg_mod + j] -= top * mod[j]
    del c[deg_mod:]
    while len(c) < deg_mod:
        c.append(0)
    return c


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, ascending degree, monic of degree phi(n).

    Computed by dividing x^n - 1 by the product of Phi_d over proper
    divisors d of n; the division is exact over Z.
    """
    if n < 1:
        raise ValueError(f"conductor must be positive, got {n}")
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in divisors(n)[:-1]:
        phi_d = cyclotomic_polynomial(d)
        num = _poly_divexact_int(num, phi_d)
    return tuple(num)


def _poly_divexact_int(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Exact division of integer polynomials (monic divisor)."""
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        q = num[k]
        out[k - dd] = q
        if q:
            for j in range(dd + 1):
                num[k - dd + j] -= q * den[j]
    if any(num):
        raise ArithmeticError("polynomial division was not exact")
    return out


@lru_cache(maxsize=None)
def _trace_row(n: int) -> tuple[Fraction, ...]:
    """Normalized traces of basis powers: Tr(z^j) / phi(n) for j < phi(n).

    Tr(z^j) is the Ramanujan sum c_n(j) = mu(n/g) phi(n)/phi(n/g) with
    g = gcd(j, n); the phi(n)-normalization makes the value independent
    of the ambient conductor, which keeps hashes stable under lifting.
    """
    row = []
    for j in range(euler_phi(n)):
        g = math.gcd(j, n)
        row.append(Fraction(mobius(n // g), euler_phi(n // g)))
    return tuple(row)


class CyclotomicNumber:
    """An exact element of Q(zeta_N) in the power basis modulo Phi_N."""

    __slots__ = ("conductor", "_nums", "_den", "_hash")

    def __init__(self, conductor: int, nums, den: int = 1):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        phi = euler_phi(conductor)
        nums = list(nums)
        if len(nums) > phi:
            nums = _poly_rem_monic(nums, cyclotomic_polynomial(conductor))
        else:
            nums += [0] * (phi - len(nums))
        if den < 0:
            den = -den
            nums = [-a for a in nums]
        g = den
        for a in nums:
            g = math.gcd(g, a)
            if g == 1:
                break
        if g > 1:
            den //= g
            nums = [a // g for a in nums]
        self.conductor = conductor
        self._nums = tuple(nums)
        self._den = den
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_rational(q, conductor: int = 1) -> "CyclotomicNumber":
        q = Fraction(q)
        nums = [0] * euler_phi(conductor)
        nums[0] = q.numerator
        return CyclotomicNumber(conductor, nums, q.denominator)

    @staticmethod
    def zeta(conductor: int, power: int = 1) -> "CyclotomicNumber":
        """The root of unity zeta_N^power."""
        power %= conductor
        nums = [0] * (power + 1)
        nums[power] = 1
        return CyclotomicNumber(conductor, nums)

    # -- representation -----------------------------------------------

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self._den) for a in self._nums)

    def is_zero(self) -> bool:
        return not any(self._nums)

    def is_rational(self) -> bool:
        return not any(self._nums[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self._nums[0], self._den)

    def lift(self, conductor: int) -> "CyclotomicNumber":
        """Rewrite in Q(zeta_M) for a multiple M of the conductor."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor != 0:
            raise ValueError(f"{conductor} is not a multiple of {self.conductor}")
        step = conductor // self.conductor
        nums = [0] * ((len(self._nums) - 1) * step + 1)
        for j, a in enumerate(self._nums):
            nums[j * step] = a
        return CyclotomicNumber(conductor, nums, self._den)

    @staticmethod
    def common_conductor(a: "CyclotomicNumber", b: "CyclotomicNumber"):
        n = math.lcm(a.conductor, b.conductor)
        return a.lift(n), b.lift(n)

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(other, 1)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = CyclotomicNumber.common_conductor(self, other)
        den = math.lcm(a._den, b._den)
        ka, kb = den // a._den, den // b._den
        nums = [x * ka + y * kb for x, y in zip(a._nums, b._nums)]
        return CyclotomicNumber(a.conductor, nums, den)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.conductor, [-a for a in self._nums], self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = CyclotomicNumber.common_conductor(self, other)
        an, bn = a._nums, b._nums
        conv = [0] * (len(an) + len(bn) - 1)
        for i, x in enumerate(an):
            if x:
                for j, y in enumerate(bn):
                    if y:
                        conv[i + j] += x * y
        return CyclotomicNumber(a.conductor, conv, a._den * b._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CyclotomicNumber.from_rational(1, self.conductor)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conj(self) -> "CyclotomicNumber":
        """Complex conjugation, zeta_N -> zeta_N^(-1)."""
        n = self.conductor
        nums = [0] * n
        for j, a in enumerate(self._nums):
            nums[(-j) % n] += a
        return CyclotomicNumber(n, nums, self._den)

    def galois(self, k: int) -> "CyclotomicNumber":
        """The automorphism zeta_N -> zeta_N^k (k coprime to N)."""
        n = self.conductor
        if math.gcd(k, n) != 1:
            raise ValueError(f"{k} is not coprime to {n}")
        nums = [0] * n
        for j, a in enumerate(self._nums):
            nums[(j * k) % n] += a
        return CyclotomicNumber(n, nums, self._den)

    def inverse(self) -> "CyclotomicNumber":
        """Multiplicative inverse, by solving self * x = 1 over Q."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        if self.is_rational():
            q = self.as_fraction()
            return CyclotomicNumber.from_rational(1 / q, self.conductor)
        n = self.conductor
        phi = len(self._nums)
        # Column j of the multiplication-by-self matrix is self * z^j.
        cols = []
        for j in range(phi):
            shifted = [0] * j + list(self._nums)
            cols.append(_poly_rem_monic(shifted, cyclotomic_polynomial(n)))
        rows = [[Fraction(cols[j][i]) for j in range(phi)] for i in range(phi)]
        rhs = [Fraction(self._den if i == 0 else 0) for i in range(phi)]
        sol = _solve_linear(rows, rhs)
        den = math.lcm(*(f.denominator for f in sol))
        nums = [int(f * den) for f in sol]
        return CyclotomicNumber(n, nums, den)

    # -- comparisons ----------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.conductor == other.conductor:
            return self._nums == other._nums and self._den == other._den
        a, b = CyclotomicNumber.common_conductor(self, other)
        return a._nums == b._nums and a._den == b._den

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                t1 = Fraction(self._nums[0], self._den)
                t2 = t1 * t1
            else:
                t1 = self.normalized_trace()
                t2 = (self * self).normalized_trace()
            self._hash = hash((t1, t2))
        return self._hash

    def normalized_trace(self) -> Fraction:
        """Tr(self)/phi(N); invariant under conductor lifting."""
        row = _trace_row(self.conductor)
        total = sum((a * r for a, r in zip(self._nums, row)), Fraction(0))
        return total / self._den

    def __repr__(self):
        if self.is_rational():
            return f"Cyclo({Fraction(self._nums[0], self._den)})"
        terms = []
        for j, a in enumerate(self._nums):
            if a:
                coeff = Fraction(a, self._den)
                terms.append(f"{coeff}*z{self.conductor}^{j}" if j else f"{coeff}")
        return "Cyclo(" + " + ".join(terms) + ")"

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {
            "conductor": self.conductor,
            "coefficients": [
                [str(f.numerator), str(f.denominator)] for f in self.coefficients
            ],
        }

    @staticmethod
    def from_json(obj: dict) -> "CyclotomicNumber":
        n = int(obj["conductor"])
        coeffs = [Fraction(int(p), int(q)) for p, q in obj["coefficients"]]
        den = math.lcm(*(f.denominator for f in coeffs)) if coeffs else 1
        return CyclotomicNumber(n, [int(f * den) for f in coeffs], den)


def _solve_linear(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a square system by Gaussian elimination over Q."""
    n = len(rows)
    aug = [rows[i] + [rhs[i]] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("singular system")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [v - factor * w for v, w in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]
