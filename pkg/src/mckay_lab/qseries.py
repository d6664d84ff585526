"""Truncated Laurent series over exact rationals, and the classical modular
q-expansions built from them: Eisenstein series, the modular invariant j, the
discriminant cusp form with its tau coefficients, and series cube roots.

Every series carries an explicit truncation order; arithmetic never extends
precision beyond what the operands support.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

_ZERO = Fraction(0)
_ONE = Fraction(1)


class LaurentSeries:
    """Coefficients for q^valuation .. q^order, exact rationals.

    The leading stored coefficient is nonzero unless the series is zero to
    its truncation order, in which case no coefficients are stored at all.
    """

    __slots__ = ("_valuation", "_coeffs", "_order")

    def __init__(self, valuation: int, coeffs, order: int | None = None):
        coeffs = [Fraction(c) for c in coeffs]
        if order is None:
            order = valuation + len(coeffs) - 1
        if order < valuation + len(coeffs) - 1:
            raise ValueError("truncation order below the supplied coefficients")
        while len(coeffs) < order - valuation + 1:
            coeffs.append(_ZERO)
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            valuation += 1
        self._order = order
        if coeffs:
            self._valuation = valuation
            self._coeffs = tuple(coeffs)
        else:
            self._valuation = order + 1
            self._coeffs = ()

    @classmethod
    def zero(cls, order: int) -> "LaurentSeries":
        return cls(order + 1, [], order)

    @classmethod
    def one(cls, order: int) -> "LaurentSeries":
        return cls(0, [_ONE], order)

    @classmethod
    def q_power(cls, k: int, order: int) -> "LaurentSeries":
        return cls(k, [_ONE], order)

    @property
    def valuation(self) -> int:
        if self.is_zero():
            raise ValueError("zero series has no valuation")
        return self._valuation

    @property
    def order(self) -> int:
        return self._order

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, k: int) -> Fraction:
        if k > self._order:
            raise ValueError(f"coefficient of q^{k} beyond truncation order {self._order}")
        if k < self._valuation:
            return _ZERO
        return self._coeffs[k - self._valuation]

    def coefficients(self) -> list[Fraction]:
        """Stored coefficients from the valuation up to the truncation order."""
        return list(self._coeffs)

    def leading_coefficient(self) -> Fraction:
        if self.is_zero():
            raise ValueError("zero series has no leading coefficient")
        return self._coeffs[0]

    def truncate(self, order: int) -> "LaurentSeries":
        if order > self._order:
            raise ValueError("cannot extend precision by truncation")
        keep = [self.coefficient(k) for k in range(self._valuation, order + 1)]
        return LaurentSeries(self._valuation, keep, order)

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by q^k."""
        return LaurentSeries(self._valuation + k, self._coeffs, self._order + k)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentSeries(0, [Fraction(other)], self._order)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        order = min(self._order, other._order)
        lo = min(self._valuation, other._valuation, order + 1)
        coeffs = [self.coefficient(k) + other.coefficient(k) for k in range(lo, order + 1)]
        return LaurentSeries(lo, coeffs, order)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries(self._valuation, [-c for c in self._coeffs], self._order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentSeries(
                self._valuation, [Fraction(other) * c for c in self._coeffs], self._order
            )
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        # Result precision: the minimum order either operand can certify.
        va = self._valuation if not self.is_zero() else self._order + 1
        vb = other._valuation if not other.is_zero() else other._order + 1
        order = min(self._order + vb, other._order + va)
        if self.is_zero() or other.is_zero():
            return LaurentSeries.zero(order)
        lo = va + vb
        out = [_ZERO] * (order - lo + 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                k = i + j
                if k >= len(out):
                    break
                if b:
                    out[k] += a * b
        return LaurentSeries(lo, out, order)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        if self.is_zero():
            return LaurentSeries.one(self._order) if k == 0 else self
        rel = self._order - self._valuation
        if k == 0:
            return LaurentSeries.one(rel)
        base = LaurentSeries(0, self._coeffs, rel)
        result = LaurentSeries(0, [_ONE], rel)
        for _ in range(k):
            result = result * base
        return result.shift(self._valuation * k)

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (
            self._order == other._order
            and self._valuation == other._valuation
            and self._coeffs == other._coeffs
        )

    def __hash__(self):
        return hash((self._valuation, self._coeffs, self._order))

    def inverse(self) -> "LaurentSeries":
        if self.is_zero():
            raise ValueError("non-invertible series")
        a = self._coeffs
        rel = self._order - self._valuation
        lead = a[0]
        inv = [1 / lead]
        for k in range(1, rel + 1):
            acc = _ZERO
            for i in range(1, min(k, len(a) - 1) + 1):
                acc += a[i] * inv[k - i]
            inv.append(-acc / lead)
        return LaurentSeries(-self._valuation, inv, rel - self._valuation)

    def cube_root(self) -> "LaurentSeries":
        """Cube root of a series with constant term 1; exact coefficients."""
        if self.is_zero() or self._valuation != 0 or self._coeffs[0] != 1:
            raise ValueError("cube root undefined in series ring")
        n = self._order
        f = [_ONE] + [_ZERO] * n
        for k in range(1, n + 1):
            # [q^k] of (partial f)^3 with f[k] still zero; its true
            # contribution is 3*f[k], so solve linearly.
            acc = _ZERO
            for i in range(0, k + 1):
                if f[i] == 0:
                    continue
                for j in range(0, k - i + 1):
                    if f[j] == 0:
                        continue
                    acc += f[i] * f[j] * f[k - i - j]
            f[k] = (self.coefficient(k) - acc) / 3
        return LaurentSeries(0, f, n)

    def eval_at(self, tau: complex) -> "SeriesValue":
        """Numerical value at q = exp(2*pi*i*tau); requires Im(tau) > 0."""
        if tau.imag <= 0:
            raise ValueError("outside upper half-plane")
        q = cmath.exp(2j * cmath.pi * tau)
        total = 0j
        last = 0.0
        for k in range(self._valuation, self._order + 1):
            c = self.coefficient(k)
            if c == 0:
                continue
            term = complex(c) * q**k
            total += term
            last = abs(term)
        return SeriesValue(total, last)

    def __str__(self):
        if self.is_zero():
            return f"O(q^{self._order + 1})"
        parts = []
        for k in range(self._valuation, min(self._order, self._valuation + 7) + 1):
            c = self.coefficient(k)
            if c == 0:
                continue
            parts.append(f"{c}*q^{k}" if k else str(c))
        tail = f" + O(q^{self._order + 1})"
        return " + ".join(parts) + tail

    def __repr__(self):
        return f"LaurentSeries({self._valuation}, {list(self._coeffs)!r}, order={self._order})"


class SeriesValue(NamedTuple):
    value: complex
    truncation_bound: float


@lru_cache(maxsize=None)
def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m with B_1 = -1/2 (so B_2 = 1/6, B_4 = -1/30)."""
    if m < 0:
        raise ValueError("Bernoulli index must be non-negative")
    if m == 0:
        return _ONE
    # sum_{j=0}^{m} C(m+1, j) B_j = 0
    acc = _ZERO
    binom = 1
    for j in range(m):
        acc += binom * bernoulli(j)
        binom = binom * (m + 1 - j) // (j + 1)
    return -acc / (m + 1)


def divisor_power_sum(n: int, k: int) -> int:
    """sigma_k(n): sum of k-th powers of the divisors of n."""
    if n < 1:
        raise ValueError("divisor sums need n >= 1")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**k
            if d != n // d:
                total += (n // d) ** k
        d += 1
    return total


def eisenstein(weight: int, order: int) -> LaurentSeries:
    """Normalized Eisenstein series of the given even weight >= 4.

    Fourier expansion 1 - (2*weight/B_weight) * sum sigma_{weight-1}(n) q^n,
    the classical divisor-sum form of the normalized lattice sum.
    """
    if weight % 2 or weight < 4:
        raise ValueError("Eisenstein weight must be an even integer >= 4")
    if order < 0:
        raise ValueError("order must be >= 0")
    factor = Fraction(-2 * weight) / bernoulli(weight)
    coeffs = [_ONE] + [factor * divisor_power_sum(n, weight - 1) for n in range(1, order + 1)]
    return LaurentSeries(0, coeffs, order)


def discriminant(order: int) -> LaurentSeries:
    """The weight-12 cusp form (E4^3 - E6^2)/1728 = q - 24q^2 + 252q^3 - ..."""
    if order < 1:
        raise ValueError("order must be >= 1")
    e4 = eisenstein(4, order)
    e6 = eisenstein(6, order)
    return (e4**3 - e6**2) * Fraction(1, 1728)


def ramanujan_tau(n: int) -> int:
    """tau(n): the q^n coefficient of the discriminant cusp form."""
    c = discriminant(n).coefficient(n)
    if c.denominator != 1:
        raise ArithmeticError(f"tau({n}) came out non-integral: {c}")
    return c.numerator


def j_invariant(order: int) -> LaurentSeries:
    """q-expansion of the modular invariant to the requested order (>= -1).

    1728*E4^3 divided by the weight-12 cusp combination E4^3 - E6^2; the
    denominator normalization is the one that reproduces the classical
    integer expansion q^-1 + 744 + 196884q + ...
    """
    if order < -1:
        raise ValueError("order must be >= -1")
    work = order + 2
    e4cubed = eisenstein(4, work) ** 3
    delta = e4cubed - eisenstein(6, work) ** 2
    return (e4cubed * 1728) * delta.inverse()


def j_cube_root(order: int) -> LaurentSeries:
    """Cube root of q*j(q); its q coefficient is the Lie-group dimension 248."""
    if order < 0:
        raise ValueError("order must be >= 0")
    return j_invariant(order - 1).shift(1).cube_root()
