"""Exact arithmetic: arbitrary-precision rationals and cyclotomic numbers.

Rationals are ``fractions.Fraction`` (always reduced, positive denominator).
A :class:`Cyclotomic` is an element of the field generated by an n-th root of
unity, stored on the power basis 1, z, ..., z^(phi(n)-1) after reduction
modulo the n-th cyclotomic polynomial, with the conductor minimized.  Two
elements are equal exactly when their canonical forms coincide, so values are
safe to use as dict keys, and the golden ratio built from sqrt(5) prints over
the 5th roots of unity rather than some larger field.
"""

from __future__ import annotations

import cmath
import re
from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi needs n >= 1")
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


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, constant first.

    Computed by dividing x^n - 1 by the product of the lower cyclotomic
    polynomials; exact integer polynomial division throughout.
    """
    if n < 1:
        raise ValueError("conductor must be positive")
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in _divisors(n):
        if d == n:
            continue
        num = _poly_divide_exact(num, cyclotomic_polynomial(d))
    return tuple(num)


def _poly_divide_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        q, r = divmod(c, den[dd])
        if r:
            raise ArithmeticError("non-exact polynomial division")
        out[i - dd] = q
        for j, dc in enumerate(den):
            num[i - dd + j] -= q * dc
    if any(num[: dd]):
        raise ArithmeticError("non-exact polynomial division")
    return out


def _reduce_mod_cyclotomic(coeffs: dict[int, Fraction], n: int) -> list[Fraction]:
    """Reduce sum of c_e * z^e (exponents mod n) to the degree-phi(n) basis."""
    phi = euler_phi(n)
    modpoly = cyclotomic_polynomial(n)
    dense = [_ZERO] * n
    for e, c in coeffs.items():
        dense[e % n] += c
    # z^k for k >= phi rewritten via the monic relation z^phi = -(lower terms)
    for k in range(n - 1, phi - 1, -1):
        c = dense[k]
        if c == 0:
            continue
        dense[k] = _ZERO
        for j in range(phi):
            dense[k - phi + j] -= c * modpoly[j]
    return dense[:phi]


class Cyclotomic:
    """An exact cyclotomic number in canonical form."""

    __slots__ = ("_n", "_coeffs")

    def __init__(self, conductor: int, coeffs_by_power=None):
        """Build from a conductor and a {exponent: rational} mapping.

        Exponents are arbitrary integers (reduced mod the conductor); the
        result is reduced to the power basis and the conductor is minimized.
        """
        if conductor < 1:
            raise ValueError("conductor must be a positive integer")
        mapping: dict[int, Fraction] = {}
        if coeffs_by_power:
            items = coeffs_by_power.items() if isinstance(coeffs_by_power, dict) else coeffs_by_power
            for e, c in items:
                c = Fraction(c)
                if c:
                    mapping[e % conductor] = mapping.get(e % conductor, _ZERO) + c
        reduced = _reduce_mod_cyclotomic(mapping, conductor)
        n, reduced = _minimize_conductor(conductor, reduced)
        self._n = n
        self._coeffs = tuple(reduced)

    @classmethod
    def _raw(cls, n: int, coeffs: tuple[Fraction, ...]) -> "Cyclotomic":
        obj = object.__new__(cls)
        obj._n = n
        obj._coeffs = coeffs
        return obj

    @classmethod
    def from_rational(cls, value) -> "Cyclotomic":
        return cls._raw(1, (Fraction(value),))

    @classmethod
    def zeta(cls, n: int, power: int = 1) -> "Cyclotomic":
        return cls(n, {power: _ONE})

    @property
    def conductor(self) -> int:
        return self._n

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def is_zero(self) -> bool:
        return self._n == 1 and self._coeffs[0] == 0

    def is_rational(self) -> bool:
        return self._n == 1

    def rational_value(self) -> Fraction:
        if self._n != 1:
            raise ValueError(f"{self} is irrational")
        return self._coeffs[0]

    def is_integer(self) -> bool:
        return self._n == 1 and self._coeffs[0].denominator == 1

    def _lift_coeffs(self, m: int) -> dict[int, Fraction]:
        """Coefficients of self as exponent map in the m-th roots, n | m."""
        step = m // self._n
        return {k * step: c for k, c in enumerate(self._coeffs) if c}

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self._n == other._n:
            if self._n == 1:
                return Cyclotomic._raw(1, (self._coeffs[0] + other._coeffs[0],))
            merged = dict(enumerate(self._coeffs))
            for k, c in enumerate(other._coeffs):
                merged[k] = merged.get(k, _ZERO) + c
            return Cyclotomic(self._n, merged)
        m = self._n * other._n // gcd(self._n, other._n)
        merged = self._lift_coeffs(m)
        for e, c in other._lift_coeffs(m).items():
            merged[e] = merged.get(e, _ZERO) + c
        return Cyclotomic(m, merged)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self._n, tuple(-c for c in self._coeffs))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self._n == 1:
            c = self._coeffs[0]
            if c == 1:
                return other
            return Cyclotomic(other._n, {k: c * v for k, v in enumerate(other._coeffs)})
        if other._n == 1:
            return other * self
        m = self._n * other._n // gcd(self._n, other._n)
        a = self._lift_coeffs(m)
        b = other._lift_coeffs(m)
        prod: dict[int, Fraction] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = (ea + eb) % m
                prod[e] = prod.get(e, _ZERO) + ca * cb
        return Cyclotomic(m, prod)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.from_rational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via the product of Galois conjugates."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic")
        if self._n == 1:
            return Cyclotomic._raw(1, (1 / self._coeffs[0],))
        cofactor = Cyclotomic.from_rational(1)
        for t in range(2, self._n + 1):
            if gcd(t, self._n) == 1:
                cofactor = cofactor * self.galois(t)
        norm = (self * cofactor).rational_value()
        return cofactor * (1 / norm)

    def galois(self, t: int) -> "Cyclotomic":
        """Image under the automorphism sending each n-th root z to z^t."""
        if gcd(t, self._n) != 1:
            raise ValueError("galois exponent must be coprime to the conductor")
        if self._n == 1:
            return self
        return Cyclotomic(self._n, {k * t: c for k, c in enumerate(self._coeffs) if c})

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation: each root of unity goes to its inverse."""
        return self.galois(self._n - 1) if self._n > 1 else self

    def to_complex(self) -> complex:
        """Embedding with z = exp(2*pi*i/n), computed at high precision."""
        if self._n == 1:
            return complex(self._coeffs[0])
        with mpmath.workdps(40):
            acc = mpmath.mpc(0)
            for k, c in enumerate(self._coeffs):
                if c:
                    acc += mpmath.mpf(c.numerator) / c.denominator * mpmath.e ** (
                        2j * mpmath.pi * k / self._n
                    )
            return complex(acc)

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self._n == other._n and self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._n == 1 and self._coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self._n == 1:
            return hash(self._coeffs[0])
        return hash((self._n, self._coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Cyclotomic({str(self)!r})"

    def __str__(self):
        return render_cyclotomic(self)


def _coerce(value):
    if isinstance(value, Cyclotomic):
        return value
    if isinstance(value, (int, Fraction)):
        return Cyclotomic._raw(1, (Fraction(value),))
    return NotImplemented


def _minimize_conductor(n: int, coeffs: list[Fraction]) -> tuple[int, list[Fraction]]:
    """Descend to the smallest cyclotomic field containing the element."""
    if n == 1:
        return 1, coeffs
    if not any(coeffs[1:]):
        return 1, [coeffs[0]]
    for d in _divisors(n):
        if d == n:
            break
        if _fixed_by_subfield_group(n, d, coeffs):
            sub = _express_in_subfield(n, d, coeffs)
            if sub is not None:
                return d, sub
    return n, coeffs


def _fixed_by_subfield_group(n: int, d: int, coeffs: list[Fraction]) -> bool:
    as_map = {k: c for k, c in enumerate(coeffs) if c}
    for t in range(d + 1, n, d):
        # t runs over residues = 1 mod d; only units act
        if gcd(t, n) != 1:
            continue
        image = _reduce_mod_cyclotomic({(k * t): c for k, c in as_map.items()}, n)
        if image != coeffs:
            return False
    return True


@lru_cache(maxsize=None)
def _subfield_basis_matrix(n: int, d: int) -> tuple[tuple[Fraction, ...], ...]:
    """Columns: the powers of the d-th root written on the n-th power basis."""
    step = n // d
    cols = []
    for k in range(euler_phi(d)):
        cols.append(tuple(_reduce_mod_cyclotomic({k * step: _ONE}, n)))
    return tuple(cols)


def _express_in_subfield(n: int, d: int, coeffs: list[Fraction]):
    cols = _subfield_basis_matrix(n, d)
    phi_n, phi_d = euler_phi(n), euler_phi(d)
    # Gaussian elimination on the phi_n x phi_d system with target column.
    rows = [[cols[j][i] for j in range(phi_d)] + [coeffs[i]] for i in range(phi_n)]
    pivots = []
    row = 0
    for col in range(phi_d):
        pivot = next((r for r in range(row, phi_n) if rows[r][col] != 0), None)
        if pivot is None:
            return None
        rows[row], rows[pivot] = rows[pivot], rows[row]
        inv = 1 / rows[row][col]
        rows[row] = [x * inv for x in rows[row]]
        for r in range(phi_n):
            if r != row and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[row])]
        pivots.append(col)
        row += 1
    if any(r[-1] != 0 for r in rows[row:]):
        return None
    solution = [_ZERO] * phi_d
    for i, col in enumerate(pivots):
        solution[col] = rows[i][-1]
    return solution


def _format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def render_cyclotomic(value: Cyclotomic) -> str:
    """Render as a polynomial in z{n}, e.g. "-z5^2-z5^3" for the golden ratio."""
    if value.conductor == 1:
        return _format_rational(value.coefficients[0])
    n = value.conductor
    parts = []
    for k, c in enumerate(value.coefficients):
        if c == 0:
            continue
        if k == 0:
            body = _format_rational(c)
        else:
            z = f"z{n}" if k == 1 else f"z{n}^{k}"
            if c == 1:
                body = z
            elif c == -1:
                body = f"-{z}"
            else:
                body = f"{_format_rational(c)}*{z}"
        if parts and not body.startswith("-"):
            parts.append("+" + body)
        else:
            parts.append(body)
    return "".join(parts)


_TERM_RE = re.compile(
    r"""^(?P<sign>[+-]?)
        (?:
            (?P<coef>\d+(?:/\d+)?)(?:\*?z(?P<n1>\d+)(?:\^(?P<e1>\d+))?)?
          | z(?P<n2>\d+)(?:\^(?P<e2>\d+))?
        )$""",
    re.VERBOSE,
)


def parse_cyclotomic(text: str) -> Cyclotomic:
    """Exact inverse of :func:`render_cyclotomic` (also accepts redundant forms)."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty cyclotomic literal")
    terms = re.findall(r"[+-]?[^+-]+", s)
    if "".join(terms) != s:
        raise ValueError(f"cannot parse cyclotomic literal: {text!r}")
    conductor = 1
    powers: list[tuple[int, Fraction]] = []
    for term in terms:
        m = _TERM_RE.match(term)
        if not m:
            raise ValueError(f"cannot parse term {term!r} in {text!r}")
        sign = -1 if m.group("sign") == "-" else 1
        coef = Fraction(m.group("coef")) if m.group("coef") else _ONE
        nstr = m.group("n1") or m.group("n2")
        estr = m.group("e1") or m.group("e2")
        if nstr is None:
            powers.append((0, 1, sign * coef))
        else:
            n = int(nstr)
            if n < 1:
                raise ValueError(f"bad conductor in term {term!r}")
            conductor = conductor * n // gcd(conductor, n)
            powers.append((int(estr) if estr else 1, n, sign * coef))
    mapping: dict[int, Fraction] = {}
    for exp, n, c in powers:
        e = exp * (conductor // n)
        mapping[e] = mapping.get(e, _ZERO) + c
    return Cyclotomic(conductor, mapping)


def sqrt5() -> Cyclotomic:
    """The square root of 5 as the classical sum over 5th roots of unity."""
    return Cyclotomic(5, {1: 1, 2: -1, 3: -1, 4: 1})


def golden_ratio() -> Cyclotomic:
    """(1 + sqrt 5)/2."""
    return (Cyclotomic.from_rational(1) + sqrt5()) * Fraction(1, 2)


def golden_ratio_conjugate() -> Cyclotomic:
    """(1 - sqrt 5)/2."""
    return (Cyclotomic.from_rational(1) - sqrt5()) * Fraction(1, 2)
