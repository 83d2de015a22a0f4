"""Exact arithmetic in cyclotomic fields Q(zeta_e).

Values are stored as integer coordinate vectors over the power basis
1, z, ..., z^(phi(e)-1) of the e-th cyclotomic field, together with a
common positive denominator; reduction modulo the e-th cyclotomic
polynomial is canonical, so equality is plain coefficient equality.
No floating point enters any verdict.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


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


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Coefficients of Phi_e, low degree first, monic."""
    if e < 1:
        raise ValueError("order must be >= 1")
    poly = [-1] + [0] * (e - 1) + [1]          # x^e - 1
    for d in divisors(e):
        if d == e:
            continue
        poly = _polydiv_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    # den is monic; division is exact by construction
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def _context(e: int):
    """(phi(e), tuple of reduced coordinate vectors for z^j).

    The table covers j = 0 .. max(2*phi-2, e-1), enough for products of two
    reduced elements and for conjugation z -> z^(e-1).
    """
    phi_coeffs = cyclotomic_polynomial(e)
    phi = len(phi_coeffs) - 1
    span = max(2 * phi - 1, e)
    table: list[tuple[int, ...]] = []
    for j in range(span):
        if j < phi:
            vec = [0] * phi
            vec[j] = 1
        else:
            prev = table[j - 1]
            vec = [0] + list(prev[: phi - 1])
            top = prev[phi - 1]
            if top:
                for i in range(phi):
                    vec[i] -= top * phi_coeffs[i]
        table.append(tuple(vec))
    return phi, tuple(table)


def euler_phi(e: int) -> int:
    return _context(e)[0]


class Cyclotomic:
    """An element of Q(zeta_order); immutable and hashable."""

    __slots__ = ("order", "num", "den")

    def __init__(self, order: int, num, den: int = 1):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        phi = _context(order)[0]
        num = list(num)
        if len(num) != phi:
            raise ValueError(f"expected {phi} coordinates for order {order}")
        if den < 0:
            den = -den
            num = [-c for c in num]
        g = den
        for c in num:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            den //= g
            num = [c // g for c in num]
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "num", tuple(num))
        object.__setattr__(self, "den", den)

    def __setattr__(self, *args):
        raise AttributeError("Cyclotomic values are immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int = 1) -> "Cyclotomic":
        return cls(order, [0] * euler_phi(order))

    @classmethod
    def rational(cls, value, order: int = 1) -> "Cyclotomic":
        frac = Fraction(value)
        num = [0] * euler_phi(order)
        num[0] = frac.numerator
        return cls(order, num, frac.denominator)

    @classmethod
    def root_of_unity(cls, order: int, k: int = 1) -> "Cyclotomic":
        """zeta_order**k."""
        _, table = _context(order)
        return cls(order, table[k % order])

    # -- coercion ----------------------------------------------------------

    def _promote(self, order: int) -> "Cyclotomic":
        if self.order == order:
            return self
        if self.order != 1:
            raise ValueError(
                f"cannot mix cyclotomic orders {self.order} and {order}")
        num = [0] * euler_phi(order)
        num[0] = self.num[0]
        return Cyclotomic(order, num, self.den)

    def _pair(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.rational(other)
        if not isinstance(other, Cyclotomic):
            return None
        if self.order == other.order:
            return self, other
        if other.order == 1:
            return self, other._promote(self.order)
        if self.order == 1:
            return self._promote(other.order), other
        raise ValueError(
            f"cannot mix cyclotomic orders {self.order} and {other.order}")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        num = [x * b.den + y * a.den for x, y in zip(a.num, b.num)]
        return Cyclotomic(a.order, num, a.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, [-c for c in self.num], self.den)

    def __sub__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        num = [x * b.den - y * a.den for x, y in zip(a.num, b.num)]
        return Cyclotomic(a.order, num, a.den * b.den)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        phi, table = _context(a.order)
        conv = [0] * (2 * phi - 1)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        conv[i + j] += x * y
        out = list(conv[:phi])
        for j in range(phi, 2 * phi - 1):
            c = conv[j]
            if c:
                vec = table[j]
                for i in range(phi):
                    out[i] += c * vec[i]
        return Cyclotomic(a.order, out, a.den * b.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            other = Fraction(other)
        if isinstance(other, Fraction):
            if other == 0:
                raise ZeroDivisionError
            num = [c * other.denominator for c in self.num]
            return Cyclotomic(self.order, num, self.den * other.numerator)
        return NotImplemented

    def conj(self) -> "Cyclotomic":
        """Complex conjugation, the Galois map zeta -> zeta^(order-1)."""
        e = self.order
        phi, table = _context(e)
        out = [0] * phi
        for j, c in enumerate(self.num):
            if c:
                vec = table[(e - j) % e]
                for i in range(phi):
                    out[i] += c * vec[i]
        return Cyclotomic(e, out, self.den)

    def galois(self, k: int) -> "Cyclotomic":
        """The substitution zeta -> zeta^k (a field map when gcd(k, e) = 1)."""
        e = self.order
        phi, table = _context(e)
        out = [0] * phi
        for j, c in enumerate(self.num):
            if c:
                vec = table[(j * k) % e]
                for i in range(phi):
                    out[i] += c * vec[i]
        return Cyclotomic(e, out, self.den)

    # -- predicates and views ----------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.num)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.num[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    def as_integer(self) -> int:
        frac = self.as_fraction()
        if frac.denominator != 1:
            raise ValueError(f"{self!r} is not an integer")
        return frac.numerator

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def key(self):
        """Canonical, orderable key (used for deterministic row sorting)."""
        return (self.num, self.den)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.as_fraction() == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if self.order != other.order:
            if self.is_rational() and other.is_rational():
                return self.as_fraction() == other.as_fraction()
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.is_rational():
            return hash(self.as_fraction())
        return hash((self.order, self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.is_rational():
            return f"Cyc({self.as_fraction()})"
        terms = []
        for j, c in enumerate(self.num):
            if c:
                base = "1" if j == 0 else ("z" if j == 1 else f"z^{j}")
                terms.append(f"{c}*{base}" if j else str(c))
        body = " + ".join(terms).replace("+ -", "- ")
        if self.den != 1:
            body = f"({body})/{self.den}"
        return f"Cyc[{self.order}]({body})"
