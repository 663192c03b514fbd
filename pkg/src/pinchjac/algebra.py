"""Exact arithmetic over the rationals: polynomials, points of the line, jets.

All values are built on `fractions.Fraction`, so every operation is exact and
arbitrary precision; no floating point occurs anywhere in the package.

A polynomial is a tuple of coefficients indexed by degree with a nonzero
leading coefficient (the zero polynomial is the empty tuple). A jet of order
n is the class of a function in a local ring modulo the n-th power of the
maximal ideal, stored as its n coefficients in the canonical local
coordinate: t - a at a finite point a, and 1/t at the point at infinity.
A jet is a unit exactly when its constant term is nonzero; multiplication
truncates at the common order, and mixing orders is an error rather than an
implicit truncation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import DenominatorVanishes, NonUnit, OrderMismatch, OrderNonpositive

FieldElem = Fraction

RatLike = Union[int, Fraction]


def rat(value: RatLike, denominator: int = 1) -> Fraction:
    """Coerce to an exact rational."""
    return Fraction(value, denominator)


def rational_str(value: Fraction) -> str:
    """Render a rational as 'p' or 'p/q' (q > 1 only)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# --------------------------------------------------------------------------
# Points of the projective line
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class P1Point:
    """A rational point of the projective line; ``value`` is None at infinity."""

    value: Fraction | None = None

    @classmethod
    def finite(cls, value: RatLike) -> "P1Point":
        return cls(Fraction(value))

    @classmethod
    def infinity(cls) -> "P1Point":
        return cls(None)

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    def __str__(self) -> str:
        if self.value is None:
            return "inf"
        return rational_str(self.value)


INFINITY = P1Point.infinity()


# --------------------------------------------------------------------------
# Polynomials
# --------------------------------------------------------------------------

def _strip(coeffs: Iterable[RatLike]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Poly:
    """Univariate polynomial over the rationals, coefficients by degree."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    # -- constructors

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def constant(cls, c: RatLike) -> "Poly":
        return cls((Fraction(c),))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coefficient: RatLike = 1) -> "Poly":
        return cls((0,) * degree + (Fraction(coefficient),))

    @classmethod
    def from_roots(cls, *roots: RatLike) -> "Poly":
        p = cls.one()
        for r in roots:
            p = p * cls((-Fraction(r), 1))
        return p

    # -- structure

    @property
    def degree(self) -> int:
        """Degree, with the convention deg 0 = -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return not self.is_zero and self.leading == 1

    def coefficient(self, degree: int) -> Fraction:
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]
        return Fraction(0)

    # -- ring operations

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: Union["Poly", RatLike]) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly(tuple(c * other for c in self.coeffs))
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, divisor: "Poly") -> tuple["Poly", "Poly"]:
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        quotient = [Fraction(0)] * max(len(self.coeffs) - len(divisor.coeffs) + 1, 0)
        rem = list(self.coeffs)
        d = divisor.degree
        lead = divisor.leading
        while len(rem) - 1 >= d and any(c != 0 for c in rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            k = len(rem) - 1 - d
            factor = rem[-1] / lead
            quotient[k] = factor
            for i, c in enumerate(divisor.coeffs):
                rem[k + i] -= factor * c
            rem.pop()
        return Poly(quotient), Poly(rem)

    def __floordiv__(self, divisor: "Poly") -> "Poly":
        return divmod(self, divisor)[0]

    def __mod__(self, divisor: "Poly") -> "Poly":
        return divmod(self, divisor)[1]

    def __call__(self, point: RatLike) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * Fraction(point) + c
        return acc

    def shifted(self, a: RatLike) -> "Poly":
        """Coefficients of p(s + a): the expansion of p around the point a."""
        a = Fraction(a)
        out = Poly.zero()
        s_plus_a = Poly((a, 1))
        for c in reversed(self.coeffs):
            out = out * s_plus_a + Poly.constant(c)
        return out

    def reversed_coeffs(self) -> "Poly":
        """t^deg * p(1/t): the polynomial read in the coordinate at infinity."""
        return Poly(tuple(reversed(self.coeffs)))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for deg in range(self.degree, -1, -1):
            c = self.coeffs[deg]
            if c == 0:
                continue
            if deg == 0:
                body = rational_str(abs(c))
            elif deg == 1:
                body = "t" if abs(c) == 1 else f"{rational_str(abs(c))}*t"
            else:
                body = f"t^{deg}" if abs(c) == 1 else f"{rational_str(abs(c))}*t^{deg}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


# --------------------------------------------------------------------------
# Jets
# --------------------------------------------------------------------------

def _series_mul(a: tuple[Fraction, ...], b: tuple[Fraction, ...], order: int) -> tuple[Fraction, ...]:
    out = [Fraction(0)] * order
    for i, ai in enumerate(a[:order]):
        if ai == 0:
            continue
        for j, bj in enumerate(b[: order - i]):
            out[i + j] += ai * bj
    return tuple(out)


@dataclass(frozen=True)
class Jet:
    """Truncated function germ: ``coeffs[k]`` is the coefficient of s^k, k < order."""

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < 1:
            raise OrderNonpositive(f"jet order must be >= 1, got {self.order}")
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != self.order:
            raise ValueError(f"expected {self.order} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def make(cls, order: int, coeffs: Iterable[RatLike] = ()) -> "Jet":
        out = [Fraction(c) for c in coeffs]
        if order < 1:
            raise OrderNonpositive(f"jet order must be >= 1, got {order}")
        if len(out) > order:
            raise ValueError("more coefficients than the jet order allows")
        out += [Fraction(0)] * (order - len(out))
        return cls(order, tuple(out))

    @classmethod
    def constant(cls, value: RatLike, order: int) -> "Jet":
        return cls.make(order, (Fraction(value),))

    @property
    def constant_term(self) -> Fraction:
        return self.coeffs[0]

    @property
    def is_unit(self) -> bool:
        return self.coeffs[0] != 0

    @property
    def is_constant(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def _check_order(self, other: "Jet") -> None:
        if self.order != other.order:
            raise OrderMismatch(f"jet orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "Jet") -> "Jet":
        self._check_order(other)
        return Jet(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Jet":
        return Jet(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Jet") -> "Jet":
        return self + (-other)

    def __mul__(self, other: Union["Jet", RatLike]) -> "Jet":
        if isinstance(other, (int, Fraction)):
            return Jet(self.order, tuple(c * other for c in self.coeffs))
        self._check_order(other)
        return Jet(self.order, _series_mul(self.coeffs, other.coeffs, self.order))

    __rmul__ = __mul__

    def inverse(self) -> "Jet":
        """Multiplicative inverse; exact at the truncation order."""
        if not self.is_unit:
            raise NonUnit("cannot invert a jet with zero constant term")
        inv0 = 1 / self.coeffs[0]
        out = [inv0] + [Fraction(0)] * (self.order - 1)
        for k in range(1, self.order):
            acc = Fraction(0)
            for j in range(1, k + 1):
                acc += self.coeffs[j] * out[k - j]
            out[k] = -inv0 * acc
        return Jet(self.order, tuple(out))

    def __pow__(self, n: int) -> "Jet":
        if n < 0:
            return self.inverse() ** (-n)
        result = Jet.constant(1, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __str__(self) -> str:
        return "(" + ", ".join(rational_str(c) for c in self.coeffs) + f") order {self.order}"


def jet_mul(a: Jet, b: Jet) -> Jet:
    """Product of two jets of equal order."""
    return a * b


def jet_inv(a: Jet) -> Jet:
    """Inverse of a unit jet."""
    return a.inverse()


def unit_log(u: Jet) -> Jet:
    """Truncated logarithm of u / u(0); a jet with zero constant term.

    Exact in characteristic zero: unit_log(a * b) == unit_log(a) + unit_log(b)
    at the common truncation order.
    """
    if not u.is_unit:
        raise NonUnit("unit_log requires a unit jet")
    w = (u * (1 / u.constant_term)) - Jet.constant(1, u.order)
    result = Jet.constant(0, u.order)
    power = Jet.constant(1, u.order)
    sign = 1
    for k in range(1, u.order):
        power = power * w
        result = result + power * Fraction(sign, k)
        sign = -sign
    return result


def unit_exp(v: Jet) -> Jet:
    """Truncated exponential of a jet with zero constant term."""
    if v.constant_term != 0:
        raise ValueError("unit_exp requires a jet with zero constant term")
    result = Jet.constant(1, v.order)
    power = Jet.constant(1, v.order)
    factorial = 1
    for k in range(1, v.order):
        power = power * v
        factorial *= k
        result = result + power * Fraction(1, factorial)
    return result


def jet_of_rational_function(numerator: Poly, denominator: Poly,
                             center: P1Point, order: int) -> Jet:
    """Jet of numerator/denominator at the center, in the canonical coordinate.

    At a finite point a the coordinate is s = t - a; at infinity it is
    s = 1/t. The denominator must not vanish at the center (for the center at
    infinity this means the function must not have a pole there).
    """
    if order < 1:
        raise OrderNonpositive(f"jet order must be >= 1, got {order}")
    if center.is_infinity:
        dn, dd = numerator.degree, denominator.degree
        if denominator.is_zero or (not numerator.is_zero and dn > dd):
            raise DenominatorVanishes("pole at infinity")
        if numerator.is_zero:
            return Jet.constant(0, order)
        num_local = numerator.reversed_coeffs()
        den_local = denominator.reversed_coeffs()
        valuation = dd - dn
    else:
        a = center.value
        num_local = numerator.shifted(a)
        den_local = denominator.shifted(a)
        if den_local.coefficient(0) == 0:
            raise DenominatorVanishes(f"denominator vanishes at {center}")
        valuation = 0
    den_jet = Jet.make(order, den_local.coeffs[:order])
    series = Jet.make(order, num_local.coeffs[:order]) * den_jet.inverse()
    if valuation == 0:
        return series
    if valuation >= order:
        return Jet.constant(0, order)
    shifted = (Fraction(0),) * valuation + series.coeffs[: order - valuation]
    return Jet(order, shifted)
