"""Contraction subalgebras of the polynomial ring.

Contracting a finite subscheme of the affine line with vanishing ideal (g)
produces the subalgebra of polynomials of the form constant + multiple of g.
For g monic of degree e that subalgebra is generated by g, g*t, ..., g*t^(e-1);
each generator set ships with a per-degree dimension certificate computed by
exact row reduction (the slice of degree at most d has dimension d - e + 2 for
d >= e and 1 below e). Membership is decided degree by degree, and positive
answers carry an explicit polynomial expression in the generators that
re-expands to the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .algebra import P1Point, Poly
from .curve_model import Branch, Component, CurveConfig, Singularity
from .errors import CertificateFailure, DegreeOne, InfinityUnsupported, NotMonic


@dataclass(frozen=True)
class FiniteSubscheme:
    """Finite closed subscheme of the line: points with multiplicities."""

    points: tuple[tuple[P1Point, int], ...]

    def __post_init__(self):
        points = tuple((p, int(m)) for p, m in self.points)
        if not points:
            raise ValueError("a finite subscheme needs at least one point")
        seen = set()
        infinities = 0
        for point, mult in points:
            if mult < 1:
                raise ValueError("multiplicities must be positive")
            if point in seen:
                raise ValueError(f"repeated point {point}")
            seen.add(point)
            if point.is_infinity:
                infinities += 1
        if infinities > 1:
            raise ValueError("at most one point at infinity")
        object.__setattr__(self, "points", points)

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.points)

    @property
    def has_infinity(self) -> bool:
        return any(p.is_infinity for p, _ in self.points)


def finite_subscheme(points) -> FiniteSubscheme:
    """Build a subscheme from (point-like, multiplicity) pairs."""
    out = []
    for point, mult in points:
        if not isinstance(point, P1Point):
            point = P1Point.finite(point)
        out.append((point, int(mult)))
    return FiniteSubscheme(tuple(out))


def vanishing_ideal_generator(z: FiniteSubscheme) -> Poly:
    """Monic generator of the ideal of z: the product of (t - a)^mult."""
    if z.has_infinity:
        raise InfinityUnsupported("the subscheme must have affine support")
    g = Poly.one()
    for point, mult in z.points:
        g = g * Poly((-point.value, 1)) ** mult
    return g


# --------------------------------------------------------------------------
# Generator sets and their dimension certificate
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class GeneratorSet:
    generators: tuple[Poly, ...]
    degree_bound: int
    hilbert_checked_to: int


def _generator_products(generators: tuple[Poly, ...], max_degree: int) -> list[Poly]:
    """All products of generators (including the empty product) of bounded degree."""
    out: list[Poly] = []

    def rec(index: int, current: Poly) -> None:
        out.append(current)
        for k in range(index, len(generators)):
            extended = current * generators[k]
            if extended.degree <= max_degree:
                rec(k, extended)

    rec(0, Poly.one())
    return out


def _echelon_pivot_degrees(polys: list[Poly]) -> set[int]:
    """Degrees of the pivots of the row space of the coefficient matrix.

    Rows are processed in order; elimination is exact over the rationals.
    The returned set has one degree per dimension of the span.
    """
    pivots: dict[int, Poly] = {}
    for poly in polys:
        current = poly
        while not current.is_zero:
            d = current.degree
            if d in pivots:
                current = current - pivots[d] * (current.leading / pivots[d].leading)
            else:
                pivots[d] = current
                break
    return set(pivots)


def contraction_generators(g: Poly, hilbert_checked_to: int | None = None) -> GeneratorSet:
    """Generators g*t^k (k < deg g) of the subalgebra K + (g), certified.

    The certificate checks, for every degree d up to ``hilbert_checked_to``
    (default 3*deg(g) + 3), that products of generators span a space whose
    degree-at-most-d slice has the dimension of the full subalgebra slice.
    """
    if not g.is_monic:
        raise NotMonic(f"expected a monic polynomial, got {g}")
    e = g.degree
    if e < 1:
        raise ValueError("the generator must have degree at least 1")
    depth = hilbert_checked_to if hilbert_checked_to is not None else 3 * e + 3
    if depth < e:
        raise ValueError("hilbert_checked_to must be at least deg(g)")
    generators = tuple(g * Poly.monomial(k) for k in range(e))

    products = _generator_products(generators, depth)
    pivot_degrees = _echelon_pivot_degrees(products)
    for d in range(depth + 1):
        achieved = sum(1 for p in pivot_degrees if p <= d)
        expected = max(1, d - e + 2)
        if achieved != expected:
            raise CertificateFailure(
                f"degree {d}: span dimension {achieved}, expected {expected}"
            )
    return GeneratorSet(generators, degree_bound=2 * e - 1, hilbert_checked_to=depth)


# --------------------------------------------------------------------------
# Membership with certificates
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class MembershipCertificate:
    """f = constant + sum of coefficient * product of generators^exponents."""

    constant: Fraction
    terms: tuple[tuple[Fraction, tuple[int, ...]], ...]
    generators: tuple[Poly, ...]

    def expand(self) -> Poly:
        total = Poly.constant(self.constant)
        for coefficient, exponents in self.terms:
            product = Poly.one()
            for gen, exp in zip(self.generators, exponents):
                if exp:
                    product = product * gen ** exp
            total = total + product * coefficient
        return total


@dataclass(frozen=True)
class NotMember:
    """Negative membership answer with the degree where expression fails."""

    failing_degree: int


def subalgebra_membership(f: Poly, g: Poly) -> Union[MembershipCertificate, NotMember]:
    """Decide f in K + (g) and certify the answer.

    Positive answers are built by repeatedly cancelling the leading term of
    f - constant against a monic product of the generators of matching degree
    (for degree d >= e take g^(q-1) * (g*t^r) with d = q*e + r); the exponent
    recursion terminates because the degree strictly drops. The negative
    answer reports the degree at which no product of generators can reach the
    leading term.
    """
    if not g.is_monic:
        raise NotMonic(f"expected a monic polynomial, got {g}")
    e = g.degree
    if e < 1:
        raise ValueError("the generator must have degree at least 1")
    generators = tuple(g * Poly.monomial(k) for k in range(e))

    remainder = f % g
    if remainder.degree > 0:
        lowest = min(d for d in range(1, e) if remainder.coefficient(d) != 0)
        return NotMember(failing_degree=lowest)
    constant = remainder.coefficient(0)

    terms: list[tuple[Fraction, tuple[int, ...]]] = []
    current = f - Poly.constant(constant)
    while not current.is_zero:
        d = current.degree
        if d < e:
            # cannot happen for f - constant in (g); guarded for safety
            return NotMember(failing_degree=d)
        q, r = divmod(d, e)
        exponents = [0] * e
        if r == 0:
            exponents[0] = q
        else:
            exponents[0] = q - 1
            exponents[r] += 1
        product = Poly.one()
        for gen, exp in zip(generators, exponents):
            if exp:
                product = product * gen ** exp
        coefficient = current.leading / product.leading
        terms.append((coefficient, tuple(exponents)))
        current = current - product * coefficient
        if not current.is_zero and current.degree >= d:
            raise CertificateFailure("membership recursion failed to reduce degree")
    return MembershipCertificate(constant, tuple(terms), generators)


# --------------------------------------------------------------------------
# Contraction of subschemes of the projective line
# --------------------------------------------------------------------------

def contract_p1(z: FiniteSubscheme, name: str = "contracted") -> CurveConfig:
    """One projective line pinched along z: the curve obtained by contraction."""
    if z.degree < 2:
        raise DegreeOne("contracting a single reduced point is an isomorphism")
    branches = tuple(Branch("L", point, mult) for point, mult in z.points)
    return CurveConfig(
        name=name,
        components=(Component("L", genus=0),),
        singularities=(Singularity("s", branches),),
    )


@dataclass(frozen=True)
class ContractionResult:
    config: CurveConfig
    generators: GeneratorSet
    ideal_generator: Poly
    coordinate_change: str | None


def contract_with_generators(
    z: FiniteSubscheme, hilbert_checked_to: int | None = None
) -> ContractionResult:
    """Contraction datum plus subalgebra generators.

    A subscheme meeting infinity is first moved into the affine line by the
    substitution s = 1/(t - b), with b the smallest nonnegative integer that
    is not a point of z; the change of coordinates is recorded verbatim.
    """
    config = contract_p1(z)
    change = None
    affine = z
    if z.has_infinity:
        taken = {p.value for p, _ in z.points if not p.is_infinity}
        b = Fraction(0)
        while b in taken:
            b += 1
        moved = []
        for point, mult in z.points:
            if point.is_infinity:
                moved.append((P1Point.finite(0), mult))
            else:
                moved.append((P1Point.finite(1 / (point.value - b)), mult))
        affine = FiniteSubscheme(tuple(moved))
        change = f"s = 1/(t - {b})" if b != 0 else "s = 1/t"
    generator = vanishing_ideal_generator(affine)
    generators = contraction_generators(generator, hilbert_checked_to)
    return ContractionResult(config, generators, generator, change)
