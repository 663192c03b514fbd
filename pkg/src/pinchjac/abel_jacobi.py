"""Abel-Jacobi maps and divisor classes in explicit Jacobian coordinates.

A smooth divisor of per-component degree zero determines, on each projective
line, a rational function with that divisor, unique up to a scalar: the
degree-balanced product of linear factors at the finite points (the point at
infinity never gets an explicit factor). The class of the divisor is the
reduction of the vector of jets of that function at all branches; the scalar
ambiguity lies in the reduction kernel, so the class is well defined.

The module also carries the two standard cubic parametrizations and an exact
collision probe for Abel-Jacobi maps over finite samples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Jet, P1Point, Poly, RatLike, jet_of_rational_function
from .curve_model import CurveConfig, is_smooth_point, require_valid
from .errors import (
    MissingBasepoint,
    NonzeroDegree,
    PointNotSmooth,
    PositiveGenusUnsupported,
    SingularPoint,
)
from .jacobian import JacElement, JacobianPresentation, class_reduce, jac_eq, unit_jet_vector


@dataclass(frozen=True)
class SmoothDivisor:
    """Formal sum of smooth points with integer coefficients."""

    entries: tuple[tuple[str, P1Point, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))

    @classmethod
    def of(cls, entries) -> "SmoothDivisor":
        out = []
        for component, point, coefficient in entries:
            if not isinstance(point, P1Point):
                point = P1Point.finite(point)
            out.append((component, point, int(coefficient)))
        return cls(tuple(out))

    def degree_by_component(self) -> dict[str, int]:
        degrees: dict[str, int] = {}
        for component, _, coefficient in self.entries:
            degrees[component] = degrees.get(component, 0) + coefficient
        return degrees

    def __add__(self, other: "SmoothDivisor") -> "SmoothDivisor":
        return SmoothDivisor(self.entries + other.entries)

    def __neg__(self) -> "SmoothDivisor":
        return SmoothDivisor(tuple((c, p, -k) for c, p, k in self.entries))


def _interpolating_function(points: list[tuple[P1Point, int]]) -> tuple[Poly, Poly]:
    """Numerator and denominator of the product of (t - a)^coefficient."""
    numerator = Poly.one()
    denominator = Poly.one()
    for point, coefficient in points:
        if point.is_infinity or coefficient == 0:
            continue
        factor = Poly((-point.value, 1)) ** abs(coefficient)
        if coefficient > 0:
            numerator = numerator * factor
        else:
            denominator = denominator * factor
    return numerator, denominator


def divisor_class(
    config: CurveConfig, presentation: JacobianPresentation, divisor: SmoothDivisor
) -> JacElement:
    """Class of a per-component-degree-zero divisor supported in the smooth locus."""
    require_valid(config)
    for component in config.components:
        if component.genus > 0:
            raise PositiveGenusUnsupported(
                f"component {component.id!r} has genus {component.genus}"
            )

    merged: dict[tuple[str, P1Point], int] = {}
    for component_id, point, coefficient in divisor.entries:
        config.component(component_id)
        merged[(component_id, point)] = merged.get((component_id, point), 0) + coefficient
    for (component_id, point), coefficient in merged.items():
        if coefficient != 0 and not is_smooth_point(config, component_id, point):
            raise PointNotSmooth(f"({component_id}, {point}) is a branch point")

    degrees = divisor.degree_by_component()
    for component_id, degree in degrees.items():
        if degree != 0:
            raise NonzeroDegree(
                f"divisor has degree {degree} on component {component_id!r}"
            )

    per_component: dict[str, list[tuple[P1Point, int]]] = {}
    for (component_id, point), coefficient in merged.items():
        if coefficient != 0:
            per_component.setdefault(component_id, []).append((point, coefficient))

    jets: dict[tuple[str, int], Jet] = {}
    for s in config.singularities:
        for i, b in enumerate(s.branches):
            points = per_component.get(b.component)
            if not points:
                jets[(s.id, i)] = Jet.constant(1, b.multiplicity)
                continue
            numerator, denominator = _interpolating_function(points)
            jets[(s.id, i)] = jet_of_rational_function(
                numerator, denominator, b.point, b.multiplicity
            )
    vector = unit_jet_vector(config, jets)
    return class_reduce(config, presentation, vector)


def aj_eval(
    config: CurveConfig,
    presentation: JacobianPresentation,
    component_id: str,
    point: P1Point | RatLike,
    basepoints: dict[str, P1Point] | None = None,
) -> JacElement:
    """Abel-Jacobi image of a smooth point: the class of [point] - [basepoint].

    Basepoints default to the configuration's own assignment; every component
    must have one.
    """
    if not isinstance(point, P1Point):
        point = P1Point.finite(point)
    require_valid(config)
    if basepoints is None:
        basepoints = dict(config.basepoints)
    for component in config.components:
        if component.id not in basepoints:
            raise MissingBasepoint(f"component {component.id!r} has no basepoint")
    if not is_smooth_point(config, component_id, point):
        raise PointNotSmooth(f"({component_id}, {point}) is a branch point")
    base = basepoints[component_id]
    divisor = SmoothDivisor(((component_id, point, 1), (component_id, base, -1)))
    return divisor_class(config, presentation, divisor)


@dataclass(frozen=True)
class ProbeReport:
    """Collision report of an exact Abel-Jacobi injectivity probe."""

    sample: tuple[tuple[str, P1Point], ...]
    collisions: tuple[tuple[tuple[str, P1Point], tuple[str, P1Point]], ...]


def aj_injectivity_probe(
    config: CurveConfig,
    presentation: JacobianPresentation,
    sample,
    basepoints: dict[str, P1Point] | None = None,
) -> ProbeReport:
    """Pairwise-compare Abel-Jacobi classes over a finite sample, exactly.

    Collisions are reported as ordered pairs in sample order; the comparison
    is exact rational equality of canonical coordinates.
    """
    normalized: list[tuple[str, P1Point]] = []
    for component_id, point in sample:
        if not isinstance(point, P1Point):
            point = P1Point.finite(point)
        normalized.append((component_id, point))
    classes = [
        aj_eval(config, presentation, component_id, point, basepoints)
        for component_id, point in normalized
    ]
    collisions = []
    for i in range(len(normalized)):
        for j in range(i + 1, len(normalized)):
            if normalized[i] == normalized[j]:
                continue
            if jac_eq(classes[i], classes[j]):
                collisions.append((normalized[i], normalized[j]))
    return ProbeReport(tuple(normalized), tuple(collisions))


# --------------------------------------------------------------------------
# The two cubic parametrizations
# --------------------------------------------------------------------------

NODAL_X = Poly((0, -1, 1))  # t^2 - t
NODAL_Y = Poly((0, 0, -1, 1))  # t^3 - t^2
CUSPIDAL_X = Poly((0, 0, 1))  # t^2
CUSPIDAL_Y = Poly((0, 0, 0, 1))  # t^3


def nodal_param(t: RatLike) -> tuple[Fraction, Fraction]:
    """Point (t^2 - t, t^3 - t^2) of the plane cubic y^2 = x*y + x^3."""
    t = Fraction(t)
    return NODAL_X(t), NODAL_Y(t)


def cuspidal_param(t: RatLike) -> tuple[Fraction, Fraction]:
    """Point (t^2, t^3) of the plane cubic y^2 = x^3."""
    t = Fraction(t)
    return CUSPIDAL_X(t), CUSPIDAL_Y(t)


def param_inverse(x: RatLike, y: RatLike) -> Fraction:
    """Rational inverse y/x of either parametrization, defined for x != 0."""
    x, y = Fraction(x), Fraction(y)
    if x == 0:
        raise SingularPoint("the inverse is undefined at the singular point")
    return y / x
