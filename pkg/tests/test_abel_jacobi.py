from __future__ import annotations

import random
from fractions import Fraction

import pytest

from pinchjac.abel_jacobi import (
    CUSPIDAL_X,
    CUSPIDAL_Y,
    NODAL_X,
    NODAL_Y,
    SmoothDivisor,
    aj_eval,
    aj_injectivity_probe,
    cuspidal_param,
    divisor_class,
    nodal_param,
    param_inverse,
)
from pinchjac.algebra import INFINITY, P1Point, jet_of_rational_function, Poly
from pinchjac.builders import cuspidal_cubic, elliptic_pair, nodal_cubic, two_nodes_pair
from pinchjac.contraction import contract_p1, finite_subscheme
from pinchjac.curve_model import Branch, Component, CurveConfig, Singularity, with_basepoints
from pinchjac.errors import (
    MissingBasepoint,
    NonzeroDegree,
    PointNotSmooth,
    PositiveGenusUnsupported,
    SingularPoint,
)
from pinchjac.jacobian import class_reduce, jac_add, jac_eq, jac_neg, jacobian_structure, unit_jet_vector


def _pt(v) -> P1Point:
    return P1Point.finite(v)


# --------------------------------------------------------------------------
# Divisor classes
# --------------------------------------------------------------------------

def test_empty_divisor_is_zero():
    config = nodal_cubic()
    presentation = jacobian_structure(config)
    assert divisor_class(config, presentation, SmoothDivisor.of([])).is_zero


def test_divisor_of_a_curve_unit_is_zero_on_the_nodal_cubic():
    # f = (t-2)(t-3)/((t-4)(t-9/5)) takes the value 5/6 at both 0 and 1,
    # so it is a unit of the curve and its divisor is principal
    config = nodal_cubic()
    presentation = jacobian_structure(config)
    divisor = SmoothDivisor.of(
        [("L", 2, 1), ("L", 3, 1), ("L", 4, -1), ("L", Fraction(9, 5), -1)]
    )
    assert divisor_class(config, presentation, divisor).is_zero


def test_divisor_of_a_curve_unit_is_zero_on_the_cuspidal_cubic():
    # f = (t-2)(t-3)/((t-6)(t-3/2)) has (log f)'(0) = 0, hence constant 2-jet
    config = cuspidal_cubic()
    presentation = jacobian_structure(config)
    divisor = SmoothDivisor.of(
        [("L", 2, 1), ("L", 3, 1), ("L", 6, -1), ("L", Fraction(3, 2), -1)]
    )
    assert divisor_class(config, presentation, divisor).is_zero


def test_nodal_divisor_class_value():
    config = nodal_cubic()
    presentation = jacobian_structure(config)
    divisor = SmoothDivisor.of([("L", 2, 1), ("L", INFINITY, -1)])
    element = divisor_class(config, presentation, divisor)
    assert element.torus_coords == (Fraction(1, 2),)


def test_cuspidal_divisor_class_value():
    config = cuspidal_cubic()
    presentation = jacobian_structure(config)
    divisor = SmoothDivisor.of([("L", 5, 1), ("L", INFINITY, -1)])
    element = divisor_class(config, presentation, divisor)
    assert element.unipotent_coords == (Fraction(-1, 5),)


def test_divisor_negation_inverts_the_class():
    config = nodal_cubic()
    presentation = jacobian_structure(config)
    divisor = SmoothDivisor.of([("L", 2, 1), ("L", INFINITY, -1)])
    fwd = divisor_class(config, presentation, divisor)
    bwd = divisor_class(config, presentation, -divisor)
    assert jac_eq(bwd, jac_neg(fwd))
    assert bwd.torus_coords == (Fraction(2),)


def test_divisor_errors():
    config = nodal_cubic()
    presentation = jacobian_structure(config)
    with pytest.raises(NonzeroDegree):
        divisor_class(config, presentation, SmoothDivisor.of([("L", 2, 1)]))
    with pytest.raises(PointNotSmooth):
        divisor_class(
            config,
            presentation,
            SmoothDivisor.of([("L", 0, 1), ("L", 5, -1)]),
        )
    pair = elliptic_pair()
    with pytest.raises(PositiveGenusUnsupported):
        divisor_class(
            pair,
            jacobian_structure(pair),
            SmoothDivisor.of([("E1", 2, 1), ("E1", 3, -1)]),
        )


def test_scalar_rescaling_of_the_interpolating_function():
    # the class of [2] - [inf] equals the reduction of the jets of c*(t - 2)
    # for any c, not just the monic choice
    config = nodal_cubic()
    presentation = jacobian_structure(config)
    divisor = SmoothDivisor.of([("L", 2, 1), ("L", INFINITY, -1)])
    expected = divisor_class(config, presentation, divisor)
    for c in (Fraction(1), Fraction(3), Fraction(-7, 2)):
        f = Poly((-2, 1)) * c
        jets = {
            ("n", 0): jet_of_rational_function(f, Poly.one(), _pt(0), 1),
            ("n", 1): jet_of_rational_function(f, Poly.one(), _pt(1), 1),
        }
        reduced = class_reduce(config, presentation, unit_jet_vector(config, jets))
        assert jac_eq(reduced, expected)


# --------------------------------------------------------------------------
# Abel-Jacobi evaluation
# --------------------------------------------------------------------------

def test_aj_at_basepoint_is_zero():
    for config in (nodal_cubic(), cuspidal_cubic(), two_nodes_pair()):
        presentation = jacobian_structure(config)
        for component_id, base in config.basepoints:
            assert aj_eval(config, presentation, component_id, base).is_zero


def test_aj_frozen_values():
    nodal = nodal_cubic()
    np_ = jacobian_structure(nodal)
    assert aj_eval(nodal, np_, "L", 2).torus_coords == (Fraction(1, 2),)

    cusp = cuspidal_cubic()
    cp = jacobian_structure(cusp)
    assert aj_eval(cusp, cp, "L", 5).unipotent_coords == (Fraction(-1, 5),)


def test_aj_closed_forms():
    nodal = nodal_cubic()
    np_ = jacobian_structure(nodal)
    cusp = cuspidal_cubic()
    cp = jacobian_structure(cusp)
    for k in range(2, 22):
        p = Fraction(k, 3)
        if p in (0, 1):
            continue
        assert aj_eval(nodal, np_, "L", p).torus_coords == ((p - 1) / p,)
        assert aj_eval(cusp, cp, "L", p).unipotent_coords == (Fraction(-1, 1) / p,)


def test_aj_missing_basepoint():
    config = CurveConfig(
        name="nobase",
        components=(Component("L"),),
        singularities=(Singularity("n", (Branch("L", _pt(0)), Branch("L", _pt(1)))),),
    )
    with pytest.raises(MissingBasepoint):
        aj_eval(config, jacobian_structure(config), "L", 5)
    element = aj_eval(
        config, jacobian_structure(config), "L", 5, basepoints={"L": INFINITY}
    )
    assert element.torus_coords == (Fraction(4, 5),)


def test_aj_with_branch_at_infinity():
    # gluing 0 to infinity on one line; with basepoint 1 the map is p -> p
    config = CurveConfig(
        name="zero_inf",
        components=(Component("L"),),
        singularities=(Singularity("n", (Branch("L", INFINITY), Branch("L", _pt(0)))),),
        basepoints=(("L", _pt(1)),),
    )
    presentation = jacobian_structure(config)
    for p in (Fraction(5), Fraction(-2), Fraction(7, 3)):
        assert aj_eval(config, presentation, "L", p).torus_coords == (p,)


def test_lut_collision_pair():
    config = two_nodes_pair()
    presentation = jacobian_structure(config)
    a = aj_eval(config, presentation, "L1", 2)
    b = aj_eval(config, presentation, "L2", -1)
    assert jac_eq(a, b)
    assert not a.is_zero


# --------------------------------------------------------------------------
# Injectivity probes
# --------------------------------------------------------------------------

def test_probe_finds_no_collisions_on_the_cubics():
    for config in (nodal_cubic(), cuspidal_cubic()):
        presentation = jacobian_structure(config)
        sample = [("L", _pt(k)) for k in range(2, 42)]
        report = aj_injectivity_probe(config, presentation, sample)
        assert report.collisions == ()


def test_probe_reports_the_lut_collision():
    config = two_nodes_pair()
    presentation = jacobian_structure(config)
    sample = [("L1", _pt(2)), ("L1", _pt(3)), ("L2", _pt(-1)), ("L2", _pt(4))]
    report = aj_injectivity_probe(config, presentation, sample)
    assert (("L1", _pt(2)), ("L2", _pt(-1))) in report.collisions


def test_probe_on_disconnected_lines_collapses_everything():
    config = CurveConfig(
        name="lines",
        components=(Component("L1"), Component("L2")),
        singularities=(),
        basepoints=(("L1", INFINITY), ("L2", INFINITY)),
    )
    presentation = jacobian_structure(config)
    sample = [("L1", _pt(1)), ("L1", _pt(2)), ("L2", _pt(3))]
    report = aj_injectivity_probe(config, presentation, sample)
    assert len(report.collisions) == 3  # trivial Jacobian: all classes equal


# --------------------------------------------------------------------------
# Parametrizations
# --------------------------------------------------------------------------

def test_param_examples():
    assert nodal_param(2) == (2, 4)
    x, y = nodal_param(2)
    assert y * y == x * y + x**3
    assert cuspidal_param(0) == (0, 0)
    for t in (Fraction(2), Fraction(3), Fraction(-1), Fraction(7, 2)):
        assert param_inverse(*nodal_param(t)) == t
        assert param_inverse(*cuspidal_param(t)) == t
    with pytest.raises(SingularPoint):
        param_inverse(0, 0)


def test_param_relations_vanish_symbolically():
    assert (NODAL_Y * NODAL_Y - NODAL_X * NODAL_Y - NODAL_X**3).is_zero
    assert (CUSPIDAL_Y * CUSPIDAL_Y - CUSPIDAL_X**3).is_zero


def test_param_points_satisfy_curve_equations_on_samples():
    rng = random.Random(61)
    for _ in range(25):
        t = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
        x, y = nodal_param(t)
        assert y * y == x * y + x**3
        x, y = cuspidal_param(t)
        assert y * y == x**3


# --------------------------------------------------------------------------
# Compatibility with contraction, additivity
# --------------------------------------------------------------------------

def test_contracted_configs_reproduce_the_closed_forms():
    nodal = with_basepoints(contract_p1(finite_subscheme([(0, 1), (1, 1)])), {"L": INFINITY})
    cusp = with_basepoints(contract_p1(finite_subscheme([(0, 2)])), {"L": INFINITY})
    np_ = jacobian_structure(nodal)
    cp = jacobian_structure(cusp)
    for k in range(2, 22):
        p = Fraction(k)
        assert aj_eval(nodal, np_, "L", p).torus_coords == ((p - 1) / p,)
        assert aj_eval(cusp, cp, "L", p).unipotent_coords == (-1 / p,)


def test_divisor_class_is_additive():
    rng = random.Random(67)
    config = two_nodes_pair()
    presentation = jacobian_structure(config)
    smooth = [k for k in range(2, 30)]
    for _ in range(50):
        def random_divisor():
            entries = []
            for component in ("L1", "L2"):
                a, b = rng.sample(smooth, 2)
                weight = rng.randint(1, 3)
                entries.append((component, a, weight))
                entries.append((component, b, -weight))
            return SmoothDivisor.of(entries)

        d1, d2 = random_divisor(), random_divisor()
        lhs = divisor_class(config, presentation, d1 + d2)
        rhs = jac_add(
            divisor_class(config, presentation, d1),
            divisor_class(config, presentation, d2),
        )
        assert jac_eq(lhs, rhs)
