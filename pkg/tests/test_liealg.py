"""Lie-algebra layer: brackets, Killing form, metric, volume form.

Oracles live in _oracles.py and recompute everything from literal 2x2
matrices, so these tests do not trust the module's own adjoint tables.
"""

import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _oracles import (
    hyperbolic_distance,
    mat2,
    moebius_apply,
    oracle_ad,
    oracle_bracket,
    oracle_killing,
    oracle_omega,
)
from adsvol import liealg
from adsvol.errors import InputError
from adsvol.liealg import (
    BASIS,
    E,
    F,
    FRAME_SIGNS,
    H,
    METRIC_NORMALIZATION,
    OMEGA_VOLUME_RATIO,
    REFERENCE_FRAME,
    U1,
    U2,
    U3,
    LieElement,
    MetricTensor,
    OrientedFrame,
    adjoint,
    adjoint_action,
    as_fraction,
    bracket,
    frame_coords,
    gram_matrix,
    killing,
    metric,
    metric_coords,
    omega,
    random_rational_sl2,
    rational_signature,
    trace2,
    volume_form,
)

rationals = st.fractions(min_value=-8, max_value=8, max_denominator=12)
elements = st.builds(LieElement.of, rationals, rationals, rationals)
scalars = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def same_matrix(a, b):
    return (np.asarray(a) == np.asarray(b)).all()


# ---------------------------------------------------------------- basics


def test_basis_matrices():
    assert same_matrix(H.to_matrix(), mat2((1, 0, 0)))
    assert same_matrix(E.to_matrix(), mat2((0, 1, 0)))
    assert same_matrix(F.to_matrix(), mat2((0, 0, 1)))


def test_as_fraction_accepts_exact_types_only():
    assert as_fraction(3) == 3
    assert as_fraction("3/4") == Fraction(3, 4)
    assert as_fraction(Fraction(-1, 2)) == Fraction(-1, 2)
    with pytest.raises(InputError):
        as_fraction(0.5)


def test_element_arithmetic():
    x = LieElement.of(1, "1/2", -3)
    y = LieElement.of(0, 2, 1)
    assert (x + y).coords == (Fraction(1), Fraction(5, 2), Fraction(-2))
    assert (x - x).is_zero()
    assert (-x).coords == (Fraction(-1), Fraction(-1, 2), Fraction(3))
    assert (2 * x).coords == (Fraction(2), Fraction(1), Fraction(-6))
    assert LieElement.zero().is_zero()


def test_elements_reject_floats():
    with pytest.raises(InputError):
        LieElement.of(0.5, 0, 0)


# --------------------------------------------------------------- bracket


def test_bracket_structure_constants():
    assert bracket(H, E) == 2 * E
    assert bracket(H, F) == -2 * F
    assert bracket(E, F) == H


@given(elements, elements)
def test_bracket_matches_matrix_commutator(x, y):
    assert bracket(x, y).coords == oracle_bracket(x.coords, y.coords)


@given(elements, elements)
def test_bracket_antisymmetry(x, y):
    assert bracket(x, y) == -bracket(y, x)


@given(elements, elements, elements, scalars)
def test_bracket_bilinearity(x, y, z, t):
    assert bracket(x + t * y, z) == bracket(x, z) + t * bracket(y, z)


@given(elements, elements, elements)
def test_jacobi_identity(x, y, z):
    total = (
        bracket(x, bracket(y, z))
        + bracket(y, bracket(z, x))
        + bracket(z, bracket(x, y))
    )
    assert total.is_zero()


# --------------------------------------------------------------- adjoint


def test_adjoint_worked_matrices():
    assert same_matrix(
        adjoint(H),
        np.array([[0, 0, 0], [0, 2, 0], [0, 0, -2]], dtype=object),
    )
    assert same_matrix(
        adjoint(E),
        np.array([[0, 0, 1], [-2, 0, 0], [0, 0, 0]], dtype=object),
    )
    assert same_matrix(
        adjoint(F),
        np.array([[0, -1, 0], [0, 0, 0], [2, 0, 0]], dtype=object),
    )


@given(elements)
def test_adjoint_matches_oracle(x):
    assert same_matrix(adjoint(x), oracle_ad(x.coords))


@given(elements, elements)
def test_adjoint_applies_bracket(x, y):
    image = adjoint(x) @ np.array(y.coords, dtype=object)
    assert tuple(image) == bracket(x, y).coords


@given(elements, elements)
def test_adjoint_is_homomorphism(x, y):
    lhs = adjoint(bracket(x, y))
    rhs = adjoint(x) @ adjoint(y) - adjoint(y) @ adjoint(x)
    assert same_matrix(lhs, rhs)


# ---------------------------------------------------------- killing form


def test_killing_worked_values():
    assert killing(H, H) == 8
    assert killing(E, F) == 4
    assert killing(E - F, E - F) == -8
    assert killing(H, E) == 0
    assert killing(H, F) == 0
    assert killing(E, E) == 0


@given(elements, elements)
def test_killing_matches_trace_oracle(x, y):
    assert killing(x, y) == oracle_killing(x.coords, y.coords)


@given(elements, elements)
def test_killing_is_four_times_trace_form(x, y):
    assert killing(x, y) == 4 * trace2(x, y)


@given(elements, elements, elements)
def test_killing_invariance(x, y, z):
    assert killing(bracket(x, y), z) == killing(x, bracket(y, z))


# ----------------------------------------------------------------- metric


def test_metric_normalization_frozen():
    assert METRIC_NORMALIZATION == Fraction(2)


def test_metric_worked_values():
    assert metric(H, H) == 4
    assert metric(E, E) == 0
    assert metric(E, F) == 2
    assert metric(U1, U1) == 1
    assert metric(U2, U2) == 1
    assert metric(U3, U3) == -1


def test_metric_gram_matrices():
    # in the H, E, F basis the metric is 2 * trace form
    expected = np.array(
        [[Fraction(4), Fraction(0), Fraction(0)],
         [Fraction(0), Fraction(0), Fraction(2)],
         [Fraction(0), Fraction(2), Fraction(0)]],
        dtype=object,
    )
    assert same_matrix(gram_matrix(), expected)
    # on the reference frame it is diag(+1, +1, -1)
    frame_gram = [[metric(u, v) for v in REFERENCE_FRAME] for u in REFERENCE_FRAME]
    assert same_matrix(
        np.array(frame_gram, dtype=object),
        np.diag([Fraction(1), Fraction(1), Fraction(-1)]).astype(object),
    )


def test_metric_normalization_matches_geodesic_speed():
    """The scale is pinned by the unit-tangent submersion convention:
    exp(t H) must move the base point i at unit-time hyperbolic speed
    whose square equals metric(H, H).  The curve t -> exp(tH) . i is
    e^{2t} i, so speed is 2 and metric(H, H) must be 4; the trace form
    alone gives trace2(H, H) = 2, fixing the normalization factor 2.
    """
    base = 1j
    for t in (0.5, 0.1, 0.01):
        mat = ((math.exp(t), 0.0), (0.0, math.exp(-t)))
        moved = moebius_apply(mat, base)
        assert abs(moved - math.exp(2 * t) * 1j) < 1e-12
        speed = hyperbolic_distance(base, moved) / t
        assert abs(speed - 2.0) < 1e-9
    assert metric(H, H) == Fraction(2) ** 2
    assert METRIC_NORMALIZATION * trace2(H, H) == metric(H, H)


def test_signature_is_two_one():
    assert rational_signature(gram_matrix()) == (2, 1, 0)
    assert MetricTensor.standard().signature() == (2, 1, 0)


def test_rational_signature_handles_degenerate_and_offdiag():
    assert rational_signature(
        np.array(
            [[Fraction(0), Fraction(1), Fraction(0)],
             [Fraction(1), Fraction(0), Fraction(0)],
             [Fraction(0), Fraction(0), Fraction(0)]],
            dtype=object,
        )
    ) == (1, 1, 1)
    zero = np.full((3, 3), Fraction(0), dtype=object)
    assert rational_signature(zero) == (0, 0, 3)


def test_causal_types():
    m = MetricTensor.standard()
    assert m.causal_type(H) == liealg.CAUSAL_SPACELIKE
    assert m.causal_type(E) == liealg.CAUSAL_LIGHTLIKE
    assert m.causal_type(U3) == liealg.CAUSAL_TIMELIKE


@given(elements)
def test_frame_and_metric_coords_agree(x):
    # Both coordinate maps must match; this is exactly the statement
    # that the normalization factor calibrates the trace form to the
    # orthonormal reference frame.
    assert frame_coords(x) == metric_coords(x)


def test_frame_coords_worked():
    assert frame_coords(H) == (2, 0, 0)
    assert frame_coords(E) == (0, 1, 1)
    assert frame_coords(F) == (0, 1, -1)


# ------------------------------------------------------- omega and volume


def test_omega_worked_values():
    assert omega(H, E, F) == oracle_omega((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert omega(H, E, F) == 8
    assert omega(U1, U2, U3) == -2


@given(elements, elements, elements)
def test_omega_matches_oracle(x, y, z):
    assert omega(x, y, z) == oracle_omega(x.coords, y.coords, z.coords)


@given(elements, elements, elements)
def test_omega_is_alternating(x, y, z):
    assert omega(x, y, z) == -omega(y, x, z)
    assert omega(x, y, z) == -omega(x, z, y)
    assert omega(x, x, z) == 0


def test_volume_form_worked_values():
    assert volume_form(*REFERENCE_FRAME) == 1
    assert volume_form(U2, U1, U3) == -1
    assert volume_form(U1, U1, U3) == 0
    assert volume_form(*REFERENCE_FRAME, orientation=-1) == -1


@given(elements, elements, elements)
def test_omega_volume_ratio_frozen(x, y, z):
    # omega and the metric volume form are both alternating 3-forms on
    # a 3-dimensional space, hence proportional; the constant is -2.
    assert OMEGA_VOLUME_RATIO == Fraction(-2)
    assert omega(x, y, z) == OMEGA_VOLUME_RATIO * volume_form(x, y, z)


# ------------------------------------------------------------- frames


def test_reference_frame_is_valid():
    frame = OrientedFrame.reference()
    assert frame.vectors == REFERENCE_FRAME
    assert frame.causal_types == (
        liealg.CAUSAL_SPACELIKE,
        liealg.CAUSAL_SPACELIKE,
        liealg.CAUSAL_TIMELIKE,
    )


def test_oriented_frame_rejects_bad_input():
    with pytest.raises(InputError):
        OrientedFrame((U1, U2, 2 * U3))  # wrong norm
    with pytest.raises(InputError):
        OrientedFrame((U1, U1 + U2, U3))  # not orthogonal
    with pytest.raises(InputError):
        OrientedFrame((U2, U1, U3))  # negatively oriented
    with pytest.raises(InputError):
        OrientedFrame((U1, U2))  # wrong arity


def test_random_frames_are_orthonormal_and_positive(rng):
    for _ in range(10):
        frame = OrientedFrame.random(rng)
        assert volume_form(*frame.vectors) == 1
        for i, v in enumerate(frame.vectors):
            assert metric(v, v) == FRAME_SIGNS[i]


# ------------------------------------------------- adjoint group action


def test_random_rational_sl2_has_unit_det(rng):
    for _ in range(50):
        g = random_rational_sl2(rng)
        assert g[0, 0] * g[1, 1] - g[0, 1] * g[1, 0] == 1


def test_adjoint_action_worked():
    shear = np.array([[Fraction(1), Fraction(1)], [Fraction(0), Fraction(1)]], dtype=object)
    assert adjoint_action(shear, E) == E
    assert adjoint_action(shear, H) == H - 2 * E
    assert adjoint_action(shear, F) == F + H - E


def test_adjoint_action_requires_unit_det():
    g = np.array([[Fraction(2), Fraction(0)], [Fraction(0), Fraction(1)]], dtype=object)
    with pytest.raises(InputError):
        adjoint_action(g, H)


def test_adjoint_action_preserves_killing_and_bracket(rng):
    for _ in range(25):
        g = random_rational_sl2(rng)
        x = LieElement.of(rng.randint(-5, 5), rng.randint(-5, 5), rng.randint(-5, 5))
        y = LieElement.of(rng.randint(-5, 5), rng.randint(-5, 5), rng.randint(-5, 5))
        gx, gy = adjoint_action(g, x), adjoint_action(g, y)
        assert killing(gx, gy) == killing(x, y)
        assert adjoint_action(g, bracket(x, y)) == bracket(gx, gy)
        assert omega(gx, gy, adjoint_action(g, bracket(x, y))) == omega(
            x, y, bracket(x, y)
        )
