"""Exact model of the Lie algebra sl(2, R) in the ordered basis (H, E, F).

Every coefficient in this module is a `fractions.Fraction`; no floating
point enters any computation.  The basis matrices are

    H = [[1, 0], [0, -1]],   E = [[0, 1], [0, 0]],   F = [[0, 0], [1, 0]],

with brackets [H, E] = 2E, [H, F] = -2F, [E, F] = H.

Metric normalisation.  The bi-invariant metric is the rescaled trace form
<X, Y> = METRIC_NORMALIZATION * tr(XY) on 2x2 matrices.  The value 2 is
not a free choice: the quotient of PSL(2, R) by the stabiliser of a point
is the hyperbolic plane of curvature -1, and the quotient map must be a
metric submersion.  The flow t -> exp(tH) = diag(e^t, e^-t) moves the
base point i of the upper half-plane along the geodesic t -> e^{2t} i,
at unit-speed-parameter distance 2t, i.e. at speed 2.  H is horizontal
(it is trace-orthogonal to the stabiliser direction E - F), so |H| = 2,
forcing METRIC_NORMALIZATION * tr(H^2) = 4, i.e. METRIC_NORMALIZATION = 2.
The test-suite re-derives the speed from hyperbolic distances.

Reference frame.  u1 = H/2, u2 = (E+F)/2, u3 = (E-F)/2 is orthonormal
with signs (+1, +1, -1) (spacelike, spacelike, timelike) and is declared
positively oriented; volume_form is the determinant of metric coordinates
in this frame.

The trilinear form omega(X, Y, Z) = tr(ad_X ad_[Y,Z]) is alternating,
hence a constant multiple of volume_form.  Under the conventions above
the constant is exactly -2 (see OMEGA_VOLUME_RATIO); other trace or
metric normalisations rescale it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InputError

#: Scale factor between the 2x2 trace form and the metric; see module
#: docstring for the derivation.  Read at call time so a miscalibrated
#: build is observable by the verification suite.
METRIC_NORMALIZATION = Fraction(2)

#: Signs of the reference frame vectors u1, u2, u3 under the metric.
FRAME_SIGNS = (Fraction(1), Fraction(1), Fraction(-1))

CAUSAL_SPACELIKE = "spacelike"
CAUSAL_TIMELIKE = "timelike"
CAUSAL_LIGHTLIKE = "lightlike"

#: omega = OMEGA_VOLUME_RATIO * volume_form, frozen after being computed
#: by the brute-force oracle in the tests: omega(u1, u2, u3) = -2 while
#: volume_form(u1, u2, u3) = 1.
OMEGA_VOLUME_RATIO = Fraction(-2)


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings; refuse floats."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise InputError(
        f"expected an exact rational, got {type(value).__name__}: {value!r}"
    )


@dataclass(frozen=True)
class LieElement:
    """Element a*H + b*E + c*F with exact rational coordinates (a, b, c)."""

    coords: tuple

    def __post_init__(self):
        if len(self.coords) != 3:
            raise InputError("LieElement needs exactly 3 coordinates")
        object.__setattr__(
            self, "coords", tuple(as_fraction(c) for c in self.coords)
        )

    @classmethod
    def of(cls, a, b, c) -> "LieElement":
        return cls((a, b, c))

    @classmethod
    def zero(cls) -> "LieElement":
        return cls((0, 0, 0))

    def __add__(self, other: "LieElement") -> "LieElement":
        return LieElement(tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: "LieElement") -> "LieElement":
        return LieElement(tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self) -> "LieElement":
        return LieElement(tuple(-x for x in self.coords))

    def __rmul__(self, scalar) -> "LieElement":
        s = as_fraction(scalar)
        return LieElement(tuple(s * x for x in self.coords))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coords)

    def to_matrix(self) -> np.ndarray:
        """The trace-free 2x2 matrix [[a, b], [c, -a]] over Fraction."""
        a, b, c = self.coords
        return np.array([[a, b], [c, -a]], dtype=object)


H = LieElement.of(1, 0, 0)
E = LieElement.of(0, 1, 0)
F = LieElement.of(0, 0, 1)
BASIS = (H, E, F)

U1 = LieElement.of(Fraction(1, 2), 0, 0)
U2 = LieElement.of(0, Fraction(1, 2), Fraction(1, 2))
U3 = LieElement.of(0, Fraction(1, 2), Fraction(-1, 2))
REFERENCE_FRAME = (U1, U2, U3)


def bracket(x: LieElement, y: LieElement) -> LieElement:
    """Lie bracket [x, y] in (H, E, F) coordinates.

    Expanding [aH + bE + cF, a'H + b'E + c'F] with the structure
    constants gives (bc' - cb') H + 2(ab' - ba') E + 2(ca' - ac') F.
    """
    a, b, c = x.coords
    d, e, f = y.coords
    return LieElement.of(b * f - c * e, 2 * (a * e - b * d), 2 * (c * d - a * f))


def adjoint(x: LieElement) -> np.ndarray:
    """Matrix of ad_x = [x, .] in the basis (H, E, F), entries Fraction."""
    a, b, c = x.coords
    return np.array(
        [
            [0, -c, b],
            [-2 * b, 2 * a, 0],
            [2 * c, 0, -2 * a],
        ],
        dtype=object,
    ) * Fraction(1)


def trace2(x: LieElement, y: LieElement) -> Fraction:
    """tr(XY) of the 2x2 matrix product, in coordinates: 2aa' + bc' + cb'."""
    a, b, c = x.coords
    d, e, f = y.coords
    return 2 * a * d + b * f + c * e


def killing(x: LieElement, y: LieElement) -> Fraction:
    """Killing form tr(ad_x ad_y); equals 4 * trace2 on sl(2, R)."""
    return adjoint(x).dot(adjoint(y)).trace()


def metric(x: LieElement, y: LieElement, normalization: Fraction | None = None) -> Fraction:
    """Calibrated bi-invariant metric <x, y> = normalization * tr(XY)."""
    lam = METRIC_NORMALIZATION if normalization is None else as_fraction(normalization)
    return lam * trace2(x, y)


def omega(x: LieElement, y: LieElement, z: LieElement) -> Fraction:
    """Alternating 3-form tr(ad_x ad_[y,z]) = killing(x, [y, z])."""
    return killing(x, bracket(y, z))


def metric_coords(x: LieElement) -> tuple:
    """Coordinates of x in the reference orthonormal frame, computed
    through the metric with the declared signs (+1, +1, -1).

    With a correctly calibrated metric these agree with frame_coords;
    a miscalibrated normalisation shows up here (and hence in
    volume_form) rather than being silently absorbed.
    """
    return tuple(
        FRAME_SIGNS[i] * metric(x, REFERENCE_FRAME[i]) for i in range(3)
    )


def frame_coords(x: LieElement) -> tuple:
    """Coordinates of x in (u1, u2, u3) by exact change of basis:
    aH + bE + cF = (2a) u1 + (b+c) u2 + (b-c) u3."""
    a, b, c = x.coords
    return (2 * a, b + c, b - c)


def det3(rows) -> Fraction:
    """Determinant of a 3x3 array of Fractions given as rows."""
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def volume_form(x: LieElement, y: LieElement, z: LieElement, orientation: int = 1) -> Fraction:
    """Volume of the parallelepiped (x, y, z): determinant of metric
    coordinates in the reference frame, signed by the chosen global
    orientation (+1 keeps (u1, u2, u3) positive, -1 reverses it)."""
    if orientation not in (1, -1):
        raise InputError("orientation must be +1 or -1")
    return orientation * det3([metric_coords(v) for v in (x, y, z)])


def gram_matrix(normalization: Fraction | None = None) -> np.ndarray:
    """Metric Gram matrix on the ordered basis (H, E, F)."""
    return np.array(
        [[metric(a, b, normalization) for b in BASIS] for a in BASIS],
        dtype=object,
    )


def rational_signature(sym) -> tuple:
    """Signature (positives, negatives, zeros) of a symmetric matrix of
    Fractions, by exact congruence diagonalisation (simultaneous row and
    column elimination); no floating point, no eigenvalues."""
    m = [[as_fraction(v) for v in row] for row in np.asarray(sym, dtype=object)]
    n = len(m)
    for i in range(n):
        if m[i][i] == 0:
            pivot = next((j for j in range(i + 1, n) if m[j][j] != 0), None)
            if pivot is not None:
                m[i], m[pivot] = m[pivot], m[i]
                for row in m:
                    row[i], row[pivot] = row[pivot], row[i]
            else:
                mate = next((j for j in range(i + 1, n) if m[i][j] != 0), None)
                if mate is None:
                    continue
                for k in range(n):
                    m[i][k] += m[mate][k]
                for row in m:
                    row[i] += row[mate]
        for j in range(i + 1, n):
            if m[j][i] == 0:
                continue
            factor = m[j][i] / m[i][i]
            for k in range(n):
                m[j][k] -= factor * m[i][k]
            for row in m:
                row[j] -= factor * row[i]
    diag = [m[i][i] for i in range(n)]
    return (
        sum(1 for d in diag if d > 0),
        sum(1 for d in diag if d < 0),
        sum(1 for d in diag if d == 0),
    )


@dataclass(frozen=True)
class MetricTensor:
    """The calibrated metric as a Gram matrix on (H, E, F)."""

    gram: np.ndarray
    normalization: Fraction

    @classmethod
    def standard(cls, normalization: Fraction | None = None) -> "MetricTensor":
        lam = METRIC_NORMALIZATION if normalization is None else as_fraction(normalization)
        return cls(gram=gram_matrix(lam), normalization=lam)

    def signature(self) -> tuple:
        return rational_signature(self.gram)

    def causal_type(self, x: LieElement) -> str:
        q = metric(x, x, self.normalization)
        if q > 0:
            return CAUSAL_SPACELIKE
        if q < 0:
            return CAUSAL_TIMELIKE
        return CAUSAL_LIGHTLIKE


@dataclass(frozen=True)
class OrientedFrame:
    """Positively oriented orthonormal frame with signs (+1, +1, -1)."""

    vectors: tuple

    def __post_init__(self):
        vs = tuple(self.vectors)
        if len(vs) != 3 or not all(isinstance(v, LieElement) for v in vs):
            raise InputError("OrientedFrame needs three LieElements")
        object.__setattr__(self, "vectors", vs)
        for i, j in itertools.combinations(range(3), 2):
            if metric(vs[i], vs[j]) != 0:
                raise InputError(f"frame vectors {i + 1}, {j + 1} are not orthogonal")
        for i in range(3):
            if metric(vs[i], vs[i]) != FRAME_SIGNS[i]:
                raise InputError(
                    f"frame vector {i + 1} must have squared norm {FRAME_SIGNS[i]}"
                )
        if volume_form(*vs) != 1:
            raise InputError("frame is not positively oriented")

    @property
    def causal_types(self) -> tuple:
        return (CAUSAL_SPACELIKE, CAUSAL_SPACELIKE, CAUSAL_TIMELIKE)

    @classmethod
    def reference(cls) -> "OrientedFrame":
        return cls(REFERENCE_FRAME)

    @classmethod
    def random(cls, rng) -> "OrientedFrame":
        """Frame obtained by the adjoint action of a random rational
        element of SL(2, R); exactly orthonormal and positively oriented
        because the action is a connected group of isometries."""
        g = random_rational_sl2(rng)
        return cls(tuple(adjoint_action(g, u) for u in REFERENCE_FRAME))


def random_rational_sl2(rng) -> np.ndarray:
    """Random product of rational shear matrices; determinant exactly 1."""
    g = np.array([[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]], dtype=object)
    for turn in range(rng.randint(2, 4)):
        t = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        if turn % 2 == 0:
            shear = np.array([[1, t], [0, 1]], dtype=object)
        else:
            shear = np.array([[1, 0], [t, 1]], dtype=object)
        g = g.dot(shear)
    return g


def adjoint_action(g: np.ndarray, x: LieElement) -> LieElement:
    """Ad_g(x) = g X g^-1 for g a rational 2x2 matrix of determinant 1."""
    a, b = g[0]
    c, d = g[1]
    if a * d - b * c != 1:
        raise InputError("adjoint_action needs determinant exactly 1")
    ginv = np.array([[d, -b], [-c, a]], dtype=object)
    m = g.dot(x.to_matrix()).dot(ginv)
    return LieElement.of(m[0][0], m[0][1], m[1][0])
