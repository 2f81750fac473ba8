"""Surface-group representations into PSL(2, R) and their Euler classes.

This module is deliberately floating-point: representations live in
double precision, and the Euler class is recovered as an integer through
a lift of the projective-line action, with an explicit integrality gate.
Exact arithmetic stays in `liealg` / `forms` / `invariants`.

Conventions
-----------
* A Moebius element is a 2x2 real matrix normalised to determinant 1,
  with the sign representative chosen so the trace is nonnegative (first
  nonzero entry positive when the trace vanishes).
* The fundamental group of the closed genus-g surface is generated by
  a1, b1, ..., ag, bg subject to prod_i [a_i, b_i] = 1.  Word letters
  are nonzero integers: letter 2i-1 is a_i, letter 2i is b_i, negatives
  are inverses.
* P^1(R) is parametrised by the angle theta in R/(pi Z) of the line
  through direction (cos theta, sin theta); a lift is a monotone map
  ell of R with ell(x + pi) = ell(x) + pi.  The canonical lift of a
  matrix takes 0 into [0, pi).
* euler_class evaluates the lifted relator at 0 and divides by pi.  With
  these conventions the regular-polygon Fuchsian representation of genus
  g has Euler class -(2g - 2); e.g. fuchsian_regular_polygon(2) -> -2.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError, IntegralityError

#: Number of panels used to unwrap the angle function on [0, pi].  A
#: single panel already determines the lift mathematically (a monotone
#: degree-one map gains less than pi over any subinterval of [0, pi)),
#: but subdividing keeps the per-panel gain far from the pi ambiguity
#: for the steep maps that arise from hyperbolic elements.
LIFT_GRID = 64

#: A wrapped increment this close to pi is treated as a wrap-around of
#: a near-zero increment; genuine per-panel gains of generator-sized
#: matrices stay well below this (see LIFT_GRID note).
_WRAP_GUARD = 1e-9

DET_TOLERANCE = 1e-6
TYPE_TOLERANCE = 1e-9
EULER_TOLERANCE = 1e-6


class Moebius:
    """Element of PSL(2, R), stored as a normalised 2x2 float matrix."""

    __slots__ = ("mat",)

    def __init__(self, mat):
        m = np.array(mat, dtype=float)
        if m.shape != (2, 2) or not np.isfinite(m).all():
            raise InputError("Moebius needs a finite 2x2 real matrix")
        det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        if det <= 0:
            raise InputError("PSL(2, R) requires positive determinant")
        m = m / math.sqrt(det)
        tr = m[0, 0] + m[1, 1]
        if tr < 0:
            m = -m
        elif tr == 0:
            for entry in m.flat:
                if entry != 0:
                    if entry < 0:
                        m = -m
                    break
        self.mat = m

    @classmethod
    def identity(cls) -> "Moebius":
        return cls(np.eye(2))

    @classmethod
    def rotation(cls, alpha: float) -> "Moebius":
        """Rotation of the plane by alpha; acts on line angles by + alpha."""
        return cls([[math.cos(alpha), -math.sin(alpha)],
                    [math.sin(alpha), math.cos(alpha)]])

    @property
    def trace(self) -> float:
        return float(self.mat[0, 0] + self.mat[1, 1])

    @property
    def det(self) -> float:
        m = self.mat
        return float(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])

    def __mul__(self, other: "Moebius") -> "Moebius":
        return Moebius(self.mat.dot(other.mat))

    def inverse(self) -> "Moebius":
        m = self.mat
        return Moebius([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]])

    def dist_mod_sign(self, other: "Moebius") -> float:
        """Frobenius distance in PSL(2, R), i.e. up to scale and sign.

        Each matrix is rescaled to unit Frobenius norm before comparing;
        det-based normalisation is too noisy here because det = ad - bc
        cancels catastrophically for large-entry products."""
        a = self.mat / np.linalg.norm(self.mat)
        b = other.mat / np.linalg.norm(other.mat)
        return float(min(np.linalg.norm(a - b), np.linalg.norm(a + b)))

    def close_to(self, other: "Moebius", tol: float = 1e-9) -> bool:
        return self.dist_mod_sign(other) <= tol

    def __repr__(self) -> str:
        return f"Moebius({self.mat.tolist()!r})"


ELEM_IDENTITY = "identity"
ELEM_ELLIPTIC = "elliptic"
ELEM_PARABOLIC = "parabolic"
ELEM_HYPERBOLIC = "hyperbolic"


def elem_type(m: Moebius, tol: float = TYPE_TOLERANCE) -> str:
    """Classify by |trace|: < 2 elliptic, > 2 hyperbolic, = 2 parabolic
    or the identity (decided by distance to the identity mod sign)."""
    t = abs(m.trace)
    if abs(t - 2.0) <= tol:
        if m.dist_mod_sign(Moebius.identity()) <= tol:
            return ELEM_IDENTITY
        return ELEM_PARABOLIC
    return ELEM_ELLIPTIC if t < 2.0 else ELEM_HYPERBOLIC


def translation_length(m: Moebius) -> float:
    """2 arccosh(|tr|/2) for hyperbolic elements, 0 otherwise.

    This is a class function: it only reads the trace, which is
    conjugation invariant."""
    half = abs(m.trace) / 2.0
    if half <= 1.0:
        return 0.0
    return 2.0 * math.acosh(half)


@dataclass(frozen=True)
class Word:
    """Reduced word in the free group on 2g letters.

    Letters are nonzero integers; a letter may not be followed by its
    negative.  Use Word.reduced to build from an unreduced sequence."""

    letters: tuple = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        for x in letters:
            if not isinstance(x, int) or isinstance(x, bool) or x == 0:
                raise InputError(f"letters must be nonzero integers, got {x!r}")
        for x, y in zip(letters, letters[1:]):
            if x == -y:
                raise InputError(f"word {letters} is not reduced")

    @classmethod
    def reduced(cls, seq) -> "Word":
        stack = []
        for x in seq:
            if not isinstance(x, int) or isinstance(x, bool) or x == 0:
                raise InputError(f"letters must be nonzero integers, got {x!r}")
            if stack and stack[-1] == -x:
                stack.pop()
            else:
                stack.append(x)
        return cls(tuple(stack))

    def inverse(self) -> "Word":
        return Word(tuple(-x for x in reversed(self.letters)))

    def __mul__(self, other: "Word") -> "Word":
        return Word.reduced(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)


def relator_word(genus: int) -> Word:
    """prod_i a_i b_i a_i^-1 b_i^-1 as a reduced word."""
    letters = []
    for i in range(1, genus + 1):
        a, b = 2 * i - 1, 2 * i
        letters += [a, b, -a, -b]
    return Word(tuple(letters))


@dataclass(frozen=True)
class SurfaceGroup:
    """Fundamental group of the closed orientable surface of genus >= 2."""

    genus: int

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 2:
            raise InputError("genus must be an integer >= 2")

    @property
    def rank(self) -> int:
        return 2 * self.genus

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus


@dataclass(frozen=True)
class Representation:
    """Images (a1, b1, ..., ag, bg) of the standard generators."""

    group: SurfaceGroup
    images: tuple

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if len(images) != self.group.rank:
            raise InputError(
                f"genus {self.group.genus} needs {self.group.rank} generator images"
            )
        if not all(isinstance(m, Moebius) for m in images):
            raise InputError("generator images must be Moebius elements")

    @property
    def genus(self) -> int:
        return self.group.genus

    def generator(self, letter: int) -> Moebius:
        index = abs(letter) - 1
        if letter == 0 or index >= len(self.images):
            raise InputError(f"letter {letter} out of range for genus {self.genus}")
        image = self.images[index]
        return image if letter > 0 else image.inverse()


def trivial_representation(genus: int) -> Representation:
    group = SurfaceGroup(genus)
    return Representation(group, tuple(Moebius.identity() for _ in range(group.rank)))


def evaluate(rep: Representation, word: Word) -> Moebius:
    """Image of a word, multiplying images left to right."""
    result = Moebius.identity()
    for letter in word:
        result = result * rep.generator(letter)
    return result


def relator_residual(rep: Representation) -> float:
    """Distance (mod sign) of the evaluated surface relator from the
    identity; reported, never rejected."""
    return evaluate(rep, relator_word(rep.genus)).dist_mod_sign(Moebius.identity())


def conjugate(rep: Representation, m: Moebius) -> Representation:
    inv = m.inverse()
    return Representation(rep.group, tuple(m * g * inv for g in rep.images))


# ---------------------------------------------------------------------------
# Fuchsian holonomy from the regular 4g-gon
# ---------------------------------------------------------------------------

def _su_translate(p: complex) -> np.ndarray:
    """Disc isometry sending p to 0, as an SU(1, 1) matrix."""
    s = 1.0 / math.sqrt(1.0 - abs(p) ** 2)
    return np.array([[s, -s * p], [-s * p.conjugate(), s]], dtype=complex)


def _su_rotation(t: float) -> np.ndarray:
    """Disc rotation z -> e^{it} z about 0."""
    return np.array(
        [[np.exp(1j * t / 2), 0.0], [0.0, np.exp(-1j * t / 2)]], dtype=complex
    )


def _su_apply(m: np.ndarray, z: complex) -> complex:
    return (m[0, 0] * z + m[0, 1]) / (m[1, 0] * z + m[1, 1])


def _su_align(p: complex, q: complex) -> np.ndarray:
    """Disc isometry with p -> 0 and q on the positive real axis."""
    t = _su_translate(p)
    angle = np.angle(_su_apply(t, q))
    return _su_rotation(-angle).dot(t)


def _su_inverse(m: np.ndarray) -> np.ndarray:
    return np.array(
        [[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]], dtype=complex
    )


def _su_to_moebius(m: np.ndarray) -> Moebius:
    """Conjugate an SU(1, 1) matrix back to SL(2, R) through the Cayley
    map z -> (z - i)/(z + i); the result is real up to rounding noise."""
    left = np.array([[1j, 1j], [-1.0, 1.0]], dtype=complex)
    right = np.array([[1.0, -1j], [1.0, 1j]], dtype=complex)
    out = left.dot(m).dot(right) / 2j
    if np.abs(out.imag).max() > 1e-9:
        raise InputError("matrix is not conjugate to a real one")
    return Moebius(out.real)


def fuchsian_regular_polygon(genus: int) -> Representation:
    """Holonomy of the hyperbolic structure glued from the regular
    4g-gon with vertex angle 2 pi / (4g).

    Vertices sit at disc angles 2 pi j / n (n = 4g), at the hyperbolic
    circumradius arccosh(cot^2(pi/n)).  The boundary word
    a1 b1 a1^-1 b1^-1 ... pairs side j with side j+2 inside each block
    of four; the pairing isometry for pair {j, j+2} carries the oriented
    edge (v_{j+3}, v_{j+2}) to (v_j, v_{j+1}).  Each a_i is the pairing
    of pair {4i, 4i+2}, each b_i the inverse of the pairing of pair
    {4i+1, 4i+3}; all of them are rotated copies (conjugates by the
    polygon's central rotation) of a single hyperbolic translation.  The
    relator then closes up to rounding error and the Euler class is
    -(2g - 2)."""
    if not isinstance(genus, int) or genus < 2:
        raise InputError("genus must be an integer >= 2")
    n = 4 * genus
    circumradius = math.acosh(1.0 / math.tan(math.pi / n) ** 2)
    r = math.tanh(circumradius / 2.0)
    vertices = [r * np.exp(2j * math.pi * j / n) for j in range(n)]

    def pairing(j: int) -> np.ndarray:
        g_target = _su_align(vertices[j % n], vertices[(j + 1) % n])
        g_source = _su_align(vertices[(j + 3) % n], vertices[(j + 2) % n])
        return _su_inverse(g_target).dot(g_source)

    images = []
    for i in range(genus):
        images.append(_su_to_moebius(pairing(4 * i)))
        images.append(_su_to_moebius(_su_inverse(pairing(4 * i + 1))))
    return Representation(SurfaceGroup(genus), tuple(images))


# ---------------------------------------------------------------------------
# Circle lifts and the Euler class
# ---------------------------------------------------------------------------

class LiftedCircleMap:
    """Monotone lift to R of the action of a Moebius element on P^1(R).

    Stored as a base matrix plus an integer multiple of pi; the base
    lift is the one taking 0 into [0, pi).  Composition and functional
    inverse track the integer part explicitly, so commutators of lifts
    are independent of which lift was chosen for each factor (the
    corrections are central and cancel)."""

    __slots__ = ("moebius", "shift", "_grid")

    def __init__(self, moebius: Moebius, shift: int = 0):
        self.moebius = moebius
        self.shift = int(shift)
        self._grid = None

    def _raw_angle(self, x: float) -> float:
        """Angle in [0, pi) of the image of the line at angle x."""
        m = self.moebius.mat
        c, s = math.cos(x), math.sin(x)
        return math.atan2(m[1, 0] * c + m[1, 1] * s, m[0, 0] * c + m[0, 1] * s) % math.pi

    def _grid_values(self):
        if self._grid is None:
            values = [self._raw_angle(0.0)]
            for k in range(1, LIFT_GRID + 1):
                prev = values[-1]
                gain = (self._raw_angle(k * math.pi / LIFT_GRID) - prev) % math.pi
                if gain > math.pi - _WRAP_GUARD:
                    gain -= math.pi
                values.append(prev + gain)
            self._grid = values
        return self._grid

    def __call__(self, x: float) -> float:
        n = math.floor(x / math.pi)
        frac = x - n * math.pi
        if frac >= math.pi:
            frac -= math.pi
            n += 1
        if frac < 0.0:
            frac = 0.0
        grid = self._grid_values()
        base = grid[min(int(frac * LIFT_GRID / math.pi), LIFT_GRID - 1)]
        gain = (self._raw_angle(frac) - base) % math.pi
        if gain > math.pi - _WRAP_GUARD:
            gain -= math.pi
        return base + gain + (self.shift + n) * math.pi

    def _integer_offset(self, value: float) -> int:
        k = value / math.pi
        rounded = round(k)
        if abs(k - rounded) > 1e-6:
            raise IntegralityError(
                f"lift bookkeeping lost continuity (offset {k} pi not integral)"
            )
        return rounded

    def compose(self, other: "LiftedCircleMap") -> "LiftedCircleMap":
        """Functional composition self after other."""
        product = self.moebius * other.moebius
        out = LiftedCircleMap(product, 0)
        out.shift = self._integer_offset(self(other(0.0)) - out(0.0))
        return out

    def inverse(self) -> "LiftedCircleMap":
        """The functional inverse (not merely some lift of the inverse
        matrix): fixes inverse(self(0)) = 0."""
        out = LiftedCircleMap(self.moebius.inverse(), 0)
        out.shift = -out._integer_offset(out(self(0.0)))
        return out


def circle_lift(m: Moebius) -> LiftedCircleMap:
    """The canonical lift of m's projective action, with lift(0) in [0, pi)."""
    return LiftedCircleMap(m, 0)


def euler_class(rep: Representation, tol: float = EULER_TOLERANCE) -> tuple:
    """(euler, residual): the lifted relator prod_i [lift a_i, lift b_i]
    evaluated at 0, divided by pi and rounded to the nearest integer.

    residual is the distance of that ratio from the integer; when it
    exceeds tol the representation has no readable Euler class and an
    IntegralityError is raised.  Commutators of lifts do not depend on
    the choice of lifts, so the integer is well defined; it is also
    conjugation invariant, and bounded by 2g - 2 in magnitude
    (Milnor-Wood) whenever the relator genuinely closes up."""
    total = LiftedCircleMap(Moebius.identity(), 0)
    for i in range(rep.genus):
        lift_a = circle_lift(rep.images[2 * i])
        lift_b = circle_lift(rep.images[2 * i + 1])
        commutator = (
            lift_a.compose(lift_b).compose(lift_a.inverse()).compose(lift_b.inverse())
        )
        total = total.compose(commutator)
    ratio = total(0.0) / math.pi
    nearest = round(ratio)
    residual = abs(ratio - nearest)
    if residual > tol:
        raise IntegralityError(
            f"lifted relator displacement {ratio} pi is not within {tol} of "
            "an integer; representation is too far from the relation"
        )
    return nearest, residual


# ---------------------------------------------------------------------------
# JSON representation files
# ---------------------------------------------------------------------------

def representation_to_json(rep: Representation) -> dict:
    """{"genus": g, "generators": [row-major 2x2 floats, det 1]}."""
    return {
        "genus": rep.genus,
        "generators": [m.mat.tolist() for m in rep.images],
    }


def representation_from_json(data: dict) -> Representation:
    if not isinstance(data, dict):
        raise InputError("representation file must contain a JSON object")
    genus = data.get("genus")
    if not isinstance(genus, int) or isinstance(genus, bool) or genus < 2:
        raise InputError("'genus' must be an integer >= 2")
    generators = data.get("generators")
    if not isinstance(generators, list) or len(generators) != 2 * genus:
        raise InputError(f"'generators' must list {2 * genus} matrices")
    images = []
    for index, entry in enumerate(generators):
        mat = np.array(entry, dtype=float)
        if mat.shape != (2, 2) or not np.isfinite(mat).all():
            raise InputError(f"generator {index} is not a finite 2x2 matrix")
        det = mat[0, 0] * mat[1, 1] - mat[0, 1] * mat[1, 0]
        if abs(det - 1.0) > DET_TOLERANCE:
            raise InputError(
                f"generator {index} has determinant {det}, not 1 "
                f"(tolerance {DET_TOLERANCE})"
            )
        images.append(Moebius(mat))
    return Representation(SurfaceGroup(genus), tuple(images))


def save_representation(rep: Representation, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(representation_to_json(rep), handle, indent=2)
        handle.write("\n")


def load_representation(path) -> Representation:
    with open(path, "r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON in {path}: {exc}") from exc
    return representation_from_json(data)
