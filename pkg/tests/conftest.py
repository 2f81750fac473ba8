import random

import pytest

from adsvol import reps


@pytest.fixture(scope="session")
def fuchsian_g2():
    return reps.fuchsian_regular_polygon(2)


@pytest.fixture(scope="session")
def fuchsian_g3():
    return reps.fuchsian_regular_polygon(3)


@pytest.fixture()
def rng():
    return random.Random(20260814)


def make_noncommuting_bad_rep():
    """Four generators that badly violate the genus-2 relator.

    Commuting choices are useless here (their commutators collapse to
    the identity and the relator holds), so mix a hyperbolic and a
    rotation.
    """
    return reps.Representation(
        group=reps.SurfaceGroup(2),
        images=(
            reps.Moebius([[2.0, 0.0], [0.0, 0.5]]),
            reps.Moebius.rotation(0.8),
            reps.Moebius.identity(),
            reps.Moebius.identity(),
        ),
    )
