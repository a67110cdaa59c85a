import pytest

from quiverhom import GFp, DEFAULT_PRIME, build_bound_quiver_algebra
from quiverhom.algebra import QuiverPresentation, cyclic_nakayama_presentation


@pytest.fixture(scope="session")
def field():
    return GFp(DEFAULT_PRIME)


@pytest.fixture(scope="session")
def cyclic2(field):
    """The worked cyclic Nakayama example at n = 2 (dim 7)."""
    return build_bound_quiver_algebra(cyclic_nakayama_presentation(2), field)


@pytest.fixture(scope="session")
def a2(field):
    """Hereditary A_2: 1 -> 2."""
    pres = QuiverPresentation(("1", "2"), (("a", 0, 1),), (), 2)
    return build_bound_quiver_algebra(pres, field)


@pytest.fixture(scope="session")
def semisimple(field):
    pres = QuiverPresentation(("1",), (), (), 2)
    return build_bound_quiver_algebra(pres, field)
