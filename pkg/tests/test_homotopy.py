import pytest

from conftest import eight_code, torus_word
from services import group_core as gc
from services.errors import FlagMismatch, UnsupportedSurface
from services.homotopy import (
    Atom,
    DirectSum,
    Free,
    FrontClassData,
    IndexTwo,
    centralizer_consistency,
    direct_sum,
    free_rank,
    front_class_data,
    pi1_cstf_descriptor,
    pi1_front_space,
    pi_n_front_space,
)
from services.surfaces import (
    KLEIN_BOTTLE,
    PLANE,
    PROJECTIVE_PLANE,
    SPHERE,
    TORUS,
    SurfaceKind,
    SurfaceSpec,
    closed_surface,
)

GENUS_TWO = closed_surface(2)
NONORIENTABLE = SurfaceSpec(SurfaceKind.NONORIENTABLE, genus=3)


def pi1_of(surface, l):
    return str(pi1_front_space(surface, front_class_data(l)))


def test_direct_sum_merges_free_parts():
    assert direct_sum(Free(1), Free(2)) == Free(3)
    assert str(direct_sum(Free(1), Atom("Z_2"))) == "Z (+) Z_2"
    assert direct_sum() == Free(0)
    assert direct_sum(DirectSum((Free(1), Atom("Z_2"))), Free(1)) == DirectSum((Free(2), Atom("Z_2")))
    assert free_rank(IndexTwo(Free(4))) == 4
    assert free_rank(direct_sum(Free(1), Atom("pi1STK"))) is None


def test_pi1_on_simple_surfaces():
    assert pi1_of(TORUS, torus_word("a1")) == "Z^4"
    assert pi1_of(SPHERE, gc.identity(SPHERE)) == "Z (+) Z_2"
    assert pi1_of(PROJECTIVE_PLANE, gc.generator(PROJECTIVE_PLANE, "p")) == "Z (+) Z_2"
    assert pi1_of(PLANE, gc.fiber(PLANE)) == "Z^2"


def test_pi1_on_closed_surfaces():
    assert pi1_of(GENUS_TWO, gc.parse_word(GENUS_TWO, "a1 b1")) == "Z^3"
    assert pi1_of(GENUS_TWO, gc.fiber(GENUS_TWO)) == "Z (+) pi1STF"
    assert pi1_of(GENUS_TWO, gc.identity(GENUS_TWO)) == "Z (+) pi1STF"


def test_pi1_on_klein_bottle():
    c, d = gc.generator(KLEIN_BOTTLE, "c"), gc.generator(KLEIN_BOTTLE, "d")
    assert pi1_of(KLEIN_BOTTLE, d) == "Z^2"
    assert pi1_of(KLEIN_BOTTLE, gc.power(d, 2)) == "Z (+) pi1STK"
    assert pi1_of(KLEIN_BOTTLE, c) == "Z^4"
    data = front_class_data(eight_code(d, d))
    assert data.preserving and data.klein_square


def test_pi1_on_nonorientable_surfaces_uses_flags():
    flags = FrontClassData(preserving=True, base_trivial=True, stf_trivial=False)
    assert str(pi1_front_space(NONORIENTABLE, flags)) == "Z (+) pi1presSTF"
    assert str(pi1_front_space(NONORIENTABLE, FrontClassData(False, False))) == "Z^2"
    trivial = FrontClassData(preserving=True, base_trivial=True, stf_trivial=True)
    assert str(pi1_front_space(NONORIENTABLE, trivial)) == "Idx2(Z (+) pi1STF)"
    rooted = FrontClassData(preserving=True, base_trivial=False, root_square=True)
    assert str(pi1_front_space(NONORIENTABLE, rooted)) == "Z (+) pi1K"
    with pytest.raises(UnsupportedSurface):
        pi1_front_space(NONORIENTABLE, FrontClassData(preserving=True, base_trivial=False))


def test_flags_are_checked_against_the_class():
    with pytest.raises(FlagMismatch):
        front_class_data(torus_word("a1"), FrontClassData(preserving=True, base_trivial=True))
    data = front_class_data(torus_word("a1"), FrontClassData(preserving=True, base_trivial=False))
    assert not data.stf_trivial
    with pytest.raises(UnsupportedSurface):
        front_class_data(gc.GroupElem(NONORIENTABLE, gc.Ambient.STF, ()))


def test_higher_homotopy():
    assert str(pi_n_front_space(TORUS, 2)) == "0"
    assert str(pi_n_front_space(KLEIN_BOTTLE, 5)) == "0"
    assert str(pi_n_front_space(SPHERE, 2)) == "Z"
    assert str(pi_n_front_space(SPHERE, 3)) == "pi3(S2) (+) pi4(S2)"
    assert str(pi_n_front_space(PROJECTIVE_PLANE, 4)) == "pi4(S2) (+) pi5(S2)"
    with pytest.raises(ValueError):
        pi_n_front_space(SPHERE, 1)


def test_cstf_descriptor():
    assert str(pi1_cstf_descriptor(TORUS)) == "Idx2(Z^4)"
    assert str(pi1_cstf_descriptor(KLEIN_BOTTLE)) == "Idx2(Z (+) pi1STK)"
    with pytest.raises(UnsupportedSurface):
        pi1_cstf_descriptor(NONORIENTABLE)


@pytest.mark.parametrize(
    "surface,text",
    [
        (TORUS, "a1"),
        (KLEIN_BOTTLE, "d^2"),
        (KLEIN_BOTTLE, "c"),
        (KLEIN_BOTTLE, "d"),
        (GENUS_TWO, "a1"),
        (GENUS_TWO, "1"),
        (GENUS_TWO, "f"),
        (SPHERE, "f"),
    ],
)
def test_centralizer_consistency(surface, text):
    result = centralizer_consistency(surface, gc.parse_word(surface, text))
    assert result.consistent


def test_centralizer_consistency_checks_surface():
    with pytest.raises(ValueError):
        centralizer_consistency(KLEIN_BOTTLE, torus_word("a1"))
