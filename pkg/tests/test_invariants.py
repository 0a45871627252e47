from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import creation_moves, eight_code, eight_codes, elements, grown_codes, torus_word, triple_code
from services import group_core as gc
from services.classes import kplus_key, order_index
from services.errors import UnsupportedSurface
from services.front_code import StandardFrontId, standard_code
from services.invariants import (
    Invariant,
    ModuleVector,
    iplus,
    iplus_delta,
    order_one_check,
    planar_base_value,
    planar_invariant,
)
from services.key_format import format_key
from services.strata_moves import MoveSpec, Stratum, apply_move
from services.surfaces import KLEIN_BOTTLE, TORUS, free_surface

FREE_TWO = free_surface(2)


@pytest.mark.parametrize(
    "inv,omega,k,doubled",
    [
        (Invariant.STP, 2, 0, 2),
        (Invariant.STP, 0, 1, 1),
        (Invariant.STP, 1, 0, 0),
        (Invariant.JPLUS, 2, 0, -4),
        (Invariant.JPLUS, 0, 0, 0),
        (Invariant.JMINUS, 0, 0, -2),
        (Invariant.JMINUS, 2, 0, -6),
        (Invariant.JMINUS, 1, 3, 0),
        (Invariant.STP, 0, 4, 4),
        (Invariant.JPLUS, 3, 1, -10),
        (Invariant.JMINUS, 0, 6, -2),
    ],
)
def test_planar_base_values(inv, omega, k, doubled):
    assert planar_base_value(inv, StandardFrontId(omega, k)) == doubled


def test_jplus_jumps_by_two_on_kplus_birth():
    code = standard_code(1, 0)
    _, event = apply_move(code, MoveSpec(Stratum.KPLUS, 1, (0, 0)))
    assert format_key(event.key) == "K+[1 | f]"
    assert planar_invariant(Invariant.JPLUS, StandardFrontId(1, 0), [event]) == 4
    assert planar_invariant(Invariant.JMINUS, StandardFrontId(1, 0), [event]) == 0
    assert planar_invariant(Invariant.STP, StandardFrontId(1, 0), [event]) == 0


def test_jminus_and_stp_react_to_their_strata():
    code = standard_code(2, 0)
    _, event = apply_move(code, MoveSpec(Stratum.KMINUS, 1, (0, 1)))
    assert planar_invariant(Invariant.JMINUS, StandardFrontId(2, 0), [event]) == -6 + 4
    assert planar_invariant(Invariant.JPLUS, StandardFrontId(2, 0), [event]) == -4


def test_iplus_of_torus_eight():
    code = eight_code(torus_word("a1"), torus_word("b1 f"))
    value = iplus(code)
    assert set(value.lines()) == {"1 * K+[a1 | b1 f]", "-1 * K+[a1 f | b1]"}
    assert value.coefficient_sum() == 0


def test_iplus_of_a_circle_is_zero():
    assert iplus(standard_code(1, 0)).is_zero


def test_module_vector_arithmetic():
    code = eight_code(torus_word("a1"), torus_word("b1 f"))
    v = iplus(code)
    assert (v - v).is_zero
    assert v.scaled(2) == v + v
    key = next(iter(v.terms))
    assert v.coefficient(key) in (Fraction(1), Fraction(-1))
    assert ModuleVector({key: 0}).is_zero


def test_iplus_jump_law_on_kplus_birth():
    before = eight_code(torus_word("a1"), torus_word("b1 f"))
    after, event = apply_move(before, MoveSpec(Stratum.KPLUS, 1, (0, 1)))
    s1, s2 = event.key.entries
    assert iplus(after) - iplus(before) == iplus_delta(s1, s2)
    check = order_one_check([event], before, after)
    assert check.ok
    assert not check.kplus_cancel


def test_iplus_ignores_other_strata():
    start = eight_code(torus_word("a1"), torus_word("b1 f"))
    swallowtail, _ = apply_move(start, MoveSpec(Stratum.LAMBDA, 1, (0,)))
    assert iplus(swallowtail) == iplus(start)
    kminus, _ = apply_move(start, MoveSpec(Stratum.KMINUS, 1, (0, 1)))
    assert iplus(kminus) == iplus(start)
    pi, _ = apply_move(swallowtail, MoveSpec(Stratum.PI, 1, (2, 5)))
    assert iplus(pi) == iplus(swallowtail)


surfaces = st.sampled_from([TORUS, FREE_TWO])
OTHER_STRATA = (Stratum.KMINUS, Stratum.LAMBDA, Stratum.PI)


@settings(max_examples=100)
@given(data=st.data(), surface=surfaces)
def test_iplus_jump_law_on_random_kplus_moves(data, surface):
    before = data.draw(grown_codes(eight_codes(surface, max_length=2), max_steps=2))
    move = data.draw(creation_moves(before, (Stratum.KPLUS,)))
    after, event = apply_move(before, move)
    check = order_one_check([event], before, after)
    assert check.predicted_matches
    assert not check.kplus_cancel


@settings(max_examples=100)
@given(data=st.data(), surface=surfaces)
def test_iplus_is_unchanged_by_other_strata(data, surface):
    code = data.draw(grown_codes(eight_codes(surface, max_length=2), max_steps=2))
    grown = data.draw(grown_codes(st.just(code), max_steps=3, strata=OTHER_STRATA))
    assert iplus(grown) == iplus(code)


@settings(max_examples=100)
@given(data=st.data(), surface=surfaces)
def test_iplus_is_unchanged_by_triple_point_moves(data, surface):
    x, y, z = (data.draw(elements(surface, 3)) for _ in range(3))
    code = triple_code(x, y, z)
    moved, _ = apply_move(code, MoveSpec(Stratum.T, 1, (0, 2, 4)))
    assert iplus(moved) == iplus(code)


@settings(max_examples=200)
@given(data=st.data(), surface=surfaces)
def test_iplus_delta_is_supported_on_neighbours(data, surface):
    s1, s2 = data.draw(elements(surface, 3)), data.draw(elements(surface, 3))
    delta = iplus_delta(s1, s2)
    assert delta.coefficient_sum() == 0
    k0 = kplus_key((s1, s2))
    f = gc.fiber(surface)
    up = kplus_key((gc.compose(s1, f), gc.compose(s2, gc.inverse(f))))
    down = kplus_key((gc.compose(s1, gc.inverse(f)), gc.compose(s2, f)))
    if len({k0, up, down}) < 3:
        return
    assert set(delta.terms) == {k0, up, down}
    assert sorted([order_index(k0, up), order_index(k0, down)]) == [-1, 1]
    assert delta.coefficient(k0) == 2


def test_iplus_returns_after_birth_and_death():
    before = eight_code(torus_word("a1"), torus_word("b1 f"))
    born, up = apply_move(before, MoveSpec(Stratum.KPLUS, 1, (0, 1)))
    dead, down = apply_move(born, MoveSpec(Stratum.KPLUS, -1, (1, 4)))
    check = order_one_check([up, down], before, dead)
    assert check.kplus_cancel and check.equal and check.ok


def test_iplus_needs_orientable_surface():
    d = gc.generator(KLEIN_BOTTLE, "d")
    with pytest.raises(UnsupportedSurface):
        iplus(eight_code(d, d))
    with pytest.raises(UnsupportedSurface):
        iplus_delta(d, d)
