from collections import defaultdict
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import elements
from services import group_core as gc
from services.classes import KeyFamily, g_map, kminus_key, kplus_key, lambda_key, order_index, pi_key, t_key
from services.errors import ParityViolation, UnsupportedSurface, WrongParity
from services.group_core import Ambient
from services.key_format import format_key, parse_key
from services.surfaces import KLEIN_BOTTLE, SPHERE, TORUS, free_surface

FREE_TWO = free_surface(2)

loops = elements(FREE_TWO, 4)
conjugators = elements(FREE_TWO, 3, fiber_range=0)


def w(surface, text, ambient=Ambient.STF):
    return gc.parse_word(surface, text, ambient)


def test_kplus_key_ignores_order_and_conjugation():
    a, b = w(FREE_TWO, "x1"), w(FREE_TWO, "x2 x1 f")
    key = kplus_key((a, b))
    assert kplus_key((b, a)) == key
    t = w(FREE_TWO, "x2")
    assert kplus_key((gc.conjugate(t, a), gc.conjugate(t, b))) == key
    assert format_key(key) == "K+[x1 | x1 x2 f]"


def test_kplus_key_separates_fiber_shifts():
    a, b = w(TORUS, "a1"), w(TORUS, "b1")
    f = gc.fiber(TORUS)
    assert kplus_key((a, b)) != kplus_key((gc.compose(a, f), gc.compose(b, gc.inverse(f))))


def test_klein_fiber_conjugation_identifies_pairs():
    d, f = gc.generator(KLEIN_BOTTLE, "d"), gc.fiber(KLEIN_BOTTLE)
    f_inv = gc.inverse(f)
    first = kplus_key((gc.compose(d, f), gc.compose(f_inv, d)))
    second = kplus_key((gc.compose(d, f_inv), gc.compose(f, d)))
    assert first == second
    assert kplus_key((d, d)) != first


def test_refined_keys_check_maslov_parity():
    a, b = w(TORUS, "a1"), w(TORUS, "b1")
    assert kplus_key((a, b), refined=True, maslov=2).family == KeyFamily.KPLUS_I
    with pytest.raises(ParityViolation):
        kplus_key((a, b), refined=True, maslov=1)
    with pytest.raises(ParityViolation):
        kplus_key((a, b), refined=True)
    d = gc.generator(KLEIN_BOTTLE, "d")
    c = gc.generator(KLEIN_BOTTLE, "c")
    # одна обращающая петля в паре требует нечетного индекса
    assert kplus_key((d, c), refined=True, maslov=1).maslov == 1


def test_kminus_key_requires_odd_half_fiber():
    h = gc.generator(TORUS, "h", Ambient.PTF)
    a = gc.compose(w(TORUS, "a1", Ambient.PTF), h)
    b = gc.compose(w(TORUS, "b1", Ambient.PTF), gc.inverse(h))
    key = kminus_key((a, b))
    assert key == kminus_key((b, a))
    assert format_key(key) == "K-[a1 h | b1 h^-1]"
    with pytest.raises(WrongParity):
        kminus_key((w(TORUS, "a1", Ambient.PTF), b))
    with pytest.raises(UnsupportedSurface):
        kminus_key((gc.generator(KLEIN_BOTTLE, "c"), gc.generator(KLEIN_BOTTLE, "d")), refined=True, maslov=1)


def test_t_key_is_cyclic_but_not_symmetric():
    a, b, c = w(FREE_TWO, "x1"), w(FREE_TWO, "x2"), w(FREE_TWO, "x1 x2")
    key = t_key((a, b, c))
    assert t_key((b, c, a)) == key == t_key((c, a, b))
    assert key.family == KeyFamily.T
    assert all(e.ambient == Ambient.BASE for e in key.entries)


def test_refined_t_key_pushes_fiber_to_last_entry():
    a, b, one = w(TORUS, "a1"), w(TORUS, "b1"), gc.identity(TORUS)
    f = gc.fiber(TORUS)
    key = t_key((gc.compose(a, f), b, one), refined=True, maslov=0)
    assert key == t_key((a, b, f), refined=True, maslov=0)
    assert sum(e.fiber_exp for e in key.entries) == 1


def test_pi_key_and_g_map():
    a, b = w(TORUS, "a1"), w(TORUS, "b1")
    key = pi_key((a, b, 0, 0))
    assert key.family == KeyFamily.PI_I
    assert format_key(key) == "Pi[a1 | b1 | or=0 | mu=0]"
    assert format_key(g_map(key)) == "T[1 | a1 | b1 | mu=0]"
    assert pi_key((a, b, 0, 0), refined=False).family == KeyFamily.T
    with pytest.raises(ValueError):
        g_map(kplus_key((a, b)))


def test_lambda_key_is_conjugacy_class():
    l = w(FREE_TWO, "x1 x2")
    assert lambda_key(l) == lambda_key(w(FREE_TWO, "x2 x1"))
    assert lambda_key(l) != lambda_key(w(FREE_TWO, "x1 x2 f"))


def test_order_index():
    k1 = kplus_key((w(TORUS, "a1"), w(TORUS, "b1")))
    k2 = kplus_key((w(TORUS, "a1 f^2"), w(TORUS, "b1 f^-2")))
    assert order_index(k1, k2) == 2
    assert order_index(k2, k1) == -2
    assert order_index(k1, kplus_key((w(TORUS, "a1"), w(TORUS, "a1")))) is None
    with pytest.raises(UnsupportedSurface):
        order_index(kplus_key((gc.identity(SPHERE), gc.fiber(SPHERE))), kplus_key((gc.identity(SPHERE),) * 2))
    with pytest.raises(ValueError):
        order_index(k1, t_key((w(TORUS, "a1"), w(TORUS, "b1"), gc.identity(TORUS))))


def test_parse_key_canonicalizes_literals():
    assert parse_key(TORUS, "K+[b1 | a1]") == kplus_key((w(TORUS, "a1"), w(TORUS, "b1")))
    assert parse_key(TORUS, "?K+[a1 | b1]") == parse_key(TORUS, "K+[a1 | b1]")
    refined = parse_key(TORUS, "K+[a1 | b1 | mu=2]")
    assert refined.family == KeyFamily.KPLUS_I and refined.maslov == 2
    assert parse_key(TORUS, "K-[a1 h | b1 h^-1]").family == KeyFamily.KMINUS
    assert parse_key(TORUS, "Pi[a1 | b1 | or=0 | mu=0]") == pi_key((w(TORUS, "a1"), w(TORUS, "b1"), 0, 0))
    assert parse_key(FREE_TWO, "L[x2 x1]") == lambda_key(w(FREE_TWO, "x1 x2"))


@pytest.mark.parametrize("literal", ["K+[a1]", "Q[a1]", "Pi[a1 | b1]", "K+[a1 | b1 | mu=x]", "T[a1 | b1]"])
def test_parse_key_rejects_bad_literals(literal):
    with pytest.raises(ValueError):
        parse_key(TORUS, literal)


@settings(max_examples=1_000)
@given(a=loops, b=loops, t=conjugators)
def test_kplus_key_is_class_invariant(a, b, t):
    key = kplus_key((a, b))
    assert kplus_key((gc.conjugate(t, b), gc.conjugate(t, a))) == key
    assert kplus_key((gc.conjugate(t, a), gc.conjugate(t, b))) == key


def _half_fibered(e, sign):
    return gc.compose(gc.lift(e, Ambient.PTF), gc.power(gc.generator(FREE_TWO, "h", Ambient.PTF), sign))


@settings(max_examples=1_000)
@given(a=loops, b=loops, t=conjugators, signs=st.tuples(st.sampled_from((1, -1)), st.sampled_from((1, -1))))
def test_kminus_key_is_class_invariant(a, b, t, signs):
    x, y = _half_fibered(a, signs[0]), _half_fibered(b, signs[1])
    s = gc.lift(t, Ambient.PTF)
    key = kminus_key((x, y))
    assert kminus_key((gc.conjugate(s, y), gc.conjugate(s, x))) == key
    assert kminus_key((gc.conjugate(s, x), gc.conjugate(s, y))) == key


@settings(max_examples=1_000)
@given(a=loops, b=loops, c=loops, t=conjugators, shift=st.integers(-2, 2))
def test_t_key_is_class_invariant(a, b, c, t, shift):
    key = t_key((a, b, c))
    moved = tuple(gc.conjugate(t, e) for e in (b, c, a))
    assert t_key(moved) == key
    refined = t_key((a, b, c), refined=True, maslov=0)
    assert t_key(moved, refined=True, maslov=0) == refined
    pushed = (gc.compose(a, gc.fiber(FREE_TWO, shift)), b, gc.compose(c, gc.fiber(FREE_TWO, -shift)))
    assert t_key(pushed, refined=True, maslov=0) == refined


@settings(max_examples=1_000)
@given(d1=loops, d2=loops, t=conjugators, tag=st.sampled_from((0, 1)), maslov=st.sampled_from((0, 2)))
def test_pi_key_is_class_invariant(d1, d2, t, tag, maslov):
    key = pi_key((d1, d2, tag, maslov))
    assert pi_key((gc.conjugate(t, d1), gc.conjugate(t, d2), tag, maslov)) == key
    assert g_map(key) == t_key((d1, d2, gc.identity(FREE_TWO)), refined=True, maslov=maslov)
    with pytest.raises(ParityViolation):
        pi_key((d1, d2, tag, maslov + 1))


@settings(max_examples=1_000)
@given(l=loops, t=conjugators)
def test_lambda_key_is_class_invariant(l, t):
    assert lambda_key(gc.conjugate(t, l)) == lambda_key(l)


def _torus_ball(radius):
    a1, b1, f = (gc.generator(TORUS, n) for n in ("a1", "b1", "f"))
    points = [p for p in product(range(-radius, radius + 1), repeat=3) if sum(map(abs, p)) <= radius]
    return {p: gc.compose(gc.power(a1, p[0]), gc.power(b1, p[1]), gc.power(f, p[2])) for p in points}


def test_torus_kplus_orbits_are_swaps():
    ball = _torus_ball(3)
    orbits = defaultdict(set)
    for (p, x), (q, y) in product(ball.items(), repeat=2):
        orbits[format_key(kplus_key((x, y)))].add((p, q))
    for pairs in orbits.values():
        p, q = next(iter(pairs))
        assert pairs == {(p, q), (q, p)}


def test_torus_t_orbits_are_rotations():
    ball = {p[:2]: gc.project(e) for p, e in _torus_ball(1).items() if p[2] == 0}
    orbits = defaultdict(set)
    for triple in product(ball.items(), repeat=3):
        names = tuple(p for p, _ in triple)
        orbits[format_key(t_key(tuple(e for _, e in triple)))].add(names)
    for triples in orbits.values():
        x, y, z = next(iter(triples))
        assert triples == {(x, y, z), (y, z, x), (z, x, y)}


def test_kminus_keys_exist_only_on_orientable_surfaces():
    c = gc.generator(KLEIN_BOTTLE, "c")
    with pytest.raises(UnsupportedSurface):
        kminus_key((c, c))
    with pytest.raises(UnsupportedSurface):
        parse_key(KLEIN_BOTTLE, "K-[c | c]")
