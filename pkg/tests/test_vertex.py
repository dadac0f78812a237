import itertools
import random
from fractions import Fraction

import pytest

from d4exact import liealg as L
from d4exact import vertex as V


@pytest.fixture(scope="module")
def tab():
    return L.build_d4()


@pytest.fixture(scope="module")
def malg(tab):
    return V.ModeAlgebra(tab, V.VAConfig.from_m(1))


def test_vaconfig_levels():
    assert V.VAConfig.from_m(0).k == -2
    assert V.VAConfig.from_m(1).k == Fraction(-14, 3)
    with pytest.raises(ValueError):
        V.VAConfig(-6)


def test_vacuum_annihilation(malg):
    for g in range(0, 28, 5):
        assert malg.act(g, 0, V.VACUUM) == {}
        assert malg.act(g, 3, V.VACUUM) == {}


def test_central_term_example(malg):
    eth, fth = L.e_index(L.THETA), L.f_index(L.THETA)
    got = malg.act(eth, 1, ((1, fth),))
    assert got == {V.VACUUM: Fraction(-14, 3)}


def test_already_ordered_prepend(malg):
    eth = L.e_index(L.THETA)
    h1 = L.h_index(1)
    got = malg.act(h1, -1, ((1, eth),))
    assert got == {((1, h1), (1, eth)): 1}
    got2 = malg.act(eth, -2, ((1, h1),))
    assert got2 == {((2, eth), (1, h1)): 1}


def test_commutator_law(tab, malg):
    rng = random.Random(11)
    monos = [
        V.VACUUM,
        ((1, L.e_index(L.THETA)),),
        ((2, L.h_index(2)), (1, L.f_index((1, -1, 0, 0)))),
        ((1, L.f_index((0, 1, -1, 0))), (1, L.e_index((1, 0, 0, 1)))),
    ]
    for _ in range(60):
        x = rng.randrange(28)
        y = rng.randrange(28)
        m = rng.choice([-2, -1, 0, 1, 2])
        p = rng.choice([-2, -1, 0, 1])
        mono = rng.choice(monos)
        v = {mono: Fraction(1)}
        lhs = V.va_add(
            malg.apply_mode(x, m, malg.apply_mode(y, p, v)),
            malg.apply_mode(y, p, malg.apply_mode(x, m, v)),
            Fraction(-1),
        )
        rhs = malg.apply_mode(tab.bracket[x][y], m + p, v)
        if m + p == 0 and m != 0:
            rhs = V.va_add(rhs, v, m * malg.k * tab.form[x][y])
        assert lhs == rhs, (x, y, m, p, mono)


def test_grading(malg):
    mono = ((2, L.e_index(L.THETA)), (1, L.h_index(3)))
    d0, w0 = V.mono_degree(mono), V.mono_weight(mono)
    for g, n in [(L.f_index((1, -1, 0, 0)), -2), (L.e_index((0, 1, 0, 1)), 1)]:
        out = malg.act(g, n, mono)
        for m in out:
            assert V.mono_degree(m) == d0 - n
            assert V.mono_weight(m) == tuple(
                a + b for a, b in zip(w0, L.gen_weight(g))
            )


def test_enumerate_examples():
    assert V.enumerate_weight_space(1, (2, 0, 0, 0)) == []
    assert V.enumerate_weight_space(1, (0, 1, 0, 0)) == [((1, L.e_index(L.THETA)),)]
    got = V.enumerate_weight_space(2, (2, 0, 0, 0))
    want = sorted(
        (
            ((1, L.e_index((1, -1, 0, 0))), (1, L.e_index((1, 1, 0, 0)))),
            ((1, L.e_index((1, 0, -1, 0))), (1, L.e_index((1, 0, 1, 0)))),
            ((1, L.e_index((1, 0, 0, -1))), (1, L.e_index((1, 0, 0, 1)))),
        ),
        key=V.mono_key,
    )
    assert got == want


def test_enumerate_spinor_weight_empty():
    assert V.enumerate_weight_space(2, (0, 0, 1, 0)) == []


def test_enumerate_against_brute_force():
    alphabet = [(d, g) for d in (3, 2, 1) for g in range(28)]
    for degree in (1, 2, 3):
        seen = {}
        for size in range(1, degree + 1):
            for combo in itertools.combinations_with_replacement(alphabet, size):
                if sum(d for d, _ in combo) != degree:
                    continue
                mono = tuple(sorted(combo, key=lambda f: V.factor_key(*f)))
                seen.setdefault(V.mono_weight(mono), set()).add(mono)
        for weight_eps, monos in seen.items():
            w_omega = L.eps_to_omega(weight_eps)
            got = V.enumerate_weight_space(degree, w_omega)
            assert got == sorted(monos, key=V.mono_key)


def test_enumerate_stable():
    a = V.enumerate_weight_space(3, (1, 0, 1, 0))
    b = V.enumerate_weight_space(3, (1, 0, 1, 0))
    assert a == b and a == sorted(a, key=V.mono_key)


def test_mode_changes_weight(malg):
    basis = V.enumerate_weight_space(2, (2, 0, 0, 0))
    out = malg.act_elem(L.e_index(L.SIMPLE_ROOTS[0]), 0, {m: Fraction(1) for m in basis})
    for m in out:
        assert V.mono_weight(m) != (2, 0, 0, 0)


def test_apply_sigma(tab, malg):
    sig = L.triality()
    a2 = L.e_index(L.SIMPLE_ROOTS[1])
    v = {((1, a2),): Fraction(1)}
    assert V.apply_sigma(v, sig, malg) == v

    rng = random.Random(3)
    basis = V.enumerate_weight_space(3, (0, 1, 0, 0))
    v = {m: Fraction(rng.randint(-5, 5)) for m in rng.sample(basis, 5)}
    v = {m: c for m, c in v.items() if c}
    out = v
    for _ in range(3):
        out = V.apply_sigma(out, sig, malg)
    assert out == v


def test_sigma_maps_weight_spaces(tab, malg):
    sig = L.triality()
    src = V.enumerate_weight_space(3, (2, 0, 0, 0))
    dst = V.enumerate_weight_space(3, (0, 0, 2, 0))
    image = set()
    for m in src:
        out = V.apply_sigma({m: Fraction(1)}, sig, malg)
        image.update(out)
    assert image == set(dst)


def test_mono_tokens_round_trip():
    mono = ((3, 5), (1, 2), (1, 2), (1, 17))
    text = V.mono_to_tokens(mono)
    assert text == "g5(-3)^1 g2(-1)^2 g17(-1)^1"
    assert V.mono_from_tokens(text) == mono
    with pytest.raises(ValueError):
        V.mono_from_tokens("g2(-1)^1 g5(-3)^1")
