from fractions import Fraction

import pytest

from d4exact import liealg as L


@pytest.fixture(scope="module")
def tab():
    return L.build_d4()


@pytest.fixture(scope="module")
def sig():
    return L.triality()


def test_generator_layout():
    assert L.NGEN == 28
    assert len(L.POS_ROOTS) == 12
    assert L.POS_ROOTS == tuple(sorted(L.POS_ROOTS))
    assert L.gen_name(L.h_index(1)) == "h1"
    assert {L.gen_weight(g) for g in range(28)} >= set(L.POS_ROOTS)


def test_bracket_examples(tab):
    e12 = L.e_index((1, -1, 0, 0))
    f12 = L.f_index((1, -1, 0, 0))
    assert tab.bracket[e12][f12] == {L.h_index(1): 1, L.h_index(2): -1}
    assert tab.bracket[L.h_index(1)][e12] == {e12: 1}
    assert tab.bracket[e12][L.e_index((1, 1, 0, 0))] == {}


def test_antisymmetry(tab):
    for a in range(L.NGEN):
        for b in range(L.NGEN):
            lhs = tab.bracket[a][b]
            rhs = {g: -c for g, c in tab.bracket[b][a].items()}
            assert lhs == rhs


def test_jacobi_all_triples(tab):
    br = tab.bracket_elem
    basis = [{g: Fraction(1)} for g in range(L.NGEN)]
    for a in range(L.NGEN):
        xa = basis[a]
        for b in range(L.NGEN):
            xb = basis[b]
            ab = tab.bracket[a][b]
            for c in range(L.NGEN):
                xc = basis[c]
                term1 = br(ab, xc)
                term2 = br(tab.bracket[b][c], xa)
                term3 = br(tab.bracket[c][a], xb)
                acc = L.elem_add(L.elem_add(term1, term2), term3)
                assert not acc, (a, b, c, acc)


def test_form_examples(tab):
    eth = L.e_index(L.THETA)
    fth = L.f_index(L.THETA)
    tth = tab.coroot_elem(L.THETA)
    assert tab.inv_form(tth, tth) == 2
    assert tab.form[eth][fth] == 1
    assert tab.form[L.h_index(1)][L.e_index((1, -1, 0, 0))] == 0


def test_form_invariance_all_triples(tab):
    for a in range(L.NGEN):
        for b in range(L.NGEN):
            ab = tab.bracket[a][b]
            for c in range(L.NGEN):
                lhs = sum(
                    (cv * tab.form[g][c] for g, cv in ab.items()), Fraction(0)
                )
                rhs = sum(
                    (cv * tab.form[b][g] for g, cv in tab.bracket[a][c].items()),
                    Fraction(0),
                )
                assert lhs + rhs == 0, (a, b, c)


def test_root_space_decomposition(tab):
    for i in range(4):
        h = L.h_index(i + 1)
        for k, root in enumerate(L.POS_ROOTS):
            e = L.E_BLOCK + k
            f = L.F_BLOCK + k
            assert tab.bracket[h][e] == ({e: root[i]} if root[i] else {})
            assert tab.bracket[h][f] == ({f: -root[i]} if root[i] else {})


def test_omega_eps_conversions():
    assert L.omega_to_eps((1, 0, 0, 0)) == (1, 0, 0, 0)
    assert L.omega_to_eps((0, 1, 0, 0)) == (1, 1, 0, 0)
    assert L.omega_to_eps((0, 0, 0, 0)) == (0, 0, 0, 0)
    # <omega_i, alpha_j_vee> = delta_ij
    for i in range(4):
        w = [0] * 4
        w[i] = 1
        assert L.eps_to_omega(L.omega_to_eps(w)) == tuple(Fraction(c) for c in w)


def test_dominant_integral():
    assert L.is_dominant_integral((0, 0, 0, 0))
    assert not L.is_dominant_integral((Fraction(-14, 3), 0, 0, 0))
    assert L.is_dominant_integral((2, 0, 0, 0))
    assert not L.is_dominant_integral((Fraction(1, 2), 0, 0, 0))


def test_triality_on_simple_generators(tab, sig):
    a1, a2, a3, a4 = L.SIMPLE_ROOTS
    assert sig.images[L.e_index(a1)] == {L.e_index(a3): 1}
    assert sig.images[L.e_index(a3)] == {L.e_index(a4): 1}
    assert sig.images[L.e_index(a4)] == {L.e_index(a1): 1}
    assert sig.images[L.e_index(a2)] == {L.e_index(a2): 1}
    h_a2 = tab.coroot_elem(a2)
    assert sig.apply(h_a2) == h_a2
    assert sig.root_perm[(1, -1, 0, 0)] == (0, 0, 1, -1)
    assert sig.root_perm[(0, 1, -1, 0)] == (0, 1, -1, 0)
    assert sig.root_perm[(0, 0, 1, 1)] == (1, -1, 0, 0)
    assert sig.root_perm[L.THETA] == L.THETA


def test_triality_order_three(sig):
    for g in range(L.NGEN):
        x = {g: Fraction(1)}
        assert sig.apply(sig.apply(sig.apply(x))) == x


def test_triality_is_automorphism(tab, sig):
    for a in range(L.NGEN):
        xa = {a: Fraction(1)}
        sxa = sig.apply(xa)
        for b in range(L.NGEN):
            xb = {b: Fraction(1)}
            lhs = sig.apply(tab.bracket[a][b])
            rhs = tab.bracket_elem(sxa, sig.apply(xb))
            assert lhs == rhs, (a, b)


def test_triality_preserves_form(tab, sig):
    for a in range(L.NGEN):
        sa = sig.apply({a: Fraction(1)})
        for b in range(L.NGEN):
            sb = sig.apply({b: Fraction(1)})
            assert tab.inv_form(sa, sb) == tab.form[a][b]


def test_triality_omega_perm(sig):
    assert sig.omega_perm((1, 0, 0, 0)) == (0, 0, 1, 0)
    assert sig.omega_perm((0, 0, 1, 0)) == (0, 0, 0, 1)
    assert sig.omega_perm((0, 0, 0, 1)) == (1, 0, 0, 0)
    assert sig.omega_perm((0, 1, 0, 0)) == (0, 1, 0, 0)


def test_structure_dump_deterministic(tab):
    d1 = tab.dump()
    d2 = L.StructureTable().dump()
    assert d1 == d2
    assert d1.startswith("[g0,")
