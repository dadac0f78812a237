"""C2-algebra side: the classical limit of the pipeline.

The vacuum module maps onto the symmetric algebra S(g) by sending each
depth-one factor x(-1) to the commutative variable x and killing any
monomial with a deeper factor.  The adjoint action extends to the unique
derivation, and the Chevalley projection keeps the pure Cartan part of a
zero-weight element along S(g) = S(h) + n_- S(g) + S(g) n_+.

Monomials of S(g) are tuples of (generator, exponent) with generators
strictly increasing; elements are dicts {monomial: Fraction}.
"""

from __future__ import annotations

from fractions import Fraction

from . import hpoly, liealg
from .liealg import E_BLOCK, H_BLOCK, f_index

ONE = ()


def sym_add(a: dict, b: dict, coeff=Fraction(1)) -> dict:
    out = dict(a)
    for m, c in b.items():
        nv = out.get(m, Fraction(0)) + coeff * c
        if nv:
            out[m] = nv
        else:
            out.pop(m, None)
    return out


def sym_weight(mono):
    w = [0, 0, 0, 0]
    for g, e in mono:
        for i, c in enumerate(liealg.gen_weight(g)):
            w[i] += e * c
    return tuple(w)


def _mono_mul_var(mono, g):
    out = []
    placed = False
    for gi, e in mono:
        if gi == g:
            out.append((gi, e + 1))
            placed = True
        elif gi > g and not placed:
            out.append((g, 1))
            out.append((gi, e))
            placed = True
        else:
            out.append((gi, e))
    if not placed:
        out.append((g, 1))
    return tuple(out)


def _mono_div_var(mono, g):
    out = []
    for gi, e in mono:
        if gi == g:
            if e > 1:
                out.append((gi, e - 1))
        else:
            out.append((gi, e))
    return tuple(out)


def c2_project(elem: dict) -> dict:
    """x(-1) factors become commutative variables; any factor at depth
    two or more maps to zero."""
    out: dict = {}
    for mono, coeff in elem.items():
        if any(d >= 2 for d, _ in mono):
            continue
        word: dict = {}
        for _, g in mono:
            word[g] = word.get(g, 0) + 1
        key = tuple(sorted(word.items()))
        nv = out.get(key, Fraction(0)) + coeff
        if nv:
            out[key] = nv
        else:
            out.pop(key, None)
    return out


def poisson_ad(x, s: dict, table=None) -> dict:
    """The derivation of S(g) extending ad(x) on degree one."""
    table = table or liealg.build_d4()
    items = ((x, Fraction(1)),) if isinstance(x, int) else tuple(x.items())
    out: dict = {}
    for g0, c0 in items:
        row = table.bracket[g0]
        for mono, cm in s.items():
            for gi, e in mono:
                base = _mono_div_var(mono, gi)
                c = c0 * cm * e
                for z, cz in row[gi].items():
                    m2 = _mono_mul_var(base, z)
                    nv = out.get(m2, Fraction(0)) + c * cz
                    if nv:
                        out[m2] = nv
                    else:
                        out.pop(m2, None)
    return out


def chevalley_project(s: dict) -> dict:
    """Pure Cartan part of a zero-weight element, in h1..h4 coordinates.

    Monomials with an e-variable are dropped (they lie in S(g) n_+ up to
    n_- terms); zero weight forces every dropped monomial with an
    f-variable to carry an e-variable too, which is asserted.
    """
    out: dict = {}
    for mono, coeff in s.items():
        if sym_weight(mono) != (0, 0, 0, 0):
            raise ValueError("input is not of weight zero")
        has_e = any(g >= E_BLOCK for g, _ in mono)
        has_f = any(g < H_BLOCK for g, _ in mono)
        if has_f and not has_e:
            raise AssertionError("zero-weight monomial with f but no e")
        if has_e:
            continue
        exps = [0, 0, 0, 0]
        for g, e in mono:
            exps[g - H_BLOCK] = e
        out = hpoly.hp_add(out, hpoly.h_word_to_poly(exps), coeff)
    return out


def _lowering_pair(j):
    minus = [0, 0, 0, 0]
    minus[0] = 1
    minus[j - 1] = -1
    plus = [0, 0, 0, 0]
    plus[0] = 1
    plus[j - 1] = 1
    return f_index(tuple(minus)), f_index(tuple(plus))


def extract_q(vpp: dict, j: int, table=None) -> dict:
    """Nested Poisson-adjoint lowering then Chevalley projection:
    j=2, 3, 4 give the first three polynomials of the system."""
    table = table or liealg.build_d4()
    a, b = _lowering_pair(j)
    return chevalley_project(poisson_ad(a, poisson_ad(b, vpp, table), table))


def full_q_system(orbit, table=None, sigma=None, cross_check=True) -> list[dict]:
    """Nine polynomials from the C2 images of the singular-vector orbit.

    Lowering pairs are transported by sigma^i for the i-th orbit member;
    results are cross-checked against the variable permutation
    h1 -> h3 -> h4 -> h1 of the first trio."""
    table = table or liealg.build_d4()
    sigma = sigma or liealg.triality()
    polys: list[dict] = []
    base: list[dict] = []
    for i, vec in enumerate(orbit):
        vpp = c2_project(vec)
        for j in (2, 3, 4):
            a, b = _lowering_pair(j)
            ea = {a: Fraction(1)}
            eb = {b: Fraction(1)}
            for _ in range(i):
                ea = sigma.apply(ea)
                eb = sigma.apply(eb)
            q = chevalley_project(
                poisson_ad(ea, poisson_ad(eb, vpp, table), table)
            )
            if i == 0:
                base.append(q)
            elif cross_check:
                expect = base[j - 2]
                for _ in range(i):
                    expect = hpoly.sigma_permute(expect)
                if q != expect:
                    raise AssertionError(
                        "triality-transported extraction disagrees with "
                        "variable permutation"
                    )
            polys.append(q)
    return polys


def nilpotent_cone_check(qs) -> bool:
    """True iff the common zero locus of the (homogeneous) system is the
    origin, certified through the leading-term ideal."""
    from . import polysolve

    return polysolve.origin_only(qs)
