"""Zhu-algebra side of the pipeline.

The projection of the vacuum module onto the enveloping algebra follows
the recursion F(1) = 1, F(a(-n-1) w) = (-1)^n (a F(w) - F(a(0) w)); on
level-one generators this realizes the isomorphism with U(g).  Words of
U(g) are kept in PBW order over the global generator order (f-block,
h-block, e-block), so the Harish-Chandra-style projection is: drop every
word containing an e-block factor, re-express the pure Cartan remainder
as a polynomial in the simple-coroot coordinates h1..h4.

Eigenvalue convention: a zero-weight element r acts on a highest-weight
vector of weight mu as the scalar p_r(mu), and evaluation is the
substitution h_i = <mu, alpha_i_vee>.
"""

from __future__ import annotations

from fractions import Fraction

from . import hpoly, liealg, vertex
from .liealg import E_BLOCK, H_BLOCK, NGEN, f_index
from .vertex import ModeAlgebra

# UEA words: tuples of (generator, exponent), generators strictly
# increasing; elements are dicts {word: Fraction}.

ONE = ()


def word_degree(word) -> int:
    return sum(e for _, e in word)


def word_weight(word):
    w = [0, 0, 0, 0]
    for g, e in word:
        for i, c in enumerate(liealg.gen_weight(g)):
            w[i] += e * c
    return tuple(w)


def ue_add(a: dict, b: dict, coeff=Fraction(1)) -> dict:
    out = dict(a)
    for w, c in b.items():
        nv = out.get(w, Fraction(0)) + coeff * c
        if nv:
            out[w] = nv
        else:
            out.pop(w, None)
    return out


def ue_scale(a: dict, coeff) -> dict:
    coeff = Fraction(coeff)
    if not coeff:
        return {}
    return {w: c * coeff for w, c in a.items()}


class UEA:
    """PBW straightening engine for U(g); pure and memoized.

    Returned dicts are shared via the memo tables and must not be
    mutated by callers.
    """

    def __init__(self, table: liealg.StructureTable):
        self.table = table
        self._left: dict = {}
        self._right: dict = {}

    # -- multiplication by a single generator ---------------------------

    def mul_gen_left(self, g: int, word) -> dict:
        key = (g, word)
        hit = self._left.get(key)
        if hit is not None:
            return hit
        out = self._mul_gen_left(g, word)
        self._left[key] = out
        return out

    def _mul_gen_left(self, g, word):
        if not word:
            return {((g, 1),): Fraction(1)}
        (g0, e0) = word[0]
        if g < g0:
            return {((g, 1),) + word: Fraction(1)}
        if g == g0:
            return {((g, e0 + 1),) + word[1:]: Fraction(1)}
        # move g past one copy of g0
        rest = ((g0, e0 - 1),) + word[1:] if e0 > 1 else word[1:]
        out: dict = {}
        for w1, c1 in self.mul_gen_left(g, rest).items():
            for w2, c2 in self.mul_gen_left(g0, w1).items():
                nv = out.get(w2, Fraction(0)) + c1 * c2
                if nv:
                    out[w2] = nv
                else:
                    out.pop(w2, None)
        for z, cz in self.table.bracket[g][g0].items():
            for w1, c1 in self.mul_gen_left(z, rest).items():
                nv = out.get(w1, Fraction(0)) + cz * c1
                if nv:
                    out[w1] = nv
                else:
                    out.pop(w1, None)
        return out

    def mul_gen_right(self, word, g: int) -> dict:
        key = (word, g)
        hit = self._right.get(key)
        if hit is not None:
            return hit
        out = self._mul_gen_right(word, g)
        self._right[key] = out
        return out

    def _mul_gen_right(self, word, g):
        if not word:
            return {((g, 1),): Fraction(1)}
        (g0, e0) = word[-1]
        if g > g0:
            return {word + ((g, 1),): Fraction(1)}
        if g == g0:
            return {word[:-1] + ((g, e0 + 1),): Fraction(1)}
        rest = word[:-1] + ((g0, e0 - 1),) if e0 > 1 else word[:-1]
        out: dict = {}
        for w1, c1 in self.mul_gen_right(rest, g).items():
            for w2, c2 in self.mul_gen_right(w1, g0).items():
                nv = out.get(w2, Fraction(0)) + c1 * c2
                if nv:
                    out[w2] = nv
                else:
                    out.pop(w2, None)
        # w g0 g = w g g0 + w [g0, g]
        for z, cz in self.table.bracket[g0][g].items():
            for w1, c1 in self.mul_gen_right(rest, z).items():
                nv = out.get(w1, Fraction(0)) + cz * c1
                if nv:
                    out[w1] = nv
                else:
                    out.pop(w1, None)
        return out

    # -- element-level operations ---------------------------------------

    def mul_left(self, x, u: dict) -> dict:
        """(x u) for x a generator index or sparse Lie-algebra element."""
        items = ((x, Fraction(1)),) if isinstance(x, int) else tuple(x.items())
        out: dict = {}
        for g, cg in items:
            for w, cw in u.items():
                c = cg * cw
                for w2, c2 in self.mul_gen_left(g, w).items():
                    nv = out.get(w2, Fraction(0)) + c * c2
                    if nv:
                        out[w2] = nv
                    else:
                        out.pop(w2, None)
        return out

    def mul_right(self, u: dict, x) -> dict:
        items = ((x, Fraction(1)),) if isinstance(x, int) else tuple(x.items())
        out: dict = {}
        for g, cg in items:
            for w, cw in u.items():
                c = cg * cw
                for w2, c2 in self.mul_gen_right(w, g).items():
                    nv = out.get(w2, Fraction(0)) + c * c2
                    if nv:
                        out[w2] = nv
                    else:
                        out.pop(w2, None)
        return out

    def adjoint(self, x, u: dict) -> dict:
        """ad(x) u = x u - u x."""
        return ue_add(self.mul_left(x, u), self.mul_right(u, x), Fraction(-1))


# ---------------------------------------------------------------------------
# vacuum module -> U(g)


def zhu_project(elem: dict, malg: ModeAlgebra, uea: UEA, _memo=None) -> dict:
    """Image of a vacuum-module element in U(g) under the recursion
    F(a(-n-1) w) = (-1)^n (a F(w) - F(a(0) w))."""
    memo = {} if _memo is None else _memo
    out: dict = {}
    for mono, coeff in elem.items():
        out = ue_add(out, _zhu_mono(mono, malg, uea, memo), coeff)
    return out


def _zhu_mono(mono, malg, uea, memo) -> dict:
    if not mono:
        return {ONE: Fraction(1)}
    hit = memo.get(mono)
    if hit is not None:
        return hit
    (d, g), rest = mono[0], mono[1:]
    f_rest = _zhu_mono(rest, malg, uea, memo)
    acc = uea.mul_left(g, f_rest)
    zero_mode = malg.act(g, 0, rest)
    for m2, c2 in zero_mode.items():
        acc = ue_add(acc, _zhu_mono(m2, malg, uea, memo), -c2)
    if (d - 1) % 2:
        acc = ue_scale(acc, -1)
    memo[mono] = acc
    return acc


# ---------------------------------------------------------------------------
# Harish-Chandra-style projection


def hc_project(u: dict) -> dict:
    """Keep the pure Cartan part of a zero-weight element, as a
    polynomial in h1..h4.

    Words with an e-block factor die against a highest-weight vector;
    a word with an f-block factor but no e-block factor cannot have zero
    weight, so its presence signals a non-zero-weight input."""
    out: dict = {}
    for word, coeff in u.items():
        if any(g >= E_BLOCK for g, _ in word):
            continue
        if any(g < H_BLOCK for g, _ in word):
            raise ValueError("f-block remainder: input has nonzero weight")
        exps = [0, 0, 0, 0]
        for g, e in word:
            exps[g - H_BLOCK] = e
        out = hpoly.hp_add(out, hpoly.h_word_to_poly(exps), coeff)
    return out


# the three zero-weight lowering pairs for a weight-2*omega1 vector:
# p1 from (f_{e1-e2}, f_{e1+e2}); p2 from (1,4) minus (1,3); p3 from
# (1,2) minus (1,3)
def _lowering_pair(j):
    minus = [0, 0, 0, 0]
    minus[0] = 1
    minus[j - 1] = -1
    plus = [0, 0, 0, 0]
    plus[0] = 1
    plus[j - 1] = 1
    return f_index(tuple(minus)), f_index(tuple(plus))


def lowered_projections(vp: dict, uea: UEA, pairs=None) -> dict:
    """hc_project(ad(a) ad(b) vp) for the pair words indexed by j=2,3,4.

    `pairs` may override the lowering elements (used for the
    triality-transported systems); entries are (a, b) with a applied last.
    """
    out = {}
    for j in (2, 3, 4):
        if pairs is None:
            a, b = _lowering_pair(j)
        else:
            a, b = pairs[j]
        out[j] = hc_project(uea.adjoint(a, uea.adjoint(b, vp)))
    return out


def extract_p(vp: dict, which: int, uea: UEA) -> dict:
    """The basis polynomials attached to a weight-2*omega1 projection."""
    low = lowered_projections(vp, uea)
    if which == 1:
        return low[2]
    if which == 2:
        return hpoly.hp_add(low[4], low[3], Fraction(-1))
    if which == 3:
        return hpoly.hp_add(low[2], low[3], Fraction(-1))
    raise ValueError("which must be 1, 2 or 3")


def _trio_from_lowered(low):
    return (
        low[2],
        hpoly.hp_add(low[4], low[3], Fraction(-1)),
        hpoly.hp_add(low[2], low[3], Fraction(-1)),
    )


def full_polynomial_system(orbit, malg: ModeAlgebra, uea: UEA,
                           sigma: liealg.Triality | None = None,
                           cross_check: bool = True) -> list[dict]:
    """Nine polynomials from the singular-vector orbit (v, s v, s^2 v).

    For the i-th orbit member the lowering pairs are transported by
    sigma^i; the result must coincide with the variable permutation
    h1 -> h3 -> h4 -> h1 applied to the first three polynomials, and a
    mismatch signals an inconsistent triality lift."""
    sigma = sigma or liealg.triality()
    polys: list[dict] = []
    base_trio = None
    for i, vec in enumerate(orbit):
        vp = zhu_project(vec, malg, uea)
        pairs = {}
        for j in (2, 3, 4):
            a, b = _lowering_pair(j)
            ea = {a: Fraction(1)}
            eb = {b: Fraction(1)}
            for _ in range(i):
                ea = sigma.apply(ea)
                eb = sigma.apply(eb)
            pairs[j] = (ea, eb)
        low = lowered_projections(vp, uea, pairs)
        trio = _trio_from_lowered(low)
        if i == 0:
            base_trio = trio
        elif cross_check:
            for t, q in zip(trio, base_trio):
                expect = q
                for _ in range(i):
                    expect = hpoly.sigma_permute(expect)
                if t != expect:
                    raise AssertionError(
                        "triality-transported extraction disagrees with "
                        "variable permutation"
                    )
        polys.extend(trio)
    return polys


def classify(polys, solve=None):
    """All common rational zeros of the polynomial system, as
    fundamental-weight coordinates, plus the completeness certificate."""
    from . import polysolve

    solve = solve or polysolve.solve_rational
    points, cert = solve(polys)
    for pt in points:
        for q in polys:
            if hpoly.hp_eval(q, pt) != 0:
                raise AssertionError("returned weight fails a polynomial")
    return sorted(points), cert
