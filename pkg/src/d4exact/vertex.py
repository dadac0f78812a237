"""PBW machinery for the universal affine vertex algebra of D4.

A PBW monomial is a tuple of (depth, generator) factors applied to the
vacuum, depth n >= 1 standing for mode -n.  Canonical order: depth
descending, then generator index ascending; repeated factors sit next to
each other.  Elements are sparse dicts {monomial: Fraction}.

Mode action renormalizes with the affine commutator

    [x(m), y(p)] = [x,y](m+p) + m delta_{m+p,0} k (x|y)

and x(n) 1 = 0 for n >= 0.  The canonical order and the generator index
order (f-block, then h-block, then e-block, roots lexicographic) are
fixed; every serialized artifact carries the tag
``order=depth-desc,genidx-asc``.

All values are immutable; ModeAlgebra only grows an internal memo table
and its results are shared, so callers must not mutate returned dicts.
"""

from __future__ import annotations

from fractions import Fraction

from . import liealg
from .liealg import NGEN, gen_weight

ORDER_TAG = "depth-desc,genidx-asc"

VACUUM = ()


def factor_key(depth, gen):
    return (-depth, gen)


def mono_key(mono):
    """Total order on monomials used for deterministic output."""
    return tuple(factor_key(d, g) for d, g in mono) + ((1, 0),)


def mono_degree(mono) -> int:
    return sum(d for d, _ in mono)


def mono_weight(mono):
    w = [0, 0, 0, 0]
    for _, g in mono:
        for i, c in enumerate(gen_weight(g)):
            w[i] += c
    return tuple(w)


def is_canonical(mono) -> bool:
    keys = [factor_key(d, g) for d, g in mono]
    return keys == sorted(keys)


def va_add(a: dict, b: dict, coeff=Fraction(1)) -> dict:
    out = dict(a)
    for m, c in b.items():
        nv = out.get(m, Fraction(0)) + coeff * c
        if nv:
            out[m] = nv
        else:
            out.pop(m, None)
    return out


def va_scale(a: dict, coeff) -> dict:
    coeff = Fraction(coeff)
    if not coeff:
        return {}
    return {m: c * coeff for m, c in a.items()}


def element_degree_weight(elem: dict):
    """(degree, weight) of a homogeneous element; raises if mixed."""
    degs = {mono_degree(m) for m in elem}
    wts = {mono_weight(m) for m in elem}
    if len(degs) > 1 or len(wts) > 1:
        raise ValueError("element is not homogeneous")
    if not elem:
        return None, None
    return degs.pop(), wts.pop()


class VAConfig:
    """Level data: k = -6 + 4/(2m+1) when built from the integer m."""

    __slots__ = ("k", "m")

    def __init__(self, k, m=None):
        self.k = Fraction(k)
        if self.k == -6:
            raise ValueError("critical level")
        self.m = m

    @classmethod
    def from_m(cls, m: int) -> "VAConfig":
        if m < 0:
            raise ValueError("m must be >= 0")
        return cls(Fraction(-6) + Fraction(4, 2 * m + 1), m)

    def __repr__(self):
        return f"VAConfig(k={self.k})"


class ModeAlgebra:
    """Normal ordering engine for modes acting on PBW monomials.

    act(gen, n, mono) returns the canonical form of x_gen(n) applied to
    the monomial, memoized; results are shared and must not be mutated.
    """

    def __init__(self, table: liealg.StructureTable, cfg: VAConfig):
        self.table = table
        self.k = cfg.k
        self.cfg = cfg
        self._memo: dict = {}

    def act(self, gen: int, n: int, mono) -> dict:
        key = (gen, n, mono)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        out = self._act(gen, n, mono)
        self._memo[key] = out
        return out

    def _act(self, gen, n, mono):
        if not mono:
            if n >= 0:
                return {}
            return {((-n, gen),): Fraction(1)}
        d1, y1 = mono[0]
        if n < 0 and factor_key(-n, gen) <= factor_key(d1, y1):
            return {((-n, gen),) + mono: Fraction(1)}
        rest = mono[1:]
        out: dict = {}
        # x(n) y(-d) w = y(-d) x(n) w + [x,y](n-d) w + n d_{n,d} k (x|y) w
        for m1, c1 in self.act(gen, n, rest).items():
            for m2, c2 in self.act(y1, -d1, m1).items():
                nv = out.get(m2, Fraction(0)) + c1 * c2
                if nv:
                    out[m2] = nv
                else:
                    out.pop(m2, None)
        for z, cz in self.table.bracket[gen][y1].items():
            for m1, c1 in self.act(z, n - d1, rest).items():
                nv = out.get(m1, Fraction(0)) + cz * c1
                if nv:
                    out[m1] = nv
                else:
                    out.pop(m1, None)
        if n == d1:
            c = n * self.k * self.table.form[gen][y1]
            if c:
                nv = out.get(rest, Fraction(0)) + c
                if nv:
                    out[rest] = nv
                else:
                    out.pop(rest, None)
        return out

    def act_elem(self, gen: int, n: int, elem: dict) -> dict:
        out: dict = {}
        for m, c in elem.items():
            for m2, c2 in self.act(gen, n, m).items():
                nv = out.get(m2, Fraction(0)) + c * c2
                if nv:
                    out[m2] = nv
                else:
                    out.pop(m2, None)
        return out

    def apply_mode(self, x, n: int, elem: dict) -> dict:
        """Action of x(n) for x a generator index or a sparse element."""
        if isinstance(x, int):
            return self.act_elem(x, n, elem)
        out: dict = {}
        for g, cg in x.items():
            out = va_add(out, self.act_elem(g, n, elem), cg)
        return out


# ---------------------------------------------------------------------------
# weight-space enumeration


def enumerate_weight_space(degree: int, weight_omega, *, _cache={}):
    """All PBW monomials of the given conformal degree and g-weight
    (fundamental-weight coordinates), canonically sorted.  Deterministic
    and cached."""
    weight_omega = tuple(Fraction(c) for c in weight_omega)
    key = (degree, weight_omega)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    eps = liealg.omega_to_eps(weight_omega)
    if any(c.denominator != 1 for c in eps):
        _cache[key] = []
        return []
    target = tuple(int(c) for c in eps)
    out: list = []
    factors = _factor_alphabet(degree)

    def rec(pos, rem_deg, acc_w, chosen):
        if rem_deg == 0:
            if acc_w == target:
                out.append(tuple(chosen))
            return
        # each remaining factor moves every coordinate by at most 1 and
        # consumes at least one unit of degree
        for i in range(4):
            if abs(target[i] - acc_w[i]) > rem_deg:
                return
        for idx in range(pos, len(factors)):
            d, g, wt = factors[idx]
            if d > rem_deg:
                continue
            chosen.append((d, g))
            rec(idx, rem_deg - d,
                (acc_w[0] + wt[0], acc_w[1] + wt[1], acc_w[2] + wt[2], acc_w[3] + wt[3]),
                chosen)
            chosen.pop()

    rec(0, degree, (0, 0, 0, 0), [])
    out.sort(key=mono_key)
    _cache[key] = out
    return out


def _factor_alphabet(max_depth):
    """(depth, gen, weight) triples in canonical factor order."""
    out = []
    for d in range(max_depth, 0, -1):
        for g in range(NGEN):
            out.append((d, g, gen_weight(g)))
    return out


# ---------------------------------------------------------------------------
# triality on elements


def apply_sigma(elem: dict, sigma: liealg.Triality, malg: ModeAlgebra) -> dict:
    """Apply the triality automorphism factor-wise (modes unchanged) and
    re-canonicalize.  Cartan generators map to combinations, so the
    result is rebuilt by acting with the image factors on the vacuum."""
    out: dict = {}
    for mono, coeff in elem.items():
        cur = {VACUUM: coeff}
        for d, g in reversed(mono):
            cur = malg.apply_mode(sigma.images[g], -d, cur)
        out = va_add(out, cur)
    return out


# ---------------------------------------------------------------------------
# serialization helpers (used by the singular-vector cache)


def mono_merged_factors(mono):
    """Factors as (depth, gen, multiplicity) runs."""
    runs = []
    for d, g in mono:
        if runs and runs[-1][0] == d and runs[-1][1] == g:
            runs[-1][2] += 1
        else:
            runs.append([d, g, 1])
    return [(d, g, e) for d, g, e in runs]


def mono_to_tokens(mono) -> str:
    return " ".join(f"g{g}(-{d})^{e}" for d, g, e in mono_merged_factors(mono))


def mono_from_tokens(text: str):
    factors = []
    for tok in text.split():
        head, _, exp = tok.partition("^")
        gpart, _, dpart = head.partition("(-")
        g = int(gpart[1:])
        d = int(dpart.rstrip(")"))
        factors.extend([(d, g)] * int(exp))
    mono = tuple(factors)
    if not is_canonical(mono):
        raise ValueError(f"non-canonical monomial token: {text!r}")
    return mono
