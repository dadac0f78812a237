"""Multivariate polynomial algebra over Q in h1..h4: Buchberger Groebner
bases, zero-dimensionality certification, and extraction of all rational
solutions with a completeness certificate.

Polynomials share the sparse dict representation of hpoly; an order tag
("grevlex" or "lex", variable order h1 > h2 > h3 > h4) travels with every
basis.  Inside the Buchberger loop coefficients are scaled to primitive
integer form after every reduction, which keeps the arithmetic in plain
ints; the reduced basis is returned monic over Q.

Certification is counting-based: D is the number of standard monomials of
the grevlex basis, and a solution set is certified complete exactly when
it contains D distinct rational points (the ideal is then radical with
every zero rational).  Rational root extraction of univariate eliminants
delegates to sympy's factor list; everything else is local.

S-pair reductions are pure and could run concurrently against a snapshot
of the basis; this implementation keeps the classic sequential loop.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from . import hpoly
from .hpoly import ZERO_EXP, grevlex_key, hp_add, hp_eval, hp_mul, hp_scale, lex_key

ORDERS = {"grevlex": grevlex_key, "lex": lex_key}


class BudgetExceeded(Exception):
    """Internal signal that a Groebner run blew its work budget."""


# ---------------------------------------------------------------------------
# basic polynomial helpers


def _lead(poly, key):
    return max(poly, key=key)


def _monomial_mul(e1, e2):
    return (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])


def _monomial_div(e1, e2):
    if all(a >= b for a, b in zip(e1, e2)):
        return (e1[0] - e2[0], e1[1] - e2[1], e1[2] - e2[2], e1[3] - e2[3])
    return None


def _monomial_lcm(e1, e2):
    return tuple(max(a, b) for a, b in zip(e1, e2))


def _primitive(poly):
    """Scale to integer coefficients with positive leading content 1."""
    if not poly:
        return poly
    den = 1
    for c in poly.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    g = 0
    for c in poly.values():
        g = math.gcd(g, abs(c.numerator * (den // c.denominator)))
    scale = Fraction(den, g)
    return {e: c * scale for e, c in poly.items()}


def _monic(poly, key):
    lead = poly[_lead(poly, key)]
    if lead == 1:
        return dict(poly)
    return {e: c / lead for e, c in poly.items()}


def reduce_poly(poly, basis, key, counter=None):
    """Normal form of poly modulo the basis (list of (lead, poly) pairs).

    Multi-step top reduction followed by tail reduction; exact over Q.
    """
    remainder: dict = {}
    work = dict(poly)
    while work:
        e = _lead(work, key)
        c = work[e]
        for lead, g in basis:
            quot = _monomial_div(e, lead)
            if quot is not None:
                if counter is not None:
                    counter[0] += 1
                    if counter[0] > counter[1]:
                        raise BudgetExceeded
                factor = c / g[lead]
                for eg, cg in g.items():
                    em = _monomial_mul(eg, quot)
                    nv = work.get(em, Fraction(0)) - factor * cg
                    if nv:
                        work[em] = nv
                    else:
                        work.pop(em, None)
                break
        else:
            remainder[e] = c
            del work[e]
    return remainder


def s_poly(f, g, key):
    lf, lg = _lead(f, key), _lead(g, key)
    lcm = _monomial_lcm(lf, lg)
    qf = _monomial_div(lcm, lf)
    qg = _monomial_div(lcm, lg)
    a = {_monomial_mul(e, qf): c / f[lf] for e, c in f.items()}
    b = {_monomial_mul(e, qg): c / g[lg] for e, c in g.items()}
    return hp_add(a, b, Fraction(-1))


class GroebnerBasis:
    """Reduced Groebner basis: monic polynomials, auto-reduced, with the
    order tag they were computed under."""

    __slots__ = ("polys", "order")

    def __init__(self, polys, order):
        self.polys = tuple(polys)
        self.order = order

    @property
    def key(self):
        return ORDERS[self.order]

    def leads(self):
        key = self.key
        return [_lead(g, key) for g in self.polys]

    def reduce(self, poly):
        key = self.key
        basis = [(_lead(g, key), g) for g in self.polys]
        return reduce_poly(poly, basis, key)

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)


def buchberger(gens, order="grevlex", max_reductions=None) -> GroebnerBasis:
    """Reduced Groebner basis by Buchberger's algorithm.

    Pair pruning: the coprime-leading-term criterion and the chain
    (lcm divisibility) criterion; selection by minimal lcm in the order.
    Raises BudgetExceeded when max_reductions top-reductions are spent.
    """
    key = ORDERS[order]
    counter = [0, max_reductions] if max_reductions else None
    basis: list[dict] = []
    leads: list = []

    def add_poly(p):
        p = _primitive(p)
        basis.append(p)
        leads.append(_lead(p, key))

    gens = [dict(g) for g in gens if g]
    if not gens:
        return GroebnerBasis([], order)
    gens.sort(key=lambda g: key(_lead(g, key)))
    for g in gens:
        r = reduce_poly(g, list(zip(leads, basis)), key, counter)
        if r:
            add_poly(r)

    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    while pairs:
        i, j = min(
            pairs,
            key=lambda ij: (key(_monomial_lcm(leads[ij[0]], leads[ij[1]])), ij),
        )
        pairs.discard((i, j))
        li, lj = leads[i], leads[j]
        lcm = _monomial_lcm(li, lj)
        if _monomial_mul(li, lj) == lcm:
            continue  # coprime leading terms
        # chain criterion: some k with lead_k | lcm and both pairs done
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _monomial_div(lcm, leads[k]) is not None:
                p1 = (min(i, k), max(i, k))
                p2 = (min(j, k), max(j, k))
                if p1 not in pairs and p2 not in pairs:
                    skip = True
                    break
        if skip:
            continue
        r = reduce_poly(s_poly(basis[i], basis[j], key),
                        list(zip(leads, basis)), key, counter)
        if r:
            k = len(basis)
            add_poly(r)
            pairs.update((t, k) for t in range(k))

    # minimalize: ascending leads, keep only elements whose lead no kept
    # element's lead divides
    order_idx = sorted(range(len(basis)), key=lambda i: (key(leads[i]), i))
    kept: list[int] = []
    for i in order_idx:
        if not any(_monomial_div(leads[i], leads[j]) is not None for j in kept):
            kept.append(i)
    reduced = [basis[i] for i in kept]
    # tail-reduce each against the others for the unique reduced basis
    out = []
    for i, g in enumerate(reduced):
        others = [(_lead(h, key), h) for j, h in enumerate(reduced) if j != i]
        r = reduce_poly(g, others, key)
        if r:
            out.append(_monic(r, key))
    out.sort(key=lambda g: key(_lead(g, key)))
    return GroebnerBasis(out, order)


def is_zero_dimensional(gb: GroebnerBasis):
    """(flag, D): flag true when every variable has a pure power among
    the leading terms; D then counts the standard monomials."""
    leads = gb.leads()
    if any(lt == ZERO_EXP for lt in leads):
        return True, 0
    bounds = [None] * 4
    for lt in leads:
        nz = [i for i in range(4) if lt[i]]
        if len(nz) == 1:
            i = nz[0]
            if bounds[i] is None or lt[i] < bounds[i]:
                bounds[i] = lt[i]
    if any(b is None for b in bounds):
        return False, 0
    count = 0
    for exps in itertools.product(*[range(b) for b in bounds]):
        if not any(_monomial_div(exps, lt) is not None for lt in leads):
            count += 1
    return True, count


def standard_monomials(gb: GroebnerBasis):
    ok, _ = is_zero_dimensional(gb)
    if not ok:
        raise ValueError("ideal is not zero-dimensional")
    leads = gb.leads()
    bounds = [0, 0, 0, 0]
    for lt in leads:
        nz = [i for i in range(4) if lt[i]]
        if len(nz) == 1:
            i = nz[0]
            if bounds[i] == 0 or lt[i] < bounds[i]:
                bounds[i] = lt[i]
    out = [
        exps
        for exps in itertools.product(*[range(b) for b in bounds])
        if not any(_monomial_div(exps, lt) is not None for lt in leads)
    ]
    out.sort(key=grevlex_key)
    return out


# ---------------------------------------------------------------------------
# univariate helpers


def _univariate_var(poly):
    used = set()
    for e in poly:
        for i in range(4):
            if e[i]:
                used.add(i)
    if len(used) > 1:
        return None
    return used.pop() if used else -1


def _to_coeff_list(poly, var):
    deg = max(e[var] for e in poly)
    cs = [Fraction(0)] * (deg + 1)
    for e, c in poly.items():
        cs[e[var]] = c
    return cs


def rational_roots(coeffs):
    """(roots, residual_degrees) for a univariate polynomial given by its
    coefficient list; roots are the rational zeros, residual_degrees the
    degrees of the non-linear irreducible factors of the square-free part.
    Factorization over Q delegates to sympy."""
    import sympy

    x = sympy.Symbol("x")
    expr = sum(
        sympy.Rational(c.numerator, c.denominator) * x**i
        for i, c in enumerate(coeffs)
    )
    poly = sympy.Poly(expr, x)
    if poly.degree() <= 0:
        return [], []
    roots = []
    residual = []
    for fac, _mult in poly.factor_list()[1]:
        if fac.degree() == 1:
            r = fac.root(0)
            roots.append(Fraction(int(sympy.numer(r)), int(sympy.denom(r))))
        else:
            residual.append(fac.degree())
    roots.sort()
    return roots, residual


class Certificate:
    """Completeness certificate for a rational solve."""

    __slots__ = ("dimension", "found", "certified", "method", "residual")

    def __init__(self, dimension, found, method, residual=()):
        self.dimension = dimension
        self.found = found
        self.certified = dimension == found
        self.method = method
        self.residual = tuple(residual)

    def __repr__(self):
        return (
            f"Certificate(D={self.dimension}, found={self.found}, "
            f"certified={self.certified}, method={self.method!r})"
        )


# ---------------------------------------------------------------------------
# solving


LEX_BUDGET = 200_000


def solve_rational(gens, lex_budget=LEX_BUDGET):
    """All rational common zeros plus a completeness certificate.

    Strategy: grevlex basis first (zero-dimensionality and the standard
    monomial count D), then a lex basis seeded with it for triangular
    extraction.  When the lex run exceeds its budget, candidate
    coordinates come from per-variable minimal polynomials computed by
    linear algebra on the grevlex normal forms, and the full grid is
    filtered by exact evaluation.  Either way every returned point
    satisfies every generator exactly, and certified means #points == D.
    """
    gens = [g for g in gens if g]
    gb = buchberger(gens, "grevlex")
    if any(_lead(g, gb.key) == ZERO_EXP for g in gb):
        return [], Certificate(0, 0, "inconsistent")
    zd, dim = is_zero_dimensional(gb)
    if not zd:
        return [], Certificate(0, 0, "not-zero-dimensional", residual=("positive-dimensional",))

    residual: list = []
    try:
        lexgb = buchberger(list(gb), "lex", max_reductions=lex_budget)
        points = _solve_lex(lexgb, residual)
        method = "lex-triangular"
    except BudgetExceeded:
        points = _solve_minpoly_grid(gb, gens, residual)
        method = "minpoly-grid"

    points = sorted(set(points))
    verified = [
        pt for pt in points if all(hp_eval(g, pt) == 0 for g in gens)
    ]
    return verified, Certificate(dim, len(verified), method, residual)


def _solve_lex(lexgb: GroebnerBasis, residual):
    """Branch-and-substitute through the lex basis, variables h4 up to h1."""
    key = lexgb.key

    def substituted(poly, assignment):
        out: dict = {}
        for e, c in poly.items():
            val = c
            newe = list(e)
            for var, r in assignment.items():
                if e[var]:
                    val *= r ** e[var]
                    newe[var] = 0
            ne = tuple(newe)
            nv = out.get(ne, Fraction(0)) + val
            if nv:
                out[ne] = nv
            else:
                out.pop(ne, None)
        return out

    solutions = []

    def branch(var, assignment):
        if var < 0:
            solutions.append(tuple(assignment[i] for i in range(4)))
            return
        # polynomials involving only variables >= var
        cands = []
        inconsistent = False
        for g in lexgb:
            sub = substituted(g, assignment)
            if not sub:
                continue
            uv = _univariate_var(sub)
            if uv is None:
                continue
            if uv == -1:
                inconsistent = True
                break
            if uv == var:
                cands.append(_to_coeff_list(sub, var))
            elif uv > var:
                # fully assigned already; nonzero here kills the branch
                inconsistent = True
                break
        if inconsistent:
            return
        if not cands:
            # variable unconstrained on this branch: not zero-dimensional
            residual.append(f"h{var + 1}-unconstrained")
            return
        g = cands[0]
        for other in cands[1:]:
            g = _poly_gcd(g, other)
        roots, res = rational_roots(g)
        residual.extend(res)
        for r in roots:
            assignment[var] = r
            branch(var - 1, assignment)
            del assignment[var]

    branch(3, {})
    return solutions


def _poly_gcd(a, b):
    """Monic gcd of univariate coefficient lists over Q."""

    def deg(p):
        d = len(p) - 1
        while d >= 0 and not p[d]:
            d -= 1
        return d

    def rem(p, q):
        p = list(p)
        dq = deg(q)
        while deg(p) >= dq >= 0:
            dp = deg(p)
            f = p[dp] / q[dq]
            for i in range(dq + 1):
                p[dp - dq + i] -= f * q[i]
            p[dp] = Fraction(0)
        return p

    while deg(b) >= 0:
        a, b = b, rem(a, b)
    d = deg(a)
    if d < 0:
        return a
    lead = a[d]
    return [c / lead for c in a[: d + 1]]


def _solve_minpoly_grid(gb: GroebnerBasis, gens, residual):
    """Candidate coordinates from per-variable minimal polynomials over
    the quotient ring, then exact filtering of the product grid."""
    candidates = []
    for var in range(4):
        mp = minimal_polynomial(gb, var)
        roots, res = rational_roots(mp)
        residual.extend(res)
        candidates.append(roots)
    points = []
    for pt in itertools.product(*candidates):
        if all(hp_eval(g, pt) == 0 for g in gens):
            points.append(tuple(pt))
    return points


def minimal_polynomial(gb: GroebnerBasis, var):
    """Coefficient list of the minimal polynomial of h_var in Q[h]/I,
    from the first linear dependence among normal forms of its powers."""
    std = standard_monomials(gb)
    index = {m: i for i, m in enumerate(std)}
    e = [0, 0, 0, 0]
    e[var] = 1
    xvar = {tuple(e): Fraction(1)}

    powers = [{ZERO_EXP: Fraction(1)}]
    vectors = [_nf_vector(powers[0], index)]
    # echelon of the vectors with recorded combinations
    ech: dict[int, tuple[dict, dict]] = {}  # lead idx -> (vector, combo)

    def insert(vec, combo):
        vec = dict(vec)
        combo = dict(combo)
        while vec:
            lead = min(vec)
            if lead in ech:
                evec, ecombo = ech[lead]
                f = vec[lead]
                for i, c in evec.items():
                    nv = vec.get(i, Fraction(0)) - f * c
                    if nv:
                        vec[i] = nv
                    else:
                        vec.pop(i, None)
                for i, c in ecombo.items():
                    nv = combo.get(i, Fraction(0)) - f * c
                    if nv:
                        combo[i] = nv
                    else:
                        combo.pop(i, None)
            else:
                inv = Fraction(1) / vec[lead]
                ech[lead] = (
                    {i: c * inv for i, c in vec.items()},
                    {i: c * inv for i, c in combo.items()},
                )
                return None
        return combo  # dependence: sum combo_j x^j = 0 in the quotient

    dep = insert(vectors[0], {0: Fraction(1)})
    k = 0
    while dep is None:
        k += 1
        nxt = gb.reduce(hp_mul(powers[-1], xvar))
        powers.append(nxt)
        dep = insert(_nf_vector(nxt, index), {k: Fraction(1)})
    deg = max(dep)
    return [dep.get(i, Fraction(0)) for i in range(deg + 1)]


def _nf_vector(poly, index):
    vec = {}
    for e, c in poly.items():
        vec[index[e]] = c
    return vec


def origin_only(gens) -> bool:
    """For homogeneous generators: True iff the only common zero over the
    complex numbers is the origin (pure variable powers appear among the
    leading terms of the Groebner basis)."""
    gens = [g for g in gens if g]
    for g in gens:
        if not hpoly.hp_is_homogeneous(g):
            raise ValueError("origin_only requires homogeneous generators")
    if not gens:
        return False
    gb = buchberger(gens, "grevlex")
    flag, _ = is_zero_dimensional(gb)
    return flag
