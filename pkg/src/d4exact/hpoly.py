"""Sparse polynomials in the Cartan coordinates h1..h4.

A polynomial is a dict mapping exponent 4-tuples to Fractions, no stored
zeros.  The variables are coordinates along the simple coroots, so
evaluating at a weight mu = sum c_i omega_i is the substitution h_i = c_i.

The text format is one term per line, `<num>/<den>*h1^a*h2^b*h3^c*h4^d`,
terms sorted graded-reverse-lexicographically (leading term first).
"""

from __future__ import annotations

import functools
from fractions import Fraction

from . import liealg

NVARS = 4
ZERO_EXP = (0, 0, 0, 0)


def hp_add(a: dict, b: dict, coeff=Fraction(1)) -> dict:
    out = dict(a)
    for e, c in b.items():
        nv = out.get(e, Fraction(0)) + coeff * c
        if nv:
            out[e] = nv
        else:
            out.pop(e, None)
    return out


def hp_scale(a: dict, coeff) -> dict:
    coeff = Fraction(coeff)
    if not coeff:
        return {}
    return {e: c * coeff for e, c in a.items()}


def hp_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
            nv = out.get(e, Fraction(0)) + c1 * c2
            if nv:
                out[e] = nv
            else:
                out.pop(e, None)
    return out


def hp_pow(a: dict, n: int) -> dict:
    out = {ZERO_EXP: Fraction(1)}
    for _ in range(n):
        out = hp_mul(out, a)
    return out


def hp_eval(a: dict, point) -> Fraction:
    point = [Fraction(c) for c in point]
    acc = Fraction(0)
    for e, c in a.items():
        term = c
        for i in range(NVARS):
            if e[i]:
                term *= point[i] ** e[i]
        acc += term
    return acc


def hp_degree(a: dict) -> int:
    return max((sum(e) for e in a), default=0)


def hp_is_homogeneous(a: dict, degree=None) -> bool:
    degs = {sum(e) for e in a}
    if not degs:
        return True
    if len(degs) != 1:
        return False
    return degree is None or degs.pop() == degree


def grevlex_key(e):
    """Sort key: larger key = larger monomial in grevlex."""
    return (sum(e), tuple(-x for x in reversed(e)))


def lex_key(e):
    return tuple(e)


def hp_leading(a: dict, key=grevlex_key):
    return max(a, key=key)


def hp_to_text(a: dict) -> str:
    """Deterministic text form, grevlex-descending, one term per line."""
    lines = []
    for e in sorted(a, key=grevlex_key, reverse=True):
        c = a[e]
        mono = "*".join(f"h{i + 1}^{e[i]}" for i in range(NVARS))
        lines.append(f"{c.numerator}/{c.denominator}*{mono}")
    return "\n".join(lines) + "\n" if lines else "0\n"


def hp_from_text(text: str) -> dict:
    out: dict = {}
    text = text.strip()
    if text == "0":
        return out
    for line in text.split("\n"):
        parts = line.strip().split("*")
        num, den = parts[0].split("/")
        exps = []
        for tok in parts[1:]:
            var, _, e = tok.partition("^")
            exps.append(int(e))
        out[tuple(exps)] = Fraction(int(num), int(den))
    return out


def sigma_permute(a: dict) -> dict:
    """Variable substitution induced by triality: h1 -> h3, h3 -> h4,
    h4 -> h1, h2 fixed."""
    return {(e[3], e[1], e[0], e[2]): c for e, c in a.items()}


@functools.lru_cache(maxsize=1)
def cartan_in_h():
    """H_1..H_4 as linear polynomials in h1..h4.

    H_i evaluated at mu equals the i-th epsilon coordinate of mu, and the
    h-variables are the fundamental-weight coordinates.
    """
    rows = []
    for i in range(NVARS):
        poly = {}
        for j in range(NVARS):
            unit = [0] * NVARS
            unit[j] = 1
            c = liealg.omega_to_eps(unit)[i]
            if c:
                e = [0] * NVARS
                e[j] = 1
                poly[tuple(e)] = c
        rows.append(poly)
    return tuple(rows)


def h_word_to_poly(exps) -> dict:
    """Product H_1^a1 .. H_4^a4 rewritten as a polynomial in h1..h4."""
    out = {ZERO_EXP: Fraction(1)}
    basis = cartan_in_h()
    for i, a in enumerate(exps):
        for _ in range(a):
            out = hp_mul(out, basis[i])
    return out
