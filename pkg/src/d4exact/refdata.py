"""Known-good polynomial data, kept in factored form exactly as published
and expanded on demand.

The first polynomial of the Zhu-side system also pins the global scalar
normalization of the singular vector: the computed pipeline output is
proportional to these polynomials with one rational constant, fixed once
against the first one and shared by every other comparison.
"""

from __future__ import annotations

import functools
from fractions import Fraction

from . import hpoly

P1 = """h1 (14 + 3 h1 + 6 h2 + 3 h3 + 3 h4) (3200 + 6160 h1 + 4260 h1^2 + 1260 h1^3 + 135 h1^4 + 7568 h2 + 9192 h1 h2 + 3924 h1^2 h2 + 540 h1^3 h2 + 6420 h2^2 + 4320 h1 h2^2 + 864 h1^2 h2^2 + 2376 h2^3 + 648 h1 h2^3 + 324 h2^4 + 2560 h3 + 3840 h1 h3 + 1800 h1^2 h3 + 270 h1^3 h3 + 5232 h2 h3 + 3996 h1 h2 h3 + 864 h1^2 h2 h3 + 3240 h2^2 h3 + 972 h1 h2^2 h3 + 648 h2^3 h3 + 480 h3^2 + 540 h1 h3^2 + 135 h1^2 h3^2 + 864 h2 h3^2 + 324 h1 h2 h3^2 + 324 h2^2 h3^2 + 2560 h4 + 3840 h1 h4 + 1800 h1^2 h4 + 270 h1^3 h4 + 5232 h2 h4 + 3996 h1 h2 h4 + 864 h1^2 h2 h4 + 3240 h2^2 h4 + 972 h1 h2^2 h4 + 648 h2^3 h4 + 1536 h3 h4 + 1836 h1 h3 h4 + 432 h1^2 h3 h4 + 2916 h2 h3 h4 + 972 h1 h2 h3 h4 + 972 h2^2 h3 h4 + 108 h3^2 h4 + 162 h1 h3^2 h4 + 324 h2 h3^2 h4 + 480 h4^2 + 540 h1 h4^2 + 135 h1^2 h4^2 + 864 h2 h4^2 + 324 h1 h2 h4^2 + 324 h2^2 h4^2 + 108 h3 h4^2 + 162 h1 h3 h4^2 + 324 h2 h3 h4^2 - 81 h3^2 h4^2)"""

P2 = """h3 h4 (5120 - 1008 h1 - 5508 h1^2 - 2268 h1^3 - 243 h1^4 + 17424 h2 + 7128 h1 h2 - 2916 h1^2 h2 - 972 h1^3 h2 + 17820 h2^2 + 7776 h1 h2^2 + 7128 h2^3 + 1944 h1 h2^3 + 972 h2^4 + 5760 h3 + 1296 h1 h3 - 1944 h1^2 h3 - 486 h1^3 h3 + 14256 h2 h3 + 6804 h1 h2 h3 + 9720 h2^2 h3 + 2916 h1 h2^2 h3 + 1944 h2^3 h3 + 1440 h3^2 + 324 h1 h3^2 - 243 h1^2 h3^2 + 2592 h2 h3^2 + 972 h1 h2 h3^2 + 972 h2^2 h3^2 + 5760 h4 + 1296 h1 h4 - 1944 h1^2 h4 - 486 h1^3 h4 + 14256 h2 h4 + 6804 h1 h2 h4 + 9720 h2^2 h4 + 2916 h1 h2^2 h4 + 1944 h2^3 h4 + 6480 h3 h4 + 2916 h1 h3 h4 + 8748 h2 h3 h4 + 2916 h1 h2 h3 h4 + 2916 h2^2 h3 h4 + 1620 h3^2 h4 + 486 h1 h3^2 h4 + 972 h2 h3^2 h4 + 1440 h4^2 + 324 h1 h4^2 - 243 h1^2 h4^2 + 2592 h2 h4^2 + 972 h1 h2 h4^2 + 972 h2^2 h4^2 + 1620 h3 h4^2 + 486 h1 h3 h4^2 + 972 h2 h3 h4^2 + 405 h3^2 h4^2)"""

P3 = """h2 (9856 + 19152 h1 + 9396 h1^2 + 2268 h1^3 + 243 h1^4 + 27856 h2 + 47016 h1 h2 + 18144 h1^2 h2 + 3240 h1^3 h2 + 243 h1^4 h2 + 29700 h2^2 + 40824 h1 h2^2 + 10692 h1^2 h2^2 + 972 h1^3 h2^2 + 14940 h2^3 + 14904 h1 h2^3 + 1944 h1^2 h2^3 + 3564 h2^4 + 1944 h1 h2^4 + 324 h2^5 + 16768 h3 + 30816 h1 h3 + 13284 h1^2 h3 + 2754 h1^3 h3 + 243 h1^4 h3 + 34992 h2 h3 + 51516 h1 h2 h3 + 14580 h1^2 h2 h3 + 1458 h1^3 h2 h3 + 26316 h2^2 h3 + 27864 h1 h2^2 h3 + 3888 h1^2 h2^2 h3 + 8424 h2^3 h3 + 4860 h1 h2^3 h3 + 972 h2^4 h3 + 8064 h3^2 + 13284 h1 h3^2 + 4131 h1^2 h3^2 + 486 h1^3 h3^2 + 12528 h2 h3^2 + 14580 h1 h2 h3^2 + 2187 h1^2 h2 h3^2 + 6156 h2^2 h3^2 + 3888 h1 h2^2 h3^2 + 972 h2^3 h3^2 + 1152 h3^3 + 1620 h1 h3^3 + 243 h1^2 h3^3 + 1296 h2 h3^3 + 972 h1 h2 h3^3 + 324 h2^2 h3^3 + 16768 h4 + 30816 h1 h4 + 13284 h1^2 h4 + 2754 h1^3 h4 + 243 h1^4 h4 + 34992 h2 h4 + 51516 h1 h2 h4 + 14580 h1^2 h2 h4 + 1458 h1^3 h2 h4 + 26316 h2^2 h4 + 27864 h1 h2^2 h4 + 3888 h1^2 h2^2 h4 + 8424 h2^3 h4 + 4860 h1 h2^3 h4 + 972 h2^4 h4 + 28800 h3 h4 + 42444 h1 h3 h4 + 11664 h1^2 h3 h4 + 972 h1^3 h3 h4 + 41580 h2 h3 h4 + 42768 h1 h2 h3 h4 + 5832 h1^2 h2 h3 h4 + 19440 h2^2 h3 h4 + 10692 h1 h2^2 h3 h4 + 2916 h2^3 h3 h4 + 12852 h3^2 h4 + 15066 h1 h3^2 h4 + 2187 h1^2 h3^2 h4 + 12636 h2 h3^2 h4 + 7290 h1 h2 h3^2 h4 + 2916 h2^2 h3^2 h4 + 1620 h3^3 h4 + 1458 h1 h3^3 h4 + 972 h2 h3^3 h4 + 8064 h4^2 + 13284 h1 h4^2 + 4131 h1^2 h4^2 + 486 h1^3 h4^2 + 12528 h2 h4^2 + 14580 h1 h2 h4^2 + 2187 h1^2 h2 h4^2 + 6156 h2^2 h4^2 + 3888 h1 h2^2 h4^2 + 972 h2^3 h4^2 + 12852 h3 h4^2 + 15066 h1 h3 h4^2 + 2187 h1^2 h3 h4^2 + 12636 h2 h3 h4^2 + 7290 h1 h2 h3 h4^2 + 2916 h2^2 h3 h4^2 + 4131 h3^2 h4^2 + 2916 h1 h3^2 h4^2 + 2187 h2 h3^2 h4^2 + 243 h3^3 h4^2 + 1152 h4^3 + 1620 h1 h4^3 + 243 h1^2 h4^3 + 1296 h2 h4^3 + 972 h1 h2 h4^3 + 324 h2^2 h4^3 + 1620 h3 h4^3 + 1458 h1 h3 h4^3 + 972 h2 h3 h4^3 + 243 h3^2 h4^3)"""

Q1 = """81 h1 (h1 + 2 h2 + h3 + h4) (5 h1^4 + 20 h1^3 h2 + 32 h1^2 h2^2 + 24 h1 h2^3 + 12 h2^4 + 10 h1^3 h3 + 32 h1^2 h2 h3 + 36 h1 h2^2 h3 + 24 h2^3 h3 + 5 h1^2 h3^2 + 12 h1 h2 h3^2 + 12 h2^2 h3^2 + 10 h1^3 h4 + 32 h1^2 h2 h4 + 36 h1 h2^2 h4 + 24 h2^3 h4 + 16 h1^2 h3 h4 + 36 h1 h2 h3 h4 + 36 h2^2 h3 h4 + 6 h1 h3^2 h4 + 12 h2 h3^2 h4 + 5 h1^2 h4^2 + 12 h1 h2 h4^2 + 12 h2^2 h4^2 + 6 h1 h3 h4^2 + 12 h2 h3 h4^2 - 3 h3^2 h4^2)"""

Q2 = """81 (h1 + h2) (h1 + h2 + h3 + h4) (5 h1^4 + 20 h1^3 h2 + 24 h1^2 h2^2 + 8 h1 h2^3 - 4 h2^4 + 10 h1^3 h3 + 24 h1^2 h2 h3 + 12 h1 h2^2 h3 - 8 h2^3 h3 + 5 h1^2 h3^2 + 4 h1 h2 h3^2 - 4 h2^2 h3^2 + 10 h1^3 h4 + 24 h1^2 h2 h4 + 12 h1 h2^2 h4 - 8 h2^3 h4 + 16 h1^2 h3 h4 + 20 h1 h2 h3 h4 - 20 h2^2 h3 h4 + 6 h1 h3^2 h4 - 12 h2 h3^2 h4 + 5 h1^2 h4^2 + 4 h1 h2 h4^2 - 4 h2^2 h4^2 + 6 h1 h3 h4^2 - 12 h2 h3 h4^2 - 3 h3^2 h4^2)"""

Q3 = """81 (h1 + h2 + h3) (h1 + h2 + h4) (5 h1^4 + 20 h1^3 h2 + 24 h1^2 h2^2 + 8 h1 h2^3 - 4 h2^4 + 10 h1^3 h3 + 24 h1^2 h2 h3 + 12 h1 h2^2 h3 - 8 h2^3 h3 + 5 h1^2 h3^2 + 4 h1 h2 h3^2 - 4 h2^2 h3^2 + 10 h1^3 h4 + 24 h1^2 h2 h4 + 12 h1 h2^2 h4 - 8 h2^3 h4 + 8 h1^2 h3 h4 + 4 h1 h2 h3 h4 - 4 h2^2 h3 h4 - 2 h1 h3^2 h4 + 4 h2 h3^2 h4 + 5 h1^2 h4^2 + 4 h1 h2 h4^2 - 4 h2^2 h4^2 - 2 h1 h3 h4^2 + 4 h2 h3 h4^2 + 5 h3^2 h4^2)"""

Q4 = """81 h3 (h1 + 2 h2 + h3 + h4) (12 h1^2 h2^2 + 24 h1 h2^3 + 12 h2^4 + 12 h1^2 h2 h3 + 36 h1 h2^2 h3 + 24 h2^3 h3 + 5 h1^2 h3^2 + 32 h1 h2 h3^2 + 32 h2^2 h3^2 + 10 h1 h3^3 + 20 h2 h3^3 + 5 h3^4 + 12 h1^2 h2 h4 + 36 h1 h2^2 h4 + 24 h2^3 h4 + 6 h1^2 h3 h4 + 36 h1 h2 h3 h4 + 36 h2^2 h3 h4 + 16 h1 h3^2 h4 + 32 h2 h3^2 h4 + 10 h3^3 h4 - 3 h1^2 h4^2 + 12 h1 h2 h4^2 + 12 h2^2 h4^2 + 6 h1 h3 h4^2 + 12 h2 h3 h4^2 + 5 h3^2 h4^2)"""

Q5 = """-81 (h2 + h3) (h1 + h2 + h3 + h4) (4 h1^2 h2^2 + 8 h1 h2^3 + 4 h2^4 - 4 h1^2 h2 h3 - 12 h1 h2^2 h3 - 8 h2^3 h3 - 5 h1^2 h3^2 - 24 h1 h2 h3^2 - 24 h2^2 h3^2 - 10 h1 h3^3 - 20 h2 h3^3 - 5 h3^4 + 12 h1^2 h2 h4 + 20 h1 h2^2 h4 + 8 h2^3 h4 - 6 h1^2 h3 h4 - 20 h1 h2 h3 h4 - 12 h2^2 h3 h4 - 16 h1 h3^2 h4 - 24 h2 h3^2 h4 - 10 h3^3 h4 + 3 h1^2 h4^2 + 12 h1 h2 h4^2 + 4 h2^2 h4^2 - 6 h1 h3 h4^2 - 4 h2 h3 h4^2 - 5 h3^2 h4^2)"""

Q6 = """-81 (h1 + h2 + h3) (h2 + h3 + h4) (4 h1^2 h2^2 + 8 h1 h2^3 + 4 h2^4 - 4 h1^2 h2 h3 - 12 h1 h2^2 h3 - 8 h2^3 h3 - 5 h1^2 h3^2 - 24 h1 h2 h3^2 - 24 h2^2 h3^2 - 10 h1 h3^3 - 20 h2 h3^3 - 5 h3^4 - 4 h1^2 h2 h4 + 4 h1 h2^2 h4 + 8 h2^3 h4 + 2 h1^2 h3 h4 - 4 h1 h2 h3 h4 - 12 h2^2 h3 h4 - 8 h1 h3^2 h4 - 24 h2 h3^2 h4 - 10 h3^3 h4 - 5 h1^2 h4^2 - 4 h1 h2 h4^2 + 4 h2^2 h4^2 + 2 h1 h3 h4^2 - 4 h2 h3 h4^2 - 5 h3^2 h4^2)"""

Q7 = """81 h4 (h1 + 2 h2 + h3 + h4) (12 h1^2 h2^2 + 24 h1 h2^3 + 12 h2^4 + 12 h1^2 h2 h3 + 36 h1 h2^2 h3 + 24 h2^3 h3 - 3 h1^2 h3^2 + 12 h1 h2 h3^2 + 12 h2^2 h3^2 + 12 h1^2 h2 h4 + 36 h1 h2^2 h4 + 24 h2^3 h4 + 6 h1^2 h3 h4 + 36 h1 h2 h3 h4 + 36 h2^2 h3 h4 + 6 h1 h3^2 h4 + 12 h2 h3^2 h4 + 5 h1^2 h4^2 + 32 h1 h2 h4^2 + 32 h2^2 h4^2 + 16 h1 h3 h4^2 + 32 h2 h3 h4^2 + 5 h3^2 h4^2 + 10 h1 h4^3 + 20 h2 h4^3 + 10 h3 h4^3 + 5 h4^4)"""

Q8 = """-81 (h2 + h4) (h1 + h2 + h3 + h4) (4 h1^2 h2^2 + 8 h1 h2^3 + 4 h2^4 + 12 h1^2 h2 h3 + 20 h1 h2^2 h3 + 8 h2^3 h3 + 3 h1^2 h3^2 + 12 h1 h2 h3^2 + 4 h2^2 h3^2 - 4 h1^2 h2 h4 - 12 h1 h2^2 h4 - 8 h2^3 h4 - 6 h1^2 h3 h4 - 20 h1 h2 h3 h4 - 12 h2^2 h3 h4 - 6 h1 h3^2 h4 - 4 h2 h3^2 h4 - 5 h1^2 h4^2 - 24 h1 h2 h4^2 - 24 h2^2 h4^2 - 16 h1 h3 h4^2 - 24 h2 h3 h4^2 - 5 h3^2 h4^2 - 10 h1 h4^3 - 20 h2 h4^3 - 10 h3 h4^3 - 5 h4^4)"""

Q9 = """-81 (h1 + h2 + h4) (h2 + h3 + h4) (4 h1^2 h2^2 + 8 h1 h2^3 + 4 h2^4 - 4 h1^2 h2 h3 + 4 h1 h2^2 h3 + 8 h2^3 h3 - 5 h1^2 h3^2 - 4 h1 h2 h3^2 + 4 h2^2 h3^2 - 4 h1^2 h2 h4 - 12 h1 h2^2 h4 - 8 h2^3 h4 + 2 h1^2 h3 h4 - 4 h1 h2 h3 h4 - 12 h2^2 h3 h4 + 2 h1 h3^2 h4 - 4 h2 h3^2 h4 - 5 h1^2 h4^2 - 24 h1 h2 h4^2 - 24 h2^2 h4^2 - 8 h1 h3 h4^2 - 24 h2 h3 h4^2 - 5 h3^2 h4^2 - 10 h1 h4^3 - 20 h2 h4^3 - 10 h3 h4^3 - 5 h4^4)"""


def parse_poly(text: str) -> dict:
    """Parse a factored polynomial expression over h1..h4.

    Grammar: product of atoms, atom = signed integer | hI[^E] | (sum);
    sum = sequence of signed terms, term = [integer] hI[^E]...
    """
    tokens = _tokenize(text)
    poly, pos = _parse_product(tokens, 0)
    if pos != len(tokens):
        raise ValueError(f"trailing tokens at {pos}: {tokens[pos:pos+4]}")
    return poly


def _tokenize(text):
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "()+-":
            out.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(int(text[i:j]))
            i = j
        elif ch == "h":
            var = int(text[i + 1]) - 1
            i += 2
            exp = 1
            if i < len(text) and text[i] == "^":
                j = i + 1
                while j < len(text) and text[j].isdigit():
                    j += 1
                exp = int(text[i + 1:j])
                i = j
            out.append(("var", var, exp))
        else:
            raise ValueError(f"unexpected character {ch!r}")
    return out


def _var_poly(var, exp):
    e = [0, 0, 0, 0]
    e[var] = exp
    return {tuple(e): Fraction(1)}


def _parse_product(tokens, pos):
    poly = {hpoly.ZERO_EXP: Fraction(1)}
    sign = 1
    saw_atom = False
    while pos < len(tokens):
        tok = tokens[pos]
        if tok == "-" and not saw_atom:
            sign = -sign
            pos += 1
        elif isinstance(tok, int):
            poly = hpoly.hp_scale(poly, tok)
            pos += 1
            saw_atom = True
        elif isinstance(tok, tuple) and tok[0] == "var":
            poly = hpoly.hp_mul(poly, _var_poly(tok[1], tok[2]))
            pos += 1
            saw_atom = True
        elif tok == "(":
            inner, pos = _parse_sum(tokens, pos + 1)
            poly = hpoly.hp_mul(poly, inner)
            saw_atom = True
        else:
            break
    if sign < 0:
        poly = hpoly.hp_scale(poly, -1)
    return poly, pos


def _parse_sum(tokens, pos):
    total: dict = {}
    sign = 1
    term: dict | None = None
    while pos < len(tokens):
        tok = tokens[pos]
        if tok == ")":
            pos += 1
            break
        if tok in ("+", "-"):
            if term is not None:
                total = hpoly.hp_add(total, term, sign)
            sign = 1 if tok == "+" else -1
            term = None
            pos += 1
            continue
        if term is None:
            term = {hpoly.ZERO_EXP: Fraction(1)}
        if isinstance(tok, int):
            term = hpoly.hp_scale(term, tok)
        elif isinstance(tok, tuple) and tok[0] == "var":
            term = hpoly.hp_mul(term, _var_poly(tok[1], tok[2]))
        elif tok == "(":
            inner, pos = _parse_sum(tokens, pos + 1)
            term = hpoly.hp_mul(term, inner)
            continue
        else:
            raise ValueError(f"unexpected token {tok!r} in sum")
        pos += 1
    else:
        raise ValueError("unterminated parenthesis")
    if term is not None:
        total = hpoly.hp_add(total, term, sign)
    return total, pos


@functools.lru_cache(maxsize=1)
def p_reference() -> tuple:
    return tuple(parse_poly(t) for t in (P1, P2, P3))


@functools.lru_cache(maxsize=1)
def q_reference() -> tuple:
    return tuple(
        parse_poly(t) for t in (Q1, Q2, Q3, Q4, Q5, Q6, Q7, Q8, Q9)
    )


def match_scalar(computed: dict, reference: dict) -> Fraction:
    """The constant c with computed == c * reference; raises if the two
    are not exactly proportional."""
    if not computed or not reference:
        raise ValueError("cannot match a zero polynomial")
    lead = hpoly.hp_leading(reference)
    if lead not in computed:
        raise ValueError("leading reference term missing from computed value")
    c = computed[lead] / reference[lead]
    if computed != hpoly.hp_scale(reference, c):
        raise ValueError("polynomials are not proportional")
    return c
