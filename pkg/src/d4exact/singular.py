"""Singular-vector search: the five annihilation conditions as one sparse
linear system over the enumerated weight space, solved exactly.

The conditions are the four simple-root raising operators at mode 0 and
the lowest-root vector f_theta at mode 1; together they cut out the
highest-weight vectors of the affine category.  Small systems run through
the exact elimination, large ones through the multi-modular path, and
every returned vector is re-verified.

The computed vector can be persisted in a bit-exact text format and is
revalidated (full singularity check) whenever it is loaded.
"""

from __future__ import annotations

import os
from fractions import Fraction

from . import liealg, ratcore, vertex
from .liealg import SIMPLE_ROOTS, THETA, e_index, f_index
from .ratcore import SparseMat, SparseVec
from .vertex import ModeAlgebra, VAConfig

EXACT_COLUMN_LIMIT = 200

CONDITIONS = tuple(
    [(e_index(a), 0) for a in SIMPLE_ROOTS] + [(f_index(THETA), 1)]
)


class ConstraintSystem:
    """Stacked linear conditions over a weight-space basis."""

    __slots__ = ("basis", "matrix", "blocks")

    def __init__(self, basis, matrix, blocks):
        self.basis = basis
        self.matrix = matrix
        self.blocks = blocks  # (gen, mode, target dimension) per condition

    @property
    def ncols(self):
        return self.matrix.ncols

    @property
    def nrows(self):
        return self.matrix.nrows


def build_constraints(cfg: VAConfig, degree: int, weight_omega,
                      table=None, malg: ModeAlgebra | None = None) -> ConstraintSystem:
    table = table or liealg.build_d4()
    malg = malg or ModeAlgebra(table, cfg)
    weight_omega = tuple(Fraction(c) for c in weight_omega)
    basis = vertex.enumerate_weight_space(degree, weight_omega)
    rows: list[dict] = []
    blocks = []
    for gen, mode in CONDITIONS:
        tdeg = degree - mode
        tweight = tuple(
            a + b
            for a, b in zip(weight_omega, liealg.eps_to_omega(liealg.gen_weight(gen)))
        )
        target = vertex.enumerate_weight_space(tdeg, tweight)
        tindex = {m: i for i, m in enumerate(target)}
        block_rows = [dict() for _ in target]
        for col, mono in enumerate(basis):
            for m, c in malg.act(gen, mode, mono).items():
                block_rows[tindex[m]][col] = c
        rows.extend(block_rows)
        blocks.append((gen, mode, len(target)))
    mat = SparseMat(
        [SparseVec.from_dict(r) for r in rows], ncols=len(basis)
    )
    return ConstraintSystem(basis, mat, tuple(blocks))


def _vector_to_element(basis, svec: SparseVec) -> dict:
    return {basis[i]: c for i, c in svec}


def find_singular(cfg: VAConfig, degree: int, weight_omega, *,
                  table=None, malg=None, cache_dir=None,
                  primes_start: int = 3, progress=None,
                  want_info: bool = False):
    """Nullspace basis of the constraint system as verified vertex-algebra
    elements, normalized to integer coefficients with content 1 and the
    leading monomial's coefficient positive."""
    table = table or liealg.build_d4()
    malg = malg or ModeAlgebra(table, cfg)
    weight_omega = tuple(Fraction(c) for c in weight_omega)

    info = {"cache": None}
    cache_path = None
    if cache_dir is not None:
        cache_path = os.path.join(
            cache_dir, cache_file_name(cfg, degree, weight_omega)
        )
        if os.path.exists(cache_path):
            elem = load_singular_vector(cache_path, cfg=cfg, table=table, malg=malg)
            info["cache"] = "hit"
            info["support"] = len(elem)
            return ([elem], info) if want_info else [elem]

    system = build_constraints(cfg, degree, weight_omega, table, malg)
    info["ncols"] = system.ncols
    info["nrows"] = system.nrows
    if system.ncols == 0:
        return ([], info) if want_info else []
    if system.ncols <= EXACT_COLUMN_LIMIT:
        basis_vecs = ratcore.nullspace_exact(system.matrix)
        info["method"] = "exact"
    else:
        basis_vecs, solve_info = ratcore.nullspace_adaptive(
            system.matrix, start=primes_start, progress=progress
        )
        info["method"] = "modular"
        info["solver"] = solve_info
    info["nullity"] = len(basis_vecs)

    out = []
    for svec in basis_vecs:
        elem = _vector_to_element(system.basis, svec)
        if not verify_singular(elem, cfg, table=table, malg=malg):
            raise AssertionError("solver output failed the singularity check")
        out.append(elem)
    if cache_path and len(out) == 1:
        os.makedirs(cache_dir, exist_ok=True)
        save_singular_vector(cache_path, out[0], cfg, degree, weight_omega)
        info["cache"] = "written"
    if out:
        info["support"] = len(out[0])
    return (out, info) if want_info else out


def verify_singular(elem: dict, cfg: VAConfig, *, table=None, malg=None,
                    expect_degree=None, expect_weight=None) -> bool:
    """True iff all five conditions vanish exactly and the element is
    homogeneous (affine weight k L_0 - d delta + lambda)."""
    if not elem:
        return False
    table = table or liealg.build_d4()
    malg = malg or ModeAlgebra(table, cfg)
    try:
        deg, wt = vertex.element_degree_weight(elem)
    except ValueError:
        return False
    if expect_degree is not None and deg != expect_degree:
        return False
    if expect_weight is not None:
        if wt != tuple(int(c) for c in liealg.omega_to_eps(expect_weight)):
            return False
    for gen, mode in CONDITIONS:
        if malg.act_elem(gen, mode, elem):
            return False
    return True


def sigma_orbit(elem: dict, cfg: VAConfig, *, table=None, malg=None, sigma=None):
    """(v, sigma v, sigma^2 v), each re-verified as singular."""
    table = table or liealg.build_d4()
    malg = malg or ModeAlgebra(table, cfg)
    sigma = sigma or liealg.triality()
    orbit = [elem]
    for _ in range(2):
        orbit.append(vertex.apply_sigma(orbit[-1], sigma, malg))
    for w in orbit:
        if not verify_singular(w, cfg, table=table, malg=malg):
            raise AssertionError("triality image failed the singularity check")
    return tuple(orbit)


# ---------------------------------------------------------------------------
# cache file format
#
# header:  singvec v1 algebra=D4 k=<num>/<den> degree=<d>
#          weight=<c1,c2,c3,c4> order=depth-desc,genidx-asc
# then one line per monomial  `<num>/<den> <factor>...`  with factor token
# g<idx>(-<n>)^<e>, sorted by canonical monomial order; trailing
# line `count=<N>`.


def _frac_token(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def cache_file_name(cfg: VAConfig, degree: int, weight_omega) -> str:
    w = "_".join(f"{Fraction(c).numerator}.{Fraction(c).denominator}" for c in weight_omega)
    return f"singvec_k{cfg.k.numerator}.{cfg.k.denominator}_d{degree}_w{w}.txt"


def format_singular_vector(elem: dict, cfg: VAConfig, degree: int, weight_omega) -> str:
    weight_omega = tuple(Fraction(c) for c in weight_omega)
    header = (
        f"singvec v1 algebra=D4 k={_frac_token(cfg.k)} degree={degree}"
        f" weight={','.join(_frac_token(c) for c in weight_omega)}"
        f" order={vertex.ORDER_TAG}"
    )
    lines = [header]
    for mono in sorted(elem, key=vertex.mono_key):
        tokens = vertex.mono_to_tokens(mono)
        coeff = _frac_token(elem[mono])
        lines.append(f"{coeff} {tokens}".rstrip())
    lines.append(f"count={len(elem)}")
    return "\n".join(lines) + "\n"


def save_singular_vector(path, elem, cfg, degree, weight_omega):
    text = format_singular_vector(elem, cfg, degree, weight_omega)
    with open(path, "w") as fh:
        fh.write(text)


def parse_singular_vector(text: str):
    """Returns (elem, k, degree, weight_omega)."""
    lines = text.strip().split("\n")
    head = lines[0].split()
    if head[:3] != ["singvec", "v1", "algebra=D4"]:
        raise ValueError("unrecognized cache header")
    fields = dict(part.split("=", 1) for part in head[2:])
    if fields["order"] != vertex.ORDER_TAG:
        raise ValueError("cache uses a different monomial order")
    k = Fraction(*[int(x) for x in fields["k"].split("/")])
    degree = int(fields["degree"])
    weight = tuple(
        Fraction(*[int(x) for x in c.split("/")]) for c in fields["weight"].split(",")
    )
    tail = lines[-1]
    if not tail.startswith("count="):
        raise ValueError("missing count line")
    body = lines[1:-1]
    if int(tail.split("=")[1]) != len(body):
        raise ValueError("count mismatch")
    elem = {}
    for line in body:
        coeff_tok, _, rest = line.partition(" ")
        num, den = coeff_tok.split("/")
        mono = vertex.mono_from_tokens(rest) if rest else vertex.VACUUM
        elem[mono] = Fraction(int(num), int(den))
    return elem, k, degree, weight


def load_singular_vector(path, *, cfg=None, table=None, malg=None) -> dict:
    """Load and revalidate a cached vector; raises on any mismatch."""
    with open(path) as fh:
        text = fh.read()
    elem, k, degree, weight = parse_singular_vector(text)
    if cfg is not None and cfg.k != k:
        raise ValueError(f"cache level {k} != requested {cfg.k}")
    cfg = cfg or VAConfig(k)
    if not verify_singular(elem, cfg, table=table, malg=malg,
                           expect_degree=degree, expect_weight=weight):
        raise ValueError("cached vector failed revalidation")
    return elem
