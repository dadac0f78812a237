"""The 28-dimensional Lie algebra of type D4 with explicit structure
constants, built from normal-ordered bilinears :xy: = (xy - yx)/2 in the
Clifford algebra on a_1..a_4, a_1*..a_4* with [a_i, a_j]_+ = 0,
[a_i*, a_j*]_+ = 0, [a_i, a_j*]_+ = delta_ij.

Basis and index layout (28 generators):

    0..11   f_beta, beta over the 12 positive roots in lexicographic
            epsilon-coordinate order
    12..15  H_1..H_4 (the dual basis of eps_1..eps_4)
    16..27  e_beta, same root order

Roots are 4-tuples of ints in epsilon coordinates; positive roots are
eps_i - eps_j and eps_i + eps_j for i < j.  The invariant form is the
Killing form divided by 2 h_vee = 12, so that (theta|theta) = 2.

Elements of the algebra are sparse dicts {generator index: Fraction}.
The structure table is immutable after build and safe to share.
"""

from __future__ import annotations

import functools
from fractions import Fraction

# ---------------------------------------------------------------------------
# roots and index layout

_PLUS, _MINUS = 1, -1


def _root(i, j, sign):
    r = [0, 0, 0, 0]
    r[i] = 1
    r[j] = sign
    return tuple(r)


POS_ROOTS = tuple(sorted(
    _root(i, j, s) for i in range(4) for j in range(i + 1, 4) for s in (_MINUS, _PLUS)
))
NROOTS = len(POS_ROOTS)          # 12
NGEN = 2 * NROOTS + 4            # 28
ROOT_INDEX = {r: k for k, r in enumerate(POS_ROOTS)}

SIMPLE_ROOTS = ((1, -1, 0, 0), (0, 1, -1, 0), (0, 0, 1, -1), (0, 0, 1, 1))
THETA = (1, 1, 0, 0)

F_BLOCK, H_BLOCK, E_BLOCK = 0, NROOTS, NROOTS + 4


def f_index(root) -> int:
    return F_BLOCK + ROOT_INDEX[tuple(root)]

def h_index(i) -> int:
    """H_i for i in 1..4."""
    return H_BLOCK + (i - 1)

def e_index(root) -> int:
    return E_BLOCK + ROOT_INDEX[tuple(root)]


def gen_weight(g: int):
    """Adjoint weight of a basis generator, in epsilon coordinates."""
    if g < H_BLOCK:
        return tuple(-c for c in POS_ROOTS[g])
    if g < E_BLOCK:
        return (0, 0, 0, 0)
    return POS_ROOTS[g - E_BLOCK]


def _root_str(root):
    parts = []
    for i, c in enumerate(root, start=1):
        if c == 1:
            parts.append(f"+e{i}")
        elif c == -1:
            parts.append(f"-e{i}")
        elif c:
            parts.append(f"{c:+d}e{i}")
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s


def gen_name(g: int) -> str:
    if g < H_BLOCK:
        return f"f[{_root_str(POS_ROOTS[g])}]"
    if g < E_BLOCK:
        return f"h{g - H_BLOCK + 1}"
    return f"e[{_root_str(POS_ROOTS[g - E_BLOCK])}]"


# ---------------------------------------------------------------------------
# element helpers (sparse dict genidx -> Fraction)


def elem_add(a: dict, b: dict, coeff=Fraction(1)) -> dict:
    out = dict(a)
    for g, c in b.items():
        nv = out.get(g, Fraction(0)) + coeff * c
        if nv:
            out[g] = nv
        else:
            out.pop(g, None)
    return out


def elem_scale(a: dict, coeff) -> dict:
    coeff = Fraction(coeff)
    if not coeff:
        return {}
    return {g: c * coeff for g, c in a.items()}


# ---------------------------------------------------------------------------
# Clifford engine (internal, only used to build the structure table)

# generator ids 0..3 = a_1..a_4, 4..7 = a_1*..a_4*
def _pair(c):
    return c + 4 if c < 4 else c - 4


def _cliff_mul_word(word):
    """Normal form of a product word of Clifford generators.

    Returns dict mapping strictly increasing id tuples to Fractions.
    """
    out = {}
    stack = [(tuple(word), Fraction(1))]
    while stack:
        w, c = stack.pop()
        for i in range(len(w) - 1):
            a, b = w[i], w[i + 1]
            if a < b:
                continue
            if a == b:
                # c^2 = [c, c]_+ / 2 = 0
                break
            rest = w[:i], w[i + 2:]
            stack.append((rest[0] + (b, a) + rest[1], -c))
            if b == _pair(a):
                stack.append((rest[0] + rest[1], c))
            break
        else:
            out[w] = out.get(w, Fraction(0)) + c
    return {w: c for w, c in out.items() if c}


def _cliff_mul(x: dict, y: dict) -> dict:
    out = {}
    for w1, c1 in x.items():
        for w2, c2 in y.items():
            for w, c in _cliff_mul_word(w1 + w2).items():
                nv = out.get(w, Fraction(0)) + c1 * c2 * c
                if nv:
                    out[w] = nv
                else:
                    out.pop(w, None)
    return out


def _cliff_bilinear(p, q):
    """:c_p c_q: = c_p c_q - (1/2)[c_p, c_q]_+ as a Clifford element."""
    el = _cliff_mul({(p,): Fraction(1)}, {(q,): Fraction(1)})
    if q == _pair(p):
        el[()] = el.get((), Fraction(0)) - Fraction(1, 2)
        if not el[()]:
            del el[()]
    return el


def _basis_clifford():
    """The 28 basis generators as Clifford elements, index order as above."""
    basis = [None] * NGEN
    for k, root in enumerate(POS_ROOTS):
        i = root.index(1)
        if -1 in root:
            j = root.index(-1)
            # e_{ei-ej} = :a_i a_j*: , f_{ei-ej} = :a_j a_i*:
            basis[E_BLOCK + k] = _cliff_bilinear(i, j + 4)
            basis[F_BLOCK + k] = _cliff_bilinear(j, i + 4)
        else:
            j = root.index(1, i + 1)
            # e_{ei+ej} = :a_i a_j: , f_{ei+ej} = :a_j* a_i*:
            basis[E_BLOCK + k] = _cliff_bilinear(i, j)
            basis[F_BLOCK + k] = _cliff_bilinear(j + 4, i + 4)
    for i in range(4):
        basis[H_BLOCK + i] = _cliff_bilinear(i, i + 4)
    return basis


# ---------------------------------------------------------------------------
# structure table


class StructureTable:
    """Bracket constants, invariant form and weight data; immutable."""

    def __init__(self):
        basis = _basis_clifford()
        mono_to_gen = {}
        for g, el in enumerate(basis):
            quad = [w for w in el if len(w) == 2]
            assert len(quad) == 1
            mono_to_gen[quad[0]] = (g, el[quad[0]])

        def decompose(el):
            out = {}
            const = Fraction(0)
            for w, c in el.items():
                if not w:
                    const = c
                    continue
                assert len(w) == 2, "non-quadratic term in a bracket"
                g, lead = mono_to_gen[w]
                out[g] = c / lead
            # constants only enter through H = :a a*: - 1/2
            expect = sum((out.get(H_BLOCK + i, Fraction(0)) for i in range(4)),
                         Fraction(0)) * Fraction(-1, 2)
            assert const == expect, "scalar remainder in bracket decomposition"
            return out

        bracket = [[None] * NGEN for _ in range(NGEN)]
        for a in range(NGEN):
            for b in range(NGEN):
                if a == b:
                    bracket[a][b] = {}
                    continue
                comm = elem_add(_cliff_mul(basis[a], basis[b]),
                                _cliff_mul(basis[b], basis[a]), Fraction(-1))
                comm = {w: c for w, c in comm.items() if c}
                bracket[a][b] = decompose(comm)
        self.bracket = bracket

        # invariant form: Killing form tr(ad x ad y) scaled by 1/(2 h_vee),
        # h_vee = 6 for D4
        form = [[Fraction(0)] * NGEN for _ in range(NGEN)]
        for a in range(NGEN):
            for b in range(a, NGEN):
                acc = Fraction(0)
                for g in range(NGEN):
                    step = bracket[b][g]
                    for z, cz in step.items():
                        back = bracket[a][z].get(g)
                        if back:
                            acc += cz * back
                val = acc / 12
                form[a][b] = val
                form[b][a] = val
        self.form = form
        self.weights = tuple(gen_weight(g) for g in range(NGEN))

    # -- operations -------------------------------------------------------

    def bracket_elem(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for a, ca in x.items():
            row = self.bracket[a]
            for b, cb in y.items():
                c = ca * cb
                for g, cg in row[b].items():
                    nv = out.get(g, Fraction(0)) + c * cg
                    if nv:
                        out[g] = nv
                    else:
                        out.pop(g, None)
        return out

    def inv_form(self, x: dict, y: dict) -> Fraction:
        acc = Fraction(0)
        for a, ca in x.items():
            row = self.form[a]
            for b, cb in y.items():
                acc += ca * cb * row[b]
        return acc

    def coroot_elem(self, root) -> dict:
        """The coroot of a (long) root as a Cartan element: all D4 roots
        have (alpha|alpha) = 2, so alpha_vee = sum c_i H_i."""
        return {H_BLOCK + i: Fraction(c) for i, c in enumerate(root) if c}

    def dump(self) -> str:
        """Deterministic text dump of brackets and form, sorted by index pair."""
        lines = []
        for a in range(NGEN):
            for b in range(NGEN):
                br = self.bracket[a][b]
                if br:
                    terms = " ".join(
                        f"{c.numerator}/{c.denominator}*g{g}" for g, c in sorted(br.items())
                    )
                    lines.append(f"[g{a},g{b}] = {terms}")
        for a in range(NGEN):
            for b in range(a, NGEN):
                v = self.form[a][b]
                if v:
                    lines.append(f"(g{a}|g{b}) = {v.numerator}/{v.denominator}")
        return "\n".join(lines) + "\n"


@functools.lru_cache(maxsize=1)
def build_d4() -> StructureTable:
    return StructureTable()


# ---------------------------------------------------------------------------
# weight coordinate conversions

# fundamental weights in epsilon coordinates:
# w1 = e1, w2 = e1+e2, w3 = (e1+e2+e3-e4)/2, w4 = (e1+e2+e3+e4)/2
_OMEGA_EPS = (
    (Fraction(1), Fraction(0), Fraction(0), Fraction(0)),
    (Fraction(1), Fraction(1), Fraction(0), Fraction(0)),
    (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(-1, 2)),
    (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)),
)


def omega_to_eps(w):
    w = [Fraction(c) for c in w]
    return tuple(
        sum((w[k] * _OMEGA_EPS[k][i] for k in range(4)), Fraction(0))
        for i in range(4)
    )


def eps_to_omega(e):
    e = [Fraction(c) for c in e]
    # c_i = <mu, alpha_i_vee> = (mu | alpha_i) for the simple roots
    return (e[0] - e[1], e[1] - e[2], e[2] - e[3], e[2] + e[3])


def is_dominant_integral(w) -> bool:
    return all(Fraction(c).denominator == 1 and Fraction(c) >= 0 for c in w)


# ---------------------------------------------------------------------------
# triality


def _alpha_coords(root):
    """Coordinates of a root in the simple-root basis (always integral).

    With alpha1=(1,-1,0,0), alpha2=(0,1,-1,0), alpha3=(0,0,1,-1),
    alpha4=(0,0,1,1): e0=k1, e1=k2-k1, e2=k3+k4-k2, e3=k4-k3.
    """
    e = [Fraction(x) for x in root]
    k1 = e[0]
    k2 = e[1] + k1
    k4 = (e[2] + k2 + e[3]) / 2
    k3 = k4 - e[3]
    return (k1, k2, k3, k4)


# node permutation of the Dynkin diagram: alpha1 -> alpha3 -> alpha4 -> alpha1
_NODE_PERM = {0: 2, 1: 1, 2: 3, 3: 0}


class Triality:
    """The order-three automorphism lifted from the diagram rotation.

    Fixed on the Chevalley generators (e and f of the simple roots map to
    the generators of the permuted roots, coroots permute accordingly) and
    extended to the remaining root vectors through brackets, which pins
    every sign.
    """

    def __init__(self, table: StructureTable):
        self.table = table
        images: list = [None] * NGEN

        root_perm = {}
        for r in POS_ROOTS:
            k = _alpha_coords(r)
            img = [Fraction(0)] * 4
            for i in range(4):
                if k[i]:
                    a = SIMPLE_ROOTS[_NODE_PERM[i]]
                    for t in range(4):
                        img[t] += k[i] * a[t]
            root_perm[r] = tuple(int(x) for x in img)
        self.root_perm = root_perm

        # Cartan: sigma(alpha_i_vee) = alpha_{perm(i)}_vee, solved in the H basis
        cor = [SIMPLE_ROOTS[i] for i in range(4)]          # coroot coords = root coords
        img = [SIMPLE_ROOTS[_NODE_PERM[i]] for i in range(4)]
        sigma_h = _solve4(cor, img)                        # matrix acting on H coords
        for i in range(4):
            images[H_BLOCK + i] = {
                H_BLOCK + t: sigma_h[t][i] for t in range(4) if sigma_h[t][i]
            }

        for i, a in enumerate(SIMPLE_ROOTS):
            b = SIMPLE_ROOTS[_NODE_PERM[i]]
            images[e_index(a)] = {e_index(b): Fraction(1)}
            images[f_index(a)] = {f_index(b): Fraction(1)}

        by_height = sorted(POS_ROOTS, key=lambda r: sum(_alpha_coords(r)))
        for r in by_height:
            if images[e_index(r)] is not None:
                continue
            for i, a in enumerate(SIMPLE_ROOTS):
                prev = tuple(x - y for x, y in zip(r, a))
                if prev in ROOT_INDEX and images[e_index(prev)] is not None:
                    break
            else:
                raise AssertionError("positive root without a simple-root step")
            te = table.bracket[e_index(prev)][e_index(a)]
            ce = te[e_index(r)]
            images[e_index(r)] = elem_scale(
                table.bracket_elem(images[e_index(prev)], images[e_index(a)]),
                Fraction(1) / ce,
            )
            tf = table.bracket[f_index(prev)][f_index(a)]
            cf = tf[f_index(r)]
            images[f_index(r)] = elem_scale(
                table.bracket_elem(images[f_index(prev)], images[f_index(a)]),
                Fraction(1) / cf,
            )

        self.images = tuple(images)
        for g in range(NGEN):
            x = {g: Fraction(1)}
            assert self.apply(self.apply(self.apply(x))) == x, "sigma^3 != id"

    def apply(self, x: dict) -> dict:
        out: dict = {}
        for g, c in x.items():
            for t, ct in self.images[g].items():
                nv = out.get(t, Fraction(0)) + c * ct
                if nv:
                    out[t] = nv
                else:
                    out.pop(t, None)
        return out

    def omega_perm(self, w):
        """Induced permutation on fundamental-weight coordinates:
        (c1, c2, c3, c4) -> coordinates of sigma(mu)."""
        c1, c2, c3, c4 = (Fraction(x) for x in w)
        return (c4, c2, c1, c3)


def _solve4(cols, img_cols):
    """Matrix S with S @ cols[i] = img_cols[i] (4x4 Fractions).

    Row-reducing [C^T | Img^T] to [I | S^T] gives S = Img C^{-1}.
    """
    n = 4
    a = [[Fraction(cols[i][j]) for j in range(n)] for i in range(n)]
    b = [[Fraction(img_cols[i][j]) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        b[col], b[piv] = b[piv], b[col]
        d = a[col][col]
        a[col] = [x / d for x in a[col]]
        b[col] = [x / d for x in b[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                b[r] = [x - f * y for x, y in zip(b[r], b[col])]
    return [[b[i][t] for i in range(n)] for t in range(n)]  # transpose


@functools.lru_cache(maxsize=1)
def triality() -> Triality:
    return Triality(build_d4())
