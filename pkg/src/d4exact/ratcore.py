"""Exact sparse linear algebra over the rationals.

The workhorse is the multi-modular nullspace: eliminate modulo several
word-sized primes, vote away unlucky primes, CRT-combine, rationally
reconstruct and verify the result exactly.  A plain rational elimination
is kept as the small-scale / verification path.

All values are immutable; per-prime eliminations are independent of each
other and only the final CRT merge is sequential.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

# Rational numbers are stdlib Fractions: always reduced, denominator > 0,
# zero is Fraction(0, 1).  That is exactly the invariant we need.
Rational = Fraction


class ReconstructionFailure(Exception):
    """Raised when the modular image does not determine the rational
    answer yet; callers retry with more primes."""


# ---------------------------------------------------------------------------
# primes


_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for word-sized n."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_PRIME_CACHE: list[int] = []


def word_primes(count: int) -> list[int]:
    """The first `count` primes below 2**31, descending.

    Primes stay under 2**31 so that a*b with a, b < p fits in int64,
    which is what the numpy elimination kernel relies on.
    """
    n = _PRIME_CACHE[-1] - 2 if _PRIME_CACHE else 2**31 - 1
    while len(_PRIME_CACHE) < count:
        if is_prime(n):
            _PRIME_CACHE.append(n)
        n -= 2
    return _PRIME_CACHE[:count]


# ---------------------------------------------------------------------------
# CRT and rational reconstruction


def crt_combine(residues, moduli):
    """Combine residues into (value mod P, P) for pairwise coprime moduli."""
    x, m = 0, 1
    for r, p in zip(residues, moduli):
        # x' = x + m * t  with  t = (r - x)/m mod p
        t = (r - x) * pow(m, -1, p) % p
        x += m * t
        m *= p
    return x, m


def rational_reconstruct(residue: int, modulus: int):
    """Recover r/s from residue mod modulus with |r|, s <= sqrt(modulus/2).

    Extended Euclid on (modulus, residue); returns a Fraction, or None when
    no admissible pair exists.
    """
    if not 0 <= residue < modulus:
        raise ValueError("residue out of range")
    bound = math.isqrt(modulus // 2)
    r0, r1 = modulus, residue
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > bound or math.gcd(t1, modulus) != 1:
        return None
    if math.gcd(r1, abs(t1)) != 1:
        return None
    num, den = (r1, t1) if t1 > 0 else (-r1, -t1)
    return Fraction(num, den)


# ---------------------------------------------------------------------------
# sparse containers


class SparseVec:
    """Immutable sparse vector: sorted (index, value) pairs, values nonzero."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        ent = tuple((int(i), Fraction(v)) for i, v in entries if v != 0)
        if any(ent[k][0] >= ent[k + 1][0] for k in range(len(ent) - 1)):
            raise ValueError("indices must be strictly increasing")
        self.entries = ent

    @classmethod
    def from_dict(cls, d):
        return cls(sorted(d.items()))

    def to_dict(self):
        return dict(self.entries)

    def dot(self, other: "SparseVec") -> Fraction:
        a, b = self.entries, other.entries
        i = j = 0
        acc = Fraction(0)
        while i < len(a) and j < len(b):
            if a[i][0] < b[j][0]:
                i += 1
            elif a[i][0] > b[j][0]:
                j += 1
            else:
                acc += a[i][1] * b[j][1]
                i += 1
                j += 1
        return acc

    def dot_dense(self, xs) -> Fraction:
        return sum((v * xs[i] for i, v in self.entries), Fraction(0))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        return isinstance(other, SparseVec) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"SparseVec({list(self.entries)!r})"


class SparseMat:
    """Row-major sparse matrix over the rationals."""

    __slots__ = ("rows", "ncols")

    def __init__(self, rows, ncols: int):
        self.rows = tuple(r if isinstance(r, SparseVec) else SparseVec(r) for r in rows)
        self.ncols = int(ncols)
        for r in self.rows:
            if r.entries and r.entries[-1][0] >= self.ncols:
                raise ValueError("entry index beyond ncols")

    @classmethod
    def from_dense(cls, rows):
        ncols = len(rows[0]) if rows else 0
        return cls(
            [SparseVec([(j, v) for j, v in enumerate(row) if v != 0]) for row in rows],
            ncols,
        )

    @property
    def nrows(self):
        return len(self.rows)

    def mul_vec(self, xs) -> list:
        """Exact product M @ xs for a dense list xs."""
        return [r.dot_dense(xs) for r in self.rows]

    def __repr__(self):
        return f"SparseMat(nrows={self.nrows}, ncols={self.ncols})"


def normalize_integer_vector(xs):
    """Scale a rational vector to integers with content 1 and first
    nonzero entry positive.  Returns a list of Fractions (all integral)."""
    den = 1
    for v in xs:
        den = den * v.denominator // math.gcd(den, v.denominator)
    ints = [int(v * den) for v in xs]
    g = 0
    for v in ints:
        g = math.gcd(g, abs(v))
    if g == 0:
        return [Fraction(0)] * len(xs)
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        g = -g
    return [Fraction(v // g) for v in ints]


# ---------------------------------------------------------------------------
# exact elimination


def _rref(rows, ncols):
    """Reduced row echelon form of dict-rows over Q.

    Returns (pivots, rowmap) where pivots is the sorted tuple of pivot
    columns and rowmap maps pivot column -> fully reduced dict-row with
    leading coefficient 1.
    """
    reduced: dict[int, dict] = {}
    for raw in rows:
        r = dict(raw)
        # eliminate every pivot column present; reduced rows only touch
        # free columns beyond their pivot, so one pass suffices
        for j in sorted(set(r) & reduced.keys()):
            c = r.pop(j)
            if not c:
                continue
            for jj, vv in reduced[j].items():
                if jj == j:
                    continue
                nv = r.get(jj, Fraction(0)) - c * vv
                if nv:
                    r[jj] = nv
                else:
                    r.pop(jj, None)
        if not r:
            continue
        j = min(r)
        lead = r[j]
        row = {jj: vv / lead for jj, vv in r.items()}
        # back-eliminate the new pivot column from existing rows
        for pj, prow in reduced.items():
            if j in prow:
                c = prow.pop(j)
                for jj, vv in row.items():
                    if jj == j:
                        continue
                    nv = prow.get(jj, Fraction(0)) - c * vv
                    if nv:
                        prow[jj] = nv
                    else:
                        prow.pop(jj, None)
        reduced[j] = row
    return tuple(sorted(reduced)), reduced


def _kernel_from_rref(pivots, rowmap, ncols):
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        xs = [Fraction(0)] * ncols
        xs[f] = Fraction(1)
        for p in pivots:
            v = rowmap[p].get(f)
            if v:
                xs[p] = -v
        basis.append(xs)
    return basis


def _canonicalize_subspace(vectors, ncols):
    """Unique representation of span(vectors) over Q: reduced row echelon
    basis, rows by ascending leading column."""
    pivots, rowmap = _rref(
        ({i: c for i, c in enumerate(v) if c} for v in vectors), ncols
    )
    out = []
    for j in sorted(rowmap):
        xs = [Fraction(0)] * ncols
        for i, v in rowmap[j].items():
            xs[i] = v
        out.append(xs)
    return out


def nullspace_exact(mat: SparseMat) -> list[SparseVec]:
    """Basis of the right nullspace over Q, canonically normalized.

    The basis is the reduced-echelon normal form of the nullspace,
    each vector scaled to integer entries with content 1 and first
    nonzero entry positive, and re-verified by exact multiplication.
    """
    pivots, rowmap = _rref((r.to_dict() for r in mat.rows), mat.ncols)
    raw = _kernel_from_rref(pivots, rowmap, mat.ncols)
    out = []
    for xs in _canonicalize_subspace(raw, mat.ncols):
        xs = normalize_integer_vector(xs)
        if any(mat.mul_vec(xs)):
            raise AssertionError("exact nullspace verification failed")
        out.append(SparseVec([(i, v) for i, v in enumerate(xs) if v]))
    return out


# ---------------------------------------------------------------------------
# modular elimination (numpy kernel)


def kernel_mod_p(mat: SparseMat, p: int):
    """Nullspace basis of mat over GF(p): (pivot profile, canonical basis).

    Sparse Gaussian elimination with Markowitz-style pivoting: pick the
    column of minimal live count and within it the shortest row, which
    keeps fill-in low on the combinatorially structured systems we solve.
    The returned basis is the reduced-echelon normal form of the kernel
    (independent of pivoting choices) and the profile its leading columns.
    """
    rows: list[dict] = []
    for svec in mat.rows:
        row = {}
        for i, v in svec.entries:
            d = v.denominator % p
            if d == 0:
                raise ZeroDivisionError("prime divides a denominator")
            val = v.numerator % p * pow(d, -1, p) % p
            if val:
                row[i] = val
        if row:
            rows.append(row)

    col_rows: dict[int, set] = {}
    for ri, row in enumerate(rows):
        for j in row:
            col_rows.setdefault(j, set()).add(ri)

    live = set(range(len(rows)))
    pivrows: list[tuple[int, dict]] = []  # (pivot col, normalized row), in order

    while col_rows:
        # pivot column: minimal live count, then smallest index
        c = min(col_rows, key=lambda j: (len(col_rows[j]), j))
        members = col_rows[c]
        r = min(members, key=lambda ri: (len(rows[ri]), ri))
        prow = rows[r]
        inv = pow(prow[c], -1, p)
        prow = {j: v * inv % p for j, v in prow.items()}
        # retire the pivot row
        for j in rows[r]:
            s = col_rows.get(j)
            if s is not None:
                s.discard(r)
                if not s:
                    del col_rows[j]
        live.discard(r)
        rows[r] = {}
        # eliminate the pivot column from the remaining rows
        for ri in list(col_rows.get(c, ())):
            row = rows[ri]
            f = row.pop(c)
            for j, v in prow.items():
                if j == c:
                    continue
                nv = (row.get(j, 0) - f * v) % p
                if nv:
                    if j not in row:
                        col_rows.setdefault(j, set()).add(ri)
                    row[j] = nv
                elif j in row:
                    del row[j]
                    s = col_rows.get(j)
                    s.discard(ri)
                    if not s:
                        del col_rows[j]
            if not row:
                live.discard(ri)
        col_rows.pop(c, None)
        pivrows.append((c, prow))

    pivset = {c for c, _ in pivrows}
    free = [f for f in range(mat.ncols) if f not in pivset]
    raw = []
    for f in free:
        x = {f: 1}
        # pivot rows in reverse elimination order form a triangular system
        for c, prow in reversed(pivrows):
            acc = 0
            for j, v in prow.items():
                if j == c:
                    continue
                xj = x.get(j)
                if xj:
                    acc += v * xj
            acc %= p
            if acc:
                x[c] = p - acc
        raw.append(x)
    return _canonical_kernel_mod_p(raw, mat.ncols, p)


def _canonical_kernel_mod_p(raw, ncols, p):
    """Reduced-echelon normal form of span(raw) over GF(p).

    Returns (leading-column profile, basis as int64 arrays)."""
    reduced: dict[int, dict] = {}
    for x in raw:
        r = dict(x)
        for j in sorted(set(r) & reduced.keys()):
            f = r.pop(j) % p
            if not f:
                continue
            for jj, vv in reduced[j].items():
                if jj == j:
                    continue
                nv = (r.get(jj, 0) - f * vv) % p
                if nv:
                    r[jj] = nv
                else:
                    r.pop(jj, None)
        r = {j: v % p for j, v in r.items() if v % p}
        if not r:
            continue
        j = min(r)
        inv = pow(r[j], -1, p)
        row = {jj: vv * inv % p for jj, vv in r.items()}
        for pj, prow in reduced.items():
            if j in prow:
                f = prow.pop(j)
                for jj, vv in row.items():
                    if jj == j:
                        continue
                    nv = (prow.get(jj, 0) - f * vv) % p
                    if nv:
                        prow[jj] = nv
                    else:
                        prow.pop(jj, None)
        reduced[j] = row
    profile = tuple(sorted(reduced))
    basis = []
    for j in profile:
        vec = np.zeros(ncols, dtype=np.int64)
        for i, v in reduced[j].items():
            vec[i] = v
        basis.append(vec)
    return profile, basis


def nullspace_modular(mat: SparseMat, primes) -> list[SparseVec]:
    """Multi-modular nullspace: per-prime kernels, consensus vote on
    (nullity, pivot profile), CRT + rational reconstruction, exact
    verification.  Raises ReconstructionFailure when more primes are
    needed.  The result is identical to nullspace_exact."""
    primes = [int(p) for p in primes]
    if len(set(primes)) != len(primes):
        raise ValueError("primes must be distinct")
    results = {}
    for p in primes:
        try:
            profile, basis = kernel_mod_p(mat, p)
        except ZeroDivisionError:
            continue  # prime divides a denominator: unusable
        results[p] = (profile, basis)
    if not results:
        raise ValueError("no usable primes")
    groups: dict = {}
    for p, (profile, basis) in results.items():
        key = (len(basis), profile)
        groups.setdefault(key, []).append(p)
    # majority nullity wins; deterministic tie-breaks
    key = min(groups, key=lambda k: (-len(groups[k]), k[0], k[1]))
    nullity, profile = key
    good = sorted(groups[key])
    if nullity == 0:
        return []
    vectors = []
    for vi in range(nullity):
        xs = []
        for j in range(mat.ncols):
            residues = [int(results[p][1][vi][j]) for p in good]
            val, modulus = crt_combine(residues, good)
            q = rational_reconstruct(val, modulus)
            if q is None:
                raise ReconstructionFailure("rational reconstruction failed")
            xs.append(q)
        vectors.append(normalize_integer_vector(xs))
    for xs in vectors:
        if any(mat.mul_vec(xs)):
            raise ReconstructionFailure("exact verification failed")
    return [SparseVec([(i, v) for i, v in enumerate(xs) if v]) for xs in vectors]


def nullspace_adaptive(mat: SparseMat, start: int = 3, max_rounds: int = 6,
                       progress=None):
    """nullspace_modular with an automatically growing prime set.

    Returns (basis, info) where info records the primes used per round.
    """
    count = max(1, start)
    info = {"rounds": []}
    for _ in range(max_rounds):
        primes = word_primes(count)
        try:
            basis = nullspace_modular(mat, primes)
            info["rounds"].append({"primes": count, "ok": True})
            info["primes"] = primes
            return basis, info
        except ReconstructionFailure:
            info["rounds"].append({"primes": count, "ok": False})
            if progress:
                progress(f"reconstruction failed with {count} primes; retrying")
            count *= 2
    raise ReconstructionFailure(f"no reconstruction after {count // 2} primes")
