import random
from fractions import Fraction

import pytest

from d4exact.ratcore import (
    ReconstructionFailure,
    SparseMat,
    SparseVec,
    crt_combine,
    is_prime,
    kernel_mod_p,
    nullspace_adaptive,
    nullspace_exact,
    nullspace_modular,
    rational_reconstruct,
    word_primes,
)


def v(*entries):
    return SparseVec(list(entries))


def test_word_primes():
    ps = word_primes(8)
    assert len(set(ps)) == 8
    assert all(is_prime(p) and 2**30 < p < 2**31 for p in ps)
    assert ps == sorted(ps, reverse=True)


def test_crt_combine():
    x, m = crt_combine([2, 3], [3, 5])
    assert m == 15 and x % 3 == 2 and x % 5 == 3


def test_rational_reconstruct_basics():
    p = 10007
    assert rational_reconstruct(0, p) == 0
    assert rational_reconstruct(1, p) == 1
    assert rational_reconstruct(3336, p) == Fraction(1, 3)


def test_rational_reconstruct_round_trip():
    rng = random.Random(7)
    primes = word_primes(6)
    for _ in range(200):
        num = rng.randint(-9999, 9999)
        den = rng.randint(1, 9999)
        q = Fraction(num, den)
        p = rng.choice(primes)
        if q.denominator % p == 0:
            continue
        residue = q.numerator % p * pow(q.denominator, -1, p) % p
        assert rational_reconstruct(residue, p) == q


def test_nullspace_exact_one_equation():
    m = SparseMat.from_dense([[1, 1]])
    assert nullspace_exact(m) == [v((0, 1), (1, -1))]


def test_nullspace_exact_full_rank():
    m = SparseMat.from_dense([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert nullspace_exact(m) == []


def test_nullspace_exact_normalization():
    m = SparseMat.from_dense([[2, -4]])
    assert nullspace_exact(m) == [v((0, 2), (1, 1))]


def test_nullspace_modular_single_prime():
    m = SparseMat.from_dense([[1, 1]])
    assert nullspace_modular(m, [10007]) == [v((0, 1), (1, -1))]


def test_nullspace_modular_two_primes():
    m = SparseMat.from_dense([[3, 1]])
    assert nullspace_modular(m, [10007, 10009]) == [v((0, 1), (1, -3))]


def test_unlucky_prime_discarded():
    # row vanishes mod 10007, so that prime sees nullity 2 and is outvoted
    m = SparseMat.from_dense([[10007, 10007], [0, 0]])
    got = nullspace_modular(m, [10007, 10009, 10037])
    assert got == [v((0, 1), (1, -1))]


def test_kernel_mod_p_profile():
    m = SparseMat.from_dense([[1, 2, 3], [0, 0, 1]])
    profile, basis = kernel_mod_p(m, 10007)
    assert profile == (0,)
    assert len(basis) == 1
    x = basis[0]
    assert x[0] == 1 and (2 * x[1] + 1) % 10007 == 0 and x[2] == 0


def _random_sparse(rng, nrows, ncols):
    rows = []
    for _ in range(nrows):
        row = {}
        for j in range(ncols):
            if rng.random() < 0.25:
                val = rng.randint(-9, 9)
                if val:
                    row[j] = Fraction(val)
        rows.append(SparseVec.from_dict(row))
    return SparseMat(rows, ncols)


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_modular_matches_exact_random(seed):
    rng = random.Random(seed)
    for _ in range(35):
        nrows = rng.randint(1, 30)
        ncols = rng.randint(1, 30)
        m = _random_sparse(rng, nrows, ncols)
        exact = nullspace_exact(m)
        modular, _ = nullspace_adaptive(m, start=4)
        assert exact == modular
        for x in exact:
            xs = [Fraction(0)] * m.ncols
            for i, val in x:
                xs[i] = val
            assert not any(m.mul_vec(xs))


def test_adaptive_retries():
    m = SparseMat.from_dense([[1, Fraction(10**40) + 1]])
    basis, info = nullspace_adaptive(m, start=1)
    assert len(basis) == 1
    xs = [Fraction(0)] * 2
    for i, val in basis[0]:
        xs[i] = val
    assert not any(m.mul_vec(xs))
    assert len(info["rounds"]) >= 1


def test_sparsevec_validation():
    with pytest.raises(ValueError):
        SparseVec([(2, 1), (1, 1)])
    assert SparseVec([(0, 0), (3, 5)]).entries == ((3, Fraction(5)),)
