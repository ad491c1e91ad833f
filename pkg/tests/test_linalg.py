import random

from fockweyl.linalg import (ff_echelon, field_det, field_kernel, field_rank,
                             kernel_basis, rank_ff)
from fockweyl.ring import LaurentQ, QFrac


def L(d):
    return LaurentQ(d)


def M(rows):
    return [[L({0: v}) if isinstance(v, int) else v for v in row] for row in rows]


class TestFractionFree:
    def test_rank_of_singular(self):
        m = M([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
        assert rank_ff(m) == 2

    def test_kernel_vector(self):
        m = M([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
        basis, rank = kernel_basis(m, 3, lambda e: QFrac(e), QFrac.one())
        assert rank == 2 and len(basis) == 1
        x = basis[0]
        for row in m:
            s = QFrac.zero()
            for e, c in zip(row, x):
                s = s + QFrac(e) * c
            assert s.is_zero

    def test_polynomial_entries(self):
        q = L({1: 1})
        m = [[q, L({2: 1})], [LaurentQ.one(), q]]  # second row = first / q
        basis, rank = kernel_basis(m, 2, lambda e: QFrac(e), QFrac.one())
        assert rank == 1 and len(basis) == 1

    def test_empty_matrix(self):
        ech, piv = ff_echelon([])
        assert ech == [] and piv == []


class TestFieldOps:
    def test_det_and_rank(self):
        m = [[QFrac(L({1: 1})), QFrac.one()], [QFrac.one(), QFrac(L({-1: 1}))]]
        # det = q * q^-1 - 1 = 0
        assert field_det(m).is_zero
        assert field_rank(m) == 1

    def test_kernel_matches_rank(self):
        m = [[QFrac(L({1: 1})), QFrac.one()], [QFrac.one(), QFrac(L({-1: 1}))]]
        basis = field_kernel(m, 2, QFrac.one())
        assert len(basis) == 1
        x = basis[0]
        for row in m:
            s = row[0] * x[0] + row[1] * x[1]
            assert s.is_zero

    def test_random_consistency(self):
        rng = random.Random(12)
        for _ in range(20):
            n = rng.randint(1, 4)
            rows = [[L({rng.randint(-2, 2): rng.randint(-2, 2)})
                     for _ in range(n)] for _ in range(n)]
            frows = [[QFrac(e) for e in row] for row in rows]
            d = field_det(frows)
            assert d.is_zero == (field_rank(frows) < n)
            assert rank_ff(rows) == field_rank(frows)
