import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jordanblocks.fgl import (
    additive,
    iterated_tensor_series,
    multiplicative,
    random_generalized_law,
    scaled_multiplicative,
)
from jordanblocks.fields import GF, QQ
from jordanblocks.linalg import (
    Matrix,
    Partition,
    jordan_block,
    jordan_partition,
    nilpotent_from_partition,
)
from jordanblocks.repring import (
    RingElement,
    build_intertwiner_pair,
    build_symmetric_intertwiner,
    cg_tensor,
    power_operator,
    ring_multiply,
    sigma_matrices,
    structure_constants,
    sym_partition,
    tensor_operator,
    tensor_partition,
    wedge_partition,
)
from jordanblocks.series import TruncatedPoly, elementary_symmetric, mult_matrix

F2, F3, F5, F7 = GF(2), GF(3), GF(5), GF(7)


class TestRingElement:
    def test_dim(self):
        assert RingElement({8: 6, 1: 1}).dim() == 49

    def test_pretty(self):
        assert RingElement({8: 6, 1: 1}).pretty() == "6·J8 + J1"
        assert RingElement({4: 1}).pretty() == "J4"

    def test_partition_round_trip(self):
        lam = Partition((5, 3, 3, 1))
        assert RingElement.from_partition(lam).to_partition() == lam

    def test_negative_multiplicity_rejected_as_object(self):
        x = RingElement({3: 1}) - RingElement({3: 2})
        with pytest.raises(ValueError):
            x.to_partition()

    def test_json(self):
        x = RingElement({8: 6, 1: 1})
        assert x.to_json() == {"terms": [{"n": 8, "a": 6}, {"n": 1, "a": 1}]}
        assert RingElement.from_json(x.to_json()) == x


class TestTensorOperator:
    def test_additive_j2_squared_char2(self):
        phi = jordan_block(F2, 2)
        assert jordan_partition(tensor_operator(phi, phi, additive(F2))) == (2, 2)

    def test_j1_is_unit_for_multiplicative(self):
        phi = jordan_block(F5, 1)
        psi = nilpotent_from_partition(F5, (3, 2))
        top = tensor_operator(phi, psi, multiplicative(F5))
        assert jordan_partition(top) == (3, 2)

    def test_char2_square_of_j4(self):
        phi = jordan_block(F2, 4)
        assert jordan_partition(tensor_operator(phi, phi, multiplicative(F2))) == (4, 4, 4, 4)


class TestTensorPartition:
    def test_j3_j3_additive(self):
        assert tensor_partition((3,), (3,), additive(F7), F7) == (5, 3, 1)

    def test_j2_j2_additive(self):
        assert tensor_partition((2,), (2,), additive(F5), F5) == (3, 1)

    def test_j5_j5_multiplicative_char2(self):
        assert tensor_partition((5,), (5,), multiplicative(F2), F2) == (8, 8, 4, 4, 1)

    def test_dimension_multiplicative(self):
        part = tensor_partition((3, 1), (2, 2), additive(F3), F3)
        assert part.dim == 16


class TestStructureConstants:
    def test_unit(self):
        assert structure_constants(1, 6, multiplicative(F3), F3) == RingElement({6: 1})

    def test_char2_j7_square(self):
        got = structure_constants(7, 7, multiplicative(F2), F2)
        assert got == RingElement({8: 6, 1: 1})

    def test_free_over_truncated_algebra(self):
        # J_{a+1} (x) J_p at char p is free: (a+1) J_p
        got = structure_constants(3, 5, additive(F5), F5)
        assert got == RingElement({5: 3})

    def test_memoized(self):
        law = multiplicative(F3)
        a = structure_constants(4, 5, law, F3)
        b = structure_constants(4, 5, law, F3)
        assert a is b


class TestRingMultiply:
    def test_unit_class(self):
        x = RingElement({1: 1})
        y = RingElement({5: 2, 3: 1})
        assert ring_multiply(x, y, additive(F7), F7) == y

    def test_bilinear(self):
        x = RingElement({2: 2})
        y = RingElement({2: 1})
        assert ring_multiply(x, y, additive(F5), F5) == RingElement({3: 2, 1: 2})

    @given(st.integers(0, 50))
    @settings(max_examples=15, deadline=None)
    def test_commutative_multiplicative_law(self, seed):
        rng = random.Random(seed)
        x = RingElement({rng.randint(1, 4): rng.randint(1, 3) for _ in range(2)})
        y = RingElement({rng.randint(1, 4): rng.randint(1, 3) for _ in range(2)})
        law = multiplicative(F3)
        assert ring_multiply(x, y, law, F3) == ring_multiply(y, x, law, F3)


class TestPowerOperator:
    def test_m1(self):
        phi = nilpotent_from_partition(F5, (3, 1))
        assert power_operator(phi, 1, additive(F5)) == phi

    def test_m2_additive(self):
        phi = jordan_block(F5, 3)
        eye = Matrix.identity(F5, 3)
        expected = phi.kron(eye) + eye.kron(phi)
        assert power_operator(phi, 2, additive(F5)) == expected

    def test_m2_multiplicative_is_group_tensor(self):
        phi = jordan_block(F3, 3)
        eye = Matrix.identity(F3, 3)
        got = power_operator(phi, 2, multiplicative(F3))
        expected = (eye + phi).kron(eye + phi) - eye.kron(eye)
        assert got == expected

    def test_commutes_with_symmetric_group(self):
        phi = nilpotent_from_partition(F5, (2, 1))
        op = power_operator(phi, 3, multiplicative(F5))
        for s in sigma_matrices(3, 3, F5):
            assert (op @ s) == (s @ op)


class TestSigmaMatrices:
    def test_swap_on_two_dims(self):
        (swap,) = sigma_matrices(2, 2, F3)
        assert swap.a.tolist() == [
            [1, 0, 0, 0],
            [0, 0, 1, 0],
            [0, 1, 0, 0],
            [0, 0, 0, 1],
        ]

    def test_involutions(self):
        for s in sigma_matrices(3, 2, F5):
            assert (s @ s) == Matrix.identity(F5, 8)


WEDGE_SYM_CELLS = [
    # (lam, m, law name, p, wedge expected, sym expected)
    ((4,), 2, "a", 2, (3, 3), (4, 4, 1, 1)),
    ((6,), 2, "m", 2, (8, 6, 1), (8, 8, 4, 1)),
    ((7,), 2, "a", 2, (7, 7, 7), (8, 8, 8, 1, 1, 1, 1)),
    ((7,), 2, "a", 5, (11, 7, 3), (13, 9, 5, 1)),
]


class TestWedgeSym:
    @pytest.mark.parametrize("lam,m,which,p,wedge_expected,sym_expected", WEDGE_SYM_CELLS)
    def test_cells(self, lam, m, which, p, wedge_expected, sym_expected):
        field = GF(p)
        law = additive(field) if which == "a" else multiplicative(field)
        assert wedge_partition(lam, m, law, field) == wedge_expected
        assert sym_partition(lam, m, law, field) == sym_expected

    def test_dimensions(self):
        lam = (3, 2)
        w = wedge_partition(lam, 2, additive(F7), F7)
        s = sym_partition(lam, 2, additive(F7), F7)
        assert w.dim == 10 and s.dim == 15

    def test_char0_tensor_square_split(self):
        # W (x) W = Sym^2 W + wedge^2 W away from characteristic 2
        lam = (3, 1)
        law = additive(F7)
        full = tensor_partition(lam, lam, law, F7)
        split = wedge_partition(lam, 2, law, F7).union(sym_partition(lam, 2, law, F7))
        assert full == split


class TestCgTensor:
    def test_unit(self):
        assert cg_tensor(1, 6) == RingElement({6: 1})

    def test_33_against_big_prime_oracle(self):
        field = GF(101)
        oracle = tensor_partition((3,), (3,), additive(field), field)
        assert cg_tensor(3, 3) == RingElement.from_partition(oracle)
        assert cg_tensor(3, 3) == RingElement({5: 1, 3: 1, 1: 1})

    def test_42(self):
        field = GF(11)
        oracle = tensor_partition((4,), (2,), additive(field), field)
        assert cg_tensor(4, 2) == RingElement.from_partition(oracle)
        assert cg_tensor(4, 2) == RingElement({5: 1, 3: 1})


class TestIntertwinerPair:
    def _verify(self, n, m, law):
        lam = build_intertwiner_pair(n, m, law)
        field = law.field
        y_plus_z = TruncatedPoly(field, (n, m), {(1, 0): field.one, (0, 1): field.one})
        assert (lam @ mult_matrix(y_plus_z)) == (mult_matrix(law.as_poly((n, m))) @ lam)
        assert lam.rank() == n * m
        return lam

    def test_additive_is_identity(self):
        lam = self._verify(3, 3, additive(F5))
        assert lam == Matrix.identity(F5, 9)

    def test_multiplicative_2x2_p3(self):
        self._verify(2, 2, multiplicative(F3))

    def test_random_law_4x4_p5(self):
        law = random_generalized_law(12, 8, F5)
        self._verify(4, 4, law)

    def test_char0(self):
        law = random_generalized_law(3, 8, QQ)
        self._verify(3, 4, law)


class TestSymmetricIntertwiner:
    def _verify(self, n, m, law):
        lam = build_symmetric_intertwiner(n, m, law)
        field = law.field
        trunc = (n,) * m
        s1 = elementary_symmetric(field, trunc, 1)
        series = iterated_tensor_series(law, m, trunc)
        assert (lam @ mult_matrix(s1)) == (mult_matrix(series) @ lam)
        assert lam.rank() == n**m
        for s in sigma_matrices(m, n, field):
            assert (lam @ s) == (s @ lam)
        return lam

    def test_additive_is_identity(self):
        lam = self._verify(3, 2, additive(F5))
        assert lam == Matrix.identity(F5, 9)

    def test_multiplicative_m2_char0(self):
        self._verify(3, 2, multiplicative(QQ))

    def test_multiplicative_m3_p5(self):
        self._verify(3, 3, multiplicative(F5))

    def test_scaled_m3_p7(self):
        self._verify(2, 3, scaled_multiplicative(F7, 4))
