import pytest

from jordanblocks.errors import BadPrime, DoesNotStabilize
from jordanblocks.g2 import (
    ORBITS,
    V_PARTITIONS,
    adjoint_partition_direct,
    bracket,
    build_so7_model,
    expected_adjoint,
    g2_generators,
    g2_nilpotent_rep,
    g2_subalgebra,
    g2_table,
    g2_unipotent_rep,
    lie_closure,
    wedge_route_adjoint,
    weight_components,
)
from jordanblocks.linalg import Matrix, jordan_partition, unipotent_partition


@pytest.fixture(scope="module")
def model():
    return build_so7_model(7)


class TestModel:
    def test_bad_prime(self):
        for p in (2, 3):
            with pytest.raises(BadPrime):
                build_so7_model(p)

    def test_root_vectors_in_so7(self, model):
        for y in model.y + model.y_neg:
            assert (y.T @ model.gram + model.gram @ y).is_zero()

    def test_weight_contracts(self, model):
        # y_1 maps the second basis line onto the first
        y1 = model.y[0]
        assert y1.a[0, 1] != 0
        assert weight_components(y1) == {(1, -1, 0)}
        assert weight_components(model.y_neg[0]) == {(-1, 1, 0)}

    def test_y1_y3_commute(self, model):
        assert bracket(model.y[0], model.y[2]).is_zero()

    def test_cartan_relations(self, model):
        xa1, xa2, xm1, xm2 = g2_generators(model)
        h1 = bracket(xa1, xm1)
        h2 = bracket(xa2, xm2)
        assert bracket(h1, xa1) == xa1.scale(2)
        assert bracket(h1, xa2) == xa2.scale(-3)
        assert bracket(h2, xa2) == xa2.scale(2)
        assert bracket(h2, xa1) == xa1.scale(-1)


class TestLieClosure:
    def test_single_nilpotent(self, model):
        assert len(lie_closure([model.y[1]])) == 1

    def test_sl2(self, model):
        assert len(lie_closure([model.y[0], model.y_neg[0]])) == 3

    def test_g2_dimension(self, model):
        assert len(g2_subalgebra(model)) == 14

    def test_g2_dimension_other_primes(self):
        for p in (5, 11, 13):
            assert len(g2_subalgebra(build_so7_model(p))) == 14


class TestRepresentatives:
    @pytest.mark.parametrize("orbit", ORBITS)
    def test_nilpotent_v_partitions(self, model, orbit):
        assert jordan_partition(g2_nilpotent_rep(orbit, model)) == V_PARTITIONS[orbit]

    @pytest.mark.parametrize("orbit", ORBITS)
    def test_unipotent_v_partitions(self, model, orbit):
        assert unipotent_partition(g2_unipotent_rep(orbit, model)) == V_PARTITIONS[orbit]

    @pytest.mark.parametrize("orbit", ORBITS)
    def test_unipotents_preserve_form(self, model, orbit):
        u = g2_unipotent_rep(orbit, model)
        assert (u.T @ model.gram @ u) == model.gram

    def test_richardson_weight_components(self, model):
        # components sit on the four roots restricting to the two relevant
        # orbit roots; the three named ones are nonzero
        comps = weight_components(g2_nilpotent_rep("G2a1", model))
        named = {(1, 0, -1), (0, 1, 0), (0, 1, 1)}
        assert named <= comps
        assert comps <= named | {(1, 0, 0)}


class TestAdjointRoutes:
    def test_zero_element(self, model):
        basis = g2_subalgebra(model)
        zero = Matrix.zeros(model.field, 7, 7)
        assert adjoint_partition_direct(zero, basis, "nilpotent") == (1,) * 14

    def test_does_not_stabilize(self, model):
        # a single so_7 root vector y_1 is not in the subalgebra
        basis = g2_subalgebra(model)
        with pytest.raises(DoesNotStabilize):
            adjoint_partition_direct(model.y[0], basis, "nilpotent")

    def test_a1_direct(self):
        model11 = build_so7_model(11)
        basis = g2_subalgebra(model11)
        a = g2_nilpotent_rep("A1", model11)
        assert adjoint_partition_direct(a, basis, "nilpotent") == (3, 2, 2, 2, 2, 1, 1, 1)

    def test_regular_unipotent_p7(self, model):
        basis = g2_subalgebra(model)
        u = g2_unipotent_rep("G2reg", model)
        assert adjoint_partition_direct(u, basis, "unipotent") == (7, 7)

    def test_wedge_route_values(self):
        model5 = build_so7_model(5)
        cases = {
            "G2a1": (5, 3, 3, 3),
            "G2reg": (11, 3),
            "A1tilde": (4, 4, 3, 1, 1, 1),
        }
        for orbit, expected in cases.items():
            a = g2_nilpotent_rep(orbit, model5)
            assert wedge_route_adjoint(a, "nilpotent") == expected


class TestTable:
    @pytest.mark.parametrize("p", [5, 7, 11, 13])
    def test_full_table(self, p):
        rows = g2_table(p)
        assert len(rows) == 4
        for row in rows:
            assert row.matches_table, (p, row.orbit)
            assert row.routes_agree
            assert row.adjoint_nilpotent == row.adjoint_unipotent
            assert row.v_partition == V_PARTITIONS[row.orbit]
            assert row.adjoint_nilpotent == expected_adjoint(row.orbit, p)

    def test_regular_is_special_at_7(self):
        assert expected_adjoint("G2reg", 7) == (7, 7)
        assert expected_adjoint("G2reg", 5) == (11, 3)
        assert expected_adjoint("G2reg", 13) == (11, 3)

    def test_json_row(self):
        row = g2_table(5)[2]
        data = row.to_json()
        assert data["orbit"] == "G2a1"
        assert data["V"] == [3, 3, 1]
        assert data["adjoint_nilpotent"] == [5, 3, 3, 3]
        assert data["routes_agree"] is True

    def test_adjoint_dimension_is_14(self):
        for row in g2_table(5):
            assert row.adjoint_nilpotent.dim == 14
