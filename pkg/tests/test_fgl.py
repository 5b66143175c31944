import json

import pytest

from jordanblocks.errors import InvalidLaw, TruncationTooShort
from jordanblocks.fgl import (
    GeneralizedLaw,
    additive,
    iterated_tensor_series,
    law_from_json,
    law_to_json,
    load_law,
    multiplicative,
    random_fgl,
    random_generalized_law,
    scaled_multiplicative,
    validate_fgl,
)
from jordanblocks.fields import GF, QQ
from jordanblocks.series import TruncatedPoly

F5 = GF(5)


class TestBuiltinLaws:
    def test_additive(self):
        law = additive(F5)
        assert law.coeffs == {(1, 0): 1, (0, 1): 1}
        assert validate_fgl(law).ok

    def test_multiplicative(self):
        law = multiplicative(F5)
        assert law.coefficient(1, 1) == 1
        assert validate_fgl(law).ok

    def test_scaled(self):
        law = scaled_multiplicative(F5, 3)
        report = validate_fgl(law, degree=6)
        assert report.unit and report.commutative and report.associative

    def test_scaled_zero_degenerates(self):
        assert scaled_multiplicative(F5, 0).coeffs == additive(F5).coeffs


class TestValidation:
    def test_unit_failure(self):
        # u + v + u^2 fails F(u, 0) = u
        law = GeneralizedLaw(QQ, 2, {(1, 0): QQ(1), (0, 1): QQ(1), (2, 0): QQ(1)})
        assert not validate_fgl(law).unit

    def test_associativity_failure(self):
        # u + v + uv + u^2 v^2: the two triple products first disagree in
        # degree 5 (u^2 v^2 w vs u v^2 w^2)
        f2 = GF(2)
        law = GeneralizedLaw(f2, 4, {(1, 0): 1, (0, 1): 1, (1, 1): 1, (2, 2): 1},
                             exact=True)
        report = validate_fgl(law)
        assert report.unit and report.commutative
        assert not report.associative
        assert validate_fgl(law, degree=4).associative

    def test_rejects_degenerate_linear_part(self):
        with pytest.raises(InvalidLaw):
            GeneralizedLaw(F5, 2, {(1, 0): 1})
        with pytest.raises(InvalidLaw):
            GeneralizedLaw(F5, 2, {(0, 0): 1, (1, 0): 1, (0, 1): 1})


class TestIteratedSeries:
    def test_additive_is_linear(self):
        series = iterated_tensor_series(additive(QQ), 3, (2, 2, 2))
        expected = sum(
            (TruncatedPoly.variable(QQ, (2, 2, 2), i) for i in range(1, 3)),
            TruncatedPoly.variable(QQ, (2, 2, 2), 0))
        assert series == expected

    def test_multiplicative_base_case(self):
        series = iterated_tensor_series(multiplicative(F5), 2, (2, 2))
        assert series == TruncatedPoly(F5, (2, 2), {(1, 0): 1, (0, 1): 1, (1, 1): 1})

    def test_multiplicative_triple(self):
        # prod(1 + Y_i) - 1
        series = iterated_tensor_series(multiplicative(QQ), 3, (2, 2, 2))
        expected = {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1,
                    (1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1, (1, 1, 1): 1}
        assert series == TruncatedPoly(QQ, (2, 2, 2), {k: QQ(v) for k, v in expected.items()})

    def test_symmetric_for_fgl(self):
        from jordanblocks.series import elementary_symmetric

        series = iterated_tensor_series(multiplicative(F5), 3, (3, 3, 3))
        assert series.is_symmetric()
        assert series.homogeneous_part(1) == elementary_symmetric(F5, (3, 3, 3), 1)

    def test_truncation_too_short(self):
        law = random_generalized_law(0, 3, F5)
        with pytest.raises(TruncationTooShort):
            iterated_tensor_series(law, 2, (4, 4))


class TestRandomLaws:
    def test_deterministic(self):
        a = random_generalized_law(7, 8, GF(3))
        b = random_generalized_law(7, 8, GF(3))
        assert a == b

    def test_distinct_seeds(self):
        assert random_generalized_law(1, 8, F5) != random_generalized_law(2, 8, F5)

    def test_unit_linear_flag(self):
        law = random_generalized_law(3, 8, F5, unit_linear=True)
        assert law.xi1 == 1 and law.xi2 == 1

    def test_nonzero_linear(self):
        for seed in range(10):
            law = random_generalized_law(seed, 6, GF(3))
            assert law.xi1 != 0 and law.xi2 != 0

    @pytest.mark.parametrize("p", [2, 3, 5, 0])
    def test_transported_laws_are_fgls(self, p):
        from jordanblocks.fields import Field

        law = random_fgl(4, 7, Field(p))
        report = validate_fgl(law)
        assert report.ok, report


class TestLawFiles:
    def test_round_trip(self, tmp_path):
        law = scaled_multiplicative(GF(7), 3)
        path = tmp_path / "law.json"
        path.write_text(json.dumps(law_to_json(law)))
        loaded = load_law(str(path))
        assert loaded.coeffs == law.coeffs
        assert loaded.field == law.field

    def test_linear_part_defaults(self):
        law = law_from_json({"p": 5, "trunc": 3, "coeffs": [{"a": 1, "b": 1, "c": "2"}]})
        assert law.xi1 == 1 and law.xi2 == 1 and law.coefficient(1, 1) == 2

    def test_rational_coefficients(self):
        law = law_from_json({"p": 0, "trunc": 3,
                             "coeffs": [{"a": 1, "b": 1, "c": "1/2"}]})
        assert law.coefficient(1, 1) == QQ("1/2")

    def test_corrupted_file(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(InvalidLaw):
            load_law(str(path))

    def test_malformed_data(self):
        with pytest.raises(InvalidLaw):
            law_from_json({"p": 5, "coeffs": []})
