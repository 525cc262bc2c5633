import pytest
from hypothesis import given, settings

from processing.constructions.contragredient import contragredient_local, reduced_local
from processing.constructions.km_realize import (
    KMRealization,
    certificate_for,
    complete_to_invertible,
    derived_realization,
    realization,
    realize,
    realize_full_km,
    realize_invertible,
    realize_symmetrizable,
    symmetrize,
)
from processing.errors import NotSquare, NotSymmetrizable, SingularMatrix
from processing.exactq import QMatrix, determinant, rank
from processing.graded.analysis import local_hom_check
from processing.graded.expansion import expand
from processing.pentad import cartan_matrix, coroots, local_algebra, structure_summary
from tests.conftest import loop_table, nonzero, square_matrices


class TestInvertible:
    def test_a2(self, a2):
        p = realize_invertible(a2)
        assert (p.r, p.n) == (2, 2)
        assert cartan_matrix(p) == a2
        s = structure_summary(p)
        assert (s.dimZ, s.dimDelta) == (0, 0)

    def test_singular(self, affine_a1):
        with pytest.raises(SingularMatrix):
            realize_invertible(affine_a1)

    def test_not_square(self):
        with pytest.raises(NotSquare):
            realize_invertible(QMatrix([[1, 2]]))

    @pytest.mark.parametrize("name, expected", [
        ("a2", {-2: 1, -1: 2, 0: 2, 1: 2, 2: 1}),
        ("b2", {-3: 1, -2: 1, -1: 2, 0: 2, 1: 2, 2: 1, 3: 1}),
    ])
    def test_finite_type_terminates(self, name, expected, request):
        ga = expand(local_algebra(realize_invertible(request.getfixturevalue(name))), 5)
        assert ga.terminated_pos and ga.terminated_neg
        assert nonzero(ga.dimensions()) == expected
        assert ga.total_dim() == sum(expected.values())


class TestSymmetrize:
    def test_b2(self, b2):
        gamma, s = symmetrize(b2)
        assert gamma == (1, 2)
        assert s == QMatrix([[2, -1], [-1, 1]])

    def test_symmetric_input(self, affine_a1):
        gamma, s = symmetrize(affine_a1)
        assert gamma == (1, 1)
        assert s == affine_a1

    def test_disconnected_components(self):
        gamma, _ = symmetrize(QMatrix([[2, 0], [0, 3]]))
        assert gamma == (1, 1)

    def test_zero_pattern(self):
        with pytest.raises(NotSymmetrizable):
            symmetrize(QMatrix([[2, -1], [0, 2]]))

    def test_inconsistent_cycle(self):
        with pytest.raises(NotSymmetrizable):
            symmetrize(QMatrix([[2, -1, -1], [-2, 2, -1], [-1, -1, 2]]))


class TestSymmetrizable:
    def test_affine(self, affine_a1):
        p = realize_symmetrizable(affine_a1)
        assert (p.r, p.n) == (1, 2)
        assert cartan_matrix(p) == affine_a1
        assert p.is_symmetric
        s = structure_summary(p)
        assert (s.dimZ, s.dimDelta) == (0, 0)

    def test_b2(self, b2):
        p = realize_symmetrizable(b2)
        assert p.gamma == (1, 2)
        assert cartan_matrix(p) == b2
        assert p.is_symmetric
        s = structure_summary(p)
        assert (s.dimZ, s.dimDelta) == (0, 0)

    @pytest.mark.parametrize("name", ["affine_a1", "b2"])
    def test_expansion_matches_reduced(self, name, request):
        c = request.getfixturevalue(name)
        ours = expand(local_algebra(realize_symmetrizable(c)), 8)
        assert ours.dimensions() == expand(reduced_local(c), 8).dimensions()

    def test_expansion_is_reduced_affine(self, affine_a1):
        ga = expand(local_algebra(realize_symmetrizable(affine_a1)), 8)
        assert ga.dimensions() == loop_table(8)


class TestCompletion:
    def test_invertible_is_unchanged(self, a2):
        assert complete_to_invertible(a2) == a2

    def test_affine(self, affine_a1):
        a = complete_to_invertible(affine_a1)
        assert a == QMatrix([[2, -2, 1], [-2, 2, 0], [1, 0, 0]])
        assert determinant(a) == -2

    def test_zero(self):
        assert complete_to_invertible(QMatrix([[0]])) == QMatrix([[0, 1], [1, 0]])

    @given(square_matrices())
    def test_always_invertible(self, c):
        a = complete_to_invertible(c)
        assert determinant(a) != 0
        assert a.submatrix(range(c.rows), range(c.cols)) == c


class TestFullKM:
    def test_affine(self, affine_a1):
        p, cert = realize_full_km(affine_a1)
        assert (p.r, p.n) == (3, 2)
        assert cert.ok
        assert cert.to_dict()["dim0"] == 3
        ga = expand(local_algebra(p), 8)
        assert ga.dimensions() == loop_table(8, degree0=3)

    def test_zero_matrix(self):
        p, cert = realize_full_km(QMatrix([[0]]))
        assert cert.ok
        ga = expand(local_algebra(p), 3)
        assert nonzero(ga.dimensions()) == {-1: 1, 0: 2, 1: 1}

    def test_contragredient_embeds(self, affine_a1, b2):
        for c in (affine_a1, b2):
            p, _ = realize_full_km(c)
            phi_zero = QMatrix.from_columns(coroots(p), p.r)
            maps = (QMatrix.identity(p.n), phi_zero, QMatrix.identity(p.n))
            result = local_hom_check(contragredient_local(c), local_algebra(p), maps)
            assert result.ok
            assert result.kernel_dim() == 0

    def test_derived_matches_contragredient(self, affine_a1):
        dims = derived_realization(affine_a1, 6)
        assert dims == loop_table(6, degree0=2)
        assert dims == expand(contragredient_local(affine_a1), 6).dimensions()

    def test_realization_pairing(self, affine_a1, b2):
        for c in (affine_a1, b2):
            r = realization(c)
            assert r.dim_h == 2 * c.rows - rank(c)
            assert r.pairing_matrix() == c

    @settings(max_examples=50)
    @given(square_matrices(max_n=3, max_abs=3, max_den=4))
    def test_random_matrices(self, c):
        p, cert = realize_full_km(c)
        assert cert.ok
        assert cartan_matrix(p) == c
        full = expand(local_algebra(p), 5)
        contragredient = expand(contragredient_local(c), 5)
        for k in range(-5, 6):
            if k:
                assert full.dim(k) == contragredient.dim(k)
        assert full.dim(0) - contragredient.dim(0) == c.rows - rank(c)

    @settings(max_examples=20)
    @given(square_matrices(max_n=2))
    def test_random_derived_matches_contragredient(self, c):
        assert derived_realization(c, 6) == expand(contragredient_local(c), 6).dimensions()


class TestDispatch:
    @pytest.mark.parametrize("mode", ["symmetrizable", "full_km", "derived"])
    def test_modes_certify(self, mode, affine_a1):
        p, cert = realize(affine_a1, mode)
        assert cert.mode == mode
        assert cert.cartan_round_trip
        assert cert.ok

    def test_symmetrizable_certificate_is_not_km(self, affine_a1):
        _, cert = realize(affine_a1, "symmetrizable")
        assert not cert.alpha_independent
        data = cert.to_dict()
        assert data["rank_D"] == 1 and data["rank_C"] == 1

    def test_bad_round_trip_fails(self, a2, affine_a1):
        cert = certificate_for(affine_a1, realize_invertible(a2), "invertible")
        assert not cert.ok

    def test_unknown_mode(self, a2):
        with pytest.raises(ValueError):
            realize(a2, "loop")

    def test_construction(self, b2):
        construction = KMRealization(b2)
        assert construction.certificate.ok
        table = construction.dimension_table(5)
        assert table["name"] == "full_km(C)"
        assert nonzero(table["degrees"]) == {-3: 1, -2: 1, -1: 2, 0: 2, 1: 2, 2: 1, 3: 1}
        assert construction.pentad.gamma == (1, 1)
