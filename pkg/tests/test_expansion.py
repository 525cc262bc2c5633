import random
from fractions import Fraction

import pytest

import config
from processing.constructions.contragredient import contragredient_local, reduced_local
from processing.constructions.km_realize import realize_invertible
from processing.errors import DimensionMismatch, ExpansionLimitExceeded, InvalidLocal, OutOfRange
from processing.exactq import QMatrix, is_zero_vector, nullspace, rank, unit_vector, vec_add
from processing.graded.analysis import local_hom_check
from processing.graded.expansion import expand
from processing.graded.local_algebra import LocalLieAlgebra
from processing.pentad import coroots, local_algebra
from tests.conftest import loop_table, nonzero


def sl2():
    return contragredient_local(QMatrix([[2]]))


class TestDimensions:
    def test_sl2(self):
        ga = expand(sl2(), 4)
        assert ga.dimensions() == {-4: 0, -3: 0, -2: 0, -1: 1, 0: 1, 1: 1, 2: 0, 3: 0, 4: 0}
        assert ga.terminated_pos and ga.terminated_neg
        assert ga.total_dim() == 3

    def test_a2(self, a2):
        ga = expand(contragredient_local(a2), 5)
        assert nonzero(ga.dimensions()) == {-2: 1, -1: 2, 0: 2, 1: 2, 2: 1}
        assert ga.total_dim() == 8
        assert ga.pos.terminated_at == 3

    def test_b2(self, b2):
        ga = expand(contragredient_local(b2), 6)
        assert nonzero(ga.dimensions()) == {-3: 1, -2: 1, -1: 2, 0: 2, 1: 2, 2: 1, 3: 1}
        assert ga.total_dim() == 10
        assert ga.pos.terminated_at == 4 and ga.neg.terminated_at == 4

    def test_affine_reduced_matches_loop(self, affine_a1):
        ga = expand(reduced_local(affine_a1), 12)
        assert ga.dimensions() == loop_table(12)
        assert not ga.terminated_pos

    def test_zero_matrix_heisenberg(self):
        ga = expand(contragredient_local(QMatrix([[0]])), 3)
        assert nonzero(ga.dimensions()) == {-1: 1, 0: 1, 1: 1}

    def test_abelian_terminates(self):
        ga = expand(LocalLieAlgebra.abelian(2, 1, 2), 4)
        assert nonzero(ga.dimensions()) == {-1: 2, 0: 1, 1: 2}

    def test_dimension_beyond_cutoff(self, affine_a1):
        ga = expand(reduced_local(affine_a1), 3)
        with pytest.raises(OutOfRange):
            ga.dim(4)
        # a terminated side is zero in every higher degree
        assert expand(sl2(), 2).dim(7) == 0


class TestErrors:
    def test_invalid_local(self):
        bad = LocalLieAlgebra.build(
            ["f"], ["h"], ["e"],
            pos_action=[QMatrix([[2]])],
            neg_action=[QMatrix([[-1]])],
            pairing=[[(1,)]],
        )
        with pytest.raises(InvalidLocal):
            expand(bad, 3)

    def test_cutoff_must_be_positive(self):
        with pytest.raises(OutOfRange):
            expand(sl2(), 0)

    def test_size_limit(self, affine_a1):
        with pytest.raises(ExpansionLimitExceeded):
            expand(reduced_local(affine_a1), 12, max_total_dim=10)

    def test_size_limit_from_config(self, affine_a1, monkeypatch):
        monkeypatch.setattr(config, "PENTAD_MAX_DIM", 5)
        with pytest.raises(ExpansionLimitExceeded):
            expand(reduced_local(affine_a1), 6)


class TestBracket:
    def test_local_pairing(self):
        ga = expand(sl2(), 2)
        assert ga.bracket(1, (1,), -1, (1,)) == (1,)
        assert ga.bracket(-1, (1,), 1, (1,)) == (-1,)
        assert ga.bracket(0, (1,), 1, (1,)) == (2,)

    def test_serre_relation_a2(self, a2):
        ga = expand(contragredient_local(a2), 4)
        e1, e2 = unit_vector(2, 0), unit_vector(2, 1)
        e12 = ga.bracket(1, e1, 1, e2)
        assert not is_zero_vector(e12)
        assert ga.bracket(1, e1, 2, e12) == ()
        assert ga.bracket(1, e1, 1, e1) == (0,)

    def test_out_of_range(self, affine_a1):
        ga = expand(reduced_local(affine_a1), 3)
        x = unit_vector(2, 0)
        with pytest.raises(OutOfRange):
            ga.bracket(3, x, 1, x)

    def test_wrong_coordinates(self):
        ga = expand(sl2(), 2)
        with pytest.raises(DimensionMismatch):
            ga.bracket(1, (1, 0), -1, (1,))


def random_element(rng, dim):
    return tuple(Fraction(rng.randint(-3, 3)) for _ in range(dim))


@pytest.mark.parametrize("name", ["a2", "b2", "affine_reduced", "km_pentad"])
def test_antisymmetry_and_jacobi(name, a2, b2, affine_a1, km_affine_pentad):
    local = {
        "a2": contragredient_local(a2),
        "b2": contragredient_local(b2),
        "affine_reduced": reduced_local(affine_a1),
        "km_pentad": local_algebra(km_affine_pentad),
    }[name]
    cutoff = 5
    ga = expand(local, cutoff)
    rng = random.Random(7)
    degrees = [k for k in range(-cutoff, cutoff + 1) if ga.dim(k)]
    checked = 0
    while checked < 200:
        a, b, c = (rng.choice(degrees) for _ in range(3))
        if any(abs(s) > cutoff for s in (a + b, b + c, a + c, a + b + c)):
            continue
        x, y, z = (random_element(rng, ga.dim(k)) for k in (a, b, c))
        assert ga.bracket(a, x, b, y) == tuple(-v for v in ga.bracket(b, y, a, x))
        total = vec_add(
            vec_add(ga.bracket(a, x, b + c, ga.bracket(b, y, c, z)),
                    ga.bracket(b, y, c + a, ga.bracket(c, z, a, x))),
            ga.bracket(c, z, a + b, ga.bracket(a, x, b, y)),
        )
        assert is_zero_vector(total)
        checked += 1


def test_symmetric_tensors_in_kernel(a2, affine_a1):
    for local in (contragredient_local(a2), reduced_local(affine_a1)):
        ga = expand(local, 2)
        t = ga.pos.transitions[1]
        n = local.dim_pos
        for u in range(n):
            for g in range(n):
                column = [t[row, u * n + g] + t[row, g * n + u] for row in range(t.rows)]
                assert all(v == 0 for v in column)


def test_rank_nullity_audit(b2):
    ga = expand(contragredient_local(b2), 5)
    for side in (ga.pos, ga.neg):
        for k, t in side.transitions.items():
            assert t.cols == side.dims[k] * side.dims[1]
            assert rank(t) == side.dims[k + 1]
            assert len(nullspace(t)) == t.cols - side.dims[k + 1]


def test_expansion_is_deterministic(affine_a1):
    first = expand(reduced_local(affine_a1), 6)
    second = expand(reduced_local(affine_a1), 6)
    assert first.dimensions() == second.dimensions()
    for side in ("pos", "neg"):
        a, b = getattr(first, side), getattr(second, side)
        assert a.sections == b.sections
        assert a.transitions == b.transitions
        assert a.mu == b.mu and a.beta == b.beta and a.rho == b.rho
    assert first.bracket_table(2, 3) == second.bracket_table(2, 3)


class TestMinimality:
    @pytest.mark.parametrize("c", [
        QMatrix([[2, -1], [-1, 2]]),
        QMatrix([[2, -1], [-2, 2]]),
        QMatrix([[2, -3], [-3, 2]]),
        QMatrix([[2, -1, 0], [-1, 2, -1], [0, -2, 2]]),
    ])
    def test_bijective_local_map_gives_equal_dims(self, c):
        p = realize_invertible(c)
        src, dst = contragredient_local(c), local_algebra(p)
        maps = (QMatrix.identity(p.n), QMatrix.from_columns(coroots(p), p.r), QMatrix.identity(p.n))
        assert all(m.is_square() and rank(m) == m.rows for m in maps)
        result = local_hom_check(src, dst, maps)
        assert result.ok
        assert result.kernel_dim() == 0
        assert expand(src, 5).dimensions() == expand(dst, 5).dimensions()
