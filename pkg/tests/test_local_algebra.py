import pytest

from processing.errors import DimensionMismatch
from processing.exactq import QMatrix
from processing.graded.local_algebra import LocalLieAlgebra, validate_local


def sl2_local(pair_scale=1, f_weight=-2):
    return LocalLieAlgebra.build(
        ["f"], ["h"], ["e"],
        pos_action=[QMatrix([[2]])],
        neg_action=[QMatrix([[f_weight]])],
        pairing=[[(pair_scale,)]],
        name="sl2",
    )


def test_sl2_triple_is_valid():
    assert validate_local(sl2_local()) == []


def test_rescaled_pairing_is_still_valid():
    # [e, f] = 2h with [h, e] = 2e is sl2 with f rescaled
    assert validate_local(sl2_local(pair_scale=2)) == []


def test_mismatched_weights_break_jacobi():
    failures = validate_local(sl2_local(f_weight=-1))
    assert failures == ["Jacobi (h, e, f)"]


def test_abelian_is_valid():
    assert validate_local(LocalLieAlgebra.abelian(2, 3, 2)) == []


def test_non_antisymmetric_zero_bracket():
    local = LocalLieAlgebra.build(
        [], ["a", "b"], [],
        pos_action=[QMatrix([], cols=0)] * 2,
        neg_action=[QMatrix([], cols=0)] * 2,
        pairing=[],
        zero_bracket=[[(0, 0), (1, 0)], [(1, 0), (0, 0)]],
    )
    assert "antisymmetry [a, b]" in validate_local(local)


def test_non_representation_action():
    # [a, b] = b but the actions on G1 commute
    local = LocalLieAlgebra.build(
        [], ["a", "b"], ["e"],
        pos_action=[QMatrix([[1]]), QMatrix([[1]])],
        neg_action=[QMatrix([], cols=0)] * 2,
        pairing=[[]],
        zero_bracket=[[(0, 0), (0, 1)], [(0, -1), (0, 0)]],
    )
    assert "Jacobi (a, b, G1)" in validate_local(local)


def test_shape_checks():
    with pytest.raises(DimensionMismatch):
        LocalLieAlgebra.build(
            ["f"], ["h"], ["e"],
            pos_action=[QMatrix([[2]])],
            neg_action=[QMatrix([[-2]])],
            pairing=[[(1, 0)]],
        )


def test_bracket_helpers():
    local = sl2_local()
    assert local.act_pos((3,), (1,)) == (6,)
    assert local.act_neg((1,), (2,)) == (-4,)
    assert local.pair((2,), (3,)) == (6,)
    assert local.bracket_00((1,), (1,)) == (0,)
