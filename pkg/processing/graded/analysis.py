"""
Invariants and derived data of expanded graded Lie algebras
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from processing.errors import DimensionMismatch
from processing.exactq import QMatrix, Vector, nullspace, rank, rank_of_vectors, unit_vector
from processing.graded.expansion import GradedAlgebra, GradedSide
from processing.graded.local_algebra import LocalLieAlgebra

log = logging.getLogger(__name__)


def degree0_center(ga: GradedAlgebra) -> List[Vector]:
    """
    Basis of {z in V0 : [z, V1] = 0, [z, V-1] = 0, [z, V0] = 0}

    The center of a minimal transitive graded algebra sits in degree 0 and is
    detected by the local part alone.
    """
    local = ga.local
    n0 = local.dim0
    conditions = []
    for action, size in ((local.pos_action, local.dim_pos), (local.neg_action, local.dim_neg)):
        for j in range(size):
            for i in range(size):
                conditions.append([action[a][i, j] for a in range(n0)])
    for b in range(n0):
        for c in range(n0):
            conditions.append([local.zero_bracket[a][b][c] for a in range(n0)])
    return nullspace(QMatrix(conditions, cols=n0))


def derived_dims(ga: GradedAlgebra) -> Dict[int, int]:
    """
    dim of span{[V_a, V_b] : a + b = k, |a|, |b| <= cutoff} for every |k| <= cutoff
    """
    n = ga.cutoff
    result = {}
    for k in range(-n, n + 1):
        target = ga.dim(k)
        vectors = []
        if target:
            for a in range(max(-n, k - n), min(n, k + n) + 1):
                b = k - a
                if a > b or ga.dim(a) == 0 or ga.dim(b) == 0:
                    continue
                for row in ga.bracket_table(a, b):
                    vectors.extend(v for v in row if any(v))
        result[k] = rank_of_vectors(vectors, target) if vectors else 0
        log.debug("derived degree %d: %d of %d", k, result[k], target)
    return result


def _stacked_beta(side: GradedSide, k: int) -> QMatrix:
    blocks = side.beta[k]
    rows = []
    for block in blocks:
        rows.extend(block.tolist())
    return QMatrix(rows, cols=side.dims[k])


def transitivity_failures(ga: GradedAlgebra) -> List[int]:
    """Degrees |k| >= 2 holding a nonzero vector annihilated by all of the opposite generators"""
    failures = []
    for side in (ga.pos, ga.neg):
        for k in sorted(side.dims):
            if k < 2 or side.dim(k) == 0:
                continue
            if rank(_stacked_beta(side, k)) < side.dims[k]:
                failures.append(side.sign * k)
    return failures


def check_transitive(ga: GradedAlgebra) -> bool:
    return not transitivity_failures(ga)


def action_consistency_failures(ga: GradedAlgebra) -> List[Tuple[int, str]]:
    """
    Check that the induced G0 action respects the bracket with the opposite generators

    For x in V_k, a in G0, g an opposite generator:
    [[a, x], g] = [a, [x, g]] - [x, [a, g]].
    """
    local = ga.local
    failures = []
    for side in (ga.pos, ga.neg):
        opp_action = local.neg_action if side.sign > 0 else local.pos_action
        for k in sorted(side.dims):
            d = side.dim(k)
            if d == 0:
                continue
            for a in range(local.dim0):
                if k == 1:
                    lower = QMatrix([[local.zero_bracket[a][b][c] for b in range(local.dim0)]
                                     for c in range(local.dim0)], cols=local.dim0)
                else:
                    lower = side.rho[k - 1][a]
                for j, beta in enumerate(side.beta[k]):
                    lhs = beta @ side.rho[k][a]
                    rhs = lower @ beta
                    for j2, coeff in enumerate(opp_action[a].column(j)):
                        if coeff:
                            rhs = rhs - side.beta[k][j2].scale(coeff)
                    if lhs != rhs:
                        failures.append((side.sign * k, local.zero_labels[a]))
    return failures


@dataclass
class LocalHomResult:
    """
    Outcome of a local homomorphism check

    Attributes:
        kernel: degree -> basis of the kernel in that degree (set on success)
        mismatch: (x label, y label, expected, actual) of the first failing pair
    """

    kernel: Dict[int, List[Vector]] = field(default_factory=dict)
    mismatch: Optional[Tuple[str, str, Vector, Vector]] = None

    @property
    def ok(self) -> bool:
        return self.mismatch is None

    def kernel_dim(self) -> int:
        return sum(len(v) for v in self.kernel.values())


def local_hom_check(src: LocalLieAlgebra, dst: LocalLieAlgebra,
                    maps: Tuple[QMatrix, QMatrix, QMatrix]) -> LocalHomResult:
    """
    Check that a degree-preserving linear map of local parts preserves brackets

    Args:
        src, dst: local Lie algebras
        maps: (phi_-1, phi_0, phi_1), each of shape dim(dst piece) x dim(src piece)

    Returns:
        LocalHomResult with the kernel on success or the first mismatching pair
    """
    phi_neg, phi_zero, phi_pos = maps
    for phi, rows, cols, piece in (
        (phi_neg, dst.dim_neg, src.dim_neg, "-1"),
        (phi_zero, dst.dim0, src.dim0, "0"),
        (phi_pos, dst.dim_pos, src.dim_pos, "1"),
    ):
        if phi.shape != (rows, cols):
            raise DimensionMismatch(f"Degree {piece} map has shape {phi.shape}, expected {(rows, cols)}")

    zero_basis = [unit_vector(src.dim0, a) for a in range(src.dim0)]
    pos_basis = [unit_vector(src.dim_pos, i) for i in range(src.dim_pos)]
    neg_basis = [unit_vector(src.dim_neg, j) for j in range(src.dim_neg)]

    def mismatch(x_label, y_label, expected, actual):
        log.info("local map breaks [%s, %s]", x_label, y_label)
        return LocalHomResult(mismatch=(x_label, y_label, expected, actual))

    for a, ha in enumerate(zero_basis):
        for b, hb in enumerate(zero_basis):
            expected = phi_zero.apply(src.zero_bracket[a][b])
            actual = dst.bracket_00(phi_zero.apply(ha), phi_zero.apply(hb))
            if expected != actual:
                return mismatch(src.zero_labels[a], src.zero_labels[b], expected, actual)
    for a, ha in enumerate(zero_basis):
        for i, e in enumerate(pos_basis):
            expected = phi_pos.apply(src.pos_action[a].apply(e))
            actual = dst.act_pos(phi_zero.apply(ha), phi_pos.apply(e))
            if expected != actual:
                return mismatch(src.zero_labels[a], src.pos_labels[i], expected, actual)
    for a, ha in enumerate(zero_basis):
        for j, f in enumerate(neg_basis):
            expected = phi_neg.apply(src.neg_action[a].apply(f))
            actual = dst.act_neg(phi_zero.apply(ha), phi_neg.apply(f))
            if expected != actual:
                return mismatch(src.zero_labels[a], src.neg_labels[j], expected, actual)
    for i, e in enumerate(pos_basis):
        for j, f in enumerate(neg_basis):
            expected = phi_zero.apply(src.pairing[i][j])
            actual = dst.pair(phi_pos.apply(e), phi_neg.apply(f))
            if expected != actual:
                return mismatch(src.pos_labels[i], src.neg_labels[j], expected, actual)

    return LocalHomResult(kernel={-1: nullspace(phi_neg), 0: nullspace(phi_zero), 1: nullspace(phi_pos)})


def same_subspace(first: Sequence[Sequence], second: Sequence[Sequence], length: int) -> bool:
    """True when two spanning sets span the same subspace of Q^length"""
    r1 = rank_of_vectors(first, length)
    r2 = rank_of_vectors(second, length)
    return r1 == r2 and rank_of_vectors(list(first) + list(second), length) == r1
